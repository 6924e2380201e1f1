#include <fstream>
#include <sstream>

#include "heegaard/diagram.hpp"

namespace heegaard {

namespace {

struct LineTokens {
  int line_no;
  std::vector<std::string> toks;
};

[[noreturn]] void syntax(int line_no, const std::string& what) {
  fail(Code::Syntax, "line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& tok, int line_no) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    syntax(line_no, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size()) syntax(line_no, "expected integer, got '" + tok + "'");
  return v;
}

// Splits "key=value", checking the key.
std::string expect_kv(const std::string& tok, const std::string& key, int line_no) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    syntax(line_no, "expected " + key + "=..., got '" + tok + "'");
  return tok.substr(eq + 1);
}

// "vid:slot" -> (vid, slot is "in").
std::pair<int, bool> parse_endpoint(const std::string& val, int line_no) {
  auto colon = val.find(':');
  if (colon == std::string::npos) syntax(line_no, "expected <vertex>:<in|out>, got '" + val + "'");
  int vid = parse_int(val.substr(0, colon), line_no);
  std::string slot = val.substr(colon + 1);
  if (slot != "in" && slot != "out") syntax(line_no, "arc endpoint slot must be in or out, got '" + slot + "'");
  return {vid, slot == "in"};
}

SignedArc parse_signed_arc(const std::string& tok, int line_no) {
  if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
    syntax(line_no, "expected signed arc like +3 or -3, got '" + tok + "'");
  return {parse_int(tok.substr(1), line_no), tok[0] == '+'};
}

}  // namespace

Diagram parse_diagram(std::istream& in) {
  std::vector<LineTokens> lines;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    LineTokens lt{line_no, {}};
    std::string tok;
    while (ls >> tok) lt.toks.push_back(tok);
    if (!lt.toks.empty()) lines.push_back(std::move(lt));
  }
  require(!lines.empty(), Code::Syntax, "empty input");
  if (lines[0].toks != std::vector<std::string>{"heegaard-diagram", "v1"})
    syntax(lines[0].line_no, "missing 'heegaard-diagram v1' header");

  Diagram d;
  bool saw_genus = false;
  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& [ln, t] = lines[li];
    const std::string& kind = t[0];
    auto arity = [&](size_t n) {
      if (t.size() != n) syntax(ln, kind + " line expects " + std::to_string(n - 1) + " fields");
    };
    if (kind == "genus") {
      arity(2);
      if (saw_genus) syntax(ln, "duplicate genus line");
      d.genus = parse_int(t[1], ln);
      saw_genus = true;
    } else if (kind == "curve") {
      arity(4);
      Curve c;
      c.id = parse_int(t[1], ln);
      std::string fam = expect_kv(t[2], "family", ln);
      if (fam != "alpha" && fam != "beta") syntax(ln, "family must be alpha or beta");
      c.family = fam == "alpha" ? Family::Alpha : Family::Beta;
      c.index = parse_int(expect_kv(t[3], "index", ln), ln);
      if (!d.curves.emplace(c.id, c).second) syntax(ln, "duplicate curve id " + std::to_string(c.id));
    } else if (kind == "vertex") {
      arity(4);
      Vertex v;
      v.id = parse_int(t[1], ln);
      v.alpha_curve = parse_int(expect_kv(t[2], "alpha", ln), ln);
      v.beta_curve = parse_int(expect_kv(t[3], "beta", ln), ln);
      if (!d.vertices.emplace(v.id, v).second) syntax(ln, "duplicate vertex id " + std::to_string(v.id));
    } else if (kind == "arc") {
      if (t.size() != 4 && t.size() != 5) syntax(ln, "arc line expects curve= and endpoints or closed");
      Arc a;
      a.id = parse_int(t[1], ln);
      a.curve = parse_int(expect_kv(t[2], "curve", ln), ln);
      if (t.size() == 4) {
        if (t[3] != "closed") syntax(ln, "expected 'closed', got '" + t[3] + "'");
        a.closed = true;
      } else {
        auto [fv, fin] = parse_endpoint(expect_kv(t[3], "from", ln), ln);
        auto [tv, tin] = parse_endpoint(expect_kv(t[4], "to", ln), ln);
        if (fin) fail(Code::SlotUse, "line " + std::to_string(ln) + ": arc departs through an in slot");
        if (!tin) fail(Code::SlotUse, "line " + std::to_string(ln) + ": arc arrives through an out slot");
        a.from = fv;
        a.to = tv;
      }
      if (!d.arcs.emplace(a.id, a).second) syntax(ln, "duplicate arc id " + std::to_string(a.id));
    } else if (kind == "region") {
      if (t.size() < 4) syntax(ln, "region line expects genus= and boundary=");
      Region r;
      r.id = parse_int(t[1], ln);
      r.genus = parse_int(expect_kv(t[2], "genus", ln), ln);
      if (t[3] != "boundary=" && expect_kv(t[3], "boundary", ln) != "")
        syntax(ln, "expected boundary= followed by ( ... ) groups");
      size_t i = 4;
      while (i < t.size()) {
        if (t[i] != "(") syntax(ln, "expected '(', got '" + t[i] + "'");
        Cycle cyc;
        ++i;
        while (i < t.size() && t[i] != ")") cyc.push_back(parse_signed_arc(t[i++], ln));
        if (i == t.size()) syntax(ln, "unclosed boundary cycle");
        ++i;
        if (cyc.empty()) syntax(ln, "empty boundary cycle");
        r.cycles.push_back(std::move(cyc));
      }
      if (!d.regions.emplace(r.id, r).second) syntax(ln, "duplicate region id " + std::to_string(r.id));
    } else if (kind == "point") {
      arity(3);
      MarkedPoint p;
      p.id = parse_int(t[1], ln);
      p.region = parse_int(expect_kv(t[2], "region", ln), ln);
      if (!d.points.emplace(p.id, p).second) syntax(ln, "duplicate point id " + std::to_string(p.id));
    } else {
      syntax(ln, "unknown line kind '" + kind + "'");
    }
  }
  if (!saw_genus) syntax(lines[0].line_no, "missing genus line");

  // Reference checks here give line-free but precise messages; validate()
  // repeats them for programmatically built diagrams.
  for (const auto& [id, v] : d.vertices) {
    d.curve(v.alpha_curve);
    d.curve(v.beta_curve);
    (void)id;
  }
  for (const auto& [id, a] : d.arcs) {
    d.curve(a.curve);
    if (!a.closed) {
      d.vertex(a.from);
      d.vertex(a.to);
    }
    (void)id;
  }
  for (const auto& [id, r] : d.regions) {
    for (const Cycle& cyc : r.cycles)
      for (SignedArc s : cyc) d.arc(s.arc);
    (void)id;
  }
  for (const auto& [id, p] : d.points) {
    d.region(p.region);
    (void)id;
  }
  return d;
}

Diagram parse_diagram_text(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Code::Syntax, "cannot open " + path);
  return parse_diagram(in);
}

}  // namespace heegaard
