#include "heegaard/presentation.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace heegaard {

namespace {

// Arcs of the curve in traversal order, starting with the arc leaving the
// lowest vertex id on the curve. Empty for crossing-free (closed-arc) curves.
std::vector<int> traversal(const Diagram& d, int curve_id, const std::map<int, VertexArcs>& va) {
  const Curve& c = d.curve(curve_id);
  int start_vertex = -1;
  for (const auto& [vid, v] : d.vertices) {
    int vc = c.family == Family::Alpha ? v.alpha_curve : v.beta_curve;
    if (vc == curve_id) {
      start_vertex = vid;
      break;  // vertices map is id-ordered
    }
  }
  if (start_vertex < 0) return {};
  std::vector<int> order;
  int arc = va.at(start_vertex).out_arc(c.family);
  do {
    order.push_back(arc);
    const Arc& a = d.arc(arc);
    arc = va.at(a.to).out_arc(c.family);
  } while (arc != order.front());
  return order;
}

std::map<int, int> effective_signs(const Diagram& d, const OrientationChoice& oc) {
  auto rots = vertex_rotations(d);
  std::map<int, int> sign;  // vertex id -> normalized crossing sign
  for (const auto& [vid, rot] : rots) {
    int beta_index = d.curve(d.vertex(vid).beta_curve).index;
    sign[vid] = crossing_sign(rot) * oc.beta_sign.at(beta_index);
  }
  return sign;
}

}  // namespace

OrientationChoice default_orientations(const Diagram& d) {
  auto rots = vertex_rotations(d);
  OrientationChoice oc;
  oc.beta_sign.assign(d.curves_of_family(Family::Beta).size(), 1);
  std::map<int, int> lowest;  // beta family index -> lowest vertex id
  for (const auto& [vid, v] : d.vertices) {
    int idx = d.curve(v.beta_curve).index;
    if (!lowest.count(idx)) lowest[idx] = vid;  // id-ordered iteration
  }
  for (const auto& [idx, vid] : lowest) oc.beta_sign[idx] = crossing_sign(rots.at(vid));
  return oc;
}

Presentation u_beta_presentation(const Diagram& d) {
  return u_beta_presentation(d, default_orientations(d));
}

Presentation u_beta_presentation(const Diagram& d, const OrientationChoice& oc) {
  auto va = vertex_arcs(d);
  auto sign = effective_signs(d, oc);
  Presentation p;
  p.generators = static_cast<int>(d.curves_of_family(Family::Beta).size());
  for (int cid : d.curves_of_family(Family::Alpha)) {
    Word w;
    for (int arc : traversal(d, cid, va)) {
      int v = d.arc(arc).from;  // record each crossing when departing from it
      w.push_back({d.curve(d.vertex(v).beta_curve).index, sign.at(v)});
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

long long presentation_length(const Presentation& p) {
  long long total = 0;
  for (const Word& w : p.relators)
    total += std::max<long long>(0, static_cast<long long>(w.size()) - 2);
  return total;
}

IntMat intersection_matrix(const Diagram& d) {
  return intersection_matrix(d, default_orientations(d));
}

IntMat intersection_matrix(const Diagram& d, const OrientationChoice& oc) {
  auto sign = effective_signs(d, oc);
  int nb = static_cast<int>(d.curves_of_family(Family::Beta).size());
  int na = static_cast<int>(d.curves_of_family(Family::Alpha).size());
  IntMat a(nb, na);
  for (const auto& [vid, v] : d.vertices) {
    int i = d.curve(v.beta_curve).index;
    int j = d.curve(v.alpha_curve).index;
    a.at(i, j) += sign.at(vid);
  }
  return a;
}

HomologySummary first_homology(const Diagram& d) {
  SmithForm s = smith_normal_form(intersection_matrix(d));
  return {s.torsion(), d.genus - s.rank};
}

const char* short_curve_kind_name(ShortCurveKind k) {
  switch (k) {
    case ShortCurveKind::Disjoint: return "disjoint";
    case ShortCurveKind::SingleCrossing: return "single-crossing";
    case ShortCurveKind::DoubleSame: return "double-same-curve";
    case ShortCurveKind::DoubleSplit: return "double-split";
  }
  return "?";
}

std::vector<ShortCurve> short_curve_report(const Diagram& d) {
  std::map<int, std::vector<int>> met;  // curve id -> opposite curve ids, one per crossing
  for (const auto& [cid, c] : d.curves) met[cid];
  for (const auto& [vid, v] : d.vertices) {
    met[v.alpha_curve].push_back(v.beta_curve);
    met[v.beta_curve].push_back(v.alpha_curve);
  }
  std::vector<ShortCurve> report;
  for (auto& [cid, opp] : met) {
    if (opp.size() > 2) continue;
    ShortCurve sc;
    sc.curve = cid;
    sc.family = d.curve(cid).family;
    std::sort(opp.begin(), opp.end());
    sc.opposite = opp;
    if (opp.empty()) sc.kind = ShortCurveKind::Disjoint;
    else if (opp.size() == 1) sc.kind = ShortCurveKind::SingleCrossing;
    else sc.kind = opp[0] == opp[1] ? ShortCurveKind::DoubleSame : ShortCurveKind::DoubleSplit;
    if (sc.kind == ShortCurveKind::DoubleSame) sc.opposite.pop_back();
    report.push_back(std::move(sc));
  }
  return report;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * w[i].sign;
    if (!out.empty()) out += ' ';
    out += 'u' + std::to_string(w[i].generator + 1);
    if (e != 1) out += '^' + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace heegaard
