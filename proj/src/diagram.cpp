#include "heegaard/diagram.hpp"

#include <algorithm>

namespace heegaard {

const char* code_name(Code c) {
  switch (c) {
    case Code::Syntax: return "syntax";
    case Code::BadReference: return "bad-reference";
    case Code::SlotUse: return "slot-use";
    case Code::ArcUseCount: return "arc-use-count";
    case Code::CurveCycle: return "curve-cycle";
    case Code::Corner: return "corner";
    case Code::Euler: return "euler";
    case Code::RegionGenus: return "region-genus";
    case Code::FamilyCount: return "family-count";
    case Code::CutComponent: return "cut-component";
    case Code::MarkedPlacement: return "marked-placement";
    case Code::Disconnected: return "disconnected";
    case Code::BadMove: return "bad-move";
    case Code::Separating: return "separating";
    case Code::BadClass: return "bad-class";
    case Code::DisconnectedCover: return "disconnected-cover";
    case Code::Precondition: return "precondition";
    case Code::Internal: return "internal";
  }
  return "unknown";
}

const char* family_name(Family f) { return f == Family::Alpha ? "alpha" : "beta"; }

namespace {
template <class M>
const typename M::mapped_type& find_or_fail(const M& m, int id, const char* kind) {
  auto it = m.find(id);
  require(it != m.end(), Code::BadReference, std::string(kind) + " " + std::to_string(id) + " does not exist");
  return it->second;
}
template <class M>
int fresh_id(const M& m) {
  return m.empty() ? 0 : m.rbegin()->first + 1;
}
}  // namespace

const Curve& Diagram::curve(int id) const { return find_or_fail(curves, id, "curve"); }
const Vertex& Diagram::vertex(int id) const { return find_or_fail(vertices, id, "vertex"); }
const Arc& Diagram::arc(int id) const { return find_or_fail(arcs, id, "arc"); }
const Region& Diagram::region(int id) const { return find_or_fail(regions, id, "region"); }

int Diagram::curve_of_vertex(int vertex_id, Family f) const {
  const Vertex& v = vertex(vertex_id);
  return f == Family::Alpha ? v.alpha_curve : v.beta_curve;
}

std::vector<int> Diagram::arcs_of_curve(int curve_id) const {
  std::vector<int> out;
  for (const auto& [id, a] : arcs)
    if (a.curve == curve_id) out.push_back(id);
  return out;
}

std::vector<int> Diagram::curves_of_family(Family f) const {
  std::vector<std::pair<int, int>> keyed;  // (index, id)
  for (const auto& [id, c] : curves)
    if (c.family == f) keyed.emplace_back(c.index, id);
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out;
  for (auto& [index, id] : keyed) out.push_back(id);
  return out;
}

int Diagram::fresh_curve_id() const { return fresh_id(curves); }
int Diagram::fresh_vertex_id() const { return fresh_id(vertices); }
int Diagram::fresh_arc_id() const { return fresh_id(arcs); }
int Diagram::fresh_region_id() const { return fresh_id(regions); }
int Diagram::fresh_point_id() const { return fresh_id(points); }

std::map<int, VertexArcs> vertex_arcs(const Diagram& d) {
  std::map<int, VertexArcs> out;
  for (const auto& [vid, v] : d.vertices) {
    (void)v;
    out[vid];
  }
  for (const auto& [aid, a] : d.arcs) {
    if (a.closed) continue;
    const Curve& c = d.curve(a.curve);
    int fi = c.family == Family::Alpha ? 0 : 1;
    auto bind = [&](int vid, int end) {
      auto it = out.find(vid);
      require(it != out.end(), Code::BadReference,
              "arc " + std::to_string(aid) + " references missing vertex " + std::to_string(vid));
      int& slot = it->second.slot[fi][end];
      require(slot == -1, Code::SlotUse,
              "vertex " + std::to_string(vid) + " " + family_name(c.family) +
                  (end == 0 ? " in" : " out") + " slot used by arcs " + std::to_string(slot) +
                  " and " + std::to_string(aid));
      slot = aid;
      int vertex_curve = d.curve_of_vertex(vid, c.family);
      require(vertex_curve == a.curve, Code::SlotUse,
              "arc " + std::to_string(aid) + " of curve " + std::to_string(a.curve) +
                  " attached to vertex " + std::to_string(vid) + " of curve " +
                  std::to_string(vertex_curve));
    };
    bind(a.to, 0);
    bind(a.from, 1);
  }
  for (const auto& [vid, va] : out)
    for (int fi = 0; fi < 2; ++fi)
      for (int end = 0; end < 2; ++end)
        require(va.slot[fi][end] != -1, Code::SlotUse,
                "vertex " + std::to_string(vid) + " has an unused " +
                    (fi == 0 ? "alpha" : "beta") + (end == 0 ? " in" : " out") + " slot");
  return out;
}

namespace {

// Ray followed when departing along s from its tail vertex.
int depart_germ(const Diagram& d, SignedArc s) {
  Family f = d.curve(d.arc(s.arc).curve).family;
  bool along = s.positive;
  if (f == Family::Alpha) return along ? AlphaOut : AlphaIn;
  return along ? BetaOut : BetaIn;
}
// Ray pointing back along s at its head vertex.
int arrive_germ(const Diagram& d, SignedArc s) {
  Family f = d.curve(d.arc(s.arc).curve).family;
  bool along = s.positive;
  if (f == Family::Alpha) return along ? AlphaIn : AlphaOut;
  return along ? BetaIn : BetaOut;
}

}  // namespace

std::map<int, Rotation> vertex_rotations(const Diagram& d) {
  std::map<int, Rotation> rot;
  for (const auto& [vid, v] : d.vertices) {
    (void)v;
    rot[vid];
  }
  for (const auto& [rid, r] : d.regions) {
    for (const Cycle& cyc : r.cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        SignedArc cur = cyc[i];
        SignedArc nxt = cyc[(i + 1) % cyc.size()];
        const Arc& a = d.arc(cur.arc);
        if (a.closed) {
          require(cyc.size() == 1, Code::Corner,
                  "closed arc " + std::to_string(cur.arc) + " inside a multi-arc cycle of region " +
                      std::to_string(rid));
          continue;
        }
        int v_head = cur.positive ? a.to : a.from;
        const Arc& b = d.arc(nxt.arc);
        require(!b.closed, Code::Corner,
                "closed arc " + std::to_string(nxt.arc) + " inside a multi-arc cycle of region " +
                    std::to_string(rid));
        int v_tail = nxt.positive ? b.from : b.to;
        require(v_head == v_tail, Code::Corner,
                "boundary of region " + std::to_string(rid) + " jumps from vertex " +
                    std::to_string(v_head) + " to vertex " + std::to_string(v_tail));
        int g_from = depart_germ(d, nxt);
        int g_to = arrive_germ(d, cur);
        Rotation& rv = rot.at(v_head);
        require(rv.succ[g_from] == -1, Code::Corner,
                "vertex " + std::to_string(v_head) + " has two corners on the same ray pair");
        rv.succ[g_from] = g_to;
        rv.corner_region[g_from] = rid;
      }
    }
  }
  for (auto& [vid, rv] : rot) {
    for (int g = 0; g < 4; ++g)
      require(rv.succ[g] != -1, Code::Corner,
              "vertex " + std::to_string(vid) + " is missing a corner");
    // The four corners must chain into one alternating 4-cycle.
    int g = AlphaOut;
    for (int step = 0; step < 4; ++step) {
      int n = rv.succ[g];
      bool alt = (g == AlphaIn || g == AlphaOut) != (n == AlphaIn || n == AlphaOut);
      require(alt, Code::Corner,
              "vertex " + std::to_string(vid) + " rotation pairs rays of one family");
      g = n;
    }
    require(g == AlphaOut, Code::Corner,
            "vertex " + std::to_string(vid) + " corners do not close a single rotation");
  }
  return rot;
}

int crossing_sign(const Rotation& rot) { return rot.succ[AlphaOut] == BetaOut ? 1 : -1; }

const OccurrenceRef& OccurrenceIndex::find(SignedArc s) const {
  const auto& m = s.positive ? of_positive : of_negative;
  auto it = m.find(s.arc);
  require(it != m.end(), Code::ArcUseCount,
          std::string(s.positive ? "+" : "-") + std::to_string(s.arc) +
              " does not occur in any region boundary");
  return it->second;
}

OccurrenceIndex occurrence_index(const Diagram& d) {
  OccurrenceIndex idx;
  for (const auto& [rid, r] : d.regions)
    for (int ci = 0; ci < static_cast<int>(r.cycles.size()); ++ci) {
      const Cycle& cyc = r.cycles[ci];
      for (int pi = 0; pi < static_cast<int>(cyc.size()); ++pi) {
        SignedArc s = cyc[pi];
        auto& m = s.positive ? idx.of_positive : idx.of_negative;
        auto [it, inserted] = m.emplace(s.arc, OccurrenceRef{rid, ci, pi});
        require(inserted, Code::ArcUseCount,
                std::string(s.positive ? "+" : "-") + std::to_string(s.arc) +
                    " occurs in more than one region boundary");
      }
    }
  return idx;
}

IntersectionStats intersection_stats(const Diagram& d) {
  IntersectionStats st;
  st.total = static_cast<int>(d.vertices.size());
  for (const auto& [cid, c] : d.curves) {
    (void)c;
    st.per_curve[cid] = 0;
  }
  for (const auto& [vid, v] : d.vertices) {
    (void)vid;
    st.per_curve.at(v.alpha_curve) += 1;
    st.per_curve.at(v.beta_curve) += 1;
  }
  for (Family f : {Family::Alpha, Family::Beta}) {
    for (int cid : d.curves_of_family(f)) {
      int n = st.per_curve.at(cid);
      auto& counts = f == Family::Alpha ? st.alpha_counts : st.beta_counts;
      counts.push_back(n);
      if (n == 0) (f == Family::Alpha ? st.zero_alpha : st.zero_beta) += 1;
    }
  }
  st.min_alpha = 0;
  if (!st.alpha_counts.empty()) st.min_alpha = *std::min_element(st.alpha_counts.begin(), st.alpha_counts.end());
  return st;
}

}  // namespace heegaard
