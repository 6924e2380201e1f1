#include "heegaard/moves.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace heegaard {

namespace {

struct OccPos {
  int region = -1, cycle = -1, pos = -1;
  bool found() const { return region >= 0; }
};

OccPos find_occurrence(const Diagram& d, SignedArc s) {
  for (const auto& [rid, r] : d.regions)
    for (int ci = 0; ci < static_cast<int>(r.cycles.size()); ++ci)
      for (int pi = 0; pi < static_cast<int>(r.cycles[ci].size()); ++pi)
        if (r.cycles[ci][pi] == s) return {rid, ci, pi};
  return {};
}

// Flips the orientation of one arc: endpoints swap and both boundary
// occurrences change sign in place.
void reverse_arc(Diagram& d, int aid) {
  Arc& a = d.arcs.at(aid);
  if (!a.closed) std::swap(a.from, a.to);
  for (auto& [rid, r] : d.regions) {
    (void)rid;
    for (Cycle& cyc : r.cycles)
      for (SignedArc& s : cyc)
        if (s.arc == aid) s.positive = !s.positive;
  }
}

Cycle rotated(const Cycle& c, int start) {
  Cycle out(c.begin() + start, c.end());
  out.insert(out.end(), c.begin(), c.begin() + start);
  return out;
}

bool rewrite_occurrence(Diagram& d, SignedArc needle, const std::vector<SignedArc>& repl) {
  for (auto& [rid, r] : d.regions) {
    (void)rid;
    for (Cycle& cyc : r.cycles)
      for (size_t i = 0; i < cyc.size(); ++i)
        if (cyc[i] == needle) {
          cyc.erase(cyc.begin() + i);
          cyc.insert(cyc.begin() + i, repl.begin(), repl.end());
          return true;
        }
  }
  return false;
}

// Collapses the unique cyclically-adjacent duplicate pair of `tok` into one
// occurrence; used when a closed arc's two provisional pieces are one arc.
bool collapse_pair(Diagram& d, SignedArc tok) {
  for (auto& [rid, r] : d.regions) {
    (void)rid;
    for (Cycle& cyc : r.cycles) {
      int n = static_cast<int>(cyc.size());
      if (n < 2) continue;
      for (int i = 0; i < n; ++i)
        if (cyc[i] == tok && cyc[(i + 1) % n] == tok) {
          cyc.erase(cyc.begin() + i);
          return true;
        }
    }
  }
  return false;
}

}  // namespace

FingerOutcome apply_finger(const Diagram& d0, const FingerMove& m) {
  Diagram d = d0;
  const int la = m.launch.arc, ta = m.target.arc;
  const Curve lc = d.curve(d.arc(la).curve);
  const Curve tc = d.curve(d.arc(ta).curve);
  require(lc.family != tc.family, Code::BadMove, "finger must cross an arc of the other family");

  const bool revL = !m.launch.positive;
  if (revL) reverse_arc(d, la);

  OccPos lp = find_occurrence(d, pos(la));
  require(lp.found(), Code::BadMove, "launch occurrence not on any region boundary");

  // The exact target occurrence, preferring the launch cycle walking forward
  // from the launch, then the launch region's other cycles in order.
  OccPos tp;
  bool same_cycle = false;
  {
    const Region& C = d.regions.at(lp.region);
    const Cycle& X = C.cycles[lp.cycle];
    for (size_t k = 1; k < X.size() && !tp.found(); ++k) {
      int p = static_cast<int>((lp.pos + k) % X.size());
      if (X[p] == m.target) {
        tp = {lp.region, lp.cycle, p};
        same_cycle = true;
      }
    }
    for (int ci = 0; ci < static_cast<int>(C.cycles.size()) && !tp.found(); ++ci) {
      if (ci == lp.cycle) continue;
      for (int pi = 0; pi < static_cast<int>(C.cycles[ci].size()) && !tp.found(); ++pi)
        if (C.cycles[ci][pi] == m.target) tp = {lp.region, ci, pi};
    }
    require(tp.found(), Code::BadMove, "target occurrence does not border the launch region");
  }
  const bool revT = !m.target.positive;
  if (revT) reverse_arc(d, ta);

  const Arc L = d.arc(la), T = d.arc(ta);
  const bool closedL = L.closed, closedT = T.closed;

  const int v1 = d.fresh_vertex_id(), v2 = v1 + 1;
  const int ac = lc.family == Family::Alpha ? lc.id : tc.id;
  const int bc = lc.family == Family::Alpha ? tc.id : lc.id;
  d.vertices[v1] = {v1, ac, bc};
  d.vertices[v2] = {v2, ac, bc};

  int next_id = d.fresh_arc_id();
  int l1, l2, l3, t1, t2, t3;
  if (closedL) {
    l1 = l3 = next_id++;
    l2 = next_id++;
    d.arcs[l1] = {l1, L.curve, false, v2, v1};
    d.arcs[l2] = {l2, L.curve, false, v1, v2};
  } else {
    l1 = next_id++;
    l2 = next_id++;
    l3 = next_id++;
    d.arcs[l1] = {l1, L.curve, false, L.from, v1};
    d.arcs[l2] = {l2, L.curve, false, v1, v2};
    d.arcs[l3] = {l3, L.curve, false, v2, L.to};
  }
  if (closedT) {
    t1 = t3 = next_id++;
    t2 = next_id++;
    d.arcs[t1] = {t1, T.curve, false, v1, v2};
    d.arcs[t2] = {t2, T.curve, false, v2, v1};
  } else {
    t1 = next_id++;
    t2 = next_id++;
    t3 = next_id++;
    d.arcs[t1] = {t1, T.curve, false, T.from, v2};
    d.arcs[t2] = {t2, T.curve, false, v2, v1};
    d.arcs[t3] = {t3, T.curve, false, v1, T.to};
  }

  // Corridor surgery in the launch region.
  int strip_region = -1;
  {
    Region& C = d.regions.at(lp.region);
    if (same_cycle) {
      Cycle X = rotated(C.cycles[lp.cycle], lp.pos);
      int tpos = (tp.pos - lp.pos + static_cast<int>(X.size())) % static_cast<int>(X.size());
      Cycle main{pos(l1), pos(t3)};
      main.insert(main.end(), X.begin() + tpos + 1, X.end());
      Cycle strip{pos(l3)};
      strip.insert(strip.end(), X.begin() + 1, X.begin() + tpos);
      strip.push_back(pos(t1));
      C.cycles[lp.cycle] = std::move(main);
      strip_region = d.fresh_region_id();
      d.regions[strip_region] = {strip_region, 0, {std::move(strip)}};
    } else {
      Cycle X = rotated(C.cycles[lp.cycle], lp.pos);
      Cycle Y = rotated(C.cycles[tp.cycle], tp.pos);
      Cycle merged{pos(l1), pos(t3)};
      merged.insert(merged.end(), Y.begin() + 1, Y.end());
      merged.push_back(pos(t1));
      merged.push_back(pos(l3));
      merged.insert(merged.end(), X.begin() + 1, X.end());
      std::vector<Cycle> rest;
      for (int ci = 0; ci < static_cast<int>(C.cycles.size()); ++ci)
        if (ci != lp.cycle && ci != tp.cycle) rest.push_back(std::move(C.cycles[ci]));
      rest.push_back(std::move(merged));
      C.cycles = std::move(rest);
    }
  }

  require(rewrite_occurrence(d, neg(la), {neg(l3), pos(t2), neg(l1)}), Code::Internal,
          "finger lost the far launch occurrence");
  require(rewrite_occurrence(d, neg(ta), {neg(t3), pos(l2), neg(t1)}), Code::Internal,
          "finger lost the far target occurrence");

  int bigon = d.fresh_region_id();
  d.regions[bigon] = {bigon, 0, {{neg(t2), neg(l2)}}};

  if (closedL) {
    require(collapse_pair(d, pos(l1)) && collapse_pair(d, neg(l1)), Code::Internal,
            "closed launch pieces did not rejoin");
  }
  if (closedT) {
    require(collapse_pair(d, pos(t1)) && collapse_pair(d, neg(t1)), Code::Internal,
            "closed target pieces did not rejoin");
  }

  d.arcs.erase(la);
  d.arcs.erase(ta);

  FingerOutcome out;
  out.v1 = v1;
  out.v2 = v2;
  out.launch = {l1, l2, l3};
  out.target = {t1, t2, t3};
  out.next_launch = {l2, true};
  if (revT) {
    reverse_arc(d, t2);
    reverse_arc(d, t1);
    if (!closedT) {
      reverse_arc(d, t3);
      out.target = {t3, t2, t1};
    }
  }
  if (revL) {
    reverse_arc(d, l2);
    reverse_arc(d, l1);
    if (!closedL) {
      reverse_arc(d, l3);
      out.launch = {l3, l2, l1};
    }
    out.next_launch = {l2, false};
  }
  out.region_main = lp.region;
  out.region_strip = strip_region;
  out.region_bigon = bigon;
  out.diagram = std::move(d);
  return out;
}

namespace {

// X with occurrence at i and Y with occurrence at j, both dropped, spliced
// into one walk. Empty when both cycles were singletons.
Cycle splice(const Cycle& x, int i, const Cycle& y, int j) {
  Cycle out;
  int nx = static_cast<int>(x.size()), ny = static_cast<int>(y.size());
  for (int k = (i + 1) % nx; k != i; k = (k + 1) % nx) out.push_back(x[k]);
  for (int k = (j + 1) % ny; k != j; k = (k + 1) % ny) out.push_back(y[k]);
  return out;
}

void replace_adjacent_pair(Diagram& d, SignedArc first, SignedArc second, SignedArc repl) {
  for (auto& [rid, r] : d.regions) {
    (void)rid;
    for (Cycle& cyc : r.cycles) {
      int n = static_cast<int>(cyc.size());
      for (int i = 0; i < n; ++i)
        if (cyc[i] == first && n >= 2 && cyc[(i + 1) % n] == second) {
          if ((i + 1) % n == 0) {
            cyc.erase(cyc.begin());
            cyc[i - 1] = repl;
          } else {
            cyc[i] = repl;
            cyc.erase(cyc.begin() + i + 1);
          }
          return;
        }
    }
  }
  fail(Code::Internal, "through-running arcs are not adjacent after erasure");
}

// Keeps each family's indices at 0..n-1 after a curve is removed.
void compact_family_indices(Diagram& d, Family f) {
  std::vector<std::pair<int, int>> order;  // (old index, id)
  for (const auto& [cid, c] : d.curves)
    if (c.family == f) order.emplace_back(c.index, cid);
  std::sort(order.begin(), order.end());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) d.curves.at(order[i].second).index = i;
}

Diagram erase_curve(Diagram d, int curve_id) {
  const Curve c = d.curve(curve_id);
  const Family F = c.family;
  std::vector<int> curve_arcs = d.arcs_of_curve(curve_id);
  require(!curve_arcs.empty(), Code::BadMove, "curve has no arcs");
  std::vector<int> curve_verts;
  for (const auto& [vid, v] : d.vertices)
    if ((F == Family::Alpha ? v.alpha_curve : v.beta_curve) == curve_id) curve_verts.push_back(vid);

  // Band surgery along each arc of the erased curve.
  for (int aid : curve_arcs) {
    OccPos op = find_occurrence(d, pos(aid));
    OccPos on = find_occurrence(d, neg(aid));
    require(op.found() && on.found(), Code::Internal, "arc occurrence missing during erase");
    if (op.region == on.region && op.cycle == on.cycle) {
      Region& r = d.regions.at(op.region);
      const Cycle x = r.cycles[op.cycle];
      int n = static_cast<int>(x.size());
      Cycle a, b;
      for (int k = (op.pos + 1) % n; k != on.pos; k = (k + 1) % n) a.push_back(x[k]);
      for (int k = (on.pos + 1) % n; k != op.pos; k = (k + 1) % n) b.push_back(x[k]);
      r.cycles.erase(r.cycles.begin() + op.cycle);
      if (!a.empty()) r.cycles.push_back(std::move(a));
      if (!b.empty()) r.cycles.push_back(std::move(b));
    } else if (op.region == on.region) {
      Region& r = d.regions.at(op.region);
      Cycle s = splice(r.cycles[op.cycle], op.pos, r.cycles[on.cycle], on.pos);
      int hi = std::max(op.cycle, on.cycle), lo = std::min(op.cycle, on.cycle);
      r.cycles.erase(r.cycles.begin() + hi);
      r.cycles.erase(r.cycles.begin() + lo);
      if (!s.empty()) r.cycles.push_back(std::move(s));
      r.genus += 1;
    } else {
      Region rl = d.regions.at(op.region);
      Region rr = d.regions.at(on.region);
      Cycle s = splice(rl.cycles[op.cycle], op.pos, rr.cycles[on.cycle], on.pos);
      Region merged;
      merged.id = std::min(rl.id, rr.id);
      merged.genus = rl.genus + rr.genus;
      for (int ci = 0; ci < static_cast<int>(rl.cycles.size()); ++ci)
        if (ci != op.cycle) merged.cycles.push_back(std::move(rl.cycles[ci]));
      for (int ci = 0; ci < static_cast<int>(rr.cycles.size()); ++ci)
        if (ci != on.cycle) merged.cycles.push_back(std::move(rr.cycles[ci]));
      if (!s.empty()) merged.cycles.push_back(std::move(s));
      d.regions.erase(rl.id);
      d.regions.erase(rr.id);
      for (auto& [pid, p] : d.points) {
        (void)pid;
        if (p.region == rl.id || p.region == rr.id) p.region = merged.id;
      }
      d.regions[merged.id] = std::move(merged);
    }
  }
  for (int aid : curve_arcs) d.arcs.erase(aid);

  // Splice the other family straight through each removed crossing.
  std::sort(curve_verts.begin(), curve_verts.end());
  for (int vid : curve_verts) {
    int p = -1, q = -1;
    for (const auto& [aid, a] : d.arcs) {
      if (a.closed) continue;
      if (a.to == vid) {
        require(p == -1, Code::Internal, "two arcs enter an erased crossing");
        p = aid;
      }
      if (a.from == vid) {
        require(q == -1, Code::Internal, "two arcs leave an erased crossing");
        q = aid;
      }
    }
    require(p != -1 && q != -1, Code::Internal, "erased crossing lost its through-arcs");
    if (p == q) {
      // The through-curve only met the erased curve: it becomes a closed arc.
      OccPos o = find_occurrence(d, pos(p));
      Region& r = d.regions.at(o.region);
      if (r.cycles[o.cycle].size() == 2) {
        // One region touched both sides through this crossing; the two sides
        // now close into separate circles.
        require(r.cycles[o.cycle][(o.pos + 1) % 2] == neg(p), Code::Internal,
                "unexpected cycle around a closing loop arc");
        r.cycles.erase(r.cycles.begin() + o.cycle);
        r.cycles.push_back({pos(p)});
        r.cycles.push_back({neg(p)});
      } else {
        require(r.cycles[o.cycle].size() == 1, Code::Internal,
                "loop arc occurrence not a whole boundary circle");
        OccPos o2 = find_occurrence(d, neg(p));
        require(d.regions.at(o2.region).cycles[o2.cycle].size() == 1, Code::Internal,
                "loop arc occurrence not a whole boundary circle");
      }
      Arc& a = d.arcs.at(p);
      a.closed = true;
      a.from = a.to = -1;
    } else {
      int mid = d.fresh_arc_id();
      const Arc ap = d.arcs.at(p), aq = d.arcs.at(q);
      d.arcs[mid] = {mid, ap.curve, false, ap.from, aq.to};
      replace_adjacent_pair(d, pos(p), pos(q), pos(mid));
      replace_adjacent_pair(d, neg(q), neg(p), neg(mid));
      d.arcs.erase(p);
      d.arcs.erase(q);
    }
    d.vertices.erase(vid);
  }
  d.curves.erase(curve_id);
  compact_family_indices(d, F);
  return d;
}

Diagram surge_free_curve(Diagram d, int curve_id) {
  const Family F = d.curve(curve_id).family;
  std::vector<int> curve_arcs = d.arcs_of_curve(curve_id);
  require(curve_arcs.size() == 1 && d.arc(curve_arcs[0]).closed, Code::BadMove,
          "surgery needs a crossing-free curve");
  int aid = curve_arcs[0];
  OccPos op = find_occurrence(d, pos(aid));
  OccPos on = find_occurrence(d, neg(aid));
  require(op.found() && on.found(), Code::Internal, "closed arc occurrence missing");

  // The curve must not separate the surface: its two sides stay connected
  // through the other cells.
  {
    std::map<int, int> parent;
    for (const auto& [rid, r] : d.regions) {
      (void)r;
      parent[rid] = rid;
    }
    auto find = [&](int x) {
      while (parent.at(x) != x) x = parent.at(x) = parent.at(parent.at(x));
      return x;
    };
    OccurrenceIndex idx = occurrence_index(d);
    for (const auto& [other_aid, a] : d.arcs) {
      (void)a;
      if (other_aid == aid) continue;
      parent[find(idx.region_of(pos(other_aid)))] = find(idx.region_of(neg(other_aid)));
    }
    require(find(op.region) == find(on.region), Code::Separating,
            "curve separates the surface; surgery would disconnect it");
  }

  require(d.regions.at(op.region).cycles[op.cycle].size() == 1 &&
              d.regions.at(on.region).cycles[on.cycle].size() == 1,
          Code::Internal, "closed arc not a whole boundary circle");
  if (op.region == on.region) {
    Region& r = d.regions.at(op.region);
    int hi = std::max(op.cycle, on.cycle), lo = std::min(op.cycle, on.cycle);
    r.cycles.erase(r.cycles.begin() + hi);
    r.cycles.erase(r.cycles.begin() + lo);
  } else {
    Region& rl = d.regions.at(op.region);
    rl.cycles.erase(rl.cycles.begin() + op.cycle);
    Region& rr = d.regions.at(on.region);
    rr.cycles.erase(rr.cycles.begin() + on.cycle);
  }
  d.arcs.erase(aid);
  d.curves.erase(curve_id);
  compact_family_indices(d, F);
  d.genus -= 1;
  return d;
}

Diagram destabilize(Diagram d, int ca, int cb) {
  require(d.curve(ca).family == Family::Alpha && d.curve(cb).family == Family::Beta, Code::BadMove,
          "destabilization takes one alpha and one beta curve");
  int count_a = 0, count_b = 0, shared = 0;
  for (const auto& [vid, v] : d.vertices) {
    (void)vid;
    if (v.alpha_curve == ca) ++count_a;
    if (v.beta_curve == cb) ++count_b;
    if (v.alpha_curve == ca && v.beta_curve == cb) ++shared;
  }
  require(count_a == 1 && count_b == 1 && shared == 1, Code::BadMove,
          "destabilization needs a pair crossing exactly once and nothing else");
  d = erase_curve(std::move(d), cb);
  return surge_free_curve(std::move(d), ca);
}

}  // namespace

Diagram apply_move(const Diagram& d, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> Diagram {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, FingerMove>) return apply_finger(d, mv).diagram;
        if constexpr (std::is_same_v<T, EraseCurve>) return erase_curve(d, mv.curve);
        if constexpr (std::is_same_v<T, SurgeFreeCurve>) return surge_free_curve(d, mv.curve);
        if constexpr (std::is_same_v<T, Destabilize>) return destabilize(d, mv.alpha_curve, mv.beta_curve);
      },
      m);
}

Diagram scramble_diagram(Diagram d, int move_budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int step = 0; step < move_budget; ++step) {
    std::vector<FingerMove> cands;
    for (const auto& [rid, r] : d.regions) {
      (void)rid;
      std::array<std::set<std::pair<int, bool>>, 2> by_family;
      for (const Cycle& cyc : r.cycles)
        for (SignedArc s : cyc)
          by_family[d.curve(d.arc(s.arc).curve).family == Family::Alpha ? 0 : 1].insert(
              {s.arc, s.positive});
      for (const Cycle& cyc : r.cycles)
        for (SignedArc s : cyc) {
          Family f = d.curve(d.arc(s.arc).curve).family;
          for (auto [taid, tpos] : by_family[f == Family::Alpha ? 1 : 0])
            cands.push_back({s, {taid, tpos}});
        }
    }
    if (cands.empty()) break;
    d = apply_finger(d, cands[static_cast<size_t>(rng() % cands.size())]).diagram;
  }
  return canonicalize(std::move(d));
}

Diagram random_diagram(int genus, int points, int move_budget, std::uint64_t seed) {
  require(genus >= 0, Code::Precondition, "genus must be nonnegative");
  require(points >= 1, Code::Precondition, "need at least one marked point");
  return scramble_diagram(block_diagram(std::vector<int>(genus, 1), points - 1), move_budget, seed);
}

}  // namespace heegaard
