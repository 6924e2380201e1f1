#include "heegaard/covers.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "heegaard/moves.hpp"
#include "heegaard/presentation.hpp"

namespace heegaard {

std::vector<CocycleClass> cohomology_basis(const Diagram& d) {
  require_valid(d);
  IntMat a = intersection_matrix(d);
  std::vector<CocycleClass> out;
  for (std::vector<Int>& v : kernel_basis(a.transposed())) {
    for (const Int& w : v)
      if (w != 0) {
        if (w < 0)
          for (Int& x : v) x = -x;
        break;
      }
    out.push_back({std::move(v)});
  }
  return out;
}

namespace {

int wrap(const Int& v, int m) {
  Int r = v % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

// End slot of a cover arc: tail (0) or head (1).
long long slot(int cover_arc, int end) { return 2LL * cover_arc + end; }

}  // namespace

CoverResult cyclic_cover(const Diagram& d, const CocycleClass& c, int m) {
  require_valid(d);
  require(d.num_points() >= 1, Code::Precondition, "cover needs a pointed diagram");
  require(m >= 2, Code::Precondition, "cover needs at least two sheets");
  IntMat a = intersection_matrix(d);
  require(static_cast<int>(c.weights.size()) == a.rows(), Code::BadClass,
          "class needs one weight per beta-curve");
  for (int j = 0; j < a.cols(); ++j) {
    Int s = 0;
    for (int i = 0; i < a.rows(); ++i) s += c.weights[i] * a.at(i, j);
    require(s == 0, Code::BadClass, "class does not annihilate every relator");
  }

  // Sheet shift across each arc, from its right (-) side to its left (+) side.
  OrientationChoice oc = default_orientations(d);
  std::map<int, Int> shift;
  for (const auto& [aid, arc] : d.arcs) {
    const Curve& cv = d.curve(arc.curve);
    shift[aid] =
        cv.family == Family::Beta ? Int(oc.beta_sign[cv.index]) * c.weights[cv.index] : Int(0);
  }

  // The cover is connected exactly when the holonomy discrepancies of the
  // region adjacency graph generate all of Z/m.
  {
    OccurrenceIndex idx = occurrence_index(d);
    std::map<int, std::vector<std::pair<int, Int>>> adj;
    for (const auto& [aid, arc] : d.arcs) {
      (void)arc;
      int rp = idx.region_of(pos(aid)), rn = idx.region_of(neg(aid));
      adj[rn].push_back({rp, shift.at(aid)});
      adj[rp].push_back({rn, -shift.at(aid)});
    }
    std::map<int, Int> phi;
    int root = d.regions.begin()->first;
    phi[root] = 0;
    std::deque<int> queue{root};
    Int sub = m;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const auto& [nb, delta] : adj[x]) {
        if (!phi.count(nb)) {
          phi[nb] = phi.at(x) + delta;
          queue.push_back(nb);
        } else {
          sub = gcd(sub, abs(phi.at(x) + delta - phi.at(nb)));
        }
      }
    }
    require(phi.size() == d.regions.size(), Code::Internal, "region adjacency graph disconnected");
    if (sub != 1)
      fail(Code::DisconnectedCover, "holonomy generates only the subgroup " + sub.str() + "Z/" +
                                        std::to_string(m) + "Z; the cover splits into " +
                                        sub.str() + " pieces");
  }

  Diagram cov;
  cov.genus = m * d.genus - m + 1;
  for (const auto& [cid, cv] : d.curves)
    for (int t = 0; t < m; ++t)
      cov.curves[cid * m + t] = {cid * m + t, cv.family, cv.index * m + t};
  for (const auto& [rid, r] : d.regions)
    for (int t = 0; t < m; ++t) {
      Region rc;
      rc.id = rid * m + t;
      rc.genus = r.genus;
      for (const Cycle& cyc : r.cycles) {
        Cycle mapped;
        for (SignedArc s : cyc) {
          int at = s.positive ? wrap(Int(t) - shift.at(s.arc), m) : t;
          mapped.push_back({s.arc * m + at, s.positive});
        }
        rc.cycles.push_back(std::move(mapped));
      }
      cov.regions[rc.id] = std::move(rc);
    }
  for (const auto& [pid, p] : d.points)
    for (int t = 0; t < m; ++t) cov.points[pid * m + t] = {pid * m + t, p.region * m + t};

  // Cover crossings: arc-end germs over the same corner glue together; the
  // classes of that relation are the lifted vertices.
  std::map<long long, long long> parent;
  std::function<long long(long long)> find = [&](long long x) {
    while (parent.at(x) != x) x = parent.at(x) = parent.at(parent.at(x));
    return x;
  };
  for (const auto& [aid, arc] : d.arcs) {
    if (arc.closed) continue;
    for (int t = 0; t < m; ++t) {
      parent[slot(aid * m + t, 0)] = slot(aid * m + t, 0);
      parent[slot(aid * m + t, 1)] = slot(aid * m + t, 1);
    }
  }
  for (const auto& [rid, r] : cov.regions) {
    (void)rid;
    for (const Cycle& cyc : r.cycles) {
      int n = static_cast<int>(cyc.size());
      if (n == 1 && d.arc(cyc[0].arc / m).closed) continue;
      for (int k = 0; k < n; ++k) {
        SignedArc s = cyc[k], nx = cyc[(k + 1) % n];
        long long endSlot = slot(s.arc, s.positive ? 1 : 0);
        long long startSlot = slot(nx.arc, nx.positive ? 0 : 1);
        parent[find(endSlot)] = find(startSlot);
      }
    }
  }
  std::map<long long, std::vector<long long>> members;
  for (const auto& [key, p] : parent) {
    (void)p;
    members[find(key)].push_back(key);
  }
  require(members.size() == d.vertices.size() * static_cast<size_t>(m), Code::Internal,
          "cover corner gluing produced the wrong crossing count");

  std::map<int, VertexArcs> va = vertex_arcs(d);
  for (const auto& [rt, slots] : members) {
    (void)rt;
    require(slots.size() == 4, Code::Internal, "cover crossing without four germs");
    int bv = -1;
    std::vector<std::pair<int, int>> got;
    for (long long key : slots) {
      int ca = static_cast<int>(key / 2), e = static_cast<int>(key & 1);
      const Arc& base = d.arc(ca / m);
      int endv = e ? base.to : base.from;
      require(bv == -1 || bv == endv, Code::Internal, "cover crossing mixes base crossings");
      bv = endv;
      got.push_back({ca / m, e});
    }
    std::vector<std::pair<int, int>> expect = {{va.at(bv).in_arc(Family::Alpha), 1},
                                               {va.at(bv).out_arc(Family::Alpha), 0},
                                               {va.at(bv).in_arc(Family::Beta), 1},
                                               {va.at(bv).out_arc(Family::Beta), 0}};
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    require(got == expect, Code::Internal, "cover crossing misses a germ role");
  }

  // Label each class by the sheet of its incoming alpha arc.
  std::map<long long, int> vid_of_root;
  for (const auto& [bv, arcs] : va)
    for (int t = 0; t < m; ++t) {
      long long rt = find(slot(arcs.in_arc(Family::Alpha) * m + t, 1));
      require(!vid_of_root.count(rt), Code::Internal, "two alpha germ copies share a crossing");
      vid_of_root[rt] = bv * m + t;
    }
  for (const auto& [rt, vid] : vid_of_root) {
    (void)rt;
    cov.vertices[vid] = {vid, -1, -1};
  }
  for (const auto& [aid, arc] : d.arcs)
    for (int t = 0; t < m; ++t) {
      int ca = aid * m + t;
      if (arc.closed)
        cov.arcs[ca] = {ca, -1, true, -1, -1};
      else
        cov.arcs[ca] = {ca, -1, false, vid_of_root.at(find(slot(ca, 0))),
                        vid_of_root.at(find(slot(ca, 1)))};
    }

  // Chain arc copies into curve lifts; each base curve closes after one loop
  // on every sheet because the class kills its holonomy.
  std::map<int, int> lifts;
  for (const auto& [cid, cv] : d.curves) {
    std::vector<int> arcs = d.arcs_of_curve(cid);
    int q = static_cast<int>(arcs.size());
    if (q == 1 && d.arc(arcs[0]).closed) {
      for (int t = 0; t < m; ++t) cov.arcs.at(arcs[0] * m + t).curve = cid * m + t;
      lifts[cid] = m;
      continue;
    }
    for (int t = 0; t < m; ++t) {
      int ca = arcs[0] * m + t;
      for (int step = 0; step < q; ++step) {
        Arc& cur = cov.arcs.at(ca);
        require(cur.curve == -1, Code::Internal, "curve lift revisits an arc copy");
        cur.curve = cid * m + t;
        int bv = cur.to / m;
        int next_base = va.at(bv).out_arc(cv.family);
        long long rt = find(slot(ca, 1));
        int next = -1;
        for (long long key : members.at(rt))
          if ((key & 1) == 0 && static_cast<int>(key / 2) / m == next_base)
            next = static_cast<int>(key / 2);
        require(next != -1, Code::Internal, "curve lift lost its forward germ");
        ca = next;
      }
      require(ca == arcs[0] * m + t, Code::Internal, "curve lift fails to close after one loop");
      ++lifts[cid];
    }
  }
  for (const auto& [ca, arc] : cov.arcs) {
    (void)ca;
    require(arc.curve != -1, Code::Internal, "arc copy left without a curve lift");
  }

  for (auto& [vid, v] : cov.vertices) {
    int bv = vid / m, t = vid % m;
    v.alpha_curve = cov.arcs.at(va.at(bv).in_arc(Family::Alpha) * m + t).curve;
    long long rt = find(slot(va.at(bv).in_arc(Family::Alpha) * m + t, 1));
    for (long long key : members.at(rt))
      if ((key & 1) == 1 && static_cast<int>(key / 2) / m == va.at(bv).in_arc(Family::Beta))
        v.beta_curve = cov.arcs.at(static_cast<int>(key / 2)).curve;
    require(v.beta_curve != -1, Code::Internal, "cover crossing lost its beta curve");
  }

  require_valid(cov);

  CoverReport rep;
  rep.sheets = m;
  rep.coverGenus = cov.genus;
  rep.liftedCurveCounts = lifts;
  rep.liftedPointCount = static_cast<int>(cov.points.size());

  // Two-sided admissibility audit: matching verdicts, and the periodic
  // lattices transfer both ways with pushforward after pullback m-fold.
  AdmissibilityVerdict base_verdict = check_weak_admissibility(d);
  AdmissibilityVerdict cover_verdict = check_weak_admissibility(cov);
  require(base_verdict.admissible == cover_verdict.admissible, Code::Internal,
          "cover changed weak admissibility");
  for (const Domain& p : periodic_domain_lattice(d)) {
    Domain up = pullback_domain(p, m);
    require(boundary_decomposition(cov, up).isPeriodic, Code::Internal,
            "pullback left the periodic lattice");
    require(pushforward_domain(up, m) == Int(m) * p, Code::Internal,
            "pushforward of a pullback is not m-fold");
  }
  for (const Domain& p : periodic_domain_lattice(cov))
    require(boundary_decomposition(d, pushforward_domain(p, m)).isPeriodic, Code::Internal,
            "pushforward left the periodic lattice");
  if (!base_verdict.admissible) {
    Domain up = pullback_domain(*base_verdict.witness, m);
    require(boundary_decomposition(cov, up).isPeriodic && !up.is_zero(), Code::Internal,
            "base witness does not transfer up");
    Domain down = pushforward_domain(*cover_verdict.witness, m);
    require(boundary_decomposition(d, down).isPeriodic && !down.is_zero(), Code::Internal,
            "cover witness does not transfer down");
  }
  rep.admissibilityPreserved = true;
  return {std::move(cov), std::move(rep)};
}

Domain pullback_domain(const Domain& dom, int m) {
  Domain out;
  for (const auto& [rid, v] : dom.coeff)
    for (int t = 0; t < m; ++t) out.set(rid * m + t, v);
  return out;
}

Domain pushforward_domain(const Domain& dom, int m) {
  Domain out;
  for (const auto& [rid, v] : dom.coeff) out.set(rid / m, out.at(rid / m) + v);
  return out;
}

Diagram reduce_to_pointed(const Diagram& d) {
  require_valid(d);
  if (d.num_points() <= 1) return d;
  ValidationReport vr = validate(d);
  OccurrenceIndex idx = occurrence_index(d);

  std::vector<int> doomed;
  for (Family f : {Family::Alpha, Family::Beta}) {
    const std::vector<CutComponent>& comps = f == Family::Alpha ? vr.alpha_cut : vr.beta_cut;
    std::map<int, int> comp_of;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
      for (int rid : comps[ci].regions) comp_of[rid] = ci;
    std::vector<int> parent(comps.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int chosen = 0;
    for (const auto& [cid, cv] : d.curves) {
      if (cv.family != f) continue;
      int aid = d.arcs_of_curve(cid).front();
      int u = find(comp_of.at(idx.region_of(pos(aid))));
      int v = find(comp_of.at(idx.region_of(neg(aid))));
      if (u != v) {
        parent[u] = v;
        doomed.push_back(cid);
        ++chosen;
      }
    }
    require(chosen == static_cast<int>(comps.size()) - 1, Code::Internal,
            "cut pieces not joined into a tree by curve discards");
  }

  Diagram out = d;
  for (int cid : doomed) out = apply_move(out, EraseCurve{cid});
  int keep = out.points.begin()->first;
  std::erase_if(out.points, [&](const auto& kv) { return kv.first != keep; });
  for (Family f : {Family::Alpha, Family::Beta}) {
    std::vector<int> ids = out.curves_of_family(f);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) out.curves.at(ids[i]).index = i;
  }
  require_valid(out);
  return out;
}

GeneratorCount enumerate_generators(const Diagram& d, bool materialize) {
  require_valid(d);
  const int n = static_cast<int>(d.curves_of_family(Family::Alpha).size());
  require(n <= 64, Code::Precondition, "generator enumeration supports at most 64 curves");
  std::vector<std::vector<long long>> cnt(n, std::vector<long long>(n, 0));
  std::vector<std::vector<std::vector<int>>> verts(n);
  for (auto& row : verts) row.resize(n);
  for (const auto& [vid, v] : d.vertices) {
    int i = d.curve(v.alpha_curve).index, j = d.curve(v.beta_curve).index;
    ++cnt[i][j];
    if (materialize) verts[i][j].push_back(vid);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    long long sx = std::accumulate(cnt[x].begin(), cnt[x].end(), 0LL);
    long long sy = std::accumulate(cnt[y].begin(), cnt[y].end(), 0LL);
    return sx < sy;
  });
  std::function<Int(int, std::uint64_t)> permanent = [&](int r, std::uint64_t used) -> Int {
    if (r == n) return 1;
    Int total = 0;
    const std::vector<long long>& row = cnt[order[r]];
    for (int j = 0; j < n; ++j)
      if (!(used >> j & 1) && row[j] > 0) total += Int(row[j]) * permanent(r + 1, used | 1ULL << j);
    return total;
  };
  GeneratorCount out;
  out.count = permanent(0, 0);

  if (materialize) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(n, -1);
    std::function<void(int, std::uint64_t)> emit = [&](int i, std::uint64_t used) {
      if (i == n) {
        all.push_back(cur);
        return;
      }
      for (int j = 0; j < n; ++j) {
        if (used >> j & 1) continue;
        for (int vid : verts[i][j]) {
          cur[i] = vid;
          emit(i + 1, used | 1ULL << j);
        }
      }
      cur[i] = -1;
    };
    emit(0, 0);
    require(Int(all.size()) == out.count, Code::Internal,
            "generator list disagrees with the permanent");
    out.generators = std::move(all);
  }
  return out;
}

}  // namespace heegaard
