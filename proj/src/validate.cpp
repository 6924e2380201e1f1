#include <algorithm>
#include <numeric>

#include "heegaard/diagram.hpp"

namespace heegaard {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  void add(int x) { parent.emplace(x, x); }
  int find(int x) {
    int r = x;
    while (parent.at(r) != r) r = parent.at(r);
    while (parent.at(x) != x) x = std::exchange(parent.at(x), r);
    return r;
  }
  void unite(int a, int b) { parent.at(find(a)) = find(b); }
};

struct Checker {
  const Diagram& d;
  ValidationReport& rep;

  void violation(Code code, const std::string& msg) { rep.violations.push_back({code, msg}); }

  bool references() {
    bool ok = true;
    auto check = [&](bool cond, const std::string& msg) {
      if (!cond) {
        violation(Code::BadReference, msg);
        ok = false;
      }
    };
    for (const auto& [id, v] : d.vertices) {
      check(d.curves.count(v.alpha_curve) && d.curves.count(v.beta_curve),
            "vertex " + std::to_string(id) + " references a missing curve");
      if (!ok) continue;
      check(d.curves.at(v.alpha_curve).family == Family::Alpha &&
                d.curves.at(v.beta_curve).family == Family::Beta,
            "vertex " + std::to_string(id) + " curve families are swapped");
    }
    for (const auto& [id, a] : d.arcs) {
      check(d.curves.count(a.curve), "arc " + std::to_string(id) + " references a missing curve");
      if (!a.closed)
        check(d.vertices.count(a.from) && d.vertices.count(a.to),
              "arc " + std::to_string(id) + " references a missing vertex");
    }
    for (const auto& [id, r] : d.regions) {
      check(r.genus >= 0, "region " + std::to_string(id) + " has negative genus");
      for (const Cycle& cyc : r.cycles) {
        if (cyc.empty()) check(false, "region " + std::to_string(id) + " has an empty cycle");
        for (SignedArc s : cyc)
          check(d.arcs.count(s.arc), "region " + std::to_string(id) + " references a missing arc");
      }
    }
    for (const auto& [id, p] : d.points)
      check(d.regions.count(p.region), "point " + std::to_string(id) + " references a missing region");
    return ok;
  }

  bool curve_cycles() {
    bool ok = true;
    std::map<int, VertexArcs> va;
    try {
      va = vertex_arcs(d);
    } catch (const Error& e) {
      violation(e.code(), e.what());
      return false;
    }
    for (const auto& [cid, c] : d.curves) {
      std::vector<int> arcs = d.arcs_of_curve(cid);
      if (arcs.empty()) {
        violation(Code::CurveCycle, "curve " + std::to_string(cid) + " has no arcs");
        ok = false;
        continue;
      }
      bool has_closed = false, has_segment = false;
      for (int aid : arcs) (d.arc(aid).closed ? has_closed : has_segment) = true;
      if (has_closed) {
        if (has_segment || arcs.size() != 1) {
          violation(Code::CurveCycle,
                    "curve " + std::to_string(cid) + " mixes closed and segment arcs");
          ok = false;
        }
        continue;
      }
      // Follow out-arcs; the walk must visit every arc of the curve once.
      int start = arcs.front();
      int cur = start;
      size_t seen = 0;
      do {
        ++seen;
        cur = va.at(d.arc(cur).to).out_arc(c.family);
        if (seen > arcs.size()) break;
      } while (cur != start);
      if (cur != start || seen != arcs.size()) {
        violation(Code::CurveCycle,
                  "curve " + std::to_string(cid) + " arcs do not close into a single cycle");
        ok = false;
      }
    }
    return ok;
  }

  bool arc_use() {
    try {
      auto idx = occurrence_index(d);
      for (const auto& [aid, a] : d.arcs) {
        (void)a;
        idx.find(pos(aid));
        idx.find(neg(aid));
      }
    } catch (const Error& e) {
      violation(e.code(), e.what());
      return false;
    }
    return true;
  }

  bool corners() {
    try {
      vertex_rotations(d);
    } catch (const Error& e) {
      violation(e.code(), e.what());
      return false;
    }
    return true;
  }

  bool euler() {
    int segments = 0;
    for (const auto& [aid, a] : d.arcs) {
      (void)aid;
      if (!a.closed) ++segments;
    }
    int chi = static_cast<int>(d.vertices.size()) - segments;
    for (const auto& [rid, r] : d.regions) {
      (void)rid;
      chi += 2 - 2 * r.genus - static_cast<int>(r.cycles.size());
    }
    rep.chi = chi;
    if (chi > 2 || (chi % 2) != 0) {
      violation(Code::Euler, "boundary data has Euler characteristic " + std::to_string(chi));
      return false;
    }
    rep.computed_genus = (2 - chi) / 2;
    if (rep.computed_genus != d.genus) {
      violation(Code::Euler, "declared genus " + std::to_string(d.genus) +
                                 " but cell structure has genus " + std::to_string(rep.computed_genus));
      return false;
    }
    return true;
  }

  bool connected() {
    if (d.regions.empty()) {
      violation(Code::Disconnected, "diagram has no regions");
      return false;
    }
    UnionFind uf;
    for (const auto& [rid, r] : d.regions) {
      (void)r;
      uf.add(rid);
    }
    auto idx = occurrence_index(d);
    for (const auto& [aid, a] : d.arcs) {
      (void)a;
      uf.unite(idx.region_of(pos(aid)), idx.region_of(neg(aid)));
    }
    int root = uf.find(d.regions.begin()->first);
    for (const auto& [rid, r] : d.regions) {
      (void)r;
      if (uf.find(rid) != root) {
        violation(Code::Disconnected, "surface is disconnected");
        return false;
      }
    }
    return true;
  }

  bool family_counts() {
    bool ok = true;
    int l = d.num_points();
    int expected = l == 0 ? d.genus : d.genus + l - 1;
    for (Family f : {Family::Alpha, Family::Beta}) {
      std::vector<int> ids = d.curves_of_family(f);
      if (static_cast<int>(ids.size()) != expected) {
        violation(Code::FamilyCount, std::string(family_name(f)) + " family has " +
                                         std::to_string(ids.size()) + " curves, expected " +
                                         std::to_string(expected));
        ok = false;
      }
      std::vector<int> indices;
      for (int cid : ids) indices.push_back(d.curve(cid).index);
      std::vector<int> want(indices.size());
      std::iota(want.begin(), want.end(), 0);
      if (indices != want) {
        violation(Code::FamilyCount,
                  std::string(family_name(f)) + " curve indices are not 0..n-1");
        ok = false;
      }
    }
    return ok;
  }

  // Cuts the surface along `cut` and reports the resulting components.
  bool cut_analysis(Family cut, std::vector<CutComponent>& out) {
    Family glue = other(cut);
    auto idx = occurrence_index(d);
    UnionFind uf;
    for (const auto& [rid, r] : d.regions) {
      (void)r;
      uf.add(rid);
    }
    for (const auto& [aid, a] : d.arcs)
      if (d.curve(a.curve).family == glue) uf.unite(idx.region_of(pos(aid)), idx.region_of(neg(aid)));

    std::map<int, CutComponent> comp;
    std::map<int, int> chi;  // root -> Euler characteristic of the cut piece
    for (const auto& [rid, r] : d.regions) {
      int root = uf.find(rid);
      comp[root].regions.push_back(rid);
      chi[root] += 2 - 2 * r.genus - static_cast<int>(r.cycles.size());
    }
    for (const auto& [aid, a] : d.arcs)
      if (!a.closed && d.curve(a.curve).family == glue) chi[uf.find(idx.region_of(pos(aid)))] -= 1;

    for (int cid : d.curves_of_family(cut)) {
      for (bool side : {true, false}) {
        int side_root = -1;
        for (int aid : d.arcs_of_curve(cid)) {
          int r = uf.find(idx.region_of(SignedArc{aid, side}));
          require(side_root == -1 || side_root == r, Code::Internal,
                  "one side of a cut curve meets two components");
          side_root = r;
        }
        comp.at(side_root).boundary_circles += 1;
      }
    }
    for (const auto& [pid, p] : d.points) comp.at(uf.find(p.region)).points.push_back(pid);

    bool ok = true;
    int l = d.num_points();
    for (auto& [root, c] : comp) {
      int two_minus = 2 - c.boundary_circles - chi.at(root);
      if (two_minus < 0 || two_minus % 2 != 0) {
        violation(Code::CutComponent, std::string(family_name(cut)) +
                                          "-cut component has impossible Euler data");
        return false;
      }
      c.genus = two_minus / 2;
      if (c.genus != 0) {
        violation(Code::CutComponent, std::string(family_name(cut)) + "-cut component through region " +
                                          std::to_string(c.regions.front()) + " has genus " +
                                          std::to_string(c.genus) + ", expected planar");
        ok = false;
      }
      if (l > 0 && c.points.size() != 1) {
        violation(Code::MarkedPlacement,
                  std::string(family_name(cut)) + "-cut component through region " +
                      std::to_string(c.regions.front()) + " holds " + std::to_string(c.points.size()) +
                      " marked points, expected 1");
        ok = false;
      }
      out.push_back(c);
    }
    int expected = std::max(l, 1);
    if (static_cast<int>(comp.size()) != expected) {
      violation(Code::CutComponent, std::string(family_name(cut)) + "-cut yields " +
                                        std::to_string(comp.size()) + " components, expected " +
                                        std::to_string(expected));
      ok = false;
    }
    return ok;
  }
};

}  // namespace

ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  Checker ck{d, rep};
  if (!ck.references()) return rep;
  bool structural = ck.curve_cycles();
  structural &= ck.arc_use();
  if (!structural) return rep;
  structural = ck.corners();
  structural &= ck.euler();
  structural &= ck.connected();
  if (!structural) return rep;
  bool ok = ck.family_counts();
  ok &= ck.cut_analysis(Family::Alpha, rep.alpha_cut);
  ok &= ck.cut_analysis(Family::Beta, rep.beta_cut);
  rep.ok = ok && rep.violations.empty();
  return rep;
}

void require_valid(const Diagram& d) {
  ValidationReport rep = validate(d);
  if (!rep.ok) {
    require(!rep.violations.empty(), Code::Internal, "invalid diagram without violations");
    throw Error(rep.violations.front().code, rep.violations.front().message);
  }
}

}  // namespace heegaard
