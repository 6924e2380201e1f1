#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "heegaard/matrix.hpp"

namespace support {

namespace hg = heegaard;

#ifdef FIXTURE_DIR
inline std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}
#endif

// Engine-output modulo keeps corpora identical across standard libraries.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

template <class F>
inline std::optional<hg::Code> error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const hg::Error& e) {
    return e.code();
  }
}

inline hg::IntMat multiplicity_matrix(const hg::Diagram& d) {
  auto alphas = d.curves_of_family(hg::Family::Alpha);
  auto betas = d.curves_of_family(hg::Family::Beta);
  std::map<int, int> ai, bi;
  for (size_t i = 0; i < alphas.size(); ++i) ai[alphas[i]] = static_cast<int>(i);
  for (size_t j = 0; j < betas.size(); ++j) bi[betas[j]] = static_cast<int>(j);
  hg::IntMat m(static_cast<int>(alphas.size()), static_cast<int>(betas.size()));
  for (const auto& [vid, v] : d.vertices) {
    (void)vid;
    m.at(ai.at(v.alpha_curve), bi.at(v.beta_curve)) += 1;
  }
  return m;
}

// Ryser's inclusion-exclusion permanent; square input.
inline hg::Int ryser_permanent(const hg::IntMat& a) {
  int n = a.rows();
  if (n == 0) return 1;
  hg::Int total = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    hg::Int prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) {
      hg::Int rowsum = 0;
      for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) rowsum += a.at(i, j);
      prod *= rowsum;
    }
    if ((n - std::popcount(mask)) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

// Exhaustive admissibility witness search over domains with region coefficients
// in {0..maxCoeff}: a domain is periodic exactly when, along every curve, the
// coefficient drop across its arcs is constant. Returns true when no nonzero
// witness avoids the marked regions.
inline bool oracle_admissible_box(const hg::Diagram& d, int maxCoeff = 3) {
  auto occ = hg::occurrence_index(d);
  std::vector<int> rids;
  for (const auto& [rid, r] : d.regions) {
    (void)r;
    rids.push_back(rid);
  }
  std::map<int, int> pos_of;
  for (size_t i = 0; i < rids.size(); ++i) pos_of[rids[i]] = static_cast<int>(i);
  std::set<int> marked;
  for (const auto& [pid, p] : d.points) {
    (void)pid;
    marked.insert(p.region);
  }

  struct Constraint {
    int p, q, curve;
  };
  std::vector<std::vector<Constraint>> due(rids.size());
  for (const auto& [aid, a] : d.arcs) {
    int p = pos_of.at(occ.region_of(hg::pos(aid)));
    int q = pos_of.at(occ.region_of(hg::neg(aid)));
    due[static_cast<size_t>(std::max(p, q))].push_back({p, q, a.curve});
  }

  std::vector<int> val(rids.size(), 0);
  std::map<int, int> drop;
  bool found = false;
  std::function<void(size_t, bool)> dfs = [&](size_t i, bool nonzero) {
    if (found) return;
    if (i == rids.size()) {
      found = nonzero;
      return;
    }
    int cap = marked.count(rids[i]) ? 0 : maxCoeff;
    for (int v = 0; v <= cap && !found; ++v) {
      val[i] = v;
      std::vector<int> added;
      bool ok = true;
      for (const Constraint& c : due[i]) {
        int delta = val[c.p] - val[c.q];
        auto it = drop.find(c.curve);
        if (it == drop.end()) {
          drop.emplace(c.curve, delta);
          added.push_back(c.curve);
        } else if (it->second != delta) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(i + 1, nonzero || v > 0);
      for (int c : added) drop.erase(c);
    }
  };
  dfs(0, false);
  return !found;
}

// Exact cone emptiness over the periodic-domain lattice (rank <= 3): a nonzero
// nonnegative periodic domain exists iff some candidate extreme ray satisfies
// every region constraint. Candidates cover all minimal faces: axis rays,
// rotated row normals (rank 2), and pairwise cross products (rank 3).
inline bool oracle_admissible_rays(const hg::Diagram& d) {
  auto basis = hg::periodic_domain_lattice(d);
  int rank = static_cast<int>(basis.size());
  if (rank == 0) return true;
  hg::require(rank <= 3, hg::Code::Precondition, "ray oracle handles lattice rank <= 3");

  std::set<int> marked;
  for (const auto& [pid, p] : d.points) {
    (void)pid;
    marked.insert(p.region);
  }
  using Vec = std::array<hg::Int, 3>;
  struct Row {
    Vec a;
    bool eq;
  };
  std::vector<Row> rows;
  for (const auto& [rid, r] : d.regions) {
    (void)r;
    Vec v{0, 0, 0};
    bool zero = true;
    for (int t = 0; t < rank; ++t) {
      v[static_cast<size_t>(t)] = basis[static_cast<size_t>(t)].at(rid);
      zero = zero && v[static_cast<size_t>(t)] == 0;
    }
    if (!zero) rows.push_back({v, marked.count(rid) > 0});
  }

  auto cross = [](const Vec& x, const Vec& y) -> Vec {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
  };
  auto is_zero = [](const Vec& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; };
  auto negate = [](const Vec& x) -> Vec { return {-x[0], -x[1], -x[2]}; };

  std::vector<Vec> candidates;
  auto add = [&](const Vec& x) {
    if (is_zero(x)) return;
    candidates.push_back(x);
    candidates.push_back(negate(x));
  };
  for (int k = 0; k < rank; ++k) {
    Vec e{0, 0, 0};
    e[static_cast<size_t>(k)] = 1;
    add(e);
  }
  if (rank == 2)
    for (const Row& r : rows) add({r.a[1], -r.a[0], 0});
  if (rank == 3) {
    std::vector<Vec> normals;
    for (const Row& r : rows) normals.push_back(r.a);
    for (int k = 0; k < 3; ++k) {
      Vec e{0, 0, 0};
      e[static_cast<size_t>(k)] = 1;
      normals.push_back(e);
    }
    for (size_t i = 0; i < normals.size(); ++i)
      for (size_t j = i + 1; j < normals.size(); ++j) add(cross(normals[i], normals[j]));
  }

  for (const Vec& x : candidates) {
    bool feasible = true;
    bool positive = false;
    for (const Row& r : rows) {
      hg::Int dot = r.a[0] * x[0] + r.a[1] * x[1] + r.a[2] * x[2];
      if (r.eq ? dot != 0 : dot < 0) {
        feasible = false;
        break;
      }
      if (!r.eq && dot > 0) positive = true;
    }
    if (feasible && positive) return false;
  }
  return true;
}

// Ascending-degree product of two integer polynomials.
inline std::vector<hg::Int> poly_mul(const std::vector<hg::Int>& p, const std::vector<hg::Int>& q) {
  std::vector<hg::Int> out(p.size() + q.size() - 1, hg::Int(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace support
