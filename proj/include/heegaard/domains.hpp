#pragma once

#include <map>
#include <optional>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/matrix.hpp"

namespace heegaard {

// Z-linear combination of regions, sparse over region ids.
struct Domain {
  std::map<int, Int> coeff;

  Int at(int region) const;
  void set(int region, Int v);  // drops zeros
  bool is_zero() const;
  friend bool operator==(const Domain&, const Domain&) = default;
};

Domain operator+(const Domain& a, const Domain& b);
Domain operator-(const Domain& a, const Domain& b);
Domain operator*(const Int& s, const Domain& a);

struct BoundaryDecomposition {
  bool isPeriodic = false;
  std::vector<Int> alphaCoeffs, betaCoeffs;  // by family index, when periodic
  int offending_arc = -1;                    // witness arc when not periodic
};

// Basis of the lattice of periodic domains with coefficient 0 at the region
// containing the lowest-id marked point. Rank b1 for one marked point,
// b1 + 2(l-1) for l marked points.
std::vector<Domain> periodic_domain_lattice(const Diagram& d);

BoundaryDecomposition boundary_decomposition(const Diagram& d, const Domain& dom);

struct DomainNorms {
  Int domain;       // max |n_r|
  Int alpha, beta;  // max |x_i|, max |y_j|
};

// Throws Precondition when dom is not periodic.
DomainNorms domain_norms(const Diagram& d, const Domain& dom);

struct AdmissibilityVerdict {
  bool admissible = false;
  // When inadmissible: nonzero, nonnegative, periodic, zero at marked regions.
  std::optional<Domain> witness;
};

// Weak admissibility: no nontrivial nonnegative periodic domain vanishing at
// every marked region. Exact rational decision over the lattice span.
AdmissibilityVerdict check_weak_admissibility(const Diagram& d);

// Some x >= 0 with E x = f, or nullopt when infeasible. Exact phase-1 simplex
// with Bland's rule.
std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& E,
                                               const std::vector<Rat>& f);

}  // namespace heegaard
