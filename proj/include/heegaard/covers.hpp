#pragma once

#include <map>
#include <optional>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"

namespace heegaard {

// Integer weights on the beta-curves, by family index, measured along the
// default co-orientations. A valid class annihilates the intersection matrix
// from the left, which makes it a homomorphism from the fundamental group to Z.
struct CocycleClass {
  std::vector<Int> weights;
};

// Basis of the valid classes, each normalized so its first nonzero weight is
// positive.
std::vector<CocycleClass> cohomology_basis(const Diagram& d);

struct CoverReport {
  int sheets = 0;
  int coverGenus = 0;
  std::map<int, int> liftedCurveCounts;  // base curve id -> closed lifts
  int liftedPointCount = 0;
  bool admissibilityPreserved = false;
};

struct CoverResult {
  Diagram diagram;
  CoverReport report;
};

// The m-sheeted cyclic cover glued by the class: crossing a beta-arc toward
// its co-oriented side raises the sheet by the curve's weight, crossing an
// alpha-arc keeps it. Every cover cell carries the id base_id * m + sheet.
// Throws DisconnectedCover when the weights generate a proper subgroup of Z/m.
CoverResult cyclic_cover(const Diagram& d, const CocycleClass& c, int m);

// Lift a base domain to all m sheets, and flatten a cover domain back down by
// summing sheets; both follow the cover id scheme above.
Domain pullback_domain(const Domain& dom, int m);
Domain pushforward_domain(const Domain& dom, int m);

// Cuts a multi-pointed diagram down to one marked point: per family, discards
// the curves of a lowest-id spanning tree of the cut-piece adjacency graph,
// then keeps only the lowest marked point. Pointed input returns unchanged.
Diagram reduce_to_pointed(const Diagram& d);

struct GeneratorCount {
  Int count = 0;
  std::optional<std::vector<std::vector<int>>> generators;  // vertex ids by alpha index
};

// Counts the vertex systems that meet every alpha-curve once and pairwise
// distinct beta-curves: the permanent of the crossing-count matrix. The list
// is materialized only on request, in lexicographic order.
GeneratorCount enumerate_generators(const Diagram& d, bool materialize = false);

}  // namespace heegaard
