#pragma once

#include <map>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "heegaard/matrix.hpp"

namespace heegaard {

// One transverse crossing of a dual curve through an arc of the diagram.
struct DualCut {
  int id = -1;
  int arc = -1;        // the arc crossed
  int gamma = -1;      // alpha index of the dual curve the cut belongs to
  int enter_sign = 0;  // +1 when the dual curve enters from the arc's left (+) side
};

// The dual curve of one alpha curve: it crosses that curve exactly once (at
// alpha_cut), crosses no other alpha curve, and crosses beta arcs transversely
// at beta_cuts, listed in traversal order. `regions` are the regions the curve
// passes through, aligned so regions[j] follows the j-th cut (alpha cut first).
struct DualCurve {
  int alpha_cut = -1;
  std::vector<int> beta_cuts;
  std::vector<int> regions;
};

struct DualCurveSystem {
  std::vector<DualCurve> curves;    // by alpha index
  std::vector<int> crossingCounts;  // beta crossings per dual curve
  std::map<int, DualCut> cuts;
  // Cut ids in order along each crossed arc; cyclic for closed arcs, anchored
  // at the first cut made.
  std::map<int, std::vector<int>> cuts_on_arc;
};

// Routes mutually disjoint dual curves for every alpha curve, in index order.
// The curve dual to the (s+1)-th alpha curve crosses beta arcs at most
// (k + o_beta) * 2^s times.
DualCurveSystem dual_curves(const Diagram& d);

struct BlockWitness {
  std::vector<int> rows, cols;  // row/column subsets picking the maximal block Q
  Int detQ{0};
};

// Kernel basis of a matrix in monotone block form: column i of `kernel` has
// entry detQ at the i-th non-Q column, zero at the other non-Q columns, and
// signed r x r minors of the chosen rows elsewhere, so every entry is bounded
// by R = |detQ|, the maximum over all r x r minors.
struct MonotoneBlock {
  IntMat kernel{0, 0};
  Int R{1};
  std::vector<int> relabeling;  // new position -> original column; non-Q columns first
  BlockWitness witness;
};

MonotoneBlock monotone_block(const IntMat& a);

struct MonotoneBasis {
  std::vector<Domain> domains;  // normalized periodic; domains[i] belongs to new index i
  Int R{1};
  std::vector<int> relabeling;  // new alpha index -> original alpha index
  BlockWitness blockWitness;
};

// Periodic domains P_0..P_{b-1} whose alpha boundaries form a monotone block:
// P_i has coefficient +-R on the alpha curve of new index i, zero on the other
// relabeled curves of index < b, and coefficients bounded by R elsewhere, with
// R <= (k/(g-b))^(g-b). Requires a single marked point.
MonotoneBasis monotone_periodic_basis(const Diagram& d);

struct WindingReport {
  long long K = 0;
  std::vector<long long> perCurveNewIntersections;  // by new alpha index
  long long totalNew = 0;
  long long newIntersectionBound = 0;  // shared bound for every wound curve
  bool verifiedAdmissible = false;
};

struct WindingResult {
  Diagram diagram;
  WindingReport report;
};

// Relabels the alpha curves per monotone_periodic_basis, then winds each of
// alpha_0..alpha_{b-1} along two parallel copies of its dual curve in opposite
// directions, K = (k + o_alpha) * b rounds each. The output is weakly
// admissible (verified on every run), keeps every input vertex, and leaves
// alpha_b..alpha_{g-1} untouched. Requires a single marked point.
WindingResult wind(const Diagram& d);

}  // namespace heegaard
