#pragma once

#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/matrix.hpp"

namespace heegaard {

// One relator letter: a generator dual to a beta-curve, with exponent sign.
struct Letter {
  int generator = 0;  // beta family index
  int sign = 1;       // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Generators dual to the beta-disks; one relator per alpha-curve, read along
// the curve starting at its lowest vertex id.
struct Presentation {
  int generators = 0;
  std::vector<Word> relators;  // by alpha family index
};

// Transverse co-orientation signs for the beta-curves; beta_sign[i] multiplies
// every crossing sign on the beta-curve of family index i.
struct OrientationChoice {
  std::vector<int> beta_sign;
};

// Canonical choice: each beta-curve co-oriented so that its lowest-vertex-id
// crossing counts +1; crossing-free curves get +1.
OrientationChoice default_orientations(const Diagram& d);

Presentation u_beta_presentation(const Diagram& d);
Presentation u_beta_presentation(const Diagram& d, const OrientationChoice& oc);

// Sum over relators of max(0, length - 2).
long long presentation_length(const Presentation& p);

// Entry (i, j) = algebraic intersection number of beta_i with alpha_j.
IntMat intersection_matrix(const Diagram& d);
IntMat intersection_matrix(const Diagram& d, const OrientationChoice& oc);

struct HomologySummary {
  std::vector<Int> invariantFactors;  // > 1, in divisibility order
  int bettiOne = 0;                   // genus - rank of the intersection matrix
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

HomologySummary first_homology(const Diagram& d);

enum class ShortCurveKind {
  Disjoint,        // no crossings with the other family
  SingleCrossing,  // one crossing: destabilization candidate
  DoubleSame,      // two crossings on a single opposite curve
  DoubleSplit,     // two crossings on two distinct opposite curves
};

const char* short_curve_kind_name(ShortCurveKind k);

struct ShortCurve {
  int curve = -1;
  Family family = Family::Alpha;
  ShortCurveKind kind = ShortCurveKind::Disjoint;
  std::vector<int> opposite;  // opposite curves met, ascending ids
};

// Every curve with at most two crossings, ascending curve id.
std::vector<ShortCurve> short_curve_report(const Diagram& d);

// Display form with 1-based generators, e.g. "u1^3 u2^-1"; "1" when empty.
std::string word_to_string(const Word& w);

}  // namespace heegaard
