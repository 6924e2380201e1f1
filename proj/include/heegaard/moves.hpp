#pragma once

#include <variant>

#include "heegaard/diagram.hpp"

namespace heegaard {

// Isotopes the curve of `launch` by pushing a finger out of the region that
// holds the `launch` occurrence, across the `target` occurrence on that same
// region's boundary. Adds two crossings of opposite sign.
struct FingerMove {
  SignedArc launch;
  SignedArc target;
};

// Removes a curve, merging the regions along it and splicing the other
// family's arcs straight through its crossings.
struct EraseCurve {
  int curve = -1;
};

// Surgers the surface along a crossing-free, non-separating curve, capping
// both sides with disks; drops the genus by one.
struct SurgeFreeCurve {
  int curve = -1;
};

// EraseCurve(beta) followed by SurgeFreeCurve(alpha); requires the two curves
// to cross exactly once and nothing else.
struct Destabilize {
  int alpha_curve = -1;
  int beta_curve = -1;
};

using Move = std::variant<FingerMove, EraseCurve, SurgeFreeCurve, Destabilize>;

Diagram apply_move(const Diagram& d, const Move& m);

// Pieces of a split arc, named in the arc's final orientation. For an arc
// that stays closed, before == after == the non-tip remainder.
struct SplitPieces {
  int before = -1, middle = -1, after = -1;
};

struct FingerOutcome {
  Diagram diagram;
  int v1 = -1, v2 = -1;          // new crossings, v1 first along the launch curve
  SplitPieces launch, target;    // launch.middle is the new tip
  SignedArc next_launch;         // tip occurrence inside the region beyond the target
  int region_main = -1;          // region the finger was pushed through
  int region_strip = -1;         // new region beside the corridor; -1 if cycles merged
  int region_bigon = -1;         // new region between tip and target middle
};

FingerOutcome apply_finger(const Diagram& d, const FingerMove& m);

}  // namespace heegaard
