#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/matrix.hpp"

namespace heegaard {

// Closed-form entropy caps from intersection statistics. Every value is a
// natural-log bound in binary64; a bound whose hypothesis fails is absent,
// never infinite.
struct EntropyBoundReport {
  // log(k_1...k_g) + b*log(1 + b*2^{b+1}*k^2) - log 2; all k_i >= 1, fiber
  // genus >= 3.
  std::optional<double> boundWithB;
  // log(k_1...k_g) - log k_min; all k_i >= 1, fiber genus >= 3.
  std::optional<double> boundFine;
  // 2*(log(k_1...k_g) - log k_min); fiber genus exactly 2.
  std::optional<double> boundGenus2;
  // (k - 2g - 1)*log 3; all k_i >= 3, fiber genus >= 3.
  std::optional<double> boundLog3;
  // degree*(baseLength - 1)*log 3, pulling a class back through a cover of the
  // stated degree over a base with the stated presentation length.
  std::optional<double> boundViaCover;
  std::optional<double> best;  // minimum of the present bounds

  bool fiberGenusAtLeastThree = false;
  bool fiberGenusExactlyTwo = false;
  bool allCurvesMeetThree = false;
};

EntropyBoundReport entropy_bounds(const IntersectionStats& st, int b1, int fiberGenus,
                                  std::optional<long long> coverDegree = {},
                                  std::optional<long long> baseLength = {});

// A hyperbolic tube: depth-r neighborhood of a closed geodesic of length
// `systole`, twisted by `angle`. Volume and wrist depend on (r, systole) only.
struct TubeShape {
  double depth = 0;
  double systole = 0;
  double angle = 0;
  double volume = 0;  // pi * systole * sinh^2(depth)
  double wrist = 0;   // 2*pi * sinh(depth)
};

// Partial tube data; any pair except (depth, wrist) determines the shape.
struct TubeSpec {
  std::optional<double> depth, systole, volume, wrist;
  double angle = 0;
};

// Completes the shape and cross-checks every supplied field to relative 1e-9.
TubeShape tube_metrics(const TubeSpec& spec);

// pi * (sinh(2r) - 2r), the volume of a hyperbolic r-ball.
double ball_volume(double r);

// rho * arsinh(1/sqrt(3)): radius around a point within which an embedded
// rho-ball keeps any crossing geodesic plane visible.
double visibility_radius(double rho);

// Thick/thin decomposition data of one hyperbolic manifold.
struct GeometricProfile {
  double volW = 0;                                  // thick-part volume
  std::vector<double> tubeWrists;                   // one per short tube
  std::optional<std::vector<double>> tubeVolumes;   // aligned with tubeWrists
  std::optional<double> totalVol;
  std::optional<double> systole;
  std::optional<int> genus;  // genus of the assembled diagram, when known
  double eps = 1.0;          // in (0, 1]
  double mu = 0.104;         // Margulis number
  std::optional<double> Dmu;
};

struct GeometricBoundReport {
  // 10^22 * (eps^-3 * volW + eps^-1 * sum of wrists).
  double heegaardLengthCap = 0;
  // 10^20 * totalVol * log(3 + 1/systole).
  std::optional<double> volSysEntropyCap;
  // 2 * (30(g - s) + 60 s + sum of log wrists).
  std::optional<double> assembledEntropyCap;
  // sqrt(3) * (mu/8)^{-3/2} * systole^{-1/2} * sum of tube volumes.
  std::optional<double> wristSumCap;
  // (4 pi / 3) * (mu/8)^3, the volume floor of a short tube.
  double tubeVolumeFloor = 0;
  // mu/8, the bicollar margin around the short tubes.
  double bicollarMargin = 0;
  // Per-curve crossing caps of the assembled diagram at delta = eps/10:
  // 10^7 * delta^-1 * (eps/delta)^14 * wrist for the tube curves,
  // 10^3 * (eps/delta)^6 for the rest, and the genus cap
  // s + 10^3 * delta^-3 * (eps/delta)^6 * volW.
  std::vector<double> tubeCurveCaps;
  double thickCurveCap = 0;
  double genusCap = 0;
  // 10^23 * ((mu/8)^-3 + (mu/8)^-1 * Dmu), when Dmu is supplied.
  std::optional<double> arithmeticEntropyConstant;
};

GeometricBoundReport geometric_entropy_bounds(const GeometricProfile& p);

struct PennerAsymptotics {
  double wristModel = 0;    // n * wristLimit
  double systoleModel = 0;  // n^-2 * tubeVolLimit * 4 pi / wristLimit^2
};

// Homological data of the n-th member of the twist family T_x^n T_y^{-1} on a
// genus-g surface: the action is [[n+1, n], [1, 1]] on the span of x and y and
// the identity elsewhere.
struct PennerReport {
  int n = 0;
  int genus = 2;
  IntMat homologyMatrix{0, 0};
  double eigenLarge = 1, eigenSmall = 1;  // (n + 2 +- sqrt(n^2 + 4n)) / 2
  double spectralRadius = 1;
  double entropyFloor = 0;  // log spectralRadius
  std::optional<PennerAsymptotics> asymptotics;
};

// `asympt`, when supplied, is (wristLimit, tubeVolumeLimit) of the limiting
// cusped manifold and fills the asymptotic models.
PennerReport penner_family(int n, int genus,
                           std::optional<std::pair<double, double>> asympt = {});

// Entropy of the m-th multiple of a class is 1/m of the original; pulling back
// through a finite cover keeps it unchanged (the degree documents call sites).
double entropy_transform(double ent, long long multiple, long long coverDegree);

}  // namespace heegaard
