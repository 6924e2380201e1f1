#include "heegaard/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "heegaard/exact.hpp"

namespace heegaard {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog3 = std::log(3.0);

void fold_min(std::optional<double>& best, const std::optional<double>& candidate) {
  if (!candidate) return;
  if (!best || *candidate < *best) best = *candidate;
}

bool close_rel(double given, double computed) {
  double scale = std::max(std::abs(given), std::abs(computed));
  return std::abs(given - computed) <= 1e-9 * std::max(1.0, scale);
}

}  // namespace

EntropyBoundReport entropy_bounds(const IntersectionStats& st, int b1, int fiberGenus,
                                  std::optional<long long> coverDegree,
                                  std::optional<long long> baseLength) {
  require(fiberGenus >= 2, Code::Precondition, "entropy bounds need fiber genus at least two");
  require(b1 >= 0, Code::Precondition, "negative first Betti number");
  const auto& ks = st.alpha_counts;
  require(!ks.empty(), Code::Precondition, "entropy bounds need at least one alpha-curve");
  for (int ki : ks)
    require(ki >= 1, Code::Precondition, "every alpha-curve needs an intersection");

  const double g = static_cast<double>(ks.size());
  const double k = static_cast<double>(st.total);
  double sumLog = 0;
  int kmin = ks.front();
  int numBelowThree = 0;
  for (int ki : ks) {
    sumLog += std::log(static_cast<double>(ki));
    kmin = std::min(kmin, ki);
    if (ki < 3) ++numBelowThree;
  }

  EntropyBoundReport rep;
  rep.fiberGenusAtLeastThree = fiberGenus >= 3;
  rep.fiberGenusExactlyTwo = fiberGenus == 2;
  rep.allCurvesMeetThree = numBelowThree == 0;

  if (rep.fiberGenusAtLeastThree) {
    const double b = static_cast<double>(b1);
    const double crowding = b * std::ldexp(1.0, b1 + 1) * k * k;
    rep.boundWithB = sumLog + b * std::log1p(crowding) - std::log(2.0);
    rep.boundFine = sumLog - std::log(static_cast<double>(kmin));
    if (rep.allCurvesMeetThree) rep.boundLog3 = (k - 2 * g - 1) * kLog3;
  }
  if (rep.fiberGenusExactlyTwo)
    rep.boundGenus2 = 2 * (sumLog - std::log(static_cast<double>(kmin)));
  if (coverDegree && baseLength) {
    require(*coverDegree >= 1, Code::Precondition, "cover degree must be positive");
    require(*baseLength >= 0, Code::Precondition, "negative presentation length");
    rep.boundViaCover =
        static_cast<double>(*coverDegree) * (static_cast<double>(*baseLength) - 1) * kLog3;
  }

  fold_min(rep.best, rep.boundWithB);
  fold_min(rep.best, rep.boundFine);
  fold_min(rep.best, rep.boundGenus2);
  fold_min(rep.best, rep.boundLog3);
  fold_min(rep.best, rep.boundViaCover);
  return rep;
}

TubeShape tube_metrics(const TubeSpec& spec) {
  for (const auto* field : {&spec.depth, &spec.systole, &spec.volume, &spec.wrist})
    if (field->has_value())
      require(**field > 0, Code::Precondition, "tube dimensions must be positive");
  require(spec.angle >= 0 && spec.angle <= kPi, Code::Precondition,
          "tube angle must lie in [0, pi]");

  double r = 0;
  if (spec.depth) {
    r = *spec.depth;
  } else if (spec.wrist) {
    r = std::asinh(*spec.wrist / (2 * kPi));
  } else if (spec.volume && spec.systole) {
    r = std::asinh(std::sqrt(*spec.volume / (kPi * *spec.systole)));
  } else {
    fail(Code::Precondition, "tube data does not determine the depth");
  }

  const double sh = std::sinh(r);
  double l = 0;
  if (spec.systole) {
    l = *spec.systole;
  } else if (spec.volume) {
    l = *spec.volume / (kPi * sh * sh);
  } else {
    fail(Code::Precondition, "tube data does not determine the core length");
  }

  TubeShape shape;
  shape.depth = r;
  shape.systole = l;
  shape.angle = spec.angle;
  shape.volume = kPi * l * sh * sh;
  shape.wrist = 2 * kPi * sh;

  if (spec.depth) require(close_rel(*spec.depth, shape.depth), Code::Precondition, "inconsistent tube data");
  if (spec.systole) require(close_rel(*spec.systole, shape.systole), Code::Precondition, "inconsistent tube data");
  if (spec.volume) require(close_rel(*spec.volume, shape.volume), Code::Precondition, "inconsistent tube data");
  if (spec.wrist) require(close_rel(*spec.wrist, shape.wrist), Code::Precondition, "inconsistent tube data");
  return shape;
}

double ball_volume(double r) {
  require(r >= 0, Code::Precondition, "ball radius must be nonnegative");
  return kPi * (std::sinh(2 * r) - 2 * r);
}

double visibility_radius(double rho) {
  require(rho >= 0, Code::Precondition, "visibility radius needs a nonnegative input");
  return rho * std::asinh(1 / std::sqrt(3.0));
}

GeometricBoundReport geometric_entropy_bounds(const GeometricProfile& p) {
  require(p.eps > 0 && p.eps <= 1, Code::Precondition, "eps must lie in (0, 1]");
  require(p.mu > 0, Code::Precondition, "Margulis number must be positive");
  require(p.volW >= 0, Code::Precondition, "thick-part volume must be nonnegative");
  const std::size_t s = p.tubeWrists.size();
  double sumWrist = 0, sumLogWrist = 0;
  for (double w : p.tubeWrists) {
    require(w > 0, Code::Precondition, "tube wrists must be positive");
    sumWrist += w;
    sumLogWrist += std::log(w);
  }

  GeometricBoundReport rep;
  rep.heegaardLengthCap =
      1e22 * (p.volW / std::pow(p.eps, 3) + sumWrist / p.eps);

  if (p.totalVol && p.systole) {
    require(*p.totalVol > 0, Code::Precondition, "total volume must be positive");
    require(*p.systole > 0, Code::Precondition, "systole must be positive");
    rep.volSysEntropyCap = 1e20 * *p.totalVol * std::log(3 + 1 / *p.systole);
  }

  if (p.genus) {
    require(*p.genus >= static_cast<int>(s), Code::Precondition,
            "genus cannot be smaller than the tube count");
    const double g = static_cast<double>(*p.genus);
    const double sd = static_cast<double>(s);
    rep.assembledEntropyCap = 2 * (30 * (g - sd) + 60 * sd + sumLogWrist);
  }

  if (p.tubeVolumes && p.systole) {
    require(p.tubeVolumes->size() == s, Code::Precondition,
            "tube volumes must align with tube wrists");
    require(*p.systole > 0, Code::Precondition, "systole must be positive");
    double sumVol = 0;
    for (double v : *p.tubeVolumes) {
      require(v > 0, Code::Precondition, "tube volumes must be positive");
      sumVol += v;
    }
    rep.wristSumCap = std::sqrt(3.0) * std::pow(p.mu / 8, -1.5) *
                      std::pow(*p.systole, -0.5) * sumVol;
  }

  rep.tubeVolumeFloor = (4 * kPi / 3) * std::pow(p.mu / 8, 3);
  rep.bicollarMargin = p.mu / 8;

  const double delta = p.eps / 10;
  const double ratio = p.eps / delta;
  rep.tubeCurveCaps.reserve(s);
  for (double w : p.tubeWrists)
    rep.tubeCurveCaps.push_back(1e7 * std::pow(ratio, 14) * w / delta);
  rep.thickCurveCap = 1e3 * std::pow(ratio, 6);
  rep.genusCap =
      static_cast<double>(s) + 1e3 * std::pow(ratio, 6) * p.volW / std::pow(delta, 3);

  if (p.Dmu) {
    require(*p.Dmu > 0, Code::Precondition, "entropy-per-volume density must be positive");
    rep.arithmeticEntropyConstant =
        1e23 * (std::pow(p.mu / 8, -3) + (8 / p.mu) * *p.Dmu);
  }
  return rep;
}

PennerReport penner_family(int n, int genus,
                           std::optional<std::pair<double, double>> asympt) {
  require(n >= 0, Code::Precondition, "twist power must be nonnegative");
  require(genus >= 2, Code::Precondition, "twist family needs genus at least two");

  PennerReport rep;
  rep.n = n;
  rep.genus = genus;
  rep.homologyMatrix = IntMat::identity(2 * genus);
  rep.homologyMatrix.at(0, 0) = n + 1;
  rep.homologyMatrix.at(0, 1) = n;
  rep.homologyMatrix.at(1, 0) = 1;
  rep.homologyMatrix.at(1, 1) = 1;

  const double nd = n;
  rep.eigenLarge = (nd + 2 + std::sqrt(nd * nd + 4 * nd)) / 2;
  rep.eigenSmall = 1 / rep.eigenLarge;  // the block has determinant one
  rep.spectralRadius = rep.eigenLarge;
  rep.entropyFloor = std::log(rep.eigenLarge);

  if (asympt) {
    require(n >= 1, Code::Precondition, "asymptotic models need a positive twist power");
    auto [wristLimit, tubeVolLimit] = *asympt;
    require(wristLimit > 0 && tubeVolLimit > 0, Code::Precondition,
            "asymptotic limits must be positive");
    PennerAsymptotics models;
    models.wristModel = nd * wristLimit;
    models.systoleModel = tubeVolLimit * 4 * kPi / (nd * nd * wristLimit * wristLimit);
    rep.asymptotics = models;
  }
  return rep;
}

double entropy_transform(double ent, long long multiple, long long coverDegree) {
  require(multiple >= 1, Code::Precondition, "class multiple must be positive");
  require(coverDegree >= 1, Code::Precondition, "cover degree must be positive");
  return ent / static_cast<double>(multiple);
}

}  // namespace heegaard
