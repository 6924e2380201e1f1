#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heegaard/bounds.hpp"
#include "heegaard/covers.hpp"
#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "heegaard/matrix.hpp"
#include "heegaard/presentation.hpp"
#include "heegaard/winding.hpp"
#include "support.hpp"

namespace hg = heegaard;
namespace fs = std::filesystem;
using hg::Int;

namespace {

// Pinned gate tolerances.
constexpr double kTolExact = 1e-12;       // closed-form arithmetic
constexpr double kTolLimit = 1e-9;        // asymptotic limit comparison
constexpr double kTolBallPct = 0.01;      // small-radius ball volume, 1%
constexpr double kFixtureSeconds = 1.0;   // per-fixture budget
constexpr double kOracleSeconds = 60.0;   // whole-corpus budget

struct GateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& msg) {
  if (!ok) throw GateFailure(msg);
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

int g_failures = 0;

void gate(int number, const std::string& title, const std::function<std::string()>& body) {
  std::string detail;
  bool pass = false;
  try {
    detail = body();
    pass = true;
  } catch (const GateFailure& f) {
    detail = f.what();
  } catch (const std::exception& e) {
    detail = std::string("unexpected error: ") + e.what();
  }
  if (!pass) ++g_failures;
  std::printf("[%s] %2d. %s - %s\n", pass ? "PASS" : "FAIL", number, title.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string curve_arcs_snapshot(const hg::Diagram& d, int curve_id) {
  std::string out;
  for (int aid : d.arcs_of_curve(curve_id)) {
    const hg::Arc& a = d.arc(aid);
    out += std::to_string(a.id) + "," + std::to_string(a.curve) + "," + (a.closed ? "c" : "s") +
           "," + std::to_string(a.from) + "," + std::to_string(a.to) + ";";
  }
  return out;
}

Int int_pow(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// ---- criterion bodies ----

std::string fixtures_dir;  // argv[2]
std::string hgd_path;      // argv[1]

std::string criterion_fixtures() {
  struct Pin {
    const char* file;
    long long length;
    hg::HomologySummary h1;
  };
  const std::vector<Pin> pins = {
      {"s3.hd", 0, {{}, 0}},
      {"rp3.hd", 0, {{Int(2)}, 0}},
      {"l31.hd", 1, {{Int(3)}, 0}},
      {"s1s2.hd", 0, {{}, 1}},
      {"s3_2pt.hd", 0, {{}, 0}},
  };
  double slowest = 0;
  for (const Pin& pin : pins) {
    auto t0 = std::chrono::steady_clock::now();
    auto d = hg::load_diagram(fixtures_dir + "/" + pin.file);
    hg::require_valid(d);
    auto p = hg::u_beta_presentation(d);
    expect(hg::presentation_length(p) == pin.length,
           std::string(pin.file) + ": wrong presentation length");
    expect(hg::first_homology(d) == pin.h1, std::string(pin.file) + ": wrong homology");
    double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    expect(dt < kFixtureSeconds, std::string(pin.file) + ": too slow");
  }
  std::ostringstream out;
  out << pins.size() << " fixtures, slowest " << static_cast<int>(slowest * 1000) << " ms";
  return out.str();
}

std::string criterion_oracle() {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::vector<int>, int>> pool = {
      {{0}, 0},    {{2}, 0},    {{3}, 0},    {{1, 1}, 0},    {{0, 2}, 0},    {{2, 2}, 0},
      {{0, 0}, 0}, {{1, 2}, 0}, {{1, 1}, 1}, {{0, 1, 1}, 0}, {{1, 1, 1}, 0}, {{0, 0, 1}, 0},
  };
  int checked = 0, inadmissible = 0;
  for (std::uint64_t seed = 1; checked < 100; ++seed) {
    for (const auto& [ks, extra] : pool) {
      for (int budget : {0, 1, 2, 3}) {
        auto d = hg::scramble_diagram(hg::block_diagram(ks, extra), budget, seed);
        if (static_cast<int>(d.regions.size()) > 12 || d.genus > 3) continue;
        bool exact = hg::check_weak_admissibility(d).admissible;
        bool brute = support::oracle_admissible_box(d, 3);
        expect(exact == brute, "verdict mismatch on a scrambled diagram");
        if (!exact) ++inadmissible;
        ++checked;
      }
    }
    expect(seed < 50, "could not assemble the corpus");
  }
  double dt = seconds_since(t0);
  expect(dt < kOracleSeconds, "corpus exceeded the time budget");
  std::ostringstream out;
  out << checked << " diagrams, " << inadmissible << " inadmissible, " << std::fixed
      << std::setprecision(1) << dt << " s";
  return out.str();
}

std::string criterion_winding() {
  auto s1s2 = hg::block_diagram({0});
  expect(!hg::check_weak_admissibility(s1s2).admissible, "disjoint pair started admissible");
  auto res = hg::wind(s1s2);
  expect(hg::check_weak_admissibility(res.diagram).admissible, "wound pair is not admissible");
  expect(res.report.totalNew == 4, "disjoint pair gained a different crossing count");
  expect(res.report.newIntersectionBound == 4, "budget is not 4 on the disjoint pair");

  const std::vector<std::vector<int>> pool = {{0}, {0, 2}, {0, 0}, {0, 3}, {0, 1, 1}, {0, 0, 2}};
  int wound = 0;
  for (const auto& ks : pool) {
    for (int budget : {0, 2, 4}) {
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto d = hg::scramble_diagram(hg::block_diagram(ks), budget, seed);
        auto basis = hg::monotone_periodic_basis(d);
        int b = static_cast<int>(basis.domains.size());
        expect(b >= 1, "pool diagram lost its periodic rank");
        auto stats = hg::intersection_stats(d);
        auto w = hg::wind(d);
        hg::require_valid(w.diagram);
        expect(w.report.verifiedAdmissible, "winding did not verify its output");
        expect(hg::check_weak_admissibility(w.diagram).admissible, "wound output inadmissible");
        expect(support::oracle_admissible_rays(w.diagram), "ray oracle rejects the wound output");

        long long budget_total = static_cast<long long>(stats.total + stats.zero_alpha) *
                                 (stats.total + stats.zero_beta) * b * (1LL << (b + 1));
        long long total = 0;
        for (long long n : w.report.perCurveNewIntersections) {
          expect(n <= w.report.newIntersectionBound, "per-curve increment exceeds the bound");
          total += n;
        }
        expect(total == w.report.totalNew, "per-curve increments do not sum");
        expect(w.report.totalNew <= budget_total, "total increment exceeds the budget");

        auto out_alphas = w.diagram.curves_of_family(hg::Family::Alpha);
        for (size_t i = static_cast<size_t>(b); i < out_alphas.size(); ++i) {
          int cid = out_alphas[i];
          expect(curve_arcs_snapshot(w.diagram, cid) == curve_arcs_snapshot(d, cid),
                 "a curve past the wound block changed");
        }
        ++wound;
      }
    }
  }
  std::ostringstream out;
  out << wound << " wound diagrams, all oracle-confirmed";
  return out.str();
}

std::string criterion_kernel_bounds() {
  support::Rng rng(404);
  int trials = 0;
  for (; trials < 200; ++trials) {
    int g = rng.uniform(1, 6);
    hg::IntMat a(g, g);
    bool signedCase = trials % 2 == 1;
    Int k = 0;
    for (int r = 0; r < g; ++r)
      for (int c = 0; c < g; ++c) {
        int e = signedCase ? rng.uniform(-3, 3) : rng.uniform(0, 3);
        a.at(r, c) = e;
        k += e < 0 ? -e : e;
      }
    auto mb = hg::monotone_block(a);
    expect(hg::mul(a, mb.kernel).is_zero(), "A*S is nonzero");
    int b = mb.kernel.cols();
    int rank = g - b;
    if (rank == 0) {
      expect(mb.R == 1, "R exceeds 1 on a zero-rank matrix");
    } else {
      // R <= (k / rank)^rank, exactly: R * rank^rank <= k^rank.
      expect(mb.R * int_pow(rank, rank) <= int_pow(k, rank), "R exceeds (k/(g-b))^(g-b)");
    }
    for (int r = 0; r < mb.kernel.rows(); ++r)
      for (int c = 0; c < b; ++c)
        expect(abs(mb.kernel.at(r, c)) <= mb.R, "kernel entry exceeds R");
  }
  std::ostringstream out;
  out << trials << " matrices, exact bound checks";
  return out.str();
}

std::string criterion_covers() {
  const std::vector<std::vector<int>> bases = {{0}, {0, 2}, {0, 0}, {0, 3}};
  int instances = 0, inequality_checked = 0;
  for (const auto& ks : bases) {
    for (int budget : {0, 4, 6}) {
      for (std::uint64_t seed : {1u, 2u}) {
        auto base = hg::scramble_diagram(hg::block_diagram(ks), budget, seed);
        auto classes = hg::cohomology_basis(base);
        expect(!classes.empty(), "base lost its cohomology");
        auto stats = hg::intersection_stats(base);
        bool base_admissible = hg::check_weak_admissibility(base).admissible;
        auto lattice = hg::periodic_domain_lattice(base);
        for (int m : {2, 3}) {
          auto cover = hg::cyclic_cover(base, classes[0], m);
          expect(cover.diagram.genus == m * base.genus - m + 1, "cover genus formula failed");
          expect(cover.report.coverGenus == cover.diagram.genus, "report genus mismatch");
          for (const hg::Domain& p : lattice)
            expect(hg::pushforward_domain(hg::pullback_domain(p, m), m) == Int(m) * p,
                   "pushforward of pullback is not m-fold");
          expect(hg::check_weak_admissibility(cover.diagram).admissible == base_admissible,
                 "cover changed the admissibility verdict");

          auto reduced = hg::reduce_to_pointed(cover.diagram);
          expect(hg::validate(reduced).ok, "reduced cover does not validate");
          if (stats.min_alpha >= 3) {
            long long L =
                hg::presentation_length(hg::u_beta_presentation(reduced));
            long long rhs = static_cast<long long>(m) *
                            (stats.total - 2LL * base.genus - 1);
            expect(L - 1 <= rhs, "cover length inequality failed");
            ++inequality_checked;
          }
          ++instances;
        }
      }
    }
  }
  expect(inequality_checked > 0, "length inequality never triggered");
  std::ostringstream out;
  out << instances << " covers, " << inequality_checked << " length inequalities";
  return out.str();
}

std::string criterion_generators() {
  std::vector<hg::Diagram> pool;
  for (const auto& ks :
       {std::vector<int>{3}, std::vector<int>{2, 3}, std::vector<int>{0, 2},
        std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1, 1}, std::vector<int>{2, 1, 3}})
    for (std::uint64_t seed : {1u, 2u}) pool.push_back(hg::scramble_diagram(hg::block_diagram(ks), 4, seed));
  pool.push_back(hg::block_diagram(std::vector<int>(10, 1)));
  pool.push_back(
      hg::cyclic_cover(hg::block_diagram({0, 2}), hg::CocycleClass{{Int(1), Int(0)}}, 3).diagram);

  for (const auto& d : pool) {
    auto alphas = d.curves_of_family(hg::Family::Alpha);
    expect(alphas.size() <= 10, "pool diagram too wide");
    auto counted = hg::enumerate_generators(d).count;
    expect(counted == support::ryser_permanent(support::multiplicity_matrix(d)),
           "count disagrees with the permanent");
    Int cap = 1;
    for (int ki : hg::intersection_stats(d).alpha_counts) cap *= ki;
    expect(counted <= cap, "count exceeds the product of crossing counts");
  }
  std::ostringstream out;
  out << pool.size() << " instances vs Ryser permanents";
  return out.str();
}

std::string criterion_bound_arithmetic() {
  hg::IntersectionStats st;
  st.alpha_counts = {3, 3};
  st.beta_counts = {3, 3};
  st.total = 6;
  st.min_alpha = 3;
  auto rep = hg::entropy_bounds(st, 0, 3);
  expect(rep.boundFine && std::abs(*rep.boundFine - std::log(3.0)) <= kTolExact,
         "fine bound is not log 3");
  expect(rep.boundLog3 && std::abs(*rep.boundLog3 - std::log(3.0)) <= kTolExact,
         "log-3 bound is not log 3");

  const double log3 = std::log(3.0);
  long long exhaustive = 0;
  for (int g = 1; g <= 3; ++g) {
    std::vector<int> ks(static_cast<size_t>(g), 3);
    while (true) {
      double lhs = 0, sum = 0, kmin = 1e9;
      for (int ki : ks) {
        lhs += ki;
        sum += std::log(static_cast<double>(ki));
        kmin = std::min(kmin, static_cast<double>(ki));
      }
      lhs = (lhs - 2 * g - 1) * log3;
      double rhs = sum - std::log(kmin);
      expect(lhs >= rhs - kTolExact * std::max(1.0, std::abs(rhs)),
             "derivation inequality failed exhaustively");
      ++exhaustive;
      int i = g - 1;
      while (i >= 0 && ks[static_cast<size_t>(i)] == 15) {
        ks[static_cast<size_t>(i)] = 3;
        --i;
      }
      if (i < 0) break;
      ++ks[static_cast<size_t>(i)];
    }
  }
  support::Rng rng(777);
  for (int t = 0; t < 10000; ++t) {
    int g = rng.uniform(1, 6);
    double lhs = 0, sum = 0, kmin = 1e9;
    for (int i = 0; i < g; ++i) {
      int ki = rng.uniform(3, 50);
      lhs += ki;
      sum += std::log(static_cast<double>(ki));
      kmin = std::min(kmin, static_cast<double>(ki));
    }
    lhs = (lhs - 2 * g - 1) * log3;
    double rhs = sum - std::log(kmin);
    expect(lhs >= rhs - kTolExact * std::max(1.0, std::abs(rhs)),
           "derivation inequality failed on a random tuple");
  }
  std::ostringstream out;
  out << "log 3 pinned, " << exhaustive << " exhaustive + 10000 random tuples";
  return out.str();
}

std::string criterion_geometry() {
  for (int i = 1; i <= 100; ++i) {
    for (int j = 1; j <= 100; ++j) {
      double r = 5.0 * i / 100;
      double l = 5.0 * j / 100;
      hg::TubeSpec spec;
      spec.depth = r;
      spec.systole = l;
      auto t = hg::tube_metrics(spec);
      expect(close_rel(t.systole * t.wrist * t.wrist, 4 * std::numbers::pi * t.volume, kTolExact),
             "tube identity failed on the grid");
    }
  }
  double r = 0.01;
  double euclid = (4 * std::numbers::pi / 3) * r * r * r;
  expect(std::abs(hg::ball_volume(r) - euclid) <= kTolBallPct * euclid,
         "small ball volume off by more than 1%");

  hg::GeometricProfile p;
  p.volW = 1;
  p.totalVol = 1;
  p.systole = 1e12;
  auto rep = hg::geometric_entropy_bounds(p);
  expect(rep.volSysEntropyCap.has_value(), "volume-systole cap missing");
  expect(close_rel(*rep.volSysEntropyCap, 1e20 * std::log(3.0), kTolLimit),
         "volume-systole cap does not converge to 1e20 log 3");
  double prev = 0;
  for (double sys : {1e3, 1e6, 1e9}) {
    p.systole = sys;
    double cap = *hg::geometric_entropy_bounds(p).volSysEntropyCap;
    expect(cap >= 1e20 * std::log(3.0), "cap fell below its limit");
    if (prev != 0) expect(cap < prev, "cap is not decreasing toward the limit");
    prev = cap;
  }
  return "10000 grid tubes, ball at 1%, limit reached";
}

std::string criterion_penner() {
  auto rep = hg::penner_family(1, 2);
  expect(std::abs(rep.spectralRadius - (3 + std::sqrt(5.0)) / 2) <= kTolExact,
         "spectral radius is not (3+sqrt 5)/2");
  expect(std::abs(rep.entropyFloor - 0.962424) <= 1e-6, "entropy floor is not 0.962424");

  for (int n = 1; n <= 100; ++n) {
    for (int g = 2; g <= 5; ++g) {
      auto fam = hg::penner_family(n, g);
      std::vector<Int> poly = {1, -(n + 2), 1};
      for (int i = 0; i < 2 * g - 2; ++i) poly = support::poly_mul(poly, {-1, 1});
      expect(hg::characteristic_polynomial(fam.homologyMatrix) == poly,
             "characteristic polynomial mismatch");
      expect(hg::determinant(fam.homologyMatrix) == 1, "twist matrix determinant is not one");
    }
    expect(hg::penner_family(n, 2).entropyFloor > std::log(static_cast<double>(n)),
           "entropy floor fell below log n");
  }
  return "n = 1 pinned, 400 exact polynomials, floor beats log n";
}

// ---- CLI determinism ----

struct CliRun {
  int exit_code = -1;
  std::string out, err, artifact;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run_cli(const std::string& args, const fs::path& scratch,
               const std::optional<fs::path>& artifact) {
  fs::path out = scratch / "stdout.txt";
  fs::path err = scratch / "stderr.txt";
  if (artifact) fs::remove(*artifact);
  std::string cmd = hgd_path + " " + args + " > " + out.string() + " 2> " + err.string();
  int status = std::system(cmd.c_str());
  CliRun run;
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  run.out = read_file(out);
  run.err = read_file(err);
  if (artifact && fs::exists(*artifact)) run.artifact = read_file(*artifact);
  return run;
}

std::string criterion_cli() {
  fs::path scratch = fs::temp_directory_path() / "hgd-acceptance";
  fs::create_directories(scratch);
  const std::string F = fixtures_dir;
  const std::string S = scratch.string();

  struct Command {
    std::string args;
    int expected_exit;
    std::optional<std::string> artifact;    // path inside scratch
    std::optional<std::string> exact_out;   // pinned stdout
  };
  const std::vector<Command> commands = {
      {"validate " + F + "/l31.hd", 0, {}, std::string("valid, genus 1, k=3\n")},
      {"validate --json " + F + "/l31.hd", 0, {}, {}},
      {"invariants " + F + "/l31.hd " + F + "/rp3.hd --jobs 3", 0, {}, {}},
      {"invariants --json " + F + "/s1s2.hd", 0, {}, {}},
      {"present " + F + "/l31.hd", 0, {}, {}},
      {"present --json " + F + "/s3.hd " + F + "/s1s2.hd --jobs 2", 0, {}, {}},
      {"admissible " + F + "/s1s2.hd " + F + "/l31.hd --jobs 2", 0, {}, {}},
      {"wind " + F + "/s1s2.hd --out " + S + "/wound.hd", 0, std::string(S + "/wound.hd"),
       std::string("K=1, new intersections 4/4 budget, admissible\n")},
      {"wind --json " + F + "/s1s2.hd", 0, {}, {}},
      {"cover " + F + "/s1s2.hd --sheets 3 --class 1", 0, {}, {}},
      {"cover --json " + F + "/s1s2.hd --sheets 2 --class 1 --out " + S + "/cover.hd", 0,
       std::string(S + "/cover.hd"), {}},
      {"reduce " + F + "/s3_2pt.hd --out " + S + "/reduced.hd", 0,
       std::string(S + "/reduced.hd"), {}},
      {"generators " + F + "/l31.hd", 0, {}, {}},
      {"bounds " + F + "/l31.hd --genus 3", 0, {}, {}},
      {"bounds --json " + F + "/l31.hd --genus 3 --sheets 2", 0, {}, {}},
      {"tube --depth 0.8813735870195430 --systole 2", 0, {}, {}},
      {"tube --json --volume 6.283185307179586 --wrist 6.283185307179586", 0, {}, {}},
      {"geom --volw 1 --wrists 0.5,0.25 --systole 0.5 --total-vol 2 --genus 3", 0, {}, {}},
      {"geom --json --volw 2 --Dmu 0.1", 0, {}, {}},
      {"penner --n 1", 0, {},
       std::string("spectral radius (3+√5)/2 ≈ 2.618034, entropy floor 0.962424\n")},
      {"penner --json --n 3 --genus 3 --asympt 2,5", 0, {}, {}},
      {"random --genus 2 --seed 11", 0, {}, {}},
      {"random --genus 2 --points 2 --seed 7 --n 10 --out " + S + "/rand.hd", 0,
       std::string(S + "/rand.hd"), {}},
      {"random --json --genus 1 --seed 3", 0, {}, {}},
      {"validate " + S + "/missing-input.hd", 1, {}, {}},
      {"wind", 2, {}, {}},
  };

  for (const Command& c : commands) {
    std::optional<fs::path> artifact;
    if (c.artifact) artifact = fs::path(*c.artifact);
    auto first = run_cli(c.args, scratch, artifact);
    auto second = run_cli(c.args, scratch, artifact);
    expect(first.exit_code == c.expected_exit,
           "exit " + std::to_string(first.exit_code) + " for: hgd " + c.args);
    expect(first.exit_code == second.exit_code, "exit codes differ for: hgd " + c.args);
    expect(first.out == second.out, "stdout differs between runs for: hgd " + c.args);
    expect(first.err == second.err, "stderr differs between runs for: hgd " + c.args);
    expect(first.artifact == second.artifact, "artifact differs between runs for: hgd " + c.args);
    if (c.exact_out) expect(first.out == *c.exact_out, "pinned output mismatch for: hgd " + c.args);
    if (c.expected_exit == 0 && !c.exact_out) expect(!first.out.empty(), "empty stdout for: hgd " + c.args);
  }
  std::ostringstream out;
  out << commands.size() << " commands run twice, byte-identical";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: acceptance <hgd-binary> <fixtures-dir>\n");
    return 2;
  }
  hgd_path = argv[1];
  fixtures_dir = argv[2];

  gate(1, "fixture lengths and homology", criterion_fixtures);
  gate(2, "admissibility verdicts match brute force", criterion_oracle);
  gate(3, "winding end to end", criterion_winding);
  gate(4, "kernel block bounds", criterion_kernel_bounds);
  gate(5, "cyclic covers", criterion_covers);
  gate(6, "generator counts", criterion_generators);
  gate(7, "bound arithmetic", criterion_bound_arithmetic);
  gate(8, "tube and volume geometry", criterion_geometry);
  gate(9, "twist family", criterion_penner);
  gate(10, "CLI determinism", criterion_cli);

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
