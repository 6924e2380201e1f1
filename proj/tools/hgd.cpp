#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heegaard/bounds.hpp"
#include "heegaard/covers.hpp"
#include "heegaard/diagram.hpp"
#include "heegaard/domains.hpp"
#include "heegaard/exact.hpp"
#include "heegaard/presentation.hpp"
#include "heegaard/winding.hpp"

namespace hg = heegaard;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "hgd/1";

std::string fmt(double x) {
  char buf[64];
  double a = std::abs(x);
  if (x != 0 && (a >= 1e6 || a < 1e-4))
    std::snprintf(buf, sizeof buf, "%.6e", x);
  else
    std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string h1_string(const hg::HomologySummary& h) {
  std::vector<std::string> parts;
  if (h.bettiOne == 1) parts.push_back("Z");
  if (h.bettiOne > 1) parts.push_back("Z^" + std::to_string(h.bettiOne));
  for (const hg::Int& f : h.invariantFactors) parts.push_back("Z/" + f.str());
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string curve_label(const hg::Diagram& d, int curve_id) {
  const hg::Curve& c = d.curve(curve_id);
  return (c.family == hg::Family::Alpha ? "a" : "b") + std::to_string(c.index);
}

std::string witness_string(const hg::Domain& w) {
  std::string out;
  for (const auto& [rid, v] : w.coeff) {
    if (!out.empty()) out += " ";
    out += "r" + std::to_string(rid) + ":" + v.str();
  }
  return out;
}

Json witness_json(const hg::Domain& w) {
  Json arr = Json::array();
  for (const auto& [rid, v] : w.coeff) arr.push_back({rid, v.str()});
  return arr;
}

// ---- multi-file driver ----

struct FileOutcome {
  bool ok = true;
  std::vector<std::string> lines;  // text report
  Json fields;                     // structured report, without the path
  std::string error;
};

using FileWork = std::function<FileOutcome(const std::string&)>;

FileOutcome guarded(const FileWork& work, const std::string& path) {
  try {
    return work(path);
  } catch (const hg::Error& e) {
    FileOutcome o;
    o.ok = false;
    o.error = e.what();
    return o;
  }
}

int run_many(const std::vector<std::string>& files, int jobs, bool jsonMode,
             const std::string& command, const FileWork& work) {
  std::vector<FileOutcome> results(files.size());
  size_t lanes = std::min<size_t>(std::max(jobs, 1), files.size());
  if (lanes > 1) {
    std::vector<std::thread> threads;
    for (size_t t = 0; t < lanes; ++t)
      threads.emplace_back([&, t] {
        for (size_t i = t; i < files.size(); i += lanes) results[i] = guarded(work, files[i]);
      });
    for (auto& th : threads) th.join();
  } else {
    for (size_t i = 0; i < files.size(); ++i) results[i] = guarded(work, files[i]);
  }

  bool anyError = false;
  if (jsonMode) {
    Json rec{{"schema", kSchema}, {"command", command}};
    Json inputs = Json::array();
    for (size_t i = 0; i < files.size(); ++i) {
      Json entry{{"path", files[i]}};
      if (results[i].ok)
        entry.update(results[i].fields);
      else
        entry["error"] = results[i].error;
      inputs.push_back(std::move(entry));
      anyError = anyError || !results[i].ok;
    }
    rec["inputs"] = std::move(inputs);
    std::cout << rec.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < files.size(); ++i) {
      std::string prefix = files.size() > 1 ? files[i] + ": " : "";
      if (results[i].ok)
        for (const std::string& line : results[i].lines) std::cout << prefix << line << "\n";
      else
        std::cerr << prefix << results[i].error << "\n";
      anyError = anyError || !results[i].ok;
    }
  }
  return anyError ? 1 : 0;
}

void emit_single(bool jsonMode, Json& rec, const std::vector<std::string>& lines) {
  if (jsonMode) {
    std::cout << rec.dump(2) << "\n";
  } else {
    for (const std::string& line : lines) std::cout << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for combinatorial Heegaard diagrams"};
  app.require_subcommand(1);

  bool jsonMode = false;
  int jobs = 1;
  std::vector<std::string> files;
  std::string outPath;
  std::uint64_t seed = 0;
  int sheets = 0;
  std::vector<long long> classWeights;
  int nValue = 0;
  int genusValue = 0;
  int pointsValue = 1;
  double epsValue = 1.0;
  double muValue = 0.104;
  double dmuValue = 0;
  double depthValue = 0, systoleValue = 0, volumeValue = 0, wristValue = 0, angleValue = 0;
  double volwValue = 0, totalVolValue = 0;
  std::vector<double> wristsValue, tubeVolumesValue, asymptValue;

  auto common = [&](CLI::App* sub, bool multiFile) {
    sub->add_flag("--json", jsonMode, "emit one structured record instead of text");
    if (multiFile) sub->add_option("--jobs", jobs, "parallel lanes for independent inputs");
  };

  std::string activeCommand;
  int rc = 0;

  // ---- validate ----
  auto* cmdValidate = app.add_subcommand("validate", "check diagram files");
  cmdValidate->add_option("files", files, "diagram files")->required();
  common(cmdValidate, true);
  cmdValidate->callback([&] {
    activeCommand = "validate";
    rc = run_many(files, jobs, jsonMode, activeCommand, [](const std::string& path) {
      hg::Diagram d = hg::load_diagram(path);
      hg::require_valid(d);
      hg::IntersectionStats st = hg::intersection_stats(d);
      FileOutcome o;
      o.lines.push_back("valid, genus " + std::to_string(d.genus) + ", k=" +
                        std::to_string(st.total));
      o.fields = Json{{"valid", true},
                      {"genus", d.genus},
                      {"crossings", st.total},
                      {"points", d.num_points()}};
      return o;
    });
  });

  // ---- invariants ----
  auto* cmdInvariants = app.add_subcommand("invariants", "first homology and presentation length");
  cmdInvariants->add_option("files", files, "diagram files")->required();
  common(cmdInvariants, true);
  cmdInvariants->callback([&] {
    activeCommand = "invariants";
    rc = run_many(files, jobs, jsonMode, activeCommand, [](const std::string& path) {
      hg::Diagram d = hg::load_diagram(path);
      hg::require_valid(d);
      hg::IntersectionStats st = hg::intersection_stats(d);
      hg::HomologySummary h = hg::first_homology(d);
      long long len = hg::presentation_length(hg::u_beta_presentation(d));
      FileOutcome o;
      o.lines.push_back("genus " + std::to_string(d.genus) + ", k=" + std::to_string(st.total) +
                        ", H1 = " + h1_string(h) + ", length " + std::to_string(len));
      Json torsion = Json::array();
      for (const hg::Int& f : h.invariantFactors) torsion.push_back(f.str());
      o.fields = Json{{"genus", d.genus},
                      {"crossings", st.total},
                      {"points", d.num_points()},
                      {"betti", h.bettiOne},
                      {"torsion", std::move(torsion)},
                      {"h1", h1_string(h)},
                      {"presentationLength", len}};
      return o;
    });
  });

  // ---- present ----
  auto* cmdPresent = app.add_subcommand("present", "group presentation read off the beta-curves");
  cmdPresent->add_option("files", files, "diagram files")->required();
  common(cmdPresent, true);
  cmdPresent->callback([&] {
    activeCommand = "present";
    rc = run_many(files, jobs, jsonMode, activeCommand, [](const std::string& path) {
      hg::Diagram d = hg::load_diagram(path);
      hg::require_valid(d);
      hg::Presentation p = hg::u_beta_presentation(d);
      auto shorts = hg::short_curve_report(d);
      FileOutcome o;
      o.lines.push_back("generators " + std::to_string(p.generators) + ", relators " +
                        std::to_string(p.relators.size()) + ", length " +
                        std::to_string(hg::presentation_length(p)));
      Json relators = Json::array();
      for (size_t i = 0; i < p.relators.size(); ++i) {
        std::string w = hg::word_to_string(p.relators[i]);
        o.lines.push_back("r" + std::to_string(i + 1) + " = " + w);
        relators.push_back(w);
      }
      Json shortList = Json::array();
      for (const hg::ShortCurve& s : shorts) {
        std::string meets;
        Json meetsJ = Json::array();
        for (int cid : s.opposite) {
          meets += (meets.empty() ? "" : " ") + curve_label(d, cid);
          meetsJ.push_back(curve_label(d, cid));
        }
        std::string line = "short " + curve_label(d, s.curve) + ": " +
                           hg::short_curve_kind_name(s.kind);
        if (!meets.empty()) line += ", meets " + meets;
        o.lines.push_back(line);
        shortList.push_back(Json{{"curve", curve_label(d, s.curve)},
                                 {"kind", hg::short_curve_kind_name(s.kind)},
                                 {"meets", std::move(meetsJ)}});
      }
      o.fields = Json{{"generators", p.generators},
                      {"length", hg::presentation_length(p)},
                      {"relators", std::move(relators)},
                      {"shortCurves", std::move(shortList)}};
      return o;
    });
  });

  // ---- admissible ----
  auto* cmdAdmissible = app.add_subcommand("admissible", "weak admissibility of pointed diagrams");
  cmdAdmissible->add_option("files", files, "diagram files")->required();
  common(cmdAdmissible, true);
  cmdAdmissible->callback([&] {
    activeCommand = "admissible";
    rc = run_many(files, jobs, jsonMode, activeCommand, [](const std::string& path) {
      hg::Diagram d = hg::load_diagram(path);
      hg::require_valid(d);
      auto lattice = hg::periodic_domain_lattice(d);
      hg::AdmissibilityVerdict v = hg::check_weak_admissibility(d);
      FileOutcome o;
      std::string line = (v.admissible ? "admissible" : "inadmissible") +
                         std::string(", periodic rank ") + std::to_string(lattice.size());
      o.fields = Json{{"admissible", v.admissible}, {"periodicRank", lattice.size()}};
      if (v.witness) {
        line += ", witness " + witness_string(*v.witness);
        o.fields["witness"] = witness_json(*v.witness);
      }
      o.lines.push_back(line);
      return o;
    });
  });

  // ---- wind ----
  auto* cmdWind = app.add_subcommand("wind", "wind basis alpha-curves until weakly admissible");
  cmdWind->add_option("file", files, "diagram file")->required()->expected(1);
  cmdWind->add_option("--out", outPath, "write the wound diagram here");
  common(cmdWind, false);
  cmdWind->callback([&] {
    activeCommand = "wind";
    hg::WindingResult res = hg::wind(hg::load_diagram(files.front()));
    const hg::WindingReport& r = res.report;
    if (!outPath.empty()) hg::save_diagram(res.diagram, outPath);
    Json perCurve = Json::array();
    for (long long c : r.perCurveNewIntersections) perCurve.push_back(c);
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"path", files.front()},
             {"K", r.K},
             {"perCurveNewIntersections", std::move(perCurve)},
             {"newIntersections", r.totalNew},
             {"budget", r.newIntersectionBound},
             {"admissible", r.verifiedAdmissible}};
    if (!outPath.empty()) rec["out"] = outPath;
    emit_single(jsonMode, rec,
                {"K=" + std::to_string(r.K) + ", new intersections " + std::to_string(r.totalNew) +
                 "/" + std::to_string(r.newIntersectionBound) + " budget, admissible"});
  });

  // ---- cover ----
  auto* cmdCover = app.add_subcommand("cover", "cyclic cover glued along a cohomology class");
  cmdCover->add_option("file", files, "diagram file")->required()->expected(1);
  cmdCover->add_option("--sheets", sheets, "number of sheets")->required();
  cmdCover->add_option("--class", classWeights, "cocycle weights, one per beta-curve")
      ->required()
      ->delimiter(',');
  cmdCover->add_option("--out", outPath, "write the cover diagram here");
  common(cmdCover, false);
  cmdCover->callback([&] {
    activeCommand = "cover";
    hg::Diagram d = hg::load_diagram(files.front());
    hg::CocycleClass cls;
    for (long long w : classWeights) cls.weights.push_back(hg::Int(w));
    hg::CoverResult res = hg::cyclic_cover(d, cls, sheets);
    if (!outPath.empty()) hg::save_diagram(res.diagram, outPath);
    Json lifts = Json::array();
    for (const auto& [cid, count] : res.report.liftedCurveCounts)
      lifts.push_back({curve_label(d, cid), count});
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"path", files.front()},
             {"sheets", res.report.sheets},
             {"genus", res.report.coverGenus},
             {"points", res.report.liftedPointCount},
             {"admissibilityPreserved", res.report.admissibilityPreserved},
             {"liftedClosedCurves", std::move(lifts)}};
    if (!outPath.empty()) rec["out"] = outPath;
    emit_single(jsonMode, rec,
                {"sheets " + std::to_string(res.report.sheets) + ", genus " +
                 std::to_string(res.report.coverGenus) + ", points " +
                 std::to_string(res.report.liftedPointCount) + ", admissibility preserved"});
  });

  // ---- reduce ----
  auto* cmdReduce = app.add_subcommand("reduce", "discard curves until one marked point is left");
  cmdReduce->add_option("file", files, "diagram file")->required()->expected(1);
  cmdReduce->add_option("--out", outPath, "write the reduced diagram here");
  common(cmdReduce, false);
  cmdReduce->callback([&] {
    activeCommand = "reduce";
    hg::Diagram d = hg::load_diagram(files.front());
    int before = d.num_points();
    hg::Diagram out = hg::reduce_to_pointed(d);
    if (!outPath.empty()) hg::save_diagram(out, outPath);
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"path", files.front()},
             {"pointsBefore", before},
             {"pointsAfter", out.num_points()},
             {"genus", out.genus}};
    if (!outPath.empty()) rec["out"] = outPath;
    emit_single(jsonMode, rec,
                {"points " + std::to_string(before) + " -> " + std::to_string(out.num_points()) +
                 ", genus " + std::to_string(out.genus)});
  });

  // ---- generators ----
  auto* cmdGenerators = app.add_subcommand("generators", "count Heegaard Floer generators");
  cmdGenerators->add_option("file", files, "diagram file")->required()->expected(1);
  common(cmdGenerators, false);
  cmdGenerators->callback([&] {
    activeCommand = "generators";
    hg::Diagram d = hg::load_diagram(files.front());
    hg::GeneratorCount g = hg::enumerate_generators(d);
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"path", files.front()},
             {"count", g.count.str()}};
    emit_single(jsonMode, rec, {"generators " + g.count.str()});
  });

  // ---- bounds ----
  auto* cmdBounds = app.add_subcommand("bounds", "entropy caps from intersection statistics");
  cmdBounds->add_option("file", files, "diagram file")->required()->expected(1);
  cmdBounds->add_option("--genus", genusValue, "fiber genus of the bounded classes")->required();
  cmdBounds->add_option("--sheets", sheets,
                        "also cap classes pulled back through a cover with this many sheets");
  common(cmdBounds, false);
  cmdBounds->callback([&] {
    activeCommand = "bounds";
    hg::Diagram d = hg::load_diagram(files.front());
    hg::require_valid(d);
    hg::IntersectionStats st = hg::intersection_stats(d);
    hg::HomologySummary h = hg::first_homology(d);
    std::optional<long long> degree, baseLength;
    if (cmdBounds->count("--sheets")) {
      degree = sheets;
      baseLength = hg::presentation_length(hg::u_beta_presentation(d));
    }
    hg::EntropyBoundReport rep = hg::entropy_bounds(st, h.bettiOne, genusValue, degree, baseLength);
    std::string line = "fiber genus " + std::to_string(genusValue);
    Json values = Json::object();
    auto put = [&](const char* name, const std::optional<double>& v) {
      if (!v) return;
      line += std::string(", ") + name + " " + fmt(*v);
      values[name] = *v;
    };
    put("withB", rep.boundWithB);
    put("fine", rep.boundFine);
    put("genus2", rep.boundGenus2);
    put("log3", rep.boundLog3);
    put("viaCover", rep.boundViaCover);
    put("best", rep.best);
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"path", files.front()},
             {"fiberGenus", genusValue},
             {"betti", h.bettiOne},
             {"kPerAlpha", st.alpha_counts},
             {"bounds", std::move(values)},
             {"flags",
              Json{{"fiberGenusAtLeastThree", rep.fiberGenusAtLeastThree},
                   {"fiberGenusExactlyTwo", rep.fiberGenusExactlyTwo},
                   {"allCurvesMeetThree", rep.allCurvesMeetThree}}}};
    emit_single(jsonMode, rec, {line});
  });

  // ---- tube ----
  auto* cmdTube = app.add_subcommand("tube", "complete hyperbolic tube metrics");
  cmdTube->add_option("--depth", depthValue, "tube depth r");
  cmdTube->add_option("--systole", systoleValue, "core geodesic length l");
  cmdTube->add_option("--volume", volumeValue, "tube volume");
  cmdTube->add_option("--wrist", wristValue, "wrist length 2*pi*sinh(r)");
  cmdTube->add_option("--angle", angleValue, "twist angle in [0, pi]");
  common(cmdTube, false);
  cmdTube->callback([&] {
    activeCommand = "tube";
    hg::TubeSpec spec;
    if (cmdTube->count("--depth")) spec.depth = depthValue;
    if (cmdTube->count("--systole")) spec.systole = systoleValue;
    if (cmdTube->count("--volume")) spec.volume = volumeValue;
    if (cmdTube->count("--wrist")) spec.wrist = wristValue;
    spec.angle = angleValue;
    hg::TubeShape shape = hg::tube_metrics(spec);
    double ball = hg::ball_volume(shape.depth);
    double vis = hg::visibility_radius(shape.depth);
    Json rec{{"schema", kSchema}, {"command", activeCommand},
             {"depth", shape.depth},   {"systole", shape.systole},
             {"angle", shape.angle},   {"volume", shape.volume},
             {"wrist", shape.wrist},   {"ballVolume", ball},
             {"visibilityRadius", vis}};
    emit_single(jsonMode, rec,
                {"depth " + fmt(shape.depth) + ", systole " + fmt(shape.systole) + ", angle " +
                 fmt(shape.angle) + ", volume " + fmt(shape.volume) + ", wrist " +
                 fmt(shape.wrist) + ", ball " + fmt(ball) + ", visibility " + fmt(vis)});
  });

  // ---- geom ----
  auto* cmdGeom = app.add_subcommand("geom", "entropy caps from a thick/thin profile");
  cmdGeom->add_option("--volw", volwValue, "thick-part volume")->required();
  cmdGeom->add_option("--wrists", wristsValue, "tube wrist lengths")->delimiter(',');
  cmdGeom->add_option("--tube-volumes", tubeVolumesValue, "tube volumes, aligned with --wrists")
      ->delimiter(',');
  cmdGeom->add_option("--total-vol", totalVolValue, "total hyperbolic volume");
  cmdGeom->add_option("--systole", systoleValue, "systole");
  cmdGeom->add_option("--genus", genusValue, "genus of the assembled diagram");
  cmdGeom->add_option("--eps", epsValue, "thick/thin cutoff in (0, 1]");
  cmdGeom->add_option("--mu", muValue, "Margulis number");
  cmdGeom->add_option("--Dmu", dmuValue, "entropy-per-volume density D(mu)");
  common(cmdGeom, false);
  cmdGeom->callback([&] {
    activeCommand = "geom";
    hg::GeometricProfile p;
    p.volW = volwValue;
    p.tubeWrists = wristsValue;
    if (cmdGeom->count("--tube-volumes")) p.tubeVolumes = tubeVolumesValue;
    if (cmdGeom->count("--total-vol")) p.totalVol = totalVolValue;
    if (cmdGeom->count("--systole")) p.systole = systoleValue;
    if (cmdGeom->count("--genus")) p.genus = genusValue;
    p.eps = epsValue;
    p.mu = muValue;
    if (cmdGeom->count("--Dmu")) p.Dmu = dmuValue;
    hg::GeometricBoundReport r = hg::geometric_entropy_bounds(p);
    std::vector<std::string> lines;
    Json rec{{"schema", kSchema}, {"command", activeCommand}};
    auto put = [&](const char* label, const char* key, double v) {
      lines.push_back(std::string(label) + " " + fmt(v));
      rec[key] = v;
    };
    put("heegaard length cap", "heegaardLengthCap", r.heegaardLengthCap);
    if (r.volSysEntropyCap) put("vol-sys entropy cap", "volSysEntropyCap", *r.volSysEntropyCap);
    if (r.assembledEntropyCap)
      put("assembled entropy cap", "assembledEntropyCap", *r.assembledEntropyCap);
    if (r.wristSumCap) put("wrist-sum cap", "wristSumCap", *r.wristSumCap);
    put("tube volume floor", "tubeVolumeFloor", r.tubeVolumeFloor);
    put("bicollar margin", "bicollarMargin", r.bicollarMargin);
    if (!r.tubeCurveCaps.empty()) {
      std::string caps;
      for (double c : r.tubeCurveCaps) caps += (caps.empty() ? "" : " ") + fmt(c);
      lines.push_back("tube curve caps " + caps);
      rec["tubeCurveCaps"] = r.tubeCurveCaps;
    }
    put("thick curve cap", "thickCurveCap", r.thickCurveCap);
    put("genus cap", "genusCap", r.genusCap);
    if (r.arithmeticEntropyConstant)
      put("arithmetic entropy constant", "arithmeticEntropyConstant",
          *r.arithmeticEntropyConstant);
    emit_single(jsonMode, rec, lines);
  });

  // ---- penner ----
  auto* cmdPenner = app.add_subcommand("penner", "twist family homology floor");
  cmdPenner->add_option("--n", nValue, "twist power")->required();
  cmdPenner->add_option("--genus", genusValue, "surface genus")->default_val(2);
  cmdPenner->add_option("--asympt", asymptValue,
                        "wrist and tube-volume limits for the asymptotic models")
      ->delimiter(',');
  common(cmdPenner, false);
  cmdPenner->callback([&] {
    activeCommand = "penner";
    std::optional<std::pair<double, double>> asympt;
    if (!asymptValue.empty()) {
      if (asymptValue.size() != 2)
        throw CLI::ValidationError("--asympt needs exactly two values");
      asympt = std::make_pair(asymptValue[0], asymptValue[1]);
    }
    hg::PennerReport r = hg::penner_family(nValue, genusValue, asympt);
    long long inner = static_cast<long long>(nValue) * nValue + 4LL * nValue;
    std::vector<std::string> lines;
    lines.push_back("spectral radius (" + std::to_string(nValue + 2) + "+√" +
                    std::to_string(inner) + ")/2 ≈ " + fmt(r.spectralRadius) +
                    ", entropy floor " + fmt(r.entropyFloor));
    Json matrix = Json::array();
    for (int i = 0; i < r.homologyMatrix.rows(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < r.homologyMatrix.cols(); ++j)
        row.push_back(static_cast<long long>(r.homologyMatrix.at(i, j)));
      matrix.push_back(std::move(row));
    }
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"n", r.n},
             {"genus", r.genus},
             {"matrix", std::move(matrix)},
             {"eigenLarge", r.eigenLarge},
             {"eigenSmall", r.eigenSmall},
             {"spectralRadius", r.spectralRadius},
             {"entropyFloor", r.entropyFloor}};
    if (r.asymptotics) {
      lines.push_back("wrist model " + fmt(r.asymptotics->wristModel) + ", systole model " +
                      fmt(r.asymptotics->systoleModel));
      rec["asymptotics"] = Json{{"wristModel", r.asymptotics->wristModel},
                                {"systoleModel", r.asymptotics->systoleModel}};
    }
    emit_single(jsonMode, rec, lines);
  });

  // ---- random ----
  auto* cmdRandom = app.add_subcommand("random", "scrambled diagram from a seed");
  cmdRandom->add_option("--genus", genusValue, "genus")->required();
  cmdRandom->add_option("--points", pointsValue, "marked points")->default_val(1);
  cmdRandom->add_option("--n", nValue, "finger-move budget")->default_val(20);
  cmdRandom->add_option("--seed", seed, "random seed")->required();
  cmdRandom->add_option("--out", outPath, "write the diagram here");
  common(cmdRandom, false);
  cmdRandom->callback([&] {
    activeCommand = "random";
    hg::Diagram d = hg::random_diagram(genusValue, pointsValue, nValue, seed);
    hg::IntersectionStats st = hg::intersection_stats(d);
    if (!outPath.empty()) hg::save_diagram(d, outPath);
    Json rec{{"schema", kSchema},
             {"command", activeCommand},
             {"genus", d.genus},
             {"points", d.num_points()},
             {"budget", nValue},
             {"seed", seed},
             {"crossings", st.total},
             {"regions", d.regions.size()},
             {"diagram", hg::serialize_diagram(d)}};
    if (!outPath.empty()) rec["out"] = outPath;
    if (jsonMode) {
      std::cout << rec.dump(2) << "\n";
    } else if (!outPath.empty()) {
      std::cout << "genus " << d.genus << ", k=" << st.total << ", regions " << d.regions.size()
                << ", points " << d.num_points() << "\n";
    } else {
      std::cout << hg::serialize_diagram(d);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hg::Error& e) {
    if (jsonMode) {
      Json rec{{"schema", kSchema}, {"command", activeCommand}, {"error", e.what()}};
      std::cout << rec.dump(2) << "\n";
    }
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return rc;
}
