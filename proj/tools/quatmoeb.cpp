// quatmoeb: classify and normalize 2x2 quaternionic matrices acting as
// Moebius transformations on the boundary of hyperbolic 5-space.
//
// The positional input argument is inline JSON (recognized by a leading
// '['), a path to a JSON file, or "-" for stdin; when omitted, stdin is
// read.  The document is a single matrix [[a, b], [c, d]] -- entries are a
// number, [re, im], or [w, x, y, z] -- or an array of such matrices
// (batch).  A document that parses as one matrix is treated as one matrix.
// Output is one line per input matrix (JSON-lines in --format json); a bad
// batch item is reported on its own line without aborting the rest.
//
// Exit codes: 0 ok, 2 malformed input, 3 singular or numerically degenerate
// matrix, 4 cross-check disagreement.  When a batch mixes failures the most
// severe code wins (2 over 3 over 4).

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quatmoeb/json_io.hpp"
#include "quatmoeb/quatmoeb.hpp"

namespace {

using Scalar = double;
using Mat = quatmoeb::QMat2<Scalar>;
using quatmoeb::Json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitDisagree = 4;

int severity(int code) {
  switch (code) {
    case kExitParse: return 3;
    case kExitNumeric: return 2;
    case kExitDisagree: return 1;
    default: return 0;
  }
}

void mergeCode(int& worst, int code) {
  if (severity(code) > severity(worst)) worst = code;
}

struct Options {
  double tol = quatmoeb::kDefaultTol<Scalar>;
  std::string format = "text";
  bool degrees = false;

  bool json() const { return format == "json"; }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quatText(const quatmoeb::Quaternion<Scalar>& q) {
  return "[" + num(q.w) + ", " + num(q.x) + ", " + num(q.y) + ", " +
         num(q.z) + "]";
}

std::string pointText(const quatmoeb::BoundaryPoint<Scalar>& p) {
  return p.infinity ? "inf" : quatText(p.value);
}

quatmoeb::BoundaryPoint<Scalar> parsePoint(const std::string& text) {
  if (text == "inf" || text == "infinity") {
    return quatmoeb::BoundaryPoint<Scalar>::infinityPoint();
  }
  return quatmoeb::boundaryPointFromJson<Scalar>(Json::parse(text));
}

void reportError(const Options& opt, int code, const std::string& what) {
  if (opt.json()) {
    std::cout << Json{{"error", what}, {"code", code}}.dump() << "\n";
  } else {
    std::cout << "error: " << what << "\n";
  }
}

std::optional<Mat> tryMatrix(const Json& j) {
  try {
    return quatmoeb::matrixFromJson<Scalar>(j);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

/// Resolve the positional argument to the raw input text: inline JSON when
/// it starts with '[', stdin for "-" or no argument, a file path otherwise.
std::optional<std::string> loadInput(const std::optional<std::string>& arg,
                                     const Options& opt) {
  if (!arg || *arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  const auto firstGlyph = arg->find_first_not_of(" \t\r\n");
  if (firstGlyph != std::string::npos && (*arg)[firstGlyph] == '[') {
    return *arg;
  }
  std::ifstream file(*arg);
  if (!file) {
    reportError(opt, kExitParse, "cannot open input file: " + *arg);
    return std::nullopt;
  }
  return std::string(std::istreambuf_iterator<char>(file), {});
}

struct ItemOutput {
  Json json;
  std::string text;
};

/// Run `handler` once per input matrix, printing one output line per item.
/// Returns the worst exit code across items.
int processMatrices(const std::optional<std::string>& positional,
                    const Options& opt,
                    const std::function<ItemOutput(const Mat&)>& handler) {
  const std::optional<std::string> text = loadInput(positional, opt);
  if (!text) return kExitParse;

  Json doc;
  try {
    doc = Json::parse(*text);
  } catch (const Json::parse_error& e) {
    reportError(opt, kExitParse, e.what());
    return kExitParse;
  }

  std::vector<Json> items;
  if (tryMatrix(doc)) {
    items.push_back(doc);
  } else if (doc.is_array()) {
    items.assign(doc.begin(), doc.end());
  } else {
    reportError(opt, kExitParse,
                "input must be a matrix [[a,b],[c,d]] or an array of them");
    return kExitParse;
  }

  int worst = kExitOk;
  for (const Json& item : items) {
    int code = kExitOk;
    try {
      const ItemOutput out = handler(quatmoeb::matrixFromJson<Scalar>(item));
      std::cout << (opt.json() ? out.json.dump() : out.text) << "\n";
    } catch (const Json::exception& e) {
      code = kExitParse;
      reportError(opt, code, e.what());
    } catch (const std::invalid_argument& e) {
      code = kExitParse;
      reportError(opt, code, e.what());
    } catch (const std::exception& e) {
      code = kExitNumeric;
      reportError(opt, code, e.what());
    }
    mergeCode(worst, code);
  }
  return worst;
}

ItemOutput classifyItem(const Mat& m, const Options& opt) {
  const auto report = quatmoeb::classify(m, opt.tol);
  const double f = opt.degrees ? 45.0 / std::atan(1.0) : 1.0;
  std::string text = "type=" + std::string(toString(report.type)) +
                     " borderline=" + (report.borderline ? "true" : "false") +
                     " c1=" + num(report.invariants.c1) +
                     " c2=" + num(report.invariants.c2) +
                     " c3=" + num(report.invariants.c3) +
                     " r=" + num(report.parameters.r) +
                     " theta=" + num(f * report.parameters.theta) +
                     " s=" + num(report.parameters.s) +
                     " phi=" + num(f * report.parameters.phi);
  return {quatmoeb::toJson(report, opt.degrees), std::move(text)};
}

ItemOutput normalFormItem(const Mat& m, const Options& opt) {
  const auto nf = quatmoeb::normalForm(m, opt.tol);
  std::string text = "kind=" + std::string(toString(nf.kind)) +
                     " lambda1=[" + num(nf.lambda1.real()) + ", " +
                     num(nf.lambda1.imag()) + "]" + " lambda2=[" +
                     num(nf.lambda2.real()) + ", " + num(nf.lambda2.imag()) +
                     "]" + " residual=" + num(nf.residual) +
                     " canonical=" + quatmoeb::toJson(nf.canonical).dump() +
                     " conjugator=" + quatmoeb::toJson(nf.conjugator).dump();
  return {quatmoeb::toJson(nf), std::move(text)};
}

ItemOutput zclassItem(const Mat& m, const Options& opt) {
  const auto z = quatmoeb::zClassOf(m, opt.tol);
  Json j{{"zclass", std::string(toString(z))},
         {"label", std::string(quatmoeb::romanLabel(z))}};
  std::string text = "zclass=" + std::string(toString(z)) +
                     " label=" + std::string(quatmoeb::romanLabel(z));
  return {std::move(j), std::move(text)};
}

ItemOutput fixedPointsItem(const Mat& m, const Options& opt) {
  const auto pts = quatmoeb::fixedPoints(m, opt.tol);
  Json arr = Json::array();
  std::string text = "fixed_points=";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    arr.push_back(quatmoeb::toJson(pts[i]));
    if (i) text += "; ";
    text += pointText(pts[i]);
  }
  return {Json{{"fixed_points", arr}}, std::move(text)};
}

int runCheck(std::uint64_t seed, int n, const Options& opt) {
  quatmoeb::Rng rng(seed);
  int disagreements = 0;
  Json firstBad;
  std::string firstBadText;
  for (int i = 0; i < n; ++i) {
    const Mat m = quatmoeb::randomNonBorderline<Scalar>(rng);
    const auto fromInvariants = quatmoeb::classify(m, opt.tol).type;
    const auto fromEigen = quatmoeb::eigenStructureOracle(m, opt.tol);
    if (fromInvariants != fromEigen) {
      ++disagreements;
      if (disagreements == 1) {
        firstBad = Json{{"matrix", quatmoeb::toJson(m)},
                        {"classify", std::string(toString(fromInvariants))},
                        {"oracle", std::string(toString(fromEigen))}};
        firstBadText = "first_disagreement: classify=" +
                       std::string(toString(fromInvariants)) +
                       " oracle=" + std::string(toString(fromEigen)) +
                       " matrix=" + quatmoeb::toJson(m).dump();
      }
    }
  }
  const int agree = n - disagreements;
  if (opt.json()) {
    Json j{{"checked", n}, {"agree", agree}, {"disagreements", disagreements}};
    if (disagreements > 0) j["first_disagreement"] = firstBad;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << agree << "/" << n << " agree\n";
    if (disagreements > 0) std::cout << firstBadText << "\n";
  }
  return disagreements == 0 ? kExitOk : kExitDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Classify 2x2 quaternionic matrices as isometries of hyperbolic "
      "5-space: conjugacy invariants, dynamical type, normal form, fixed "
      "points, Moebius action, and centralizer class."};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol,
                 "numerical tolerance (relative to input scale)")
      ->envname("QUATMOEB_TOL")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--degrees", opt.degrees, "report angles in degrees");

  std::optional<std::string> inputArg;
  const auto addInputArg = [&](CLI::App* sub) {
    sub->add_option("input", inputArg,
                    "inline JSON, a file path, or - for stdin; the document "
                    "is one matrix [[a,b],[c,d]] or an array of matrices");
  };

  auto* cmdClassify = app.add_subcommand(
      "classify", "dynamical type and conjugacy invariants");
  addInputArg(cmdClassify);

  auto* cmdNormal = app.add_subcommand(
      "normal-form", "canonical conjugacy representative and conjugator");
  addInputArg(cmdNormal);

  auto* cmdZclass =
      app.add_subcommand("zclass", "centralizer conjugacy class");
  addInputArg(cmdZclass);

  auto* cmdFixed =
      app.add_subcommand("fixed-points", "boundary fixed points");
  addInputArg(cmdFixed);

  auto* cmdAct = app.add_subcommand(
      "act", "apply the Moebius transformation to a boundary point");
  addInputArg(cmdAct);
  std::string pointArg;
  cmdAct->add_option("--point", pointArg,
                     "boundary point: inf, number, [re,im], or [w,x,y,z]")
      ->required();

  auto* cmdOrbit =
      app.add_subcommand("orbit", "forward orbit of a boundary point");
  addInputArg(cmdOrbit);
  std::string orbitPointArg;
  int orbitSteps = 10;
  cmdOrbit
      ->add_option("--point", orbitPointArg,
                   "seed boundary point: inf, number, [re,im], or [w,x,y,z]")
      ->required();
  cmdOrbit->add_option("--n", orbitSteps, "number of iterations")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* cmdCheck = app.add_subcommand(
      "check", "cross-check the invariant classification against the "
               "eigenstructure of random matrices");
  int checkCount = 1000;
  std::uint64_t checkSeed = 12345;
  cmdCheck->add_option("--n", checkCount, "number of random matrices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmdCheck->add_option("--seed", checkSeed, "random seed")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (app.got_subcommand(cmdClassify)) {
      return processMatrices(inputArg, opt,
                             [&](const Mat& m) { return classifyItem(m, opt); });
    }
    if (app.got_subcommand(cmdNormal)) {
      return processMatrices(
          inputArg, opt, [&](const Mat& m) { return normalFormItem(m, opt); });
    }
    if (app.got_subcommand(cmdZclass)) {
      return processMatrices(inputArg, opt,
                             [&](const Mat& m) { return zclassItem(m, opt); });
    }
    if (app.got_subcommand(cmdFixed)) {
      return processMatrices(
          inputArg, opt, [&](const Mat& m) { return fixedPointsItem(m, opt); });
    }
    if (app.got_subcommand(cmdAct)) {
      const auto point = parsePoint(pointArg);
      return processMatrices(inputArg, opt, [&](const Mat& m) -> ItemOutput {
        quatmoeb::detail::throwIfSingular(m, opt.tol);
        const auto image = quatmoeb::apply(m, point, opt.tol);
        return {Json{{"point", quatmoeb::toJson(image)}},
                "point=" + pointText(image)};
      });
    }
    if (app.got_subcommand(cmdOrbit)) {
      const auto seed = parsePoint(orbitPointArg);
      return processMatrices(inputArg, opt, [&](const Mat& m) -> ItemOutput {
        quatmoeb::detail::throwIfSingular(m, opt.tol);
        const auto orb = quatmoeb::orbit(m, seed, orbitSteps, opt.tol);
        std::string text = "points=";
        for (std::size_t i = 0; i < orb.points.size(); ++i) {
          if (i) text += "; ";
          text += pointText(orb.points[i]);
        }
        text += " pole_passes=";
        for (std::size_t i = 0; i < orb.polePass.size(); ++i) {
          if (i) text += ",";
          text += std::to_string(orb.polePass[i]);
        }
        return {quatmoeb::toJson(orb), std::move(text)};
      });
    }
    if (app.got_subcommand(cmdCheck)) {
      return runCheck(checkSeed, checkCount, opt);
    }
  } catch (const Json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
