// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Tolerances, sample counts and time limits are pinned here on purpose;
// do not relax them to make a failing build pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

#include "quatmoeb/quatmoeb.hpp"
#include "quatmoeb/random.hpp"

using namespace quatmoeb;
using ts::Mat;
using ts::Q;
using ts::S;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

S relDev(S got, S want) {
  return std::abs(got - want) / std::max({S(1), std::abs(got), std::abs(want)});
}

struct Golden {
  const char* name;
  Mat matrix;
  DynamicalType type;
  S r, theta, s, phi;  // construction parameters, feed the closed forms
};

std::vector<Golden> goldenTable() {
  return {
      {"identity", Mat::identity(), DynamicalType::Identity, 1, 0, 1, 0},
      {"translation", Mat{1, 1, 0, 1}, DynamicalType::SimpleParabolic, 1, 0, 1,
       0},
      {"stretch", ts::formD(2, 0, 1, 0), DynamicalType::Stretch, 2, 0, 1, 0},
      {"2-rotation-hyperbolic", ts::formD(2, ts::kPi / 2, 1, 0),
       DynamicalType::TwoRotationHyperbolic, 2, ts::kPi / 2, 1, 0},
      {"2-rotation-elliptic", ts::formD(1, ts::kPi / 2, 1, ts::kPi / 3),
       DynamicalType::TwoRotationElliptic, 1, ts::kPi / 2, 1, ts::kPi / 3},
      {"1-rotation-hyperbolic", ts::formD(2, ts::kPi / 3, 1, ts::kPi / 3),
       DynamicalType::OneRotationHyperbolic, 2, ts::kPi / 3, 1, ts::kPi / 3},
      {"1-rotation-elliptic", ts::formD(1, ts::kPi / 3, 1, ts::kPi / 3),
       DynamicalType::OneRotationElliptic, 1, ts::kPi / 3, 1, ts::kPi / 3},
      {"1-rotation-parabolic", ts::formT(1, ts::kPi / 3),
       DynamicalType::OneRotationParabolic, 1, ts::kPi / 3, 1, ts::kPi / 3},
  };
}

// 1. The eight pinned representatives classify to their labels and their
//    invariants match the closed forms to 1e-9 relative.
void criterion1() {
  Timer timer;
  bool ok = true;
  S worst = 0;
  std::string badName;
  for (const Golden& g : goldenTable()) {
    const auto rep = classify(g.matrix);
    if (rep.type != g.type) {
      ok = false;
      badName = std::string(g.name) + " -> " + std::string(toString(rep.type));
      break;
    }
    const ts::CTriple want = ts::closedFormC(g.r, g.theta, g.s, g.phi);
    const S dev = std::max({relDev(rep.invariants.c1, want.c1),
                            relDev(rep.invariants.c2, want.c2),
                            relDev(rep.invariants.c3, want.c3)});
    worst = std::max(worst, dev);
  }
  ok = ok && worst <= 1e-9;
  std::ostringstream os;
  if (badName.empty()) {
    os << "8/8 types, worst invariant rel dev " << fmt(worst) << " (tol 1e-9, "
       << fmt(timer.seconds()) << " s)";
  } else {
    os << "type mismatch: " << badName;
  }
  report(1, "pinned classification table", ok, os.str());
}

// 2. Polynomial route vs eigen-structure route on 10,000 seeded random
//    non-borderline matrices: zero disagreements, under 10 s.
void criterion2() {
  Timer timer;
  Rng rng(901);
  const int n = 10000;
  int disagree = 0;
  for (int t = 0; t < n; ++t) {
    const Mat m = randomNonBorderline<S>(rng);
    if (classify(m).type != eigenStructureOracle(m)) ++disagree;
  }
  const double sec = timer.seconds();
  const bool ok = disagree == 0 && sec < 10.0;
  std::ostringstream os;
  os << n << " samples, " << disagree << " disagreements, " << fmt(sec)
     << " s (limit 10 s)";
  report(2, "dual-route agreement", ok, os.str());
}

// 3. Dynamical type, centralizer class and invariants (1e-7 relative) are
//    invariant under conjugation, 5,000 pairs, under 10 s.
void criterion3() {
  Timer timer;
  Rng rng(903);
  const int n = 5000;
  int bad = 0;
  S worst = 0;
  for (int t = 0; t < n; ++t) {
    const Mat a = randomNonBorderline<S>(rng);
    const Mat s = randomConjugator<S>(rng);
    const Mat b = ts::conjugateBy(s, a);
    const auto ra = classify(a);
    const auto rb = classify(b);
    const S dev = std::max({relDev(ra.invariants.c1, rb.invariants.c1),
                            relDev(ra.invariants.c2, rb.invariants.c2),
                            relDev(ra.invariants.c3, rb.invariants.c3)});
    worst = std::max(worst, dev);
    if (ra.type != rb.type || dev > 1e-7 || zClassOf(a) != zClassOf(b)) ++bad;
  }
  const double sec = timer.seconds();
  const bool ok = bad == 0 && sec < 10.0;
  std::ostringstream os;
  os << n << " pairs, " << bad << " violations, worst invariant rel dev "
     << fmt(worst) << " (tol 1e-7), " << fmt(sec) << " s (limit 10 s)";
  report(3, "conjugation invariance", ok, os.str());
}

// 4. Characteristic coefficients of 100,000 random invertible matrices are
//    numerically real (1e-10 relative to max(1, ||A_C||^4)) with positive
//    constant term, under 30 s.
void criterion4() {
  Timer timer;
  Rng rng(904);
  const int n = 100000;
  S worstIm = 0;
  int badDet = 0;
  for (int t = 0; t < n; ++t) {
    const Mat m = randomInvertible<S>(rng);
    const CMat4<S> em = embed(m);
    const auto raw = rawCharPoly(em);
    const S fro = em.norm();
    const S scale = std::max(S(1), fro * fro * fro * fro);
    for (const auto& c : raw) {
      worstIm = std::max(worstIm, std::abs(c.imag()) / scale);
    }
    if (!(raw[0].real() > 0)) ++badDet;
  }
  const double sec = timer.seconds();
  const bool ok = worstIm <= 1e-10 && badDet == 0 && sec < 30.0;
  std::ostringstream os;
  os << n << " samples, worst |Im coeff| " << fmt(worstIm)
     << " (tol 1e-10), " << badDet << " nonpositive determinants, " << fmt(sec)
     << " s (limit 30 s)";
  report(4, "coefficient reality and positivity", ok, os.str());
}

// 5. Normal form of 10,000 random invertible matrices: conjugation residual
//    within 1e-8 ||A||, canonical shape one of the three templates, angles
//    in [0, pi], under 30 s.
void criterion5() {
  Timer timer;
  Rng rng(905);
  const int n = 10000;
  int bad = 0;
  S worstRes = 0;
  for (int t = 0; t < n; ++t) {
    const Mat a = randomInvertible<S>(rng);
    try {
      const auto nf = normalForm(a);
      const S res =
          frobeniusNorm(nf.conjugator * a * nf.conjugatorInverse - nf.canonical) /
          frobeniusNorm(a);
      worstRes = std::max(worstRes, res);
      const bool offDiagOne = nf.canonical.b == Q(1);
      const bool offDiagZero = norm(nf.canonical.b) == 0;
      const bool shapeOk =
          norm(nf.canonical.c) == 0 &&
          (nf.kind == NormalFormKind::Translation ? offDiagOne : offDiagZero);
      const bool anglesOk = nf.lambda1.imag() >= 0 && nf.lambda2.imag() >= 0;
      if (res > 1e-8 || !shapeOk || !anglesOk) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  const double sec = timer.seconds();
  const bool ok = bad == 0 && sec < 30.0;
  std::ostringstream os;
  os << n << " samples, " << bad << " violations, worst residual "
     << fmt(worstRes) << " x||A|| (tol 1e-8), " << fmt(sec)
     << " s (limit 30 s)";
  report(5, "normal form reconstruction", ok, os.str());
}

// 6. The complex embedding is multiplicative to 1e-12 relative on 10,000
//    random pairs.
void criterion6() {
  Timer timer;
  Rng rng(906);
  const int n = 10000;
  S worst = 0;
  for (int t = 0; t < n; ++t) {
    const Mat a = randomMatrix<S>(rng);
    const Mat b = randomMatrix<S>(rng);
    const CMat4<S> lhs = embed(a * b);
    const CMat4<S> rhs = embed(a) * embed(b);
    worst = std::max(worst, (lhs - rhs).norm() / std::max(S(1), rhs.norm()));
  }
  const double sec = timer.seconds();
  const bool ok = worst <= 1e-12;
  std::ostringstream os;
  os << n << " pairs, worst rel dev " << fmt(worst) << " (tol 1e-12), "
     << fmt(sec) << " s";
  report(6, "embedding homomorphism", ok, os.str());
}

// 7. Boundary action: composition law, generator involutions, two-generator
//    composition and fixed-point consistency, 1,000 instances each.  All
//    comparisons in the chordal metric, which carries the 1/(1+|Z|^2)
//    weighting of the pinned pointwise tolerances.
void criterion7() {
  Timer timer;
  Rng rng(907);
  int badHom = 0, badInv = 0, badComp = 0, badFix = 0;

  for (int t = 0; t < 1000; ++t) {
    const Mat a = randomInvertible<S>(rng);
    const Mat b = randomInvertible<S>(rng);
    const BoundaryPoint<S> z =
        (t % 25 == 0) ? BoundaryPoint<S>::infinityPoint()
                      : BoundaryPoint<S>::at(randomQuaternion<S>(rng));
    if (chordal(apply(a * b, z), apply(a, apply(b, z))) > 2e-8) ++badHom;
  }

  for (int t = 0; t < 1000; ++t) {
    const BoundaryPoint<S> z = BoundaryPoint<S>::at(randomQuaternion<S>(rng));
    if (t % 2 == 0) {
      const Inversion<S> s{randomQuaternion<S>(rng),
                           randomScalar(rng, S(0.2), S(2.2))};
      if (chordal(apply(s, apply(s, z)), z) > 2e-9) ++badInv;
    } else {
      const Reflection<S> r{normalized(randomNonzeroQuaternion<S>(rng)),
                            randomQuaternion<S>(rng)};
      if (chordal(apply(r, apply(r, z)), z) > 2e-9) ++badInv;
    }
  }

  for (int t = 0; t < 1000; ++t) {
    const Inversion<S> s{randomQuaternion<S>(rng),
                         randomScalar(rng, S(0.2), S(2.2))};
    const Reflection<S> r{normalized(randomNonzeroQuaternion<S>(rng)),
                          randomQuaternion<S>(rng)};
    const BoundaryPoint<S> z = BoundaryPoint<S>::at(randomQuaternion<S>(rng));
    bool pairOk = true;
    switch (t % 4) {
      case 0: {
        const Inversion<S> s2{randomQuaternion<S>(rng),
                              randomScalar(rng, S(0.2), S(2.2))};
        pairOk = chordal(apply(composeInversions(s, s2), z),
                         apply(s2, apply(s, z))) <= 2e-8;
        break;
      }
      case 1: {
        const Reflection<S> r2{normalized(randomNonzeroQuaternion<S>(rng)),
                               randomQuaternion<S>(rng)};
        pairOk = chordal(apply(composeInversions(r, r2), z),
                         apply(r2, apply(r, z))) <= 2e-8;
        break;
      }
      case 2:
        pairOk = chordal(apply(composeInversions(s, r), z),
                         apply(r, apply(s, z))) <= 2e-8;
        break;
      default:
        pairOk = chordal(apply(composeInversions(r, s), z),
                         apply(s, apply(r, z))) <= 2e-8;
    }
    if (!pairOk) ++badComp;
  }

  for (int t = 0; t < 1000; ++t) {
    const Mat m = randomInvertible<S>(rng);
    for (const auto& p : fixedPoints(m)) {
      if (chordal(apply(m, p), p) > 2e-7) ++badFix;
    }
  }

  const double sec = timer.seconds();
  const bool ok = badHom == 0 && badInv == 0 && badComp == 0 && badFix == 0;
  std::ostringstream os;
  os << "1000 each: composition " << badHom << ", involution " << badInv
     << ", generator pairs " << badComp << ", fixed points " << badFix
     << " violations, " << fmt(sec) << " s";
  report(7, "boundary action laws", ok, os.str());
}

// 8. The seven centralizer representatives produce seven distinct classes,
//    sampled centralizer elements commute (tol 1e-9, 100 seeds each), and
//    the pinned dynamical representatives map to the documented classes.
void criterion8() {
  Timer timer;
  const ZClassType all[] = {
      ZClassType::Scalar,          ZClassType::RealDiagDistinct,
      ZClassType::RealParabolic,   ZClassType::ComplexParabolic,
      ZClassType::ComplexDiagDistinct, ZClassType::MixedDiag,
      ZClassType::ComplexScalar,
  };
  std::set<ZClassType> seen;
  bool roundTrip = true;
  int badCommute = 0;
  for (ZClassType t : all) {
    const Mat rep = representative<S>(t);
    const ZClassType got = zClassOf(rep);
    seen.insert(got);
    roundTrip = roundTrip && got == t;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      if (!inCentralizer(rep, sampleCentralizer<S>(t, seed), S(1e-9))) {
        ++badCommute;
      }
    }
  }

  const std::pair<Mat, ZClassType> mapping[] = {
      {Mat::identity(), ZClassType::Scalar},
      {ts::formD(2, 0, 1, 0), ZClassType::RealDiagDistinct},
      {Mat{1, 1, 0, 1}, ZClassType::RealParabolic},
      {ts::formT(1, ts::kPi / 3), ZClassType::ComplexParabolic},
      {ts::formD(1, ts::kPi / 2, 1, ts::kPi / 3), ZClassType::ComplexDiagDistinct},
      {ts::formD(2, ts::kPi / 3, 1, ts::kPi / 3), ZClassType::ComplexDiagDistinct},
      {ts::formD(2, ts::kPi / 2, 1, 0), ZClassType::MixedDiag},
      {ts::formD(1, ts::kPi / 3, 1, ts::kPi / 3), ZClassType::ComplexScalar},
  };
  int badMap = 0;
  for (const auto& [m, want] : mapping) {
    if (zClassOf(m) != want) ++badMap;
  }

  const double sec = timer.seconds();
  const bool ok =
      seen.size() == 7 && roundTrip && badCommute == 0 && badMap == 0;
  std::ostringstream os;
  os << seen.size() << "/7 distinct classes, " << badCommute
     << " commutation violations (700 samples, tol 1e-9), " << badMap
     << " mapping mismatches, " << fmt(sec) << " s";
  report(8, "centralizer classes", ok, os.str());
}

// 9. At c1 < 4 the rotation/parabolic split comes from the annihilation test
//    alone, including the negative-trace angle 2pi/3.
void criterion9() {
  Timer timer;
  const S ang = 2 * ts::kPi / 3;
  const Mat diagonal = ts::formD(1, ang, 1, ang);
  const Mat block = ts::formT(1, ang);

  const bool annDiag = minimalPolyEqualsCharPoly(diagonal);
  const bool annBlock = minimalPolyEqualsCharPoly(block);
  const auto repDiag = classify(diagonal);
  const auto repBlock = classify(block);
  const S dev = std::max({relDev(repDiag.invariants.c1, repBlock.invariants.c1),
                          relDev(repDiag.invariants.c2, repBlock.invariants.c2),
                          relDev(repDiag.invariants.c3, repBlock.invariants.c3)});

  const bool ok = !annDiag && annBlock &&
                  repDiag.type == DynamicalType::OneRotationElliptic &&
                  repBlock.type == DynamicalType::OneRotationParabolic &&
                  repDiag.invariants.c1 < 4 && dev <= 1e-9;
  std::ostringstream os;
  os << "shared invariants (rel dev " << fmt(dev) << "), types "
     << toString(repDiag.type) << " / " << toString(repBlock.type) << ", "
     << fmt(timer.seconds()) << " s";
  report(9, "annihilation tiebreak", ok, os.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("acceptance: %d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
