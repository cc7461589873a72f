#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <sstream>
#include <vector>

#include "quatmoeb/dynamical_type.hpp"
#include "quatmoeb/errors.hpp"
#include "quatmoeb/moebius.hpp"
#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/quaternion.hpp"

namespace quatmoeb {

namespace detail {

/// Eigenvalue-class merging happens at this floor even when the caller asks
/// for a tighter tol: a defective (Jordan) eigenvalue perturbed by roundoff
/// splits by about sqrt(machine epsilon), so reps closer than this cannot be
/// trusted as distinct.
template <typename Scalar>
Scalar classMergeTol(Scalar tol) {
  return std::max(tol, Scalar(1e-6));
}

template <typename Scalar>
std::complex<Scalar> upperHalf(const std::complex<Scalar>& z) {
  return {z.real(), std::abs(z.imag())};
}

template <typename Scalar>
void throwIfSingular(const QMat2<Scalar>& m, Scalar tol) {
  try {
    (void)charPoly(embed(m), tol);
  } catch (const NonPositiveDeterminantError&) {
    throw SingularMatrixError(
        "matrix is numerically singular; it does not define a Moebius "
        "transformation");
  }
}

}  // namespace detail

/// The two quaternionic similarity classes of eigenvalues, each represented
/// by its unique complex element with non-negative imaginary part.  Sorted
/// by (modulus, angle); merged is set when the two classes coincide within
/// the merge tolerance and both reps then hold the common value.
template <typename Scalar>
struct SimilarityClasses {
  std::complex<Scalar> first, second;
  bool merged = false;
  Scalar separation = 0;  // distance between the raw reps before merging
};

namespace detail {

/// Pair the 4 eigenvalues of the complex embedding into 2 quaternionic
/// similarity classes.  Eigenvalues come in conjugate pairs; pairing by
/// nearest conjugate keeps the grouping stable under roundoff that breaks
/// exact conjugacy.
template <typename Scalar>
SimilarityClasses<Scalar> pairClasses(
    const Eigen::Matrix<std::complex<Scalar>, 4, 1>& evs, Scalar tol) {
  using C = std::complex<Scalar>;
  std::array<bool, 4> used{};
  std::array<C, 2> reps;
  for (int round = 0; round < 2; ++round) {
    int anchor = -1;
    for (int i = 0; i < 4; ++i) {
      if (used[i]) continue;
      if (anchor < 0 || std::abs(evs(i).imag()) > std::abs(evs(anchor).imag()))
        anchor = i;
    }
    int partner = -1;
    Scalar best = 0;
    for (int i = 0; i < 4; ++i) {
      if (used[i] || i == anchor) continue;
      const Scalar d = std::abs(evs(i) - std::conj(evs(anchor)));
      if (partner < 0 || d < best) {
        partner = i;
        best = d;
      }
    }
    used[anchor] = used[partner] = true;
    reps[round] = upperHalf(C(Scalar(0.5) * (evs(anchor) + std::conj(evs(partner)))));
  }

  SimilarityClasses<Scalar> out;
  out.separation = std::abs(reps[0] - reps[1]);
  const Scalar scale =
      std::max({Scalar(1), std::abs(reps[0]), std::abs(reps[1])});
  if (out.separation <= classMergeTol(tol) * scale) {
    const C mid = upperHalf(C(Scalar(0.5) * (reps[0] + reps[1])));
    out.first = out.second = mid;
    out.merged = true;
    return out;
  }
  // sort by modulus, then by angle for (numerically) equal moduli
  const Scalar r0 = std::abs(reps[0]), r1 = std::abs(reps[1]);
  bool swap;
  if (std::abs(r0 - r1) > classMergeTol(tol) * scale) {
    swap = r0 > r1;
  } else {
    swap = std::arg(reps[0]) > std::arg(reps[1]);
  }
  out.first = swap ? reps[1] : reps[0];
  out.second = swap ? reps[0] : reps[1];
  return out;
}

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 4, 1> embeddedEigenvalues(
    const QMat2<Scalar>& m) {
  Eigen::ComplexEigenSolver<CMat4<Scalar>> solver(embed(m), false);
  if (solver.info() != Eigen::Success) {
    throw DegenerateReductionError("eigenvalue iteration failed to converge");
  }
  return solver.eigenvalues();
}

/// Null-space data of embed(A) - lambda I via SVD.  Columns of basis beyond
/// `nullity` are meaningless.
template <typename Scalar>
struct NullSpace {
  int nullity = 0;
  CMat4<Scalar> basis;  // right singular vectors, smallest singular value last
  Eigen::Matrix<Scalar, 4, 1> singularValues;
};

/// Singular values of embed(m) - lambda I below tol * ||embed(m)|| count as
/// zero.  That works because the class reps fed in here are trace-accurate
/// (midpoints of conjugate-paired eigenvalues), so the shifted matrix sits
/// within a few ulps of one with an exact null space.
template <typename Scalar>
NullSpace<Scalar> eigenNullSpace(const QMat2<Scalar>& m,
                                 const std::complex<Scalar>& lambda,
                                 Scalar tol) {
  CMat4<Scalar> shifted = embed(m);
  const Scalar mnorm = shifted.norm();
  shifted -= lambda * CMat4<Scalar>::Identity();
  Eigen::JacobiSVD<CMat4<Scalar>> svd(shifted, Eigen::ComputeFullV);
  NullSpace<Scalar> out;
  out.basis = svd.matrixV();
  out.singularValues = svd.singularValues();
  const Scalar thresh = tol * mnorm;
  for (int i = 0; i < 4; ++i) {
    if (out.singularValues(i) <= thresh) ++out.nullity;
  }
  return out;
}

}  // namespace detail

/// Quaternionic similarity classes of the right eigenvalues of m, via the
/// eigenvalues of the complex embedding.
template <typename Scalar>
SimilarityClasses<Scalar> similarityClassReps(const QMat2<Scalar>& m,
                                              Scalar tol = kDefaultTol<Scalar>) {
  return detail::pairClasses(detail::embeddedEigenvalues(m), tol);
}

/// Right eigenpair A v = v lambda with lambda the complex class rep and v a
/// unit quaternionic vector.
template <typename Scalar>
struct Eigenpair {
  std::complex<Scalar> eigenvalue;
  QVec2<Scalar> vector;
};

namespace detail {

template <typename Scalar>
QVec2<Scalar> normalizedVector(const QVec2<Scalar>& v) {
  const Scalar n = std::sqrt(normSquared(v.u) + normSquared(v.w));
  return {v.u / n, v.w / n};
}

template <typename Scalar>
BoundaryPoint<Scalar> vectorToBoundary(const QVec2<Scalar>& v, Scalar tol) {
  const Scalar total = std::sqrt(normSquared(v.u) + normSquared(v.w));
  if (norm(v.w) <= tol * total) return BoundaryPoint<Scalar>::infinityPoint();
  return BoundaryPoint<Scalar>::at(v.u * inverse(v.w));
}

}  // namespace detail

/// Right eigenpairs of m, one or two per similarity class depending on the
/// eigenspace dimension.  For a real scalar matrix the eigenspace is all of
/// H^2; the two coordinate axes are returned as representatives.
template <typename Scalar>
std::vector<Eigenpair<Scalar>> rightEigenpairs(const QMat2<Scalar>& m,
                                               Scalar tol = kDefaultTol<Scalar>) {
  detail::throwIfSingular(m, tol);
  const SimilarityClasses<Scalar> classes = similarityClassReps(m, tol);
  std::vector<std::complex<Scalar>> lambdas{classes.first};
  if (!classes.merged) lambdas.push_back(classes.second);

  std::vector<Eigenpair<Scalar>> out;
  for (const auto& lambda : lambdas) {
    const auto ns = detail::eigenNullSpace(m, lambda, tol);
    if (ns.nullity >= 4) {
      out.push_back({lambda, {Quaternion<Scalar>(1), Quaternion<Scalar>(0)}});
      out.push_back({lambda, {Quaternion<Scalar>(0), Quaternion<Scalar>(1)}});
      continue;
    }
    // a real eigenvalue is doubled by the embedding: one quaternionic
    // eigenline spans two complex nullspace directions
    const bool realLambda =
        std::abs(lambda.imag()) <=
        detail::classMergeTol(tol) * std::max(Scalar(1), std::abs(lambda));
    const int qdim = realLambda ? ns.nullity / 2 : ns.nullity;
    const int count = std::max(1, std::min(qdim, 2));
    for (int i = 0; i < count; ++i) {
      const CVec4<Scalar> p = ns.basis.col(3 - i);
      out.push_back({lambda, detail::normalizedVector(unembedVector<Scalar>(p))});
    }
  }
  return out;
}

/// Boundary fixed points of the Moebius action of m, deduplicated.  These
/// are representatives: an isometry whose fixed set on the boundary is a
/// sphere of positive dimension (e.g. a real scalar matrix, which fixes
/// everything) still yields finitely many entries here.
template <typename Scalar>
std::vector<BoundaryPoint<Scalar>> fixedPoints(const QMat2<Scalar>& m,
                                               Scalar tol = kDefaultTol<Scalar>) {
  std::vector<BoundaryPoint<Scalar>> out;
  for (const auto& pair : rightEigenpairs(m, tol)) {
    const auto pt = detail::vectorToBoundary(pair.vector, tol);
    bool dup = false;
    for (const auto& q : out) {
      // dedupe at the class-merge tolerance: eigenvector roundoff is far
      // above tol for repeated eigenvalues
      if (samePoint(pt, q, detail::classMergeTol(tol))) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(pt);
  }
  return out;
}

/// Dynamical type read off the eigenvalue structure directly: moduli and
/// angles of the two similarity classes plus, for a repeated class, the
/// eigenspace dimension.  Independent of the characteristic-polynomial
/// route in classify(), which makes the two usable as cross-checks.
template <typename Scalar>
DynamicalType eigenStructureOracle(const QMat2<Scalar>& m,
                                   Scalar tol = kDefaultTol<Scalar>) {
  detail::throwIfSingular(m, tol);
  const SimilarityClasses<Scalar> classes = similarityClassReps(m, tol);
  const Scalar mergeTol = detail::classMergeTol(tol);

  if (!classes.merged) {
    const Scalar r = std::abs(classes.first), s = std::abs(classes.second);
    const Scalar scale = std::max({Scalar(1), r, s});
    if (std::abs(r - s) <= mergeTol * scale) {
      // equal moduli with distinct classes: rotation in two planes about a
      // fixed interior point
      return DynamicalType::TwoRotationElliptic;
    }
    // distinct moduli: translation along an axis, rotating the normal space
    // by theta - phi and theta + phi
    const Scalar theta = std::arg(classes.first);
    const Scalar phi = std::arg(classes.second);
    const Scalar pi = Scalar(4) * std::atan(Scalar(1));
    const bool diffZero = std::abs(theta - phi) <= mergeTol;
    const Scalar sum = theta + phi;
    const bool sumZero = sum <= mergeTol || sum >= Scalar(2) * pi - mergeTol;
    const int rotations = (diffZero ? 0 : 1) + (sumZero ? 0 : 1);
    switch (rotations) {
      case 0: return DynamicalType::Stretch;
      case 1: return DynamicalType::OneRotationHyperbolic;
      default: return DynamicalType::TwoRotationHyperbolic;
    }
  }

  const std::complex<Scalar> lambda = classes.first;
  const Scalar scale = std::max(Scalar(1), std::abs(lambda));
  const bool realClass = lambda.imag() <= mergeTol * scale;
  const auto ns = detail::eigenNullSpace(m, lambda, tol);
  if (realClass) {
    return ns.nullity >= 4 ? DynamicalType::Identity
                           : DynamicalType::SimpleParabolic;
  }
  return ns.nullity >= 2 ? DynamicalType::OneRotationElliptic
                         : DynamicalType::OneRotationParabolic;
}

/// Shape of the canonical conjugacy representative.
enum class NormalFormKind {
  Translation,      // [[lambda, 1], [0, lambda]]
  DiagonalEqualModulus,    // diag(r e^{i theta}, r e^{i phi})
  DiagonalDistinctModulus, // diag(r e^{i theta}, s e^{i phi}), r != s
};

constexpr std::string_view toString(NormalFormKind k) {
  switch (k) {
    case NormalFormKind::Translation:             return "T";
    case NormalFormKind::DiagonalEqualModulus:    return "D_equal_modulus";
    case NormalFormKind::DiagonalDistinctModulus: return "D_distinct_modulus";
  }
  return "unknown";
}

/// Canonical form C together with an explicit conjugator:
///   conjugator * A * conjugatorInverse = C up to `residual` (Frobenius).
/// lambda1/lambda2 are the complex diagonal entries of C (equal for kind
/// Translation, where the off-diagonal entry is exactly 1).
template <typename Scalar>
struct NormalForm {
  NormalFormKind kind;
  QMat2<Scalar> canonical;
  QMat2<Scalar> conjugator;
  QMat2<Scalar> conjugatorInverse;
  std::complex<Scalar> lambda1, lambda2;
  Scalar residual = 0;
};

namespace detail {

template <typename Scalar>
Quaternion<Scalar> asQuaternion(const std::complex<Scalar>& z) {
  return {z.real(), z.imag(), 0, 0};
}

/// Running conjugation state: factor accumulation with closed-form inverses
/// so the inverse is never obtained from a numerical solve.
template <typename Scalar>
struct ConjugationBuilder {
  QMat2<Scalar> s = QMat2<Scalar>::identity();
  QMat2<Scalar> sInv = QMat2<Scalar>::identity();

  void push(const QMat2<Scalar>& factor, const QMat2<Scalar>& factorInv) {
    s = factor * s;
    sInv = sInv * factorInv;
  }
};

/// Unit vector orthogonal to a unit quaternionic vector under the Hermitian
/// inner product <x, y> = conj(x_u) y_u + conj(x_w) y_w, chosen from the
/// better-conditioned of two branches.
template <typename Scalar>
QVec2<Scalar> orthogonalComplement(const QVec2<Scalar>& v) {
  const Scalar nu = norm(v.u), nw = norm(v.w);
  if (nu >= nw) {
    return {(Scalar(-1) / nu) * (v.u * conj(v.w)), Quaternion<Scalar>(nu)};
  }
  return {Quaternion<Scalar>(nw), (Scalar(-1) / nw) * (v.w * conj(v.u))};
}

/// Conjugate-transpose of a 2x2 unitary built from orthonormal columns.
template <typename Scalar>
QMat2<Scalar> unitaryFromColumns(const QVec2<Scalar>& c1, const QVec2<Scalar>& c2) {
  return {c1.u, c2.u, c1.w, c2.w};
}

template <typename Scalar>
QMat2<Scalar> conjugateTranspose(const QMat2<Scalar>& m) {
  return {conj(m.a), conj(m.c), conj(m.b), conj(m.d)};
}

/// Reduce A by (i) rotating an eigenvector for `mu` onto the first axis and
/// (ii) conjugating the resulting lower-right entry into the complex plane.
/// Afterwards the working matrix is upper triangular with complex diagonal
/// approximately (mu, rep(d)).
template <typename Scalar>
QMat2<Scalar> triangularize(const QMat2<Scalar>& a, const std::complex<Scalar>& mu,
                            Scalar tol, ConjugationBuilder<Scalar>& builder) {
  const auto ns = eigenNullSpace(a, mu, tol);
  const QVec2<Scalar> v = normalizedVector(unembedVector<Scalar>(ns.basis.col(3)));
  const QMat2<Scalar> p = unitaryFromColumns(v, orthogonalComplement(v));
  const QMat2<Scalar> pStar = conjugateTranspose(p);
  builder.push(pStar, p);
  QMat2<Scalar> w = pStar * a * p;

  const Quaternion<Scalar> u = conjugatorToComplex(w.d);
  const QMat2<Scalar> f{Quaternion<Scalar>(1), Quaternion<Scalar>(0),
                        Quaternion<Scalar>(0), u};
  const QMat2<Scalar> fInv{Quaternion<Scalar>(1), Quaternion<Scalar>(0),
                           Quaternion<Scalar>(0), conj(u)};
  builder.push(f, fInv);
  return f * w * fInv;
}

template <typename Scalar>
void pushShear(const Quaternion<Scalar>& z, ConjugationBuilder<Scalar>& builder,
               QMat2<Scalar>& w) {
  const QMat2<Scalar> e{Quaternion<Scalar>(1), -z, Quaternion<Scalar>(0),
                        Quaternion<Scalar>(1)};
  const QMat2<Scalar> eInv{Quaternion<Scalar>(1), z, Quaternion<Scalar>(0),
                           Quaternion<Scalar>(1)};
  builder.push(e, eInv);
  w = e * w * eInv;
}

template <typename Scalar>
void pushLeftScale(const Quaternion<Scalar>& g, ConjugationBuilder<Scalar>& builder,
                   QMat2<Scalar>& w) {
  const QMat2<Scalar> f{g, Quaternion<Scalar>(0), Quaternion<Scalar>(0),
                        Quaternion<Scalar>(1)};
  const QMat2<Scalar> fInv{inverse(g), Quaternion<Scalar>(0),
                           Quaternion<Scalar>(0), Quaternion<Scalar>(1)};
  builder.push(f, fInv);
  w = f * w * fInv;
}

template <typename Scalar>
NormalForm<Scalar> finishForm(const QMat2<Scalar>& a, NormalFormKind kind,
                              const std::complex<Scalar>& l1,
                              const std::complex<Scalar>& l2, bool offDiagonalOne,
                              const ConjugationBuilder<Scalar>& builder) {
  NormalForm<Scalar> out;
  out.kind = kind;
  out.lambda1 = l1;
  out.lambda2 = l2;
  out.canonical = {asQuaternion(l1),
                   Quaternion<Scalar>(offDiagonalOne ? 1 : 0),
                   Quaternion<Scalar>(0), asQuaternion(l2)};
  out.conjugator = builder.s;
  out.conjugatorInverse = builder.sInv;
  out.residual =
      frobeniusNorm(builder.s * a * builder.sInv - out.canonical);
  return out;
}

/// Reduction assuming two distinct similarity classes (mu, nu): triangular
/// form, then a Sylvester-type shear kills the off-diagonal entry.  The
/// shear z splits over H = C + C j as two decoupled complex divisions; both
/// denominators are nonzero precisely because the classes are distinct.
template <typename Scalar>
NormalForm<Scalar> reduceDistinct(const QMat2<Scalar>& a,
                                  const std::complex<Scalar>& mu,
                                  const std::complex<Scalar>& nu, Scalar tol) {
  ConjugationBuilder<Scalar> builder;
  QMat2<Scalar> w = triangularize(a, mu, tol, builder);

  const ComplexPair<Scalar> b = rightSplit(w.b);
  const std::complex<Scalar> z0 = -b.c0 / (mu - nu);
  const std::complex<Scalar> z1 = -b.c1 / (mu - std::conj(nu));
  pushShear(rightReassemble(ComplexPair<Scalar>{z0, z1}), builder, w);

  const Scalar r = std::abs(mu), s = std::abs(nu);
  const Scalar scale = std::max({Scalar(1), r, s});
  if (std::abs(r - s) <= classMergeTol(tol) * scale) {
    const Scalar m = Scalar(0.5) * (r + s);
    const std::complex<Scalar> l1 = std::polar(m, std::arg(mu));
    const std::complex<Scalar> l2 = std::polar(m, std::arg(nu));
    return finishForm(a, NormalFormKind::DiagonalEqualModulus, l1, l2, false,
                      builder);
  }
  return finishForm(a, NormalFormKind::DiagonalDistinctModulus, mu, nu, false,
                    builder);
}

/// Reduction assuming a single similarity class lambda.  preferDiagonal
/// selects which of the two possible shapes (diagonal vs translation block)
/// to aim for; the caller falls back to the other shape when the residual
/// rejects the first choice.
template <typename Scalar>
NormalForm<Scalar> reduceEqual(const QMat2<Scalar>& a,
                               const std::complex<Scalar>& lambda, Scalar tol,
                               bool preferDiagonal) {
  const Scalar scale = std::max(Scalar(1), std::abs(lambda));
  const bool realClass = lambda.imag() <= classMergeTol(tol) * scale;
  const std::complex<Scalar> lam =
      realClass ? std::complex<Scalar>(lambda.real(), 0) : lambda;

  if (preferDiagonal && realClass) {
    // real scalar candidate: no reduction step needed
    ConjugationBuilder<Scalar> builder;
    return finishForm(a, NormalFormKind::DiagonalEqualModulus, lam, lam, false,
                      builder);
  }

  ConjugationBuilder<Scalar> builder;
  QMat2<Scalar> w = triangularize(a, lam, tol, builder);

  if (!realClass) {
    // kill the j-half of the off-diagonal entry; the complex half has a
    // vanishing Sylvester denominator and stays
    const ComplexPair<Scalar> b = rightSplit(w.b);
    const std::complex<Scalar> z1 = -b.c1 / (lam - std::conj(lam));
    pushShear(rightReassemble(ComplexPair<Scalar>{std::complex<Scalar>(0), z1}),
              builder, w);
    if (preferDiagonal) {
      return finishForm(a, NormalFormKind::DiagonalEqualModulus, lam, lam,
                        false, builder);
    }
    const std::complex<Scalar> b0 = rightSplit(w.b).c0;
    if (std::abs(b0) <= std::numeric_limits<Scalar>::min()) {
      throw DivisionByZeroError(
          "off-diagonal entry vanished; no translation-shape reduction");
    }
    pushLeftScale(asQuaternion(std::complex<Scalar>(1) / b0), builder, w);
    return finishForm(a, NormalFormKind::Translation, lam, lam, true, builder);
  }

  // real class, translation shape
  pushLeftScale(inverse(w.b), builder, w);
  return finishForm(a, NormalFormKind::Translation, lam, lam, true, builder);
}

}  // namespace detail

/// Constructive conjugacy normal form.  Returns the canonical representative
/// of the conjugacy class of A together with the conjugator realizing it.
/// Throws SingularMatrixError for (numerically) singular input and
/// DegenerateReductionError if no candidate reduction reproduces A within
/// tolerance, which indicates an input too ill-conditioned to resolve.
template <typename Scalar>
NormalForm<Scalar> normalForm(const QMat2<Scalar>& a,
                              Scalar tol = kDefaultTol<Scalar>) {
  detail::throwIfSingular(a, tol);

  // Conjugacy commutes with scaling, so reduce a unit-scale copy and scale
  // the canonical form back; all internal thresholds then see ||A|| = 2.
  const Scalar c = frobeniusNorm(a) / Scalar(2);
  const QMat2<Scalar> an = (Scalar(1) / c) * a;

  const SimilarityClasses<Scalar> classes = similarityClassReps(an, tol);
  const Scalar scale =
      std::max({Scalar(1), std::abs(classes.first), std::abs(classes.second)});

  std::vector<NormalForm<Scalar>> attempts;
  const auto attempt = [&](auto&& fn) {
    try {
      attempts.push_back(fn());
    } catch (const DivisionByZeroError&) {
      // candidate needed an inverse that does not exist; skip it
    }
  };

  if (classes.merged) {
    const auto ns = detail::eigenNullSpace(an, classes.first, tol);
    const bool realClass =
        classes.first.imag() <= detail::classMergeTol(tol) * scale;
    const bool diagonalFirst = realClass ? ns.nullity >= 4 : ns.nullity >= 2;
    attempt([&] { return detail::reduceEqual(an, classes.first, tol, diagonalFirst); });
    attempt([&] { return detail::reduceEqual(an, classes.first, tol, !diagonalFirst); });
  } else {
    attempt([&] { return detail::reduceDistinct(an, classes.first, classes.second, tol); });
    if (classes.separation <= Scalar(1e-4) * scale) {
      const std::complex<Scalar> mid = detail::upperHalf(
          std::complex<Scalar>(Scalar(0.5) * (classes.first + classes.second)));
      attempt([&] { return detail::reduceEqual(an, mid, tol, true); });
      attempt([&] { return detail::reduceEqual(an, mid, tol, false); });
    }
  }

  if (attempts.empty()) {
    throw DegenerateReductionError("all reduction candidates were degenerate");
  }
  const Scalar bound =
      std::max(Scalar(10) * tol, Scalar(1e-8)) * frobeniusNorm(an);
  const auto score = [](const NormalForm<Scalar>& f) {
    return std::isfinite(f.residual)
               ? f.residual
               : std::numeric_limits<Scalar>::infinity();
  };
  NormalForm<Scalar>* best = &attempts.front();
  for (auto& cand : attempts) {
    if (score(cand) < score(*best)) best = &cand;
  }
  if (!(best->residual <= bound)) {
    std::ostringstream msg;
    msg << "reduction residual " << best->residual
        << " exceeds tolerance; eigenvalue structure too degenerate to "
           "resolve";
    throw DegenerateReductionError(msg.str());
  }

  // undo the scale normalization
  NormalForm<Scalar> out = *best;
  out.lambda1 *= c;
  out.lambda2 *= c;
  out.canonical = c * out.canonical;
  if (out.kind == NormalFormKind::Translation) {
    // scaling turned the off-diagonal 1 into c; absorb it back into the
    // conjugator so the canonical entry stays exactly 1
    out.canonical.b = Quaternion<Scalar>(1);
    const QMat2<Scalar> f{Quaternion<Scalar>(Scalar(1) / c),
                          Quaternion<Scalar>(0), Quaternion<Scalar>(0),
                          Quaternion<Scalar>(1)};
    const QMat2<Scalar> fInv{Quaternion<Scalar>(c), Quaternion<Scalar>(0),
                             Quaternion<Scalar>(0), Quaternion<Scalar>(1)};
    out.conjugator = f * out.conjugator;
    out.conjugatorInverse = out.conjugatorInverse * fInv;
  }
  out.residual = frobeniusNorm(out.conjugator * a * out.conjugatorInverse -
                               out.canonical);
  return out;
}

}  // namespace quatmoeb
