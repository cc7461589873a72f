#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "quatmoeb/dynamical_type.hpp"
#include "quatmoeb/errors.hpp"
#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/spectral.hpp"

namespace quatmoeb {

/// Conjugacy invariants of the Moebius transformation of A, derived from the
/// characteristic polynomial x^4 - 2 a3 x^3 + a2 x^2 - 2 a1 x + a0 of the
/// complex embedding.  All three are invariant under conjugation and under
/// rescaling A by a nonzero real number.
template <typename Scalar>
struct Invariants {
  Scalar c1, c2, c3;
  CharPolyCoeffs<Scalar> coeffs;
};

template <typename Scalar>
Invariants<Scalar> invariants(const CharPolyCoeffs<Scalar>& co) {
  if (!(co.a0 > Scalar(0))) {
    throw NonPositiveDeterminantError(
        "invariants require a positive constant coefficient");
  }
  const Scalar sq = std::sqrt(co.a0);
  return {co.a1 * co.a1 / (co.a0 * sq), co.a2 / sq, co.a3 * co.a3 / sq, co};
}

template <typename Scalar>
Invariants<Scalar> invariants(const QMat2<Scalar>& m,
                              Scalar tol = kDefaultTol<Scalar>) {
  try {
    return invariants(charPoly(embed(m), tol));
  } catch (const NonPositiveDeterminantError&) {
    throw SingularMatrixError(
        "matrix is numerically singular; invariants are undefined");
  }
}

/// Signed distances to the three decision surfaces of the classification,
/// in the c-invariant coordinates.
template <typename Scalar>
struct Margins {
  Scalar classSplit;    // |c1 - c3|: positive only for 2-rotation-hyperbolic
  Scalar parabolicity;  // c2 - (c1 + 2): negative elliptic, positive hyperbolic
  Scalar unipotent;     // c1 - 4: sign separates stretch from parabolic/elliptic
  Scalar band;          // comparison width the decision used
};

/// Whether the minimal polynomial of the embedding has full degree 4, i.e.
/// the canonical quadratic m1 = x^2 - sigma (a0 c1^2)^{1/4} x + sqrt(a0)
/// fails to annihilate A.  The quartic root recovers |2r cos(theta)| only,
/// so the sign of cos(theta) is restored from sign(a3).  Meaningful on the
/// repeated-class locus (c1 = c3, c2 = c1 + 2, c1 < 4), where it separates
/// the parabolic (non-diagonalizable, true) case from the elliptic one.
/// The optional residualOut receives ||m1(embed(A))||_F / ||embed(A)||_F^2,
/// the dimensionless residual behind the verdict.
template <typename Scalar>
bool minimalPolyEqualsCharPoly(const QMat2<Scalar>& m,
                               const CharPolyCoeffs<Scalar>& coeffs,
                               const Invariants<Scalar>& inv,
                               Scalar tol = kDefaultTol<Scalar>,
                               Scalar* residualOut = nullptr) {
  const Scalar sigma = coeffs.a3 < 0 ? Scalar(-1) : Scalar(1);
  const Scalar mid = sigma * std::pow(coeffs.a0 * inv.c1 * inv.c1, Scalar(0.25));
  const std::array<Scalar, 3> quad{std::sqrt(coeffs.a0), -mid, Scalar(1)};
  const CMat4<Scalar> em = embed(m);
  if (residualOut) {
    *residualOut =
        evaluatePoly(em, std::span<const Scalar>(quad)).norm() /
        (em.norm() * em.norm());
  }
  return !annihilates(em, std::span<const Scalar>(quad), tol);
}

template <typename Scalar>
bool minimalPolyEqualsCharPoly(const QMat2<Scalar>& m,
                               Scalar tol = kDefaultTol<Scalar>,
                               Scalar* residualOut = nullptr) {
  const Invariants<Scalar> inv = invariants(m, tol);
  return minimalPolyEqualsCharPoly(m, inv.coeffs, inv, tol, residualOut);
}

/// Moduli and angles of the two eigenvalue similarity classes, suitable for
/// presenting the element as a canonical rotation/translation datum.  For a
/// repeated class both pairs coincide.
template <typename Scalar>
struct TypeParameters {
  Scalar r, theta;  // first class: modulus, angle in [0, pi]
  Scalar s, phi;    // second class
};

template <typename Scalar>
struct ClassificationReport {
  DynamicalType type;
  Invariants<Scalar> invariants;
  Margins<Scalar> margins;
  // true when any margin lies within the comparison band, i.e. the input
  // sits within ~tol of a decision surface; every type other than
  // 2-rotation-hyperbolic lives exactly on such a surface, so this flags
  // results a perturbation of size ~tol could change
  bool borderline = false;
  TypeParameters<Scalar> parameters;
};

/// Dynamical type of the Moebius transformation of A, decided from the
/// invariants (c1, c2, c3) alone, plus the minimal-polynomial test and the
/// real-scalar test on the two leaves the invariants cannot separate.
template <typename Scalar>
ClassificationReport<Scalar> classify(const QMat2<Scalar>& m,
                                      Scalar tol = kDefaultTol<Scalar>) {
  ClassificationReport<Scalar> report;
  report.invariants = invariants(m, tol);
  const Scalar c1 = report.invariants.c1;
  const Scalar c2 = report.invariants.c2;
  const Scalar c3 = report.invariants.c3;
  const Scalar band =
      tol * std::max({Scalar(1), std::abs(c1), std::abs(c2), std::abs(c3)});
  report.margins = {std::abs(c1 - c3), c2 - (c1 + Scalar(2)), c1 - Scalar(4),
                    band};
  report.borderline = report.margins.classSplit <= band ||
                      std::abs(report.margins.parabolicity) <= band ||
                      std::abs(report.margins.unipotent) <= band;

  if (report.margins.classSplit > band) {
    report.type = DynamicalType::TwoRotationHyperbolic;
  } else if (report.margins.parabolicity < -band) {
    report.type = DynamicalType::TwoRotationElliptic;
  } else if (report.margins.parabolicity > band) {
    report.type = DynamicalType::OneRotationHyperbolic;
  } else if (report.margins.unipotent > band) {
    report.type = DynamicalType::Stretch;
  } else if (report.margins.unipotent >= -band) {
    report.type = isRealScalar(m, tol) ? DynamicalType::Identity
                                       : DynamicalType::SimpleParabolic;
  } else {
    report.type =
        minimalPolyEqualsCharPoly(m, report.invariants.coeffs,
                                  report.invariants, tol)
            ? DynamicalType::OneRotationParabolic
            : DynamicalType::OneRotationElliptic;
  }

  // parameters are presentation data; they come from the eigenvalue classes
  // and play no role in the type decision above
  const SimilarityClasses<Scalar> cls = similarityClassReps(m, tol);
  report.parameters = {std::abs(cls.first), std::arg(cls.first),
                       std::abs(cls.second), std::arg(cls.second)};
  return report;
}

}  // namespace quatmoeb
