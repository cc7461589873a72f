#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>

#include "quatmoeb/quaternion.hpp"

namespace quatmoeb {

template <typename Scalar>
using CMat4 = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

template <typename Scalar>
using CVec4 = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

/// 2x2 matrix over the quaternions, row-major entries
///   [ a  b ]
///   [ c  d ].
template <typename Scalar>
struct QMat2 {
  Quaternion<Scalar> a, b, c, d;

  static constexpr QMat2 identity() { return {1, 0, 0, 1}; }

  friend constexpr QMat2 operator+(const QMat2& p, const QMat2& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
  }
  friend constexpr QMat2 operator-(const QMat2& p, const QMat2& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
  }
  friend constexpr QMat2 operator*(const QMat2& p, const QMat2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
            p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
  }
  friend constexpr QMat2 operator*(Scalar s, const QMat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
  }
  friend constexpr QMat2 operator*(const QMat2& m, Scalar s) { return s * m; }

  friend constexpr bool operator==(const QMat2& p, const QMat2& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }
};

template <typename Scalar>
Scalar frobeniusNorm(const QMat2<Scalar>& m) {
  return std::sqrt(normSquared(m.a) + normSquared(m.b) + normSquared(m.c) +
                   normSquared(m.d));
}

/// Complex embedding A = A0 + j A1  |->  [[A0, -conj(A1)], [A1, conj(A0)]].
/// The left action of A on column vectors (z0 + j z1, w0 + j w1)^t matches
/// the action of embed(A) on (z0, w0, z1, w1)^t, which makes the map an
/// injective algebra homomorphism into GL(4, C).
template <typename Scalar>
CMat4<Scalar> embed(const QMat2<Scalar>& m) {
  const auto ea = split(m.a), eb = split(m.b), ec = split(m.c), ed = split(m.d);
  CMat4<Scalar> out;
  out << ea.c0, eb.c0, -std::conj(ea.c1), -std::conj(eb.c1),
         ec.c0, ed.c0, -std::conj(ec.c1), -std::conj(ed.c1),
         ea.c1, eb.c1,  std::conj(ea.c0),  std::conj(eb.c0),
         ec.c1, ed.c1,  std::conj(ec.c0),  std::conj(ed.c0);
  return out;
}

/// Inverse of embed on matrices carrying the embedding block structure;
/// redundant blocks are averaged.
template <typename Scalar>
QMat2<Scalar> unembed(const CMat4<Scalar>& m) {
  const auto entry = [&m](int r, int c) {
    const std::complex<Scalar> c0 =
        (m(r, c) + std::conj(m(r + 2, c + 2))) / Scalar(2);
    const std::complex<Scalar> c1 =
        (m(r + 2, c) - std::conj(m(r, c + 2))) / Scalar(2);
    return reassemble(ComplexPair<Scalar>{c0, c1});
  };
  return {entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)};
}

/// Deviation of m from the embedding block structure (0 for exact images).
template <typename Scalar>
Scalar embeddingDefect(const CMat4<Scalar>& m) {
  Scalar s = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      s += std::norm(m(r, c) - std::conj(m(r + 2, c + 2)));
      s += std::norm(m(r, c + 2) + std::conj(m(r + 2, c)));
    }
  return std::sqrt(s);
}

/// Quaternionic vector (u, w)^t, the natural column for QMat2 action.
template <typename Scalar>
struct QVec2 {
  Quaternion<Scalar> u, w;
};

template <typename Scalar>
constexpr QVec2<Scalar> operator*(const QMat2<Scalar>& m, const QVec2<Scalar>& v) {
  return {m.a * v.u + m.b * v.w, m.c * v.u + m.d * v.w};
}

/// Complex coordinates (z0, w0, z1, w1) of v = (z0 + j z1, w0 + j w1)^t.
template <typename Scalar>
CVec4<Scalar> embedVector(const QVec2<Scalar>& v) {
  const auto su = split(v.u), sw = split(v.w);
  CVec4<Scalar> out;
  out << su.c0, sw.c0, su.c1, sw.c1;
  return out;
}

template <typename Scalar>
QVec2<Scalar> unembedVector(const CVec4<Scalar>& c) {
  return {reassemble(ComplexPair<Scalar>{c(0), c(2)}),
          reassemble(ComplexPair<Scalar>{c(1), c(3)})};
}

/// Coefficients of det(xI - embed(A)) in the normalized parametrization
///   x^4 - 2 a3 x^3 + a2 x^2 - 2 a1 x + a0.
template <typename Scalar>
struct CharPolyCoeffs {
  Scalar a0, a1, a2, a3;
};

/// Raw characteristic polynomial of a 4x4 complex matrix via the
/// Faddeev-LeVerrier recurrence (division-free up to the trace scalings,
/// deterministic, no eigenvalue solve).  Returns ascending coefficients
/// (c0, c1, c2, c3) of det(xI - m) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0,
/// imaginary parts intact.
template <typename Scalar>
std::array<std::complex<Scalar>, 4> rawCharPoly(const CMat4<Scalar>& m) {
  const CMat4<Scalar> id = CMat4<Scalar>::Identity();
  CMat4<Scalar> n = m;
  std::array<std::complex<Scalar>, 4> raw;
  raw[3] = -n.trace();
  n = m * (n + raw[3] * id);
  raw[2] = -n.trace() / Scalar(2);
  n = m * (n + raw[2] * id);
  raw[1] = -n.trace() / Scalar(3);
  n = m * (n + raw[1] * id);
  raw[0] = -n.trace() / Scalar(4);
  return raw;
}

/// Characteristic polynomial with the embedding's reality checks: verifies
/// that the raw coefficients are real and that the constant term is
/// positive, as they must be for any quaternionic embedding of an
/// invertible matrix, then reads off the normalized parametrization.
template <typename Scalar>
CharPolyCoeffs<Scalar> charPoly(const CMat4<Scalar>& m,
                                Scalar tol = kDefaultTol<Scalar>) {
  using C = std::complex<Scalar>;
  const std::array<C, 4> raw = rawCharPoly(m);

  const Scalar fro = m.norm();
  const Scalar imagScale = std::max(Scalar(1), fro * fro * fro * fro);
  for (const C& coeff : raw) {
    if (std::abs(coeff.imag()) > tol * imagScale) {
      throw NonRealCoefficientsError(
          "characteristic polynomial has non-real coefficient; input is not "
          "a quaternionic embedding");
    }
  }

  CharPolyCoeffs<Scalar> out{raw[0].real(), -raw[1].real() / Scalar(2),
                             raw[2].real(), -raw[3].real() / Scalar(2)};
  const Scalar half = fro / Scalar(2);
  const Scalar detScale = std::max(half * half * half * half,
                                   std::numeric_limits<Scalar>::min());
  if (out.a0 <= tol * detScale) {
    throw NonPositiveDeterminantError(
        "constant coefficient of the characteristic polynomial is not "
        "positive; matrix is singular or not an embedding");
  }
  return out;
}

/// Evaluate a real polynomial (ascending coefficients) at a matrix argument.
template <typename Scalar>
CMat4<Scalar> evaluatePoly(const CMat4<Scalar>& m, std::span<const Scalar> coeffs) {
  CMat4<Scalar> acc = CMat4<Scalar>::Zero();
  if (coeffs.empty()) return acc;
  acc = coeffs.back() * CMat4<Scalar>::Identity();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
    acc = acc * m + *it * CMat4<Scalar>::Identity();
  }
  return acc;
}

/// Whether poly(m) vanishes relative to ||m||^deg (deg+1) -- the natural
/// scale of the evaluated terms.
template <typename Scalar>
bool annihilates(const CMat4<Scalar>& m, std::span<const Scalar> coeffs,
                 Scalar tol = kDefaultTol<Scalar>) {
  const auto deg = coeffs.empty() ? 0 : coeffs.size() - 1;
  const Scalar residual = evaluatePoly(m, coeffs).norm();
  const Scalar scale = std::pow(m.norm(), Scalar(deg)) * Scalar(deg + 1);
  return residual <= tol * scale;
}

/// Determinant of the complex embedding (real and >= 0 up to roundoff).
template <typename Scalar>
Scalar embeddingDeterminant(const QMat2<Scalar>& m) {
  return embed(m).determinant().real();
}

/// Inverse computed through the complex embedding; the inverse of an
/// embedded matrix carries the same block structure, so unembed recovers it.
template <typename Scalar>
QMat2<Scalar> matInverse(const QMat2<Scalar>& m, Scalar tol = kDefaultTol<Scalar>) {
  const CMat4<Scalar> em = embed(m);
  Eigen::FullPivLU<CMat4<Scalar>> lu(em);
  const Scalar det = std::abs(lu.determinant());
  const Scalar half = em.norm() / Scalar(2);
  const Scalar detScale = std::max(half * half * half * half,
                                   std::numeric_limits<Scalar>::min());
  if (det <= tol * detScale) {
    throw SingularMatrixError("matrix has (numerically) singular embedding");
  }
  return unembed<Scalar>(lu.inverse());
}

/// Whether A is within tolerance of r*I for some real r (possibly negative).
template <typename Scalar>
bool isRealScalar(const QMat2<Scalar>& m, Scalar tol = kDefaultTol<Scalar>) {
  const Scalar scale = std::max(Scalar(1), frobeniusNorm(m));
  return norm(m.b) <= tol * scale && norm(m.c) <= tol * scale &&
         norm(imagPart(m.a)) <= tol * scale &&
         norm(imagPart(m.d)) <= tol * scale &&
         std::abs(realPart(m.a) - realPart(m.d)) <= tol * scale;
}

}  // namespace quatmoeb
