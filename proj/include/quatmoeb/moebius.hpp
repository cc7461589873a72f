#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/quaternion.hpp"

namespace quatmoeb {

/// Point of the conformal boundary S^4 = H ∪ {∞} of hyperbolic 5-space.
template <typename Scalar>
struct BoundaryPoint {
  Quaternion<Scalar> value{};  // ignored when infinity is set
  bool infinity = false;

  static constexpr BoundaryPoint infinityPoint() { return {{}, true}; }
  static constexpr BoundaryPoint at(const Quaternion<Scalar>& q) {
    return {q, false};
  }
};

template <typename Scalar>
bool samePoint(const BoundaryPoint<Scalar>& p, const BoundaryPoint<Scalar>& q,
               Scalar tol = kDefaultTol<Scalar>) {
  if (p.infinity || q.infinity) return p.infinity == q.infinity;
  const Scalar scale = std::max({Scalar(1), norm(p.value), norm(q.value)});
  return norm(p.value - q.value) <= tol * scale;
}

/// Chordal distance on S^4 under the stereographic identification;
/// bounded by 2, continuous across ∞.
template <typename Scalar>
Scalar chordal(const BoundaryPoint<Scalar>& p, const BoundaryPoint<Scalar>& q) {
  const auto lift = [](const BoundaryPoint<Scalar>& b, Scalar& scale) {
    scale = b.infinity ? Scalar(0) : Scalar(1) / std::sqrt(Scalar(1) + normSquared(b.value));
  };
  if (p.infinity && q.infinity) return Scalar(0);
  if (p.infinity) return Scalar(2) / std::sqrt(Scalar(1) + normSquared(q.value));
  if (q.infinity) return Scalar(2) / std::sqrt(Scalar(1) + normSquared(p.value));
  Scalar sp, sq;
  lift(p, sp);
  lift(q, sq);
  return Scalar(2) * norm(p.value - q.value) /
         std::sqrt((Scalar(1) + normSquared(p.value)) *
                   (Scalar(1) + normSquared(q.value)));
}

/// Möbius action of an invertible quaternionic matrix on the boundary:
///   Z |-> (aZ + b)(cZ + d)^{-1},  with the usual extension to ∞.
/// Evaluated through homogeneous coordinates in the better-conditioned of
/// two charts so that large |Z| does not lose precision.
template <typename Scalar>
BoundaryPoint<Scalar> apply(const QMat2<Scalar>& m, const BoundaryPoint<Scalar>& z,
                            Scalar tol = kDefaultTol<Scalar>) {
  Quaternion<Scalar> u, w;  // homogeneous column (u, w)^t representing u w^{-1}
  if (z.infinity) {
    u = Quaternion<Scalar>(1);
    w = Quaternion<Scalar>(0);
  } else if (norm(z.value) <= Scalar(1)) {
    u = z.value;
    w = Quaternion<Scalar>(1);
  } else {
    // (Z, 1) ~ (1, Z^{-1}) in the right-projective line
    u = Quaternion<Scalar>(1);
    w = inverse(z.value);
  }
  const Quaternion<Scalar> nu = m.a * u + m.b * w;
  const Quaternion<Scalar> nw = m.c * u + m.d * w;
  const Scalar total = std::sqrt(normSquared(nu) + normSquared(nw));
  if (norm(nw) <= tol * total) return BoundaryPoint<Scalar>::infinityPoint();
  return BoundaryPoint<Scalar>::at(nu * inverse(nw));
}

/// Inversion in the 3-sphere of radius r centered at a:
///   sigma(Z) = a + r^2 (Z - a)^{-1} computed via conj for the correct
///   orientation-reversing similarity on H ∪ {∞}.
template <typename Scalar>
struct Inversion {
  Quaternion<Scalar> center{};
  Scalar radius{1};
};

/// Reflection in the hyperplane { Z : <Z, lambda> = <a, lambda> } with unit
/// normal lambda through the point a.
template <typename Scalar>
struct Reflection {
  Quaternion<Scalar> normal{Quaternion<Scalar>::i()};  // must be unit length
  Quaternion<Scalar> point{};
};

template <typename Scalar>
BoundaryPoint<Scalar> apply(const Inversion<Scalar>& s, const BoundaryPoint<Scalar>& z,
                            Scalar tol = kDefaultTol<Scalar>) {
  if (z.infinity) return BoundaryPoint<Scalar>::at(s.center);
  const Quaternion<Scalar> d = z.value - s.center;
  const Scalar scale = std::max({Scalar(1), norm(z.value), norm(s.center)});
  if (norm(d) <= tol * scale) return BoundaryPoint<Scalar>::infinityPoint();
  return BoundaryPoint<Scalar>::at(s.center +
                                   (s.radius * s.radius) * inverse(conj(d)));
}

template <typename Scalar>
BoundaryPoint<Scalar> apply(const Reflection<Scalar>& r, const BoundaryPoint<Scalar>& z,
                            Scalar /*tol*/ = kDefaultTol<Scalar>) {
  if (z.infinity) return z;
  // Euclidean reflection: Z - 2 <Z - a, n> n with <,> the real inner product.
  const Quaternion<Scalar> d = z.value - r.point;
  const Scalar inner = d.w * r.normal.w + d.x * r.normal.x +
                       d.y * r.normal.y + d.z * r.normal.z;
  return BoundaryPoint<Scalar>::at(z.value - Scalar(2) * inner * r.normal);
}

/// Matrix datum N for the anti-Moebius map Z |-> (p conj(Z) + beta)
/// (gamma conj(Z) - conj(p))^{-1}; inversions and reflections both land in
/// this class (beta, gamma real).
template <typename Scalar>
QMat2<Scalar> generatorMatrix(const Inversion<Scalar>& s) {
  return {s.center, Quaternion<Scalar>(s.radius * s.radius) -
                        Quaternion<Scalar>(normSquared(s.center)),
          Quaternion<Scalar>(1), -conj(s.center)};
}

template <typename Scalar>
QMat2<Scalar> generatorMatrix(const Reflection<Scalar>& r) {
  const Quaternion<Scalar>& l = r.normal;
  const Quaternion<Scalar>& a = r.point;
  return {-l, l * conj(a) + a * conj(l), Quaternion<Scalar>(0), conj(l)};
}

/// Evaluate the anti-Moebius map attached to a generator matrix.
template <typename Scalar>
BoundaryPoint<Scalar> applyAnti(const QMat2<Scalar>& n, const BoundaryPoint<Scalar>& z,
                                Scalar tol = kDefaultTol<Scalar>) {
  BoundaryPoint<Scalar> zc = z;
  if (!z.infinity) zc.value = conj(z.value);
  return apply(n, zc, tol);
}

template <typename Scalar>
QMat2<Scalar> conjEntrywise(const QMat2<Scalar>& m) {
  return {conj(m.a), conj(m.b), conj(m.c), conj(m.d)};
}

/// Matrix of the Moebius transformation (second ∘ first) where both factors
/// are anti-maps given by generator matrices.  Composing
/// Z |-> N2 * conj(N1 * conj(Z)) collapses, for generator-class matrices
/// (off-diagonal entries real, diagonal a, -conj(a)), to the single matrix
/// N2 * conjEntrywise(N1) acting projectively on Z directly.
template <typename Scalar>
QMat2<Scalar> composeInversions(const QMat2<Scalar>& first, const QMat2<Scalar>& second) {
  return second * conjEntrywise(first);
}

template <typename Scalar>
QMat2<Scalar> composeInversions(const Inversion<Scalar>& first,
                                const Inversion<Scalar>& second) {
  return composeInversions(generatorMatrix(first), generatorMatrix(second));
}

template <typename Scalar>
QMat2<Scalar> composeInversions(const Reflection<Scalar>& first,
                                const Reflection<Scalar>& second) {
  return composeInversions(generatorMatrix(first), generatorMatrix(second));
}

template <typename Scalar>
QMat2<Scalar> composeInversions(const Inversion<Scalar>& first,
                                const Reflection<Scalar>& second) {
  return composeInversions(generatorMatrix(first), generatorMatrix(second));
}

template <typename Scalar>
QMat2<Scalar> composeInversions(const Reflection<Scalar>& first,
                                const Inversion<Scalar>& second) {
  return composeInversions(generatorMatrix(first), generatorMatrix(second));
}

/// Forward orbit of a boundary point: seed, A seed, ..., A^steps seed.
/// Iteration stops early once an iterate reaches ∞ or leaves the ball
/// |Z| < 1/tol (the finite chart); polePass then holds that 1-based
/// iteration index and the triggering point stays in the sequence as
/// computed -- large finite values are not collapsed to ∞.
template <typename Scalar>
struct Orbit {
  std::vector<BoundaryPoint<Scalar>> points;  // size steps+1 unless truncated
  std::vector<int> polePass;                  // 1-based iteration indices
};

template <typename Scalar>
Orbit<Scalar> orbit(const QMat2<Scalar>& m, const BoundaryPoint<Scalar>& seed,
                    int steps, Scalar tol = kDefaultTol<Scalar>) {
  Orbit<Scalar> out;
  out.points.reserve(static_cast<std::size_t>(steps) + 1);
  out.points.push_back(seed);
  BoundaryPoint<Scalar> z = seed;
  for (int it = 1; it <= steps; ++it) {
    z = apply(m, z, tol);
    out.points.push_back(z);
    if (z.infinity || norm(z.value) >= Scalar(1) / tol) {
      out.polePass.push_back(it);
      break;
    }
  }
  return out;
}

}  // namespace quatmoeb
