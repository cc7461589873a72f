#pragma once

#include <cmath>
#include <complex>
#include <ostream>

#include "quatmoeb/errors.hpp"

namespace quatmoeb {

template <typename Scalar>
inline constexpr Scalar kDefaultTol = Scalar(1e-9);

/// Element of the real quaternion algebra, q = w + x i + y j + z k with
/// i^2 = j^2 = k^2 = -1 and ij = -ji = k, jk = -kj = i, ki = -ik = j.
template <typename Scalar>
struct Quaternion {
  Scalar w{}, x{}, y{}, z{};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(Scalar real) : w(real) {}  // NOLINT: implicit by design
  constexpr Quaternion(const std::complex<Scalar>& c) : w(c.real()), x(c.imag()) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(Scalar s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(Scalar s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, Scalar s) { return a *= s; }
  friend constexpr Quaternion operator*(Scalar s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, Scalar s) { return a /= s; }

  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend constexpr bool operator!=(const Quaternion& a, const Quaternion& b) {
    return !(a == b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
  }
};

template <typename Scalar>
constexpr Quaternion<Scalar> conj(const Quaternion<Scalar>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename Scalar>
constexpr Scalar normSquared(const Quaternion<Scalar>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <typename Scalar>
Scalar norm(const Quaternion<Scalar>& q) {
  return std::sqrt(normSquared(q));
}

template <typename Scalar>
constexpr Scalar realPart(const Quaternion<Scalar>& q) {
  return q.w;
}

template <typename Scalar>
constexpr Quaternion<Scalar> imagPart(const Quaternion<Scalar>& q) {
  return {0, q.x, q.y, q.z};
}

template <typename Scalar>
constexpr bool isZero(const Quaternion<Scalar>& q) {
  return q.w == Scalar(0) && q.x == Scalar(0) && q.y == Scalar(0) && q.z == Scalar(0);
}

template <typename Scalar>
constexpr Quaternion<Scalar> inverse(const Quaternion<Scalar>& q) {
  const Scalar n2 = normSquared(q);
  if (n2 == Scalar(0)) throw DivisionByZeroError("inverse of zero quaternion");
  return conj(q) / n2;
}

template <typename Scalar>
Quaternion<Scalar> normalized(const Quaternion<Scalar>& q) {
  const Scalar n = norm(q);
  if (n == Scalar(0)) throw DivisionByZeroError("normalizing zero quaternion");
  return q / n;
}

/// The complex slice w + x i of a quaternion, discarding j and k parts.
template <typename Scalar>
constexpr std::complex<Scalar> complexSlice(const Quaternion<Scalar>& q) {
  return {q.w, q.x};
}

/// Similarity (conjugacy in H^*): p ~ q iff Re p = Re q and |p| = |q|,
/// compared relative to max(1, |p|, |q|).
template <typename Scalar>
bool similar(const Quaternion<Scalar>& p, const Quaternion<Scalar>& q,
             Scalar tol = kDefaultTol<Scalar>) {
  const Scalar np = norm(p), nq = norm(q);
  const Scalar scale = std::max({Scalar(1), np, nq});
  return std::abs(realPart(p) - realPart(q)) <= tol * scale &&
         std::abs(np - nq) <= tol * scale;
}

/// Upper-half-plane representative of the similarity class of q:
/// Re q + |Im q| i.
template <typename Scalar>
std::complex<Scalar> complexRepresentative(const Quaternion<Scalar>& q) {
  return {realPart(q), norm(imagPart(q))};
}

/// A unit quaternion u with u q u^{-1} = complexRepresentative(q).
///
/// For unit pure n, u = (1 - i n)/|1 - i n| satisfies u n u^{-1} = i; the
/// formula degenerates as n -> -i, so that half-space is first rotated away
/// from the antipode by j (giving exactly u = j when q is a negative multiple
/// of i).
template <typename Scalar>
Quaternion<Scalar> conjugatorToComplex(const Quaternion<Scalar>& q) {
  using Q = Quaternion<Scalar>;
  const Q im = imagPart(q);
  const Scalar m = norm(im);
  if (m == Scalar(0)) return Q(1);
  Q n = im / m;
  if (n.x > Scalar(-0.5)) {
    return normalized(Q(1) - Q::i() * n);
  }
  // n = j n j^{-1} flips the signs of the i and k components.
  n = Q{0, -n.x, n.y, -n.z};
  return normalized(Q(1) - Q::i() * n) * Q::j();
}

/// The pair (c0, c1) of the unique left-j decomposition q = c0 + j c1.
/// Since j(y' + z'i) = y'j - z'k, the component c1 is y - z i.
template <typename Scalar>
struct ComplexPair {
  std::complex<Scalar> c0, c1;
};

template <typename Scalar>
constexpr ComplexPair<Scalar> split(const Quaternion<Scalar>& q) {
  return {{q.w, q.x}, {q.y, -q.z}};
}

template <typename Scalar>
constexpr Quaternion<Scalar> reassemble(const ComplexPair<Scalar>& p) {
  return {p.c0.real(), p.c0.imag(), p.c1.real(), -p.c1.imag()};
}

/// The pair (c0, c1) of the right-j decomposition q = c0 + c1 j, where
/// (y + z i) j = y j + z k, so c1 is y + z i.  Useful when solving
/// equations whose unknowns multiply j from the left.
template <typename Scalar>
constexpr ComplexPair<Scalar> rightSplit(const Quaternion<Scalar>& q) {
  return {{q.w, q.x}, {q.y, q.z}};
}

template <typename Scalar>
constexpr Quaternion<Scalar> rightReassemble(const ComplexPair<Scalar>& p) {
  return {p.c0.real(), p.c0.imag(), p.c1.real(), p.c1.imag()};
}

}  // namespace quatmoeb
