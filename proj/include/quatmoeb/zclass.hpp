#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/quaternion.hpp"
#include "quatmoeb/random.hpp"
#include "quatmoeb/spectral.hpp"

namespace quatmoeb {

/// The seven centralizer types, in canonical order (i)..(vii):
///   (i)   Scalar               Z = all invertible quaternionic matrices
///   (ii)  RealDiagDistinct     Z = H* x H*
///   (iii) RealParabolic        Z = upper triangular, equal quaternion diagonal
///   (iv)  ComplexParabolic     Z = upper triangular, equal complex diagonal
///   (v)   ComplexDiagDistinct  Z = C* x C*
///   (vi)  MixedDiag            Z = C* x H*
///   (vii) ComplexScalar        Z = GL(2, C)
enum class ZClassType {
  Scalar,
  RealDiagDistinct,
  RealParabolic,
  ComplexParabolic,
  ComplexDiagDistinct,
  MixedDiag,
  ComplexScalar,
};

inline std::string toString(ZClassType t) {
  switch (t) {
    case ZClassType::Scalar: return "scalar";
    case ZClassType::RealDiagDistinct: return "real-diag-distinct";
    case ZClassType::RealParabolic: return "real-parabolic";
    case ZClassType::ComplexParabolic: return "complex-parabolic";
    case ZClassType::ComplexDiagDistinct: return "complex-diag-distinct";
    case ZClassType::MixedDiag: return "mixed-diag";
    case ZClassType::ComplexScalar: return "complex-scalar";
  }
  return "unknown";
}

inline std::string romanLabel(ZClassType t) {
  switch (t) {
    case ZClassType::Scalar: return "i";
    case ZClassType::RealDiagDistinct: return "ii";
    case ZClassType::RealParabolic: return "iii";
    case ZClassType::ComplexParabolic: return "iv";
    case ZClassType::ComplexDiagDistinct: return "v";
    case ZClassType::MixedDiag: return "vi";
    case ZClassType::ComplexScalar: return "vii";
  }
  return "?";
}

namespace detail {

/// "Real" means the class representative's angle is within tol of 0 or pi;
/// negative reals centralize exactly like positive ones.
template <typename Scalar>
bool angleIsReal(const std::complex<Scalar>& lambda, Scalar tol) {
  const Scalar ang = std::abs(std::arg(lambda));
  const Scalar pi = Scalar(3.14159265358979323846L);
  return ang <= tol || (pi - ang) <= tol;
}

}  // namespace detail

/// Maps the reduced normal form onto one of the seven centralizer types.
/// When nfOut is non-null the normal form used for the decision is copied
/// there, so the centralizer of A itself can be recovered as
/// S^{-1} Z(canonical) S from its conjugator.
template <typename Scalar>
ZClassType zClassOf(const QMat2<Scalar>& a, Scalar tol = kDefaultTol<Scalar>,
                    NormalForm<Scalar>* nfOut = nullptr) {
  const NormalForm<Scalar> nf = normalForm(a, tol);
  if (nfOut != nullptr) *nfOut = nf;

  const std::complex<Scalar> l1 = nf.lambda1;
  const std::complex<Scalar> l2 = nf.lambda2;
  const bool real1 = detail::angleIsReal(l1, tol);
  const bool real2 = detail::angleIsReal(l2, tol);

  if (nf.kind == NormalFormKind::Translation) {
    return real1 ? ZClassType::RealParabolic : ZClassType::ComplexParabolic;
  }

  const Scalar scale = std::max({Scalar(1), std::abs(l1), std::abs(l2)});
  const bool equal = std::abs(l1 - l2) <= detail::classMergeTol(tol) * scale;

  if (real1 && real2) {
    return equal ? ZClassType::Scalar : ZClassType::RealDiagDistinct;
  }
  if (real1 != real2) return ZClassType::MixedDiag;
  return equal ? ZClassType::ComplexScalar : ZClassType::ComplexDiagDistinct;
}

/// Standard representative of each type.
template <typename Scalar>
QMat2<Scalar> representative(ZClassType t) {
  using Q = Quaternion<Scalar>;
  const Scalar pi = Scalar(3.14159265358979323846L);
  const Q u3{std::cos(pi / 3), std::sin(pi / 3), 0, 0};
  const Q u4{std::cos(pi / 4), std::sin(pi / 4), 0, 0};
  switch (t) {
    case ZClassType::Scalar: return QMat2<Scalar>::identity();
    case ZClassType::RealDiagDistinct: return {2, 0, 0, 1};
    case ZClassType::RealParabolic: return {1, 1, 0, 1};
    case ZClassType::ComplexParabolic: return {u3, Q(1), Q(0), u3};
    case ZClassType::ComplexDiagDistinct: return {u3, Q(0), Q(0), u4};
    case ZClassType::MixedDiag: return {u3, Q(0), Q(0), Q(1)};
    case ZClassType::ComplexScalar: return {u3, Q(0), Q(0), u3};
  }
  throw std::logic_error("unreachable z-class variant");
}

/// Commutation test: ||AB - BA|| <= tol ||A|| ||B||.
template <typename Scalar>
bool inCentralizer(const QMat2<Scalar>& a, const QMat2<Scalar>& b,
                   Scalar tol = kDefaultTol<Scalar>) {
  const QMat2<Scalar> comm = a * b - b * a;
  return frobeniusNorm(comm) <= tol * frobeniusNorm(a) * frobeniusNorm(b);
}

namespace detail {

template <typename Scalar>
Quaternion<Scalar> randomComplexEntry(Rng& rng) {
  return Quaternion<Scalar>(randomComplex<Scalar>(rng));
}

template <typename Scalar>
Quaternion<Scalar> randomNonzeroComplexEntry(Rng& rng) {
  return Quaternion<Scalar>(randomNonzeroComplex<Scalar>(rng));
}

}  // namespace detail

/// Pseudorandom invertible element of the centralizer of representative(t),
/// built from the structure of that centralizer and rejection-sampled until
/// the embedding determinant clears 1e-6.
template <typename Scalar>
QMat2<Scalar> sampleCentralizer(ZClassType t, Rng& rng) {
  using Q = Quaternion<Scalar>;
  const Scalar detFloor = Scalar(1e-6);
  for (int tries = 0; tries < 256; ++tries) {
    QMat2<Scalar> b;
    switch (t) {
      case ZClassType::Scalar:
        b = randomMatrix<Scalar>(rng);
        break;
      case ZClassType::RealDiagDistinct:
        b = {randomNonzeroQuaternion<Scalar>(rng), Q(0), Q(0),
             randomNonzeroQuaternion<Scalar>(rng)};
        break;
      case ZClassType::RealParabolic: {
        const Q p = randomNonzeroQuaternion<Scalar>(rng);
        b = {p, randomQuaternion<Scalar>(rng), Q(0), p};
        break;
      }
      case ZClassType::ComplexParabolic: {
        const Q p = detail::randomNonzeroComplexEntry<Scalar>(rng);
        b = {p, detail::randomComplexEntry<Scalar>(rng), Q(0), p};
        break;
      }
      case ZClassType::ComplexDiagDistinct:
        b = {detail::randomNonzeroComplexEntry<Scalar>(rng), Q(0), Q(0),
             detail::randomNonzeroComplexEntry<Scalar>(rng)};
        break;
      case ZClassType::MixedDiag:
        b = {detail::randomNonzeroComplexEntry<Scalar>(rng), Q(0), Q(0),
             randomNonzeroQuaternion<Scalar>(rng)};
        break;
      case ZClassType::ComplexScalar:
        b = {detail::randomComplexEntry<Scalar>(rng),
             detail::randomComplexEntry<Scalar>(rng),
             detail::randomComplexEntry<Scalar>(rng),
             detail::randomComplexEntry<Scalar>(rng)};
        break;
    }
    if (std::abs(embeddingDeterminant(b)) > detFloor) return b;
  }
  throw std::runtime_error("sampleCentralizer: rejection sampling failed");
}

/// Deterministic per-seed variant.
template <typename Scalar>
QMat2<Scalar> sampleCentralizer(ZClassType t, std::uint64_t seed) {
  Rng rng(seed);
  return sampleCentralizer<Scalar>(t, rng);
}

}  // namespace quatmoeb
