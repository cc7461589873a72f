#pragma once

#include <complex>
#include <random>

#include "quatmoeb/classify.hpp"
#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/quaternion.hpp"

namespace quatmoeb {

using Rng = std::mt19937_64;

template <typename Scalar>
Scalar randomScalar(Rng& rng, Scalar lo = Scalar(-2), Scalar hi = Scalar(2)) {
  return std::uniform_real_distribution<Scalar>(lo, hi)(rng);
}

template <typename Scalar>
Quaternion<Scalar> randomQuaternion(Rng& rng, Scalar lo = Scalar(-2),
                                    Scalar hi = Scalar(2)) {
  return {randomScalar(rng, lo, hi), randomScalar(rng, lo, hi),
          randomScalar(rng, lo, hi), randomScalar(rng, lo, hi)};
}

template <typename Scalar>
Quaternion<Scalar> randomNonzeroQuaternion(Rng& rng,
                                           Scalar minNorm = Scalar(0.1)) {
  for (;;) {
    const Quaternion<Scalar> q = randomQuaternion<Scalar>(rng);
    if (norm(q) >= minNorm) return q;
  }
}

template <typename Scalar>
std::complex<Scalar> randomComplex(Rng& rng, Scalar lo = Scalar(-2),
                                   Scalar hi = Scalar(2)) {
  return {randomScalar(rng, lo, hi), randomScalar(rng, lo, hi)};
}

template <typename Scalar>
std::complex<Scalar> randomNonzeroComplex(Rng& rng,
                                          Scalar minNorm = Scalar(0.1)) {
  for (;;) {
    const std::complex<Scalar> z = randomComplex<Scalar>(rng);
    if (std::abs(z) >= minNorm) return z;
  }
}

template <typename Scalar>
QMat2<Scalar> randomMatrix(Rng& rng, Scalar lo = Scalar(-2),
                           Scalar hi = Scalar(2)) {
  return {randomQuaternion(rng, lo, hi), randomQuaternion(rng, lo, hi),
          randomQuaternion(rng, lo, hi), randomQuaternion(rng, lo, hi)};
}

/// Random matrix whose complex embedding is safely invertible.
template <typename Scalar>
QMat2<Scalar> randomInvertible(Rng& rng, Scalar detFloor = Scalar(1e-6)) {
  for (;;) {
    const QMat2<Scalar> m = randomMatrix<Scalar>(rng);
    if (std::abs(embed(m).determinant()) >= detFloor) return m;
  }
}

/// Random invertible matrix rejected until all classification margins are
/// comfortably away from the decision surfaces, so every consumer of the
/// sample agrees on its type regardless of tolerance details.
template <typename Scalar>
QMat2<Scalar> randomNonBorderline(Rng& rng,
                                  Scalar marginFloor = Scalar(1e-4)) {
  for (;;) {
    const QMat2<Scalar> m = randomInvertible<Scalar>(rng);
    const Invariants<Scalar> inv = invariants(m, kDefaultTol<Scalar>);
    const Scalar scale = std::max(
        {Scalar(1), std::abs(inv.c1), std::abs(inv.c2), std::abs(inv.c3)});
    const Scalar floor = marginFloor * scale;
    if (std::abs(inv.c1 - inv.c3) < floor) continue;
    if (std::abs(inv.c2 - (inv.c1 + Scalar(2))) < floor) continue;
    if (std::abs(inv.c1 - Scalar(4)) < floor) continue;
    return m;
  }
}

/// Random quaternionic unitary-ish conjugator: invertible with moderate
/// condition number, for conjugation-invariance tests.
template <typename Scalar>
QMat2<Scalar> randomConjugator(Rng& rng, Scalar detFloor = Scalar(1e-2)) {
  for (;;) {
    const QMat2<Scalar> m = randomMatrix<Scalar>(rng, Scalar(-1), Scalar(1));
    if (std::abs(embed(m).determinant()) >= detFloor) return m;
  }
}

}  // namespace quatmoeb
