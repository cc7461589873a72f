#pragma once

#include <stdexcept>

namespace quatmoeb {

/// Inverting the zero quaternion.
struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Matrix whose complex embedding is (numerically) singular.
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Characteristic polynomial coefficients came out with a non-negligible
/// imaginary part; the input is not a valid quaternionic embedding.
struct NonRealCoefficientsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Constant coefficient of the characteristic polynomial is not positive,
/// so the normalized invariants are undefined.
struct NonPositiveDeterminantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The conjugation pipeline hit a division its case analysis should have
/// excluded, or the reduced matrix failed verification against its
/// canonical form.
struct DegenerateReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quatmoeb
