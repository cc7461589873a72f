#pragma once

#include <string_view>

namespace quatmoeb {

/// Dynamical type of an orientation-preserving isometry of hyperbolic
/// 5-space, named by fixed-point structure on the closed ball:
///  - elliptic types fix an interior point,
///  - parabolic types fix exactly one boundary point,
///  - hyperbolic types fix exactly two boundary points (an axis).
/// The rotation count distinguishes how many invariant 2-planes are rotated.
enum class DynamicalType {
  Identity,
  OneRotationElliptic,
  TwoRotationElliptic,
  SimpleParabolic,        // translation, no rotational part
  OneRotationParabolic,
  Stretch,                // hyperbolic, no rotational part
  OneRotationHyperbolic,
  TwoRotationHyperbolic,
};

constexpr std::string_view toString(DynamicalType t) {
  switch (t) {
    case DynamicalType::Identity:              return "identity";
    case DynamicalType::OneRotationElliptic:   return "1-rotation-elliptic";
    case DynamicalType::TwoRotationElliptic:   return "2-rotation-elliptic";
    case DynamicalType::SimpleParabolic:       return "translation";
    case DynamicalType::OneRotationParabolic:  return "1-rotation-parabolic";
    case DynamicalType::Stretch:               return "stretch";
    case DynamicalType::OneRotationHyperbolic: return "1-rotation-hyperbolic";
    case DynamicalType::TwoRotationHyperbolic: return "2-rotation-hyperbolic";
  }
  return "unknown";
}

constexpr bool isElliptic(DynamicalType t) {
  return t == DynamicalType::Identity ||
         t == DynamicalType::OneRotationElliptic ||
         t == DynamicalType::TwoRotationElliptic;
}

constexpr bool isParabolic(DynamicalType t) {
  return t == DynamicalType::SimpleParabolic ||
         t == DynamicalType::OneRotationParabolic;
}

constexpr bool isHyperbolic(DynamicalType t) {
  return t == DynamicalType::Stretch ||
         t == DynamicalType::OneRotationHyperbolic ||
         t == DynamicalType::TwoRotationHyperbolic;
}

}  // namespace quatmoeb
