#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "quatmoeb/classify.hpp"
#include "quatmoeb/moebius.hpp"
#include "quatmoeb/qmat2.hpp"
#include "quatmoeb/quaternion.hpp"
#include "quatmoeb/spectral.hpp"
#include "quatmoeb/zclass.hpp"

namespace quatmoeb {

using Json = nlohmann::ordered_json;

// ---- writers ----

template <typename Scalar>
Json toJson(const Quaternion<Scalar>& q) {
  return Json::array({q.w, q.x, q.y, q.z});
}

template <typename Scalar>
Json toJson(const std::complex<Scalar>& z) {
  return Json::array({z.real(), z.imag()});
}

template <typename Scalar>
Json toJson(const QMat2<Scalar>& m) {
  return Json::array({Json::array({toJson(m.a), toJson(m.b)}),
                      Json::array({toJson(m.c), toJson(m.d)})});
}

template <typename Scalar>
Json toJson(const BoundaryPoint<Scalar>& p) {
  if (p.infinity) return Json("inf");
  return toJson(p.value);
}

template <typename Scalar>
Json toJson(const Invariants<Scalar>& inv) {
  return Json{{"c1", inv.c1},
              {"c2", inv.c2},
              {"c3", inv.c3},
              {"charpoly",
               {{"a0", inv.coeffs.a0},
                {"a1", inv.coeffs.a1},
                {"a2", inv.coeffs.a2},
                {"a3", inv.coeffs.a3}}}};
}

template <typename Scalar>
Json toJson(const ClassificationReport<Scalar>& r, bool degrees = false) {
  const Scalar f = degrees ? Scalar(45) / std::atan(Scalar(1)) : Scalar(1);
  return Json{{"type", std::string(toString(r.type))},
              {"c1", r.invariants.c1},
              {"c2", r.invariants.c2},
              {"c3", r.invariants.c3},
              {"params",
               {{"r", r.parameters.r},
                {"theta", f * r.parameters.theta},
                {"s", r.parameters.s},
                {"phi", f * r.parameters.phi},
                {"angle_unit", degrees ? "degrees" : "radians"}}},
              {"borderline", r.borderline},
              {"margins",
               {{"class_split", r.margins.classSplit},
                {"parabolicity", r.margins.parabolicity},
                {"unipotent", r.margins.unipotent},
                {"band", r.margins.band}}}};
}

template <typename Scalar>
Json toJson(const NormalForm<Scalar>& nf) {
  return Json{{"kind", std::string(toString(nf.kind))},
              {"canonical", toJson(nf.canonical)},
              {"conjugator", toJson(nf.conjugator)},
              {"residual", nf.residual}};
}

template <typename Scalar>
Json toJson(const Orbit<Scalar>& o) {
  Json pts = Json::array();
  for (const auto& p : o.points) pts.push_back(toJson(p));
  return Json{{"points", pts}, {"pole_passes", o.polePass}};
}

// ---- readers ----

/// Quaternion from JSON: a number r means r, a pair [re, im] means a complex
/// number, a quadruple [w, x, y, z] a full quaternion.
template <typename Scalar>
Quaternion<Scalar> quaternionFromJson(const Json& j) {
  if (j.is_number()) return Quaternion<Scalar>(j.template get<Scalar>());
  if (j.is_array() && j.size() == 2) {
    return {j[0].template get<Scalar>(), j[1].template get<Scalar>(), 0, 0};
  }
  if (j.is_array() && j.size() == 4) {
    return {j[0].template get<Scalar>(), j[1].template get<Scalar>(),
            j[2].template get<Scalar>(), j[3].template get<Scalar>()};
  }
  throw std::invalid_argument(
      "quaternion must be a number, [re, im], or [w, x, y, z]; got " +
      j.dump());
}

/// Matrix from JSON: [[a, b], [c, d]] with quaternion entries as above.
template <typename Scalar>
QMat2<Scalar> matrixFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2) {
    throw std::invalid_argument("matrix must be [[a, b], [c, d]]; got " +
                                j.dump());
  }
  return {quaternionFromJson<Scalar>(j[0][0]), quaternionFromJson<Scalar>(j[0][1]),
          quaternionFromJson<Scalar>(j[1][0]), quaternionFromJson<Scalar>(j[1][1])};
}

template <typename Scalar>
BoundaryPoint<Scalar> boundaryPointFromJson(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.template get<std::string>();
    if (s == "inf" || s == "infinity") {
      return BoundaryPoint<Scalar>::infinityPoint();
    }
    throw std::invalid_argument("unknown boundary point name: " + s);
  }
  return BoundaryPoint<Scalar>::at(quaternionFromJson<Scalar>(j));
}

}  // namespace quatmoeb
