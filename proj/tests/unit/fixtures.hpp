#pragma once

#include "laxwb/laxalg/algebra_type.hpp"

namespace laxwb::testing {

inline CurvePoint pt(long x, long y) { return CurvePoint::finite(Scalar(x), Scalar(y)); }

// Genus 0 with P+ = 0 and P- = infinity, no weak points.
inline AlgebraSpec classical(const std::string& kind, int n) {
  return {Curve::projective_line(), CurvePoint::finite(Scalar(0)), CurvePoint::infinity(), AlgebraType::parse(kind, n), {}};
}

// y^2 = x^3 + 17 with P+ = infinity and P- = (-2, 3).
inline const Curve& e17() {
  static const Curve c = Curve::elliptic(Scalar(0), Scalar(17));
  return c;
}

inline AlgebraSpec elliptic(const std::string& kind) {
  const Scalar i = Scalar::i();
  std::vector<TyurinPoint> ty{{pt(-1, 4), {Scalar(1), Scalar(2)}}, {pt(4, 9), {Scalar(1), Scalar(-1)}}};
  int n = 2;
  if (kind == "so") {
    n = 3;
    ty = {{pt(-1, 4), {Scalar(1), i, Scalar(0)}}, {pt(4, 9), {Scalar(1), Scalar(0), i}}, {pt(8, 23), {Scalar(0), Scalar(1), i}}};
  } else if (kind == "sp") {
    n = 1;
  }
  return {e17(), CurvePoint::infinity(), pt(-2, 3), AlgebraType::parse(kind, n), ty};
}

}  // namespace laxwb::testing
