#pragma once

#include <vector>

#include "laxwb/curve/field_element.hpp"

namespace laxwb {

/// Laurent expansion of f in the canonical uniformizer at p, known up to
/// (excluding) t^prec.
LaurentSeries expand_at(const FieldElement& f, const CurvePoint& p, int prec);

/// Exact vanishing order; throws ZeroElement for f = 0.
int order_at(const FieldElement& f, const CurvePoint& p);

/// A lower bound for order_at that never expands anything; exact unless the
/// two summands of a + b*y cancel at p.
int order_lower_bound(const FieldElement& f, const CurvePoint& p);

/// Vanishing order of a function of the coordinate alone.
int order_at(const Curve& curve, const RationalFunction& r, const CurvePoint& p);

/// Coefficient series of w with respect to dt at p, known up to t^prec.
LaurentSeries expand_differential_at(const Differential& w, const CurvePoint& p, int prec);

/// Coefficients of t^from, ..., t^(to-1) in the expansion of f at p.
std::vector<Scalar> expansion_coefficients(const FieldElement& f, const CurvePoint& p, int from, int to);

}  // namespace laxwb
