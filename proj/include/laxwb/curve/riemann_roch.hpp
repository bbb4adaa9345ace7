#pragma once

#include <vector>

#include "laxwb/curve/field_element.hpp"

namespace laxwb {

/// Basis of L(D) = { f : div(f) >= -D } in reduced echelon form over the
/// monomials 1, x, y, x^2, x y, ... (genus 1) or 1, z, z^2, ... (genus 0)
/// after clearing finite poles, pivoting on the lowest pole order at infinity.
std::vector<FieldElement> rr_space(const Curve& curve, const Divisor& d);

}  // namespace laxwb
