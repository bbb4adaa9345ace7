#pragma once

#include <json.hpp>

#include "laxwb/cocycle/cocycle.hpp"

namespace laxwb {

// Exact values are written as strings; nothing is ever a float.

nlohmann::json to_json(const Scalar& c);
nlohmann::json to_json(const ScalarVector& v);
/// Rows of scalar strings.
nlohmann::json to_json(const ScalarMatrix& m);
/// Rows of function strings in the curve coordinate and y.
nlohmann::json to_json(const MatrixFunction& l);
/// "inf", [z] in genus 0 or [x, y].
nlohmann::json to_json(const CurvePoint& p, int genus);
/// [{"degree", "index", "value"}] in increasing (degree, index).
nlohmann::json to_json(const GradedCoordinates& c);
nlohmann::json to_json(const PropertyReport& r);
nlohmann::json to_json(const CocycleTable& t);
nlohmann::json to_json(const StructureConstants& sc);
nlohmann::json to_json(const BilinearFormOnG& psi);
nlohmann::json to_json(const ResidueReport& r);

}  // namespace laxwb
