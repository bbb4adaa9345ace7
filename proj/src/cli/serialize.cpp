#include "laxwb/cli/serialize.hpp"

namespace laxwb {

using nlohmann::json;

json to_json(const Scalar& c) { return c.str(); }

json to_json(const ScalarVector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

json to_json(const ScalarMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const MatrixFunction& l) {
  json out = json::array();
  for (int i = 0; i < l.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < l.size(); ++j) row.push_back(l(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const CurvePoint& p, int genus) {
  if (p.is_infinity()) return "inf";
  if (genus == 0) return json::array({p.x().str()});
  return json::array({p.x().str(), p.y().str()});
}

json to_json(const GradedCoordinates& c) {
  json out = json::array();
  for (const auto& [idx, v] : c) out.push_back({{"degree", idx.first}, {"index", idx.second}, {"value", v.str()}});
  return out;
}

json to_json(const PropertyReport& r) {
  return {{"checked", r.checked}, {"passed", r.ok()}, {"violations", r.violations}};
}

json to_json(const CocycleTable& t) {
  json entries = json::array();
  for (const auto& [key, v] : t.entries) {
    entries.push_back({{"a", {key.first.first, key.first.second}},
                       {"b", {key.second.first, key.second.second}},
                       {"value", v.str()}});
  }
  json band = nullptr;
  if (!t.empty_band) band = {{"low", t.band_low}, {"high", t.band_high}};
  return {{"kind", cocycle_name(t.kind)},
          {"window", {{"min", t.window_min}, {"max", t.window_max}}},
          {"band", band},
          {"nonzero_entries", entries}};
}

json to_json(const StructureConstants& sc) {
  json entries = json::array();
  for (const auto& [key, coords] : sc.table) {
    if (coords.empty()) continue;
    entries.push_back({{"a", {key.first.first, key.first.second}},
                       {"b", {key.second.first, key.second.second}},
                       {"bracket", to_json(coords)}});
  }
  return {{"window", {{"min", sc.window_min}, {"max", sc.window_max}}},
          {"band", {{"low", sc.band_low}, {"high", sc.band_high}}},
          {"brackets", entries}};
}

json to_json(const BilinearFormOnG& psi) {
  return {{"values", to_json(psi.values)},
          {"symmetric", psi.symmetric},
          {"invariant", psi.invariant},
          {"trace_multiple", psi.trace_multiple ? json(psi.trace_multiple->str()) : json(nullptr)}};
}

json to_json(const ResidueReport& r) {
  return {{"at_plus", r.at_plus.str()},
          {"at_minus", r.at_minus.str()},
          {"at_weak", to_json(r.at_weak)},
          {"total", r.total().str()}};
}

}  // namespace laxwb
