#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laxwb/laxalg/algebra_type.hpp"

namespace laxwb {

/// A point as written in a config: "inf" or [x, y] ([z] in genus 0).
struct PointConfig {
  bool infinity = false;
  std::vector<std::string> coords;
  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

struct TyurinConfig {
  PointConfig gamma;
  std::vector<std::string> alpha;
  friend bool operator==(const TyurinConfig&, const TyurinConfig&) = default;
};

/// The workbench input document. Scalars stay strings until to_spec so the
/// echo reproduces the input exactly.
struct WorkbenchConfig {
  int genus = 1;
  std::string a = "0";
  std::string b = "0";
  PointConfig p_plus;
  PointConfig p_minus;
  std::string algebra_type = "gl";
  int algebra_n = 2;
  std::vector<TyurinConfig> tyurin;
  int window_min = -4;
  int window_max = 4;
  int p_minus_pole_budget = 6;
  unsigned seed = 1;

  friend bool operator==(const WorkbenchConfig&, const WorkbenchConfig&) = default;
};

/// Throws ConfigError naming the offending field.
WorkbenchConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const WorkbenchConfig& c);
/// Reads and parses a file, or stdin for "-"; syntax errors report line
/// and column.
WorkbenchConfig load_config(const std::string& path);
WorkbenchConfig parse_config_text(const std::string& text);

/// Builds and validates the algebra spec; throws ConfigError.
AlgebraSpec to_spec(const WorkbenchConfig& c);

/// Hex SHA-256 of the canonical JSON of the config.
std::string config_hash(const WorkbenchConfig& c);

/// "MIN:MAX"; throws ConfigError.
std::pair<int, int> parse_window(const std::string& text);

}  // namespace laxwb
