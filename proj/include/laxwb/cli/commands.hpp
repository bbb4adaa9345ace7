#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "laxwb/cli/config.hpp"
#include "laxwb/cocycle/cocycle.hpp"

namespace laxwb {

/// A report document and whether every property it checked holds.
struct Report {
  nlohmann::json document;
  bool passed = true;
};

std::string workbench_version();

/// Runs the whole property suite over the config window.
Report cmd_verify(const WorkbenchConfig& config);
/// Graded basis of one degree, or of every degree in the window.
Report cmd_basis(const WorkbenchConfig& config, std::optional<int> degree = std::nullopt);
Report cmd_brackets(const WorkbenchConfig& config);
Report cmd_cocycle(const WorkbenchConfig& config, CocycleKind kind);
Report cmd_connection(const WorkbenchConfig& config);
/// Basis, brackets, connection and both cocycle tables in one document.
Report cmd_export(const WorkbenchConfig& config);

/// Two-space indented JSON with sorted keys and a trailing newline.
std::string render(const Report& report);

}  // namespace laxwb
