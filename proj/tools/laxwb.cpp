#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "laxwb/cli/commands.hpp"
#include "laxwb/errors.hpp"

namespace {

enum Exit { kPass = 0, kPropertyFailure = 1, kConfigError = 2, kInternal = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lax operator algebras: graded bases, brackets, connections and cocycles"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, window, out_path;
  std::optional<unsigned> seed;
  app.add_option("--config", config_path, "workbench config (JSON); - reads stdin")->required();
  app.add_option("--window", window, "degree window MIN:MAX, overriding the config");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--seed", seed, "sampling seed, overriding the config");

  auto* verify = app.add_subcommand("verify", "run the full property suite");
  auto* basis = app.add_subcommand("basis", "graded basis elements");
  std::optional<int> degree;
  basis->add_option("--degree", degree, "a single degree instead of the window");
  auto* brackets = app.add_subcommand("brackets", "structure constants on the window");
  auto* cocycle = app.add_subcommand("cocycle", "cocycle table on the window");
  std::string kind = "gamma1";
  cocycle->add_option("--kind", kind, "gamma1 or gamma2")->check(CLI::IsMember({"gamma1", "gamma2"}));
  auto* connection = app.add_subcommand("connection", "connection form and its checks");
  auto* exporter = app.add_subcommand("export", "basis, brackets, connection and both cocycles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    laxwb::WorkbenchConfig config = laxwb::load_config(config_path);
    if (!window.empty()) std::tie(config.window_min, config.window_max) = laxwb::parse_window(window);
    if (seed) config.seed = *seed;

    laxwb::Report report;
    if (verify->parsed()) {
      report = laxwb::cmd_verify(config);
    } else if (basis->parsed()) {
      report = laxwb::cmd_basis(config, degree);
    } else if (brackets->parsed()) {
      report = laxwb::cmd_brackets(config);
    } else if (cocycle->parsed()) {
      report = laxwb::cmd_cocycle(config, laxwb::parse_cocycle(kind));
    } else if (connection->parsed()) {
      report = laxwb::cmd_connection(config);
    } else if (exporter->parsed()) {
      report = laxwb::cmd_export(config);
    }

    const std::string text = laxwb::render(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kInternal;
      }
      out << text;
    }
    return report.passed ? kPass : kPropertyFailure;
  } catch (const laxwb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const laxwb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
