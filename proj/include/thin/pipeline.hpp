#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thin/builders.hpp"
#include "thin/generators.hpp"
#include "thin/json_io.hpp"

namespace thin {

struct PipelineConfig {
  /// gen, layer, build, verify, solve or ptas.
  std::string command;
  std::string input;
  std::string output;
  std::string layering_path;
  std::string system_path;
  std::string overlay_path;
  std::string td_path;
  std::string config_path;
  GeneratorSpec gen;
  std::string builder;
  std::string problem;
  int r = 1;
  int k = 1;
  int s = 2;
  std::string alpha = "1";
  std::string delta = "1/2";
  int c = 2;
  std::string t = "64";
  int level = 2;
  bool strict = false;
  std::uint64_t seed = 0;
  std::string format = "gr";
  /// 1-based ids, as in the text formats.
  std::vector<int> apex;
  std::vector<int> set;
  int root = 1;
  bool shadow = false;
  std::string method = "auto";
  bool timing = false;
};

struct PipelineResult {
  int exit_code = 0;
  std::string text;
};

/// Builder configuration: {"builder": trivial|star|layering|shadow|apex|
/// rooted|starsum|separator, "r", "apex", "center", "rays", "alpha",
/// "delta", "c", "t", "level", "strict", "base": {...}}. Vertex ids are
/// 0-based. Throws "cli.bad_config".
SystemBuilder builder_from_config(const Json &cfg, int r);

/// Top-level build; `layering` replaces the BFS layering of a top-level
/// layering or shadow builder.
OverlaySystem build_system(const Host &host, const Json &cfg, int r, int k, const std::optional<Layering> &layering);

/// Builder configuration resolved from --config or the flags.
Json resolved_builder_config(const PipelineConfig &cfg);

Json config_to_json(const PipelineConfig &cfg);

/// Runs one command. Module errors propagate as thin::Error.
PipelineResult run_pipeline(const PipelineConfig &cfg);

/// 0 ok, 1 usage, 2 certificate failure, 3 infeasible.
int exit_code_for(const std::string &error_code);

} // namespace thin
