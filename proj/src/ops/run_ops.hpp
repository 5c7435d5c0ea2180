#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "engine/generator_config.hpp"
#include "vsr/simulator.hpp"

namespace vsrchart::ops {

// High-level operations behind the CLI subcommands and the C API. Each
// writes outputs atomically; directory-producing runs also write
// run_manifest.json (the one output carrying wall-clock timestamps, so byte
// comparisons of repeated runs exclude it).

struct GenerateOptions {
  engine::GeneratorConfig config;
  std::uint64_t n = 1;
  std::string out_dir;
  bool with_training_samples = false;
  engine::PerturbationSpec perturbation = engine::default_perturbation();
  int jobs = 0;  // <= 0: hardware concurrency
};

nlohmann::ordered_json op_generate(const GenerateOptions& options);

nlohmann::ordered_json op_evaluate(const std::string& pred_dir, const std::string& gt_dir,
                                   const std::optional<std::string>& thresholds_csv,
                                   const std::string& preset);

nlohmann::ordered_json op_quality(const std::string& corpus_dir, int k);

struct ParseOptions {
  std::string input_path;  // corpus directory or single PNG
  nlohmann::json client_config;
  std::string mode = "vsr";  // vsr | anchors-only | direct
  int n_max = 3;
  int jobs = 0;
  bool save_rounds = false;
  std::string out_dir;
};

nlohmann::ordered_json op_parse(const ParseOptions& options);

struct SimulateOptions {
  std::string corpus_dir;
  SimulatorSpec spec;
  int n_max = 3;
  int trials = 1;
  int jobs = 0;
  std::uint64_t seed = 1;
  std::string out_dir;
};

nlohmann::ordered_json op_simulate(const SimulateOptions& options);

// Shared helpers.
std::vector<double> parse_thresholds_csv(const std::string& csv);
std::string tool_version();

}  // namespace vsrchart::ops
