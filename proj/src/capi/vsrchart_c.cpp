#include "vsrchart/vsrchart.h"

#include <string>

#include "common/fs_util.hpp"
#include "core/json_io.hpp"
#include "ops/run_ops.hpp"

using namespace vsrchart;

struct vsr_report {
  std::string json;
};

namespace {

thread_local std::string g_last_error;

vsr_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kUsage: return VSR_ERR_USAGE;
    case ErrorCode::kConfig: return VSR_ERR_CONFIG;
    case ErrorCode::kIo: return VSR_ERR_IO;
    case ErrorCode::kEndpoint:
    case ErrorCode::kProtocol: return VSR_ERR_ENDPOINT;
    case ErrorCode::kGeneration: return VSR_ERR_GENERATION;
    case ErrorCode::kOutOfRange:
    case ErrorCode::kLayout: return VSR_ERR_USAGE;
    case ErrorCode::kInternal: return VSR_ERR_INTERNAL;
  }
  return VSR_ERR_INTERNAL;
}

template <typename Fn>
vsr_status run_op(vsr_report** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    nlohmann::ordered_json j = fn();
    if (out) *out = new vsr_report{to_stable_string(j)};
    g_last_error.clear();
    return VSR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VSR_ERR_INTERNAL;
  }
}

vsr_status require(bool ok, const char* message) {
  if (ok) return VSR_OK;
  g_last_error = message;
  return VSR_ERR_USAGE;
}

}  // namespace

extern "C" {

const char* vsr_version(void) { return VSRCHART_VERSION; }

const char* vsr_status_name(vsr_status status) {
  switch (status) {
    case VSR_OK: return "ok";
    case VSR_ERR_USAGE: return "usage";
    case VSR_ERR_CONFIG: return "config";
    case VSR_ERR_IO: return "io";
    case VSR_ERR_ENDPOINT: return "endpoint";
    case VSR_ERR_GENERATION: return "generation";
    case VSR_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

const char* vsr_last_error(void) { return g_last_error.c_str(); }

vsr_status vsr_report_json(const vsr_report* report, const char** out_json) {
  if (vsr_status s = require(report && out_json, "vsr_report_json: null argument"))
    return s;
  *out_json = report->json.c_str();
  return VSR_OK;
}

vsr_status vsr_report_write(const vsr_report* report, const char* path) {
  if (vsr_status s = require(report && path, "vsr_report_write: null argument"))
    return s;
  try {
    atomic_write_file(path, report->json);
    return VSR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  }
}

void vsr_report_free(vsr_report* report) { delete report; }

vsr_status vsr_generate(const char* config_json, uint64_t n, const char* out_dir,
                        int with_training_samples, int jobs, vsr_report** out) {
  if (vsr_status s = require(out_dir != nullptr, "vsr_generate: out_dir is required"))
    return s;
  return run_op(out, [&] {
    ops::GenerateOptions options;
    if (config_json && *config_json) {
      const auto j = parse_json(config_json, "generator config");
      options.config = engine::GeneratorConfig::from_json(j);
      if (j.contains("perturbation"))
        options.perturbation = engine::PerturbationSpec::from_json(j["perturbation"]);
    }
    options.n = n;
    options.out_dir = out_dir;
    options.with_training_samples = with_training_samples != 0;
    options.jobs = jobs;
    return ops::op_generate(options);
  });
}

vsr_status vsr_evaluate(const char* pred_dir, const char* gt_dir,
                        const char* iou_thresholds_csv, const char* preset,
                        vsr_report** out) {
  if (vsr_status s =
          require(pred_dir && gt_dir, "vsr_evaluate: pred_dir and gt_dir are required"))
    return s;
  return run_op(out, [&] {
    std::optional<std::string> thresholds;
    if (iou_thresholds_csv && *iou_thresholds_csv) thresholds = iou_thresholds_csv;
    return ops::op_evaluate(pred_dir, gt_dir, thresholds, preset ? preset : "all");
  });
}

vsr_status vsr_quality(const char* corpus_dir, int top_k, vsr_report** out) {
  if (vsr_status s = require(corpus_dir != nullptr, "vsr_quality: corpus_dir is required"))
    return s;
  return run_op(out, [&] { return ops::op_quality(corpus_dir, top_k > 0 ? top_k : 100); });
}

vsr_status vsr_parse_run(const char* input_path, const char* client_config_json,
                         const char* mode, int n_max, int jobs, int save_rounds,
                         const char* out_dir, vsr_report** out) {
  if (vsr_status s = require(input_path && client_config_json && out_dir,
                             "vsr_parse_run: input_path, client config and out_dir "
                             "are required"))
    return s;
  return run_op(out, [&] {
    ops::ParseOptions options;
    options.input_path = input_path;
    options.client_config = parse_json(client_config_json, "client config");
    options.mode = mode ? mode : "vsr";
    options.n_max = n_max;
    options.jobs = jobs;
    options.save_rounds = save_rounds != 0;
    options.out_dir = out_dir;
    return ops::op_parse(options);
  });
}

vsr_status vsr_simulate(const char* corpus_dir, const char* simulator_config_json,
                        int n_max, int trials, int jobs, uint64_t seed,
                        const char* out_dir, vsr_report** out) {
  if (vsr_status s = require(corpus_dir && out_dir,
                             "vsr_simulate: corpus_dir and out_dir are required"))
    return s;
  return run_op(out, [&] {
    ops::SimulateOptions options;
    options.corpus_dir = corpus_dir;
    if (simulator_config_json && *simulator_config_json)
      options.spec =
          SimulatorSpec::from_json(parse_json(simulator_config_json, "simulator config"));
    options.n_max = n_max;
    options.trials = trials;
    options.jobs = jobs;
    options.seed = seed;
    options.out_dir = out_dir;
    return ops::op_simulate(options);
  });
}

}  // extern "C"
