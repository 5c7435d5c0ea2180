// vsrchart CLI: chart corpus generation, SCRM evaluation, dataset quality
// metrics, model-driven parsing and refine-loop simulation. Thin shell over
// the libvsrchart C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "vsrchart/vsrchart.h"

namespace {

using nlohmann::json;

// Exit codes: 0 ok, 2 usage, 3 config, 4 io, 5 endpoint, 6 generation,
// 70 internal.
int exit_code_for(vsr_status status) {
  switch (status) {
    case VSR_OK: return 0;
    case VSR_ERR_USAGE: return 2;
    case VSR_ERR_CONFIG: return 3;
    case VSR_ERR_IO: return 4;
    case VSR_ERR_ENDPOINT: return 5;
    case VSR_ERR_GENERATION: return 6;
    case VSR_ERR_INTERNAL: return 70;
  }
  return 70;
}

int fail(vsr_status status) {
  std::cerr << "error (" << vsr_status_name(status) << "): " << vsr_last_error() << "\n";
  return exit_code_for(status);
}

struct Report {
  vsr_report* handle = nullptr;
  ~Report() { vsr_report_free(handle); }

  json parsed() const {
    const char* text = nullptr;
    if (vsr_report_json(handle, &text) != VSR_OK) return json();
    return json::parse(text);
  }
};

std::string read_file_or_die(const std::string& path, int& rc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error (io): cannot read " << path << "\n";
    rc = 4;
    return {};
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int write_report(const Report& report, const std::string& out_path, bool print_json) {
  if (!out_path.empty()) {
    if (vsr_status s = vsr_report_write(report.handle, out_path.c_str()); s != VSR_OK)
      return fail(s);
    std::cout << "report written to " << out_path << "\n";
  }
  if (print_json || out_path.empty()) {
    const char* text = nullptr;
    vsr_report_json(report.handle, &text);
    std::cout << text;
  }
  return 0;
}

void print_ap_summary(const json& report) {
  if (!report.contains("ap")) return;
  std::printf("SCRM average precision:\n");
  for (const auto& [name, value] : report["ap"].items())
    std::printf("  %-6s %.6f\n", name.c_str(), value.get<double>());
  if (report.contains("missing_predictions"))
    std::printf("warning: %zu chart(s) had no prediction file:\n",
                report["missing_predictions"].size());
  if (report.contains("missing_predictions"))
    for (const auto& id : report["missing_predictions"])
      std::printf("  missing: %s\n", id.get<std::string>().c_str());
}

void print_rounds_table(const json& report) {
  if (!report.contains("rounds")) return;
  std::printf("%-12s  %-14s  %-12s  %-20s\n", "refine round", "error samples",
              "error recall", "correct confirmation");
  for (const auto& row : report["rounds"]) {
    auto pct = [](const json& v) {
      return v.is_null() ? std::string("-")
                         : (std::to_string(v.get<double>() * 100.0).substr(0, 5) + "%");
    };
    std::printf("%-12d  %-14d  %-12s  %-20s\n", row["round"].get<int>(),
                row["error_samples"].get<int>(), pct(row["error_recall"]).c_str(),
                pct(row["correct_confirmation"]).c_str());
  }
  if (report.contains("scrm")) {
    std::printf("paired SCRM AP (vsr vs anchors-only):\n");
    for (const auto& [name, value] : report["scrm"]["vsr"].items())
      std::printf("  %-6s %.6f vs %.6f\n", name.c_str(), value.get<double>(),
                  report["scrm"]["anchors_only"][name].get<double>());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chart parsing toolkit: synthetic corpora, SCRM evaluation and "
               "visual self-refine runs"};
  app.set_version_flag("--version", std::string(vsr_version()));
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "generate a synthetic chart corpus");
  std::string gen_config, gen_out;
  std::uint64_t gen_n = 0;
  std::optional<std::uint64_t> gen_seed;
  bool gen_samples = false;
  int gen_jobs = 0;
  generate->add_option("-n,--count", gen_n, "number of charts")->required();
  generate->add_option("--config", gen_config, "generator config JSON file");
  generate->add_option("--seed", gen_seed, "seed override");
  generate->add_option("-o,--out", gen_out, "output directory")->required();
  generate->add_flag("--with-training-samples", gen_samples,
                     "emit refine/decode training samples (JSON lines)");
  generate->add_option("-j,--jobs", gen_jobs, "worker threads (default: cpu count)");

  // eval
  auto* eval = app.add_subcommand("eval", "SCRM evaluation of predictions vs ground truth");
  std::string eval_pred, eval_gt, eval_thresholds, eval_preset = "all", eval_out;
  eval->add_option("--pred-dir", eval_pred, "prediction directory")->required();
  eval->add_option("--gt-dir", eval_gt, "ground-truth directory")->required();
  eval->add_option("--iou-thresholds", eval_thresholds,
                   "comma-separated IoU thresholds (default 0.50..0.95)");
  eval->add_option("--preset", eval_preset, "strict|slight|high|all");
  eval->add_option("-o,--out", eval_out, "write report JSON here");

  // quality
  auto* quality = app.add_subcommand("quality", "dataset quality metrics over a corpus");
  std::string quality_corpus, quality_out;
  int quality_k = 100;
  quality->add_option("--corpus", quality_corpus, "corpus directory")->required();
  quality->add_option("--k", quality_k, "top-k label pairs for PMI (default 100)");
  quality->add_option("-o,--out", quality_out, "write stats JSON here");

  // parse
  auto* parse = app.add_subcommand("parse", "parse chart image(s) with a model client");
  std::string parse_input, parse_client, parse_mode = "vsr", parse_out;
  int parse_nmax = 3, parse_jobs = 0;
  bool parse_save_rounds = false, parse_no_vsr = false;
  parse->add_option("-i,--input", parse_input, "chart PNG or corpus directory")->required();
  parse->add_option("--client", parse_client, "client config JSON file")->required();
  parse->add_option("--mode", parse_mode, "vsr|anchors-only|direct (default vsr)");
  parse->add_flag("--no-vsr", parse_no_vsr, "shortcut for --mode anchors-only");
  parse->add_option("--n-max", parse_nmax, "max refine rounds (default 3)");
  parse->add_flag("--save-rounds", parse_save_rounds, "write per-round overlay PNGs");
  parse->add_option("-j,--jobs", parse_jobs, "worker threads");
  parse->add_option("-o,--out", parse_out, "output directory")->required();

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "refine-loop simulation study over a corpus");
  std::string sim_corpus, sim_config, sim_out;
  int sim_nmax = 3, sim_trials = 1, sim_jobs = 0;
  std::uint64_t sim_seed = 1;
  simulate->add_option("--corpus", sim_corpus, "annotated corpus directory")->required();
  simulate->add_option("--simulator", sim_config, "simulator spec JSON file");
  simulate->add_option("--n-max", sim_nmax, "max refine rounds (default 3)");
  simulate->add_option("--trials", sim_trials, "trials per chart (default 1)");
  simulate->add_option("--seed", sim_seed, "simulation seed");
  simulate->add_option("-j,--jobs", sim_jobs, "worker threads");
  simulate->add_option("-o,--out", sim_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (generate->parsed()) {
    json config = json::object();
    if (!gen_config.empty()) {
      int rc = 0;
      const std::string text = read_file_or_die(gen_config, rc);
      if (rc) return rc;
      config = json::parse(text, nullptr, false);
      if (config.is_discarded()) {
        std::cerr << "error (config): " << gen_config << " is not valid JSON\n";
        return 3;
      }
    }
    if (gen_seed) config["seed"] = *gen_seed;
    Report report;
    const std::string config_text = config.dump();
    if (vsr_status s = vsr_generate(config_text.c_str(), gen_n, gen_out.c_str(),
                                    gen_samples ? 1 : 0, gen_jobs, &report.handle);
        s != VSR_OK)
      return fail(s);
    const json j = report.parsed();
    std::printf("generated %llu charts into %s (avg %.2f points/chart)\n",
                static_cast<unsigned long long>(gen_n), gen_out.c_str(),
                j["avg_points_per_chart"].get<double>());
    return 0;
  }

  if (eval->parsed()) {
    Report report;
    if (vsr_status s = vsr_evaluate(eval_pred.c_str(), eval_gt.c_str(),
                                    eval_thresholds.empty() ? nullptr : eval_thresholds.c_str(),
                                    eval_preset.c_str(), &report.handle);
        s != VSR_OK)
      return fail(s);
    print_ap_summary(report.parsed());
    return write_report(report, eval_out, false);
  }

  if (quality->parsed()) {
    Report report;
    if (vsr_status s = vsr_quality(quality_corpus.c_str(), quality_k, &report.handle);
        s != VSR_OK)
      return fail(s);
    return write_report(report, quality_out, true);
  }

  if (parse->parsed()) {
    int rc = 0;
    const std::string client_text = read_file_or_die(parse_client, rc);
    if (rc) return rc;
    if (parse_no_vsr) parse_mode = "anchors-only";
    Report report;
    if (vsr_status s = vsr_parse_run(parse_input.c_str(), client_text.c_str(),
                                     parse_mode.c_str(), parse_nmax, parse_jobs,
                                     parse_save_rounds ? 1 : 0, parse_out.c_str(),
                                     &report.handle);
        s != VSR_OK)
      return fail(s);
    const json j = report.parsed();
    std::printf("parsed %d chart(s), %d failure(s), %d inference calls; results in %s\n",
                j["charts"].get<int>(), j["failures"].get<int>(),
                j["total_inference_calls"].get<int>(), parse_out.c_str());
    return j["failures"].get<int>() == 0 ? 0 : 5;
  }

  if (simulate->parsed()) {
    std::string sim_text;
    if (!sim_config.empty()) {
      int rc = 0;
      sim_text = read_file_or_die(sim_config, rc);
      if (rc) return rc;
    }
    Report report;
    if (vsr_status s = vsr_simulate(sim_corpus.c_str(),
                                    sim_text.empty() ? nullptr : sim_text.c_str(), sim_nmax,
                                    sim_trials, sim_jobs, sim_seed, sim_out.c_str(),
                                    &report.handle);
        s != VSR_OK)
      return fail(s);
    print_rounds_table(report.parsed());
    std::printf("simulation report written to %s/simulation_report.json\n", sim_out.c_str());
    return 0;
  }

  return 2;
}
