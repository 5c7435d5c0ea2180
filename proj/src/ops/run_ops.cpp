#include "ops/run_ops.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <sstream>

#include "common/fs_util.hpp"
#include "common/rng.hpp"
#include "common/thread_pool.hpp"
#include "core/json_io.hpp"
#include "core/triplets.hpp"
#include "engine/generator.hpp"
#include "engine/training_samples.hpp"
#include "quality/metrics.hpp"
#include "render/png_io.hpp"
#include "scrm/scrm.hpp"
#include "vsr/analytics.hpp"
#include "vsr/loop.hpp"
#include "vsr/remote.hpp"

namespace vsrchart::ops {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string tool_version() { return VSRCHART_VERSION; }

namespace {

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class ManifestWriter {
 public:
  ManifestWriter(std::string subcommand, ordered_json config_echo)
      : subcommand_(std::move(subcommand)), config_(std::move(config_echo)),
        started_(iso_timestamp()) {}

  ordered_json finish(const std::vector<std::string>& outputs) const {
    ordered_json m;
    m["subcommand"] = subcommand_;
    m["config"] = config_;
    m["tool_version"] = tool_version();
    m["started_at"] = started_;
    m["finished_at"] = iso_timestamp();
    m["outputs"] = outputs;
    return m;
  }

  void write(const fs::path& dir, const std::vector<std::string>& outputs) const {
    atomic_write_file(dir / "run_manifest.json", to_stable_string(finish(outputs)));
  }

 private:
  std::string subcommand_;
  ordered_json config_;
  std::string started_;
};

int effective_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

}  // namespace

std::vector<double> parse_thresholds_csv(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("invalid IoU threshold: " + item);
    }
  }
  scrm::validate_iou_thresholds(out);
  return out;
}

ordered_json op_generate(const GenerateOptions& options) {
  if (options.n < 1) throw UsageError("generate: n must be >= 1");
  options.config.validate();
  options.perturbation.validate();
  ensure_directory(options.out_dir);
  const fs::path out_dir(options.out_dir);

  ordered_json config_echo = options.config.to_json();
  config_echo["n"] = options.n;
  config_echo["with_training_samples"] = options.with_training_samples;
  if (options.with_training_samples)
    config_echo["perturbation"] = options.perturbation.to_json();
  ManifestWriter manifest("generate", config_echo);

  struct SlotStats {
    std::string id;
    std::string type;
    int series = 0;
    int points = 0;
    int attempts = 0;
  };
  std::vector<SlotStats> stats(options.n);
  std::vector<std::string> sample_lines(options.n);

  engine::generate_corpus(
      options.config, options.n, effective_jobs(options.jobs),
      [&](engine::GeneratedChart&& generated, std::size_t index) {
        const RenderedChart& chart = generated.chart;
        const std::string& id = chart.annotation.chart_id;
        write_png((out_dir / (id + ".png")).string(), chart.image);
        atomic_write_file(out_dir / (id + ".json"),
                          to_stable_string(annotation_to_json(chart.annotation)));

        if (options.with_training_samples) {
          const auto set = engine::build_training_samples(
              chart, options.perturbation, derive_seed(options.config.seed, 0xabcd00 + index));
          for (const auto& [name, overlay] : set.overlays)
            write_png((out_dir / name).string(), overlay);
          std::string lines;
          for (const auto& sample : set.samples)
            lines += engine::sample_to_json(sample).dump() + "\n";
          sample_lines[index] = std::move(lines);
        }

        SlotStats s;
        s.id = id;
        s.type = chart_type_name(chart.annotation.chart_type);
        s.series = int(chart.annotation.series.size());
        s.points = int(chart.annotation.point_count());
        s.attempts = generated.attempts;
        stats[index] = std::move(s);
      });

  ordered_json chart_stats = ordered_json::array();
  std::size_t total_points = 0;
  for (const auto& s : stats) {
    chart_stats.push_back({{"chart_id", s.id},
                           {"chart_type", s.type},
                           {"series", s.series},
                           {"points", s.points},
                           {"attempts", s.attempts}});
    total_points += std::size_t(s.points);
  }
  ordered_json corpus_manifest;
  corpus_manifest["config"] = options.config.to_json();
  corpus_manifest["chart_count"] = options.n;
  corpus_manifest["avg_points_per_chart"] = double(total_points) / double(options.n);
  corpus_manifest["charts"] = std::move(chart_stats);
  atomic_write_file(out_dir / "manifest.json", to_stable_string(corpus_manifest));

  std::vector<std::string> outputs = {"manifest.json"};
  if (options.with_training_samples) {
    std::string jsonl;
    for (const auto& lines : sample_lines) jsonl += lines;
    atomic_write_file(out_dir / "training_samples.jsonl", jsonl);
    outputs.push_back("training_samples.jsonl");
  }
  manifest.write(out_dir, outputs);

  ordered_json report;
  report["out_dir"] = options.out_dir;
  report["chart_count"] = options.n;
  report["avg_points_per_chart"] = corpus_manifest["avg_points_per_chart"];
  report["training_samples"] =
      options.with_training_samples ? ordered_json(4 * options.n) : ordered_json(0);
  report["manifest"] = manifest.finish(outputs);
  return report;
}

ordered_json op_evaluate(const std::string& pred_dir, const std::string& gt_dir,
                         const std::optional<std::string>& thresholds_csv,
                         const std::string& preset) {
  std::vector<double> thresholds = thresholds_csv
                                       ? parse_thresholds_csv(*thresholds_csv)
                                       : scrm::default_iou_thresholds();
  std::vector<scrm::ScrmSetting> settings;
  if (preset == "all" || preset.empty()) {
    settings = scrm::all_settings();
  } else if (preset == "strict") {
    settings = {scrm::strict_setting()};
  } else if (preset == "slight") {
    settings = {scrm::slight_setting()};
  } else if (preset == "high") {
    settings = {scrm::high_setting()};
  } else {
    throw UsageError("unknown preset: " + preset + " (strict|slight|high|all)");
  }

  ManifestWriter manifest("eval", {{"pred_dir", pred_dir},
                                   {"gt_dir", gt_dir},
                                   {"preset", preset.empty() ? "all" : preset}});
  const auto report = scrm::evaluate_dirs(pred_dir, gt_dir, thresholds, settings);
  ordered_json j = scrm::report_to_json(report);
  j["manifest"] = manifest.finish({});
  return j;
}

ordered_json op_quality(const std::string& corpus_dir, int k) {
  ManifestWriter manifest("quality", {{"corpus", corpus_dir}, {"k", k}});
  const auto corpus = quality::load_corpus(corpus_dir);
  if (corpus.empty()) throw UsageError("quality: no annotations found in " + corpus_dir);
  const auto stats = quality::compute_corpus_stats(corpus, k);
  ordered_json j = quality::stats_to_json(stats);
  j["manifest"] = manifest.finish({});
  return j;
}

namespace {

struct ParseTarget {
  std::string chart_id;
  fs::path image_path;
  std::optional<ChartAnnotation> annotation;
};

std::vector<ParseTarget> collect_targets(const std::string& input_path) {
  std::vector<ParseTarget> targets;
  if (fs::is_directory(input_path)) {
    for (const auto& png : list_files(input_path, ".png")) {
      if (png.stem().string().find(".refine_") != std::string::npos) continue;
      if (png.stem().string().find(".round_") != std::string::npos) continue;
      ParseTarget t;
      t.chart_id = png.stem().string();
      t.image_path = png;
      const fs::path sidecar = png.parent_path() / (t.chart_id + ".json");
      if (fs::exists(sidecar))
        t.annotation = annotation_from_json(parse_json(read_file(sidecar), sidecar.string()));
      targets.push_back(std::move(t));
    }
  } else if (fs::exists(input_path)) {
    ParseTarget t;
    t.image_path = input_path;
    t.chart_id = t.image_path.stem().string();
    const fs::path sidecar = t.image_path.parent_path() / (t.chart_id + ".json");
    if (fs::exists(sidecar))
      t.annotation = annotation_from_json(parse_json(read_file(sidecar), sidecar.string()));
    targets.push_back(std::move(t));
  } else {
    throw IoError("parse input not found: " + input_path);
  }
  if (targets.empty()) throw UsageError("no chart images found in " + input_path);
  return targets;
}

}  // namespace

ordered_json op_parse(const ParseOptions& options) {
  if (options.mode != "vsr" && options.mode != "anchors-only" && options.mode != "direct")
    throw UsageError("parse: mode must be vsr, anchors-only or direct");
  if (options.mode == "vsr" && options.n_max < 1)
    throw UsageError("parse: n_max must be >= 1");
  ensure_directory(options.out_dir);
  const fs::path out_dir(options.out_dir);

  const std::string client_type = options.client_config.value("type", std::string{});
  if (client_type != "simulator" && client_type != "remote")
    throw ConfigError("client config: type must be 'simulator' or 'remote'");

  SimulatorSpec sim_spec;
  std::uint64_t sim_seed = 1;
  std::unique_ptr<RemoteClient> remote;
  if (client_type == "simulator") {
    sim_spec = SimulatorSpec::from_json(options.client_config);
    if (options.client_config.contains("seed"))
      sim_seed = options.client_config["seed"].get<std::uint64_t>();
  } else {
    remote = make_remote_client(EndpointConfig::from_json(options.client_config));
  }

  const auto targets = collect_targets(options.input_path);

  ordered_json client_echo = options.client_config;
  if (client_type == "remote") client_echo.erase("api_key");  // never persist secrets
  ManifestWriter manifest("parse", {{"input", options.input_path},
                                    {"mode", options.mode},
                                    {"n_max", options.n_max},
                                    {"client", client_echo}});

  struct Outcome {
    bool ok = false;
    int call_count = 0;
    std::string error;
  };
  std::vector<Outcome> outcomes(targets.size());

  parallel_for(targets.size(), effective_jobs(options.jobs), [&](std::size_t i) {
    const auto& target = targets[i];
    Outcome& outcome = outcomes[i];
    try {
      const Image image = read_png(target.image_path.string());
      std::unique_ptr<ModelClient> owned;
      ModelClient* client = nullptr;
      if (client_type == "simulator") {
        if (!target.annotation)
          throw ConfigError(target.chart_id +
                            ": simulator client requires a sidecar annotation JSON");
        owned = make_simulated_client(*target.annotation, sim_spec,
                                      derive_seed(sim_seed, i));
        client = owned.get();
      } else {
        client = remote.get();
      }

      OverlaySink sink = nullptr;
      if (options.save_rounds) {
        sink = [&](int round, const Image& overlay) {
          write_png((out_dir / (target.chart_id + ".round_" + std::to_string(round) + ".png"))
                        .string(),
                    overlay);
        };
      }

      std::pair<ParseResult, RefineTranscript> run;
      if (options.mode == "vsr")
        run = run_vsr(image, *client, options.n_max, target.chart_id, sink);
      else if (options.mode == "anchors-only")
        run = run_anchors_only(image, *client, target.chart_id);
      else
        run = run_direct(image, *client, target.chart_id);

      run.first.chart_id = target.chart_id;
      run.first.validate();
      atomic_write_file(out_dir / (target.chart_id + ".parse.json"),
                        to_stable_string(parse_result_to_json(run.first)));
      atomic_write_file(out_dir / (target.chart_id + ".transcript.json"),
                        to_stable_string(transcript_to_json(run.second)));
      outcome.ok = true;
      outcome.call_count = run.second.call_count;
    } catch (const Error& e) {
      // Endpoint errors surface per chart without aborting the batch.
      outcome.error = e.what();
    }
  });

  ordered_json charts = ordered_json::array();
  int total_calls = 0;
  int failures = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    ordered_json c;
    c["chart_id"] = targets[i].chart_id;
    c["ok"] = outcomes[i].ok;
    if (outcomes[i].ok) {
      c["call_count"] = outcomes[i].call_count;
      total_calls += outcomes[i].call_count;
    } else {
      c["error"] = outcomes[i].error;
      ++failures;
    }
    charts.push_back(std::move(c));
  }

  std::vector<std::string> outputs = {"*.parse.json", "*.transcript.json"};
  manifest.write(out_dir, outputs);

  ordered_json report;
  report["mode"] = options.mode;
  report["charts"] = charts.size();
  report["failures"] = failures;
  report["total_inference_calls"] = total_calls;
  if (remote) report["transport_retries"] = remote->transport_retries();
  report["per_chart"] = std::move(charts);
  report["manifest"] = manifest.finish(outputs);
  return report;
}

ordered_json op_simulate(const SimulateOptions& options) {
  if (options.trials < 1) throw UsageError("simulate: trials must be >= 1");
  if (options.n_max < 1) throw UsageError("simulate: n_max must be >= 1");
  options.spec.validate();
  ensure_directory(options.out_dir);
  const fs::path out_dir(options.out_dir);

  const auto corpus = quality::load_corpus(options.corpus_dir);
  if (corpus.empty())
    throw UsageError("simulate: no annotations found in " + options.corpus_dir);

  std::vector<Image> images(corpus.size());
  parallel_for(corpus.size(), effective_jobs(options.jobs), [&](std::size_t i) {
    images[i] =
        read_png((fs::path(options.corpus_dir) / (corpus[i].chart_id + ".png")).string());
  });

  ManifestWriter manifest("simulate", {{"corpus", options.corpus_dir},
                                       {"simulator", options.spec.to_json()},
                                       {"n_max", options.n_max},
                                       {"trials", options.trials},
                                       {"seed", options.seed}});

  struct Cell {
    RefineTranscript transcript;
    std::vector<Triplet> vsr_triplets;
    std::vector<Triplet> anchors_only_triplets;
  };
  const std::size_t total = corpus.size() * std::size_t(options.trials);
  std::vector<Cell> cells(total);

  parallel_for(total, effective_jobs(options.jobs), [&](std::size_t slot) {
    const std::size_t trial = slot / corpus.size();
    const std::size_t ci = slot % corpus.size();
    const ChartAnnotation& annotation = corpus[ci];
    const std::uint64_t seed = derive_seed(derive_seed(options.seed, trial), ci);

    auto vsr_client = make_simulated_client(annotation, options.spec, seed);
    auto [vsr_parse, transcript] =
        run_vsr(images[ci], *vsr_client, options.n_max, annotation.chart_id);

    // Same seed, so the paired baseline sees the identical initial
    // localizations.
    auto baseline_client = make_simulated_client(annotation, options.spec, seed);
    auto baseline_run =
        run_anchors_only(images[ci], *baseline_client, annotation.chart_id);

    Cell cell;
    cell.transcript = std::move(transcript);
    cell.vsr_triplets = triplets_from(vsr_parse);
    cell.anchors_only_triplets = triplets_from(baseline_run.first);
    cells[slot] = std::move(cell);
  });

  std::vector<ChartRecord> records;
  records.reserve(total);
  std::map<std::string, std::vector<Triplet>> gt, vsr_preds, baseline_preds;
  for (std::size_t slot = 0; slot < total; ++slot) {
    const std::size_t trial = slot / corpus.size();
    const std::size_t ci = slot % corpus.size();
    const ChartAnnotation& annotation = corpus[ci];
    std::vector<PixelPoint> anchors;
    for (const auto& s : annotation.series)
      for (const auto& p : s.points) anchors.push_back(p.px);
    records.push_back(ChartRecord{cells[slot].transcript, std::move(anchors)});

    const std::string key = annotation.chart_id + "#" + std::to_string(trial);
    gt[key] = triplets_from(annotation);
    vsr_preds[key] = std::move(cells[slot].vsr_triplets);
    baseline_preds[key] = std::move(cells[slot].anchors_only_triplets);
  }

  const auto stats = round_analytics(records);
  const auto vsr_report = scrm::evaluate(vsr_preds, gt);
  const auto baseline_report = scrm::evaluate(baseline_preds, gt);

  ordered_json j;
  j["charts"] = corpus.size();
  j["trials"] = options.trials;
  j["n_max"] = options.n_max;
  j["simulator"] = options.spec.to_json();
  j["rounds"] = round_stats_to_json(stats);
  ordered_json scrm_json;
  for (const auto& [name, ap] : vsr_report.ap) scrm_json["vsr"][name] = ap;
  for (const auto& [name, ap] : baseline_report.ap) scrm_json["anchors_only"][name] = ap;
  j["scrm"] = std::move(scrm_json);

  // The on-disk report stays timestamp-free so reruns are byte-identical;
  // only run_manifest.json carries wall-clock times.
  atomic_write_file(out_dir / "simulation_report.json", to_stable_string(j));
  manifest.write(out_dir, {"simulation_report.json"});
  j["manifest"] = manifest.finish({"simulation_report.json"});
  return j;
}

}  // namespace vsrchart::ops
