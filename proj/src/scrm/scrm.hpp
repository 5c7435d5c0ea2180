#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/types.hpp"

namespace vsrchart::scrm {

// Threshold pair for triplet matching: J_thr bounds the summed edit distance
// over the series and category labels, e_thr the relative value error.
struct ScrmSetting {
  std::string name;
  int j_thr = 0;
  double e_thr = 0.0;
};

ScrmSetting strict_setting();   // (0, 0)
ScrmSetting slight_setting();   // (2, 0.05)
ScrmSetting high_setting();     // (5, 0.10)
std::vector<ScrmSetting> all_settings();

// Default IoU threshold grid {0.50, 0.55, ..., 0.95}.
std::vector<double> default_iou_thresholds();
void validate_iou_thresholds(const std::vector<double>& thresholds);

struct ChartScore {
  std::string chart_id;
  double iou = 0.0;
  int matched = 0;
  int p_count = 0;
  int q_count = 0;
};

// Unit-cost edit distance over Unicode scalar values.
int levenshtein(const std::string& a, const std::string& b);

// |pred - gt| / |gt|; for gt == 0 returns 0 when pred == 0 and infinity
// otherwise (relative error is undefined at zero).
double relative_error(double pred, double gt);

// Both comparisons inclusive. Labels are compared after stripping leading
// and trailing whitespace, case-sensitively.
bool triplet_match(const Triplet& p, const Triplet& q, const ScrmSetting& s);

// Image-level structural IoU with a maximum one-to-one matching between
// predicted and ground-truth triplets. IoU is 1 when both sides are empty
// and 0 when exactly one side is.
ChartScore image_iou(std::span<const Triplet> preds, std::span<const Triplet> gts,
                     const ScrmSetting& s, const std::string& chart_id = {});

// Dataset-level average precision over the IoU threshold grid (inclusive
// comparison at every threshold).
double dataset_ap(std::span<const ChartScore> scores,
                  const std::vector<double>& thresholds);

struct EvaluationReport {
  std::map<std::string, double> ap;                             // preset -> AP
  std::map<std::string, std::vector<ChartScore>> per_chart;     // preset -> scores
  std::vector<double> iou_thresholds;
  std::vector<std::string> missing_predictions;                 // ids scored 0
};

// Scores per-chart predictions against ground truth under each preset.
// Chart id sets must agree except that charts missing from `predictions`
// score IoU 0; duplicate ids raise an error upstream (maps cannot hold them).
EvaluationReport evaluate(const std::map<std::string, std::vector<Triplet>>& predictions,
                          const std::map<std::string, std::vector<Triplet>>& ground_truth,
                          const std::vector<double>& thresholds = default_iou_thresholds(),
                          const std::vector<ScrmSetting>& settings = all_settings());

nlohmann::ordered_json report_to_json(const EvaluationReport& report);

// Directory-level runner. Ground-truth files are annotation JSONs or triplet
// files; prediction files are parse-result JSONs or triplet files
// ({"chart_id":..., "triplets":[{"series","category","value"}...]}).
// manifest.json and other non-chart JSON files are skipped. Duplicate chart
// ids across files raise UsageError.
EvaluationReport evaluate_dirs(const std::string& pred_dir, const std::string& gt_dir,
                               const std::vector<double>& thresholds = default_iou_thresholds(),
                               const std::vector<ScrmSetting>& settings = all_settings());

// Reads one prediction/ground-truth file into (chart_id, triplets);
// std::nullopt when the file is not a chart payload (e.g. a manifest).
std::optional<std::pair<std::string, std::vector<Triplet>>> read_triplet_file(
    const std::string& path);

}  // namespace vsrchart::scrm
