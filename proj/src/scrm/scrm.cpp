#include "scrm/scrm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "common/fs_util.hpp"
#include "core/json_io.hpp"
#include "core/triplets.hpp"
#include "scrm/matching.hpp"

namespace vsrchart::scrm {

ScrmSetting strict_setting() { return {"strict", 0, 0.0}; }
ScrmSetting slight_setting() { return {"slight", 2, 0.05}; }
ScrmSetting high_setting() { return {"high", 5, 0.10}; }

std::vector<ScrmSetting> all_settings() {
  return {strict_setting(), slight_setting(), high_setting()};
}

std::vector<double> default_iou_thresholds() {
  std::vector<double> t;
  for (int i = 50; i <= 95; i += 5) t.push_back(double(i) / 100.0);
  return t;
}

void validate_iou_thresholds(const std::vector<double>& thresholds) {
  if (thresholds.empty()) throw UsageError("IoU threshold set must be non-empty");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] <= 0.0 || thresholds[i] > 1.0)
      throw UsageError("IoU thresholds must lie in (0, 1]");
    if (i > 0 && thresholds[i] <= thresholds[i - 1])
      throw UsageError("IoU thresholds must be strictly increasing");
  }
}

namespace {

std::vector<char32_t> decode_utf8(const std::string& s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = c;
    std::size_t len = 1;
    if ((c & 0x80u) == 0) {
      len = 1;
    } else if ((c & 0xE0u) == 0xC0u) {
      len = 2;
      cp = c & 0x1Fu;
    } else if ((c & 0xF0u) == 0xE0u) {
      len = 3;
      cp = c & 0x0Fu;
    } else if ((c & 0xF8u) == 0xF0u) {
      len = 4;
      cp = c & 0x07u;
    }
    if (i + len > s.size()) len = 1, cp = c;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0u) != 0x80u) {  // malformed; fall back to byte-wise
        len = 1;
        cp = c;
        break;
      }
      cp = (cp << 6) | (cc & 0x3Fu);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

int levenshtein(const std::string& a, const std::string& b) {
  const std::vector<char32_t> ua = decode_utf8(a);
  const std::vector<char32_t> ub = decode_utf8(b);
  const std::size_t n = ua.size(), m = ub.size();
  if (n == 0) return static_cast<int>(m);
  if (m == 0) return static_cast<int>(n);
  std::vector<int> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const int sub = prev[j - 1] + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double relative_error(double pred, double gt) {
  if (gt == 0.0) return pred == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(pred - gt) / std::abs(gt);
}

bool triplet_match(const Triplet& p, const Triplet& q, const ScrmSetting& s) {
  const int j = levenshtein(strip(p.series), strip(q.series)) +
                levenshtein(strip(p.category), strip(q.category));
  if (j > s.j_thr) return false;
  return relative_error(p.value, q.value) <= s.e_thr;
}

ChartScore image_iou(std::span<const Triplet> preds, std::span<const Triplet> gts,
                     const ScrmSetting& s, const std::string& chart_id) {
  ChartScore score;
  score.chart_id = chart_id;
  score.p_count = static_cast<int>(preds.size());
  score.q_count = static_cast<int>(gts.size());
  if (preds.empty() && gts.empty()) {
    score.iou = 1.0;
    return score;
  }
  if (preds.empty() || gts.empty()) {
    score.iou = 0.0;
    return score;
  }
  std::vector<std::vector<int>> adjacency(preds.size());
  for (std::size_t p = 0; p < preds.size(); ++p) {
    for (std::size_t q = 0; q < gts.size(); ++q) {
      if (triplet_match(preds[p], gts[q], s))
        adjacency[p].push_back(static_cast<int>(q));
    }
  }
  const std::size_t matched = max_bipartite_matching(adjacency, gts.size());
  score.matched = static_cast<int>(matched);
  score.iou = double(matched) / double(preds.size() + gts.size() - matched);
  return score;
}

double dataset_ap(std::span<const ChartScore> scores,
                  const std::vector<double>& thresholds) {
  if (scores.empty()) throw UsageError("dataset_ap: empty score list");
  validate_iou_thresholds(thresholds);
  std::size_t hits = 0;
  for (double t : thresholds)
    for (const auto& s : scores)
      if (s.iou >= t) ++hits;
  return double(hits) / (double(thresholds.size()) * double(scores.size()));
}

EvaluationReport evaluate(const std::map<std::string, std::vector<Triplet>>& predictions,
                          const std::map<std::string, std::vector<Triplet>>& ground_truth,
                          const std::vector<double>& thresholds,
                          const std::vector<ScrmSetting>& settings) {
  if (ground_truth.empty()) throw UsageError("evaluate: no ground-truth charts");
  validate_iou_thresholds(thresholds);
  for (const auto& [id, _] : predictions) {
    if (!ground_truth.count(id))
      throw UsageError("evaluate: prediction for unknown chart id '" + id + "'");
  }

  EvaluationReport report;
  report.iou_thresholds = thresholds;
  static const std::vector<Triplet> kNoPrediction;
  for (const auto& setting : settings) {
    std::vector<ChartScore> scores;
    scores.reserve(ground_truth.size());
    for (const auto& [id, gts] : ground_truth) {
      const auto it = predictions.find(id);
      const auto& preds = it == predictions.end() ? kNoPrediction : it->second;
      scores.push_back(image_iou(preds, gts, setting, id));
    }
    report.ap[setting.name] = dataset_ap(scores, thresholds);
    report.per_chart[setting.name] = std::move(scores);
  }
  for (const auto& [id, _] : ground_truth)
    if (!predictions.count(id)) report.missing_predictions.push_back(id);
  return report;
}

nlohmann::ordered_json report_to_json(const EvaluationReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json presets;
  for (const auto& s : all_settings())
    presets[s.name] = {{"j_thr", s.j_thr}, {"e_thr", s.e_thr}};
  j["presets"] = std::move(presets);
  j["iou_thresholds"] = report.iou_thresholds;
  nlohmann::ordered_json ap;
  for (const auto& [name, value] : report.ap) ap[name] = value;
  j["ap"] = std::move(ap);
  if (!report.missing_predictions.empty())
    j["missing_predictions"] = report.missing_predictions;

  nlohmann::ordered_json charts = nlohmann::ordered_json::array();
  if (!report.per_chart.empty()) {
    const auto& first = report.per_chart.begin()->second;
    for (std::size_t i = 0; i < first.size(); ++i) {
      nlohmann::ordered_json c;
      c["chart_id"] = first[i].chart_id;
      for (const auto& [name, scores] : report.per_chart) {
        c[name] = {{"iou", scores[i].iou},
                   {"matched", scores[i].matched},
                   {"p_count", scores[i].p_count},
                   {"q_count", scores[i].q_count}};
      }
      charts.push_back(std::move(c));
    }
  }
  j["per_chart"] = std::move(charts);
  return j;
}

std::optional<std::pair<std::string, std::vector<Triplet>>> read_triplet_file(
    const std::string& path) {
  const auto j = parse_json(read_file(path), path);
  if (!j.is_object() || !j.contains("chart_id")) return std::nullopt;

  std::vector<Triplet> triplets;
  if (j.contains("triplets")) {
    for (const auto& t : j["triplets"]) {
      triplets.push_back(Triplet{t.at("series").get<std::string>(),
                                 t.at("category").get<std::string>(),
                                 t.at("value").get<double>()});
    }
  } else if (j.contains("calibration")) {
    triplets = triplets_from(annotation_from_json(j));
  } else if (j.contains("series")) {
    triplets = triplets_from(parse_result_from_json(j));
  } else {
    return std::nullopt;
  }
  return std::make_pair(j.at("chart_id").get<std::string>(), std::move(triplets));
}

EvaluationReport evaluate_dirs(const std::string& pred_dir, const std::string& gt_dir,
                               const std::vector<double>& thresholds,
                               const std::vector<ScrmSetting>& settings) {
  auto load_dir = [](const std::string& dir) {
    std::map<std::string, std::vector<Triplet>> out;
    for (const auto& path : list_files(dir, ".json")) {
      if (path.filename() == "manifest.json" || path.filename() == "run_manifest.json")
        continue;
      auto entry = read_triplet_file(path.string());
      if (!entry) continue;
      if (!out.emplace(entry->first, std::move(entry->second)).second)
        throw UsageError("duplicate chart id '" + entry->first + "' in " + dir);
    }
    return out;
  };
  const auto gt = load_dir(gt_dir);
  if (gt.empty()) throw UsageError("no ground-truth charts found in " + gt_dir);
  // Missing prediction files score 0; predictions without a ground-truth
  // counterpart are rejected by evaluate().
  auto preds = load_dir(pred_dir);
  return evaluate(preds, gt, thresholds, settings);
}

}  // namespace vsrchart::scrm
