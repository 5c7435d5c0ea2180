#include "quality/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "common/fs_util.hpp"
#include "core/json_io.hpp"
#include "core/triplets.hpp"

namespace vsrchart::quality {

double avg_points(std::span<const ChartAnnotation> corpus) {
  if (corpus.empty()) throw UsageError("avg_points: empty corpus");
  std::size_t total = 0;
  for (const auto& chart : corpus) total += chart.point_count();
  return double(total) / double(corpus.size());
}

double unique_numerical_ratio(std::span<const ChartAnnotation> corpus) {
  std::unordered_set<std::string> unique;
  std::size_t total = 0;
  for (const auto& chart : corpus) {
    const bool numeric_x = chart.x_axis.kind == AxisKind::kNumeric;
    for (const auto& s : chart.series) {
      for (const auto& p : s.points) {
        unique.insert(canonical_decimal(p.y));
        ++total;
        if (numeric_x && p.x) {
          unique.insert(canonical_decimal(*p.x));
          ++total;
        }
      }
    }
  }
  if (total == 0) throw UsageError("unique_numerical_ratio: corpus has no numeric values");
  return double(unique.size()) / double(total);
}

namespace {

// Alignment key for correlation pairing: category string on categorical
// axes, canonical x rendering on numeric axes.
std::vector<std::pair<std::string, double>> aligned_values(const ChartAnnotation& chart,
                                                           const SeriesAnnotation& s) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& p : s.points) {
    if (chart.x_axis.kind == AxisKind::kCategorical) {
      if (p.category) out.emplace_back(*p.category, p.y);
    } else if (p.x) {
      out.emplace_back(canonical_decimal(*p.x), p.y);
    }
  }
  return out;
}

std::optional<double> pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= double(n);
  mb /= double(n);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  if (va == 0.0 || vb == 0.0) return std::nullopt;  // constant series
  return cov / std::sqrt(va * vb);
}

}  // namespace

std::optional<double> avg_abs_correlation(std::span<const ChartAnnotation> corpus) {
  double sum = 0.0;
  std::size_t pairs = 0;
  for (const auto& chart : corpus) {
    if (chart.series.size() < 2) continue;
    std::vector<std::map<std::string, double>> keyed;
    for (const auto& s : chart.series) {
      std::map<std::string, double> m;
      for (const auto& [key, y] : aligned_values(chart, s)) m.emplace(key, y);
      keyed.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      for (std::size_t j = i + 1; j < keyed.size(); ++j) {
        std::vector<double> a, b;
        for (const auto& [key, ya] : keyed[i]) {
          const auto it = keyed[j].find(key);
          if (it != keyed[j].end()) {
            a.push_back(ya);
            b.push_back(it->second);
          }
        }
        if (a.size() < 3) continue;
        const auto r = pearson(a, b);
        if (!r) continue;
        sum += std::abs(*r);
        ++pairs;
      }
    }
  }
  if (pairs == 0) return std::nullopt;
  return sum / double(pairs);
}

double avg_pmi_top_k(std::span<const ChartAnnotation> corpus, int k, int* k_used) {
  if (k < 1) throw UsageError("avg_pmi_top_k: k must be >= 1");
  const double chart_count = double(corpus.size());
  std::unordered_map<std::string, std::size_t> label_charts;
  std::map<std::pair<std::string, std::string>, std::size_t> pair_charts;

  for (const auto& chart : corpus) {
    std::set<std::string> labels;
    for (const auto& s : chart.series) labels.insert(s.label);
    if (chart.x_axis.categories)
      for (const auto& c : *chart.x_axis.categories) labels.insert(c);
    for (const auto& l : labels) ++label_charts[l];
    for (auto a = labels.begin(); a != labels.end(); ++a) {
      auto b = a;
      for (++b; b != labels.end(); ++b) ++pair_charts[{*a, *b}];
    }
  }
  if (pair_charts.empty())
    throw UsageError("avg_pmi_top_k: no co-occurring label pair in corpus");

  // Rank by count descending; ties broken by pair name for determinism.
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> ranked(
      pair_charts.begin(), pair_charts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& lhs, const auto& rhs) {
    if (lhs.second != rhs.second) return lhs.second > rhs.second;
    return lhs.first < rhs.first;
  });

  const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), ranked.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < take; ++i) {
    const auto& [pair, co] = ranked[i];
    const double p_ab = double(co) / chart_count;
    const double p_a = double(label_charts.at(pair.first)) / chart_count;
    const double p_b = double(label_charts.at(pair.second)) / chart_count;
    sum += std::log(p_ab / (p_a * p_b));
  }
  if (k_used) *k_used = static_cast<int>(take);
  return sum / double(take);
}

CorpusStats compute_corpus_stats(std::span<const ChartAnnotation> corpus, int k) {
  CorpusStats stats;
  stats.chart_count = static_cast<int>(corpus.size());
  stats.avg_points_per_chart = avg_points(corpus);
  stats.unique_numerical_ratio = unique_numerical_ratio(corpus);
  stats.avg_abs_correlation = avg_abs_correlation(corpus);
  stats.avg_pmi_top_k = avg_pmi_top_k(corpus, k, &stats.k_used);
  return stats;
}

nlohmann::ordered_json stats_to_json(const CorpusStats& stats) {
  nlohmann::ordered_json j;
  j["chart_count"] = stats.chart_count;
  j["avg_points_per_chart"] = stats.avg_points_per_chart;
  j["unique_numerical_ratio"] = stats.unique_numerical_ratio;
  if (stats.avg_abs_correlation)
    j["avg_abs_correlation"] = *stats.avg_abs_correlation;
  else
    j["avg_abs_correlation"] = nullptr;
  j["avg_pmi_top_k"] = stats.avg_pmi_top_k;
  j["k_used"] = stats.k_used;
  j["log_base"] = "e";
  return j;
}

std::vector<ChartAnnotation> load_corpus(const std::string& dir) {
  std::vector<ChartAnnotation> corpus;
  for (const auto& path : list_files(dir, ".json")) {
    if (path.filename() == "manifest.json" || path.filename() == "run_manifest.json")
      continue;
    const auto j = parse_json(read_file(path), path.string());
    if (!j.is_object() || !j.contains("calibration")) continue;
    corpus.push_back(annotation_from_json(j));
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const auto& a, const auto& b) { return a.chart_id < b.chart_id; });
  return corpus;
}

}  // namespace vsrchart::quality
