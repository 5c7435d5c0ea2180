#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/types.hpp"

namespace vsrchart::quality {

struct CorpusStats {
  double avg_points_per_chart = 0.0;
  double unique_numerical_ratio = 0.0;
  std::optional<double> avg_abs_correlation;  // undefined without eligible pairs
  double avg_pmi_top_k = 0.0;
  int k_used = 0;
  int chart_count = 0;
};

double avg_points(std::span<const ChartAnnotation> corpus);

// Unique numeric values (canonical decimal rendering, y plus numeric-axis x)
// divided by the total count.
double unique_numerical_ratio(std::span<const ChartAnnotation> corpus);

// Mean |Pearson r| over every series pair (within charts of >= 2 series)
// sharing >= 3 aligned points. Alignment is by category string on
// categorical axes and by x value on numeric axes; constant series yield
// undefined pairs, which are skipped.
std::optional<double> avg_abs_correlation(std::span<const ChartAnnotation> corpus);

// PMI over chart-level label co-occurrence (series labels plus categorical
// x labels, deduplicated per chart). Pairs are ranked by co-occurrence
// count; the top min(k, available) pairs contribute ln(P(a,b)/(P(a)P(b))).
double avg_pmi_top_k(std::span<const ChartAnnotation> corpus, int k = 100,
                     int* k_used = nullptr);

CorpusStats compute_corpus_stats(std::span<const ChartAnnotation> corpus, int k = 100);

nlohmann::ordered_json stats_to_json(const CorpusStats& stats);

// Loads every annotation JSON under `dir` (manifests skipped), sorted by id.
std::vector<ChartAnnotation> load_corpus(const std::string& dir);

}  // namespace vsrchart::quality
