#pragma once

#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "vsr/loop.hpp"

namespace vsrchart {

// Transcript paired with the ground-truth anchors of its chart.
struct ChartRecord {
  RefineTranscript transcript;
  std::vector<PixelPoint> gt_anchors;
};

struct RoundStat {
  int round = 0;
  int error_samples = 0;
  std::optional<double> error_recall;          // rounds >= 1
  std::optional<double> correct_confirmation;  // rounds with confirmations
};

// A localization set is correct when a one-to-one matching within
// `tolerance_px` (Euclidean) covers every localization and every anchor.
bool localizations_correct(std::span<const PixelPoint> localizations,
                           std::span<const PixelPoint> gt_anchors, int tolerance_px);

// Per-round error counts (carry-forward: a terminated chart keeps its final
// state), recall of corrections on the previous round's error samples, and
// precision of confirmations.
std::vector<RoundStat> round_analytics(std::span<const ChartRecord> records,
                                       int match_tolerance_px = 8);

nlohmann::ordered_json round_stats_to_json(const std::vector<RoundStat>& stats);

}  // namespace vsrchart
