#include "vsr/analytics.hpp"

#include <algorithm>

#include "scrm/matching.hpp"

namespace vsrchart {

bool localizations_correct(std::span<const PixelPoint> localizations,
                           std::span<const PixelPoint> gt_anchors, int tolerance_px) {
  if (localizations.size() != gt_anchors.size()) return false;
  const long long tol2 = static_cast<long long>(tolerance_px) * tolerance_px;
  std::vector<std::vector<int>> adjacency(localizations.size());
  for (std::size_t i = 0; i < localizations.size(); ++i) {
    for (std::size_t j = 0; j < gt_anchors.size(); ++j) {
      const long long dx = localizations[i].x - gt_anchors[j].x;
      const long long dy = localizations[i].y - gt_anchors[j].y;
      if (dx * dx + dy * dy <= tol2) adjacency[i].push_back(int(j));
    }
  }
  return max_bipartite_matching(adjacency, gt_anchors.size()) == gt_anchors.size();
}

namespace {

// Localizations in effect at round r: the last recorded round <= r.
const RefineRound* effective_round(const RefineTranscript& t, int r) {
  const RefineRound* best = nullptr;
  for (const auto& round : t.rounds) {
    if (round.round_index <= r) best = &round;
  }
  return best;
}

const RefineRound* round_at(const RefineTranscript& t, int r) {
  for (const auto& round : t.rounds)
    if (round.round_index == r) return &round;
  return nullptr;
}

}  // namespace

std::vector<RoundStat> round_analytics(std::span<const ChartRecord> records,
                                       int match_tolerance_px) {
  int max_round = 0;
  for (const auto& rec : records)
    for (const auto& round : rec.transcript.rounds)
      max_round = std::max(max_round, round.round_index);

  auto is_error_at = [&](const ChartRecord& rec, int r) {
    const RefineRound* round = effective_round(rec.transcript, r);
    if (!round) return true;  // no localize output recorded
    return !localizations_correct(round->localizations, rec.gt_anchors,
                                  match_tolerance_px);
  };

  std::vector<RoundStat> stats;
  for (int r = 0; r <= max_round; ++r) {
    RoundStat stat;
    stat.round = r;
    for (const auto& rec : records)
      if (is_error_at(rec, r)) ++stat.error_samples;

    if (r >= 1) {
      int prev_errors = 0;
      int corrected = 0;
      int confirms = 0;
      int correct_confirms = 0;
      for (const auto& rec : records) {
        const bool was_error = is_error_at(rec, r - 1);
        if (was_error) ++prev_errors;
        const RefineRound* round = round_at(rec.transcript, r);
        if (!round) continue;
        if (round->action == RoundAction::kCorrected ||
            round->action == RoundAction::kForcedStop) {
          if (was_error) ++corrected;
        } else if (round->action == RoundAction::kConfirmed) {
          ++confirms;
          if (localizations_correct(round->localizations, rec.gt_anchors,
                                    match_tolerance_px))
            ++correct_confirms;
        }
      }
      if (prev_errors > 0) stat.error_recall = double(corrected) / double(prev_errors);
      if (confirms > 0)
        stat.correct_confirmation = double(correct_confirms) / double(confirms);
    }
    stats.push_back(stat);
  }
  return stats;
}

nlohmann::ordered_json round_stats_to_json(const std::vector<RoundStat>& stats) {
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  for (const auto& s : stats) {
    nlohmann::ordered_json j;
    j["round"] = s.round;
    j["error_samples"] = s.error_samples;
    j["error_recall"] = s.error_recall ? nlohmann::ordered_json(*s.error_recall)
                                       : nlohmann::ordered_json(nullptr);
    j["correct_confirmation"] = s.correct_confirmation
                                    ? nlohmann::ordered_json(*s.correct_confirmation)
                                    : nlohmann::ordered_json(nullptr);
    rounds.push_back(std::move(j));
  }
  return rounds;
}

}  // namespace vsrchart
