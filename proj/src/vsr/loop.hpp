#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "vsr/client.hpp"

namespace vsrchart {

enum class RoundAction { kInitial, kCorrected, kConfirmed, kForcedStop };

const char* round_action_name(RoundAction action);

struct RefineRound {
  int round_index = 0;
  std::vector<PixelPoint> localizations;
  RoundAction action = RoundAction::kInitial;
};

struct RefineTranscript {
  std::string chart_id;
  int n_max = 0;
  int call_count = 0;
  std::vector<RefineRound> rounds;

  const std::vector<PixelPoint>& final_localizations() const {
    return rounds.back().localizations;
  }
};

nlohmann::ordered_json transcript_to_json(const RefineTranscript& transcript);
RefineTranscript transcript_from_json(const nlohmann::json& j);

// Carries the partial transcript when a client call fails mid-loop.
class LoopError : public Error {
 public:
  LoopError(const std::string& what, RefineTranscript partial)
      : Error(ErrorCode::kEndpoint, what), partial_(std::move(partial)) {}
  const RefineTranscript& partial_transcript() const { return partial_; }

 private:
  RefineTranscript partial_;
};

// Called after each verify round with the overlay that was shown to the
// model (used by --save-rounds).
using OverlaySink = std::function<void(int round_index, const Image& overlay)>;

// Refine stage: one localize call, then up to n_max verify rounds, each fed
// the overlay of the current localizations. Stops early on Confirm; the
// final corrected round at the cap is recorded as forced_stop. Call count is
// 1 + number of verify calls, in [2, n_max + 1].
RefineTranscript run_refine(const Image& image, ModelClient& client, int n_max,
                            const std::string& chart_id = {},
                            const OverlaySink& overlay_sink = nullptr);

// Refine followed by exactly one decode on the final localizations; total
// call count lands in [3, n_max + 2], equal to 3 iff the first verify
// confirms.
std::pair<ParseResult, RefineTranscript> run_vsr(const Image& image, ModelClient& client,
                                                 int n_max,
                                                 const std::string& chart_id = {},
                                                 const OverlaySink& overlay_sink = nullptr);

// Ablation paths: localize + decode without verification (2 calls) and
// decode without anchors (1 call).
std::pair<ParseResult, RefineTranscript> run_anchors_only(const Image& image,
                                                          ModelClient& client,
                                                          const std::string& chart_id = {});
std::pair<ParseResult, RefineTranscript> run_direct(const Image& image, ModelClient& client,
                                                    const std::string& chart_id = {});

}  // namespace vsrchart
