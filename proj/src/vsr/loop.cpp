#include "vsr/loop.hpp"

#include "render/chart_renderer.hpp"

namespace vsrchart {

const char* round_action_name(RoundAction action) {
  switch (action) {
    case RoundAction::kInitial: return "initial";
    case RoundAction::kCorrected: return "corrected";
    case RoundAction::kConfirmed: return "confirmed";
    case RoundAction::kForcedStop: return "forced_stop";
  }
  return "initial";
}

namespace {

RoundAction round_action_from_name(const std::string& name) {
  if (name == "initial") return RoundAction::kInitial;
  if (name == "corrected") return RoundAction::kCorrected;
  if (name == "confirmed") return RoundAction::kConfirmed;
  if (name == "forced_stop") return RoundAction::kForcedStop;
  throw ConfigError("unknown round action: " + name);
}

}  // namespace

nlohmann::ordered_json transcript_to_json(const RefineTranscript& transcript) {
  nlohmann::ordered_json j;
  j["chart_id"] = transcript.chart_id;
  j["n_max"] = transcript.n_max;
  j["call_count"] = transcript.call_count;
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  for (const auto& r : transcript.rounds) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : r.localizations) points.push_back({p.x, p.y});
    rounds.push_back({{"round_index", r.round_index},
                      {"action", round_action_name(r.action)},
                      {"localizations", std::move(points)}});
  }
  j["rounds"] = std::move(rounds);
  return j;
}

RefineTranscript transcript_from_json(const nlohmann::json& j) {
  RefineTranscript t;
  t.chart_id = j.at("chart_id").get<std::string>();
  t.n_max = j.at("n_max").get<int>();
  t.call_count = j.at("call_count").get<int>();
  for (const auto& rj : j.at("rounds")) {
    RefineRound r;
    r.round_index = rj.at("round_index").get<int>();
    r.action = round_action_from_name(rj.at("action").get<std::string>());
    for (const auto& pj : rj.at("localizations"))
      r.localizations.push_back(PixelPoint{pj.at(0).get<int>(), pj.at(1).get<int>()});
    t.rounds.push_back(std::move(r));
  }
  return t;
}

RefineTranscript run_refine(const Image& image, ModelClient& client, int n_max,
                            const std::string& chart_id, const OverlaySink& overlay_sink) {
  if (n_max < 1) throw UsageError("run_refine: n_max must be >= 1");
  RefineTranscript transcript;
  transcript.chart_id = chart_id;
  transcript.n_max = n_max;

  auto fail = [&](const std::string& stage, const std::exception& e) -> LoopError {
    return LoopError("refine loop failed at " + stage + ": " + e.what(), transcript);
  };

  std::vector<PixelPoint> current;
  try {
    current = client.localize(image);
  } catch (const Error& e) {
    throw fail("localize", e);
  }
  ++transcript.call_count;
  transcript.rounds.push_back(RefineRound{0, current, RoundAction::kInitial});

  for (int round = 1; round <= n_max; ++round) {
    const Image overlaid = overlay_markers(image, current);
    if (overlay_sink) overlay_sink(round, overlaid);
    VerifyResult result;
    try {
      result = client.verify(image, overlaid, current);
    } catch (const Error& e) {
      throw fail("verify round " + std::to_string(round), e);
    }
    ++transcript.call_count;

    if (std::holds_alternative<Confirm>(result)) {
      transcript.rounds.push_back(RefineRound{round, current, RoundAction::kConfirmed});
      return transcript;
    }
    current = std::get<Corrected>(std::move(result)).points;
    const RoundAction action =
        round == n_max ? RoundAction::kForcedStop : RoundAction::kCorrected;
    transcript.rounds.push_back(RefineRound{round, current, action});
  }
  return transcript;
}

std::pair<ParseResult, RefineTranscript> run_vsr(const Image& image, ModelClient& client,
                                                 int n_max, const std::string& chart_id,
                                                 const OverlaySink& overlay_sink) {
  RefineTranscript transcript = run_refine(image, client, n_max, chart_id, overlay_sink);
  ParseResult result;
  try {
    result = client.decode(image, transcript.final_localizations());
  } catch (const Error& e) {
    throw LoopError(std::string("decode failed: ") + e.what(), transcript);
  }
  ++transcript.call_count;
  return {std::move(result), std::move(transcript)};
}

std::pair<ParseResult, RefineTranscript> run_anchors_only(const Image& image,
                                                          ModelClient& client,
                                                          const std::string& chart_id) {
  RefineTranscript transcript;
  transcript.chart_id = chart_id;
  transcript.n_max = 0;
  std::vector<PixelPoint> anchors = client.localize(image);
  ++transcript.call_count;
  transcript.rounds.push_back(RefineRound{0, anchors, RoundAction::kInitial});
  ParseResult result = client.decode(image, anchors);
  ++transcript.call_count;
  return {std::move(result), std::move(transcript)};
}

std::pair<ParseResult, RefineTranscript> run_direct(const Image& image, ModelClient& client,
                                                    const std::string& chart_id) {
  RefineTranscript transcript;
  transcript.chart_id = chart_id;
  transcript.n_max = 0;
  ParseResult result = client.decode(image, {});
  ++transcript.call_count;
  transcript.rounds.push_back(RefineRound{0, {}, RoundAction::kInitial});
  return {std::move(result), std::move(transcript)};
}

}  // namespace vsrchart
