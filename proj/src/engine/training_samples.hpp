#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine/perturb.hpp"
#include "render/style.hpp"

namespace vsrchart::engine {

inline constexpr const char* kConfirmToken = "CONFIRM";

enum class SampleKind { kRefineFromScratch, kRefineCorrect, kRefineConfirm, kDecode };

const char* sample_kind_name(SampleKind kind);

struct TrainingSample {
  SampleKind kind;
  std::vector<std::string> image_paths;  // relative to corpus root
  std::string prompt;
  nlohmann::ordered_json target;  // point array, "CONFIRM", or parse-result JSON
};

struct TrainingSampleSet {
  std::vector<TrainingSample> samples;
  // Overlay rasters referenced by the samples, keyed by relative path.
  std::vector<std::pair<std::string, Image>> overlays;
};

// Emits one sample of each kind for a chart that passed the quality filter:
// localize-from-scratch, confirm (ground-truth overlay), correct (overlay of
// perturbed anchors, target = full corrected list) and decode.
TrainingSampleSet build_training_samples(const RenderedChart& chart,
                                         const PerturbationSpec& spec,
                                         std::uint64_t seed);

nlohmann::ordered_json sample_to_json(const TrainingSample& sample);

}  // namespace vsrchart::engine
