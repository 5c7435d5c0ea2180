#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "core/types.hpp"

namespace vsrchart::engine {

enum class ValueGenKind { kIidUniform, kRandomWalk, kSinusoidNoise, kSpikeMixture };

const char* value_gen_name(ValueGenKind kind);
ValueGenKind value_gen_from_name(const std::string& name);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::map<ChartType, double> chart_type_weights = {
      {ChartType::kLine, 0.30},
      {ChartType::kBar, 0.20},
      {ChartType::kGroupedBar, 0.20},
      {ChartType::kScatter, 0.30},
  };
  std::array<int, 2> points_per_chart{8, 40};
  std::array<int, 2> series_per_chart{1, 5};
  std::map<ValueGenKind, double> value_generators = {
      {ValueGenKind::kIidUniform, 0.35},
      {ValueGenKind::kRandomWalk, 0.25},
      {ValueGenKind::kSinusoidNoise, 0.20},
      {ValueGenKind::kSpikeMixture, 0.20},
  };
  double label_source_mix = 0.65;  // fraction of word-pool labels vs random strings
  double correlation_rejection_threshold = 0.9;

  void validate() const;
  nlohmann::ordered_json to_json() const;
  static GeneratorConfig from_json(const nlohmann::json& j);
};

// Error injection rates for refine-stage training data and the simulator.
struct PerturbationSpec {
  double omission_rate = 0.0;       // probability an anchor is dropped
  double shift_sigma_px = 0.0;      // gaussian shift per axis, pixels
  double hallucination_rate = 0.0;  // poisson mean of spurious points
  double duplicate_rate = 0.0;      // probability an anchor is emitted twice

  void validate() const;
  nlohmann::ordered_json to_json() const;
  static PerturbationSpec from_json(const nlohmann::json& j);
};

// Rates used when no perturbation config is supplied.
PerturbationSpec default_perturbation();

}  // namespace vsrchart::engine
