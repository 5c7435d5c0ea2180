#include "engine/generator_config.hpp"

#include <cmath>

#include "core/calibration.hpp"

namespace vsrchart::engine {

const char* value_gen_name(ValueGenKind kind) {
  switch (kind) {
    case ValueGenKind::kIidUniform: return "iid_uniform";
    case ValueGenKind::kRandomWalk: return "random_walk";
    case ValueGenKind::kSinusoidNoise: return "sinusoid_noise";
    case ValueGenKind::kSpikeMixture: return "spike_mixture";
  }
  return "iid_uniform";
}

ValueGenKind value_gen_from_name(const std::string& name) {
  if (name == "iid_uniform") return ValueGenKind::kIidUniform;
  if (name == "random_walk") return ValueGenKind::kRandomWalk;
  if (name == "sinusoid_noise") return ValueGenKind::kSinusoidNoise;
  if (name == "spike_mixture") return ValueGenKind::kSpikeMixture;
  throw ConfigError("unknown value generator: " + name);
}

void GeneratorConfig::validate() const {
  auto check_range = [](const std::array<int, 2>& r, const char* name) {
    if (r[0] < 1 || r[1] < r[0])
      throw ConfigError(std::string("generator config: invalid range for ") + name);
  };
  check_range(points_per_chart, "points_per_chart");
  check_range(series_per_chart, "series_per_chart");

  auto check_weights = [](const auto& weights, const char* name) {
    if (weights.empty())
      throw ConfigError(std::string("generator config: empty weights for ") + name);
    double total = 0.0;
    for (const auto& [_, w] : weights) {
      if (w < 0.0 || !std::isfinite(w))
        throw ConfigError(std::string("generator config: negative weight in ") + name);
      total += w;
    }
    if (total <= 0.0)
      throw ConfigError(std::string("generator config: weights all zero in ") + name);
  };
  check_weights(chart_type_weights, "chart_type_weights");
  check_weights(value_generators, "value_generators");

  if (label_source_mix < 0.0 || label_source_mix > 1.0)
    throw ConfigError("generator config: label_source_mix must be in [0, 1]");
  if (!(correlation_rejection_threshold > 0.0) || correlation_rejection_threshold > 1.0)
    throw ConfigError("generator config: correlation_rejection_threshold must be in (0, 1]");
}

nlohmann::ordered_json GeneratorConfig::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  nlohmann::ordered_json weights;
  for (const auto& [type, w] : chart_type_weights) weights[chart_type_name(type)] = w;
  j["chart_type_weights"] = std::move(weights);
  j["points_per_chart"] = points_per_chart;
  j["series_per_chart"] = series_per_chart;
  nlohmann::ordered_json gens;
  for (const auto& [kind, w] : value_generators) gens[value_gen_name(kind)] = w;
  j["value_generators"] = std::move(gens);
  j["label_source_mix"] = label_source_mix;
  j["correlation_rejection_threshold"] = correlation_rejection_threshold;
  return j;
}

GeneratorConfig GeneratorConfig::from_json(const nlohmann::json& j) {
  GeneratorConfig config;
  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("chart_type_weights")) {
    config.chart_type_weights.clear();
    for (const auto& [name, w] : j["chart_type_weights"].items())
      config.chart_type_weights[chart_type_from_name(name)] = w.get<double>();
  }
  if (j.contains("points_per_chart"))
    config.points_per_chart = j["points_per_chart"].get<std::array<int, 2>>();
  if (j.contains("series_per_chart"))
    config.series_per_chart = j["series_per_chart"].get<std::array<int, 2>>();
  if (j.contains("value_generators")) {
    config.value_generators.clear();
    for (const auto& [name, w] : j["value_generators"].items())
      config.value_generators[value_gen_from_name(name)] = w.get<double>();
  }
  if (j.contains("label_source_mix"))
    config.label_source_mix = j["label_source_mix"].get<double>();
  if (j.contains("correlation_rejection_threshold"))
    config.correlation_rejection_threshold =
        j["correlation_rejection_threshold"].get<double>();
  config.validate();
  return config;
}

void PerturbationSpec::validate() const {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(omission_rate))
    throw ConfigError("perturbation: omission_rate must be in [0, 1]");
  if (!in_unit(duplicate_rate))
    throw ConfigError("perturbation: duplicate_rate must be in [0, 1]");
  if (!std::isfinite(shift_sigma_px) || shift_sigma_px < 0.0)
    throw ConfigError("perturbation: shift_sigma_px must be >= 0");
  if (!std::isfinite(hallucination_rate) || hallucination_rate < 0.0)
    throw ConfigError("perturbation: hallucination_rate must be >= 0");
}

nlohmann::ordered_json PerturbationSpec::to_json() const {
  return {{"omission_rate", omission_rate},
          {"shift_sigma_px", shift_sigma_px},
          {"hallucination_rate", hallucination_rate},
          {"duplicate_rate", duplicate_rate}};
}

PerturbationSpec PerturbationSpec::from_json(const nlohmann::json& j) {
  PerturbationSpec spec;
  if (j.contains("omission_rate")) spec.omission_rate = j["omission_rate"].get<double>();
  if (j.contains("shift_sigma_px")) spec.shift_sigma_px = j["shift_sigma_px"].get<double>();
  if (j.contains("hallucination_rate"))
    spec.hallucination_rate = j["hallucination_rate"].get<double>();
  if (j.contains("duplicate_rate")) spec.duplicate_rate = j["duplicate_rate"].get<double>();
  spec.validate();
  return spec;
}

PerturbationSpec default_perturbation() {
  PerturbationSpec spec;
  spec.omission_rate = 0.08;
  spec.shift_sigma_px = 5.0;
  spec.hallucination_rate = 0.6;
  spec.duplicate_rate = 0.03;
  return spec;
}

}  // namespace vsrchart::engine
