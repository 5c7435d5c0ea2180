#pragma once

#include <cstdint>
#include <memory>

#include <json.hpp>

#include "engine/generator_config.hpp"
#include "vsr/client.hpp"

namespace vsrchart {

// Deterministic stand-in for a trained model, driven by the ground-truth
// annotation: localize reproduces inject_errors, verify repairs each
// outstanding error independently with fix_prob (or falsely confirms),
// decode reads values through the pixel calibration.
struct SimulatorSpec {
  engine::PerturbationSpec initial = engine::default_perturbation();
  double fix_prob = 0.8;
  double false_confirm_prob = 0.05;
  double decode_noise = 0.01;  // relative value noise sigma

  void validate() const;
  nlohmann::ordered_json to_json() const;
  static SimulatorSpec from_json(const nlohmann::json& j);
};

std::unique_ptr<ModelClient> make_simulated_client(const ChartAnnotation& annotation,
                                                   const SimulatorSpec& spec,
                                                   std::uint64_t seed);

}  // namespace vsrchart
