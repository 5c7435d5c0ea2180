#pragma once

#include <functional>

#include "engine/generator_config.hpp"
#include "engine/quality_filter.hpp"
#include "render/chart_renderer.hpp"

namespace vsrchart::engine {

struct GeneratedChart {
  RenderedChart chart;
  int attempts = 1;  // configuration draws spent to pass the quality filter
};

std::string chart_id_for(std::size_t index);

// Renders chart slot `index` of the corpus identified by config.seed.
// Each slot derives its own seed chain, so slots are independent; a slot
// whose configuration fails the quality filter is redrawn with a fresh
// derived seed, up to 20 attempts, after which GenerationError names the
// rejecting rule.
GeneratedChart generate_chart(const GeneratorConfig& config, std::size_t index);

// Deterministic fan-out over a bounded worker pool; sink is called once per
// slot (from worker threads, any order).
void generate_corpus(const GeneratorConfig& config, std::size_t n, int jobs,
                     const std::function<void(GeneratedChart&&, std::size_t)>& sink);

std::vector<RenderedChart> generate_corpus(const GeneratorConfig& config, std::size_t n);

}  // namespace vsrchart::engine
