#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/types.hpp"
#include "engine/generator_config.hpp"

namespace vsrchart::engine {

enum class InjectedErrorKind { kOmission, kShift, kDuplicate, kHallucination };

const char* injected_error_name(InjectedErrorKind kind);

struct InjectedError {
  InjectedErrorKind kind;
  int source_index = -1;  // flat anchor index (series-major); -1 for hallucinations
  PixelPoint point;       // resulting point (omissions: the dropped anchor)
};

struct ErrorLedger {
  std::vector<InjectedError> entries;

  int count(InjectedErrorKind kind) const {
    int n = 0;
    for (const auto& e : entries)
      if (e.kind == kind) ++n;
    return n;
  }
};

struct PerturbedLocalizations {
  std::vector<PixelPoint> points;
  ErrorLedger ledger;
};

// Applies the perturbation spec to the annotation's anchors: each anchor is
// independently omitted, else gaussian-shifted per axis and possibly emitted
// twice; Poisson(hallucination_rate) spurious points land uniformly in the
// plot area. Every injected error is recorded with its category and source,
// so |points| = anchors - omissions + duplicates + hallucinations.
PerturbedLocalizations inject_errors(const ChartAnnotation& annotation,
                                     const PerturbationSpec& spec, std::uint64_t seed);

}  // namespace vsrchart::engine
