#include "engine/perturb.hpp"

#include <algorithm>
#include <cmath>

#include "common/rng.hpp"

namespace vsrchart::engine {

const char* injected_error_name(InjectedErrorKind kind) {
  switch (kind) {
    case InjectedErrorKind::kOmission: return "omission";
    case InjectedErrorKind::kShift: return "shift";
    case InjectedErrorKind::kDuplicate: return "duplicate";
    case InjectedErrorKind::kHallucination: return "hallucination";
  }
  return "omission";
}

PerturbedLocalizations inject_errors(const ChartAnnotation& annotation,
                                     const PerturbationSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  PerturbedLocalizations out;

  const auto& rect = annotation.calibration.plot_area_px;
  auto clamp_to_image = [&](int v, int hi) { return std::clamp(v, 0, hi - 1); };

  int flat_index = 0;
  for (const auto& series : annotation.series) {
    for (const auto& p : series.points) {
      const int index = flat_index++;
      if (spec.omission_rate > 0.0 && rng.bernoulli(spec.omission_rate)) {
        out.ledger.entries.push_back(
            {InjectedErrorKind::kOmission, index, p.px});
        continue;
      }
      PixelPoint placed = p.px;
      if (spec.shift_sigma_px > 0.0) {
        const double dx = rng.normal(0.0, spec.shift_sigma_px);
        const double dy = rng.normal(0.0, spec.shift_sigma_px);
        placed.x = clamp_to_image(p.px.x + int(std::lround(dx)), annotation.image.width);
        placed.y = clamp_to_image(p.px.y + int(std::lround(dy)), annotation.image.height);
        if (placed != p.px)
          out.ledger.entries.push_back({InjectedErrorKind::kShift, index, placed});
      }
      out.points.push_back(placed);
      if (spec.duplicate_rate > 0.0 && rng.bernoulli(spec.duplicate_rate)) {
        out.points.push_back(placed);
        out.ledger.entries.push_back({InjectedErrorKind::kDuplicate, index, placed});
      }
    }
  }

  if (spec.hallucination_rate > 0.0) {
    const int extra = rng.poisson(spec.hallucination_rate);
    for (int i = 0; i < extra; ++i) {
      PixelPoint ghost{int(rng.uniform_int(rect.left, rect.right)),
                       int(rng.uniform_int(rect.top, rect.bottom))};
      out.points.push_back(ghost);
      out.ledger.entries.push_back({InjectedErrorKind::kHallucination, -1, ghost});
    }
  }
  return out;
}

}  // namespace vsrchart::engine
