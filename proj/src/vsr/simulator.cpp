#include "vsr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "common/rng.hpp"
#include "core/calibration.hpp"
#include "engine/perturb.hpp"

namespace vsrchart {

void SimulatorSpec::validate() const {
  initial.validate();
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(fix_prob)) throw ConfigError("simulator: fix_prob must be in [0, 1]");
  if (!in_unit(false_confirm_prob))
    throw ConfigError("simulator: false_confirm_prob must be in [0, 1]");
  if (!std::isfinite(decode_noise) || decode_noise < 0.0)
    throw ConfigError("simulator: decode_noise must be >= 0");
}

nlohmann::ordered_json SimulatorSpec::to_json() const {
  return {{"initial", initial.to_json()},
          {"fix_prob", fix_prob},
          {"false_confirm_prob", false_confirm_prob},
          {"decode_noise", decode_noise}};
}

SimulatorSpec SimulatorSpec::from_json(const nlohmann::json& j) {
  SimulatorSpec spec;
  if (j.contains("initial"))
    spec.initial = engine::PerturbationSpec::from_json(j["initial"]);
  if (j.contains("fix_prob")) spec.fix_prob = j["fix_prob"].get<double>();
  if (j.contains("false_confirm_prob"))
    spec.false_confirm_prob = j["false_confirm_prob"].get<double>();
  if (j.contains("decode_noise")) spec.decode_noise = j["decode_noise"].get<double>();
  spec.validate();
  return spec;
}

namespace {

struct AnchorRef {
  PixelPoint px;
  std::size_t series_index;
  std::size_t point_index;
};

class SimulatedClient final : public ModelClient {
 public:
  SimulatedClient(const ChartAnnotation& annotation, const SimulatorSpec& spec,
                  std::uint64_t seed)
      : annotation_(annotation), spec_(spec), rng_(seed), seed_(seed) {
    spec_.validate();
    for (std::size_t si = 0; si < annotation_.series.size(); ++si) {
      const auto& s = annotation_.series[si];
      for (std::size_t pi = 0; pi < s.points.size(); ++pi)
        anchors_.push_back(AnchorRef{s.points[pi].px, si, pi});
    }
  }

  std::vector<PixelPoint> localize(const Image&) override {
    const auto perturbed = engine::inject_errors(annotation_, spec_.initial,
                                                 derive_seed(seed_, 0x10c));
    // Rebuild element provenance from the ledger: anchors in flat order
    // (skipping omissions, shifted in place, duplicates right after their
    // source), hallucinations appended.
    present_.assign(anchors_.size(), std::nullopt);
    extras_.clear();
    std::vector<char> omitted(anchors_.size(), 0);
    std::vector<std::optional<PixelPoint>> shifted(anchors_.size());
    std::vector<char> duplicated(anchors_.size(), 0);
    for (const auto& e : perturbed.ledger.entries) {
      switch (e.kind) {
        case engine::InjectedErrorKind::kOmission:
          omitted[std::size_t(e.source_index)] = 1;
          break;
        case engine::InjectedErrorKind::kShift:
          shifted[std::size_t(e.source_index)] = e.point;
          break;
        case engine::InjectedErrorKind::kDuplicate:
          duplicated[std::size_t(e.source_index)] = 1;
          break;
        case engine::InjectedErrorKind::kHallucination:
          extras_.push_back(e.point);
          break;
      }
    }
    for (std::size_t k = 0; k < anchors_.size(); ++k) {
      if (omitted[k]) continue;
      present_[k] = shifted[k] ? *shifted[k] : anchors_[k].px;
      if (duplicated[k]) extras_.push_back(*present_[k]);
    }
    return emit();
  }

  VerifyResult verify(const Image&, const Image&, std::span<const PixelPoint>) override {
    if (!has_errors()) return Confirm{};
    if (spec_.false_confirm_prob > 0.0 && rng_.bernoulli(spec_.false_confirm_prob))
      return Confirm{};
    for (std::size_t k = 0; k < anchors_.size(); ++k) {
      if (!present_[k]) {
        if (rng_.bernoulli(spec_.fix_prob)) present_[k] = anchors_[k].px;
      } else if (*present_[k] != anchors_[k].px) {
        if (rng_.bernoulli(spec_.fix_prob)) present_[k] = anchors_[k].px;
      }
    }
    std::vector<PixelPoint> kept;
    for (const auto& ghost : extras_)
      if (!rng_.bernoulli(spec_.fix_prob)) kept.push_back(ghost);
    extras_ = std::move(kept);
    return Corrected{emit()};
  }

  ParseResult decode(const Image& image, std::span<const PixelPoint> localizations) override {
    // Anchor-free decode (the no-pixel ablation): behave like a one-shot
    // parse with the model's usual perception errors.
    if (localizations.empty() && !anchors_.empty()) {
      const auto perturbed = engine::inject_errors(annotation_, spec_.initial,
                                                   derive_seed(seed_, 0xd1c));
      if (!perturbed.points.empty()) return decode(image, perturbed.points);
    }
    ParseResult result;
    result.chart_id = annotation_.chart_id;
    result.chart_type = annotation_.chart_type;
    result.title = annotation_.title;
    result.x_axis = annotation_.x_axis;
    result.y_axis = annotation_.y_axis;
    result.series.resize(annotation_.series.size());
    for (std::size_t si = 0; si < annotation_.series.size(); ++si)
      result.series[si].label = annotation_.series[si].label;

    // One-to-one nearest assignment of localizations to anchors; leftovers
    // (more localizations than anchors) reuse their nearest anchor.
    struct Pair {
      long long d2;
      std::size_t loc;
      std::size_t anchor;
    };
    std::vector<Pair> pairs;
    pairs.reserve(localizations.size() * anchors_.size());
    for (std::size_t li = 0; li < localizations.size(); ++li) {
      for (std::size_t k = 0; k < anchors_.size(); ++k) {
        const long long dx = localizations[li].x - anchors_[k].px.x;
        const long long dy = localizations[li].y - anchors_[k].px.y;
        pairs.push_back(Pair{dx * dx + dy * dy, li, k});
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.d2 != b.d2) return a.d2 < b.d2;
      if (a.loc != b.loc) return a.loc < b.loc;
      return a.anchor < b.anchor;
    });
    std::vector<int> anchor_of_loc(localizations.size(), -1);
    std::vector<char> anchor_used(anchors_.size(), 0);
    std::size_t assigned = 0;
    for (const auto& p : pairs) {
      if (assigned == std::min(localizations.size(), anchors_.size())) break;
      if (anchor_of_loc[p.loc] != -1 || anchor_used[p.anchor]) continue;
      anchor_of_loc[p.loc] = int(p.anchor);
      anchor_used[p.anchor] = 1;
      ++assigned;
    }
    for (std::size_t li = 0; li < localizations.size(); ++li) {
      if (anchor_of_loc[li] != -1 || anchors_.empty()) continue;
      long long best = -1;
      for (std::size_t k = 0; k < anchors_.size(); ++k) {
        const long long dx = localizations[li].x - anchors_[k].px.x;
        const long long dy = localizations[li].y - anchors_[k].px.y;
        const long long d2 = dx * dx + dy * dy;
        if (best < 0 || d2 < best) {
          best = d2;
          anchor_of_loc[li] = int(k);
        }
      }
    }

    // Emit per series in anchor order so repeated decodes are stable.
    struct Decoded {
      std::size_t anchor;
      std::size_t loc;
    };
    std::vector<Decoded> decoded;
    for (std::size_t li = 0; li < localizations.size(); ++li)
      if (anchor_of_loc[li] >= 0)
        decoded.push_back(Decoded{std::size_t(anchor_of_loc[li]), li});
    std::sort(decoded.begin(), decoded.end(), [](const Decoded& a, const Decoded& b) {
      if (a.anchor != b.anchor) return a.anchor < b.anchor;
      return a.loc < b.loc;
    });

    const auto& cal = annotation_.calibration;
    for (const auto& d : decoded) {
      const AnchorRef& anchor = anchors_[d.anchor];
      const auto& src = annotation_.series[anchor.series_index].points[anchor.point_index];
      PixelPoint loc = localizations[d.loc];
      loc.x = std::clamp(loc.x, cal.plot_area_px.left, cal.plot_area_px.right);
      loc.y = std::clamp(loc.y, cal.plot_area_px.top, cal.plot_area_px.bottom);
      double value = pixel_to_chart(cal, loc).y;
      if (spec_.decode_noise > 0.0) value *= 1.0 + rng_.normal(0.0, spec_.decode_noise);
      ParsedPoint point;
      point.category = src.category;
      point.x = src.x;
      point.y = value;
      result.series[anchor.series_index].points.push_back(std::move(point));
    }
    return result;
  }

 private:
  bool has_errors() const {
    if (!extras_.empty()) return true;
    for (std::size_t k = 0; k < anchors_.size(); ++k) {
      if (!present_[k] || *present_[k] != anchors_[k].px) return true;
    }
    return false;
  }

  std::vector<PixelPoint> emit() const {
    std::vector<PixelPoint> out;
    for (std::size_t k = 0; k < anchors_.size(); ++k)
      if (present_[k]) out.push_back(*present_[k]);
    out.insert(out.end(), extras_.begin(), extras_.end());
    return out;
  }

  ChartAnnotation annotation_;
  SimulatorSpec spec_;
  Rng rng_;
  std::uint64_t seed_;
  std::vector<AnchorRef> anchors_;
  std::vector<std::optional<PixelPoint>> present_;
  std::vector<PixelPoint> extras_;
};

}  // namespace

std::unique_ptr<ModelClient> make_simulated_client(const ChartAnnotation& annotation,
                                                   const SimulatorSpec& spec,
                                                   std::uint64_t seed) {
  return std::make_unique<SimulatedClient>(annotation, spec, seed);
}

}  // namespace vsrchart
