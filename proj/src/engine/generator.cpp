#include "engine/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "common/rng.hpp"
#include "common/thread_pool.hpp"
#include "engine/value_gen.hpp"
#include "engine/word_pool.hpp"

namespace vsrchart::engine {

namespace {

constexpr int kMaxFilterAttempts = 20;

const std::vector<std::vector<Rgb>>& curated_palettes() {
  static const std::vector<std::vector<Rgb>> palettes = {
      // tab10
      {{31, 119, 180}, {255, 127, 14}, {44, 160, 44}, {214, 39, 40}, {148, 103, 189},
       {140, 86, 75}, {227, 119, 194}, {127, 127, 127}, {188, 189, 34}, {23, 190, 207}},
      // set2
      {{102, 194, 165}, {252, 141, 98}, {141, 160, 203}, {231, 138, 195},
       {166, 216, 84}, {255, 217, 47}, {229, 196, 148}, {179, 179, 179}},
      // dark2
      {{27, 158, 119}, {217, 95, 2}, {117, 112, 179}, {231, 41, 138}, {102, 166, 30},
       {230, 171, 2}, {166, 118, 29}, {102, 102, 102}},
      // high-saturation primaries
      {{228, 26, 28}, {55, 126, 184}, {77, 175, 74}, {152, 78, 163}, {255, 127, 0},
       {255, 255, 51}, {166, 86, 40}, {247, 129, 191}},
  };
  return palettes;
}

Rgb hsv_to_rgb(double h, double s, double v) {
  const double c = v * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  if (hp < 1) r = c, g = x;
  else if (hp < 2) r = x, g = c;
  else if (hp < 3) g = c, b = x;
  else if (hp < 4) g = x, b = c;
  else if (hp < 5) r = x, b = c;
  else r = c, b = x;
  const double m = v - c;
  auto to8 = [m](double q) {
    return static_cast<std::uint8_t>(std::clamp(int(std::lround((q + m) * 255.0)), 0, 255));
  };
  return Rgb{to8(r), to8(g), to8(b)};
}

std::string random_string(Rng& rng) {
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  const int len = int(rng.uniform_int(3, 8));
  std::string s;
  for (int i = 0; i < len; ++i)
    s.push_back(alphabet[rng.uniform_int(0, int(sizeof(alphabet)) - 2)]);
  return s;
}

std::string sample_word(Rng& rng, const GeneratorConfig& config) {
  if (rng.bernoulli(config.label_source_mix)) {
    const auto& pool = word_pool();
    return pool[std::size_t(rng.uniform_int(0, std::int64_t(pool.size()) - 1))];
  }
  return random_string(rng);
}

std::string sample_label(Rng& rng, const GeneratorConfig& config, int max_words) {
  const int words = int(rng.uniform_int(1, max_words));
  std::string out = sample_word(rng, config);
  for (int i = 1; i < words; ++i) out += " " + sample_word(rng, config);
  return out;
}

std::string unique_label(Rng& rng, const GeneratorConfig& config, int max_words,
                         std::set<std::string>& used) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::string label = sample_label(rng, config, max_words);
    if (used.insert(label).second) return label;
  }
  std::string label = sample_label(rng, config, max_words) + " " +
                      std::to_string(used.size() + 1);
  used.insert(label);
  return label;
}

struct BandParams {
  double lo = 0.0;
  double hi = 1.0;
};

// Value band for one chart: magnitudes bounded away from zero so pixel
// quantization stays far below the SCRM relative-error thresholds.
BandParams sample_band(Rng& rng, bool bar_chart) {
  const double m = std::pow(10.0, rng.uniform(0.0, 3.4));
  const double shift_pick = rng.uniform();
  double shift = 0.0;
  if (shift_pick > 0.85) shift = 9.0 * m;
  else if (shift_pick > 0.70) shift = 4.0 * m;
  else if (shift_pick > 0.55) shift = 1.0 * m;
  BandParams band{0.2 * m + shift, 1.0 * m + shift};
  if (!bar_chart && rng.bernoulli(0.25)) {
    // negative band, same magnitudes
    return BandParams{-band.hi, -band.lo};
  }
  return band;
}

ChartType sample_chart_type(Rng& rng, const GeneratorConfig& config) {
  // Fixed enum order keeps the draw independent of map iteration details.
  static const ChartType kOrder[] = {ChartType::kLine, ChartType::kBar,
                                     ChartType::kGroupedBar, ChartType::kScatter};
  std::vector<double> weights;
  std::vector<ChartType> present;
  for (ChartType t : kOrder) {
    const auto it = config.chart_type_weights.find(t);
    if (it != config.chart_type_weights.end() && it->second > 0.0) {
      present.push_back(t);
      weights.push_back(it->second);
    }
  }
  return present[rng.weighted_index(weights)];
}

ValueGenKind sample_value_gen(Rng& rng, const GeneratorConfig& config) {
  static const ValueGenKind kOrder[] = {ValueGenKind::kIidUniform, ValueGenKind::kRandomWalk,
                                        ValueGenKind::kSinusoidNoise,
                                        ValueGenKind::kSpikeMixture};
  std::vector<double> weights;
  std::vector<ValueGenKind> present;
  for (ValueGenKind k : kOrder) {
    const auto it = config.value_generators.find(k);
    if (it != config.value_generators.end() && it->second > 0.0) {
      present.push_back(k);
      weights.push_back(it->second);
    }
  }
  return present[rng.weighted_index(weights)];
}

std::vector<Rgb> sample_palette(Rng& rng, std::size_t n, Rgb background) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rgb> colors;
    if (rng.bernoulli(0.6)) {
      const auto& palettes = curated_palettes();
      const auto& base = palettes[std::size_t(
          rng.uniform_int(0, std::int64_t(palettes.size()) - 1))];
      const std::size_t offset =
          std::size_t(rng.uniform_int(0, std::int64_t(base.size()) - 1));
      for (std::size_t i = 0; i < n; ++i) colors.push_back(base[(offset + i) % base.size()]);
    } else {
      const double h0 = rng.uniform(0.0, 360.0);
      const double step = 360.0 / double(n) + rng.uniform(-12.0, 12.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double h = std::fmod(h0 + double(i) * step + 360.0, 360.0);
        colors.push_back(hsv_to_rgb(h, rng.uniform(0.55, 0.95), rng.uniform(0.45, 0.9)));
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < colors.size() && ok; ++i) {
      if (channel_distance(colors[i], background) < 40) ok = false;
      for (std::size_t j = i + 1; j < colors.size() && ok; ++j)
        if (channel_distance(colors[i], colors[j]) < 30) ok = false;
    }
    if (ok) return colors;
  }
  // Deterministic fallback; tab10 is pairwise-separated and dark enough.
  std::vector<Rgb> colors;
  for (std::size_t i = 0; i < n; ++i) colors.push_back(curated_palettes()[0][i % 10]);
  return colors;
}

Rgb sample_background(Rng& rng) {
  const double pick = rng.uniform();
  if (pick < 0.62) return Rgb{255, 255, 255};
  if (pick < 0.90) {
    // pale tint
    auto ch = [&rng] { return static_cast<std::uint8_t>(rng.uniform_int(236, 255)); };
    return Rgb{ch(), ch(), ch()};
  }
  auto ch = [&rng] { return static_cast<std::uint8_t>(rng.uniform_int(24, 52)); };
  return Rgb{ch(), ch(), ch()};
}

struct SampledChart {
  ChartSpec spec;
  StyleConfig style;
  int width = 0;
  int height = 0;
};

SampledChart sample_chart(Rng& rng, const GeneratorConfig& config) {
  SampledChart out;
  ChartSpec& spec = out.spec;
  spec.type = sample_chart_type(rng, config);
  const bool bar_like =
      spec.type == ChartType::kBar || spec.type == ChartType::kGroupedBar;

  int n_series = int(rng.uniform_int(config.series_per_chart[0], config.series_per_chart[1]));
  if (spec.type == ChartType::kBar) n_series = 1;
  if (spec.type == ChartType::kGroupedBar)
    n_series = std::max(n_series, std::min(2, config.series_per_chart[1]));

  const int target_points =
      int(rng.uniform_int(config.points_per_chart[0], config.points_per_chart[1]));
  int per_series = std::max(1, (target_points + n_series / 2) / n_series);
  if (n_series >= 2) per_series = std::max(per_series, 3);

  if (bar_like) {
    spec.x_kind = AxisKind::kCategorical;
  } else if (spec.type == ChartType::kScatter) {
    spec.x_kind = AxisKind::kNumeric;
  } else {
    spec.x_kind = rng.bernoulli(0.5) ? AxisKind::kCategorical : AxisKind::kNumeric;
  }

  std::set<std::string> used_categories;
  if (spec.x_kind == AxisKind::kCategorical) {
    for (int i = 0; i < per_series; ++i)
      spec.categories.push_back(unique_label(rng, config, 1, used_categories));
  }

  if (rng.bernoulli(0.75)) {
    std::string title = sample_word(rng, config);
    const int extra = int(rng.uniform_int(1, 3));
    for (int i = 0; i < extra; ++i) title += " " + sample_word(rng, config);
    spec.title = title;
  }
  if (rng.bernoulli(0.8)) spec.x_label = sample_label(rng, config, 2);
  if (rng.bernoulli(0.8)) spec.y_label = sample_label(rng, config, 2);

  // Shared x grid for numeric line charts keeps series aligned; scatter xs
  // are free per series.
  std::vector<double> shared_xs;
  if (spec.type == ChartType::kLine && spec.x_kind == AxisKind::kNumeric) {
    const double x0 = rng.uniform(0.0, 50.0);
    const double step = rng.uniform(0.5, 10.0);
    for (int i = 0; i < per_series; ++i) {
      const double jitter = rng.uniform(-0.15, 0.15) * step;
      shared_xs.push_back(std::round((x0 + double(i) * step + jitter) * 100.0) / 100.0);
    }
    std::sort(shared_xs.begin(), shared_xs.end());
    for (std::size_t i = 1; i < shared_xs.size(); ++i)
      if (shared_xs[i] <= shared_xs[i - 1]) shared_xs[i] = shared_xs[i - 1] + 0.01;
  }

  const BandParams band = sample_band(rng, bar_like);
  std::set<std::string> used_labels;
  for (int si = 0; si < n_series; ++si) {
    ChartSpec::Series series;
    series.label = unique_label(rng, config, 2, used_labels);
    for (int attempt = 0;; ++attempt) {
      const ValueGenKind family = sample_value_gen(rng, config);
      series.ys = rescale_to_band(generate_values(family, std::size_t(per_series), rng),
                                  band.lo, band.hi);
      if (per_series < 3 || si == 0) break;
      bool correlated = false;
      for (int k = 0; k < si; ++k) {
        if (abs_pearson(series.ys, spec.series[std::size_t(k)].ys) >=
            config.correlation_rejection_threshold) {
          correlated = true;
          break;
        }
      }
      if (!correlated) break;
      if (attempt >= 120)
        throw GenerationError("correlation rejection could not be satisfied");
    }
    if (spec.x_kind == AxisKind::kNumeric) {
      if (spec.type == ChartType::kLine) {
        series.xs = shared_xs;
      } else {
        const double xm = std::pow(10.0, rng.uniform(0.5, 3.0));
        for (int i = 0; i < per_series; ++i)
          series.xs.push_back(std::round(rng.uniform(0.05 * xm, xm) * 100.0) / 100.0);
        std::sort(series.xs.begin(), series.xs.end());
      }
    }
    spec.series.push_back(std::move(series));
  }

  StyleConfig& style = out.style;
  style.background = sample_background(rng);
  style.palette = sample_palette(rng, std::size_t(n_series), style.background);
  style.font_scale = rng.bernoulli(0.6) ? 1.0 : 2.0;
  style.grid = rng.bernoulli(0.7);
  if (n_series >= 2) {
    const double pick = rng.uniform();
    if (pick < 0.15) style.legend_position = LegendPosition::kTop;
    else if (pick < 0.55) style.legend_position = LegendPosition::kRight;
    else if (pick < 0.65) style.legend_position = LegendPosition::kBottom;
    else if (pick < 0.85) style.legend_position = LegendPosition::kInside;
    else style.legend_position = LegendPosition::kNone;
  } else {
    style.legend_position = LegendPosition::kNone;
  }
  static const MarkerShape kShapes[] = {MarkerShape::kCircle, MarkerShape::kSquare,
                                        MarkerShape::kTriangle, MarkerShape::kDiamond};
  style.marker_shape = kShapes[rng.uniform_int(0, 3)];
  style.marker_size_px = int(rng.uniform_int(2, 3));
  style.line_width_px = int(rng.uniform_int(2, 4));
  style.bar_width_fraction = rng.uniform(0.55, 0.9);

  out.width = int(rng.uniform_int(560, 1100));
  out.height = int(rng.uniform_int(400, 720));
  return out;
}

}  // namespace

std::string chart_id_for(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "chart_%06zu", index);
  return std::string(buf);
}

GeneratedChart generate_chart(const GeneratorConfig& config, std::size_t index) {
  config.validate();
  const std::uint64_t slot_seed = derive_seed(config.seed, index);
  std::string last_rule = "layout";
  for (int attempt = 0; attempt < kMaxFilterAttempts; ++attempt) {
    Rng rng(derive_seed(slot_seed, std::uint64_t(attempt)));
    try {
      SampledChart sampled = sample_chart(rng, config);
      RenderedChart chart = rasterize(sampled.spec, sampled.style, sampled.width,
                                      sampled.height, chart_id_for(index));
      const FilterResult verdict = quality_filter(chart);
      if (verdict.pass) return GeneratedChart{std::move(chart), attempt + 1};
      last_rule = verdict.rule;
    } catch (const LayoutError&) {
      last_rule = "layout";
    }
  }
  throw GenerationError("chart slot " + std::to_string(index) + ": " +
                        std::to_string(kMaxFilterAttempts) +
                        " attempts rejected; last rule: " + last_rule);
}

void generate_corpus(const GeneratorConfig& config, std::size_t n, int jobs,
                     const std::function<void(GeneratedChart&&, std::size_t)>& sink) {
  if (n < 1) throw UsageError("corpus size must be >= 1");
  config.validate();
  parallel_for(n, jobs, [&](std::size_t i) { sink(generate_chart(config, i), i); });
}

std::vector<RenderedChart> generate_corpus(const GeneratorConfig& config, std::size_t n) {
  std::vector<RenderedChart> corpus(n);
  generate_corpus(config, n, default_jobs(), [&](GeneratedChart&& g, std::size_t i) {
    corpus[i] = std::move(g.chart);
  });
  return corpus;
}

}  // namespace vsrchart::engine
