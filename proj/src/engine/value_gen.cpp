#include "engine/value_gen.hpp"

#include <algorithm>
#include <cmath>

namespace vsrchart::engine {

std::vector<double> generate_values(ValueGenKind kind, std::size_t n, Rng& rng) {
  std::vector<double> values(n);
  switch (kind) {
    case ValueGenKind::kIidUniform: {
      for (auto& v : values) v = rng.uniform();
      break;
    }
    case ValueGenKind::kRandomWalk: {
      double level = rng.uniform();
      const double step = rng.uniform(0.02, 0.12);
      for (auto& v : values) {
        v = level;
        level += rng.normal(0.0, step);
      }
      break;
    }
    case ValueGenKind::kSinusoidNoise: {
      const double periods = rng.uniform(0.5, 3.5);
      const double phase = rng.uniform(0.0, 6.283185307179586);
      const double noise = rng.uniform(0.02, 0.15);
      for (std::size_t i = 0; i < n; ++i) {
        const double t = n > 1 ? double(i) / double(n - 1) : 0.0;
        values[i] = std::sin(6.283185307179586 * periods * t + phase) +
                    rng.normal(0.0, noise);
      }
      break;
    }
    case ValueGenKind::kSpikeMixture: {
      const double base = rng.uniform(0.2, 0.5);
      const double spike_p = rng.uniform(0.08, 0.25);
      for (auto& v : values) {
        v = base + rng.normal(0.0, 0.05);
        if (rng.bernoulli(spike_p)) v += rng.uniform(0.5, 1.5);
      }
      break;
    }
  }
  return values;
}

std::vector<double> rescale_to_band(const std::vector<double>& values, double lo,
                                    double hi) {
  double vmin = values[0], vmax = values[0];
  for (double v : values) {
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double span = vmax - vmin;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double t = span > 0.0 ? (values[i] - vmin) / span : 0.5;
    const double mapped = lo + t * (hi - lo);
    out[i] = std::round(mapped * 100.0) / 100.0;
  }
  return out;
}

double abs_pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n < 2) return 1.0;
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= double(n);
  mb /= double(n);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) return 1.0;
  return std::abs(cov / std::sqrt(va * vb));
}

}  // namespace vsrchart::engine
