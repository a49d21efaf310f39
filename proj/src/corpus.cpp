#include "orlicz/corpus.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace orlicz {

double quantize_value(double v) { return std::round(v * 0x1p26) * 0x1p-26; }

SampledFunction quantized(const SampledFunction& f) {
  return transform(f, [](double v) { return quantize_value(v); });
}

SampledFunction synth_random_smooth(const Grid& g, std::uint64_t seed, int passes) {
  g.validate();
  std::mt19937_64 rng(seed);
  std::vector<double> v(g.size());
  for (double& x : v) x = uniform01(rng());
  std::vector<double> next(v.size());
  const int denom = 2 * g.dim + 1;
  for (int pass = 0; pass < passes; ++pass) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto c = g.coords(i);
      double s = v[i];
      for (int a = 0; a < g.dim; ++a)
        for (int d : {-1, +1}) {
          auto cc = c;
          cc[a] += d;
          if (g.boundary == Boundary::Periodic)
            cc[a] = detail::wrap_index(cc[a], g.extent);
          else if (cc[a] < 0 || cc[a] >= g.extent)
            continue;
          s += v[g.flat(cc)];
        }
      next[i] = s / denom;
    }
    v.swap(next);
  }
  for (double& x : v) x = quantize_value(x);
  return SampledFunction(g, std::move(v));
}

Corpus default_corpus(const Grid& g, std::uint64_t seed, double beta, double gamma) {
  g.validate();
  if (!(beta > 0.0) || beta >= 1.0)
    throw std::invalid_argument("corpus: beta must lie in (0, 1)");
  if (!(gamma > 0.0) || gamma >= g.dim)
    throw std::invalid_argument("corpus: gamma must lie in (0, dim)");
  const int n = g.extent;
  const int rcap = std::max(1, (n - 2) / 2);
  auto at = [&](int num, int den) {
    std::array<int, 3> c{0, 0, 0};
    for (int a = 0; a < g.dim; ++a) c[a] = n * num / den;
    return c;
  };
  Corpus out;
  out.seed = seed;
  for (int j = 0; j < 4; ++j) {
    const int r = std::min(1 << j, rcap);
    for (int pl = 0; pl < 2; ++pl) {
      const Window w{pl == 0 ? at(1, 2) : at(1, 4), r, WindowShape::Cube};
      out.entries.push_back({"indicator",
                             "indicator-r" + std::to_string(r) +
                                 (pl == 0 ? "-center" : "-quarter"),
                             indicator(g, w), 0.0, 0.0, (2.0 * r + 1.0) * g.h()});
    }
  }
  const auto tip_a = at(1, 4);
  auto tip_b = at(1, 4);
  tip_b[0] = n / 8;
  const auto tip_c = at(3, 8);
  const std::vector<std::vector<Cone>> cone_sets = {
      {{tip_a, 1.0}},
      {{tip_b, -1.0}},
      {{tip_a, 1.0}, {tip_c, -1.0}},
      {{tip_b, 0.5}, {tip_c, 0.75}},
  };
  for (std::size_t k = 0; k < cone_sets.size(); ++k) {
    auto built = synth_lipschitz(beta, cone_sets[k], g);
    out.entries.push_back({"lipschitz-cone", "cone-" + std::to_string(k),
                           quantized(built.first), built.second, beta, 0.0});
  }
  for (int s = 0; s < 2; ++s) {
    auto c = at(3, 4);
    if (s == 1) c[0] = std::min(n - 2, 7 * n / 8);
    out.entries.push_back({"spike", "spike-" + std::to_string(s),
                           quantized(synth_spike(g, c, gamma)), 0.0, 0.0, 0.0});
  }
  for (int k = 0; k < 4; ++k)
    out.entries.push_back({"random-smooth", "random-smooth-" + std::to_string(k),
                           synth_random_smooth(g, seed + static_cast<std::uint64_t>(k)), 0.0,
                           0.0});
  return out;
}

}  // namespace orlicz
