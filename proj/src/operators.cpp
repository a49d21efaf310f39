#include "orlicz/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

void validate_params(const Grid& g, const OperatorParams& p) {
  g.validate();
  if (!(p.alpha >= 0.0) || p.alpha >= g.dim)
    throw std::invalid_argument("operator: alpha must lie in [0, dim)");
  if (p.windows.radii.empty())
    throw std::invalid_argument("operator: the window family needs at least one radius");
  for (int k : p.windows.radii)
    if (k < 0) throw std::invalid_argument("operator: negative window radius");
  if (p.workers < 1) throw std::invalid_argument("operator: workers must be >= 1");
}

// weights indexed by cell count, precomputed up to the largest window
std::vector<double> weight_table(const Grid& g, double alpha, int kmax) {
  std::size_t maxc = 1;
  for (int a = 0; a < g.dim; ++a) maxc *= static_cast<std::size_t>(2 * kmax + 1);
  std::vector<double> w(maxc + 1, 0.0);
  for (std::size_t c = 1; c <= maxc; ++c) w[c] = window_weight(g, c, alpha);
  return w;
}

}  // namespace

double window_weight(const Grid& g, std::size_t cell_count, double alpha) {
  // measure(W)^(alpha/n); the window value is weight * (sum / cell_count).
  // Splitting off the division keeps full-window averages of an indicator
  // exactly count/count = 1, so identity checks can compare bitwise.
  const double hv = g.cell_volume();
  return std::pow(static_cast<double>(cell_count) * hv, alpha / g.dim);
}

double commutator_window_sum(const SampledFunction& f, const SampledFunction& b,
                             double b_at_x, const Window& w) {
  double s = 0.0;
  visit_window(f.grid(), w, [&](std::size_t y) { s += std::abs((b_at_x - b[y]) * f[y]); });
  return s;
}

SampledFunction fractional_maximal(const SampledFunction& f, const OperatorParams& p) {
  const Grid& g = f.grid();
  validate_params(g, p);
  const int kmax = *std::max_element(p.windows.radii.begin(), p.windows.radii.end());
  const auto wt = weight_table(g, p.alpha, kmax);
  std::vector<double> out(g.size(), 0.0);
  parallel_for(g.size(), p.workers, [&](std::size_t x) {
    const auto cx = g.coords(x);
    double best = 0.0;
    for (int k : p.windows.radii) {
      // windows containing x have centers within radius k of x
      visit_window(g, {cx, k, p.windows.shape}, [&](std::size_t c) {
        const Window w{g.coords(c), k, p.windows.shape};
        const std::size_t cnt = window_cell_count(g, w);
        const double val = wt[cnt] * (f.abs_window_sum(w) / static_cast<double>(cnt));
        if (val > best) best = val;
      });
    }
    out[x] = best;
  });
  return SampledFunction(g, std::move(out));
}

SampledFunction commutator_maximal(const SampledFunction& f, const SampledFunction& b,
                                   const OperatorParams& p) {
  const Grid& g = f.grid();
  validate_params(g, p);
  if (b.grid().size() != g.size() || b.grid().dim != g.dim)
    throw std::invalid_argument("commutator: b and f live on different grids");
  const int kmax = *std::max_element(p.windows.radii.begin(), p.windows.radii.end());
  const auto wt = weight_table(g, p.alpha, kmax);
  std::vector<double> out(g.size(), 0.0);
  parallel_for(g.size(), p.workers, [&](std::size_t x) {
    const auto cx = g.coords(x);
    const double bx = b[x];
    double best = 0.0;
    for (int k : p.windows.radii) {
      visit_window(g, {cx, k, p.windows.shape}, [&](std::size_t c) {
        const Window w{g.coords(c), k, p.windows.shape};
        const std::size_t cnt = window_cell_count(g, w);
        const double val =
            wt[cnt] * (commutator_window_sum(f, b, bx, w) / static_cast<double>(cnt));
        if (val > best) best = val;
      });
    }
    out[x] = best;
  });
  return SampledFunction(g, std::move(out));
}

SampledFunction maximal_commutator(const SampledFunction& f, const SampledFunction& b,
                                   const OperatorParams& p) {
  if (b.grid().size() != f.grid().size() || b.grid().dim != f.grid().dim)
    throw std::invalid_argument("commutator: b and f live on different grids");
  const auto mf = fractional_maximal(f, p);
  const auto bf = combine(b, f, [](double x, double y) { return x * y; });
  const auto mbf = fractional_maximal(bf, p);
  std::vector<double> out(f.grid().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b[i] * mf[i] - mbf[i];
  return SampledFunction(f.grid(), std::move(out));
}

SampledFunction local_maximal(const SampledFunction& f, const OperatorParams& p,
                              const Window& region) {
  const Grid& g = f.grid();
  validate_params(g, p);
  if (g.boundary != Boundary::ZeroExtend)
    throw std::invalid_argument("local operator: ZeroExtend grids only");
  if (p.windows.shape != WindowShape::Cube || region.shape != WindowShape::Cube)
    throw std::invalid_argument("local operator: cube windows only");
  const int kmax = *std::max_element(p.windows.radii.begin(), p.windows.radii.end());
  const auto wt = weight_table(g, p.alpha, kmax);
  const Box outer = clipped_box(g, region);
  std::vector<double> out(g.size(), 0.0);
  std::vector<std::size_t> cells;
  visit_window(g, region, [&](std::size_t i) { cells.push_back(i); });
  parallel_for(cells.size(), p.workers, [&](std::size_t xi) {
    const std::size_t x = cells[xi];
    const auto cx = g.coords(x);
    double best = 0.0;
    for (int k : p.windows.radii) {
      visit_window(g, {cx, k, WindowShape::Cube}, [&](std::size_t c) {
        const Window w{g.coords(c), k, WindowShape::Cube};
        if (!box_contains(outer, clipped_box(g, w))) return;
        const std::size_t cnt = window_cell_count(g, w);
        const double val = wt[cnt] * (f.abs_window_sum(w) / static_cast<double>(cnt));
        if (val > best) best = val;
      });
    }
    out[x] = best;
  });
  return SampledFunction(g, std::move(out));
}

double window_diameter(const Grid& g, const Window& w) {
  if (w.shape == WindowShape::Cube && g.boundary == Boundary::ZeroExtend) {
    const Box b = clipped_box(g, w);
    double d2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double len = b.hi[a] - b.lo[a];
      d2 += len * len;
    }
    return std::sqrt(d2) * g.h();
  }
  if (w.shape == WindowShape::Cube) {
    // periodic cube: per-axis separations wrap independently
    double d2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      int dmax = 0;
      for (int d = 0; d <= 2 * w.radius; ++d)
        dmax = std::max(dmax, std::min(d, g.extent - d));
      d2 += static_cast<double>(dmax) * dmax;
    }
    return std::sqrt(d2) * g.h();
  }
  // ball (either boundary): exact pairwise scan over member cells
  std::vector<std::array<int, 3>> cells;
  visit_window(g, w, [&](std::size_t i) { cells.push_back(g.coords(i)); });
  long long best = 0;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      long long d2 = 0;
      for (int a = 0; a < g.dim; ++a) {
        int d = std::abs(cells[i][a] - cells[j][a]);
        if (g.boundary == Boundary::Periodic) d = std::min(d, g.extent - d);
        d2 += static_cast<long long>(d) * d;
      }
      best = std::max(best, d2);
    }
  return std::sqrt(static_cast<double>(best)) * g.h();
}

double family_geometry_constant(const Grid& g, const WindowFamily& fam, double beta) {
  g.validate();
  if (!(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("geometry constant: beta must lie in (0, 1]");
  double best = 0.0;
  for (int k : fam.radii) {
    if (k == 0) continue;  // single cells oscillate trivially
    for (std::size_t c = 0; c < g.size(); ++c) {
      const Window w{g.coords(c), k, fam.shape};
      const double vol = window_volume(g, w);
      if (!(vol > 0.0)) continue;
      const double diam = window_diameter(g, w);
      best = std::max(best, std::pow(diam / std::pow(vol, 1.0 / g.dim), beta));
    }
  }
  return best;
}

double lipschitz_seminorm(const SampledFunction& b, double beta, LipschitzMethod method,
                          const WindowFamily* family) {
  const Grid& g = b.grid();
  if (!(beta > 0.0) || beta > 1.0)
    throw std::invalid_argument("seminorm: beta must lie in (0, 1]");
  if (method == LipschitzMethod::DirectPairs) {
    double best = 0.0;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto ci = g.coords(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto cj = g.coords(j);
        long long d2 = 0;
        for (int a = 0; a < g.dim; ++a) {
          int d = std::abs(ci[a] - cj[a]);
          if (g.boundary == Boundary::Periodic) d = std::min(d, g.extent - d);
          d2 += static_cast<long long>(d) * d;
        }
        if (d2 == 0) continue;
        const double dist = std::sqrt(static_cast<double>(d2)) * g.h();
        const double cand = std::abs(b[i] - b[j]) / std::pow(dist, beta);
        if (cand > best) best = cand;
      }
    }
    return best;
  }
  if (family == nullptr)
    throw std::invalid_argument("seminorm: mean oscillation needs a window family");
  const double hv = g.cell_volume();
  double best = 0.0;
  for (int k : family->radii) {
    for (std::size_t c = 0; c < g.size(); ++c) {
      const Window w{g.coords(c), k, family->shape};
      const std::size_t count = window_cell_count(g, w);
      if (count < 2) continue;
      const double vol = static_cast<double>(count) * hv;
      double sum = 0.0;
      visit_window(g, w, [&](std::size_t y) { sum += b[y]; });
      const double mean = sum / static_cast<double>(count);
      double osc = 0.0;
      visit_window(g, w, [&](std::size_t y) { osc += std::abs(b[y] - mean); });
      const double cand = std::pow(vol, -1.0 - beta / g.dim) * (osc * hv);
      if (cand > best) best = cand;
    }
  }
  return best;
}

}  // namespace orlicz
