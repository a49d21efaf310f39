#include "orlicz/grid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace orlicz {

void Grid::validate() const {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid: dim must be 1, 2 or 3");
  if (extent < 1) throw std::invalid_argument("grid: extent must be positive");
  if (spacing < 0.0 || std::isnan(spacing))
    throw std::invalid_argument("grid: spacing must be positive (or 0 for 1/extent)");
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= h();
  return v;
}

std::size_t Grid::size() const {
  std::size_t s = 1;
  for (int a = 0; a < dim; ++a) s *= static_cast<std::size_t>(extent);
  return s;
}

std::array<int, 3> Grid::coords(std::size_t flat) const {
  std::array<int, 3> c{0, 0, 0};
  c[0] = static_cast<int>(flat % extent);
  if (dim > 1) c[1] = static_cast<int>((flat / extent) % extent);
  if (dim > 2) c[2] = static_cast<int>(flat / (static_cast<std::size_t>(extent) * extent));
  return c;
}

std::array<double, 3> Grid::position(const std::array<int, 3>& c) const {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int a = 0; a < dim; ++a) x[a] = c[a] * h();
  return x;
}

std::size_t window_cell_count(const Grid& g, const Window& w) {
  if (w.shape == WindowShape::Cube) {
    if (g.boundary == Boundary::Periodic) {
      if (2 * w.radius + 1 > g.extent)
        throw std::invalid_argument("periodic window wider than the grid");
      std::size_t c = 1;
      for (int a = 0; a < g.dim; ++a) c *= static_cast<std::size_t>(2 * w.radius + 1);
      return c;
    }
    const Box b = clipped_box(g, w);
    std::size_t c = 1;
    for (int a = 0; a < g.dim; ++a) {
      if (b.hi[a] < b.lo[a]) return 0;
      c *= static_cast<std::size_t>(b.hi[a] - b.lo[a] + 1);
    }
    return c;
  }
  std::size_t c = 0;
  visit_window(g, w, [&](std::size_t) { ++c; });
  return c;
}

double window_volume(const Grid& g, const Window& w) {
  return static_cast<double>(window_cell_count(g, w)) * g.cell_volume();
}

Box clipped_box(const Grid& g, const Window& w) {
  Box b;
  for (int a = 0; a < g.dim; ++a) {
    b.lo[a] = std::max(w.center[a] - w.radius, 0);
    b.hi[a] = std::min(w.center[a] + w.radius, g.extent - 1);
  }
  return b;
}

bool box_contains(const Box& outer, const Box& inner) {
  for (int a = 0; a < 3; ++a)
    if (inner.lo[a] < outer.lo[a] || inner.hi[a] > outer.hi[a]) return false;
  return true;
}

SampledFunction indicator(const Grid& g, const Window& w) {
  g.validate();
  std::vector<double> v(g.size(), 0.0);
  visit_window(g, w, [&](std::size_t i) { v[i] = 1.0; });
  return SampledFunction(g, std::move(v));
}

SampledFunction mask_window(const SampledFunction& f, const Window& w) {
  std::vector<double> v(f.grid().size(), 0.0);
  visit_window(f.grid(), w, [&](std::size_t i) { v[i] = f[i]; });
  return SampledFunction(f.grid(), std::move(v));
}

SampledFunction::SampledFunction(const Grid& g, std::vector<double> values)
    : grid_(g), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size())
    throw std::invalid_argument("sampled function: value count != grid size");
  for (int a = 0; a < 3; ++a) pn_[a] = a < grid_.dim ? grid_.extent : 1;
  const std::size_t s0 = pn_[0] + 1, s1 = pn_[1] + 1, s2 = pn_[2] + 1;
  prefix_.assign(s0 * s1 * s2, 0.0);
  auto P = [&](int i, int j, int k) -> double& {
    return prefix_[i + s0 * (j + s1 * static_cast<std::size_t>(k))];
  };
  for (int k = 0; k < pn_[2]; ++k)
    for (int j = 0; j < pn_[1]; ++j)
      for (int i = 0; i < pn_[0]; ++i) {
        const std::array<int, 3> c{i, j, k};
        P(i + 1, j + 1, k + 1) = std::abs(values_[grid_.flat(c)]) + P(i, j + 1, k + 1) +
                                 P(i + 1, j, k + 1) - P(i, j, k + 1) + P(i + 1, j + 1, k) -
                                 P(i, j + 1, k) - P(i + 1, j, k) + P(i, j, k);
      }
}

double SampledFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SampledFunction::abs_box_sum(const std::array<int, 3>& lo,
                                    const std::array<int, 3>& hi) const {
  const int x0 = lo[0], x1 = hi[0] + 1;
  const int y0 = grid_.dim > 1 ? lo[1] : 0, y1 = grid_.dim > 1 ? hi[1] + 1 : 1;
  const int z0 = grid_.dim > 2 ? lo[2] : 0, z1 = grid_.dim > 2 ? hi[2] + 1 : 1;
  return pref(x1, y1, z1) - pref(x0, y1, z1) - pref(x1, y0, z1) + pref(x0, y0, z1) -
         pref(x1, y1, z0) + pref(x0, y1, z0) + pref(x1, y0, z0) - pref(x0, y0, z0);
}

double SampledFunction::abs_window_sum(const Window& w) const {
  if (w.shape == WindowShape::Cube) {
    if (grid_.boundary == Boundary::ZeroExtend) {
      const Box b = clipped_box(grid_, w);
      for (int a = 0; a < grid_.dim; ++a)
        if (b.hi[a] < b.lo[a]) return 0.0;
      return abs_box_sum(b.lo, b.hi);
    }
    if (2 * w.radius + 1 > grid_.extent)
      throw std::invalid_argument("periodic window wider than the grid");
    // split each wrapped axis range into at most two in-grid intervals and
    // sum the resulting boxes
    std::array<std::array<std::array<int, 2>, 2>, 3> seg{};
    std::array<int, 3> nseg{1, 1, 1};
    for (int a = 0; a < grid_.dim; ++a) {
      const int lo = w.center[a] - w.radius, hi = w.center[a] + w.radius;
      if (lo >= 0 && hi <= grid_.extent - 1) {
        seg[a][0] = {lo, hi};
        nseg[a] = 1;
      } else {
        const int wl = detail::wrap_index(lo, grid_.extent);
        const int wh = detail::wrap_index(hi, grid_.extent);
        seg[a][0] = {0, wh};
        seg[a][1] = {wl, grid_.extent - 1};
        nseg[a] = 2;
      }
    }
    double total = 0.0;
    for (int i2 = 0; i2 < nseg[2]; ++i2)
      for (int i1 = 0; i1 < nseg[1]; ++i1)
        for (int i0 = 0; i0 < nseg[0]; ++i0) {
          const std::array<int, 3> lo{seg[0][i0][0], seg[1][i1][0], seg[2][i2][0]};
          const std::array<int, 3> hi{seg[0][i0][1], seg[1][i1][1], seg[2][i2][1]};
          total += abs_box_sum(lo, hi);
        }
    return total;
  }
  double total = 0.0;
  visit_window(grid_, w, [&](std::size_t i) { total += std::abs(values_[i]); });
  return total;
}

double cell_distance(const Grid& g, const std::array<int, 3>& a, const std::array<int, 3>& b) {
  long long d2 = 0;
  for (int ax = 0; ax < g.dim; ++ax) {
    int d = std::abs(a[ax] - b[ax]);
    if (g.boundary == Boundary::Periodic) d = std::min(d, g.extent - d);
    d2 += static_cast<long long>(d) * d;
  }
  return std::sqrt(static_cast<double>(d2)) * g.h();
}

SampledFunction sample(const Grid& g,
                       const std::function<double(const std::array<double, 3>&)>& expr) {
  g.validate();
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = g.coords(i);
    v[i] = expr(g.position(c));
    if (!std::isfinite(v[i])) {
      std::string msg = "sample: non-finite value at cell (";
      for (int a = 0; a < g.dim; ++a) msg += (a ? "," : "") + std::to_string(c[a]);
      throw std::domain_error(msg + ")");
    }
  }
  return SampledFunction(g, std::move(v));
}

std::pair<SampledFunction, double> synth_lipschitz(double beta, const std::vector<Cone>& cones,
                                                   const Grid& g) {
  g.validate();
  if (!(beta > 0.0) || beta >= 1.0)
    throw std::invalid_argument("synth_lipschitz: beta must lie in (0, 1)");
  double bound = 0.0;
  for (const Cone& c : cones) bound += std::abs(c.weight);
  std::vector<double> v(g.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto ci = g.coords(i);
    double s = 0.0;
    for (const Cone& c : cones) s += c.weight * std::pow(cell_distance(g, ci, c.tip), beta);
    v[i] = s;
  }
  return {SampledFunction(g, std::move(v)), bound};
}

SampledFunction synth_spike(const Grid& g, const std::array<int, 3>& center, double gamma) {
  g.validate();
  if (!(gamma > 0.0)) throw std::invalid_argument("synth_spike: gamma must be positive");
  const double clip = std::pow(g.h() / 2.0, -gamma);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = cell_distance(g, g.coords(i), center);
    v[i] = d > 0.0 ? std::min(clip, std::pow(d, -gamma)) : clip;
  }
  return SampledFunction(g, std::move(v));
}

void store_binary(const SampledFunction& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("store_binary: cannot open " + path);
  const Grid& g = f.grid();
  char head[96];
  std::snprintf(head, sizeof head, "%d %d %.17g %s\n", g.dim, g.extent, g.h(),
                g.boundary == Boundary::Periodic ? "periodic" : "zero");
  out << head;
  out.write(reinterpret_cast<const char*>(f.values().data()),
            static_cast<std::streamsize>(f.values().size() * sizeof(double)));
  if (!out) throw std::runtime_error("store_binary: write failed for " + path);
}

SampledFunction load_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_binary: cannot open " + path);
  std::string head;
  std::getline(in, head);
  int dim = 0, extent = 0;
  double h = 0.0;
  char word[16] = {0};
  if (std::sscanf(head.c_str(), "%d %d %lg %15s", &dim, &extent, &h, word) != 4)
    throw std::runtime_error("load_binary: bad header in " + path);
  Grid g{dim, extent, h,
         std::string(word) == "periodic" ? Boundary::Periodic : Boundary::ZeroExtend};
  g.validate();
  std::vector<double> v(g.size());
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(v.size() * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(v.size() * sizeof(double)))
    throw std::runtime_error("load_binary: truncated data in " + path);
  return SampledFunction(g, std::move(v));
}

void store_csv(const SampledFunction& f, const std::string& path) {
  const Grid& g = f.grid();
  if (g.dim != 1) throw std::invalid_argument("store_csv: text form is 1-D only");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("store_csv: cannot open " + path);
  out << "x,value\n";
  char line[80];
  for (int i = 0; i < g.extent; ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", i * g.h(), f[static_cast<std::size_t>(i)]);
    out << line;
  }
}

SampledFunction load_csv(const std::string& path, Boundary boundary) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_csv: cannot open " + path);
  std::string line;
  std::vector<double> x, v;
  while (std::getline(in, line)) {
    if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    double a = 0.0, b = 0.0;
    if (std::sscanf(line.c_str(), "%lg,%lg", &a, &b) != 2)
      throw std::runtime_error("load_csv: bad row '" + line + "' in " + path);
    x.push_back(a);
    v.push_back(b);
  }
  if (v.size() < 2) throw std::runtime_error("load_csv: need at least two rows in " + path);
  Grid g{1, static_cast<int>(v.size()), x[1] - x[0], boundary};
  g.validate();
  return SampledFunction(g, std::move(v));
}

}  // namespace orlicz
