#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/numeric.hpp"

namespace orlicz {

enum class Boundary { ZeroExtend, Periodic };
enum class WindowShape { Cube, EuclideanBall };

/*! Uniform lattice with `extent` cells per axis in `dim` (1..3) dimensions.
 *  Cell (i0,..) sits at position i*h per axis; flat storage runs axis 0
 *  fastest. Unused coordinate slots are always 0. */
struct Grid {
  int dim = 1;
  int extent = 0;
  double spacing = 0.0;  // <= 0 selects 1/extent
  Boundary boundary = Boundary::ZeroExtend;

  void validate() const;

  double h() const { return spacing > 0.0 ? spacing : 1.0 / extent; }
  double cell_volume() const;
  std::size_t size() const;

  std::size_t flat(const std::array<int, 3>& c) const {
    std::size_t idx = static_cast<std::size_t>(c[0]);
    if (dim > 1) idx += static_cast<std::size_t>(extent) * c[1];
    if (dim > 2) idx += static_cast<std::size_t>(extent) * extent * c[2];
    return idx;
  }
  std::array<int, 3> coords(std::size_t flat) const;
  std::array<double, 3> position(const std::array<int, 3>& c) const;
};

/*! Cells within `radius` steps of a center cell: cube = chebyshev distance,
 *  ball = euclidean distance in index units. Under ZeroExtend the member set
 *  is clipped to the grid; under Periodic it wraps, which requires
 *  2*radius+1 <= extent so no cell is counted twice. */
struct Window {
  std::array<int, 3> center{0, 0, 0};
  int radius = 0;
  WindowShape shape = WindowShape::Cube;
};

namespace detail {
inline int wrap_index(int i, int n) {
  const int r = i % n;
  return r < 0 ? r + n : r;
}
}  // namespace detail

/*! Calls fn(flat_index) once per member cell. The traversal order is fixed
 *  (raw lexicographic, axis 0 fastest) for both boundary rules, so sums
 *  accumulated through it are reproducible. */
template <class Fn>
void visit_window(const Grid& g, const Window& w, Fn&& fn) {
  const int k = w.radius;
  const int n = g.extent;
  std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int a = 0; a < g.dim; ++a) {
    lo[a] = w.center[a] - k;
    hi[a] = w.center[a] + k;
  }
  if (g.boundary == Boundary::ZeroExtend) {
    for (int a = 0; a < g.dim; ++a) {
      if (lo[a] < 0) lo[a] = 0;
      if (hi[a] > n - 1) hi[a] = n - 1;
      if (lo[a] > hi[a]) return;
    }
  } else if (2 * k + 1 > n) {
    throw std::invalid_argument("periodic window wider than the grid");
  }
  const bool ball = w.shape == WindowShape::EuclideanBall;
  const long long k2 = static_cast<long long>(k) * k;
  for (int z = lo[2]; z <= hi[2]; ++z)
    for (int y = lo[1]; y <= hi[1]; ++y)
      for (int x = lo[0]; x <= hi[0]; ++x) {
        if (ball) {
          const long long dx = x - w.center[0];
          const long long dy = g.dim > 1 ? y - w.center[1] : 0;
          const long long dz = g.dim > 2 ? z - w.center[2] : 0;
          if (dx * dx + dy * dy + dz * dz > k2) continue;
        }
        std::array<int, 3> c{x, y, z};
        if (g.boundary == Boundary::Periodic)
          for (int a = 0; a < g.dim; ++a) c[a] = detail::wrap_index(c[a], n);
        fn(g.flat(c));
      }
}

std::size_t window_cell_count(const Grid& g, const Window& w);
double window_volume(const Grid& g, const Window& w);  // count * h^dim

/*! Inclusive cell bounds of a cube window after ZeroExtend clipping. */
struct Box {
  std::array<int, 3> lo{0, 0, 0};
  std::array<int, 3> hi{0, 0, 0};
};
Box clipped_box(const Grid& g, const Window& w);
bool box_contains(const Box& outer, const Box& inner);

/*! Lattice samples plus an eagerly built prefix table over |values|, so any
 *  cube-window absolute sum is a handful of table lookups. */
class SampledFunction {
 public:
  SampledFunction(const Grid& g, std::vector<double> values);

  template <class Gen>
  static SampledFunction from_positions(const Grid& g, Gen&& gen) {
    g.validate();
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = gen(g.position(g.coords(i)));
    return SampledFunction(g, std::move(v));
  }

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double max_abs() const;

  // sum of |f| over an inclusive cell box already inside the grid
  double abs_box_sum(const std::array<int, 3>& lo, const std::array<int, 3>& hi) const;
  // sum of |f| over a window's member cells (prefix-backed for cubes)
  double abs_window_sum(const Window& w) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<double> prefix_;  // (n0+1)(n1+1)(n2+1), axis 0 fastest
  std::array<int, 3> pn_{1, 1, 1};

  double pref(int i, int j, int k) const {
    return prefix_[i + static_cast<std::size_t>(pn_[0] + 1) *
                           (j + static_cast<std::size_t>(pn_[1] + 1) * k)];
  }
};

/*! Indicator of a window's member cells. */
SampledFunction indicator(const Grid& g, const Window& w);

/*! Copy of f zeroed outside the window; with phi(0) = 0 this is how norms
 *  taken "over a window" are computed on the full grid. */
SampledFunction mask_window(const SampledFunction& f, const Window& w);

template <class Fn>
SampledFunction transform(const SampledFunction& f, Fn&& fn) {
  std::vector<double> v(f.values());
  for (double& x : v) x = fn(x);
  return SampledFunction(f.grid(), std::move(v));
}

template <class Fn>
SampledFunction combine(const SampledFunction& a, const SampledFunction& b, Fn&& fn) {
  if (a.grid().size() != b.grid().size())
    throw std::invalid_argument("combine: mismatched grids");
  std::vector<double> v(a.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(a.values()[i], b.values()[i]);
  return SampledFunction(a.grid(), std::move(v));
}

/*! Euclidean distance between two cells in physical units; under Periodic
 *  each axis offset takes the short way around the torus. */
double cell_distance(const Grid& g, const std::array<int, 3>& a, const std::array<int, 3>& b);

/*! Samples expr at cell positions, rejecting non-finite values with an error
 *  that names the offending point. Prefer from_positions when the expression
 *  is known to be tame. */
SampledFunction sample(const Grid& g,
                       const std::function<double(const std::array<double, 3>&)>& expr);

struct Cone {
  std::array<int, 3> tip{0, 0, 0};
  double weight = 1.0;
};

/*! Sum of fractional cones b(x) = sum_i w_i * dist(x, tip_i)^beta together
 *  with the triangle-inequality bound sum |w_i| on its order-beta smoothness
 *  seminorm (each cone moves by at most |w_i| dist(x,y)^beta between two
 *  points). An empty cone list gives the zero function with bound 0. */
std::pair<SampledFunction, double> synth_lipschitz(double beta, const std::vector<Cone>& cones,
                                                   const Grid& g);

/*! Radial spike dist(x, center)^{-gamma}; the singular cell is clipped to
 *  (h/2)^{-gamma}, which keeps values finite without disturbing how the
 *  profile integrates at grid resolution. */
SampledFunction synth_spike(const Grid& g, const std::array<int, 3>& center, double gamma);

/*! Row-major 64-bit floats in flat-index order behind a one-line text header
 *  "dim N h boundary". Spacing is stored resolved, so a grid created with
 *  the spacing-0 shorthand loads back with the explicit equivalent. */
void store_binary(const SampledFunction& f, const std::string& path);
SampledFunction load_binary(const std::string& path);

/*! 1-D interchange as "x,value" rows. Loading reconstructs the spacing from
 *  the first two abscissae; the boundary rule is not part of the format. */
void store_csv(const SampledFunction& f, const std::string& path);
SampledFunction load_csv(const std::string& path, Boundary boundary = Boundary::ZeroExtend);

}  // namespace orlicz
