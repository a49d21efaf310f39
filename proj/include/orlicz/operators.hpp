#pragma once

#include "orlicz/grid.hpp"

namespace orlicz {

/*! The window collection a maximal operator ranges over: one shape and a set
 *  of admissible radii, all centered at grid cells. */
struct WindowFamily {
  WindowShape shape = WindowShape::Cube;
  std::vector<int> radii{0};
};

struct OperatorParams {
  double alpha = 0.0;  // order; 0 <= alpha < dim
  WindowFamily windows;
  int workers = 1;
};

/*! measure(W)^{alpha/dim} for a window of `cell_count` cells. A window's
 *  candidate value is window_weight * (cell sum / cell_count), equal to
 *  |W|^{alpha/dim - 1} * integral but organized so a full-window indicator
 *  average is exactly 1. Exposed so tests can form single-window witness
 *  terms through the exact code path the operators use. */
double window_weight(const Grid& g, std::size_t cell_count, double alpha);

/*! sum over member cells y of |(b_at_x - b(y)) * f(y)|, accumulated in the
 *  fixed window traversal order. */
double commutator_window_sum(const SampledFunction& f, const SampledFunction& b,
                             double b_at_x, const Window& w);

/*! At each cell x: sup over family windows W containing x of
 *  window_weight(W) * mean_W |f|. */
SampledFunction fractional_maximal(const SampledFunction& f, const OperatorParams& p);

/*! At each cell x: sup over family windows W containing x of
 *  window_weight(W) * mean_W |b(x) - b(y)| |f(y)|. */
SampledFunction commutator_maximal(const SampledFunction& f, const SampledFunction& b,
                                   const OperatorParams& p);

/*! b * (maximal of f) - maximal of (b f); carries sign, unlike the two sups. */
SampledFunction maximal_commutator(const SampledFunction& f, const SampledFunction& b,
                                   const OperatorParams& p);

/*! Local variant over a cube region: at each cell x of `region`, sup over
 *  family cube windows W with x in W and W contained in the region (box
 *  containment of the clipped boxes). Zero outside the region. ZeroExtend
 *  grids and cube windows only. */
SampledFunction local_maximal(const SampledFunction& f, const OperatorParams& p,
                              const Window& region);

/*! max over member-cell pairs of the euclidean distance, in position units;
 *  wrapped per axis on periodic grids. */
double window_diameter(const Grid& g, const Window& w);

/*! max over the family's windows (every center, every radius) of
 *  (diam(W) / |W|^{1/dim})^beta: the geometry factor relating mean
 *  oscillation to the smoothness seminorm for this window collection. */
double family_geometry_constant(const Grid& g, const WindowFamily& fam, double beta);

enum class LipschitzMethod { DirectPairs, MeanOscillation };

/*! Order-beta smoothness seminorm of b, beta in (0, 1].
 *  DirectPairs: max |b(x)-b(y)| / dist^beta over all cell pairs.
 *  MeanOscillation: max over family windows of
 *  |W|^{-1-beta/dim} integral_W |b - mean_W b|; needs `family`. */
double lipschitz_seminorm(const SampledFunction& b, double beta, LipschitzMethod method,
                          const WindowFamily* family = nullptr);

}  // namespace orlicz
