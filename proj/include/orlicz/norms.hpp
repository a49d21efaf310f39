#pragma once

#include "orlicz/grid.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

enum class NormStatus { Converged, ZeroFunction, InfiniteNorm };

/*! Scalar computed by bisection: the true value lies in [lo, hi] and `value`
 *  is the midpoint. Closed-form paths return lo == hi == value. A vanishing
 *  input reports ZeroFunction with value 0; InfiniteNorm is kept for
 *  contract completeness but is unreachable for finite samples (the modular
 *  of f/lambda always falls below 1 for lambda large enough). */
struct NormResult {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  NormStatus status = NormStatus::Converged;
};

/*! Measure of the super-level set: (count of cells with |f| > t) * h^dim,
 *  restricted to `region` when given. */
double distribution(const SampledFunction& f, double t, const Window* region = nullptr);

/*! sum_cells phi(|f|/lambda) * h^dim, accumulated in fixed block order.
 *  +inf is an ordinary outcome (lambda too small for a jump family). */
double modular(const SampledFunction& f, const YoungFunction& phi, double lambda);

/*! sup over positive sample magnitudes v of phi(v/lambda) * mu{|f| >= v},
 *  mu = cell count * h^dim. The sup over continuous thresholds is attained
 *  at a sample magnitude because phi is left-continuous and nondecreasing,
 *  so this finite max is the exact value, not a discretization. */
double weak_modular(const SampledFunction& f, const YoungFunction& phi, double lambda);

/*! weak_modular at lambda = 1. */
double weak_sup(const SampledFunction& f, const YoungFunction& phi);

/*! inf{ lambda > 0 : modular(f, phi, lambda) <= 1 }. Jump families collapse
 *  to max|f| / jump in closed form; everything else is bisected to
 *  hi - lo <= rel_tol * hi. */
NormResult luxemburg_norm(const SampledFunction& f, const YoungFunction& phi,
                          double rel_tol = 1e-10);

/*! Same gauge with weak_modular in place of modular. */
NormResult weak_norm(const SampledFunction& f, const YoungFunction& phi,
                     double rel_tol = 1e-10);

/*! Region-restricted norms: the gauge of f * indicator(region). */
NormResult luxemburg_norm(const SampledFunction& f, const YoungFunction& phi,
                          const Window& region, double rel_tol = 1e-10);
NormResult weak_norm(const SampledFunction& f, const YoungFunction& phi,
                     const Window& region, double rel_tol = 1e-10);

/*! A conjugate usable inside norm computations at bulk-evaluation cost:
 *  closed form where the family has one, otherwise a fine tabulated fit
 *  whose chords lie on or above the true conjugate (so Holder-style bounds
 *  computed with it can only widen, never tighten). Falls back to exact
 *  pointwise suprema when the conjugate reaches +inf on the sampled range. */
YoungFunction practical_conjugate(const YoungFunction& phi);

/*! Both unit-ball statements at the computed gauges: the modular of
 *  f / ||f|| stays within 1 + rel_tol, and likewise the weak modular at the
 *  weak gauge. */
struct UnitBallReport {
  double norm = 0.0;
  double weak = 0.0;
  double strong_modular = 0.0;
  double weak_modular_value = 0.0;
  bool pass = false;
};
UnitBallReport unit_ball_check(const SampledFunction& f, const YoungFunction& phi,
                               double rel_tol = 1e-8);

/*! 1 / phi^{-1}(1/measure): the closed-form norm of an indicator over a set
 *  of the given measure, under both the strong and the weak gauge. */
double indicator_norm_formula(const YoungFunction& phi, double measure);

/*! integral |f g| h^dim against 2 ||f||_phi ||g||_conj(phi). */
struct HolderReport {
  double integral = 0.0;
  double bound = 0.0;
  double ratio = 0.0;  // integral / bound, 0 when bound is 0
  bool pass = false;
};
HolderReport holder_check(const SampledFunction& f, const SampledFunction& g,
                          const YoungFunction& phi, double rel_tol = 1e-8);

/*! Variant taking a prebuilt conjugate, for callers checking many pairs
 *  against the same phi. */
HolderReport holder_check(const SampledFunction& f, const SampledFunction& g,
                          const YoungFunction& phi, const YoungFunction& conj_phi,
                          double rel_tol = 1e-8);

/*! window mean of |f| against 2 ||f||_phi phi^{-1}(1/|window|). */
struct MeanBoundReport {
  double mean = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool pass = false;
};
MeanBoundReport mean_bound_check(const SampledFunction& f, const YoungFunction& phi,
                                 const Window& window, double rel_tol = 1e-8);

}  // namespace orlicz
