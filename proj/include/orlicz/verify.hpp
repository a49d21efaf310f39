#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/corpus.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

/*! One failing comparison: where it happened and the two sides. */
struct Witness {
  std::string where;
  double lhs = 0.0;
  double rhs = 0.0;
};

/*! Outcome record shared by every suite. `worst_margin` is the smallest
 *  rhs - lhs seen across all comparisons (negative means a violation;
 *  equality checks contribute -|lhs - rhs|). `empirical_constant` is the
 *  measured constant of the check (sup ratio, best C, largest deviation).
 *  Sweep-style checks keep their (scale, value) rows for plot tables, and
 *  at most 20 failing witnesses are retained. */
struct VerificationReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  double worst_margin = 0.0;
  double empirical_constant = 0.0;
  std::size_t checked = 0;  // comparisons evaluated
  std::vector<Witness> witnesses;
  std::string note;
  std::vector<std::pair<double, double>> sweep;  // (scale, value) rows
};

inline constexpr std::size_t kMaxWitnesses = 20;

/*! Scale sweeps cannot certify a continuum sup, so "bounded" means: values
 *  at the extreme scale positions do not exceed the minimum by more than
 *  this factor. Reports record the scanned span alongside the verdict. */
inline constexpr double kGrowthLimit = 1.5;

/*! sup over r_grid of r^{-exponent} Phi^{-1}(r) / Psi^{-1}(r). The report
 *  flags a divergence trend when the ratio peaks at either end of the grid
 *  more than kGrowthLimit above its minimum. Throws when Psi^{-1} vanishes
 *  on the grid. */
std::pair<double, VerificationReport> inverse_condition_scan(const YoungFunction& phi,
                                                             const YoungFunction& psi,
                                                             double exponent,
                                                             const std::vector<double>& r_grid);

enum class NormTarget { Strong, Weak };

/*! sup over the corpus of |op f|_{L^Psi or WL^Psi} / |f|_{L^Phi}: a lower
 *  estimate of the operator norm. Indicator entries are also grouped by
 *  their scale and checked for a monotone growth trend across dyadic sizes,
 *  which is how unboundedness shows up on a finite grid. Every corpus entry
 *  must have a finite nonzero input norm. */
std::pair<double, VerificationReport> empirical_norm_ratio(const OperatorParams& op,
                                                           const YoungFunction& phi,
                                                           const YoungFunction& psi,
                                                           const Corpus& corpus,
                                                           NormTarget target);

/*! Four pointwise inequalities evaluated at every grid cell, exactly (the
 *  discrete sup ranges over the witness window, so no discretization slack
 *  is needed):
 *    1. vol(B0)^{alpha/n} <= M_alpha(chi_B0) on B0, per family radius;
 *    2. commutator maximal of (b, f) <= C_geom * |b|_beta * M_{alpha+beta}f;
 *    3. vol(B0)^{alpha/n} |b - mean_B0 b| <= commutator maximal of chi_B0;
 *    4. |b * M_alpha f - M_alpha(b f)| <= commutator maximal (needs b >= 0;
 *       skipped, with a note, when b takes negative values).
 *  Checks 2 and 4 rely on generic floating-point slack, so feed them corpus
 *  functions (quantized values, separated sharp features). */
VerificationReport pointwise_suite(const SampledFunction& b, const SampledFunction& f,
                                   double alpha, double beta, const WindowFamily& family,
                                   int workers = 1);

/*! Two exact identities on the cells of B0, bit for bit:
 *    M_alpha(chi_B0) == vol(B0)^{alpha/n} and
 *    M_alpha(b chi_B0) == restricted M_{alpha,B0}(b).
 *  B0's radius must belong to the family; the restricted identity wants the
 *  family saturated (every radius 0..k present) and B0 away from the
 *  boundary, which is how the continuum sup-over-all-balls is reproduced. */
VerificationReport identity_suite(const SampledFunction& b, const Window& b0, double alpha,
                                  const WindowFamily& family, int workers = 1);

/*! sup over family windows B (every center, every radius) of
 *    vol(B)^{-beta/n} Psi^{-1}(vol(B)^{-1}) |b - vol(B)^{-alpha/n} M_{alpha,B}b|_{L^Psi(B)}
 *  with a growth-trend verdict across the radii. For b >= 0 the report also
 *  verifies, on interior center windows with a saturated radius set, that
 *  the functional equals
 *    vol(B)^{-(alpha+beta)/n} Psi^{-1}(vol(B)^{-1}) |b M_alpha chi_B - M_alpha(b chi_B)|_{L^Psi(B)}
 *  within norm tolerance. Cube windows on ZeroExtend grids only. */
std::pair<double, VerificationReport> capacity_functional(const SampledFunction& b,
                                                          const YoungFunction& phi,
                                                          const YoungFunction& psi, double alpha,
                                                          double beta, const WindowFamily& family,
                                                          int workers = 1);

/*! Scale-sweep reproduction of the lower-bound chain behind the necessity
 *  direction: per dyadic window B0,
 *    link 1: M_alpha(chi_B0) >= vol^{alpha/n} on B0 (exact);
 *    link 2: weak norm of chi_B0 over B0 equals 1/Psi^{-1}(vol^{-1});
 *    link 3: weak norm of M_alpha(chi_B0) over B0 >= vol^{alpha/n}/Psi^{-1}(vol^{-1});
 *  and the composed constant vol^{alpha/n} Phi^{-1}(vol^{-1})/Psi^{-1}(vol^{-1})
 *  must stay uniform across the scanned sizes. Needs >= 4 dyadic radii;
 *  fewer flags an insufficient scale span. */
VerificationReport necessity_chain(const YoungFunction& phi, const YoungFunction& psi,
                                   double alpha, const Grid& g, const WindowFamily& family,
                                   int workers = 1);

/*! The averaged-oscillation bound on one window, with g = vol^{-alpha/n}
 *  M_{alpha,B0}(b) over the saturated inner family:
 *    sum_B0 |b - mean_B0 b| <= 2 sum_B0 |b - g|   (exact), and
 *    vol^{-1-beta/n} int_B0 |b - mean b| <= 4 vol^{-beta/n} Psi^{-1}(vol^{-1}) |b-g|_{L^Psi(B0)}.
 *  Both comparisons are tolerance-free; the factor-2 slack plus the gauge
 *  overestimate absorb rounding. */
VerificationReport mean_oscillation_bound(const SampledFunction& b, const Window& b0,
                                          double alpha, double beta, const YoungFunction& psi,
                                          int workers = 1);

/*! Machine and human renderings of a report. JSON keys come out in a fixed
 *  order and doubles print shortest-round-trip, so equal reports serialize
 *  byte-identically. */
std::string report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

}  // namespace orlicz
