#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/numeric.hpp"

namespace orlicz {

/*! Dyadic evaluation grid 2^k for k in [lo_exp, hi_exp], optionally with
 *  per_octave points per doubling. Scans over Young functions use it
 *  everywhere a "for all r" condition has to be probed at finitely many
 *  scales. */
struct DyadicGrid {
  int lo_exp = -20;
  int hi_exp = 20;
  int per_octave = 1;

  std::vector<double> values() const;
};

enum class YoungFamily { Power, ExpMinusLinear, LInfinity, LLogL, Tabulated, Conjugate };

/*! A Young function: convex, left-continuous, vanishing at zero, tending to
 *  +infinity, with values in [0, +inf]. +inf is an ordinary value here
 *  (IEEE infinity), never a NaN sentinel; all arithmetic on it is
 *  order-theoretic (comparisons, sup).
 *
 *  Instances are immutable and cheap to copy (shared payload). */
class YoungFunction {
 public:
  static YoungFunction power(double p);          // r^p, p >= 1
  static YoungFunction exp_minus_linear();       // e^r - r - 1
  static YoungFunction l_infinity();             // 0 on [0,1], +inf beyond
  static YoungFunction l_log_l();                // r log(1+r)
  // Piecewise-linear interpolation through (r_i, phi_i); validated at load
  // (monotone, convex, phi(0)=0) and extended beyond the last sample with
  // the final slope.
  static YoungFunction tabulated(std::vector<double> r, std::vector<double> phi);
  // The Legendre transform as a first-class function, usable wherever a
  // YoungFunction is expected (norms, scans). Closed forms where the parent
  // admits one, concave search otherwise.
  static YoungFunction conjugate_of(const YoungFunction& phi);

  // Text form: "power:p=2" | "explin" | "linfty" | "llogl" | "table:<path>".
  // The table file is CSV with header "r,phi". Throws std::invalid_argument
  // on malformed specs.
  static YoungFunction parse(const std::string& spec);

  YoungFamily family() const { return impl_->family; }
  double power_exponent() const;  // Power family only
  std::string describe() const;

  // phi(r); throws std::domain_error for r < 0.
  double value(double r) const;

  // Generalized inverse inf{ r >= 0 : phi(r) > s } for s in [0, +inf].
  // Ordinary inverse when phi is finite and strictly increasing. Closed form
  // for Power and jump families, monotone bisection (rel. tol 1e-12) else.
  double inverse(double s) const;

  // Legendre conjugate value sup_{s>=0} (r*s - phi(s)).
  double conjugate(double r) const;

  // True when the function is 0 up to a jump point and +inf beyond; the
  // Luxemburg norm then collapses to a scaled essential max.
  bool pure_jump(double* jump_at = nullptr) const;

  // Finite and positive on (0, inf), probed on a wide dyadic grid for
  // families without a closed-form answer.
  bool in_cal_y() const;

 private:
  struct Impl {
    YoungFamily family = YoungFamily::Power;
    double p = 1.0;                       // Power
    std::vector<double> tab_r, tab_phi;   // Tabulated
    double tab_slope = 0.0;               // extension slope
    std::shared_ptr<const Impl> parent;   // Conjugate
  };
  std::shared_ptr<const Impl> impl_;
  explicit YoungFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  double value_impl(const Impl& im, double r) const;
};

/*! Result of probing the two-sided inverse product bound
 *  r <= phi^{-1}(r) * conj(phi)^{-1}(r) <= 2r on a dyadic grid. */
struct DualityBracketReport {
  bool pass = false;
  double worst_low = 0.0;   // min over grid of product/r   (needs >= 1)
  double worst_high = 0.0;  // max over grid of product/(2r) (needs <= 1)
  double rel_tol = 1e-8;
  std::vector<std::pair<double, double>> profile;  // (r, product/r)
  std::string witness;
};

DualityBracketReport duality_bracket_check(const YoungFunction& phi,
                                           const DyadicGrid& grid = {},
                                           double rel_tol = 1e-8);

enum class GrowthKind { Delta2, Nabla2, AlmostDecreasing };

/*! Scan certificate for a growth condition. A finite scan cannot prove the
 *  condition for every r, so the verdict always names the grid; `holds`
 *  means the defining inequality was satisfied at every scanned point with
 *  constant `constant`, and a diverging trend across the top scales is
 *  treated as a violation with a witness. */
struct GrowthCertificate {
  GrowthKind kind = GrowthKind::Delta2;
  double eps = 0.0;  // AlmostDecreasing only
  bool holds = false;
  double constant = kInf;   // best C (Delta2/Nabla2) or A (AlmostDecreasing)
  double violation_r = 0.0; // meaningful when !holds
  DyadicGrid grid;
  std::string note;
};

GrowthCertificate check_growth(const YoungFunction& phi, GrowthKind kind,
                               const DyadicGrid& grid = {}, double eps = 0.0);

std::vector<double> default_domination_candidates();

/*! Smallest candidate c with phi(s) <= psi(c*s) at every grid point, i.e.
 *  "psi dominates phi globally"; nullopt when no candidate works. */
std::optional<double> dominates_globally(
    const YoungFunction& phi, const YoungFunction& psi,
    const DyadicGrid& grid = {},
    const std::vector<double>& candidates = default_domination_candidates());

/*! Builds a tabulated Young function from samples of its inverse. The input
 *  is (s_i, inv_i) with inv strictly increasing (flat segments, including a
 *  constant-zero prefix, are rejected: inversion needs strict growth); the
 *  result interpolates Q with Q(inv_i) = s_i and is validated as a Young
 *  function on load. */
YoungFunction young_from_inverse(const std::vector<double>& s,
                                 const std::vector<double>& inv);

/*! Auxiliary integral tables for the sharp-target construction at order
 *  P = n/alpha:
 *    bp(s)        = integral_0^s psi(t) / t^{1+P'} dt,
 *    psi_tilde(s) = integral_0^s r^{P'-1} (bp^{-1}(r^{P'}))^{P'} dr,
 *  with P' = P/(P-1) = n/(n-alpha). `convergent` reports the small-t
 *  integral test for bp (dyadic refinement toward 0); when it fails the
 *  tables are not built. */
struct CianchiAux {
  double alpha = 0.0;
  int dim = 1;
  double P = 0.0;
  double Pprime = 0.0;
  bool convergent = false;

  std::vector<double> t_grid, bp_values;        // cumulative B_P table
  std::vector<double> s_grid, psi_tilde_values; // cumulative Psi~_P table

  double bp(double t) const;          // interpolated (log-log)
  double bp_inverse(double u) const;  // monotone inverse of the table
  YoungFunction psi_tilde_young() const;
  // The target Young function itself, recovered as the conjugate of the
  // psi_tilde table.
  YoungFunction target_young() const;
};

CianchiAux cianchi_construct(const YoungFunction& psi, double alpha, int dim);

}  // namespace orlicz
