#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace orlicz {

namespace {
// Numeric Legendre transform sup_s (r s - phi(s)); defined further down.
double conjugate_value(const YoungFunction& phi, double r);
}  // namespace

std::vector<double> DyadicGrid::values() const {
  if (hi_exp < lo_exp || per_octave < 1)
    throw std::invalid_argument("dyadic grid: bad exponent range");
  std::vector<double> out;
  const int steps = (hi_exp - lo_exp) * per_octave;
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i)
    out.push_back(std::exp2(lo_exp + static_cast<double>(i) / per_octave));
  return out;
}

// ---------------------------------------------------------------------------
// construction

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("power family needs p >= 1");
  auto im = std::make_shared<Impl>();
  im->family = YoungFamily::Power;
  im->p = p;
  return YoungFunction(im);
}

YoungFunction YoungFunction::exp_minus_linear() {
  auto im = std::make_shared<Impl>();
  im->family = YoungFamily::ExpMinusLinear;
  return YoungFunction(im);
}

YoungFunction YoungFunction::l_infinity() {
  auto im = std::make_shared<Impl>();
  im->family = YoungFamily::LInfinity;
  return YoungFunction(im);
}

YoungFunction YoungFunction::l_log_l() {
  auto im = std::make_shared<Impl>();
  im->family = YoungFamily::LLogL;
  return YoungFunction(im);
}

YoungFunction YoungFunction::tabulated(std::vector<double> r, std::vector<double> phi) {
  if (r.size() != phi.size() || r.size() < 2)
    throw std::invalid_argument("tabulated: need >= 2 matching samples");
  if (r[0] != 0.0 || phi[0] != 0.0)
    throw std::invalid_argument("tabulated: first sample must be (0, 0)");
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!std::isfinite(r[i]) || !std::isfinite(phi[i]) || phi[i] < 0.0)
      throw std::invalid_argument("tabulated: samples must be finite and nonnegative");
  double prev_slope = -kInf;
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1]))
      throw std::invalid_argument("tabulated: r samples must increase strictly");
    if (phi[i] < phi[i - 1])
      throw std::invalid_argument("tabulated: phi samples must be nondecreasing");
    const double slope = (phi[i] - phi[i - 1]) / (r[i] - r[i - 1]);
    if (slope < prev_slope - 1e-12 * std::max(1.0, std::abs(prev_slope)))
      throw std::invalid_argument("tabulated: samples are not convex");
    prev_slope = std::max(prev_slope, slope);
  }
  if (!(prev_slope > 0.0))
    throw std::invalid_argument("tabulated: needs positive final slope to grow");
  auto im = std::make_shared<Impl>();
  im->family = YoungFamily::Tabulated;
  im->tab_r = std::move(r);
  im->tab_phi = std::move(phi);
  im->tab_slope = prev_slope;
  return YoungFunction(im);
}

YoungFunction YoungFunction::conjugate_of(const YoungFunction& phi) {
  auto im = std::make_shared<Impl>();
  im->family = YoungFamily::Conjugate;
  im->parent = phi.impl_;
  return YoungFunction(im);
}

double YoungFunction::power_exponent() const {
  if (impl_->family != YoungFamily::Power)
    throw std::logic_error("power_exponent: not a power function");
  return impl_->p;
}

namespace {

std::vector<double> load_table_csv(const std::string& path, std::vector<double>& phi_out) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty table file: " + path);
  auto strip = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  if (strip(line) != "r,phi")
    throw std::invalid_argument("table file must start with header 'r,phi': " + path);
  std::vector<double> r;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed table row: " + line);
    r.push_back(std::stod(line.substr(0, comma)));
    phi_out.push_back(std::stod(line.substr(comma + 1)));
  }
  return r;
}

}  // namespace

YoungFunction YoungFunction::parse(const std::string& spec) {
  if (spec == "explin") return exp_minus_linear();
  if (spec == "linfty") return l_infinity();
  if (spec == "llogl") return l_log_l();
  if (spec.rfind("power:", 0) == 0) {
    const std::string arg = spec.substr(6);
    if (arg.rfind("p=", 0) != 0)
      throw std::invalid_argument("power spec must look like 'power:p=2': " + spec);
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(arg.substr(2), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in spec: " + spec);
    }
    if (used != arg.size() - 2)
      throw std::invalid_argument("bad exponent in spec: " + spec);
    return power(p);
  }
  if (spec.rfind("table:", 0) == 0) {
    std::vector<double> phi;
    std::vector<double> r = load_table_csv(spec.substr(6), phi);
    return tabulated(std::move(r), std::move(phi));
  }
  throw std::invalid_argument("unknown function spec: " + spec);
}

std::string YoungFunction::describe() const {
  switch (impl_->family) {
    case YoungFamily::Power: {
      std::ostringstream os;
      os << "power:p=" << impl_->p;
      return os.str();
    }
    case YoungFamily::ExpMinusLinear:
      return "explin";
    case YoungFamily::LInfinity:
      return "linfty";
    case YoungFamily::LLogL:
      return "llogl";
    case YoungFamily::Tabulated: {
      std::ostringstream os;
      os << "table[" << impl_->tab_r.size() << "]";
      return os.str();
    }
    case YoungFamily::Conjugate:
      return "conj(" + YoungFunction(impl_->parent).describe() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

double tab_value(const std::vector<double>& r, const std::vector<double>& phi,
                 double slope, double x) {
  if (x >= r.back()) return phi.back() + slope * (x - r.back());
  const auto it = std::upper_bound(r.begin(), r.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - r.begin());
  // r[i-1] <= x < r[i]
  const double t = (x - r[i - 1]) / (r[i] - r[i - 1]);
  return phi[i - 1] + t * (phi[i] - phi[i - 1]);
}

}  // namespace

double YoungFunction::value_impl(const Impl& im, double r) const {
  switch (im.family) {
    case YoungFamily::Power:
      return std::pow(r, im.p);
    case YoungFamily::ExpMinusLinear:
      // expm1 keeps the r^2/2 leading term accurate near zero.
      return std::expm1(r) - r;
    case YoungFamily::LInfinity:
      return r <= 1.0 ? 0.0 : kInf;
    case YoungFamily::LLogL:
      return r * std::log1p(r);
    case YoungFamily::Tabulated:
      return tab_value(im.tab_r, im.tab_phi, im.tab_slope, r);
    case YoungFamily::Conjugate: {
      const Impl& par = *im.parent;
      if (par.family == YoungFamily::Power) {
        if (par.p == 1.0) return r <= 1.0 ? 0.0 : kInf;
        const double q = par.p / (par.p - 1.0);
        const double coef = (par.p - 1.0) * std::pow(par.p, -q);
        return coef * std::pow(r, q);
      }
      if (par.family == YoungFamily::LInfinity) return r;
      return conjugate_value(YoungFunction(im.parent), r);
    }
  }
  return 0.0;
}

double YoungFunction::value(double r) const {
  if (r < 0.0 || std::isnan(r)) throw std::domain_error("young function: argument must be >= 0");
  if (r == 0.0) return 0.0;
  return value_impl(*impl_, r);
}

double YoungFunction::conjugate(double r) const {
  return conjugate_value(*this, r);
}

namespace {

double conjugate_numeric(const YoungFunction& phi, double r) {
  if (r == 0.0) return 0.0;
  auto objective = [&](double s) {
    const double v = phi.value(s);
    if (std::isinf(v)) return -kInf;
    return r * s - v;
  };
  // Grow the bracket until the concave objective starts decreasing. The cap
  // sits near the top of double range so that suprema with far-out maximizers
  // (they exist: slowly diverging phi(s)/s) saturate to +inf only where the
  // value itself would overflow anyway.
  double hi = 1.0;
  const double cap = 0x1p980;
  while (hi < cap && objective(hi) > objective(0.5 * hi)) hi *= 2.0;
  if (hi >= cap && objective(hi) > objective(0.5 * hi)) return kInf;
  const double best = golden_max(objective, 0.0, hi);
  return std::max(0.0, best);
}

double conjugate_value(const YoungFunction& phi, double r) {
  if (r < 0.0 || std::isnan(r)) throw std::domain_error("conjugate: argument must be >= 0");
  switch (phi.family()) {
    case YoungFamily::Power: {
      const double p = phi.power_exponent();
      if (p == 1.0) return r <= 1.0 ? 0.0 : kInf;
      const double q = p / (p - 1.0);
      const double coef = (p - 1.0) * std::pow(p, -q);
      return coef * std::pow(r, q);
    }
    case YoungFamily::LInfinity:
      return r;
    default:
      return conjugate_numeric(phi, r);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// generalized inverse

namespace {

double tab_inverse(const std::vector<double>& r, const std::vector<double>& phi,
                   double slope, double s) {
  if (s >= phi.back()) return r.back() + (s - phi.back()) / slope;
  // first index with phi[i] > s; flat runs are skipped, which is exactly the
  // inf{ r : phi(r) > s } convention
  const auto it = std::upper_bound(phi.begin(), phi.end(), s);
  const std::size_t i = static_cast<std::size_t>(it - phi.begin());
  if (i == 0) return 0.0;
  const double seg = phi[i] - phi[i - 1];
  if (seg <= 0.0) return r[i];
  const double t = (s - phi[i - 1]) / seg;
  return r[i - 1] + t * (r[i] - r[i - 1]);
}

}  // namespace

double YoungFunction::inverse(double s) const {
  if (s < 0.0 || std::isnan(s)) throw std::domain_error("inverse: argument must be >= 0");
  if (std::isinf(s)) return kInf;
  switch (impl_->family) {
    case YoungFamily::Power:
      return std::pow(s, 1.0 / impl_->p);
    case YoungFamily::LInfinity:
      return 1.0;
    case YoungFamily::Tabulated:
      return tab_inverse(impl_->tab_r, impl_->tab_phi, impl_->tab_slope, s);
    case YoungFamily::Conjugate: {
      const Impl& par = *impl_->parent;
      if (par.family == YoungFamily::Power) {
        if (par.p == 1.0) return 1.0;  // jump at 1
        const double q = par.p / (par.p - 1.0);
        const double coef = (par.p - 1.0) * std::pow(par.p, -q);
        return std::pow(s / coef, 1.0 / q);
      }
      if (par.family == YoungFamily::LInfinity) return s;
      break;
    }
    default:
      break;
  }
  // monotone bisection on phi(r) > s
  double hi = 1.0;
  int guard = 0;
  while (!(value(hi) > s)) {
    hi *= 2.0;
    if (++guard > 1100 || hi > 1e300) return kInf;
  }
  return bisect_edge([&](double r) { return value(r) > s; }, 0.0, hi, 1e-13);
}

bool YoungFunction::pure_jump(double* jump_at) const {
  if (impl_->family == YoungFamily::LInfinity) {
    if (jump_at) *jump_at = 1.0;
    return true;
  }
  if (impl_->family == YoungFamily::Conjugate &&
      impl_->parent->family == YoungFamily::Power && impl_->parent->p == 1.0) {
    if (jump_at) *jump_at = 1.0;
    return true;
  }
  return false;
}

bool YoungFunction::in_cal_y() const {
  switch (impl_->family) {
    case YoungFamily::Power:
    case YoungFamily::ExpMinusLinear:
    case YoungFamily::LLogL:
      return true;
    case YoungFamily::LInfinity:
      return false;
    case YoungFamily::Tabulated:
      return impl_->tab_phi[1] > 0.0;
    case YoungFamily::Conjugate: {
      // Probe: finite and positive across a wide dyadic range.
      for (int k = -40; k <= 40; k += 2) {
        const double v = value(std::exp2(k));
        if (!(v > 0.0) || std::isinf(v)) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// duality bracket

DualityBracketReport duality_bracket_check(const YoungFunction& phi,
                                           const DyadicGrid& grid, double rel_tol) {
  const YoungFunction conj = YoungFunction::conjugate_of(phi);
  DualityBracketReport rep;
  rep.rel_tol = rel_tol;
  rep.worst_low = kInf;
  rep.worst_high = 0.0;
  for (double r : grid.values()) {
    const double prod = phi.inverse(r) * conj.inverse(r);
    const double lo = prod / r;
    const double hi = prod / (2.0 * r);
    rep.profile.emplace_back(r, lo);
    if (lo < rep.worst_low) rep.worst_low = lo;
    if (hi > rep.worst_high) rep.worst_high = hi;
    if ((lo < 1.0 - rel_tol || hi > 1.0 + rel_tol) && rep.witness.empty()) {
      std::ostringstream os;
      os << "r=" << r << " product/r=" << lo;
      rep.witness = os.str();
    }
  }
  rep.pass = rep.witness.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// growth certificates

namespace {

// A ratio profile "diverges" when it keeps growing across the top scales.
bool diverging_tail(const std::vector<std::pair<double, double>>& profile,
                    double factor = 1.5, int window = 5) {
  const int n = static_cast<int>(profile.size());
  if (n < window) return false;
  for (int i = n - window; i + 1 < n; ++i)
    if (!(profile[i + 1].second > profile[i].second * (1.0 + 1e-9))) return false;
  return profile[n - 1].second >= profile[n - window].second * factor;
}

GrowthCertificate delta2_scan(const YoungFunction& phi, const DyadicGrid& grid) {
  GrowthCertificate cert;
  cert.kind = GrowthKind::Delta2;
  cert.grid = grid;
  std::vector<std::pair<double, double>> ratios;
  bool restricted = false;
  for (double r : grid.values()) {
    const double a = phi.value(r);
    if (a == 0.0 || std::isinf(a)) {
      restricted = true;
      continue;
    }
    const double b = phi.value(2.0 * r);
    if (std::isinf(b)) {
      cert.holds = false;
      cert.violation_r = r;
      cert.note = "phi(2r) is infinite while phi(r) is finite; no finite constant";
      return cert;
    }
    ratios.emplace_back(r, b / a);
  }
  if (ratios.empty()) {
    cert.holds = false;
    cert.note = "phi is zero or infinite on the whole grid";
    return cert;
  }
  if (diverging_tail(ratios)) {
    cert.holds = false;
    cert.violation_r = ratios.back().first;
    cert.note = "ratio phi(2r)/phi(r) grows without settling across the top scales";
    return cert;
  }
  double best = 0.0;
  for (const auto& [r, q] : ratios) best = std::max(best, q);
  cert.holds = true;
  cert.constant = best;
  if (restricted) cert.note = "restricted to the part of the grid where phi is finite and positive";
  return cert;
}

GrowthCertificate nabla2_scan(const YoungFunction& phi, const DyadicGrid& grid) {
  GrowthCertificate cert;
  cert.kind = GrowthKind::Nabla2;
  cert.grid = grid;
  const auto rs = grid.values();
  double last_witness = 0.0;
  bool restricted = false;
  for (int j = 1; j <= 12; ++j) {
    const double c = std::exp2(j);
    bool ok = true;
    for (double r : rs) {
      const double a = phi.value(r);
      if (a == 0.0 || std::isinf(a)) {
        restricted = true;
        continue;
      }
      const double b = phi.value(c * r);
      // need a <= b / (2c)
      if (std::isinf(b)) continue;
      if (a > b / (2.0 * c) * (1.0 + 1e-9)) {
        ok = false;
        last_witness = r;
        break;
      }
    }
    if (ok) {
      cert.holds = true;
      cert.constant = c;
      if (restricted)
        cert.note = "restricted to the part of the grid where phi is finite and positive";
      return cert;
    }
  }
  cert.holds = false;
  cert.violation_r = last_witness;
  cert.note = "no dyadic constant up to 2^12 satisfies the lower doubling bound";
  return cert;
}

GrowthCertificate almost_decreasing_scan(const YoungFunction& phi,
                                         const DyadicGrid& grid, double eps) {
  GrowthCertificate cert;
  cert.kind = GrowthKind::AlmostDecreasing;
  cert.eps = eps;
  cert.grid = grid;
  std::vector<std::pair<double, double>> f;  // t, t^{1+eps}/phi(t)
  bool restricted = false;
  for (double t : grid.values()) {
    const double v = phi.value(t);
    if (v <= 0.0 || std::isinf(v)) {
      restricted = true;
      continue;
    }
    f.emplace_back(t, std::pow(t, 1.0 + eps) / v);
  }
  if (f.empty()) {
    cert.holds = false;
    cert.note = "phi is zero or infinite on the whole grid";
    return cert;
  }
  if (diverging_tail(f)) {
    cert.holds = false;
    cert.violation_r = f.back().first;
    cert.note = "t^{1+eps}/phi(t) grows without settling across the top scales";
    return cert;
  }
  double running_min = kInf, worst = 0.0;
  for (const auto& [t, val] : f) {
    running_min = std::min(running_min, val);
    worst = std::max(worst, val / running_min);
  }
  cert.holds = true;
  cert.constant = worst;
  if (restricted) cert.note = "restricted to the part of the grid where phi is finite and positive";
  return cert;
}

}  // namespace

GrowthCertificate check_growth(const YoungFunction& phi, GrowthKind kind,
                               const DyadicGrid& grid, double eps) {
  switch (kind) {
    case GrowthKind::Delta2:
      return delta2_scan(phi, grid);
    case GrowthKind::Nabla2:
      return nabla2_scan(phi, grid);
    case GrowthKind::AlmostDecreasing:
      return almost_decreasing_scan(phi, grid, eps);
  }
  throw std::logic_error("check_growth: unknown kind");
}

// ---------------------------------------------------------------------------
// global domination

std::vector<double> default_domination_candidates() {
  std::vector<double> c;
  for (int j = 0; j <= 8; ++j) c.push_back(std::exp2(j));
  return c;
}

std::optional<double> dominates_globally(const YoungFunction& phi,
                                         const YoungFunction& psi,
                                         const DyadicGrid& grid,
                                         const std::vector<double>& candidates) {
  const auto ss = grid.values();
  for (double c : candidates) {
    bool ok = true;
    for (double s : ss) {
      const double a = phi.value(s);
      if (a == 0.0) continue;
      const double b = psi.value(c * s);
      if (std::isinf(b)) continue;
      if (std::isinf(a) || a > b * (1.0 + 1e-9)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// tabulated function from inverse samples

YoungFunction young_from_inverse(const std::vector<double>& s,
                                 const std::vector<double>& inv) {
  if (s.size() != inv.size() || s.size() < 2)
    throw std::invalid_argument("young_from_inverse: need >= 2 matching samples");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1]))
      throw std::invalid_argument("young_from_inverse: s grid must increase strictly");
    if (!(inv[i] > inv[i - 1]))
      throw std::invalid_argument(
          "young_from_inverse: inverse samples must increase strictly (flat "
          "segments cannot be inverted)");
  }
  if (inv[0] < 0.0 || s[0] < 0.0)
    throw std::invalid_argument("young_from_inverse: samples must be nonnegative");
  if (inv[0] == 0.0 && s[0] > 0.0)
    throw std::invalid_argument("young_from_inverse: inv(0+) = 0 forces value 0 at 0");
  // Swapping coordinates inverts a piecewise-linear monotone table exactly.
  std::vector<double> r, phi;
  if (inv[0] > 0.0) {
    r.push_back(0.0);
    phi.push_back(0.0);
  }
  r.insert(r.end(), inv.begin(), inv.end());
  phi.insert(phi.end(), s.begin(), s.end());
  return YoungFunction::tabulated(std::move(r), std::move(phi));
}

// ---------------------------------------------------------------------------
// auxiliary construction at order P = n/alpha

namespace {

// integral of g over (0, s] where g is positive with power-like behaviour at
// zero: dyadic slices [s 2^{-j-1}, s 2^{-j}] plus a geometric tail estimate.
// Sets *convergent to false when the slice sums fail to decay.
double integrate_from_zero(const std::function<double(double)>& g, double s,
                           bool* convergent) {
  double acc = 0.0, prev_slice = -1.0, ratio = 0.0;
  bool decayed = false;
  for (int j = 0; j < 200; ++j) {
    const double hi = s * std::exp2(-j);
    const double lo = 0.5 * hi;
    const double slice = adaptive_simpson(g, lo, hi, 1e-11);
    acc += slice;
    if (prev_slice > 0.0 && slice > 0.0) ratio = slice / prev_slice;
    prev_slice = slice;
    if (slice <= 1e-15 * std::max(acc, 1e-300)) {
      decayed = true;
      break;
    }
    if (j > 60 && ratio > 0.98) {
      if (convergent) *convergent = false;
      return kInf;
    }
  }
  if (!decayed && ratio > 0.0 && ratio < 0.95)
    acc += prev_slice * ratio / (1.0 - ratio);
  else if (!decayed && ratio >= 0.95) {
    if (convergent) *convergent = false;
    return kInf;
  }
  if (convergent) *convergent = true;
  return acc;
}

double loglog_interp(const std::vector<double>& xs, const std::vector<double>& ys,
                     double x) {
  const std::size_t n = xs.size();
  std::size_t i;
  if (x <= xs.front())
    i = 1;
  else if (x >= xs.back())
    i = n - 1;
  else
    i = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
  const double lx0 = std::log(xs[i - 1]), lx1 = std::log(xs[i]);
  const double ly0 = std::log(ys[i - 1]), ly1 = std::log(ys[i]);
  const double t = (std::log(x) - lx0) / (lx1 - lx0);
  return std::exp(ly0 + t * (ly1 - ly0));
}

}  // namespace

double CianchiAux::bp(double t) const { return loglog_interp(t_grid, bp_values, t); }

double CianchiAux::bp_inverse(double u) const {
  return loglog_interp(bp_values, t_grid, u);
}

YoungFunction CianchiAux::psi_tilde_young() const {
  if (!convergent) throw std::logic_error("construction did not converge");
  std::vector<double> r{0.0}, phi{0.0};
  r.insert(r.end(), s_grid.begin(), s_grid.end());
  phi.insert(phi.end(), psi_tilde_values.begin(), psi_tilde_values.end());
  return YoungFunction::tabulated(std::move(r), std::move(phi));
}

YoungFunction CianchiAux::target_young() const {
  return YoungFunction::conjugate_of(psi_tilde_young());
}

CianchiAux cianchi_construct(const YoungFunction& psi, double alpha, int dim) {
  if (!(dim >= 1 && dim <= 3)) throw std::invalid_argument("dim must be 1, 2 or 3");
  if (!(alpha > 0.0 && alpha < dim))
    throw std::invalid_argument("construction needs 0 < alpha < dim");
  if (!psi.in_cal_y())
    throw std::invalid_argument(
        "construction needs a function finite and positive on (0, inf)");
  CianchiAux aux;
  aux.alpha = alpha;
  aux.dim = dim;
  aux.P = dim / alpha;
  aux.Pprime = dim / (dim - alpha);
  const double pp = aux.Pprime;

  auto integrand = [&](double t) { return psi.value(t) * std::pow(t, -1.0 - pp); };

  // Small-t integral test on (0, 1].
  bool conv = false;
  integrate_from_zero(integrand, 1.0, &conv);
  aux.convergent = conv;
  if (!conv) return aux;

  // Cumulative B_P on a geometric grid (log-log interpolation between nodes
  // is exact for power-family inputs). The grid is truncated where psi
  // overflows double range (exponential families), which only shrinks the
  // usable inverse range.
  for (int k = -80; k <= 80; ++k) {
    const double t = std::exp2(0.5 * k);
    if (!std::isfinite(psi.value(t))) break;
    aux.t_grid.push_back(t);
  }
  aux.bp_values.resize(aux.t_grid.size());
  aux.bp_values[0] = integrate_from_zero(integrand, aux.t_grid[0], nullptr);
  for (std::size_t i = 1; i < aux.t_grid.size(); ++i)
    aux.bp_values[i] = aux.bp_values[i - 1] +
                       adaptive_simpson(integrand, aux.t_grid[i - 1], aux.t_grid[i], 1e-11);

  const double u_max = aux.bp_values.back();
  auto w = [&](double r) {
    const double u = std::min(std::pow(r, pp), u_max);
    return std::pow(r, pp - 1.0) * std::pow(aux.bp_inverse(u), pp);
  };
  for (int k = -40; k <= 40; ++k) aux.s_grid.push_back(std::exp2(0.5 * k));
  aux.psi_tilde_values.resize(aux.s_grid.size());
  aux.psi_tilde_values[0] = integrate_from_zero(w, aux.s_grid[0], nullptr);
  for (std::size_t i = 1; i < aux.s_grid.size(); ++i)
    aux.psi_tilde_values[i] = aux.psi_tilde_values[i - 1] +
                              adaptive_simpson(w, aux.s_grid[i - 1], aux.s_grid[i], 1e-11);
  return aux;
}

}  // namespace orlicz
