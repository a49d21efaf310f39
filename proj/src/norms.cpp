#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

double distribution(const SampledFunction& f, double t, const Window* region) {
  if (!(t >= 0.0)) throw std::invalid_argument("distribution: threshold must be >= 0");
  std::size_t count = 0;
  if (region == nullptr) {
    for (double v : f.values())
      if (std::abs(v) > t) ++count;
  } else {
    visit_window(f.grid(), *region, [&](std::size_t i) {
      if (std::abs(f[i]) > t) ++count;
    });
  }
  return static_cast<double>(count) * f.grid().cell_volume();
}

double modular(const SampledFunction& f, const YoungFunction& phi, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("modular: lambda must be positive");
  const auto& v = f.values();
  const double s =
      block_sum(v.size(), [&](std::size_t i) { return phi.value(std::abs(v[i]) / lambda); });
  return s * f.grid().cell_volume();
}

double weak_modular(const SampledFunction& f, const YoungFunction& phi, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("weak_modular: lambda must be positive");
  std::vector<double> mags;
  mags.reserve(f.values().size());
  for (double v : f.values())
    if (v != 0.0) mags.push_back(std::abs(v));
  if (mags.empty()) return 0.0;
  std::sort(mags.begin(), mags.end());
  const double hv = f.grid().cell_volume();
  double best = 0.0;
  std::size_t count_ge = 0;
  for (std::size_t i = mags.size(); i-- > 0;) {
    ++count_ge;
    if (i > 0 && mags[i - 1] == mags[i]) continue;  // group equal magnitudes
    const double cand = phi.value(mags[i] / lambda) * (static_cast<double>(count_ge) * hv);
    if (cand > best) best = cand;
  }
  return best;
}

double weak_sup(const SampledFunction& f, const YoungFunction& phi) {
  return weak_modular(f, phi, 1.0);
}

namespace {

template <class Modular>
NormResult gauge_by_bisection(double fmax, const YoungFunction& phi, Modular&& mod,
                              double rel_tol) {
  NormResult res;
  if (fmax == 0.0) {
    res.status = NormStatus::ZeroFunction;
    return res;
  }
  double jump = 0.0;
  if (phi.pure_jump(&jump)) {
    res.value = res.lo = res.hi = fmax / jump;
    return res;
  }
  double guess = fmax / phi.inverse(1.0);
  if (!(guess > 1e-150)) guess = 1e-150;
  if (!(guess < 1e150)) guess = 1e150;
  double lo = guess, hi = guess;
  int guard = 0;
  if (mod(guess) <= 1.0) {
    do {
      lo *= 0.5;
      if (++guard > 2000) break;
    } while (mod(lo) <= 1.0);
  } else {
    do {
      hi *= 2.0;
      if (++guard > 2000) break;
    } while (mod(hi) > 1.0);
    if (mod(hi) > 1.0) {
      res.value = res.lo = res.hi = kInf;
      res.status = NormStatus::InfiniteNorm;
      return res;
    }
  }
  for (int i = 0; i < 300 && hi - lo > rel_tol * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (mod(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  res.lo = lo;
  res.hi = hi;
  res.value = 0.5 * (lo + hi);
  return res;
}

}  // namespace

NormResult luxemburg_norm(const SampledFunction& f, const YoungFunction& phi,
                          double rel_tol) {
  return gauge_by_bisection(
      f.max_abs(), phi, [&](double lambda) { return modular(f, phi, lambda); }, rel_tol);
}

NormResult weak_norm(const SampledFunction& f, const YoungFunction& phi, double rel_tol) {
  return gauge_by_bisection(
      f.max_abs(), phi, [&](double lambda) { return weak_modular(f, phi, lambda); },
      rel_tol);
}

NormResult luxemburg_norm(const SampledFunction& f, const YoungFunction& phi,
                          const Window& region, double rel_tol) {
  return luxemburg_norm(mask_window(f, region), phi, rel_tol);
}

NormResult weak_norm(const SampledFunction& f, const YoungFunction& phi,
                     const Window& region, double rel_tol) {
  return weak_norm(mask_window(f, region), phi, rel_tol);
}

YoungFunction practical_conjugate(const YoungFunction& phi) {
  if (phi.family() == YoungFamily::Power || phi.family() == YoungFamily::LInfinity)
    return YoungFunction::conjugate_of(phi);
  const auto conj = YoungFunction::conjugate_of(phi);
  const int per_octave = 32;
  std::vector<double> r{0.0}, val{0.0};
  // log-spaced through the small-argument regime, where conjugates grow
  // polynomially and relative chord error scales with the octave fraction
  for (int i = -30 * per_octave; i <= 2 * per_octave; ++i) {
    const double x = std::pow(2.0, static_cast<double>(i) / per_octave);
    const double y = conj.value(x);
    if (!std::isfinite(y)) return conj;  // jump in range: keep exact sups
    r.push_back(x);
    val.push_back(y);
  }
  // beyond that, conjugates of slowly growing families turn exponential in r
  // and log spacing goes blurry; advance so each step raises ln(value) by
  // about 0.06, which pins relative chord error near (0.06)^2 / 8 throughout
  while (r.back() < 0x1p30) {
    const std::size_t n = r.size();
    const double dx_log = 0.02 * r.back();
    double dx = dx_log;
    if (val[n - 1] > 0.0 && val[n - 2] > 0.0 && val[n - 1] > val[n - 2]) {
      const double slope_ln =
          (std::log(val[n - 1]) - std::log(val[n - 2])) / (r[n - 1] - r[n - 2]);
      if (slope_ln * dx > 0.06) dx = 0.06 / slope_ln;
    }
    const double x = r.back() + dx;
    const double y = conj.value(x);
    if (!std::isfinite(y) || y > 1e280) {
      // the table stops where values outgrow double range (slope there is
      // astronomically steep, so the linear extension behaves like the
      // saturation it replaces) unless moderate values jumped to +inf
      if (std::isfinite(y) || val.back() > 1e250) break;
      return conj;
    }
    r.push_back(x);
    val.push_back(y);
  }
  // lift samples onto nondecreasing chord slopes; quadrature noise in the
  // sampled suprema may otherwise break convexity validation. Lifting only
  // raises the table, which widens bounds computed from it.
  double prev = 0.0;
  for (std::size_t i = 1; i < r.size(); ++i) {
    const double dr = r[i] - r[i - 1];
    const double s = (val[i] - val[i - 1]) / dr;
    if (s < prev)
      val[i] = val[i - 1] + prev * dr;
    else
      prev = s;
  }
  return YoungFunction::tabulated(std::move(r), std::move(val));
}

UnitBallReport unit_ball_check(const SampledFunction& f, const YoungFunction& phi,
                               double rel_tol) {
  if (f.max_abs() == 0.0)
    throw std::invalid_argument("unit ball check: f vanishes identically");
  UnitBallReport rep;
  rep.norm = luxemburg_norm(f, phi).value;
  rep.weak = weak_norm(f, phi).value;
  rep.strong_modular = modular(f, phi, rep.norm);
  rep.weak_modular_value = weak_modular(f, phi, rep.weak);
  rep.pass = rep.strong_modular <= 1.0 + rel_tol && rep.weak_modular_value <= 1.0 + rel_tol;
  return rep;
}

double indicator_norm_formula(const YoungFunction& phi, double measure) {
  if (!(measure > 0.0)) throw std::invalid_argument("indicator norm: measure must be positive");
  return 1.0 / phi.inverse(1.0 / measure);
}

HolderReport holder_check(const SampledFunction& f, const SampledFunction& g,
                          const YoungFunction& phi, double rel_tol) {
  return holder_check(f, g, phi, practical_conjugate(phi), rel_tol);
}

HolderReport holder_check(const SampledFunction& f, const SampledFunction& g,
                          const YoungFunction& phi, const YoungFunction& conj_phi,
                          double rel_tol) {
  if (f.grid().size() != g.grid().size())
    throw std::invalid_argument("holder_check: mismatched grids");
  HolderReport rep;
  const auto& fv = f.values();
  const auto& gv = g.values();
  rep.integral = block_sum(fv.size(), [&](std::size_t i) {
                   return std::abs(fv[i] * gv[i]);
                 }) *
                 f.grid().cell_volume();
  rep.bound = 2.0 * luxemburg_norm(f, phi).value * luxemburg_norm(g, conj_phi).value;
  rep.ratio = rep.bound > 0.0 ? rep.integral / rep.bound : 0.0;
  rep.pass = rep.integral <= rep.bound * (1.0 + rel_tol) ||
             (rep.bound == 0.0 && rep.integral == 0.0);
  return rep;
}

MeanBoundReport mean_bound_check(const SampledFunction& f, const YoungFunction& phi,
                                 const Window& window, double rel_tol) {
  MeanBoundReport rep;
  const double vol = window_volume(f.grid(), window);
  if (!(vol > 0.0)) throw std::invalid_argument("mean bound: empty window");
  rep.mean = f.abs_window_sum(window) * f.grid().cell_volume() / vol;
  rep.bound = 2.0 * luxemburg_norm(f, phi).value * phi.inverse(1.0 / vol);
  rep.ratio = rep.bound > 0.0 ? rep.mean / rep.bound : 0.0;
  rep.pass =
      rep.mean <= rep.bound * (1.0 + rel_tol) || (rep.bound == 0.0 && rep.mean == 0.0);
  return rep;
}

}  // namespace orlicz
