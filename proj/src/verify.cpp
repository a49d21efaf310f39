#include "orlicz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace orlicz {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string cell_name(const Grid& g, std::size_t i) {
  const auto c = g.coords(i);
  std::string s = "(";
  for (int a = 0; a < g.dim; ++a) s += (a ? "," : "") + std::to_string(c[a]);
  return s + ")";
}

std::string grid_desc(const Grid& g) {
  return std::to_string(g.dim) + "d N=" + std::to_string(g.extent) + " h=" + fmt(g.h()) +
         (g.boundary == Boundary::Periodic ? " periodic" : " zero-extend");
}

std::string family_desc(const WindowFamily& fam) {
  std::string s = fam.shape == WindowShape::Cube ? "cube{" : "ball{";
  for (std::size_t i = 0; i < fam.radii.size(); ++i)
    s += (i ? "," : "") + std::to_string(fam.radii[i]);
  return s + "}";
}

std::array<int, 3> mid_cell(const Grid& g) {
  std::array<int, 3> c{0, 0, 0};
  for (int a = 0; a < g.dim; ++a) c[a] = g.extent / 2;
  return c;
}

// records an `lhs <= rhs` comparison; witness text is built only on failure
template <class Where>
void check_le(VerificationReport& rep, double lhs, double rhs, Where&& where) {
  ++rep.checked;
  const double margin = rhs - lhs;
  if (rep.checked == 1 || margin < rep.worst_margin) rep.worst_margin = margin;
  if (!(lhs <= rhs)) {
    rep.pass = false;
    if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back({where(), lhs, rhs});
  }
}

template <class Where>
void check_eq(VerificationReport& rep, double lhs, double rhs, Where&& where) {
  ++rep.checked;
  const double margin = -std::abs(lhs - rhs);
  if (rep.checked == 1 || margin < rep.worst_margin) rep.worst_margin = margin;
  if (lhs != rhs) {
    rep.pass = false;
    if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back({where(), lhs, rhs});
  }
}

struct Trend {
  bool divergent = false;
  double growth = 1.0;  // endpoint value over the mid-sweep value
  bool at_small_end = false;
};

// flags rows whose maximum sits at an end of the scale range and still
// rises by kGrowthLimit over the outer half of the sweep. Measuring
// against the middle row, not the minimum, keeps a profile that merely
// decays at the far end (a bounded sup) from being mistaken for growth;
// interior bumps are not growth trends either way
Trend end_growth(const std::vector<std::pair<double, double>>& rows) {
  Trend t;
  if (rows.size() < 2) return t;
  double vmax = -kInf;
  std::size_t amax = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].second > vmax) {
      vmax = rows[i].second;
      amax = i;
    }
  }
  if (amax != 0 && amax + 1 != rows.size()) return t;
  const std::size_t mid = amax == 0 ? rows.size() / 2 : (rows.size() - 1) / 2;
  const double ref = rows[mid].second;
  t.growth = ref > 0.0 ? vmax / ref : (vmax > 0.0 ? kInf : 1.0);
  if (t.growth >= kGrowthLimit) {
    t.divergent = true;
    t.at_small_end = amax == 0;
  }
  return t;
}

std::vector<int> sorted_radii(const WindowFamily& fam) {
  std::vector<int> ks(fam.radii);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

WindowFamily saturated_family(int k) {
  WindowFamily fam;
  fam.shape = WindowShape::Cube;
  fam.radii.clear();
  for (int i = 0; i <= k; ++i) fam.radii.push_back(i);
  return fam;
}

double signed_window_sum(const SampledFunction& f, const Window& w) {
  double s = 0.0;
  visit_window(f.grid(), w, [&](std::size_t i) { s += f[i]; });
  return s;
}

bool window_interior(const Grid& g, const Window& w, int margin) {
  for (int a = 0; a < g.dim; ++a) {
    if (w.center[a] - w.radius < margin) return false;
    if (w.center[a] + w.radius > g.extent - 1 - margin) return false;
  }
  return true;
}

}  // namespace

std::pair<double, VerificationReport> inverse_condition_scan(const YoungFunction& phi,
                                                             const YoungFunction& psi,
                                                             double exponent,
                                                             const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw std::invalid_argument("inverse scan: empty r grid");
  std::vector<double> rs(r_grid);
  std::sort(rs.begin(), rs.end());
  VerificationReport rep;
  rep.id = "inverse-scan";
  rep.params = {{"phi", phi.describe()},
                {"psi", psi.describe()},
                {"exponent", fmt(exponent)},
                {"r_min", fmt(rs.front())},
                {"r_max", fmt(rs.back())},
                {"points", std::to_string(rs.size())}};
  rep.pass = true;
  double best = 0.0;
  for (double r : rs) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("inverse scan: r grid must be positive and finite");
    const double iq = psi.inverse(r);
    if (iq == 0.0) throw std::invalid_argument("inverse scan: psi inverse vanishes at r=" + fmt(r));
    const double ratio = std::pow(r, -exponent) * phi.inverse(r) / iq;
    if (!std::isfinite(ratio))
      throw std::invalid_argument("inverse scan: non-finite ratio at r=" + fmt(r));
    rep.sweep.push_back({r, ratio});
    best = std::max(best, ratio);
  }
  rep.empirical_constant = best;
  const Trend t = end_growth(rep.sweep);
  rep.worst_margin = kGrowthLimit - t.growth;
  if (t.divergent) {
    rep.pass = false;
    rep.note = std::string("ratio grows toward ") + (t.at_small_end ? "r -> 0" : "r -> inf") +
               " (factor " + fmt(t.growth) + " across the grid)";
  } else {
    rep.note = "ratio bounded across the grid (end growth factor " + fmt(t.growth) + ")";
  }
  return {best, rep};
}

std::pair<double, VerificationReport> empirical_norm_ratio(const OperatorParams& op,
                                                           const YoungFunction& phi,
                                                           const YoungFunction& psi,
                                                           const Corpus& corpus,
                                                           NormTarget target) {
  if (corpus.entries.empty()) throw std::invalid_argument("norm ratio: empty corpus");
  const Grid& g = corpus.entries.front().f.grid();
  VerificationReport rep;
  rep.id = "norm-ratio";
  rep.params = {{"phi", phi.describe()},
                {"psi", psi.describe()},
                {"alpha", fmt(op.alpha)},
                {"family", family_desc(op.windows)},
                {"target", target == NormTarget::Strong ? "strong" : "weak"},
                {"grid", grid_desc(g)},
                {"corpus_seed", std::to_string(corpus.seed)},
                {"entries", std::to_string(corpus.entries.size())}};
  rep.pass = true;
  double sup = 0.0;
  std::string sup_name;
  std::map<double, double> by_scale;  // indicator scale -> max ratio
  for (const CorpusEntry& e : corpus.entries) {
    const NormResult nin = luxemburg_norm(e.f, phi);
    if (nin.status != NormStatus::Converged || !(nin.value > 0.0))
      throw std::invalid_argument("norm ratio: corpus entry '" + e.name +
                                  "' must have a finite nonzero input norm");
    const SampledFunction mf = fractional_maximal(e.f, op);
    const NormResult nout =
        target == NormTarget::Strong ? luxemburg_norm(mf, psi) : weak_norm(mf, psi);
    const double ratio = nout.value / nin.value;
    if (ratio > sup) {
      sup = ratio;
      sup_name = e.name;
    }
    if (e.tag == "indicator") {
      auto [it, fresh] = by_scale.try_emplace(e.scale, ratio);
      if (!fresh) it->second = std::max(it->second, ratio);
    }
  }
  for (const auto& [scale, ratio] : by_scale) rep.sweep.push_back({scale, ratio});
  rep.empirical_constant = sup;
  rep.note = "sup ratio " + fmt(sup) + " at entry '" + sup_name + "'";
  if (rep.sweep.size() >= 4) {
    const Trend t = end_growth(rep.sweep);
    rep.worst_margin = kGrowthLimit - t.growth;
    if (t.divergent) {
      rep.pass = false;
      rep.note += std::string("; indicator ratios grow toward ") +
                  (t.at_small_end ? "small" : "large") + " windows (factor " + fmt(t.growth) +
                  " across " + std::to_string(rep.sweep.size()) + " dyadic sizes)";
    } else {
      rep.note += "; indicator ratios bounded across " + std::to_string(rep.sweep.size()) +
                  " dyadic sizes (end growth factor " + fmt(t.growth) + ")";
    }
  } else {
    rep.note += "; fewer than 4 indicator scales, growth trend not assessed";
  }
  return {sup, rep};
}

VerificationReport pointwise_suite(const SampledFunction& b, const SampledFunction& f,
                                   double alpha, double beta, const WindowFamily& family,
                                   int workers) {
  const Grid& g = b.grid();
  g.validate();
  if (f.grid().dim != g.dim || f.grid().extent != g.extent ||
      f.grid().boundary != g.boundary || f.grid().h() != g.h())
    throw std::invalid_argument("pointwise suite: b and f live on different grids");
  if (!(beta > 0.0) || beta >= 1.0)
    throw std::invalid_argument("pointwise suite: beta must lie in (0, 1)");
  if (!(alpha >= 0.0) || !(alpha + beta < g.dim))
    throw std::invalid_argument("pointwise suite: need 0 <= alpha and alpha + beta < dim");

  const double cgeom = family_geometry_constant(g, family, beta);
  const double snorm = lipschitz_seminorm(b, beta, LipschitzMethod::DirectPairs);
  VerificationReport rep;
  rep.id = "pointwise";
  rep.params = {{"alpha", fmt(alpha)},
                {"beta", fmt(beta)},
                {"grid", grid_desc(g)},
                {"family", family_desc(family)},
                {"geometry_constant", fmt(cgeom)},
                {"b_seminorm", fmt(snorm)}};
  rep.pass = true;

  const OperatorParams pa{alpha, family, workers};
  const auto ks = sorted_radii(family);

  // lower bound vol(B0)^{alpha/n} <= M_alpha(chi_B0) on B0, one window per radius
  for (int k : ks) {
    const Window b0{mid_cell(g), k, family.shape};
    const auto m = fractional_maximal(indicator(g, b0), pa);
    const double ref = window_weight(g, window_cell_count(g, b0), alpha);
    visit_window(g, b0, [&](std::size_t i) {
      check_le(rep, ref, m[i], [&] {
        return "lower-bound k=" + std::to_string(k) + " x=" + cell_name(g, i);
      });
    });
  }

  // commutator maximal dominated by the smoothness bound times M_{alpha+beta}
  const auto mb = commutator_maximal(f, b, pa);
  OperatorParams pab = pa;
  pab.alpha = alpha + beta;
  const auto mab = fractional_maximal(f, pab);
  const double cb = cgeom * snorm;
  double tightest = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double rhs = cb * mab[i];
    check_le(rep, mb[i], rhs,
             [&] { return "smoothness-domination x=" + cell_name(g, i); });
    if (rhs > 0.0) tightest = std::max(tightest, mb[i] / rhs);
  }
  rep.empirical_constant = tightest;

  // oscillation lower bound through the operator's own window expression
  for (int k : ks) {
    const Window b0{mid_cell(g), k, family.shape};
    const double cnt = static_cast<double>(window_cell_count(g, b0));
    const double wt = window_weight(g, static_cast<std::size_t>(cnt), alpha);
    const double sum_b = signed_window_sum(b, b0);
    const auto mchi = commutator_maximal(indicator(g, b0), b, pa);
    visit_window(g, b0, [&](std::size_t i) {
      const double lhs = wt * (std::abs(cnt * b[i] - sum_b) / cnt);
      check_le(rep, lhs, mchi[i], [&] {
        return "oscillation-bound k=" + std::to_string(k) + " x=" + cell_name(g, i);
      });
    });
  }

  // the signed commutator never exceeds the commutator maximal (b >= 0 only).
  // the two operators accumulate window sums through different pipelines
  // (rounded per-cell products behind prefix tables vs direct per-window
  // sums), so the comparison needs a rounding allowance proportional to the
  // magnitudes that feed it; a genuine violation would be orders larger.
  double bmin = 0.0;
  for (double v : b.values()) bmin = std::min(bmin, v);
  if (bmin >= 0.0) {
    const auto comm = maximal_commutator(f, b, pa);
    const auto mf = fractional_maximal(f, pa);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double slack = 1e-10 * (std::abs(b[i]) * mf[i] + mb[i]);
      check_le(rep, std::abs(comm[i]), mb[i] + slack,
               [&] { return "signed-commutator x=" + cell_name(g, i); });
    }
    rep.note = "all four families of comparisons evaluated";
  } else {
    rep.note = "b takes negative values: signed-commutator comparison skipped";
  }
  return rep;
}

VerificationReport identity_suite(const SampledFunction& b, const Window& b0, double alpha,
                                  const WindowFamily& family, int workers) {
  const Grid& g = b.grid();
  g.validate();
  const auto ks = sorted_radii(family);
  if (std::find(ks.begin(), ks.end(), b0.radius) == ks.end())
    throw std::invalid_argument("identity suite: B0's radius must belong to the family");
  VerificationReport rep;
  rep.id = "identity";
  rep.params = {{"alpha", fmt(alpha)},
                {"grid", grid_desc(g)},
                {"family", family_desc(family)},
                {"b0_radius", std::to_string(b0.radius)},
                {"b0_center", cell_name(g, g.flat(b0.center))}};
  rep.pass = true;

  const OperatorParams pa{alpha, family, workers};
  const auto chi = indicator(g, b0);
  const auto mchi = fractional_maximal(chi, pa);
  const double want = window_weight(g, window_cell_count(g, b0), alpha);
  const auto bchi = combine(b, chi, [](double x, double y) { return x * y; });
  const auto mb = fractional_maximal(bchi, pa);
  const auto loc = local_maximal(b, pa, b0);
  double maxdiff = 0.0;
  visit_window(g, b0, [&](std::size_t i) {
    check_eq(rep, mchi[i], want,
             [&] { return "indicator-identity x=" + cell_name(g, i); });
    check_eq(rep, mb[i], loc[i],
             [&] { return "restricted-identity x=" + cell_name(g, i); });
    maxdiff = std::max(maxdiff, std::abs(mchi[i] - want));
    maxdiff = std::max(maxdiff, std::abs(mb[i] - loc[i]));
  });
  rep.empirical_constant = maxdiff;
  rep.note = "window averages use each window's own clipped measure";
  return rep;
}

std::pair<double, VerificationReport> capacity_functional(const SampledFunction& b,
                                                          const YoungFunction& phi,
                                                          const YoungFunction& psi, double alpha,
                                                          double beta, const WindowFamily& family,
                                                          int workers) {
  const Grid& g = b.grid();
  g.validate();
  if (g.boundary != Boundary::ZeroExtend || family.shape != WindowShape::Cube)
    throw std::invalid_argument("capacity: cube windows on zero-extend grids only");
  if (!(beta > 0.0) || beta >= 1.0)
    throw std::invalid_argument("capacity: beta must lie in (0, 1)");
  if (!(alpha >= 0.0) || !(alpha < g.dim))
    throw std::invalid_argument("capacity: alpha must lie in [0, dim)");
  const double n = g.dim;
  const double hv = g.cell_volume();

  VerificationReport rep;
  rep.id = "capacity";
  rep.params = {{"phi", phi.describe()}, {"psi", psi.describe()},  {"alpha", fmt(alpha)},
                {"beta", fmt(beta)},     {"grid", grid_desc(g)},   {"family", family_desc(family)}};
  rep.pass = true;

  const auto ks = sorted_radii(family);
  const int kmax = ks.back();
  double bmin = 0.0;
  for (double v : b.values()) bmin = std::min(bmin, v);

  double sup = 0.0;
  std::string sup_where;
  for (int k : ks) {
    std::vector<double> val(g.size(), 0.0);
    parallel_for(g.size(), workers, [&](std::size_t i) {
      const Window w{g.coords(i), k, WindowShape::Cube};
      const double vol = static_cast<double>(window_cell_count(g, w)) * hv;
      const auto loc = local_maximal(b, {alpha, family, 1}, w);
      const double factor = std::pow(vol, -alpha / n);
      std::vector<double> d(g.size(), 0.0);
      visit_window(g, w, [&](std::size_t j) { d[j] = b[j] - factor * loc[j]; });
      const double nr = luxemburg_norm(SampledFunction(g, std::move(d)), psi, w).value;
      val[i] = std::pow(vol, -beta / n) * psi.inverse(1.0 / vol) * nr;
    });
    double kbest = 0.0;
    std::size_t karg = 0;
    for (std::size_t i = 0; i < val.size(); ++i)
      if (val[i] > kbest) {
        kbest = val[i];
        karg = i;
      }
    rep.sweep.push_back({(2.0 * k + 1.0) * g.h(), kbest});
    if (kbest > sup) {
      sup = kbest;
      sup_where = "k=" + std::to_string(k) + " center " + cell_name(g, karg);
    }

    // commutator form of the same functional, on a safely interior center
    // window with the saturated radius set standing in for all inner balls
    const Window bm{mid_cell(g), k, WindowShape::Cube};
    if (bmin >= 0.0 && window_interior(g, bm, g.dim > 1 ? 2 * kmax : 0)) {
      const auto sat = saturated_family(k);
      const double vol = static_cast<double>(window_cell_count(g, bm)) * hv;
      const auto loc = local_maximal(b, {alpha, sat, workers}, bm);
      const double factor = std::pow(vol, -alpha / n);
      std::vector<double> d(g.size(), 0.0);
      visit_window(g, bm, [&](std::size_t j) { d[j] = b[j] - factor * loc[j]; });
      const double direct = std::pow(vol, -beta / n) * psi.inverse(1.0 / vol) *
                            luxemburg_norm(SampledFunction(g, std::move(d)), psi, bm).value;
      const auto comm = maximal_commutator(indicator(g, bm), b, {alpha, sat, workers});
      const double through = std::pow(vol, -(alpha + beta) / n) * psi.inverse(1.0 / vol) *
                             luxemburg_norm(comm, psi, bm).value;
      check_le(rep, std::abs(direct - through),
               1e-8 * std::max({std::abs(direct), std::abs(through), 1e-30}),
               [&] { return "commutator-form k=" + std::to_string(k); });
    }
  }
  rep.empirical_constant = sup;
  const Trend t = end_growth(rep.sweep);
  if (t.divergent) {
    rep.pass = false;
    rep.note = std::string("functional grows toward ") + (t.at_small_end ? "small" : "large") +
               " windows (factor " + fmt(t.growth) + "); sup " + fmt(sup) + " at " + sup_where;
  } else {
    rep.note = "bounded across " + std::to_string(ks.size()) + " sizes (end growth factor " +
               fmt(t.growth) + "); sup " + fmt(sup) + " at " + sup_where;
  }
  if (bmin < 0.0) rep.note += "; b takes negative values: commutator form not compared";
  return {sup, rep};
}

VerificationReport necessity_chain(const YoungFunction& phi, const YoungFunction& psi,
                                   double alpha, const Grid& g, const WindowFamily& family,
                                   int workers) {
  g.validate();
  VerificationReport rep;
  rep.id = "necessity";
  rep.params = {{"phi", phi.describe()},
                {"psi", psi.describe()},
                {"alpha", fmt(alpha)},
                {"grid", grid_desc(g)},
                {"family", family_desc(family)}};
  const auto ks = sorted_radii(family);
  if (ks.size() < 4) {
    rep.pass = false;
    rep.note = "insufficient scale span: need at least 4 window sizes, got " +
               std::to_string(ks.size());
    return rep;
  }
  rep.pass = true;
  const double hv = g.cell_volume();
  const OperatorParams pa{alpha, family, workers};
  for (int k : ks) {
    const Window b0{mid_cell(g), k, family.shape};
    const auto m = fractional_maximal(indicator(g, b0), pa);
    const double cnt = static_cast<double>(window_cell_count(g, b0));
    const double vol = cnt * hv;
    const double ref = window_weight(g, static_cast<std::size_t>(cnt), alpha);
    visit_window(g, b0, [&](std::size_t i) {
      check_le(rep, ref, m[i], [&] {
        return "link1 lower-bound k=" + std::to_string(k) + " x=" + cell_name(g, i);
      });
    });
    const double closed = 1.0 / psi.inverse(1.0 / vol);
    const double wn = weak_norm(indicator(g, b0), psi, b0).value;
    check_le(rep, std::abs(wn - closed), 1e-8 * closed,
             [&] { return "link2 indicator-norm k=" + std::to_string(k); });
    const double wm = weak_norm(m, psi, b0).value;
    check_le(rep, ref * closed * (1.0 - 1e-9), wm,
             [&] { return "link3 composed-bound k=" + std::to_string(k); });
    const double c_k = ref * phi.inverse(1.0 / vol) / psi.inverse(1.0 / vol);
    rep.sweep.push_back({std::pow(vol, 1.0 / g.dim), c_k});
  }
  double cmax = 0.0;
  for (const auto& row : rep.sweep) cmax = std::max(cmax, row.second);
  rep.empirical_constant = cmax;
  const Trend t = end_growth(rep.sweep);
  if (t.divergent) {
    rep.pass = false;
    rep.note = std::string("chain constant drifts toward ") +
               (t.at_small_end ? "small" : "large") + " windows (factor " + fmt(t.growth) +
               " across " + std::to_string(ks.size()) + " sizes)";
  } else {
    rep.note = "chain constant uniform across " + std::to_string(ks.size()) +
               " sizes (end growth factor " + fmt(t.growth) + ")";
  }
  return rep;
}

VerificationReport mean_oscillation_bound(const SampledFunction& b, const Window& b0,
                                          double alpha, double beta, const YoungFunction& psi,
                                          int workers) {
  const Grid& g = b.grid();
  g.validate();
  if (g.boundary != Boundary::ZeroExtend || b0.shape != WindowShape::Cube)
    throw std::invalid_argument("mean oscillation: cube windows on zero-extend grids only");
  if (!(beta > 0.0) || beta >= 1.0)
    throw std::invalid_argument("mean oscillation: beta must lie in (0, 1)");
  if (!(alpha >= 0.0) || !(alpha < g.dim))
    throw std::invalid_argument("mean oscillation: alpha must lie in [0, dim)");
  const double n = g.dim;
  const double hv = g.cell_volume();

  VerificationReport rep;
  rep.id = "mean-oscillation";
  rep.params = {{"psi", psi.describe()},
                {"alpha", fmt(alpha)},
                {"beta", fmt(beta)},
                {"grid", grid_desc(g)},
                {"b0_radius", std::to_string(b0.radius)},
                {"b0_center", cell_name(g, g.flat(b0.center))}};
  rep.pass = true;

  const double cnt = static_cast<double>(window_cell_count(g, b0));
  const double vol = cnt * hv;
  const auto loc = local_maximal(b, {alpha, saturated_family(b0.radius), workers}, b0);
  const double factor = std::pow(vol, -alpha / n);
  const double mean = signed_window_sum(b, b0) / cnt;
  double s_osc = 0.0, s_dev = 0.0;
  std::vector<double> d(g.size(), 0.0);
  visit_window(g, b0, [&](std::size_t j) {
    s_osc += std::abs(b[j] - mean);
    d[j] = b[j] - factor * loc[j];
    s_dev += std::abs(d[j]);
  });
  check_le(rep, s_osc, 2.0 * s_dev, [&] { return std::string("averaged-deviation"); });

  const double nr = luxemburg_norm(SampledFunction(g, std::move(d)), psi, b0).value;
  const double lhs = s_osc * hv / std::pow(vol, 1.0 + beta / n);
  const double rhs = 4.0 * std::pow(vol, -beta / n) * psi.inverse(1.0 / vol) * nr;
  check_le(rep, lhs, rhs, [&] { return std::string("gauge-form"); });

  rep.empirical_constant = s_dev > 0.0 ? s_osc / (2.0 * s_dev) : 0.0;
  rep.sweep.push_back({(2.0 * b0.radius + 1.0) * g.h(), lhs});
  rep.note = "oscillation " + fmt(lhs) + " against gauge form " + fmt(rhs);
  return rep;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& kv : r.params) p[kv.first] = kv.second;
  j["params"] = p;
  j["pass"] = r.pass;
  j["worst_margin"] = r.worst_margin;
  j["empirical_constant"] = r.empirical_constant;
  j["checked"] = r.checked;
  j["note"] = r.note;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json o;
    o["where"] = w.where;
    o["lhs"] = w.lhs;
    o["rhs"] = w.rhs;
    ws.push_back(o);
  }
  j["witnesses"] = ws;
  nlohmann::ordered_json sw = nlohmann::ordered_json::array();
  for (const auto& row : r.sweep) sw.push_back({row.first, row.second});
  j["sweep"] = sw;
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& val) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%-20s", key.c_str());
    out += std::string(buf) + val + "\n";
  };
  line("id", r.id);
  line("verdict", r.pass ? "pass" : "FAIL");
  line("checked", std::to_string(r.checked));
  line("worst margin", fmt(r.worst_margin));
  line("empirical constant", fmt(r.empirical_constant));
  line("note", r.note);
  for (const auto& kv : r.params) line("  " + kv.first, kv.second);
  if (!r.sweep.empty()) {
    out += "sweep (scale, value):\n";
    for (const auto& row : r.sweep) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "  %-14.8g %.12g\n", row.first, row.second);
      out += buf;
    }
  }
  if (!r.witnesses.empty()) {
    out += "witnesses (lhs vs rhs):\n";
    for (const auto& w : r.witnesses) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "  %-28s lhs=%-18.12g rhs=%.12g\n", w.where.c_str(), w.lhs,
                    w.rhs);
      out += buf;
    }
  }
  return out;
}

}  // namespace orlicz
