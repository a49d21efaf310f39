/* Acceptance gate: ten standalone criteria, one pass/fail line each.
 * Exit status 0 only when every criterion holds within its stated
 * tolerance and runtime budget. */

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/verify.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;
namespace fs = std::filesystem;

namespace {

struct Tally {
  int failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (first.empty()) first = what;
  }
};

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/* ---------- criterion 1: inverse product bracket ---------- */

bool crit_bracket(Tally& t) {
  std::vector<std::pair<std::string, YoungFunction>> families;
  families.push_back({"power", YoungFunction::power(2.0)});
  families.push_back({"explin", YoungFunction::exp_minus_linear()});
  families.push_back({"linfty", YoungFunction::l_infinity()});
  families.push_back({"llogl", YoungFunction::l_log_l()});
  {
    std::vector<double> rs{0.0}, vals{0.0};
    for (int k = -12; k <= 12; ++k) {
      const double r = std::pow(2.0, k);
      rs.push_back(r);
      vals.push_back(r * r);
    }
    families.push_back({"table", YoungFunction::tabulated(rs, vals)});
  }
  for (const auto& [name, phi] : families) {
    const auto conj = YoungFunction::conjugate_of(phi);
    for (int k = -20; k <= 20; ++k) {
      const double r = std::pow(2.0, k);
      const double prod = phi.inverse(r) * conj.inverse(r);
      t.expect(prod >= r * (1.0 - 1e-8),
               name + ": product " + num(prod) + " below r=" + num(r));
      t.expect(prod <= 2.0 * r * (1.0 + 1e-8),
               name + ": product " + num(prod) + " above 2r=" + num(2.0 * r));
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 2: indicator norms in closed form ---------- */

bool crit_indicator_norms(Tally& t) {
  const Grid g{1, 512, 0.0, Boundary::ZeroExtend};
  const std::array<int, 10> radii{0, 1, 2, 3, 4, 8, 16, 32, 64, 128};
  std::vector<std::pair<std::string, YoungFunction>> families;
  families.push_back({"power", YoungFunction::power(2.0)});
  families.push_back({"llogl", YoungFunction::l_log_l()});
  families.push_back({"explin", YoungFunction::exp_minus_linear()});
  families.push_back({"linfty", YoungFunction::l_infinity()});
  for (int k : radii) {
    const Window w{{256, 0, 0}, k, WindowShape::Cube};
    const auto chi = indicator(g, w);
    const double vol = window_volume(g, w);
    for (const auto& [name, phi] : families) {
      const double closed = indicator_norm_formula(phi, vol);
      const double strong = luxemburg_norm(chi, phi).value;
      const double weak = weak_norm(chi, phi).value;
      t.expect(rel_close(strong, closed, 1e-8), name + " k=" + std::to_string(k) +
                                                    ": strong " + num(strong) + " vs " +
                                                    num(closed));
      t.expect(rel_close(weak, closed, 1e-8), name + " k=" + std::to_string(k) + ": weak " +
                                                  num(weak) + " vs " + num(closed));
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 3: product integrals vs dual gauges ---------- */

bool crit_holder(Tally& t) {
  const Grid g{2, 64, 0.0, Boundary::ZeroExtend};
  std::vector<std::pair<std::string, YoungFunction>> families;
  families.push_back({"power", YoungFunction::power(2.0)});
  families.push_back({"llogl", YoungFunction::l_log_l()});
  for (const auto& [name, phi] : families) {
    const auto conj = practical_conjugate(phi);
    for (int pair = 0; pair < 100; ++pair) {
      const auto f = synth_random_smooth(g, 1000 + 2 * pair);
      const auto gg = synth_random_smooth(g, 1001 + 2 * pair);
      const auto rep = holder_check(f, gg, phi, conj);
      t.expect(rep.pass && rep.ratio <= 1.0 + 1e-8,
               name + " pair " + std::to_string(pair) + ": ratio " + num(rep.ratio));
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 4: operators vs double-loop oracles ---------- */

// independent window walk: same canonical lexicographic offset order the
// library commits to, membership and wrapping by plain index arithmetic
template <class Fn>
void oracle_walk(const Grid& g, const std::array<int, 3>& center, int k, Fn&& fn) {
  std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int a = 0; a < g.dim; ++a) {
    lo[a] = center[a] - k;
    hi[a] = center[a] + k;
    if (g.boundary == Boundary::ZeroExtend) {
      lo[a] = std::max(lo[a], 0);
      hi[a] = std::min(hi[a], g.extent - 1);
    }
  }
  for (int z = lo[2]; z <= hi[2]; ++z)
    for (int y = lo[1]; y <= hi[1]; ++y)
      for (int x = lo[0]; x <= hi[0]; ++x) {
        std::array<int, 3> c{x, y, z};
        std::size_t flat = 0;
        for (int a = g.dim - 1; a >= 0; --a) {
          int i = c[a];
          if (g.boundary == Boundary::Periodic) i = ((i % g.extent) + g.extent) % g.extent;
          flat = flat * g.extent + static_cast<std::size_t>(i);
        }
        fn(flat);
      }
}

std::vector<double> oracle_maximal(const Grid& g, const std::vector<double>& f, double alpha,
                                   const std::vector<int>& radii) {
  const double hv = g.cell_volume();
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double best = 0.0;
    for (int k : radii)
      oracle_walk(g, g.coords(x), k, [&](std::size_t c) {
        double s = 0.0;
        std::size_t cnt = 0;
        oracle_walk(g, g.coords(c), k, [&](std::size_t y) {
          s += std::abs(f[y]);
          ++cnt;
        });
        const double val =
            std::pow(cnt * hv, alpha / g.dim) * (s / static_cast<double>(cnt));
        if (val > best) best = val;
      });
    out[x] = best;
  }
  return out;
}

std::vector<double> oracle_commutator(const Grid& g, const std::vector<double>& f,
                                      const std::vector<double>& b, double alpha,
                                      const std::vector<int>& radii) {
  const double hv = g.cell_volume();
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    double best = 0.0;
    for (int k : radii)
      oracle_walk(g, g.coords(x), k, [&](std::size_t c) {
        double s = 0.0;
        std::size_t cnt = 0;
        oracle_walk(g, g.coords(c), k, [&](std::size_t y) {
          s += std::abs((b[x] - b[y]) * f[y]);
          ++cnt;
        });
        const double val =
            std::pow(cnt * hv, alpha / g.dim) * (s / static_cast<double>(cnt));
        if (val > best) best = val;
      });
    out[x] = best;
  }
  return out;
}

std::vector<double> oracle_local(const Grid& g, const std::vector<double>& f, double alpha,
                                 const std::vector<int>& radii, const std::array<int, 3>& rc,
                                 int rk) {
  const double hv = g.cell_volume();
  std::vector<double> out(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto cx = g.coords(x);
    bool inside = true;
    for (int a = 0; a < g.dim; ++a)
      if (std::abs(cx[a] - rc[a]) > rk) inside = false;
    if (!inside) continue;
    double best = 0.0;
    for (int k : radii)
      oracle_walk(g, cx, k, [&](std::size_t c) {
        const auto cc = g.coords(c);
        for (int a = 0; a < g.dim; ++a) {
          if (std::max(cc[a] - k, 0) < std::max(rc[a] - rk, 0)) return;
          if (std::min(cc[a] + k, g.extent - 1) > std::min(rc[a] + rk, g.extent - 1)) return;
        }
        double s = 0.0;
        std::size_t cnt = 0;
        oracle_walk(g, cc, k, [&](std::size_t y) {
          s += std::abs(f[y]);
          ++cnt;
        });
        const double val =
            std::pow(cnt * hv, alpha / g.dim) * (s / static_cast<double>(cnt));
        if (val > best) best = val;
      });
    out[x] = best;
  }
  return out;
}

bool crit_oracles(Tally& t) {
  // inputs on the 2^-13 lattice: pair products then live on 2^-26 and every
  // window sum in play fits 53 bits exactly, so the prefix-table pipeline and
  // the oracle's direct accumulation agree to the last bit and the comparison
  // tests indexing, weights and sup logic with no summation-order caveat
  auto snap13 = [](const SampledFunction& s) {
    return transform(s, [](double v) { return std::nearbyint(v * 8192.0) / 8192.0; });
  };
  const std::array<double, 4> alphas{0.0, 0.25, 0.5, 0.75};
  for (int cs = 0; cs < 20; ++cs) {
    const int dim = cs < 10 ? 1 : 2;
    const Boundary bc = cs % 2 == 0 ? Boundary::ZeroExtend : Boundary::Periodic;
    const Grid g{dim, 16, 0.0, bc};
    const auto f = snap13(synth_random_smooth(g, 2000 + 3 * cs));
    const auto b = snap13(synth_random_smooth(g, 2001 + 3 * cs));
    const double alpha = alphas[cs % 4];
    const OperatorParams p{alpha, {WindowShape::Cube, {0, 1, 2, 3}}, 1};
    const std::string tag = "case " + std::to_string(cs);

    const auto m = fractional_maximal(f, p);
    const auto om = oracle_maximal(g, f.values(), alpha, p.windows.radii);
    for (std::size_t i = 0; i < g.size(); ++i)
      t.expect(m[i] == om[i], tag + ": maximal cell " + std::to_string(i));

    const auto mb = commutator_maximal(f, b, p);
    const auto omb = oracle_commutator(g, f.values(), b.values(), alpha, p.windows.radii);
    for (std::size_t i = 0; i < g.size(); ++i)
      t.expect(mb[i] == omb[i], tag + ": commutator cell " + std::to_string(i));

    const auto nl = maximal_commutator(f, b, p);
    std::vector<double> bf(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) bf[i] = b[i] * f[i];
    const auto obf = oracle_maximal(g, bf, alpha, p.windows.radii);
    for (std::size_t i = 0; i < g.size(); ++i)
      t.expect(nl[i] == b[i] * om[i] - obf[i],
               tag + ": signed commutator cell " + std::to_string(i));

    if (bc == Boundary::ZeroExtend) {
      const std::array<int, 3> rc = dim == 1 ? std::array<int, 3>{8, 0, 0}
                                             : std::array<int, 3>{8, 8, 0};
      const Window b0{rc, 5, WindowShape::Cube};
      const auto loc = local_maximal(f, p, b0);
      const auto oloc = oracle_local(g, f.values(), alpha, p.windows.radii, rc, 5);
      for (std::size_t i = 0; i < g.size(); ++i)
        t.expect(loc[i] == oloc[i], tag + ": local cell " + std::to_string(i));
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 5: pointwise suite, zero violations ---------- */

bool crit_pointwise(Tally& t) {
  struct Case {
    std::string name;
    SampledFunction b;
    SampledFunction f;
    double alpha;
    double beta;
    WindowFamily fam;
  };
  std::vector<Case> cases;

  const Grid g1{1, 64, 0.0, Boundary::ZeroExtend};
  const WindowFamily fam1{WindowShape::Cube, {1, 2, 4}};
  auto cone1 = [&](std::vector<Cone> cs, double beta) {
    return quantized(synth_lipschitz(beta, cs, g1).first);
  };
  cases.push_back({"1d cone/indicator", cone1({{{16, 0, 0}, 1.0}}, 0.5),
                   indicator(g1, {{32, 0, 0}, 4, WindowShape::Cube}), 0.25, 0.5, fam1});
  cases.push_back({"1d cone/spike", cone1({{{16, 0, 0}, 1.0}}, 0.5),
                   quantized(synth_spike(g1, {48, 0, 0}, 0.25)), 0.0, 0.5, fam1});
  cases.push_back({"1d two cones/smooth", cone1({{{16, 0, 0}, 1.0}, {{40, 0, 0}, 0.75}}, 0.5),
                   synth_random_smooth(g1, 7), 0.0, 0.5, fam1});
  cases.push_back({"1d constant/smooth",
                   SampledFunction(g1, std::vector<double>(g1.size(), 0.8125)),
                   synth_random_smooth(g1, 9), 0.5, 0.25, fam1});
  cases.push_back({"1d smooth/indicator", synth_random_smooth(g1, 11),
                   indicator(g1, {{20, 0, 0}, 2, WindowShape::Cube}), 0.25, 0.5, fam1});
  cases.push_back({"1d negative cone/spike", cone1({{{24, 0, 0}, -1.0}}, 0.6),
                   quantized(synth_spike(g1, {52, 0, 0}, 0.3)), 0.3, 0.6, fam1});

  const Grid g2{2, 32, 0.0, Boundary::ZeroExtend};
  const WindowFamily fam2{WindowShape::Cube, {1, 2}};
  auto cone2 = [&](std::vector<Cone> cs, double beta) {
    return quantized(synth_lipschitz(beta, cs, g2).first);
  };
  cases.push_back({"2d cone/smooth", cone2({{{8, 8, 0}, 1.0}}, 0.5),
                   synth_random_smooth(g2, 13), 0.5, 0.5, fam2});
  cases.push_back({"2d cone pair/indicator",
                   cone2({{{8, 8, 0}, 1.0}, {{24, 24, 0}, 0.5}}, 0.5),
                   indicator(g2, {{16, 16, 0}, 4, WindowShape::Cube}), 1.0, 0.5, fam2});
  cases.push_back({"2d smooth/spike", synth_random_smooth(g2, 15),
                   quantized(synth_spike(g2, {24, 8, 0}, 0.5)), 0.25, 0.25, fam2});
  cases.push_back({"2d constant/indicator",
                   SampledFunction(g2, std::vector<double>(g2.size(), 1.5)),
                   indicator(g2, {{16, 16, 0}, 8, WindowShape::Cube}), 0.75, 0.75, fam2});

  for (const auto& c : cases) {
    const auto rep = pointwise_suite(c.b, c.f, c.alpha, c.beta, c.fam);
    t.expect(rep.pass && rep.witnesses.empty(),
             c.name + ": " + std::to_string(rep.witnesses.size()) + " violation(s), margin " +
                 num(rep.worst_margin));
  }
  return t.failures == 0;
}

/* ---------- criterion 6: restriction identities, exact ---------- */

bool crit_identity(Tally& t) {
  struct Setup {
    Grid g;
    std::array<int, 3> center;
    std::vector<int> radii;
    std::uint64_t seed;
  };
  const std::vector<Setup> setups = {
      {{1, 512, 0.0, Boundary::ZeroExtend}, {256, 0, 0}, {4, 8, 16, 32, 64, 128}, 21},
      {{2, 32, 0.0, Boundary::ZeroExtend}, {16, 16, 0}, {4, 8}, 22},
  };
  for (const auto& s : setups) {
    const auto b = synth_random_smooth(s.g, s.seed);
    const std::array<double, 3> alphas{0.0, s.g.dim / 4.0, s.g.dim / 2.0};
    for (int k : s.radii) {
      WindowFamily fam;
      fam.shape = WindowShape::Cube;
      for (int j = 0; j <= k; ++j) fam.radii.push_back(j);
      const Window b0{s.center, k, WindowShape::Cube};
      for (double alpha : alphas) {
        const auto rep = identity_suite(b, b0, alpha, fam);
        t.expect(rep.pass && rep.empirical_constant == 0.0,
                 std::to_string(s.g.dim) + "d k=" + std::to_string(k) +
                     " alpha=" + num(alpha) + ": deviation " + num(rep.empirical_constant));
      }
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 7: power-family scans ---------- */

bool crit_scans(Tally& t) {
  std::vector<double> rs;
  for (int k = -20; k <= 20; ++k) rs.push_back(std::pow(2.0, k));
  const std::array<std::array<double, 3>, 3> triples{{{2, 4, 0.25}, {1, 2, 0.5}, {3, 6, 1.0 / 6.0}}};
  for (const auto& tr : triples) {
    const auto phi = YoungFunction::power(tr[0]);
    const auto psi = YoungFunction::power(tr[1]);
    const auto [c, rep] = inverse_condition_scan(phi, psi, tr[2], rs);
    const std::string tag = "(" + num(tr[0]) + "," + num(tr[1]) + ")";
    t.expect(rep.pass, tag + " matched scan flagged: " + rep.note);
    t.expect(std::abs(c - 1.0) <= 1e-12, tag + " constant " + num(c));
    double mean = 0.0;
    for (const auto& row : rep.sweep) mean += row.second;
    mean /= rep.sweep.size();
    double var = 0.0;
    for (const auto& row : rep.sweep) var += (row.second - mean) * (row.second - mean);
    var /= rep.sweep.size();
    t.expect(var <= 1e-24, tag + " grid variance " + num(var));

    for (double sign : {+1.0, -1.0}) {
      const double q_pert = 1.0 / (1.0 / tr[1] + sign * 0.05);
      const auto [cp, repp] =
          inverse_condition_scan(phi, YoungFunction::power(q_pert), tr[2], rs);
      (void)cp;
      t.expect(!repp.pass,
               tag + " perturbed by " + num(sign * 0.05) + " not flagged: " + repp.note);
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 8: scan vs global domination vs construction ---------- */

bool crit_construction(Tally& t) {
  std::vector<double> rs;
  for (int k = -20; k <= 20; ++k) rs.push_back(std::pow(2.0, k));

  struct Pair {
    std::string name;
    YoungFunction phi;
    YoungFunction psi;
    double exponent;
  };
  const std::vector<Pair> pairs = {
      {"p2/p4", YoungFunction::power(2.0), YoungFunction::power(4.0), 0.25},
      {"p4/p4", YoungFunction::power(4.0), YoungFunction::power(4.0), 0.25},
      {"llogl/p1", YoungFunction::l_log_l(), YoungFunction::power(1.0), 0.0},
  };
  for (const auto& pr : pairs) {
    const auto [c, rep] = inverse_condition_scan(pr.phi, pr.psi, pr.exponent, rs);
    (void)c;

    // threshold function with inverse t^exponent * psi^{-1}(t)
    std::vector<double> inv(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      inv[i] = std::pow(rs[i], pr.exponent) * pr.psi.inverse(rs[i]);
    const auto target = young_from_inverse(rs, inv);
    const auto dom = dominates_globally(target, pr.phi);
    t.expect(rep.pass == dom.has_value(),
             pr.name + ": scan says " + (rep.pass ? "pass" : "fail") + ", domination says " +
                 (dom.has_value() ? "pass" : "fail"));

    if (check_growth(pr.phi, GrowthKind::Nabla2).holds) {
      const auto aux = cianchi_construct(pr.psi, pr.exponent, 1);
      const auto dom2 = dominates_globally(aux.target_young(), pr.phi);
      t.expect(rep.pass == dom2.has_value(),
               pr.name + ": scan says " + (rep.pass ? "pass" : "fail") +
                   ", constructed target says " + (dom2.has_value() ? "pass" : "fail"));
    }
  }
  return t.failures == 0;
}

/* ---------- criterion 9: capacity sweeps ---------- */

bool crit_capacity(Tally& t) {
  const Grid g{1, 512, 0.0, Boundary::ZeroExtend};
  const WindowFamily fam{WindowShape::Cube, {16, 32, 64, 128}};
  const auto phi = YoungFunction::power(2.0);
  // beta = 1/2, alpha = 0 and phi = power 2 force the matched partner's
  // inverse to be constant, which is exactly the essential-sup gauge
  const auto psi = YoungFunction::l_infinity();

  const auto cone = quantized(synth_lipschitz(0.5, {{{256, 0, 0}, 1.0}}, g).first);
  const auto [sup_cone, rep_cone] = capacity_functional(cone, phi, psi, 0.0, 0.5, fam);
  (void)sup_cone;
  t.expect(rep_cone.pass, "cone sweep flagged: " + rep_cone.note);
  double lo = kInf, hi = 0.0;
  for (const auto& row : rep_cone.sweep) {
    lo = std::min(lo, row.second);
    hi = std::max(hi, row.second);
  }
  t.expect(lo > 0.0 && hi / lo <= 1.5,
           "cone max/min ratio " + num(lo > 0.0 ? hi / lo : kInf));

  std::vector<double> sv(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size() / 2; ++i) sv[i] = 1.0;
  const auto [sup_step, rep_step] =
      capacity_functional(SampledFunction(g, std::move(sv)), phi, psi, 0.0, 0.5, fam);
  (void)sup_step;
  t.expect(!rep_step.pass, "step sweep not flagged: " + rep_step.note);
  const auto& rows = rep_step.sweep;
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i].second <= rows[i + 1].second) monotone = false;
  t.expect(monotone, "step sweep not monotone toward small windows");
  t.expect(rows.front().second >= 2.0 * rows.back().second,
           "step growth " + num(rows.front().second / rows.back().second) + " below 2");
  return t.failures == 0;
}

/* ---------- criterion 10: byte-identical reruns ---------- */

bool crit_determinism(Tally& t) {
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const fs::path root = fs::temp_directory_path() / "orlicz-acceptance";
  fs::remove_all(root);
  for (const auto& suite : known_suites()) {
    ExperimentConfig cfg;
    cfg.suites = {suite};
    std::ostringstream log;
    const fs::path a = root / (suite + "-a"), b = root / (suite + "-b"),
                   c = root / (suite + "-c");
    cfg.out_dir = a.string();
    run_config(cfg, log);
    cfg.out_dir = b.string();
    run_config(cfg, log);
    cfg.workers = 4;
    cfg.out_dir = c.string();
    run_config(cfg, log);
    for (const auto& entry : fs::directory_iterator(a)) {
      const auto name = entry.path().filename();
      t.expect(slurp(entry.path()) == slurp(b / name),
               suite + ": rerun differs in " + name.string());
      t.expect(slurp(entry.path()) == slurp(c / name),
               suite + ": parallel run differs in " + name.string());
    }
  }
  fs::remove_all(root);
  return t.failures == 0;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double budget_s;
    std::function<bool(Tally&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "inverse product bracket, 5 families x 41 dyadic points", 1.0, crit_bracket},
      {2, "indicator norms match the closed form, 10 windows x 4 families", 5.0,
       crit_indicator_norms},
      {3, "product integrals within dual-gauge bound, 100 pairs x 2 families", 30.0,
       crit_holder},
      {4, "operators equal double-loop oracles bitwise, 20 seeded cases", 10.0, crit_oracles},
      {5, "pointwise suite clean on a 10-case corpus, 1-D and 2-D", 60.0, crit_pointwise},
      {6, "restriction identity exact, 8 dyadic windows x 3 orders", 10.0, crit_identity},
      {7, "matched power scans flat, perturbed scans flagged", 1.0, crit_scans},
      {8, "scan verdicts agree with global domination and construction", 10.0,
       crit_construction},
      {9, "capacity sweep flat for a cone, growing for a step", 60.0, crit_capacity},
      {10, "byte-identical reports across reruns and 4 workers", 600.0, crit_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    bool ok = false;
    std::string crash;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.fn(t);
    } catch (const std::exception& e) {
      crash = e.what();
      ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.budget_s) {
      ok = false;
      t.first = "runtime " + num(secs) + "s over budget " + num(c.budget_s) + "s";
    }
    if (!crash.empty()) t.first = "exception: " + crash;
    std::printf("criterion %2d: %s  (%.2fs)  %s%s%s\n", c.id, ok ? "PASS" : "FAIL", secs,
                c.what, ok ? "" : " -- ", ok ? "" : t.first.c_str());
    if (!ok) ++failed;
  }
  if (failed > 0) std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
