#include "orlicz/config.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "orlicz/corpus.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_line(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& v, int line) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    bad_line(line, "expected a number, got '" + v + "'");
  }
  if (used != v.size()) bad_line(line, "trailing characters after number '" + v + "'");
  return x;
}

long long parse_int(const std::string& v, int line) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    bad_line(line, "expected an integer, got '" + v + "'");
  }
  if (used != v.size()) bad_line(line, "trailing characters after integer '" + v + "'");
  return x;
}

std::uint64_t parse_u64(const std::string& v, int line) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    bad_line(line, "expected an unsigned integer, got '" + v + "'");
  }
  if (used != v.size()) bad_line(line, "trailing characters after integer '" + v + "'");
  return static_cast<std::uint64_t>(x);
}

std::vector<std::string> split_words(const std::string& v) {
  std::vector<std::string> out;
  std::istringstream in(v);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool wants(const std::vector<std::string>& suites, const std::string& name) {
  return std::find(suites.begin(), suites.end(), name) != suites.end();
}

const std::vector<std::string>& effective_suites(const ExperimentConfig& cfg) {
  return cfg.suites.empty() ? known_suites() : cfg.suites;
}

bool needs_corpus(const std::string& suite) {
  return suite == "unit-ball" || suite == "holder" || suite == "mean-bound" ||
         suite == "norm-ratio" || suite == "pointwise" || suite == "identity" ||
         suite == "capacity" || suite == "mean-oscillation";
}

bool needs_smoothness(const std::string& suite) {
  return suite == "pointwise" || suite == "capacity" || suite == "mean-oscillation";
}

std::array<int, 3> mid_cell(const Grid& g) {
  std::array<int, 3> c{0, 0, 0};
  for (int d = 0; d < g.dim; ++d) c[d] = g.extent / 2;
  return c;
}

int max_radius(const WindowFamily& fam) {
  int k = 0;
  for (int r : fam.radii) k = std::max(k, r);
  return k;
}

const CorpusEntry& pick_entry(const Corpus& corpus, const std::string& tag) {
  for (const auto& e : corpus.entries)
    if (e.tag == tag) return e;
  throw ConfigError("corpus has no '" + tag + "' entry");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void track_min(double& slot, std::size_t& count, double margin) {
  if (count == 0 || margin < slot) slot = margin;
  ++count;
}

void add_witness(VerificationReport& rep, const std::string& where, double lhs, double rhs) {
  if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back({where, lhs, rhs});
}

VerificationReport duality_suite(const ExperimentConfig& cfg) {
  const auto phi = YoungFunction::parse(cfg.phi_spec);
  const DyadicGrid dg{cfg.scan_lo, cfg.scan_hi, 1};
  const auto base = duality_bracket_check(phi, dg);
  VerificationReport rep;
  rep.id = "duality";
  rep.params = {{"phi", phi.describe()},
                {"r_lo", "2^" + std::to_string(cfg.scan_lo)},
                {"r_hi", "2^" + std::to_string(cfg.scan_hi)}};
  rep.pass = base.pass;
  rep.checked = 2 * base.profile.size();
  rep.worst_margin = std::min(base.worst_low - 1.0, 1.0 - base.worst_high);
  rep.empirical_constant = 2.0 * base.worst_high;  // max of product / r
  rep.sweep = base.profile;
  rep.note = "inverse product over r stays within [1, 2]";
  if (!base.pass) {
    add_witness(rep, "product/r minimum", base.worst_low, 1.0);
    add_witness(rep, "product/(2r) maximum", base.worst_high, 1.0);
  }
  return rep;
}

VerificationReport unit_ball_suite(const ExperimentConfig& cfg, const Corpus& corpus) {
  const auto phi = YoungFunction::parse(cfg.phi_spec);
  VerificationReport rep;
  rep.id = "unit-ball";
  rep.params = {{"phi", phi.describe()}, {"entries", std::to_string(corpus.entries.size())}};
  rep.pass = true;
  double worst_dev = 0.0;
  for (const auto& e : corpus.entries) {
    const auto r = unit_ball_check(e.f, phi);
    track_min(rep.worst_margin, rep.checked, (1.0 + 1e-8) - r.strong_modular);
    worst_dev = std::max(worst_dev, std::abs(r.strong_modular - 1.0));
    if (!r.pass) {
      rep.pass = false;
      add_witness(rep, e.name, r.strong_modular, 1.0 + 1e-8);
    }
  }
  rep.empirical_constant = worst_dev;
  rep.note = "modular of f scaled by its own gauge stays at 1";
  return rep;
}

VerificationReport holder_suite(const ExperimentConfig& cfg, const Corpus& corpus) {
  const auto phi = YoungFunction::parse(cfg.phi_spec);
  const auto conj = practical_conjugate(phi);
  VerificationReport rep;
  rep.id = "holder";
  rep.params = {{"phi", phi.describe()}, {"pairs", std::to_string(corpus.entries.size() - 1)}};
  rep.pass = true;
  for (std::size_t i = 0; i + 1 < corpus.entries.size(); ++i) {
    const auto& a = corpus.entries[i];
    const auto& b = corpus.entries[i + 1];
    const auto r = holder_check(a.f, b.f, phi, conj);
    track_min(rep.worst_margin, rep.checked, 1.0 - r.ratio);
    rep.empirical_constant = std::max(rep.empirical_constant, r.ratio);
    if (!r.pass) {
      rep.pass = false;
      add_witness(rep, a.name + " * " + b.name, r.integral, r.bound);
    }
  }
  rep.note = "pairings against twice the product of dual gauges";
  return rep;
}

VerificationReport mean_bound_suite(const ExperimentConfig& cfg, const Corpus& corpus) {
  const auto phi = YoungFunction::parse(cfg.phi_spec);
  VerificationReport rep;
  rep.id = "mean-bound";
  rep.params = {{"phi", phi.describe()}, {"entries", std::to_string(corpus.entries.size())}};
  rep.pass = true;
  auto radii = cfg.family.radii;
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  const auto center = mid_cell(cfg.grid);
  for (int k : radii) {
    const Window w{center, k, cfg.family.shape};
    double worst = 0.0;
    for (const auto& e : corpus.entries) {
      const auto r = mean_bound_check(e.f, phi, w);
      track_min(rep.worst_margin, rep.checked, 1.0 - r.ratio);
      worst = std::max(worst, r.ratio);
      rep.empirical_constant = std::max(rep.empirical_constant, r.ratio);
      if (!r.pass) {
        rep.pass = false;
        add_witness(rep, e.name + " k=" + std::to_string(k), r.mean, r.bound);
      }
    }
    rep.sweep.push_back({(2.0 * k + 1.0) * cfg.grid.h(), worst});
  }
  rep.note = "window means against twice the gauge times the inverse at 1/|window|";
  return rep;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "duality",  "inverse-scan", "unit-ball", "holder",    "mean-bound",      "norm-ratio",
      "pointwise", "identity",    "capacity",  "necessity", "mean-oscillation"};
  return names;
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t cut = raw.find_first_of("#;");
    if (cut != std::string::npos) raw.erase(cut);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') bad_line(line, "unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      if (section != "young" && section != "params" && section != "grid" &&
          section != "windows" && section != "corpus" && section != "scan" &&
          section != "suites" && section != "output")
        bad_line(line, "unknown section [" + section + "]");
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) bad_line(line, "expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (section.empty()) bad_line(line, "key '" + key + "' appears before any section");
    if (key.empty()) bad_line(line, "empty key");
    if (val.empty()) bad_line(line, "empty value for '" + key + "'");

    if (section == "young") {
      if (key == "phi")
        cfg.phi_spec = val;
      else if (key == "psi")
        cfg.psi_spec = val;
      else
        bad_line(line, "unknown key '" + key + "' in [young]");
    } else if (section == "params") {
      if (key == "alpha")
        cfg.alpha = parse_double(val, line);
      else if (key == "beta")
        cfg.beta = parse_double(val, line);
      else
        bad_line(line, "unknown key '" + key + "' in [params]");
    } else if (section == "grid") {
      if (key == "dim")
        cfg.grid.dim = static_cast<int>(parse_int(val, line));
      else if (key == "extent")
        cfg.grid.extent = static_cast<int>(parse_int(val, line));
      else if (key == "spacing")
        cfg.grid.spacing = parse_double(val, line);
      else if (key == "boundary") {
        if (val == "zero")
          cfg.grid.boundary = Boundary::ZeroExtend;
        else if (val == "periodic")
          cfg.grid.boundary = Boundary::Periodic;
        else
          bad_line(line, "boundary must be 'zero' or 'periodic', got '" + val + "'");
      } else
        bad_line(line, "unknown key '" + key + "' in [grid]");
    } else if (section == "windows") {
      if (key == "shape") {
        if (val == "cube")
          cfg.family.shape = WindowShape::Cube;
        else if (val == "ball")
          cfg.family.shape = WindowShape::EuclideanBall;
        else
          bad_line(line, "shape must be 'cube' or 'ball', got '" + val + "'");
      } else if (key == "radii") {
        cfg.family.radii.clear();
        for (const auto& w : split_words(val))
          cfg.family.radii.push_back(static_cast<int>(parse_int(w, line)));
        if (cfg.family.radii.empty()) bad_line(line, "radii needs at least one value");
      } else
        bad_line(line, "unknown key '" + key + "' in [windows]");
    } else if (section == "corpus") {
      if (key == "seed")
        cfg.seed = parse_u64(val, line);
      else if (key == "gamma")
        cfg.gamma = parse_double(val, line);
      else
        bad_line(line, "unknown key '" + key + "' in [corpus]");
    } else if (section == "scan") {
      if (key == "lo")
        cfg.scan_lo = static_cast<int>(parse_int(val, line));
      else if (key == "hi")
        cfg.scan_hi = static_cast<int>(parse_int(val, line));
      else
        bad_line(line, "unknown key '" + key + "' in [scan]");
    } else if (section == "suites") {
      if (key == "run")
        cfg.suites = split_words(val);
      else
        bad_line(line, "unknown key '" + key + "' in [suites]");
    } else {  // output
      if (key == "dir")
        cfg.out_dir = val;
      else
        bad_line(line, "unknown key '" + key + "' in [output]");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate_config(const ExperimentConfig& cfg) {
  try {
    (void)YoungFunction::parse(cfg.phi_spec);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("phi: ") + e.what());
  }
  try {
    (void)YoungFunction::parse(cfg.psi_spec);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("psi: ") + e.what());
  }
  try {
    cfg.grid.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());  // grid messages already name the field
  }
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
  if (cfg.scan_lo > cfg.scan_hi) throw ConfigError("scan range is empty: lo > hi");
  if (cfg.family.radii.empty()) throw ConfigError("window family needs at least one radius");
  for (int k : cfg.family.radii)
    if (k < 0) throw ConfigError("window radii must be nonnegative");
  const double n = cfg.grid.dim;
  if (!(cfg.alpha >= 0.0) || !(cfg.alpha < n))
    throw ConfigError("alpha must satisfy 0 <= alpha < dim, got " + fmt(cfg.alpha));

  const auto& selected = effective_suites(cfg);
  bool corpus = false, smooth = false, interior = false;
  for (const auto& s : selected) {
    if (!wants(known_suites(), s))
      throw ConfigError("unknown suite '" + s + "'; known suites: " + [] {
        std::string all;
        for (const auto& k : known_suites()) all += (all.empty() ? "" : " ") + k;
        return all;
      }());
    corpus = corpus || needs_corpus(s);
    smooth = smooth || needs_smoothness(s);
    interior = interior || s == "identity" || s == "capacity" || s == "mean-oscillation";
  }
  if (corpus) {
    if (!(cfg.beta > 0.0) || !(cfg.beta < 1.0))
      throw ConfigError("beta must satisfy 0 < beta < 1, got " + fmt(cfg.beta));
    if (!(cfg.gamma > 0.0) || !(cfg.gamma < n))
      throw ConfigError("gamma must satisfy 0 < gamma < dim, got " + fmt(cfg.gamma));
  }
  if (smooth && !(cfg.alpha + cfg.beta < n))
    throw ConfigError("smoothness suites need alpha + beta < dim, got " +
                      fmt(cfg.alpha + cfg.beta) + " vs dim " + fmt(n));
  if (interior) {
    if (cfg.grid.boundary != Boundary::ZeroExtend)
      throw ConfigError("identity, capacity, and mean-oscillation need boundary = zero");
    if (cfg.family.shape != WindowShape::Cube)
      throw ConfigError("identity, capacity, and mean-oscillation need shape = cube");
  }
}

VerificationReport run_suite(const std::string& name, const ExperimentConfig& cfg) {
  const auto phi = YoungFunction::parse(cfg.phi_spec);
  const auto psi = YoungFunction::parse(cfg.psi_spec);
  const double exponent = cfg.alpha / cfg.grid.dim;

  if (name == "duality") return duality_suite(cfg);
  if (name == "inverse-scan") {
    const auto rs = DyadicGrid{cfg.scan_lo, cfg.scan_hi, 1}.values();
    return inverse_condition_scan(phi, psi, exponent, rs).second;
  }
  if (name == "necessity")
    return necessity_chain(phi, psi, cfg.alpha, cfg.grid, cfg.family, cfg.workers);
  if (!needs_corpus(name)) throw ConfigError("unknown suite '" + name + "'");

  const auto corpus = default_corpus(cfg.grid, cfg.seed, cfg.beta, cfg.gamma);
  if (name == "unit-ball") return unit_ball_suite(cfg, corpus);
  if (name == "holder") return holder_suite(cfg, corpus);
  if (name == "mean-bound") return mean_bound_suite(cfg, corpus);
  if (name == "norm-ratio") {
    const OperatorParams op{cfg.alpha, cfg.family, cfg.workers};
    return empirical_norm_ratio(op, phi, psi, corpus, NormTarget::Strong).second;
  }
  if (name == "pointwise") {
    const auto& b = pick_entry(corpus, "lipschitz-cone");
    const auto& f = pick_entry(corpus, "random-smooth");
    return pointwise_suite(b.f, f.f, cfg.alpha, cfg.beta, cfg.family, cfg.workers);
  }
  if (name == "identity") {
    // the restriction identity compares against every inner scale, so the
    // suite saturates the family up to the largest configured radius
    const auto& b = pick_entry(corpus, "random-smooth");
    const Window b0{mid_cell(cfg.grid), max_radius(cfg.family), WindowShape::Cube};
    WindowFamily fam;
    fam.shape = WindowShape::Cube;
    for (int k = 0; k <= b0.radius; ++k) fam.radii.push_back(k);
    return identity_suite(b.f, b0, cfg.alpha, fam, cfg.workers);
  }
  if (name == "capacity") {
    const auto& b = pick_entry(corpus, "lipschitz-cone");
    return capacity_functional(b.f, phi, psi, cfg.alpha, cfg.beta, cfg.family, cfg.workers)
        .second;
  }
  if (name == "mean-oscillation") {
    const auto& b = pick_entry(corpus, "lipschitz-cone");
    const Window b0{mid_cell(cfg.grid), max_radius(cfg.family), WindowShape::Cube};
    return mean_oscillation_bound(b.f, b0, cfg.alpha, cfg.beta, psi, cfg.workers);
  }
  throw ConfigError("unknown suite '" + name + "'");
}

namespace {

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << body;
  if (!out) throw ConfigError("short write to '" + path + "'");
}

std::string sweep_csv(const VerificationReport& rep) {
  std::string body = "scale,value\n";
  char buf[80];
  for (const auto& row : rep.sweep) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", row.first, row.second);
    body += buf;
  }
  return body;
}

}  // namespace

RunResult run_config(const ExperimentConfig& cfg, std::ostream& log) {
  validate_config(cfg);
  std::filesystem::create_directories(cfg.out_dir);
  RunResult result;
  nlohmann::ordered_json summary;
  summary["pass"] = true;
  summary["suites"] = nlohmann::ordered_json::array();
  for (const auto& name : effective_suites(cfg)) {
    const auto rep = run_suite(name, cfg);
    const std::string report_path = cfg.out_dir + "/" + name + ".json";
    write_file(report_path, report_json(rep));
    if (!rep.sweep.empty()) write_file(cfg.out_dir + "/" + name + "_sweep.csv", sweep_csv(rep));
    result.suites.push_back({name, rep.pass, report_path});
    if (!rep.pass) {
      result.status = 1;
      summary["pass"] = false;
    }
    summary["suites"].push_back(
        {{"id", name}, {"pass", rep.pass}, {"report", name + ".json"}});
    log << "suite " << name << ": " << (rep.pass ? "pass" : "FAIL") << "\n";
  }
  write_file(cfg.out_dir + "/summary.json", summary.dump(2) + "\n");
  return result;
}

std::string write_norm_table(const ExperimentConfig& cfg, const std::string& dir) {
  validate_config(cfg);
  std::filesystem::create_directories(dir);
  const auto phi = YoungFunction::parse(cfg.phi_spec);
  const auto psi = YoungFunction::parse(cfg.psi_spec);
  const auto corpus = default_corpus(cfg.grid, cfg.seed, cfg.beta, cfg.gamma);
  std::string body = "name,strong_phi,weak_phi,strong_psi,weak_psi\n";
  char buf[160];
  for (const auto& e : corpus.entries) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g\n", e.name.c_str(),
                  luxemburg_norm(e.f, phi).value, weak_norm(e.f, phi).value,
                  luxemburg_norm(e.f, psi).value, weak_norm(e.f, psi).value);
    body += buf;
  }
  const std::string path = dir + "/norms.csv";
  write_file(path, body);
  return path;
}

std::vector<std::string> write_operator_outputs(const ExperimentConfig& cfg,
                                                const std::string& dir) {
  validate_config(cfg);
  std::filesystem::create_directories(dir);
  const OperatorParams op{cfg.alpha, cfg.family, cfg.workers};
  std::vector<std::string> paths;
  const auto corpus = default_corpus(cfg.grid, cfg.seed, cfg.beta, cfg.gamma);
  for (const auto& e : corpus.entries) {
    const auto m = fractional_maximal(e.f, op);
    const std::string path =
        dir + "/maximal_" + e.name + (cfg.grid.dim == 1 ? ".csv" : ".dat");
    if (cfg.grid.dim == 1)
      store_csv(m, path);
    else
      store_binary(m, path);
    paths.push_back(path);
  }
  return paths;
}

std::vector<std::string> write_corpus_files(const ExperimentConfig& cfg,
                                            const std::string& dir) {
  validate_config(cfg);
  std::filesystem::create_directories(dir);
  std::vector<std::string> paths;
  const auto corpus = default_corpus(cfg.grid, cfg.seed, cfg.beta, cfg.gamma);
  std::string manifest = "name,tag,beta,lipschitz_bound,scale\n";
  char buf[160];
  for (const auto& e : corpus.entries) {
    const std::string path =
        dir + "/corpus_" + e.name + (cfg.grid.dim == 1 ? ".csv" : ".dat");
    if (cfg.grid.dim == 1)
      store_csv(e.f, path);
    else
      store_binary(e.f, path);
    paths.push_back(path);
    std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%.17g,%.17g\n", e.name.c_str(), e.tag.c_str(),
                  e.beta, e.lipschitz_bound, e.scale);
    manifest += buf;
  }
  const std::string mpath = dir + "/corpus_manifest.csv";
  write_file(mpath, manifest);
  paths.push_back(mpath);
  return paths;
}

}  // namespace orlicz
