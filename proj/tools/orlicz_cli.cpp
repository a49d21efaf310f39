/* Experiment driver: checks Young functions, computes norm tables, applies
 * the maximal operators, builds corpora, and runs the verification suites
 * described by a config file. Exit status: 0 on success, 1 when a selected
 * suite or check fails, 2 for invalid configuration or arguments. */

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orlicz/config.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int parallel = 1;
};

void attach_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config file");
  cmd->add_option("--out", opts.out_dir, "output directory (overrides [output] dir)");
  cmd->add_option("--seed", opts.seed, "corpus seed (overrides [corpus] seed)")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
  cmd->add_option("--parallel", opts.parallel, "worker threads for the suites")
      ->capture_default_str();
}

orlicz::ExperimentConfig resolve(const CommonOpts& opts) {
  orlicz::ExperimentConfig cfg;
  if (!opts.config_path.empty()) cfg = orlicz::load_config(opts.config_path);
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.seed_set) cfg.seed = opts.seed;
  cfg.workers = opts.parallel;
  orlicz::validate_config(cfg);
  return cfg;
}

int check_one_young(const std::string& spec) {
  const auto phi = orlicz::YoungFunction::parse(spec);
  std::printf("function            %s\n", phi.describe().c_str());
  std::printf("admissible          %s\n", phi.in_cal_y() ? "yes" : "no");
  double jump_at = 0.0;
  if (phi.pure_jump(&jump_at))
    std::printf("pure jump           yes, at r=%.12g\n", jump_at);
  else
    std::printf("pure jump           no\n");

  const auto bracket = orlicz::duality_bracket_check(phi, {});
  std::printf("duality bracket     %s  (min product/r %.12g, max product/2r %.12g)\n",
              bracket.pass ? "pass" : "FAIL", bracket.worst_low, bracket.worst_high);

  const auto d2 = orlicz::check_growth(phi, orlicz::GrowthKind::Delta2);
  if (d2.holds)
    std::printf("doubling            C=%.12g over the scan\n", d2.constant);
  else
    std::printf("doubling            no (grows past any C near r=%.12g)\n", d2.violation_r);
  const auto n2 = orlicz::check_growth(phi, orlicz::GrowthKind::Nabla2);
  if (n2.holds)
    std::printf("complementary rate  C=%.12g over the scan\n", n2.constant);
  else
    std::printf("complementary rate  no (witness r=%.12g)\n", n2.violation_r);
  return bracket.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-space experiment toolkit"};
  app.require_subcommand(1);

  // young check
  auto* young = app.add_subcommand("young", "Young-function utilities");
  young->require_subcommand(1);
  auto* ycheck = young->add_subcommand(
      "check", "parse a function spec and probe its structural properties");
  std::string phi_spec;
  std::string psi_spec;
  ycheck->add_option("--phi", phi_spec, "function spec, e.g. power:p=2, explin, llogl")
      ->required();
  ycheck->add_option("--psi", psi_spec, "optional second function to check");

  // norm compute
  CommonOpts norm_opts;
  auto* norm = app.add_subcommand("norm", "norm computations");
  norm->require_subcommand(1);
  auto* ncompute = norm->add_subcommand(
      "compute", "tabulate strong and weak norms of the corpus under phi and psi");
  attach_common(ncompute, norm_opts);

  // op apply
  CommonOpts op_opts;
  auto* op = app.add_subcommand("op", "operator applications");
  op->require_subcommand(1);
  auto* oapply = op->add_subcommand(
      "apply", "apply the configured maximal operator to every corpus entry");
  attach_common(oapply, op_opts);

  // verify run
  CommonOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* vrun = verify->add_subcommand("run", "run the selected suites and write reports");
  attach_common(vrun, verify_opts);

  // corpus make
  CommonOpts corpus_opts;
  auto* corpus = app.add_subcommand("corpus", "test-function corpora");
  corpus->require_subcommand(1);
  auto* cmake_cmd = corpus->add_subcommand("make", "materialize the corpus to data files");
  attach_common(cmake_cmd, corpus_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ycheck->parsed()) {
      int status = check_one_young(phi_spec);
      if (!psi_spec.empty()) {
        std::printf("\n");
        status = std::max(status, check_one_young(psi_spec));
      }
      return status;
    }
    if (ncompute->parsed()) {
      const auto cfg = resolve(norm_opts);
      std::printf("wrote %s\n", orlicz::write_norm_table(cfg, cfg.out_dir).c_str());
      return 0;
    }
    if (oapply->parsed()) {
      const auto cfg = resolve(op_opts);
      const auto paths = orlicz::write_operator_outputs(cfg, cfg.out_dir);
      std::printf("wrote %zu operator outputs under %s\n", paths.size(), cfg.out_dir.c_str());
      return 0;
    }
    if (vrun->parsed()) {
      const auto cfg = resolve(verify_opts);
      const auto result = orlicz::run_config(cfg, std::cout);
      return result.status;
    }
    if (cmake_cmd->parsed()) {
      const auto cfg = resolve(corpus_opts);
      const auto paths = orlicz::write_corpus_files(cfg, cfg.out_dir);
      std::printf("wrote %zu corpus files under %s\n", paths.size(), cfg.out_dir.c_str());
      return 0;
    }
  } catch (const orlicz::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
