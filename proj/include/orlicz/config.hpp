#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/operators.hpp"
#include "orlicz/verify.hpp"

namespace orlicz {

/*! Raised for anything wrong with an experiment description: unreadable
 *  file, grammar errors, unknown keys, or parameter combinations the
 *  selected suites cannot run with. Callers map it to exit status 2. */
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/*! A full experiment description. Every field has a usable default, so a
 *  config file only needs the lines it wants to change. See parse_config
 *  for the file grammar. */
struct ExperimentConfig {
  std::string phi_spec = "power:p=2";  // [young] phi
  std::string psi_spec = "power:p=2";  // [young] psi
  double alpha = 0.0;                  // [params] alpha
  double beta = 0.5;                   // [params] beta
  Grid grid{1, 64, 0.0, Boundary::ZeroExtend};
  WindowFamily family{WindowShape::Cube, {1, 2, 4, 8}};
  std::uint64_t seed = 1;    // [corpus] seed
  double gamma = 0.25;       // [corpus] gamma, spike sharpness
  int scan_lo = -20;         // [scan] lo: smallest dyadic exponent probed
  int scan_hi = 20;          // [scan] hi: largest dyadic exponent probed
  std::vector<std::string> suites;  // [suites] run; empty means all
  std::string out_dir = "out";      // [output] dir
  int workers = 1;                  // not in the file; --parallel
};

/*! Canonical suite order; selecting no suites runs all of these. */
const std::vector<std::string>& known_suites();

/*! Parses the key/value experiment grammar:
 *
 *    [young]    phi = power:p=2 | explin | linfty | llogl | table:<path>
 *               psi = <same forms>
 *    [params]   alpha = <float>        beta = <float>
 *    [grid]     dim = 1|2|3            extent = <int>
 *               spacing = <float, 0 picks 1/extent>
 *               boundary = zero | periodic
 *    [windows]  shape = cube | ball    radii = <ints, space separated>
 *    [corpus]   seed = <u64>           gamma = <float>
 *    [scan]     lo = <int>             hi = <int>
 *    [suites]   run = <names, space separated>
 *    [output]   dir = <path>
 *
 *  '#' or ';' starts a comment. Unknown sections, keys, or malformed
 *  values raise ConfigError with the offending line number. */
ExperimentConfig parse_config(const std::string& text);

/*! parse_config over a file's contents; unreadable file raises ConfigError. */
ExperimentConfig load_config(const std::string& path);

/*! Checks parameter hypotheses against the selected suites: alpha in
 *  [0, dim); beta in (0, 1) and gamma in (0, dim) whenever a suite builds
 *  the corpus; alpha + beta < dim for the smoothness suites; window and
 *  boundary restrictions for the suites that need interior windows. */
void validate_config(const ExperimentConfig& cfg);

/*! Runs one suite by name and returns its report. The config must already
 *  be validated; unknown names raise ConfigError. */
VerificationReport run_suite(const std::string& name, const ExperimentConfig& cfg);

struct SuiteOutcome {
  std::string id;
  bool pass = false;
  std::string report_path;
};

struct RunResult {
  int status = 0;  // 0: every suite passed, 1: at least one failed
  std::vector<SuiteOutcome> suites;
};

/*! Executes the selected suites in declared order, writing per-suite JSON
 *  reports, a (scale, value) CSV next to every report with sweep rows, and
 *  a summary.json, all under cfg.out_dir. Logs one line per suite. The
 *  same config and seed produce byte-identical files. */
RunResult run_config(const ExperimentConfig& cfg, std::ostream& log);

/*! Strong and weak norms of every corpus entry under both configured
 *  Young functions, written to <dir>/norms.csv. Returns the file path. */
std::string write_norm_table(const ExperimentConfig& cfg, const std::string& dir);

/*! Applies the configured maximal operator to every corpus entry. One
 *  dimension writes plot-ready CSV, higher dimensions the binary format.
 *  Returns the paths written. */
std::vector<std::string> write_operator_outputs(const ExperimentConfig& cfg,
                                                const std::string& dir);

/*! Materializes the corpus: one data file per entry plus a manifest CSV
 *  describing name, tag, and synthesis parameters. Returns the paths. */
std::vector<std::string> write_corpus_files(const ExperimentConfig& cfg,
                                            const std::string& dir);

}  // namespace orlicz
