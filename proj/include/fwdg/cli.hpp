#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwdg/scheme.hpp"

// Command-line front end: a RunConfig collects everything a run needs, the
// parser fills it from flags and an optional flat `key = value` config file
// (flags win over the file), and validation either rejects the combination
// with a categorized error or records advisory warnings and lets it through.

namespace fwdg {

// Process exit categories used by the driver.
enum class ExitCode : int {
  ok = 0,
  usage = 2,       // the command line itself could not be parsed
  bad_config = 3,  // parsed fine but describes a run that cannot be set up
  run_failed = 4,  // the integration aborted or a solve went bad mid-run
  io_error = 5,    // an output directory or file could not be written
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct RunConfig {
  std::string problem = "smooth_manufactured";
  SchemeId scheme = SchemeId::d1;
  int p = 0;        // nonlinearity power; 0 means the problem's default
  int degree = 2;   // polynomial degree per cell
  int cells = 40;   // ignored in a refinement study
  bool has_domain = false;  // --domain a,b given; overrides the catalog
  double domain_a = 0.0, domain_b = 1.0;
  double t_final = 1.0;
  double alpha = 0.1;       // step-size factor when dt is derived
  double dt = 0.0;          // explicit time step; 0 derives it from alpha
  double limiter_m = -1.0;  // TVB minmod constant; negative = limiter off
  std::vector<double> snapshots;  // output times; empty means {t_final}
  double perturb = 0.0;           // relative mesh perturbation amplitude
  std::uint64_t seed = 0;         // mesh perturbation seed
  std::string out_dir = "out";
  std::vector<int> convergence;  // cell counts; non-empty = refinement study
  int samples = 8;               // solution samples per cell in the CSV
  int diag_every = 1;            // diagnostics cadence in steps
  bool no_source = false;        // drop the problem's forcing term
  double u0_offset = 0.0;        // constant added to the initial data
  bool serial = false;           // force the serial kernels
  bool limit_u = false;          // transformed schemes: limit u instead of w
  bool no_verify = false;        // skip per-solve residual checks
  double s = 2.0;  // peaked-wave speed
  double g = 0.3;  // peaked-wave shape parameter

  // Filled by the parser.
  bool help = false;  // --help was given; help_text holds the message
  std::string help_text;
  std::vector<std::string> warnings;  // advisory notes from validation
};

// Parse and validate a command line (argv[0] excluded).  Throws CliError
// with code `usage` for unparseable flags and `bad_config` for combinations
// that cannot run; advisory problems land in RunConfig::warnings instead.
RunConfig parse_run_config(const std::vector<std::string>& args);

}  // namespace fwdg
