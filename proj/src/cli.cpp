#include "fwdg/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "fwdg/problems.hpp"

namespace fwdg {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

double to_double(const std::string& token, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw CliError(ExitCode::bad_config,
                 flag + ": could not read '" + token + "' as a number");
}

int to_int(const std::string& token, const std::string& flag) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw CliError(ExitCode::bad_config,
                 flag + ": could not read '" + token + "' as an integer");
}

[[noreturn]] void reject(const std::string& message) {
  throw CliError(ExitCode::bad_config, message);
}

}  // namespace

RunConfig parse_run_config(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string scheme_str = scheme_name(cfg.scheme);
  std::string domain_str, snapshots_str, convergence_str;

  CLI::App app{
      "Local discontinuous Galerkin solver for Fornberg-Whitham type "
      "equations u_t + (u^p/p)_x + (1 - dxx)^{-1} u_x = 0 on a periodic "
      "interval"};
  app.set_config("--config", "",
                 "read defaults from a flat key = value file (command-line "
                 "flags win over the file)");
  app.add_option("--problem", cfg.problem,
                 "initial-data catalog entry (see the error message of an "
                 "unknown id for the list)")
      ->capture_default_str();
  app.add_option("--scheme", scheme_str,
                 "D1/D2 dissipate the L2 norm of u, C1/C2 conserve it; "
                 "1 evolves u, 2 evolves w = u - u_xx")
      ->capture_default_str();
  app.add_option("--p", cfg.p,
                 "nonlinearity power in f(u) = u^p/p; 0 takes the problem's "
                 "default")
      ->capture_default_str();
  app.add_option("--degree", cfg.degree, "polynomial degree per cell (0..8)")
      ->capture_default_str();
  app.add_option("--cells", cfg.cells, "number of mesh cells")
      ->capture_default_str();
  // join(',') lets the config file's comma splitting reassemble list values.
  app.add_option("--domain", domain_str,
                 "override the computational domain, written as a,b")
      ->join(',');
  app.add_option("--tfinal", cfg.t_final, "final time")->capture_default_str();
  app.add_option("--alpha", cfg.alpha,
                 "time-step factor: dt = alpha h^((k+1)/3) for degree k >= 2, "
                 "alpha h otherwise")
      ->capture_default_str();
  app.add_option("--dt", cfg.dt, "explicit time step; 0 derives it from alpha")
      ->capture_default_str();
  app.add_option("--limiter", cfg.limiter_m,
                 "enable the TVB minmod limiter with constant M (deviations "
                 "below M h^2 pass through unlimited)");
  app.add_option("--snapshots", snapshots_str,
                 "comma-separated times at which to write solution CSV files "
                 "(default: the final time)")
      ->join(',');
  app.add_option("--perturb", cfg.perturb,
                 "move each interior mesh edge by a uniform random fraction "
                 "of the spacing, up to this amount")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed for the mesh perturbation")
      ->capture_default_str();
  app.add_option("--out", cfg.out_dir, "output directory (created if missing)")
      ->capture_default_str();
  app.add_option("--convergence", convergence_str,
                 "comma-separated cell counts; runs a refinement study "
                 "against the closed-form solution instead of a single run")
      ->join(',');
  app.add_option("--samples", cfg.samples,
                 "equispaced solution samples per cell in the CSV output, "
                 "cell endpoints included")
      ->capture_default_str();
  app.add_option("--diag-every", cfg.diag_every,
                 "record invariants every this many steps")
      ->capture_default_str();
  app.add_flag("--no-source", cfg.no_source,
               "drop the problem's forcing term (useful for conservation "
               "checks on manufactured data)");
  app.add_option("--u0-offset", cfg.u0_offset,
                 "constant added to the initial data; disables error "
                 "measurement against the closed-form solution")
      ->capture_default_str();
  app.add_flag("--serial", cfg.serial,
               "use the serial reference kernels even when OpenMP is built "
               "in");
  app.add_flag("--limit-u", cfg.limit_u,
               "D2/C2 only: apply the limiter to the reconstructed u instead "
               "of the evolved w");
  app.add_flag("--no-verify", cfg.no_verify,
               "skip the residual check after every linear solve");
  app.add_option("--s", cfg.s, "peaked-wave speed")->capture_default_str();
  app.add_option("--g", cfg.g, "peaked-wave shape parameter")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fwdg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    cfg.help = true;
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::FileError& e) {
    throw CliError(ExitCode::bad_config, e.what());
  } catch (const CLI::ConfigError& e) {
    throw CliError(ExitCode::bad_config, e.what());
  } catch (const CLI::ParseError& e) {
    throw CliError(ExitCode::usage, e.what());
  }

  try {
    cfg.scheme = parse_scheme(scheme_str);
  } catch (const std::invalid_argument& e) {
    reject(e.what());
  }

  if (!domain_str.empty()) {
    const std::vector<std::string> parts = split_commas(domain_str);
    if (parts.size() != 2)
      reject("--domain expects exactly two numbers a,b, got '" + domain_str +
             "'");
    cfg.domain_a = to_double(parts[0], "--domain");
    cfg.domain_b = to_double(parts[1], "--domain");
    if (!(cfg.domain_a < cfg.domain_b))
      reject("--domain: the interval [" + parts[0] + ", " + parts[1] +
             "] is empty");
    cfg.has_domain = true;
  }
  for (const std::string& tok : split_commas(snapshots_str))
    cfg.snapshots.push_back(to_double(tok, "--snapshots"));
  for (const std::string& tok : split_commas(convergence_str))
    cfg.convergence.push_back(to_int(tok, "--convergence"));

  if (cfg.p != 0 && cfg.p < 2)
    reject("--p: the power must be at least 2 (or 0 for the problem default)");
  if (cfg.degree < 0 || cfg.degree > 8)
    reject("--degree: supported degrees are 0..8");
  if (cfg.cells < 1) reject("--cells: need at least one cell");
  if (cfg.t_final <= 0.0) reject("--tfinal: the final time must be positive");
  if (cfg.alpha <= 0.0) reject("--alpha: the step factor must be positive");
  if (cfg.dt < 0.0) reject("--dt: the time step cannot be negative");
  if (app.count("--limiter") > 0 && cfg.limiter_m < 0.0)
    reject("--limiter: the TVB constant M must be >= 0");
  if (cfg.perturb < 0.0 || cfg.perturb >= 0.5)
    reject("--perturb: the edge perturbation must lie in [0, 0.5) to keep "
           "edges ordered");
  if (cfg.samples < 1) reject("--samples: need at least one sample per cell");
  if (cfg.diag_every < 1) reject("--diag-every: the cadence must be >= 1");

  std::sort(cfg.snapshots.begin(), cfg.snapshots.end());
  cfg.snapshots.erase(std::unique(cfg.snapshots.begin(), cfg.snapshots.end()),
                      cfg.snapshots.end());
  for (const double t : cfg.snapshots) {
    if (t <= 0.0 || t > cfg.t_final * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << "--snapshots: time " << t << " lies outside (0, " << cfg.t_final
         << "]";
      reject(os.str());
    }
  }

  std::sort(cfg.convergence.begin(), cfg.convergence.end());
  for (std::size_t i = 0; i < cfg.convergence.size(); ++i) {
    if (cfg.convergence[i] < 2)
      reject("--convergence: each cell count must be at least 2");
    if (i > 0 && cfg.convergence[i] == cfg.convergence[i - 1])
      reject("--convergence: repeated cell count " +
             std::to_string(cfg.convergence[i]));
  }

  // Constructing the problem vets the id and the peaked-wave parameters.
  Problem pr;
  try {
    pr = make_problem(cfg.problem, cfg.s, cfg.g);
  } catch (const std::invalid_argument& e) {
    reject(e.what());
  } catch (const std::domain_error& e) {
    reject(e.what());
  }

  if (!cfg.convergence.empty()) {
    const std::string study = "a refinement study of '" + cfg.problem + "' ";
    if (!pr.has_exact())
      reject(study +
             "needs a closed-form solution to measure errors against, and "
             "this problem has none");
    if (cfg.p != 0 && cfg.p != pr.p)
      reject(study + "is only meaningful with the catalogued power p = " +
             std::to_string(pr.p) + "; drop --p or set it to that value");
    if (cfg.has_domain)
      reject(study + "uses the catalogued domain; drop --domain");
    if (cfg.no_source && pr.has_source())
      reject(study + "needs the problem's forcing term; drop --no-source");
    if (cfg.u0_offset != 0.0)
      reject(study +
             "cannot shift the initial data (the closed-form solution would "
             "no longer apply); drop --u0-offset");
    if (!cfg.snapshots.empty())
      cfg.warnings.push_back(
          "snapshot times are ignored in a refinement study");
  }

  const bool conservative = !scheme_is_dissipative(cfg.scheme);
  if (conservative && cfg.degree < 2)
    cfg.warnings.push_back(
        "the energy-conserving flux of " + scheme_name(cfg.scheme) +
        " loses accuracy below degree 2; expect reduced convergence orders");
  if (!conservative && cfg.degree < 1)
    cfg.warnings.push_back(
        "degree 0 reduces " + scheme_name(cfg.scheme) +
        " to a first-order finite-volume method");
  if (cfg.limit_u && !scheme_evolves_w(cfg.scheme))
    cfg.warnings.push_back("--limit-u only affects D2/C2; " +
                           scheme_name(cfg.scheme) + " ignores it");
  if (pr.limiter_recommended && cfg.limiter_m < 0.0 && cfg.convergence.empty())
    cfg.warnings.push_back(
        "initial data '" + cfg.problem +
        "' steepens into a shock; without --limiter the run may oscillate or "
        "abort");

  return cfg;
}

}  // namespace fwdg
