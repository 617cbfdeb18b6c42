#include "fwdg/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "fwdg/problems.hpp"
#include "fwdg/projection.hpp"

namespace fwdg {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string num(double v) { return fmt("%.12g", v); }

// Per-run pieces resolved from the configuration and the problem catalog.
struct Setup {
  Problem problem;
  int p = 2;
  double a = 0.0, b = 1.0;
  Exec exec = Exec::serial;
  TVBLimiter limiter;
  SourceFn source;           // already matched to the scheme family
  bool exact_usable = false; // the catalog solution applies to this run
};

Setup resolve(const RunConfig& cfg) {
  Setup st;
  st.problem = make_problem(cfg.problem, cfg.s, cfg.g);
  st.p = cfg.p != 0 ? cfg.p : st.problem.p;
  st.a = cfg.has_domain ? cfg.domain_a : st.problem.a;
  st.b = cfg.has_domain ? cfg.domain_b : st.problem.b;
  st.exec = (cfg.serial || !openmp_enabled()) ? Exec::serial : Exec::openmp;
  if (cfg.limiter_m >= 0.0) st.limiter = TVBLimiter(cfg.limiter_m);
  if (st.problem.has_source() && !cfg.no_source)
    st.source = scheme_evolves_w(cfg.scheme) ? st.problem.source_w
                                             : st.problem.source_u;
  // The catalog solution only describes the unmodified problem.
  st.exact_usable = st.problem.has_exact() && cfg.u0_offset == 0.0 &&
                    (cfg.p == 0 || cfg.p == st.problem.p) && !cfg.has_domain &&
                    !(cfg.no_source && st.problem.has_source());
  return st;
}

struct RungResult {
  IntegrateResult result;
  double dt_used = 0.0;
  Norms error;
  bool has_error = false;
  std::vector<StepRecord> records;
  std::vector<std::pair<double, std::string>> snapshots;  // (t, csv body)
};

RungResult run_rung(const RunConfig& cfg, const Setup& st, int cells,
                    bool want_outputs) {
  SpacePtr space =
      make_space(build_mesh(st.a, st.b, cells, cfg.perturb, cfg.seed),
                 cfg.degree);
  SchemeConfig sc;
  sc.id = cfg.scheme;
  sc.p = st.p;
  sc.source = st.source;
  sc.verify_solves = !cfg.no_verify;
  sc.limit_u = cfg.limit_u;
  sc.exec = st.exec;
  const std::unique_ptr<Scheme> scheme = make_scheme(space, sc);

  ScalarFn init = st.problem.initial;
  if (cfg.u0_offset != 0.0)
    init = [base = st.problem.initial, off = cfg.u0_offset](double x) {
      return base(x) + off;
    };
  const std::vector<double> kinks = st.problem.kinks(0.0);
  DGField state = scheme->initial_state(project_l2(space, init, kinks));

  IntegrateOptions opt;
  opt.t_final = cfg.t_final;
  opt.dt = cfg.dt;
  opt.alpha = cfg.alpha;
  opt.limiter = st.limiter;
  opt.diag_every = cfg.diag_every;

  RungResult rr;
  rr.dt_used = cfg.dt > 0.0 ? cfg.dt : stable_dt(*space, cfg.alpha);
  if (want_outputs) {
    opt.snapshot_times = cfg.snapshots.empty()
                             ? std::vector<double>{cfg.t_final}
                             : cfg.snapshots;
    opt.on_diagnostic = [&rr](const StepRecord& r) { rr.records.push_back(r); };
    opt.on_snapshot = [&rr, &cfg](double t, const DGField& u) {
      rr.snapshots.emplace_back(t, format_solution_csv(u, cfg.samples));
    };
  }
  rr.result = integrate(*scheme, state, opt);

  if (!rr.result.failed && st.exact_usable) {
    const DGField u = scheme->reconstruct_u(state);
    const double t_end = rr.result.t_end;
    const auto& exact = st.problem.exact;
    rr.error = error_norms(u, [&](double x) { return exact(x, t_end); });
    rr.has_error = true;
  }
  return rr;
}

std::string scheme_blurb(SchemeId id) {
  std::string s = scheme_name(id);
  s += scheme_is_dissipative(id) ? " (dissipative, " : " (conservative, ";
  s += scheme_evolves_w(id) ? "evolves w = u - u_xx)" : "evolves u)";
  return s;
}

void echo_config(std::ostringstream& os, const RunConfig& cfg, const Setup& st,
                 const RungResult* rung) {
  os << "problem   : " << cfg.problem << " on [" << num(st.a) << ", "
     << num(st.b) << "], p = " << st.p;
  if (cfg.has_domain) os << " (domain overridden)";
  os << '\n';
  os << "scheme    : " << scheme_blurb(cfg.scheme) << ", degree " << cfg.degree
     << '\n';
  if (cfg.convergence.empty()) {
    os << "mesh      : " << cfg.cells << " cells";
  } else {
    os << "mesh      : refinement ladder";
    for (std::size_t i = 0; i < cfg.convergence.size(); ++i)
      os << (i == 0 ? ' ' : ',') << cfg.convergence[i];
    os << " cells";
  }
  if (cfg.perturb > 0.0)
    os << ", edges perturbed by up to " << num(100.0 * cfg.perturb)
       << "% (seed " << cfg.seed << ")";
  else
    os << ", uniform";
  os << '\n';
  os << "time      : t_final = " << num(cfg.t_final);
  if (cfg.dt > 0.0)
    os << ", dt = " << num(cfg.dt) << " (fixed)";
  else if (rung != nullptr)
    os << ", dt = " << num(rung->dt_used) << " (from alpha = "
       << num(cfg.alpha) << ")";
  else
    os << ", dt from alpha = " << num(cfg.alpha);
  os << '\n';
  os << "limiter   : ";
  if (cfg.limiter_m >= 0.0) {
    os << "TVB minmod, M = " << num(cfg.limiter_m);
    if (cfg.limit_u && scheme_evolves_w(cfg.scheme))
      os << ", applied to the reconstructed u";
  } else {
    os << "off";
  }
  os << '\n';
  os << "forcing   : ";
  if (st.source)
    os << "analytic source on";
  else if (st.problem.has_source() && cfg.no_source)
    os << "switched off (--no-source)";
  else
    os << "none";
  os << '\n';
  os << "initial   : catalog data";
  if (cfg.u0_offset != 0.0) os << " + " << num(cfg.u0_offset);
  os << '\n';
  os << "kernels   : "
     << (st.exec == Exec::openmp
             ? "OpenMP with " + std::to_string(max_threads()) + " thread(s)"
             : "serial")
     << ", solves " << (cfg.no_verify ? "unchecked" : "residual-checked")
     << '\n';
  if (cfg.convergence.empty())
    os << "output    : " << cfg.samples
       << " sample(s) per cell, diagnostics every " << cfg.diag_every
       << " step(s)\n";
  for (const std::string& w : cfg.warnings) os << "note      : " << w << '\n';
}

void describe_failure(std::ostringstream& os, const IntegrateResult& res) {
  os << "status    : ABORTED - non-finite state in stage "
     << res.failure_stage + 1 << " of step " << res.failure_step << " (t = "
     << num(res.failure_time) << "); partial output was written\n";
}

void invariant_lines(std::ostringstream& os, const Energies& first,
                     const Energies& last,
                     const std::vector<StepRecord>& records) {
  const auto line = [&os](const char* name, double e0, double e1) {
    os << "  " << name << "  " << fmt("% .16e", e0) << " -> "
       << fmt("% .16e", e1) << "   change " << fmt("% .3e", e1 - e0);
    if (std::abs(e0) > 1e-12)  // a relative figure is noise near zero
      os << "  (" << fmt("%.3e", std::abs(e1 - e0) / std::abs(e0))
         << " relative)";
    os << '\n';
  };
  os << "invariants (initial -> final):\n";
  line("E0", first.e0, last.e0);
  line("E1", first.e1, last.e1);
  line("E2", first.e2, last.e2);
  if (records.size() > 1) {
    double fluct = 0.0;
    for (const StepRecord& r : records)
      fluct = std::max(fluct, std::abs(r.energy.e2 - records.front().energy.e2));
    os << "  max |E2(t) - E2(0)| over records: " << fmt("%.6e", fluct) << '\n';
  }
}

std::string single_report(const RunConfig& cfg, const Setup& st,
                          const RungResult& rr,
                          const std::vector<std::string>& files) {
  std::ostringstream os;
  os << "run report\n==========\n";
  echo_config(os, cfg, st, &rr);
  os << "steps     : " << rr.result.steps << ", reached t = "
     << num(rr.result.t_end) << '\n';
  os << "wall      : " << fmt("%.3f", rr.result.wall_seconds) << " s\n";
  invariant_lines(os, rr.result.first_energy, rr.result.last_energy,
                  rr.records);
  if (rr.has_error)
    os << "error vs closed form at t = " << num(rr.result.t_end)
       << ": L2 = " << fmt("%.6e", rr.error.l2) << ", Linf = "
       << fmt("%.6e", rr.error.linf) << '\n';
  if (rr.result.failed)
    describe_failure(os, rr.result);
  else
    os << "status    : completed\n";
  os << "files     :";
  for (const std::string& f : files)
    os << ' ' << std::filesystem::path(f).filename().string();
  os << " report.txt\n";
  return os.str();
}

std::string ladder_report(const RunConfig& cfg, const Setup& st,
                          const std::vector<ConvergenceRow>& rows,
                          const IntegrateResult& last, int failed_cells) {
  std::ostringstream os;
  os << "refinement study\n================\n";
  echo_config(os, cfg, st, nullptr);
  os << '\n' << format_convergence_table(rows);
  if (failed_cells > 0) {
    os << '\n';
    os << "rung at " << failed_cells << " cells:\n";
    describe_failure(os, last);
  } else {
    os << "\nstatus    : completed\n";
  }
  os << "files     : convergence.csv report.txt\n";
  return os.str();
}

}  // namespace

std::string format_solution_csv(const DGField& u, int samples_per_cell) {
  const DGSpace& sp = *u.space();
  std::string out = "x,u\n";
  char line[80];
  for (int j = 0; j < sp.n_cells(); ++j) {
    for (int i = 0; i < samples_per_cell; ++i) {
      const double xi = samples_per_cell == 1
                            ? 0.0
                            : -1.0 + 2.0 * i / (samples_per_cell - 1);
      std::snprintf(line, sizeof line, "%.16e,%.16e\n", sp.mesh.x_of(j, xi),
                    u.eval_ref(j, xi));
      out += line;
    }
  }
  return out;
}

std::string format_diagnostics_csv(const std::vector<StepRecord>& records) {
  std::string out = "t,E0,E1,E2,dE2_step\n";
  char line[160];
  for (const StepRecord& r : records) {
    std::snprintf(line, sizeof line, "%.16e,%.16e,%.16e,%.16e,%.16e\n", r.t,
                  r.energy.e0, r.energy.e1, r.energy.e2, r.de2);
    out += line;
  }
  return out;
}

std::string format_convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "N,l2_error,l2_order,linf_error,linf_order\n";
  char line[200];
  for (const ConvergenceRow& r : rows) {
    if (r.has_order)
      std::snprintf(line, sizeof line, "%d,%.16e,%.6f,%.16e,%.6f\n", r.cells,
                    r.l2_error, r.l2_order, r.linf_error, r.linf_order);
    else
      std::snprintf(line, sizeof line, "%d,%.16e,,%.16e,\n", r.cells,
                    r.l2_error, r.linf_error);
    out += line;
  }
  return out;
}

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows) {
  char line[200];
  std::snprintf(line, sizeof line, "%6s  %14s  %6s  %14s  %6s\n", "N",
                "L2 error", "order", "Linf error", "order");
  std::string out = line;
  for (const ConvergenceRow& r : rows) {
    if (r.has_order)
      std::snprintf(line, sizeof line, "%6d  %14.6e  %6.2f  %14.6e  %6.2f\n",
                    r.cells, r.l2_error, r.l2_order, r.linf_error,
                    r.linf_order);
    else
      std::snprintf(line, sizeof line, "%6d  %14.6e  %6s  %14.6e  %6s\n",
                    r.cells, r.l2_error, "--", r.linf_error, "--");
    out += line;
  }
  return out;
}

std::string snapshot_filename(double t) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "solution_t%.12g.csv", t);
  return buf;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (os) {
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    os.flush();
  }
  if (!os) throw CliError(ExitCode::io_error, "could not write '" + path + "'");
}

RunOutcome run(const RunConfig& cfg, std::ostream& log) {
  const Setup st = resolve(cfg);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec)
    throw CliError(ExitCode::io_error, "could not create output directory '" +
                                           cfg.out_dir + "': " + ec.message());
  const auto out_path = [&cfg](const std::string& name) {
    return (fs::path(cfg.out_dir) / name).string();
  };

  RunOutcome out;
  if (cfg.convergence.empty()) {
    const RungResult rr = run_rung(cfg, st, cfg.cells, true);
    out.result = rr.result;
    out.error = rr.error;
    out.has_error = rr.has_error;
    for (const auto& [t, body] : rr.snapshots) {
      const std::string path = out_path(snapshot_filename(t));
      write_text_file(path, body);
      out.files.push_back(path);
    }
    const std::string diag_path = out_path("diagnostics.csv");
    write_text_file(diag_path, format_diagnostics_csv(rr.records));
    out.files.push_back(diag_path);
    const std::string report = single_report(cfg, st, rr, out.files);
    const std::string report_path = out_path("report.txt");
    write_text_file(report_path, report);
    out.files.push_back(report_path);
    log << report;
    return out;
  }

  int failed_cells = 0;
  for (const int cells : cfg.convergence) {
    const RungResult rr = run_rung(cfg, st, cells, false);
    out.result = rr.result;
    if (rr.result.failed || !rr.has_error) {
      out.result.failed = true;  // a rung without an error norm is a failure
      failed_cells = cells;
      break;
    }
    ConvergenceRow row;
    row.cells = cells;
    row.l2_error = rr.error.l2;
    row.linf_error = rr.error.linf;
    if (!out.rows.empty() && row.l2_error > 0.0 && row.linf_error > 0.0 &&
        out.rows.back().l2_error > 0.0 && out.rows.back().linf_error > 0.0) {
      const ConvergenceRow& prev = out.rows.back();
      const double ratio = std::log(double(cells) / prev.cells);
      row.l2_order = std::log(prev.l2_error / row.l2_error) / ratio;
      row.linf_order = std::log(prev.linf_error / row.linf_error) / ratio;
      row.has_order = true;
    }
    out.rows.push_back(row);
  }

  const std::string csv_path = out_path("convergence.csv");
  write_text_file(csv_path, format_convergence_csv(out.rows));
  out.files.push_back(csv_path);
  const std::string report =
      ladder_report(cfg, st, out.rows, out.result, failed_cells);
  const std::string report_path = out_path("report.txt");
  write_text_file(report_path, report);
  out.files.push_back(report_path);
  log << report;
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    const RunConfig cfg = parse_run_config(args);
    if (cfg.help) {
      out << cfg.help_text;
      return static_cast<int>(ExitCode::ok);
    }
    for (const std::string& w : cfg.warnings) err << "warning: " << w << '\n';
    const RunOutcome outcome = run(cfg, out);
    return static_cast<int>(outcome.result.failed ? ExitCode::run_failed
                                                  : ExitCode::ok);
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    // Anything escaping the library (failed solve verification, bad state)
    // counts as a run failure.
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::run_failed);
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace fwdg
