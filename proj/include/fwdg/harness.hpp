#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fwdg/cli.hpp"
#include "fwdg/time_loop.hpp"

// Run orchestration and output writing.  A run produces CSV files whose
// bodies are deterministic functions of the configuration (byte-identical
// across repeats) plus a human-readable report; a refinement study replaces
// the solution/diagnostics files with a convergence table.

namespace fwdg {

// One rung of a refinement study.  Orders compare consecutive rungs through
// log(err_prev / err) / log(cells / cells_prev); the coarsest rung has none.
struct ConvergenceRow {
  int cells = 0;
  double l2_error = 0.0;
  double linf_error = 0.0;
  double l2_order = 0.0;
  double linf_order = 0.0;
  bool has_order = false;
};

// CSV and table bodies (pure formatting, no I/O).  Solution samples are
// equispaced in each cell including both cell endpoints, so interface jumps
// appear as repeated x values; `samples_per_cell == 1` samples midpoints.
std::string format_solution_csv(const DGField& u, int samples_per_cell);
std::string format_diagnostics_csv(const std::vector<StepRecord>& records);
std::string format_convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string format_convergence_table(const std::vector<ConvergenceRow>& rows);

// File name "solution_t<t>.csv" with t printed compactly (12 significant
// digits, trailing zeros trimmed).
std::string snapshot_filename(double t);

// Write `body` exactly (binary mode); throws CliError{io_error}.
void write_text_file(const std::string& path, const std::string& body);

struct RunOutcome {
  IntegrateResult result;            // last (or only) integration
  Norms error;                       // vs the closed-form solution at t_end
  bool has_error = false;            // error norms were computable
  std::vector<ConvergenceRow> rows;  // refinement study only
  std::vector<std::string> files;    // paths written, in writing order
};

// Execute one validated configuration end to end, writing everything under
// cfg.out_dir and mirroring the report to `log`.  An integration abort is
// reported through outcome.result.failed with all partial output written;
// setup and I/O problems throw CliError.
RunOutcome run(const RunConfig& cfg, std::ostream& log);

// Full driver: parse, run, report.  Returns the ExitCode value.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace fwdg
