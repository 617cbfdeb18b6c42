#pragma once

#include <functional>
#include <vector>

#include "fwdg/scheme.hpp"

// Explicit time integration: third-order strong-stability-preserving
// Runge-Kutta with an optional TVB-corrected minmod limiter applied after
// every stage, plus a driver that lands exactly on requested snapshot times
// and the final time while recording invariants.

namespace fwdg {

// TVB-corrected minmod limiter acting on cell means and slopes: on cells
// where either one-sided offset is modified, the solution is replaced by the
// limited linear part.  Offsets smaller than M h^2 pass through unchanged,
// which preserves accuracy at smooth extrema.
class TVBLimiter {
 public:
  TVBLimiter() = default;  // disabled
  explicit TVBLimiter(double m);

  bool enabled() const { return enabled_; }
  double parameter() const { return m_; }
  void apply(DGField& u, Exec ex = Exec::serial) const;

 private:
  bool enabled_ = false;
  double m_ = 0.0;
};

// Time step from the mesh spacing: alpha * h_min^((k+1)/3) for k >= 2
// (matching the third-order-in-time stepper to the spatial order), plain
// alpha * h_min for k <= 1.
double stable_dt(const DGSpace& space, double alpha);

// One step of the three-stage scheme
//   y1 = y + dt L(y, t)
//   y2 = 3/4 y + 1/4 y1 + 1/4 dt L(y1, t + dt)
//   y  = 1/3 y + 2/3 y2 + 2/3 dt L(y2, t + dt/2).
// Returns -1 on success, otherwise the index of the first stage whose
// result is not finite (the state is left as produced by that stage).
int rk3_step(const Scheme& scheme, double t, double dt, DGField& state,
             const TVBLimiter& limiter);

struct StepRecord {
  long step = 0;
  double t = 0.0;
  Energies energy;
  double de2 = 0.0;  // change of e2 since the previous record
};

struct IntegrateOptions {
  double t_final = 1.0;
  double dt = 0.0;      // explicit step; 0 derives it from alpha
  double alpha = 0.1;
  TVBLimiter limiter;
  std::vector<double> snapshot_times;  // strictly increasing, in (0, t_final]
  int diag_every = 1;                  // record cadence in steps
  std::function<void(const StepRecord&)> on_diagnostic;
  std::function<void(double, const DGField&)> on_snapshot;  // receives u
};

struct IntegrateResult {
  long steps = 0;
  double t_end = 0.0;
  double wall_seconds = 0.0;
  Energies first_energy, last_energy;
  bool failed = false;       // a stage produced a non-finite state
  long failure_step = -1;    // 1-based step count at failure
  int failure_stage = -1;    // 0, 1 or 2
  double failure_time = 0.0; // start time of the failing step
};

IntegrateResult integrate(const Scheme& scheme, DGField& state,
                          const IntegrateOptions& opt);

}  // namespace fwdg
