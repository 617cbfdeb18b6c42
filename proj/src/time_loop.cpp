#include "fwdg/time_loop.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace fwdg {

namespace {

double minmod_tvb(double a, double b, double c, double threshold) {
  if (std::abs(a) <= threshold) return a;
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min(a, std::min(b, c));
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max(a, std::max(b, c));
  return 0.0;
}

}  // namespace

TVBLimiter::TVBLimiter(double m) : enabled_(true), m_(m) {
  if (m < 0.0) throw std::invalid_argument("limiter: M must be >= 0");
}

void TVBLimiter::apply(DGField& u, Exec ex) const {
  if (!enabled_ || u.K() < 2) return;
  const DGSpace& sp = *u.space();
  const int n = sp.n_cells();
  const int K = sp.K();

  // Only neighbor cell means enter the decision and means are never
  // modified, so a single in-place pass per cell is safe in any order.
  auto limit_cell = [&](int j) {
    const double mean = u.cell_mean(j);
    const double dp = u.cell_mean((j + 1) % n) - mean;
    const double dm = mean - u.cell_mean((j + n - 1) % n);
    const double right = u.value_right(j) - mean;
    const double left = mean - u.value_left(j);
    const double h = sp.mesh.h(j);
    const double threshold = m_ * h * h;
    const double lr = minmod_tvb(right, dp, dm, threshold);
    const double ll = minmod_tvb(left, dp, dm, threshold);
    if (lr == right && ll == left) return;
    u.coeff(j, 1) = 0.5 * (lr + ll);
    for (int m = 2; m < K; ++m) u.coeff(j, m) = 0.0;
  };

  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) limit_cell(j);
    return;
#endif
  }
  for (int j = 0; j < n; ++j) limit_cell(j);
}

double stable_dt(const DGSpace& space, double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("stable_dt: alpha must be > 0");
  const double h = space.mesh.h_min();
  const int k = space.degree;
  return k >= 2 ? alpha * std::pow(h, (k + 1) / 3.0) : alpha * h;
}

int rk3_step(const Scheme& scheme, double t, double dt, DGField& state,
             const TVBLimiter& limiter) {
  const SpacePtr& sp = scheme.space();
  DGField y0 = state;
  DGField k(sp);

  scheme.rhs(state, t, k);
  lincomb(1.0, state, dt, k, state, Exec::serial);
  if (!state.finite()) return 0;
  if (limiter.enabled()) scheme.limit_state(state, limiter);

  scheme.rhs(state, t + dt, k);
  lincomb(0.75, y0, 0.25, state, 0.25 * dt, k, state, Exec::serial);
  if (!state.finite()) return 1;
  if (limiter.enabled()) scheme.limit_state(state, limiter);

  scheme.rhs(state, t + 0.5 * dt, k);
  lincomb(1.0 / 3.0, y0, 2.0 / 3.0, state, 2.0 / 3.0 * dt, k, state,
          Exec::serial);
  if (!state.finite()) return 2;
  if (limiter.enabled()) scheme.limit_state(state, limiter);
  return -1;
}

IntegrateResult integrate(const Scheme& scheme, DGField& state,
                          const IntegrateOptions& opt) {
  if (opt.t_final <= 0.0)
    throw std::invalid_argument("integrate: t_final must be > 0");
  if (opt.dt < 0.0) throw std::invalid_argument("integrate: dt must be >= 0");
  if (opt.diag_every < 1)
    throw std::invalid_argument("integrate: diag cadence must be >= 1");
  for (std::size_t i = 0; i < opt.snapshot_times.size(); ++i) {
    const double s = opt.snapshot_times[i];
    if (s <= 0.0 || s > opt.t_final * (1.0 + 1e-12))
      throw std::invalid_argument(
          "integrate: snapshot times must lie in (0, t_final]");
    if (i > 0 && s <= opt.snapshot_times[i - 1])
      throw std::invalid_argument("integrate: snapshot times must increase");
  }

  const double base_dt =
      opt.dt > 0.0 ? opt.dt : stable_dt(*scheme.space(), opt.alpha);

  // Segment boundaries the loop must land on exactly.
  std::vector<double> targets = opt.snapshot_times;
  if (targets.empty() || targets.back() < opt.t_final * (1.0 - 1e-12))
    targets.push_back(opt.t_final);

  IntegrateResult res;
  const auto wall_start = std::chrono::steady_clock::now();

  if (opt.limiter.enabled()) scheme.limit_state(state, opt.limiter);

  double prev_e2 = 0.0;
  long last_recorded = -1;
  auto record = [&](long step, double t) {
    const Energies e = scheme.energies(state);
    if (last_recorded < 0) {
      res.first_energy = e;
      prev_e2 = e.e2;
    }
    if (opt.on_diagnostic)
      opt.on_diagnostic({step, t, e, last_recorded < 0 ? 0.0 : e.e2 - prev_e2});
    prev_e2 = e.e2;
    res.last_energy = e;
    last_recorded = step;
  };

  record(0, 0.0);

  double t = 0.0;
  long step = 0;
  for (double target : targets) {
    while (t < target) {
      double dt = base_dt;
      const double remaining = target - t;
      // Stretch the last step instead of leaving a sliver behind.
      if (remaining <= base_dt * (1.0 + 1e-9)) dt = remaining;
      const int bad_stage = rk3_step(scheme, t, dt, state, opt.limiter);
      ++step;
      if (bad_stage >= 0) {
        res.failed = true;
        res.failure_step = step;
        res.failure_stage = bad_stage;
        res.failure_time = t;
        res.steps = step;
        res.t_end = t;
        res.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          wall_start)
                .count();
        return res;
      }
      t = (dt == remaining) ? target : t + dt;
      if (step % opt.diag_every == 0) record(step, t);
    }
    const bool is_snapshot =
        !opt.snapshot_times.empty() &&
        std::find(opt.snapshot_times.begin(), opt.snapshot_times.end(),
                  target) != opt.snapshot_times.end();
    if (is_snapshot && opt.on_snapshot)
      opt.on_snapshot(target, scheme.reconstruct_u(state));
  }

  if (last_recorded != step) record(step, t);

  res.steps = step;
  res.t_end = t;
  res.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - wall_start)
                         .count();
  return res;
}

}  // namespace fwdg
