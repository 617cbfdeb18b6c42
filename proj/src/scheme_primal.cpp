#include <utility>
#include <vector>

#include "fwdg/operators.hpp"
#include "fwdg/pair_solver.hpp"
#include "fwdg/time_loop.hpp"
#include "scheme_detail.hpp"

// D1 / C1: evolve u directly.  Each right-hand-side evaluation solves the
// auxiliary system
//
//   M v - A_q q = A_u u,      M q - A_v v = 0
//
// for the nonlocal term v = (1 - dxx)^{-1} u_x and its derivative q = v_x,
// then assembles du/dt = -M^{-1} N(u) - v (+ projected source).  D1 takes
// q from the left, v from the right, u from the left, with a godunov flux
// in N; C1 takes central traces and the entropy conservative flux.

namespace fwdg {
namespace {

class PrimalScheme final : public Scheme {
 public:
  PrimalScheme(SpacePtr space, SchemeConfig cfg)
      : Scheme(std::move(space), std::move(cfg)),
        central_(cfg_.id == SchemeId::c1),
        op_(make_nonlinear_op(
            *space_, cfg_.p,
            central_ ? FluxKind::conservative_f : FluxKind::godunov_f)),
        aux_(space_, central_ ? FluxKind::central : FluxKind::left_trace,
             central_ ? FluxKind::central : FluxKind::right_trace),
        u_flavor_(central_ ? FluxKind::central : FluxKind::left_trace) {}

  DGField initial_state(const DGField& u0) const override { return u0; }
  DGField reconstruct_u(const DGField& state) const override { return state; }

  void rhs(const DGField& state, double t, DGField& out) const override {
    if (out.space() != space_) out = DGField(space_);
    DGField v(space_), q(space_);
    solve_aux(state, v, q);
    std::vector<double> nvec(space_->n_dof());
    nonlinear_weak_vec(state, op_, nvec, cfg_.exec);
    DGField nterm = detail::strong_form(space_, std::move(nvec), cfg_.exec);
    lincomb(-1.0, nterm, -1.0, v, out, cfg_.exec);
    if (cfg_.source) {
      DGField g = detail::project_source(space_, cfg_.source, t);
      lincomb(1.0, out, 1.0, g, out, cfg_.exec);
    }
  }

  DGField du_dt(const DGField& state, double t) const override {
    DGField out(space_);
    rhs(state, t, out);
    return out;
  }

  Energies energies(const DGField& state) const override {
    const double mass = integral(state);
    return {mass, mass, l2sq(state)};
  }

  double auxiliary_residual(const DGField& state) const override {
    DGField v(space_), q(space_);
    solve_aux(state, v, q);
    return l2sq(v) + l2sq(q) + inner(q, state);
  }

  void limit_state(DGField& state, const TVBLimiter& lim) const override {
    lim.apply(state, cfg_.exec);
  }

 private:
  void solve_aux(const DGField& u, DGField& v, DGField& q) const {
    std::vector<double> b1(space_->n_dof()), b2(space_->n_dof(), 0.0);
    linear_weak_vec(u, u_flavor_, b1, cfg_.exec);
    aux_.solve(b1, b2, v, q, cfg_.verify_solves);
  }

  bool central_;
  NonlinearOp op_;
  PairSolver aux_;
  FluxKind u_flavor_;
};

}  // namespace

namespace detail {
std::unique_ptr<Scheme> make_primal_scheme(SpacePtr space, SchemeConfig cfg) {
  return std::make_unique<PrimalScheme>(std::move(space), std::move(cfg));
}
}  // namespace detail

}  // namespace fwdg
