#include <utility>
#include <vector>

#include "fwdg/operators.hpp"
#include "fwdg/pair_solver.hpp"
#include "fwdg/time_loop.hpp"
#include "scheme_detail.hpp"

// D2 / C2: evolve w = u - u_xx.  u is recovered from the elliptic system
//
//   M u - A_r r = M w,      M r - A_u u = 0,
//
// and the state derivative follows the chain
//
//   M s = N(u),   M p = A_s s - M u,   M w_t = A_p p - M s (+ source),
//
// i.e. s = f(u)_x, p = s_x - u, w_t = p_x - s in weak form.  du/dt reuses
// the elliptic solver on the time-differentiated system, whose right hand
// side is M w_t.  D2 takes u and s from the right, r and p from the left,
// with a godunov flux in N; C2 takes central traces and the entropy
// conservative flux.

namespace fwdg {
namespace {

class TransformedScheme final : public Scheme {
 public:
  TransformedScheme(SpacePtr space, SchemeConfig cfg)
      : Scheme(std::move(space), std::move(cfg)),
        central_(cfg_.id == SchemeId::c2),
        op_(make_nonlinear_op(
            *space_, cfg_.p,
            central_ ? FluxKind::conservative_f : FluxKind::godunov_f)),
        u_flavor_(central_ ? FluxKind::central : FluxKind::right_trace),
        r_flavor_(central_ ? FluxKind::central : FluxKind::left_trace),
        s_flavor_(central_ ? FluxKind::central : FluxKind::right_trace),
        p_flavor_(central_ ? FluxKind::central : FluxKind::left_trace),
        ell_(space_, r_flavor_, u_flavor_) {}

  DGField initial_state(const DGField& u0) const override {
    // Exact elimination of r turns the elliptic system into
    // w = u - M^{-1} A_r M^{-1} A_u u, the discrete forward map.
    std::vector<double> vec(space_->n_dof());
    linear_weak_vec(u0, u_flavor_, vec, cfg_.exec);
    DGField r = detail::strong_form(space_, vec, cfg_.exec);
    linear_weak_vec(r, r_flavor_, vec, cfg_.exec);
    DGField z = detail::strong_form(space_, std::move(vec), cfg_.exec);
    DGField w(space_);
    lincomb(1.0, u0, -1.0, z, w, cfg_.exec);
    return w;
  }

  DGField reconstruct_u(const DGField& state) const override {
    DGField u(space_), r(space_);
    elliptic(state, u, r);
    return u;
  }

  void rhs(const DGField& state, double t, DGField& out) const override {
    if (out.space() != space_) out = DGField(space_);
    DGField u(space_), r(space_);
    elliptic(state, u, r);
    DGField s(space_), p(space_);
    chain(u, t, /*with_source=*/true, s, p, out);
  }

  DGField du_dt(const DGField& state, double t) const override {
    DGField wt(space_);
    rhs(state, t, wt);
    DGField ut(space_), rt(space_);
    elliptic(wt, ut, rt);
    return ut;
  }

  Energies energies(const DGField& state) const override {
    DGField u = reconstruct_u(state);
    return {integral(u), integral(state), l2sq(u)};
  }

  double auxiliary_residual(const DGField& state) const override {
    DGField u(space_), r(space_), s(space_), p(space_), wt(space_);
    elliptic(state, u, r);
    chain(u, 0.0, /*with_source=*/false, s, p, wt);
    DGField ut(space_), rt(space_);
    elliptic(wt, ut, rt);
    DGField su(space_), pr(space_);
    lincomb(1.0, s, 1.0, ut, su, cfg_.exec);
    lincomb(1.0, p, 1.0, rt, pr, cfg_.exec);
    return l2sq(su) + l2sq(pr) + inner(u, pr);
  }

  void limit_state(DGField& state, const TVBLimiter& lim) const override {
    if (cfg_.limit_u) {
      DGField u = reconstruct_u(state);
      lim.apply(u, cfg_.exec);
      state = initial_state(u);
    } else {
      lim.apply(state, cfg_.exec);
    }
  }

 private:
  // Solve for (x1, x2) with M x1 - A_r x2 = M b, M x2 - A_u x1 = 0; this is
  // both the reconstruction (b = w) and its time derivative (b = w_t).
  void elliptic(const DGField& b, DGField& x1, DGField& x2) const {
    std::vector<double> b1(space_->n_dof()), b2(space_->n_dof(), 0.0);
    for (int j = 0; j < space_->n_cells(); ++j)
      for (int m = 0; m < space_->K(); ++m)
        b1[static_cast<std::size_t>(j) * space_->K() + m] =
            space_->mass(j, m) * b.coeff(j, m);
    ell_.solve(b1, b2, x1, x2, cfg_.verify_solves);
  }

  void chain(const DGField& u, double t, bool with_source, DGField& s,
             DGField& p, DGField& wt) const {
    std::vector<double> vec(space_->n_dof());
    nonlinear_weak_vec(u, op_, vec, cfg_.exec);
    s = detail::strong_form(space_, vec, cfg_.exec);
    linear_weak_vec(s, s_flavor_, vec, cfg_.exec);
    DGField tmp = detail::strong_form(space_, vec, cfg_.exec);
    lincomb(1.0, tmp, -1.0, u, p, cfg_.exec);
    linear_weak_vec(p, p_flavor_, vec, cfg_.exec);
    tmp = detail::strong_form(space_, std::move(vec), cfg_.exec);
    lincomb(1.0, tmp, -1.0, s, wt, cfg_.exec);
    if (with_source && cfg_.source) {
      DGField g = detail::project_source(space_, cfg_.source, t);
      lincomb(1.0, wt, 1.0, g, wt, cfg_.exec);
    }
  }

  bool central_;
  NonlinearOp op_;
  FluxKind u_flavor_, r_flavor_, s_flavor_, p_flavor_;
  PairSolver ell_;
};

}  // namespace

namespace detail {
std::unique_ptr<Scheme> make_transformed_scheme(SpacePtr space,
                                                SchemeConfig cfg) {
  return std::make_unique<TransformedScheme>(std::move(space), std::move(cfg));
}
}  // namespace detail

}  // namespace fwdg
