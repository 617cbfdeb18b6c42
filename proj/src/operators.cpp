#include "fwdg/operators.hpp"

#include <stdexcept>
#include <vector>

namespace fwdg {

namespace {

FluxKind trace_flavor_of(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::L_plus:
      return FluxKind::right_trace;
    case OperatorKind::L_minus:
      return FluxKind::left_trace;
    case OperatorKind::L_central:
      return FluxKind::central;
    default:
      throw std::invalid_argument("trace_flavor_of: nonlinear operator kind");
  }
}

FluxKind nonlinear_flavor_of(OperatorKind kind) {
  return kind == OperatorKind::N_dissipative ? FluxKind::godunov_f
                                             : FluxKind::conservative_f;
}

}  // namespace

NonlinearOp make_nonlinear_op(const DGSpace& space, int p, FluxKind flux) {
  if (flux != FluxKind::godunov_f && flux != FluxKind::conservative_f)
    throw std::invalid_argument("make_nonlinear_op: need a nonlinear flux kind");
  NonlinearOp op;
  op.p = p;
  op.flux = flux;
  op.quad = gauss_legendre(quadrature_order_for(space.degree, p));
  op.basis = tabulate_legendre(space.degree, op.quad.nodes);
  return op;
}

void linear_weak_vec(const DGField& w, FluxKind flavor, std::span<double> out,
                     Exec ex) {
  const auto& sp = *w.space();
  const int n = sp.n_cells(), K = sp.K();
  if (out.size() != sp.n_dof())
    throw std::invalid_argument("linear_weak_vec: output size mismatch");

  std::vector<TracePair> tp(n);
  interface_traces(w, tp, ex);
  std::vector<double> what(n);
  const double* S = sp.stiffness.data();

  auto flux_at = [&](int i) { return trace_flux(tp[i], flavor); };
  auto cell_out = [&](int j) {
    const auto c = w.cell(j);
    const double wl = what[sp.mesh.iface_left_of(j)];
    const double wr = what[sp.mesh.iface_right_of(j)];
    double sgn = 1.0;
    for (int m = 0; m < K; ++m, sgn = -sgn) {
      double vol = 0.0;
      // S[m][nn] = 2 for nn < m with odd gap, else 0.
      for (int nn = m - 1; nn >= 0; nn -= 2) vol += S[m * K + nn] * c[nn];
      out[static_cast<std::size_t>(j) * K + m] = -vol + wr - sgn * wl;
    }
  };

  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) what[i] = flux_at(i);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) cell_out(j);
    return;
#endif
  }
  for (int i = 0; i < n; ++i) what[i] = flux_at(i);
  for (int j = 0; j < n; ++j) cell_out(j);
}

void nonlinear_weak_vec(const DGField& u, const NonlinearOp& op,
                        std::span<double> out, Exec ex) {
  const auto& sp = *u.space();
  const int n = sp.n_cells(), K = sp.K();
  if (out.size() != sp.n_dof())
    throw std::invalid_argument("nonlinear_weak_vec: output size mismatch");
  if (op.basis.degree != sp.degree)
    throw std::invalid_argument("nonlinear_weak_vec: operator degree mismatch");

  std::vector<TracePair> tp(n);
  interface_traces(u, tp, ex);
  std::vector<double> fhat(n);

  const int nq = op.quad.size();
  auto flux_at = [&](int i) { return nonlinear_flux(tp[i], op.flux, op.p); };
  auto cell_out = [&](int j) {
    const auto c = u.cell(j);
    double fq[64] = {};
    for (int i = 0; i < nq; ++i) {
      double v = 0.0;
      for (int m = 0; m < K; ++m) v += c[m] * op.basis.v(m, i);
      fq[i] = op.quad.weights[i] * flux_value(v, op.p);
    }
    const double fl = fhat[sp.mesh.iface_left_of(j)];
    const double fr = fhat[sp.mesh.iface_right_of(j)];
    double sgn = 1.0;
    for (int m = 0; m < K; ++m, sgn = -sgn) {
      double vol = 0.0;
      for (int i = 0; i < nq; ++i) vol += fq[i] * op.basis.d(m, i);
      out[static_cast<std::size_t>(j) * K + m] = -vol + fr - sgn * fl;
    }
  };

  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) fhat[i] = flux_at(i);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) cell_out(j);
    return;
#endif
  }
  for (int i = 0; i < n; ++i) fhat[i] = flux_at(i);
  for (int j = 0; j < n; ++j) cell_out(j);
}

double apply_operator(OperatorKind kind, const DGField& w, const DGField& phi,
                      int p, Exec ex) {
  if (w.space() != phi.space())
    throw std::invalid_argument("apply_operator: fields on different spaces");
  std::vector<double> vec(w.space()->n_dof());
  if (kind == OperatorKind::N_dissipative || kind == OperatorKind::N_conservative) {
    const auto op = make_nonlinear_op(*w.space(), p, nonlinear_flavor_of(kind));
    nonlinear_weak_vec(w, op, vec, ex);
  } else {
    linear_weak_vec(w, trace_flavor_of(kind), vec, ex);
  }
  const auto pc = phi.data();
  double acc = 0.0;
  for (std::size_t i = 0; i < vec.size(); ++i) acc += vec[i] * pc[i];
  return acc;
}

void mass_solve(const DGSpace& space, std::span<double> vec, Exec ex) {
  const int n = space.n_cells(), K = space.K();
  if (vec.size() != space.n_dof())
    throw std::invalid_argument("mass_solve: size mismatch");
  auto cell = [&](int j) {
    const double invh = 1.0 / space.mesh.h(j);
    for (int m = 0; m < K; ++m)
      vec[static_cast<std::size_t>(j) * K + m] *= (2 * m + 1) * invh;
  };
  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) cell(j);
    return;
#endif
  }
  for (int j = 0; j < n; ++j) cell(j);
}

DGField rhs_contribution(OperatorKind kind, const DGField& w, int p, Exec ex) {
  DGField r(w.space());
  auto out = r.data();
  if (kind == OperatorKind::N_dissipative || kind == OperatorKind::N_conservative) {
    const auto op = make_nonlinear_op(*w.space(), p, nonlinear_flavor_of(kind));
    nonlinear_weak_vec(w, op, out, ex);
  } else {
    linear_weak_vec(w, trace_flavor_of(kind), out, ex);
  }
  mass_solve(*w.space(), out, ex);
  return r;
}

double jump_sq_sum(const DGField& w) {
  double acc = 0.0;
  for (const TracePair& t : interface_traces(w)) acc += t.jump() * t.jump();
  return acc;
}

double jump_pair_sum(const DGField& w, const DGField& phi) {
  if (w.space() != phi.space())
    throw std::invalid_argument("jump_pair_sum: fields on different spaces");
  const auto tw = interface_traces(w);
  const auto tp = interface_traces(phi);
  double acc = 0.0;
  for (std::size_t i = 0; i < tw.size(); ++i) acc += tw[i].jump() * tp[i].jump();
  return acc;
}

}  // namespace fwdg
