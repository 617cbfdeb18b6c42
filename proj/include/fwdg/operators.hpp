#pragma once

#include <span>

#include "fwdg/field.hpp"
#include "fwdg/flux.hpp"

// Elementwise weak derivative operators in coefficient space.
//
// For a field w and test function phi restricted to cell j,
//   L_j(w, phi) = -(w, phi_x)_{I_j} + what(j+1/2) phi^-(j+1/2)
//                                   - what(j-1/2) phi^+(j-1/2)
// and the nonlinear analog N_j uses f(w) with a godunov or conservative flux.
// The coefficient-space form is vec[j,m] = L_j(w, P_m); pairing with phi's
// coefficients gives the scalar weak form, and dividing by the diagonal mass
// matrix gives the strong-form contribution to a time derivative.  All physical
// h factors cancel inside vec (reference-coordinate volume integrals), so the
// same tables serve uniform and perturbed meshes.

namespace fwdg {

enum class OperatorKind {
  L_plus,          // what = w^+  (right trace)
  L_minus,         // what = w^-  (left trace)
  L_central,       // what = {{w}}
  N_dissipative,   // f hat = godunov
  N_conservative,  // f hat = entropy conservative
};

// Quadrature/basis context for volume integrals of f(u) = u^p/p against a
// degree-k test space; the point count makes degree (p+1)k integrands exact.
struct NonlinearOp {
  int p = 2;
  FluxKind flux = FluxKind::godunov_f;
  QuadratureRule quad;
  BasisTable basis;
};

NonlinearOp make_nonlinear_op(const DGSpace& space, int p, FluxKind flux);

// vec[j*K+m] = L_j(w, P_m) with the given trace flavor.
void linear_weak_vec(const DGField& w, FluxKind flavor, std::span<double> out,
                     Exec ex);

// vec[j*K+m] = N_j(u, P_m) with op's flux.
void nonlinear_weak_vec(const DGField& u, const NonlinearOp& op,
                        std::span<double> out, Exec ex);

// Scalar weak form summed over all cells.  p is used by the N_* kinds only.
double apply_operator(OperatorKind kind, const DGField& w, const DGField& phi,
                      int p = 2, Exec ex = Exec::serial);

// Field R with (R, phi) = sum_j L_j(w, phi) for every phi, i.e. M R = vec.
DGField rhs_contribution(OperatorKind kind, const DGField& w, int p = 2,
                         Exec ex = Exec::serial);

// Divide a weak-form vector by the diagonal mass matrix in place.
void mass_solve(const DGSpace& space, std::span<double> vec, Exec ex);

// Sum over interfaces of [[w]]^2 and [[w]][[phi]].
double jump_sq_sum(const DGField& w);
double jump_pair_sum(const DGField& w, const DGField& phi);

}  // namespace fwdg
