#pragma once

#include "fwdg/field.hpp"

// Interface flux catalog for f(u) = u^p / p with integer p >= 2.

namespace fwdg {

enum class FluxKind {
  godunov_f,       // exact Riemann flux for the convex/odd power flux
  conservative_f,  // entropy-conservative flux [[F]]/[[u]] in closed form
  left_trace,      // w^- (value from the lower cell)
  right_trace,     // w^+ (value from the upper cell)
  central,         // {{w}}
};

// f(u) = u^p / p.
double flux_value(double u, int p);
// Antiderivative F(u) = u^{p+1} / (p(p+1)), so F' = f.
double flux_primitive(double u, int p);

// Godunov flux: min of f over [ul, ur] when ul < ur, else max over [ur, ul].
// f' = u^{p-1}, so for odd p the flux is plain upwinding f(ul); for even p the
// only interior extremum is at u = 0.
double godunov_flux(double ul, double ur, int p);

// Closed form of [[F]]/[[u]]: (1/(p(p+1))) * sum_{m=0}^{p} ur^{p-m} ul^m.
// Evaluated as the sum for every argument pair; at ul == ur it reduces to
// f(ul) so no jump-size branching is needed.
double conservative_flux(double ul, double ur, int p);

// Linear trace flavors (left_trace / right_trace / central).
double trace_flux(const TracePair& t, FluxKind kind);

// Nonlinear flavors (godunov_f / conservative_f) applied to a trace pair.
double nonlinear_flux(const TracePair& t, FluxKind kind, int p);

}  // namespace fwdg
