#pragma once

#include <vector>

#include "fwdg/field.hpp"
#include "fwdg/flux.hpp"
#include "fwdg/scheme.hpp"

// Independent dense re-implementation of the discrete operators and scheme
// derivatives, used to cross-check the production path.  Everything here is
// rebuilt from the definitions: basis values come from std::legendre,
// derivatives from the (x^2 - 1) P' relation with closed endpoint forms,
// volume terms from a Gauss rule with more points than production uses,
// fluxes from a candidate-set extremum search (godunov) or a reverse-order
// power sum (conservative), and linear systems are solved densely with full
// pivoting.  Agreement is expected to roundoff, not merely to discretization
// accuracy.

namespace fwdg::oracle {

// Row-major matrix of the linear weak derivative with the given trace
// flavor: (A c)[j*K + m] = L_j(c, P_m).
std::vector<double> dense_weak_matrix(const DGSpace& sp, FluxKind flavor);

// Row-major block matrix [[M, -A_up], [-A_low, M]] with unknowns interleaved
// per cell, size (2 n K)^2.
std::vector<double> dense_pair_matrix(const DGSpace& sp, FluxKind up,
                                      FluxKind low);

// Solve a dense row-major system with full-pivot LU.
std::vector<double> dense_solve(const std::vector<double>& a,
                                const std::vector<double>& b);

// Evolved state corresponding to an initial u.
DGField reference_initial_state(SchemeId id, const DGField& u0);

// State derivative, u recovered from the state, and du/dt.
DGField reference_rhs(SchemeId id, int p, const DGField& state, double t,
                      const SourceFn& source);
DGField reference_reconstruct_u(SchemeId id, const DGField& state);
DGField reference_du_dt(SchemeId id, int p, const DGField& state, double t,
                        const SourceFn& source);

// One three-stage step with the textbook convex combinations (no limiter).
DGField reference_rk3_step(SchemeId id, int p, const DGField& state, double t,
                           double dt, const SourceFn& source);

// Invariants evaluated with oracle arithmetic.
Energies reference_energies(SchemeId id, const DGField& state);

}  // namespace fwdg::oracle
