#pragma once

#include <functional>
#include <memory>
#include <string>

#include "fwdg/field.hpp"

// Semi-discrete schemes for the Fornberg-Whitham type equation
//
//   u_t + f(u)_x + (1 - dxx)^{-1} u_x = 0,    f(u) = u^p / p,
//
// in two families of two schemes each:
//
//   D1 / C1 evolve u directly ("primal"); the nonlocal term v =
//   (1 - dxx)^{-1} u_x is obtained each evaluation from the first-order
//   system v - q_x = u_x, q = v_x.
//
//   D2 / C2 evolve w = u - u_xx ("transformed"), using the equivalent form
//   w_t + f(u)_x + u_x = f(u)_xxx; u is reconstructed from w through the
//   elliptic system u - r_x = w, r = u_x, and the right hand side through
//   the chain s = f(u)_x, p = s_x - u, w_t = p_x - s.
//
// The D-variants take one-sided traces plus a godunov flux and dissipate
// the squared L2 norm of u; the C-variants take central traces plus an
// entropy conservative flux and conserve it.  Both families conserve the
// integral of the evolved variable exactly (flux telescoping).

namespace fwdg {

enum class SchemeId { d1, c1, d2, c2 };

std::string scheme_name(SchemeId id);
SchemeId parse_scheme(const std::string& name);  // case-insensitive, throws
bool scheme_is_dissipative(SchemeId id);
bool scheme_evolves_w(SchemeId id);

// Integral invariants reported by the diagnostics: e0 = integral of u,
// e1 = integral of the evolved variable, e2 = integral of u^2.
struct Energies {
  double e0 = 0.0, e1 = 0.0, e2 = 0.0;
};

// Space-time source g(x, t) added to the evolution equation; an empty
// function means the homogeneous equation.  The transformed family expects
// the source already mapped to its equation, i.e. (1 - dxx) applied.
using SourceFn = std::function<double(double, double)>;

struct SchemeConfig {
  SchemeId id = SchemeId::d1;
  int p = 2;
  SourceFn source;            // source of the evolved variable's equation
  bool verify_solves = true;  // residual-check every linear solve
  bool limit_u = false;       // transformed family: limit u instead of w
  Exec exec = Exec::serial;
};

class TVBLimiter;  // defined in time_loop.hpp

class Scheme {
 public:
  virtual ~Scheme() = default;
  Scheme(const Scheme&) = delete;
  Scheme& operator=(const Scheme&) = delete;

  const SpacePtr& space() const { return space_; }
  SchemeId id() const { return cfg_.id; }
  int power() const { return cfg_.p; }
  bool dissipative() const { return scheme_is_dissipative(cfg_.id); }

  // Map a projected initial condition for u to the evolved state.
  virtual DGField initial_state(const DGField& u0) const = 0;
  // Recover u from the evolved state.
  virtual DGField reconstruct_u(const DGField& state) const = 0;
  // Time derivative of the evolved state.
  virtual void rhs(const DGField& state, double t, DGField& out) const = 0;
  // Time derivative of u (identical to rhs for the primal family).
  virtual DGField du_dt(const DGField& state, double t) const = 0;
  virtual Energies energies(const DGField& state) const = 0;
  // Quadratic identity satisfied by the auxiliary variables (evaluated with
  // the source switched off); vanishes to roundoff for any state.
  virtual double auxiliary_residual(const DGField& state) const = 0;
  // Apply a slope limiter to the evolved state.
  virtual void limit_state(DGField& state, const TVBLimiter& lim) const = 0;

 protected:
  Scheme(SpacePtr space, SchemeConfig cfg);
  SpacePtr space_;
  SchemeConfig cfg_;
};

std::unique_ptr<Scheme> make_scheme(SpacePtr space, SchemeConfig cfg);

}  // namespace fwdg
