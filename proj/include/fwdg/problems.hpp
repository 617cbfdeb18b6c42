#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fwdg/projection.hpp"
#include "fwdg/scheme.hpp"

// Catalog of benchmark problems for the Fornberg-Whitham type equation:
// initial data, closed-form solutions where they exist, analytic forcing for
// the manufactured accuracy study, and default domains / nonlinearity powers.

namespace fwdg {

// Parameters of the periodic peaked traveling wave with speed s and shape
// parameter g.  The profile on one period is
//
//   phi(z) = d_plus exp(-|z|/2) + d_minus exp(|z|/2) + s - 4/3,  |z| <= Tp,
//
// extended 2*Tp-periodically; half_period is Tp.  The crest value is s (since
// d_plus + d_minus = 4/3) and the trough value, attained at |z| = Tp where
// the profile's slope vanishes, is the listed `trough`.  As g approaches the
// cusped-wave limit, d_minus -> 0 and half_period diverges; that limiting
// case is returned with half_period = infinity rather than rejected.
struct PeakedWaveParams {
  double d_plus = 0.0;
  double d_minus = 0.0;
  double half_period = 0.0;
  double trough = 0.0;
};

// Throws std::domain_error naming the offending radicand when (s, g) leaves
// the parameter region where both square roots are real.
PeakedWaveParams periodic_peakon_params(double s, double g);

struct Problem {
  std::string id;
  double a = 0.0, b = 1.0;  // periodic computational domain
  int p = 2;                // nonlinearity power in f(u) = u^p / p
  bool limiter_recommended = false;
  std::string notes;

  ScalarFn initial;                             // u(x, 0)
  std::function<double(double, double)> exact;  // u(x, t); empty when none
  SourceFn source_u;  // forcing of the u evolution (empty = homogeneous)
  SourceFn source_w;  // the same forcing mapped to the w evolution
  // Slope-kink abscissae inside [a, b) at time t (peaked waves only).
  std::function<std::vector<double>(double)> kinks_at;

  bool has_exact() const { return static_cast<bool>(exact); }
  bool has_source() const { return static_cast<bool>(source_u); }
  std::vector<double> kinks(double t) const {
    return kinks_at ? kinks_at(t) : std::vector<double>{};
  }
};

// Known ids: smooth_manufactured, shock1, shock2, two_soliton, single_peakon,
// periodic_peakon.  The speed s and shape g apply to the peaked-wave
// problems and are ignored elsewhere.  Throws std::invalid_argument for an
// unknown id (listing the catalog) and std::domain_error for peaked-wave
// parameters without a finite period.
Problem make_problem(const std::string& id, double s = 2.0, double g = 0.3);

const std::vector<std::string>& problem_ids();

// Two-soliton profile borrowed from the classical KdV benchmark, used here
// as initial data only (it solves a different dispersive equation, so no
// exact solution is attached to the two_soliton problem).  Evaluated in an
// overflow-safe exponent-shifted form valid over the whole [-50, 200] run.
double two_soliton_profile(double x, double t);

}  // namespace fwdg
