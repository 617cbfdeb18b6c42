#include "fwdg/flux.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fwdg {

namespace {

void check_power(int p) {
  if (p < 2)
    throw std::invalid_argument("flux: power p = " + std::to_string(p) +
                                " must be an integer >= 2");
}

double powi(double x, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= x;
  return acc;
}

}  // namespace

double flux_value(double u, int p) {
  check_power(p);
  return powi(u, p) / p;
}

double flux_primitive(double u, int p) {
  check_power(p);
  return powi(u, p + 1) / (static_cast<double>(p) * (p + 1));
}

double godunov_flux(double ul, double ur, int p) {
  check_power(p);
  if (p % 2 == 1) return flux_value(ul, p);  // f' = u^{p-1} >= 0: pure upwind
  if (ul < ur) {
    // Minimum of the even-power f over [ul, ur]; interior minimum sits at 0.
    if (ul >= 0.0) return flux_value(ul, p);
    if (ur <= 0.0) return flux_value(ur, p);
    return 0.0;
  }
  // Maximum over [ur, ul] of a function convex on each side of 0: endpoints.
  return std::max(flux_value(ul, p), flux_value(ur, p));
}

double conservative_flux(double ul, double ur, int p) {
  check_power(p);
  double acc = 0.0;
  double ulm = 1.0;  // ul^m
  for (int m = 0; m <= p; ++m) {
    acc += powi(ur, p - m) * ulm;
    ulm *= ul;
  }
  return acc / (static_cast<double>(p) * (p + 1));
}

double trace_flux(const TracePair& t, FluxKind kind) {
  switch (kind) {
    case FluxKind::left_trace:
      return t.left;
    case FluxKind::right_trace:
      return t.right;
    case FluxKind::central:
      return t.avg();
    default:
      throw std::invalid_argument("trace_flux: nonlinear flux kind passed");
  }
}

double nonlinear_flux(const TracePair& t, FluxKind kind, int p) {
  switch (kind) {
    case FluxKind::godunov_f:
      return godunov_flux(t.left, t.right, p);
    case FluxKind::conservative_f:
      return conservative_flux(t.left, t.right, p);
    default:
      throw std::invalid_argument("nonlinear_flux: trace flux kind passed");
  }
}

}  // namespace fwdg
