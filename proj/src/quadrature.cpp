#include "fwdg/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fwdg {

namespace {

// Value and derivative of P_n at x via the three-term recurrence and
// P'_{m+1} = P'_{m-1} + (2m+1) P_m.
struct PD {
  double p, dp;
};

PD legendre_pd(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double pm1 = 1.0, p = x;    // P_0, P_1
  double dm1 = 0.0, dp = 1.0;  // P_0', P_1'
  for (int m = 1; m < n; ++m) {
    const double pp = ((2 * m + 1) * x * p - m * pm1) / (m + 1);
    const double dpp = dm1 + (2 * m + 1) * p;
    pm1 = p;
    p = pp;
    dm1 = dp;
    dp = dpp;
  }
  return {p, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 32)
    throw std::invalid_argument("gauss_legendre: point count " +
                                std::to_string(n) + " outside [1, 32]");
  QuadratureRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);

  // Find the roots in (0, 1]; mirror onto (-1, 0).  Root i (from the top) has
  // the classical initial guess cos(pi*(i + 3/4)/(n + 1/2)).
  for (int i = 0; i < n / 2 + (n % 2); ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    if (2 * i + 1 == n) x = 0.0;  // middle root of an odd rule is exactly 0
    bool converged = false;
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      const PD pd = legendre_pd(n, x);
      dp = pd.dp;
      const double dx = pd.p / pd.dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("gauss_legendre: Newton iteration stalled");
    dp = legendre_pd(n, x).dp;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Store ascending; x here is the (i+1)-th largest root.
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = w;
    r.nodes[i] = -x;
    r.weights[i] = w;
  }
  return r;
}

int quadrature_order_for(int degree, int power) {
  if (degree < 0) throw std::invalid_argument("quadrature_order_for: degree < 0");
  if (power < 1) throw std::invalid_argument("quadrature_order_for: power < 1");
  // 2n-1 >= (power+1)*degree  =>  n >= ((power+1)*degree + 1) / 2.
  const int need = ((power + 1) * degree + 1 + 1) / 2;  // ceil
  return std::max(need, degree + 1);
}

}  // namespace fwdg
