#include "fwdg/basis.hpp"

#include <stdexcept>

namespace fwdg {

double legendre(int m, double x) {
  if (m == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int i = 1; i < m; ++i) {
    const double pp = ((2 * i + 1) * x * p - i * pm1) / (i + 1);
    pm1 = p;
    p = pp;
  }
  return p;
}

double legendre_deriv(int m, double x) {
  if (m == 0) return 0.0;
  double pm1 = 1.0, p = x;
  double dm1 = 0.0, dp = 1.0;
  for (int i = 1; i < m; ++i) {
    const double pp = ((2 * i + 1) * x * p - i * pm1) / (i + 1);
    const double dpp = dm1 + (2 * i + 1) * p;
    pm1 = p;
    p = pp;
    dm1 = dp;
    dp = dpp;
  }
  return dp;
}

double legendre_sum(std::span<const double> c, double x) {
  const int k = static_cast<int>(c.size()) - 1;
  if (k < 0) throw std::invalid_argument("legendre_sum: empty coefficients");
  double acc = c[0];
  if (k >= 1) acc += c[1] * x;
  double pm1 = 1.0, p = x;
  for (int m = 1; m < k; ++m) {
    const double pp = ((2 * m + 1) * x * p - m * pm1) / (m + 1);
    pm1 = p;
    p = pp;
    acc += c[m + 1] * pp;
  }
  return acc;
}

BasisTable tabulate_legendre(int degree, std::span<const double> pts) {
  if (degree < 0) throw std::invalid_argument("tabulate_legendre: degree < 0");
  BasisTable t;
  t.degree = degree;
  t.npts = static_cast<int>(pts.size());
  t.val.resize(static_cast<std::size_t>(degree + 1) * t.npts);
  t.der.resize(t.val.size());
  for (int i = 0; i < t.npts; ++i) {
    const double x = pts[i];
    double pm1 = 1.0, p = x;
    double dm1 = 0.0, dp = 1.0;
    t.val[0 * t.npts + i] = 1.0;
    t.der[0 * t.npts + i] = 0.0;
    if (degree >= 1) {
      t.val[1 * t.npts + i] = x;
      t.der[1 * t.npts + i] = 1.0;
    }
    for (int m = 1; m < degree; ++m) {
      const double pp = ((2 * m + 1) * x * p - m * pm1) / (m + 1);
      const double dpp = dm1 + (2 * m + 1) * p;
      pm1 = p;
      p = pp;
      dm1 = dp;
      dp = dpp;
      t.val[static_cast<std::size_t>(m + 1) * t.npts + i] = pp;
      t.der[static_cast<std::size_t>(m + 1) * t.npts + i] = dpp;
    }
  }
  return t;
}

std::vector<double> legendre_stiffness(int degree) {
  const int K = degree + 1;
  std::vector<double> s(static_cast<std::size_t>(K) * K, 0.0);
  for (int m = 0; m < K; ++m)
    for (int n = 0; n < K; ++n)
      if (m > n && (m - n) % 2 == 1) s[static_cast<std::size_t>(m) * K + n] = 2.0;
  return s;
}

}  // namespace fwdg
