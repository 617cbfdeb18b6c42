#pragma once

#include <span>
#include <vector>

// Legendre polynomial evaluation and cached tables on [-1, 1].
// The modal basis on each cell is P_0..P_k in the cell's reference coordinate;
// (P_m, P_n) = 2/(2m+1) delta_mn, P_m(1) = 1, P_m(-1) = (-1)^m.

namespace fwdg {

// P_m(x) by the three-term recurrence.
double legendre(int m, double x);

// d/dx P_m(x).
double legendre_deriv(int m, double x);

// Sum_{m<=k} c[m] P_m(x); c has k+1 entries.
double legendre_sum(std::span<const double> c, double x);

// Values and derivatives of P_0..P_degree at a fixed set of points.
struct BasisTable {
  int degree = 0;
  int npts = 0;
  std::vector<double> val;  // [m*npts + i] = P_m(x_i)
  std::vector<double> der;  // [m*npts + i] = P_m'(x_i)

  double v(int m, int i) const { return val[m * npts + i]; }
  double d(int m, int i) const { return der[m * npts + i]; }
};

BasisTable tabulate_legendre(int degree, std::span<const double> pts);

// Reference stiffness integrals S[m*(k+1)+n] = \int_{-1}^{1} P_n P_m' dxi.
// Closed form: 2 when m > n and m-n is odd, else 0.
std::vector<double> legendre_stiffness(int degree);

}  // namespace fwdg
