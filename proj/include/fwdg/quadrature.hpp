#pragma once

#include <vector>

// Gauss-Legendre quadrature on the reference interval [-1, 1].

namespace fwdg {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly ascending, all in (-1, 1)
  std::vector<double> weights;  // positive, symmetric, sum to 2

  int size() const { return static_cast<int>(nodes.size()); }
};

// n-point Gauss-Legendre rule, exact for polynomials of degree 2n-1.
// Nodes are the roots of P_n found by Newton iteration on the Legendre
// recurrence (tolerance 1e-15, at most 100 iterations).  n must be in [1, 32].
QuadratureRule gauss_legendre(int n);

// Smallest point count n such that a 2n-1 degree-exact rule integrates
// products arising from a degree-`degree` field under f(u) = u^power/power,
// i.e. 2n-1 >= (power+1)*degree, floored at degree+1 so the linear terms are
// always exact as well.
int quadrature_order_for(int degree, int power);

}  // namespace fwdg
