#include "fwdg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fwdg {

namespace {

// \int_{-1}^{1} g(x(xi)) P_m(xi) dxi for m = 0..k on cell j, splitting the
// quadrature at any kink that falls strictly inside the cell.
void cell_moments(const DGSpace& sp, int j, const ScalarFn& g,
                  std::span<const double> kinks, std::span<double> mom) {
  const int K = sp.K();
  std::fill(mom.begin(), mom.end(), 0.0);
  const double xl = sp.mesh.edges[j], xr = sp.mesh.edges[j + 1];

  std::vector<double> cuts;  // reference coordinates of interior kinks
  for (double xk : kinks)
    if (xk > xl && xk < xr) {
      const double xi = (2.0 * xk - (xl + xr)) / (xr - xl);
      if (xi > -1.0 && xi < 1.0) cuts.push_back(xi);
    }

  if (cuts.empty()) {
    const auto& q = sp.quad_dense;
    const auto& bt = sp.basis_dense;
    for (int i = 0; i < q.size(); ++i) {
      const double gv = q.weights[i] * g(sp.mesh.x_of(j, q.nodes[i]));
      for (int m = 0; m < K; ++m) mom[m] += gv * bt.v(m, i);
    }
    return;
  }

  std::sort(cuts.begin(), cuts.end());
  cuts.insert(cuts.begin(), -1.0);
  cuts.push_back(1.0);
  const auto& q = sp.quad_dense;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double a = cuts[s], b = cuts[s + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    if (half <= 0.0) continue;
    for (int i = 0; i < q.size(); ++i) {
      const double xi = mid + half * q.nodes[i];
      const double gv = half * q.weights[i] * g(sp.mesh.x_of(j, xi));
      for (int m = 0; m < K; ++m) mom[m] += gv * legendre(m, xi);
    }
  }
}

}  // namespace

DGField project_l2(const SpacePtr& space, const ScalarFn& g,
                   std::span<const double> kinks) {
  if (!g) throw std::invalid_argument("project_l2: null function");
  DGField u(space);
  const int K = space->K();
  std::vector<double> mom(K);
  for (int j = 0; j < space->n_cells(); ++j) {
    cell_moments(*space, j, g, kinks, mom);
    auto c = u.cell(j);
    for (int m = 0; m < K; ++m) c[m] = 0.5 * (2 * m + 1) * mom[m];
  }
  return u;
}

DGField project_gauss_radau(const SpacePtr& space, const ScalarFn& g,
                            RadauSide side, std::span<const double> kinks) {
  if (!g) throw std::invalid_argument("project_gauss_radau: null function");
  const int k = space->degree;
  if (k == 0) return project_l2(space, g, kinks);

  DGField u(space);
  const int K = space->K();
  std::vector<double> mom(K);
  for (int j = 0; j < space->n_cells(); ++j) {
    cell_moments(*space, j, g, kinks, mom);
    auto c = u.cell(j);
    // Modes below k agree with the L2 projection; the top mode is fixed by the
    // endpoint collocation (P_m(1) = 1, P_m(-1) = (-1)^m).
    for (int m = 0; m < k; ++m) c[m] = 0.5 * (2 * m + 1) * mom[m];
    if (side == RadauSide::match_right) {
      double acc = g(space->mesh.edges[j + 1]);
      for (int m = 0; m < k; ++m) acc -= c[m];
      c[k] = acc;
    } else {
      double acc = g(space->mesh.edges[j]);
      double sgn = 1.0;
      for (int m = 0; m < k; ++m, sgn = -sgn) acc -= sgn * c[m];
      c[k] = (k % 2 == 0) ? acc : -acc;
    }
  }
  return u;
}

}  // namespace fwdg
