#include "fwdg/mesh.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace fwdg {

double Mesh1D::h_min() const {
  double m = h(0);
  for (int j = 1; j < n_cells(); ++j) m = std::min(m, h(j));
  return m;
}

double Mesh1D::h_max() const {
  double m = h(0);
  for (int j = 1; j < n_cells(); ++j) m = std::max(m, h(j));
  return m;
}

Mesh1D build_mesh(double a, double b, int n, double perturb, std::uint64_t seed) {
  if (!(b > a)) throw std::invalid_argument("build_mesh: requires b > a");
  if (n < 1) throw std::invalid_argument("build_mesh: requires at least 1 cell");
  if (perturb < 0.0 || perturb >= 0.5)
    throw std::invalid_argument("build_mesh: perturbation factor " +
                                std::to_string(perturb) + " outside [0, 0.5)");
  Mesh1D m;
  m.a = a;
  m.b = b;
  m.edges.resize(n + 1);
  const double h = (b - a) / n;
  for (int i = 0; i <= n; ++i) m.edges[i] = a + i * h;
  m.edges[0] = a;
  m.edges[n] = b;
  if (perturb > 0.0 && n > 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> shift(-perturb * h, perturb * h);
    for (int i = 1; i < n; ++i) m.edges[i] += shift(rng);
  }
  for (int i = 0; i < n; ++i)
    if (!(m.edges[i + 1] > m.edges[i]))
      throw std::runtime_error("build_mesh: edges not strictly increasing");
  return m;
}

}  // namespace fwdg
