#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "fwdg/basis.hpp"
#include "fwdg/mesh.hpp"
#include "fwdg/quadrature.hpp"

using namespace fwdg;

namespace {
double quad_integral(const QuadratureRule& q, double (*f)(double)) {
  double acc = 0.0;
  for (int i = 0; i < q.size(); ++i) acc += q.weights[i] * f(q.nodes[i]);
  return acc;
}
}  // namespace

TEST_SUITE("mesh_quadrature") {

TEST_CASE("two point rule has the textbook nodes") {
  const auto q = gauss_legendre(2);
  CHECK(std::abs(q.nodes[0] + 0.5773502691896257) <= 1e-15);
  CHECK(std::abs(q.nodes[1] - 0.5773502691896257) <= 1e-15);
  CHECK(std::abs(q.weights[0] - 1.0) <= 1e-15);
  CHECK(std::abs(q.weights[1] - 1.0) <= 1e-15);
}

TEST_CASE("five point rule matches tabulated nodes and weights") {
  const auto q = gauss_legendre(5);
  const double nodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                           0.5384693101056831, 0.9061798459386640};
  const double weights[5] = {0.2369268850561891, 0.4786286704993665,
                             0.5688888888888889, 0.4786286704993665,
                             0.2369268850561891};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(q.nodes[i] - nodes[i]) <= 2e-15);
    CHECK(std::abs(q.weights[i] - weights[i]) <= 2e-15);
  }
}

TEST_CASE("rules are symmetric, interior, ascending, and normalized") {
  for (int n = 1; n <= 32; ++n) {
    const auto q = gauss_legendre(n);
    REQUIRE(q.size() == n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(q.nodes[i] > -1.0);
      CHECK(q.nodes[i] < 1.0);
      CHECK(q.weights[i] > 0.0);
      if (i > 0) CHECK(q.nodes[i] > q.nodes[i - 1]);
      CHECK(q.nodes[i] == -q.nodes[n - 1 - i]);       // exact mirror placement
      CHECK(q.weights[i] == q.weights[n - 1 - i]);
      wsum += q.weights[i];
    }
    CHECK(std::abs(wsum - 2.0) <= 1e-14);
  }
}

TEST_CASE("degree 2n-1 exactness") {
  const auto q3 = gauss_legendre(3);
  CHECK(std::abs(quad_integral(q3, [](double x) { return x * x * x * x; }) - 0.4) <= 1e-15);
  CHECK(std::abs(quad_integral(q3, [](double x) { return x * x * x * x * x; })) <= 1e-15);
  const auto q5 = gauss_legendre(5);
  CHECK(std::abs(quad_integral(q5, [](double x) { return std::pow(x, 8); }) - 2.0 / 9.0) <= 1e-15);
  // One degree past exactness must NOT integrate exactly: x^6 with 3 points.
  CHECK(std::abs(quad_integral(q3, [](double x) { return std::pow(x, 6); }) - 2.0 / 7.0) > 1e-3);
}

TEST_CASE("quadrature point count for nonlinear terms") {
  CHECK(quadrature_order_for(2, 3) == 5);
  CHECK(quadrature_order_for(0, 2) == 1);
  CHECK(quadrature_order_for(3, 2) == 5);
  CHECK(quadrature_order_for(1, 2) == 2);
  CHECK(quadrature_order_for(4, 4) == 11);
  // The floor keeps linear products exact even for power 1.
  CHECK(quadrature_order_for(3, 1) == 4);
  CHECK_THROWS_AS(quadrature_order_for(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(33), std::invalid_argument);
}

TEST_CASE("legendre endpoint values and stiffness table") {
  for (int m = 0; m <= 8; ++m) {
    CHECK(std::abs(legendre(m, 1.0) - 1.0) <= 1e-15);
    CHECK(std::abs(legendre(m, -1.0) - (m % 2 == 0 ? 1.0 : -1.0)) <= 1e-15);
  }
  // Closed-form stiffness against direct quadrature.
  const int k = 5;
  const auto S = legendre_stiffness(k);
  const auto q = gauss_legendre(k + 1);
  for (int m = 0; m <= k; ++m)
    for (int n = 0; n <= k; ++n) {
      double acc = 0.0;
      for (int i = 0; i < q.size(); ++i)
        acc += q.weights[i] * legendre(n, q.nodes[i]) * legendre_deriv(m, q.nodes[i]);
      CHECK(std::abs(S[m * (k + 1) + n] - acc) <= 1e-13);
    }
}

TEST_CASE("basis table matches pointwise evaluation") {
  const auto q = gauss_legendre(7);
  const auto t = tabulate_legendre(4, q.nodes);
  for (int m = 0; m <= 4; ++m)
    for (int i = 0; i < q.size(); ++i) {
      CHECK(std::abs(t.v(m, i) - legendre(m, q.nodes[i])) <= 1e-15);
      CHECK(std::abs(t.d(m, i) - legendre_deriv(m, q.nodes[i])) <= 1e-14);
    }
}

TEST_CASE("uniform mesh geometry") {
  const auto m = build_mesh(0.0, 2.0 * M_PI, 10);
  REQUIRE(m.n_cells() == 10);
  CHECK(m.edges.front() == 0.0);
  CHECK(m.edges.back() == 2.0 * M_PI);
  for (int j = 0; j < 10; ++j) CHECK(std::abs(m.h(j) - M_PI / 5.0) <= 1e-14);
  CHECK(std::abs(m.x_of(0, -1.0) - 0.0) <= 1e-15);
  CHECK(std::abs(m.x_of(0, 1.0) - M_PI / 5.0) <= 1e-14);
  CHECK(std::abs(m.h_min() - m.h_max()) <= 1e-14);
}

TEST_CASE("periodic interface indexing round-trips") {
  const auto m = build_mesh(-1.0, 1.0, 7);
  for (int j = 0; j < m.n_cells(); ++j) {
    CHECK(m.left_cell(m.iface_right_of(j)) == j);
    CHECK(m.right_cell(m.iface_left_of(j)) == j);
  }
  // Wrap interface: cell n-1 on the left, cell 0 on the right.
  CHECK(m.left_cell(0) == 6);
  CHECK(m.right_cell(0) == 0);
}

TEST_CASE("perturbed meshes are valid and deterministic") {
  const auto m1 = build_mesh(0.0, 1.0, 32, 0.3, 1234);
  const auto m2 = build_mesh(0.0, 1.0, 32, 0.3, 1234);
  const auto m3 = build_mesh(0.0, 1.0, 32, 0.3, 999);
  REQUIRE(m1.edges.size() == m2.edges.size());
  bool differs = false;
  for (std::size_t i = 0; i < m1.edges.size(); ++i) {
    CHECK(m1.edges[i] == m2.edges[i]);
    if (m1.edges[i] != m3.edges[i]) differs = true;
  }
  CHECK(differs);
  const double h = 1.0 / 32;
  for (int j = 0; j < m1.n_cells(); ++j) {
    CHECK(m1.h(j) > 0.0);
    // Each edge moves by < 0.3 h, so cell sizes stay within (0.4 h, 1.6 h).
    CHECK(m1.h(j) > 0.4 * h);
    CHECK(m1.h(j) < 1.6 * h);
  }
  CHECK(m1.edges.front() == 0.0);
  CHECK(m1.edges.back() == 1.0);
}

TEST_CASE("mesh argument validation") {
  CHECK_THROWS_AS(build_mesh(1.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(0.0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(0.0, 1.0, 4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(0.0, 1.0, 4, -0.1), std::invalid_argument);
}

}  // TEST_SUITE
