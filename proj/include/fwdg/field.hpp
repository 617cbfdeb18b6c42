#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fwdg/basis.hpp"
#include "fwdg/exec.hpp"
#include "fwdg/mesh.hpp"
#include "fwdg/quadrature.hpp"

// Discrete space and modal fields.  A DGField stores Legendre coefficients
// cell-major: c[j*(k+1) + m] multiplies P_m on cell j.  The mass matrix is
// diagonal, (P_m, P_m)_{I_j} = h_j/(2m+1).

namespace fwdg {

struct DGSpace {
  Mesh1D mesh;
  int degree = 1;

  QuadratureRule quad;        // degree+1 points: exact for basis products
  QuadratureRule quad_dense;  // dense rule for projections and error norms
  BasisTable basis;           // tabulated at quad
  BasisTable basis_dense;     // tabulated at quad_dense
  std::vector<double> stiffness;  // S[m*(k+1)+n] = \int P_n P_m' dxi

  int K() const { return degree + 1; }
  int n_cells() const { return mesh.n_cells(); }
  std::size_t n_dof() const { return static_cast<std::size_t>(n_cells()) * K(); }
  double mass(int j, int m) const { return mesh.h(j) / (2 * m + 1); }
};

using SpacePtr = std::shared_ptr<const DGSpace>;

SpacePtr make_space(Mesh1D mesh, int degree);

class DGField {
 public:
  DGField() = default;
  explicit DGField(SpacePtr space)
      : space_(std::move(space)), c_(space_->n_dof(), 0.0) {}

  const SpacePtr& space() const { return space_; }
  int K() const { return space_->K(); }
  int n_cells() const { return space_->n_cells(); }

  double& coeff(int j, int m) { return c_[static_cast<std::size_t>(j) * K() + m]; }
  double coeff(int j, int m) const { return c_[static_cast<std::size_t>(j) * K() + m]; }
  std::span<double> cell(int j) { return {c_.data() + static_cast<std::size_t>(j) * K(), static_cast<std::size_t>(K())}; }
  std::span<const double> cell(int j) const { return {c_.data() + static_cast<std::size_t>(j) * K(), static_cast<std::size_t>(K())}; }
  std::span<double> data() { return c_; }
  std::span<const double> data() const { return c_; }

  // Value at reference coordinate xi in cell j.
  double eval_ref(int j, double xi) const { return legendre_sum(cell(j), xi); }
  // One-sided endpoint values of cell j.
  double value_left(int j) const;   // limit from inside at edges[j]
  double value_right(int j) const;  // limit from inside at edges[j+1]

  double cell_mean(int j) const { return coeff(j, 0); }

  bool finite() const;  // all coefficients finite
 private:
  SpacePtr space_;
  std::vector<double> c_;
};

// One-sided values at an interface: `left` comes from the lower cell's right
// endpoint, `right` from the upper cell's left endpoint.  The jump convention
// is right - left, the average is the arithmetic mean.
struct TracePair {
  double left = 0.0, right = 0.0;

  double jump() const { return right - left; }
  double avg() const { return 0.5 * (left + right); }
};

// Traces at every interface i in [0, n), periodic wrap included.
void interface_traces(const DGField& u, std::span<TracePair> out, Exec ex);
std::vector<TracePair> interface_traces(const DGField& u, Exec ex = Exec::serial);

struct Norms {
  double l2 = 0.0;        // cell-wise quadrature / modal Parseval
  double linf = 0.0;      // dense quadrature nodes plus both cell endpoints
  double boundary = 0.0;  // sqrt(sum over interfaces of left^2 + right^2)
};

Norms norms(const DGField& u);
// Norms of u - g with g sampled pointwise (dense rule).
Norms error_norms(const DGField& u, const std::function<double(double)>& g);

// sum_j (u, 1)_{I_j} = integral of u over the domain.
double integral(const DGField& u);
// sum_j (u, u)_{I_j} via the diagonal mass matrix (exact).
double l2sq(const DGField& u);
// L2 inner product (u, w) over the whole domain; spaces must match.
double inner(const DGField& u, const DGField& w);

// out = a*x + b*y and out = a*x + b*y + c*z (coefficient-wise; same space).
void lincomb(double a, const DGField& x, double b, const DGField& y,
             DGField& out, Exec ex);
void lincomb(double a, const DGField& x, double b, const DGField& y, double c,
             const DGField& z, DGField& out, Exec ex);

}  // namespace fwdg
