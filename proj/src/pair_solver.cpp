#include "fwdg/pair_solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fwdg {

namespace {

using Trip = Eigen::Triplet<double>;

// Append the entries of sign * A^{flavor} into the (row_comp, col_comp) block.
// A^{flavor} maps field coefficients c to vec[j,m] = L_j(c, P_m):
//   volume -S[m][n] on the diagonal cell, plus the trace coupling
//   +what(iface_right)*P_m(1) - what(iface_left)*P_m(-1)
// where `what` picks the left cell's right endpoint (left_trace), the right
// cell's left endpoint (right_trace), or their average (central).
void append_weak_block(std::vector<Trip>& trips, const DGSpace& sp,
                       FluxKind flavor, int row_comp, int col_comp,
                       double sign) {
  const int n = sp.n_cells(), K = sp.K();
  const auto idx = [&](int comp, int j, int m) { return (j * 2 + comp) * K + m; };
  const double wl = (flavor == FluxKind::central) ? 0.5 : 1.0;

  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < K; ++m) {
      const int row = idx(row_comp, j, m);
      // Volume: -S[m][nn], nonzero for nn < m with odd gap.
      for (int nn = m - 1; nn >= 0; nn -= 2)
        trips.emplace_back(row, idx(col_comp, j, nn), sign * -2.0);

      const double pm_l = (m % 2 == 0) ? 1.0 : -1.0;  // P_m(-1)
      const int if_l = sp.mesh.iface_left_of(j);
      const int if_r = sp.mesh.iface_right_of(j);
      // what(iface) as a combination of the two neighbor cells' coefficients.
      // Left-trace part: cell left_cell(iface) evaluated at +1 (P_nn(1) = 1).
      // Right-trace part: cell right_cell(iface) at -1 (P_nn(-1) = (-1)^nn).
      for (int nn = 0; nn < K; ++nn) {
        const double pn_l = (nn % 2 == 0) ? 1.0 : -1.0;
        if (flavor != FluxKind::right_trace) {
          trips.emplace_back(row, idx(col_comp, sp.mesh.left_cell(if_r), nn),
                             sign * wl);
          trips.emplace_back(row, idx(col_comp, sp.mesh.left_cell(if_l), nn),
                             sign * -pm_l * wl);
        }
        if (flavor != FluxKind::left_trace) {
          trips.emplace_back(row, idx(col_comp, sp.mesh.right_cell(if_r), nn),
                             sign * pn_l * wl);
          trips.emplace_back(row, idx(col_comp, sp.mesh.right_cell(if_l), nn),
                             sign * -pm_l * pn_l * wl);
        }
      }
    }
  }
}

}  // namespace

struct PairSolver::Impl {
  Eigen::SparseMatrix<double> A;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
};

PairSolver::~PairSolver() = default;
PairSolver::PairSolver(PairSolver&&) noexcept = default;
PairSolver& PairSolver::operator=(PairSolver&&) noexcept = default;

PairSolver::PairSolver(SpacePtr space, FluxKind up_flavor, FluxKind low_flavor)
    : space_(std::move(space)), impl_(std::make_unique<Impl>()) {
  for (FluxKind f : {up_flavor, low_flavor})
    if (f != FluxKind::left_trace && f != FluxKind::right_trace &&
        f != FluxKind::central)
      throw std::invalid_argument("PairSolver: trace flavor required");

  const auto& sp = *space_;
  const int n = sp.n_cells(), K = sp.K();
  const int dim = 2 * n * K;
  std::vector<Trip> trips;
  trips.reserve(static_cast<std::size_t>(dim) * (4 * K + 1));

  const auto idx = [&](int comp, int j, int m) { return (j * 2 + comp) * K + m; };
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < K; ++m) {
      trips.emplace_back(idx(0, j, m), idx(0, j, m), sp.mass(j, m));
      trips.emplace_back(idx(1, j, m), idx(1, j, m), sp.mass(j, m));
    }
  append_weak_block(trips, sp, up_flavor, /*row_comp=*/0, /*col_comp=*/1, -1.0);
  append_weak_block(trips, sp, low_flavor, /*row_comp=*/1, /*col_comp=*/0, -1.0);

  impl_->A.resize(dim, dim);
  impl_->A.setFromTriplets(trips.begin(), trips.end());
  impl_->A.makeCompressed();
  impl_->lu.compute(impl_->A);
  if (impl_->lu.info() != Eigen::Success)
    throw std::runtime_error("PairSolver: factorization failed (n=" +
                             std::to_string(n) + ", k=" + std::to_string(K - 1) +
                             ")");

  // Probe solve: catches near-singular assemblies that LU still factors.
  Eigen::VectorXd b(dim);
  for (int i = 0; i < dim; ++i) b[i] = 1.0 + 0.125 * (i % 7);
  const Eigen::VectorXd x = impl_->lu.solve(b);
  const double res = (impl_->A * x - b).cwiseAbs().maxCoeff();
  if (!(res <= 1e-9 * (1.0 + b.cwiseAbs().maxCoeff() + x.cwiseAbs().maxCoeff())))
    throw std::runtime_error("PairSolver: probe solve residual " +
                             std::to_string(res) + " indicates singularity");
}

void PairSolver::solve(std::span<const double> b1, std::span<const double> b2,
                       DGField& x1, DGField& x2, bool verify) const {
  const auto& sp = *space_;
  const int n = sp.n_cells(), K = sp.K();
  const int dim = 2 * n * K;
  if (static_cast<int>(b1.size()) != n * K || static_cast<int>(b2.size()) != n * K)
    throw std::invalid_argument("PairSolver::solve: rhs size mismatch");
  if (x1.space() != space_ || x2.space() != space_)
    throw std::invalid_argument("PairSolver::solve: output space mismatch");

  Eigen::VectorXd b(dim);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < K; ++m) {
      b[(j * 2 + 0) * K + m] = b1[static_cast<std::size_t>(j) * K + m];
      b[(j * 2 + 1) * K + m] = b2[static_cast<std::size_t>(j) * K + m];
    }
  const Eigen::VectorXd x = impl_->lu.solve(b);
  if (verify) {
    const double res = (impl_->A * x - b).cwiseAbs().maxCoeff();
    const double scale = 1.0 + b.cwiseAbs().maxCoeff() + x.cwiseAbs().maxCoeff();
    if (!(res <= 1e-9 * scale))
      throw std::runtime_error("PairSolver::solve: residual " +
                               std::to_string(res) + " exceeds bound");
  }
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < K; ++m) {
      x1.coeff(j, m) = x[(j * 2 + 0) * K + m];
      x2.coeff(j, m) = x[(j * 2 + 1) * K + m];
    }
}

std::vector<double> PairSolver::dense_matrix() const {
  const int dim = impl_->A.rows();
  std::vector<double> d(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int c = 0; c < impl_->A.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(impl_->A, c); it; ++it)
      d[static_cast<std::size_t>(it.row()) * dim + it.col()] += it.value();
  return d;
}

}  // namespace fwdg
