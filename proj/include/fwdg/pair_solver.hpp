#pragma once

#include <memory>
#include <span>

#include "fwdg/field.hpp"
#include "fwdg/flux.hpp"

// Factorized solver for the coupled first-order systems both schemes share:
//
//   [  M     -A_up ] [x1]   [b1]
//   [ -A_low   M   ] [x2] = [b2]
//
// where M is the diagonal mass matrix and A_up / A_low are the coefficient
// space matrices of the linear weak derivative with a chosen trace flavor.
// With an adjoint flavor pair (left/right) or a central pair the Schur
// complement is M plus a positive semidefinite term, so the system is always
// nonsingular; this is still verified at assembly with a probe solve.
//
// Unknowns are interleaved per cell, [x1_j | x2_j], giving a block tridiagonal
// matrix with two periodic corner blocks.  Assembly and factorization happen
// once in the constructor (single-threaded); solves are reused per stage.

namespace fwdg {

class PairSolver {
 public:
  PairSolver(SpacePtr space, FluxKind up_flavor, FluxKind low_flavor);
  ~PairSolver();
  PairSolver(PairSolver&&) noexcept;
  PairSolver& operator=(PairSolver&&) noexcept;

  // b1, b2 are weak-form vectors (mass factors included).  When verify is set,
  // the solution is substituted back and a loose residual bound enforced.
  void solve(std::span<const double> b1, std::span<const double> b2,
             DGField& x1, DGField& x2, bool verify) const;

  // Dense copy of the assembled matrix, row-major, size (2*n*K)^2; used by the
  // independent assembly comparison in the tests.
  std::vector<double> dense_matrix() const;

  const SpacePtr& space() const { return space_; }

 private:
  struct Impl;
  SpacePtr space_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fwdg
