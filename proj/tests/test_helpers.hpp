#pragma once

#include <cmath>
#include <random>

#include "fwdg/field.hpp"

// Shared helpers for the test suites.

namespace fwdg::testing {

// Random modal field with decaying higher modes, so traces and values stay
// order one.
inline DGField random_field(const SpacePtr& sp, std::mt19937_64& rng,
                            double amp = 1.0) {
  std::uniform_real_distribution<double> d(-amp, amp);
  DGField u(sp);
  for (int j = 0; j < sp->n_cells(); ++j)
    for (int m = 0; m < sp->K(); ++m)
      u.coeff(j, m) = d(rng) / ((m + 1.0) * (m + 1.0));
  return u;
}

inline double field_scale(const DGField& u) {
  return 1.0 + std::sqrt(l2sq(u));
}

}  // namespace fwdg::testing
