#pragma once

#include <functional>
#include <span>

#include "fwdg/field.hpp"

// L2 and Gauss-Radau projections into the modal space.  When a listed kink
// (point where the integrand is only C^0, e.g. a peakon crest) falls strictly
// inside a cell, the cell's quadrature is split at the kink so the projection
// keeps its full accuracy on each smooth piece.

namespace fwdg {

using ScalarFn = std::function<double(double)>;

DGField project_l2(const SpacePtr& space, const ScalarFn& g,
                   std::span<const double> kinks = {});

enum class RadauSide {
  match_left,   // collocates g at the cell's left endpoint, orthogonal to P^{k-1}
  match_right,  // collocates g at the cell's right endpoint, orthogonal to P^{k-1}
};

// Gauss-Radau projection.  For degree 0 this falls back to the L2 projection
// (cell averages); the endpoint condition alone would discard all interior
// information.
DGField project_gauss_radau(const SpacePtr& space, const ScalarFn& g,
                            RadauSide side,
                            std::span<const double> kinks = {});

}  // namespace fwdg
