#pragma once

#include <memory>
#include <vector>

#include "fwdg/scheme.hpp"

// Internals shared by the two scheme families.

namespace fwdg::detail {

// Interpret vec as a weak-form right hand side and return the field with
// M x = vec, using the diagonal mass matrix.
DGField strong_form(const SpacePtr& space, std::vector<double> vec, Exec ex);

// L2 projection of x -> g(x, t) at a frozen time.
DGField project_source(const SpacePtr& space, const SourceFn& g, double t);

std::unique_ptr<Scheme> make_primal_scheme(SpacePtr space, SchemeConfig cfg);
std::unique_ptr<Scheme> make_transformed_scheme(SpacePtr space, SchemeConfig cfg);

}  // namespace fwdg::detail
