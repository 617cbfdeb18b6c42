#include "fwdg/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "fwdg/operators.hpp"
#include "fwdg/projection.hpp"
#include "scheme_detail.hpp"

namespace fwdg {

std::string scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::d1: return "D1";
    case SchemeId::c1: return "C1";
    case SchemeId::d2: return "D2";
    case SchemeId::c2: return "C2";
  }
  throw std::invalid_argument("scheme_name: unknown id");
}

SchemeId parse_scheme(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (s == "D1") return SchemeId::d1;
  if (s == "C1") return SchemeId::c1;
  if (s == "D2") return SchemeId::d2;
  if (s == "C2") return SchemeId::c2;
  throw std::invalid_argument("unknown scheme '" + name +
                              "' (expected D1, C1, D2 or C2)");
}

bool scheme_is_dissipative(SchemeId id) {
  return id == SchemeId::d1 || id == SchemeId::d2;
}

bool scheme_evolves_w(SchemeId id) {
  return id == SchemeId::d2 || id == SchemeId::c2;
}

Scheme::Scheme(SpacePtr space, SchemeConfig cfg)
    : space_(std::move(space)), cfg_(std::move(cfg)) {
  if (!space_) throw std::invalid_argument("scheme: null space");
  if (cfg_.p < 2) throw std::invalid_argument("scheme: power p must be >= 2");
}

std::unique_ptr<Scheme> make_scheme(SpacePtr space, SchemeConfig cfg) {
  if (scheme_evolves_w(cfg.id))
    return detail::make_transformed_scheme(std::move(space), std::move(cfg));
  return detail::make_primal_scheme(std::move(space), std::move(cfg));
}

namespace detail {

DGField strong_form(const SpacePtr& space, std::vector<double> vec, Exec ex) {
  DGField out(space);
  std::copy(vec.begin(), vec.end(), out.data().begin());
  mass_solve(*space, out.data(), ex);
  return out;
}

DGField project_source(const SpacePtr& space, const SourceFn& g, double t) {
  return project_l2(space, [&g, t](double x) { return g(x, t); });
}

}  // namespace detail
}  // namespace fwdg
