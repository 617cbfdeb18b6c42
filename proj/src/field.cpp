#include "fwdg/field.hpp"

#include <cmath>
#include <stdexcept>

#ifdef FWDG_HAVE_OPENMP
#include <omp.h>
#endif

namespace fwdg {

bool openmp_enabled() {
#ifdef FWDG_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef FWDG_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

SpacePtr make_space(Mesh1D mesh, int degree) {
  if (degree < 0 || degree > 8)
    throw std::invalid_argument("make_space: degree outside [0, 8]");
  auto s = std::make_shared<DGSpace>();
  s->mesh = std::move(mesh);
  s->degree = degree;
  s->quad = gauss_legendre(degree + 1);
  const int ndense = std::min(32, std::max(degree + 6, 10));
  s->quad_dense = gauss_legendre(ndense);
  s->basis = tabulate_legendre(degree, s->quad.nodes);
  s->basis_dense = tabulate_legendre(degree, s->quad_dense.nodes);
  s->stiffness = legendre_stiffness(degree);
  return s;
}

double DGField::value_left(int j) const {
  // P_m(-1) = (-1)^m
  const auto c = cell(j);
  double acc = 0.0;
  double sgn = 1.0;
  for (int m = 0; m < K(); ++m, sgn = -sgn) acc += sgn * c[m];
  return acc;
}

double DGField::value_right(int j) const {
  // P_m(1) = 1
  const auto c = cell(j);
  double acc = 0.0;
  for (int m = 0; m < K(); ++m) acc += c[m];
  return acc;
}

bool DGField::finite() const {
  for (double v : c_)
    if (!std::isfinite(v)) return false;
  return true;
}

void interface_traces(const DGField& u, std::span<TracePair> out, Exec ex) {
  const int n = u.n_cells();
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("interface_traces: output size mismatch");
  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      out[i].left = u.value_right(u.space()->mesh.left_cell(i));
      out[i].right = u.value_left(i);
    }
    return;
#endif
  }
  for (int i = 0; i < n; ++i) {
    out[i].left = u.value_right(u.space()->mesh.left_cell(i));
    out[i].right = u.value_left(i);
  }
}

std::vector<TracePair> interface_traces(const DGField& u, Exec ex) {
  std::vector<TracePair> t(u.n_cells());
  interface_traces(u, t, ex);
  return t;
}

double integral(const DGField& u) {
  const auto& mesh = u.space()->mesh;
  double acc = 0.0;
  for (int j = 0; j < u.n_cells(); ++j) acc += u.coeff(j, 0) * mesh.h(j);
  return acc;
}

double l2sq(const DGField& u) {
  const auto& sp = *u.space();
  double acc = 0.0;
  for (int j = 0; j < u.n_cells(); ++j) {
    const auto c = u.cell(j);
    double cellacc = 0.0;
    for (int m = 0; m < sp.K(); ++m) cellacc += c[m] * c[m] / (2 * m + 1);
    acc += cellacc * sp.mesh.h(j);
  }
  return acc;
}

double inner(const DGField& u, const DGField& w) {
  if (u.space() != w.space())
    throw std::invalid_argument("inner: fields live on different spaces");
  const auto& sp = *u.space();
  double acc = 0.0;
  for (int j = 0; j < u.n_cells(); ++j) {
    const auto cu = u.cell(j);
    const auto cw = w.cell(j);
    double cellacc = 0.0;
    for (int m = 0; m < sp.K(); ++m) cellacc += cu[m] * cw[m] / (2 * m + 1);
    acc += cellacc * sp.mesh.h(j);
  }
  return acc;
}

Norms norms(const DGField& u) {
  const auto& sp = *u.space();
  Norms n;
  n.l2 = std::sqrt(l2sq(u));
  for (int j = 0; j < u.n_cells(); ++j) {
    n.linf = std::max(n.linf, std::abs(u.value_left(j)));
    n.linf = std::max(n.linf, std::abs(u.value_right(j)));
    for (int i = 0; i < sp.quad_dense.size(); ++i) {
      double v = 0.0;
      const auto c = u.cell(j);
      for (int m = 0; m < sp.K(); ++m) v += c[m] * sp.basis_dense.v(m, i);
      n.linf = std::max(n.linf, std::abs(v));
    }
  }
  double bacc = 0.0;
  for (const TracePair& t : interface_traces(u))
    bacc += t.left * t.left + t.right * t.right;
  n.boundary = std::sqrt(bacc);
  return n;
}

Norms error_norms(const DGField& u, const std::function<double(double)>& g) {
  const auto& sp = *u.space();
  Norms n;
  double l2acc = 0.0;
  for (int j = 0; j < u.n_cells(); ++j) {
    const auto c = u.cell(j);
    double cellacc = 0.0;
    for (int i = 0; i < sp.quad_dense.size(); ++i) {
      double v = 0.0;
      for (int m = 0; m < sp.K(); ++m) v += c[m] * sp.basis_dense.v(m, i);
      const double e = v - g(sp.mesh.x_of(j, sp.quad_dense.nodes[i]));
      cellacc += sp.quad_dense.weights[i] * e * e;
      n.linf = std::max(n.linf, std::abs(e));
    }
    l2acc += cellacc * 0.5 * sp.mesh.h(j);
    const double el = u.value_left(j) - g(sp.mesh.edges[j]);
    const double er = u.value_right(j) - g(sp.mesh.edges[j + 1]);
    n.linf = std::max({n.linf, std::abs(el), std::abs(er)});
  }
  n.l2 = std::sqrt(l2acc);
  double bacc = 0.0;
  for (int j = 0; j < u.n_cells(); ++j) {
    const double el = u.value_left(j) - g(sp.mesh.edges[j]);
    const double er = u.value_right(j) - g(sp.mesh.edges[j + 1]);
    bacc += el * el + er * er;
  }
  n.boundary = std::sqrt(bacc);
  return n;
}

namespace {

inline void check_same_space(const DGField& x, const DGField& y, const DGField& out) {
  if (x.space() != y.space() || x.space() != out.space())
    throw std::invalid_argument("lincomb: fields live on different spaces");
}

}  // namespace

void lincomb(double a, const DGField& x, double b, const DGField& y,
             DGField& out, Exec ex) {
  check_same_space(x, y, out);
  const auto xs = x.data();
  const auto ys = y.data();
  auto os = out.data();
  const std::int64_t n = static_cast<std::int64_t>(os.size());
  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) os[i] = a * xs[i] + b * ys[i];
    return;
#endif
  }
  for (std::int64_t i = 0; i < n; ++i) os[i] = a * xs[i] + b * ys[i];
}

void lincomb(double a, const DGField& x, double b, const DGField& y, double c,
             const DGField& z, DGField& out, Exec ex) {
  check_same_space(x, y, out);
  check_same_space(x, z, out);
  const auto xs = x.data();
  const auto ys = y.data();
  const auto zs = z.data();
  auto os = out.data();
  const std::int64_t n = static_cast<std::int64_t>(os.size());
  if (ex == Exec::openmp) {
#ifdef FWDG_HAVE_OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) os[i] = a * xs[i] + b * ys[i] + c * zs[i];
    return;
#endif
  }
  for (std::int64_t i = 0; i < n; ++i) os[i] = a * xs[i] + b * ys[i] + c * zs[i];
}

}  // namespace fwdg
