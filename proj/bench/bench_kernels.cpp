#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#include "fwdg/operators.hpp"
#include "fwdg/scheme.hpp"
#include "fwdg/time_loop.hpp"

// Times every cell/interface kernel under the serial reference loops and the
// OpenMP loops on the same data, and checks that the two produce bitwise
// identical results (they accumulate in the same order by construction).

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double ms_per_call(F&& body, int reps) {
  body();  // warm up caches and any lazy setup
  const auto start = Clock::now();
  for (int r = 0; r < reps; ++r) body();
  const std::chrono::duration<double, std::milli> el = Clock::now() - start;
  return el.count() / reps;
}

struct Row {
  const char* name;
  double serial_ms = 0.0;
  double openmp_ms = 0.0;
  bool identical = false;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-28s %12s %12s %9s  %s\n", "kernel", "serial ms", "openmp ms",
              "speedup", "bitwise");
  for (const Row& r : rows)
    std::printf("%-28s %12.4f %12.4f %8.2fx  %s\n", r.name, r.serial_ms,
                r.openmp_ms,
                r.openmp_ms > 0.0 ? r.serial_ms / r.openmp_ms : 0.0,
                r.identical ? "equal" : "DIFFER");
}

fwdg::DGField random_field(const fwdg::SpacePtr& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  fwdg::DGField u(space);
  for (int j = 0; j < space->n_cells(); ++j)
    for (int m = 0; m < space->K(); ++m)
      u.coeff(j, m) = dist(rng) / ((m + 1.0) * (m + 1.0));
  return u;
}

bool same_bits(std::span<const double> a, std::span<const double> b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

int main(int argc, char** argv) {
  int cells = 2048, degree = 2, reps = 50, p = 3;
  CLI::App app{"kernel benchmark: serial reference vs OpenMP loops"};
  app.add_option("--cells", cells, "mesh cells")->capture_default_str();
  app.add_option("--degree", degree, "polynomial degree")
      ->capture_default_str();
  app.add_option("--reps", reps, "repetitions per kernel")
      ->capture_default_str();
  app.add_option("--p", p, "nonlinearity power")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  using namespace fwdg;
  std::printf("cells = %d, degree = %d, reps = %d, p = %d; OpenMP %s, %d "
              "thread(s)\n\n",
              cells, degree, reps, p,
              openmp_enabled() ? "enabled" : "disabled", max_threads());

  const SpacePtr space = make_space(build_mesh(0.0, 6.283185307179586, cells),
                                    degree);
  const DGField u = random_field(space, 42);
  const std::size_t n = space->n_dof();
  std::vector<double> out_s(n), out_p(n);
  std::vector<Row> rows;

  {
    Row r{"linear_weak_vec (central)"};
    r.serial_ms = ms_per_call(
        [&] { linear_weak_vec(u, FluxKind::central, out_s, Exec::serial); },
        reps);
    r.openmp_ms = ms_per_call(
        [&] { linear_weak_vec(u, FluxKind::central, out_p, Exec::openmp); },
        reps);
    r.identical = same_bits(out_s, out_p);
    rows.push_back(r);
  }
  {
    const NonlinearOp op = make_nonlinear_op(*space, p, FluxKind::godunov_f);
    Row r{"nonlinear_weak_vec (godunov)"};
    r.serial_ms = ms_per_call(
        [&] { nonlinear_weak_vec(u, op, out_s, Exec::serial); }, reps);
    r.openmp_ms = ms_per_call(
        [&] { nonlinear_weak_vec(u, op, out_p, Exec::openmp); }, reps);
    r.identical = same_bits(out_s, out_p);
    rows.push_back(r);
  }
  {
    const NonlinearOp op =
        make_nonlinear_op(*space, p, FluxKind::conservative_f);
    Row r{"nonlinear_weak_vec (consrv)"};
    r.serial_ms = ms_per_call(
        [&] { nonlinear_weak_vec(u, op, out_s, Exec::serial); }, reps);
    r.openmp_ms = ms_per_call(
        [&] { nonlinear_weak_vec(u, op, out_p, Exec::openmp); }, reps);
    r.identical = same_bits(out_s, out_p);
    rows.push_back(r);
  }
  {
    std::vector<double> vs(out_s), vp(out_s);
    Row r{"mass_solve"};
    r.serial_ms =
        ms_per_call([&] { mass_solve(*space, vs, Exec::serial); }, reps);
    r.openmp_ms =
        ms_per_call([&] { mass_solve(*space, vp, Exec::openmp); }, reps);
    r.identical = same_bits(vs, vp);
    rows.push_back(r);
  }
  {
    DGField a = random_field(space, 7), b = random_field(space, 8);
    DGField cs(space), cp(space);
    Row r{"lincomb (3-term)"};
    r.serial_ms = ms_per_call(
        [&] { lincomb(0.3, a, 0.4, b, 0.3, u, cs, Exec::serial); }, reps);
    r.openmp_ms = ms_per_call(
        [&] { lincomb(0.3, a, 0.4, b, 0.3, u, cp, Exec::openmp); }, reps);
    r.identical = same_bits(cs.data(), cp.data());
    rows.push_back(r);
  }
  {
    TVBLimiter lim(1.0);
    DGField ls = u, lp = u;
    Row r{"tvb_limiter"};
    r.serial_ms = ms_per_call([&] { lim.apply(ls, Exec::serial); }, reps);
    r.openmp_ms = ms_per_call([&] { lim.apply(lp, Exec::openmp); }, reps);
    r.identical = same_bits(ls.data(), lp.data());
    rows.push_back(r);
  }

  for (const SchemeId id : {SchemeId::d1, SchemeId::c1, SchemeId::d2,
                            SchemeId::c2}) {
    SchemeConfig cs;
    cs.id = id;
    cs.p = p;
    cs.verify_solves = false;
    cs.exec = Exec::serial;
    SchemeConfig cp = cs;
    cp.exec = Exec::openmp;
    const auto scheme_s = make_scheme(space, cs);
    const auto scheme_p = make_scheme(space, cp);
    const DGField state = scheme_s->initial_state(u);
    DGField ks(space), kp(space);
    static char names[4][28];
    char* name = names[static_cast<int>(id)];
    std::snprintf(name, 28, "%s full rhs", scheme_name(id).c_str());
    Row r{name};
    r.serial_ms =
        ms_per_call([&] { scheme_s->rhs(state, 0.0, ks); }, reps);
    r.openmp_ms =
        ms_per_call([&] { scheme_p->rhs(state, 0.0, kp); }, reps);
    r.identical = same_bits(ks.data(), kp.data());
    rows.push_back(r);
  }

  print_rows(rows);
  const bool all_equal =
      std::all_of(rows.begin(), rows.end(), [](const Row& r) {
        return r.identical;
      });
  if (!all_equal) std::printf("\nERROR: kernel outputs differ between modes\n");
  return all_equal ? 0 : 1;
}
