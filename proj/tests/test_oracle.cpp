// Cross-checks the production operator assembly, scheme right-hand sides, and
// time stepper against the dense reference implementations in oracle.cpp.
// Both sides discretize the same equations, so agreement is expected to
// roundoff on every mesh, degree, and power combination -- not merely to
// discretization accuracy.

#include <doctest.h>

#include <cmath>
#include <vector>

#include "fwdg/field.hpp"
#include "fwdg/mesh.hpp"
#include "fwdg/operators.hpp"
#include "fwdg/pair_solver.hpp"
#include "fwdg/projection.hpp"
#include "fwdg/scheme.hpp"
#include "fwdg/time_loop.hpp"
#include "oracle.hpp"
#include "test_helpers.hpp"

using namespace fwdg;
using fwdg::testing::field_scale;
using fwdg::testing::random_field;

namespace {

SpacePtr space_on(double a, double b, int n, int k, double perturb,
                  std::uint64_t seed) {
  return make_space(build_mesh(a, b, n, perturb, seed), k);
}

DGField seeded_field(const SpacePtr& sp, double amp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_field(sp, rng, amp);
}

std::unique_ptr<Scheme> make(SchemeId id, SpacePtr sp, int p,
                             SourceFn src = {}) {
  SchemeConfig cfg;
  cfg.id = id;
  cfg.p = p;
  cfg.source = std::move(src);
  return make_scheme(std::move(sp), cfg);
}

double max_abs_diff(const DGField& x, const DGField& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.data().size(); ++i)
    m = std::max(m, std::abs(x.data()[i] - y.data()[i]));
  return m;
}

const std::vector<SchemeId> kAllSchemes = {SchemeId::d1, SchemeId::c1,
                                           SchemeId::d2, SchemeId::c2};

}  // namespace

TEST_SUITE("diagnostics_oracle") {

TEST_CASE("dense weak matrix columns reproduce the production operator") {
  const std::vector<FluxKind> flavors = {FluxKind::left_trace,
                                         FluxKind::right_trace,
                                         FluxKind::central};
  for (int k : {0, 2})
    for (double perturb : {0.0, 0.3}) {
      const auto sp = space_on(-1.0, 2.0, 5, k, perturb, 11);
      const int dim = static_cast<int>(sp->n_dof());
      for (FluxKind fl : flavors) {
        const std::vector<double> a = oracle::dense_weak_matrix(*sp, fl);
        DGField e(sp);
        std::vector<double> col(dim);
        for (int c = 0; c < dim; ++c) {
          e.data()[c] = 1.0;
          linear_weak_vec(e, fl, col, Exec::serial);
          for (int r = 0; r < dim; ++r)
            CHECK(std::abs(a[r * dim + c] - col[r]) <= 1e-12);
          e.data()[c] = 0.0;
        }
      }
    }
}

TEST_CASE("dense pair matrix matches the factorized solver's assembly") {
  const std::vector<std::pair<FluxKind, FluxKind>> pairs = {
      {FluxKind::left_trace, FluxKind::right_trace},
      {FluxKind::right_trace, FluxKind::left_trace},
      {FluxKind::central, FluxKind::central}};
  for (int k : {0, 1, 2})
    for (auto [up, low] : pairs) {
      const auto sp = space_on(0.0, 1.0, 4, k, 0.25, 7);
      const PairSolver solver(sp, up, low);
      const std::vector<double> ours = oracle::dense_pair_matrix(*sp, up, low);
      const std::vector<double> theirs = solver.dense_matrix();
      REQUIRE(ours.size() == theirs.size());
      double m = 0.0;
      for (std::size_t i = 0; i < ours.size(); ++i)
        m = std::max(m, std::abs(ours[i] - theirs[i]));
      CHECK(m <= 1e-12);
    }
}

TEST_CASE("factorized pair solve agrees with a full-pivot dense solve") {
  for (int k : {1, 2})
    for (auto [up, low] :
         std::vector<std::pair<FluxKind, FluxKind>>{
             {FluxKind::left_trace, FluxKind::right_trace},
             {FluxKind::central, FluxKind::central}}) {
      const auto sp = space_on(-2.0, 2.0, 6, k, 0.2, 23);
      const int nk = static_cast<int>(sp->n_dof());
      const PairSolver solver(sp, up, low);

      const DGField rb1 = seeded_field(sp, 1.0, 91);
      const DGField rb2 = seeded_field(sp, 1.0, 92);
      const std::vector<double> b1(rb1.data().begin(), rb1.data().end());
      const std::vector<double> b2(rb2.data().begin(), rb2.data().end());

      DGField x1(sp), x2(sp);
      solver.solve(b1, b2, x1, x2, true);

      const std::vector<double> a = oracle::dense_pair_matrix(*sp, up, low);
      std::vector<double> b(2 * nk);
      const int K = sp->K();
      for (int j = 0; j < sp->n_cells(); ++j)
        for (int m = 0; m < K; ++m) {
          b[(j * 2 + 0) * K + m] = b1[j * K + m];
          b[(j * 2 + 1) * K + m] = b2[j * K + m];
        }
      const std::vector<double> x = oracle::dense_solve(a, b);
      double worst = 0.0;
      for (int j = 0; j < sp->n_cells(); ++j)
        for (int m = 0; m < K; ++m) {
          worst = std::max(worst, std::abs(x1.coeff(j, m) -
                                           x[(j * 2 + 0) * K + m]));
          worst = std::max(worst, std::abs(x2.coeff(j, m) -
                                           x[(j * 2 + 1) * K + m]));
        }
      CHECK(worst <= 1e-11);
    }
}

TEST_CASE("state maps: initial state and reconstruction match the reference") {
  for (SchemeId id : kAllSchemes)
    for (int k : {0, 1, 2}) {
      const auto sp = space_on(0.0, 6.28, 6, k, 0.2, 31);
      const auto sch = make(id, sp, 2);
      const DGField u0 = seeded_field(sp, 0.8, 57);

      const DGField state = sch->initial_state(u0);
      const DGField oracle_state = oracle::reference_initial_state(id, u0);
      CHECK(max_abs_diff(state, oracle_state) <=
            1e-12 * field_scale(u0));

      const DGField back = sch->reconstruct_u(state);
      const DGField oracle_back = oracle::reference_reconstruct_u(id, state);
      CHECK(max_abs_diff(back, oracle_back) <= 1e-12 * field_scale(u0));
    }
}

TEST_CASE("semi-discrete right-hand sides match the dense reference") {
  for (SchemeId id : kAllSchemes)
    for (int n : {4, 8})
      for (int k : {0, 1, 2})
        for (int p : {2, 3}) {
          const auto sp =
              space_on(0.0, 6.2831853, n, k, 0.25, 100 + n + 10 * k + p);
          const auto sch = make(id, sp, p);
          const DGField u0 = seeded_field(sp, 0.7, 200 + n + k + p);
          const DGField state = sch->initial_state(u0);
          const double scale = field_scale(state);

          DGField out(sp);
          sch->rhs(state, 0.0, out);
          const DGField ref = oracle::reference_rhs(id, p, state, 0.0, {});
          CHECK(max_abs_diff(out, ref) <= 1e-12 * scale);

          const DGField dudt = sch->du_dt(state, 0.0);
          const DGField ref_dudt =
              oracle::reference_du_dt(id, p, state, 0.0, {});
          CHECK(max_abs_diff(dudt, ref_dudt) <= 1e-12 * scale);
        }
}

TEST_CASE("right-hand side with a space-time source term matches") {
  const SourceFn g = [](double x, double t) {
    return std::cos(x - 0.5 * t) * (1.0 + 0.25 * std::sin(2.0 * x));
  };
  for (SchemeId id : kAllSchemes) {
    const auto sp = space_on(0.0, 6.2831853, 6, 2, 0.2, 41);
    const auto sch = make(id, sp, 3, g);
    const DGField u0 = seeded_field(sp, 0.6, 73);
    const DGField state = sch->initial_state(u0);

    DGField out(sp);
    sch->rhs(state, 0.7, out);
    const DGField ref = oracle::reference_rhs(id, 3, state, 0.7, g);
    CHECK(max_abs_diff(out, ref) <= 1e-12 * field_scale(state));
  }
}

TEST_CASE("one Runge-Kutta step reproduces the reference stage algebra") {
  for (SchemeId id : kAllSchemes)
    for (int n : {4, 8})
      for (int k : {0, 1, 2}) {
        const auto sp = space_on(-3.0, 3.0, n, k, 0.15, 300 + n + k);
        const auto sch = make(id, sp, 2);
        const DGField u0 = seeded_field(sp, 0.5, 400 + n + k);
        const DGField start = sch->initial_state(u0);
        const double dt = 0.01;

        DGField stepped = start;
        const TVBLimiter no_limit;
        REQUIRE(rk3_step(*sch, 0.3, dt, stepped, no_limit) == -1);

        const DGField ref =
            oracle::reference_rk3_step(id, 2, start, 0.3, dt, {});
        CHECK(max_abs_diff(stepped, ref) <= 1e-12 * field_scale(start));
      }
}

TEST_CASE("one Runge-Kutta step with a source term matches") {
  const SourceFn g = [](double x, double t) {
    return 0.5 * std::sin(x) * std::cos(t);
  };
  for (SchemeId id : {SchemeId::c1, SchemeId::d2}) {
    const auto sp = space_on(0.0, 6.2831853, 6, 2, 0.0, 0);
    const auto sch = make(id, sp, 3, g);
    const DGField start = sch->initial_state(project_l2(
        sp, [](double x) { return 0.4 * std::sin(x) + 0.2; }));
    const double dt = 0.02;

    DGField stepped = start;
    const TVBLimiter no_limit;
    REQUIRE(rk3_step(*sch, 0.1, dt, stepped, no_limit) == -1);

    const DGField ref = oracle::reference_rk3_step(id, 3, start, 0.1, dt, g);
    CHECK(max_abs_diff(stepped, ref) <= 1e-12 * field_scale(start));
  }
}

TEST_CASE("reported invariants match the reference quadratures") {
  for (SchemeId id : kAllSchemes) {
    const auto sp = space_on(0.0, 6.2831853, 8, 2, 0.2, 77);
    const auto sch = make(id, sp, 2);
    const DGField state =
        sch->initial_state(seeded_field(sp, 0.9, 88));

    const Energies have = sch->energies(state);
    const Energies want = oracle::reference_energies(id, state);
    const double s = field_scale(state);
    CHECK(std::abs(have.e0 - want.e0) <= 1e-12 * s);
    CHECK(std::abs(have.e1 - want.e1) <= 1e-12 * s);
    CHECK(std::abs(have.e2 - want.e2) <= 1e-12 * s * s);
  }
}

}  // TEST_SUITE
