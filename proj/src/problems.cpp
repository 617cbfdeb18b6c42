#include "fwdg/problems.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fwdg {
namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// Fold z into [-half, half) (period 2*half).
double fold(double z, double half) {
  const double period = 2.0 * half;
  double r = std::fmod(z + half, period);
  if (r < 0.0) r += period;
  return r - half;
}

// Crest positions x = s*t + n*period inside [a, b).
std::vector<double> crest_positions(double t, double s, double period,
                                    double a, double b) {
  double x = a + std::fmod(s * t - a, period);
  if (x < a) x += period;
  std::vector<double> out;
  for (; x < b; x += period) out.push_back(x);
  return out;
}

Problem smooth_manufactured() {
  Problem pr;
  pr.id = "smooth_manufactured";
  pr.a = 0.0;
  pr.b = two_pi;
  pr.p = 3;
  pr.notes =
      "traveling sine wave kept exact by an analytic forcing term; the "
      "standard accuracy benchmark";
  pr.initial = [](double x) { return std::sin(x); };
  pr.exact = [](double x, double t) { return std::sin(x - t); };
  // Forcing that makes u = sin(x - t) solve the p = 3 equation: the time
  // derivative, the convective term, and the nonlocal term (which maps
  // cos to cos/2) sum to cos(x-t) (sin^2(x-t) - 1/2).
  pr.source_u = [](double x, double t) {
    const double th = x - t;
    const double sn = std::sin(th);
    return std::cos(th) * (sn * sn - 0.5);
  };
  // The same forcing for the w evolution, i.e. with one minus the second
  // derivative applied: cos(a th) picks up a factor 1 + a^2.
  pr.source_w = [](double x, double t) {
    const double th = x - t;
    return -0.5 * std::cos(th) - 2.5 * std::cos(3.0 * th);
  };
  return pr;
}

Problem shock1() {
  Problem pr;
  pr.id = "shock1";
  pr.a = 0.0;
  pr.b = 1.0;
  pr.p = 4;
  pr.limiter_recommended = true;
  pr.notes =
      "smooth initial profile that steepens into a shock; no closed "
      "solution, run with the limiter";
  pr.initial = [](double x) { return std::cos(two_pi * x + 0.5) + 1.0; };
  return pr;
}

Problem shock2() {
  Problem pr;
  pr.id = "shock2";
  pr.a = 0.0;
  pr.b = 1.0;
  pr.p = 2;
  pr.limiter_recommended = true;
  pr.notes =
      "three-mode initial profile that steepens into interacting shocks; "
      "no closed solution, run with the limiter";
  pr.initial = [](double x) {
    return 0.2 * std::cos(two_pi * x) + 0.1 * std::cos(2.0 * two_pi * x) -
           0.3 * std::sin(3.0 * two_pi * x) + 0.5;
  };
  return pr;
}

Problem two_soliton() {
  Problem pr;
  pr.id = "two_soliton";
  pr.a = -50.0;
  pr.b = 200.0;
  pr.p = 2;
  pr.notes =
      "two-soliton initial data borrowed from the classical KdV benchmark; "
      "the taller wave starts behind, catches up, and overtakes";
  pr.initial = [](double x) { return two_soliton_profile(x, 0.0); };
  return pr;
}

Problem single_peakon(double s) {
  Problem pr;
  pr.id = "single_peakon";
  pr.a = -25.0;
  pr.b = 25.0;
  pr.p = 2;
  pr.notes =
      "peaked traveling wave with exponential tails; treated periodically "
      "since the tails decay below roundoff across the domain";
  const double half = 0.5 * (pr.b - pr.a);
  auto wave = [s, half](double x, double t) {
    const double z = fold(x - s * t, half);
    return (4.0 / 3.0) * std::exp(-0.5 * std::abs(z)) + s - 4.0 / 3.0;
  };
  pr.exact = wave;
  pr.initial = [wave](double x) { return wave(x, 0.0); };
  const double a = pr.a, b = pr.b;
  pr.kinks_at = [s, a, b](double t) {
    return crest_positions(t, s, b - a, a, b);
  };
  return pr;
}

Problem periodic_peakon(double s, double g) {
  const PeakedWaveParams pp = periodic_peakon_params(s, g);
  if (!std::isfinite(pp.half_period))
    throw std::domain_error(
        "periodic_peakon: the cusped limit (d_minus = 0) has no finite "
        "period; pick a shape parameter away from it");
  Problem pr;
  pr.id = "periodic_peakon";
  pr.a = -3.0 * pp.half_period;
  pr.b = 3.0 * pp.half_period;
  pr.p = 2;
  pr.notes =
      "periodic train of peaked waves; the long-time conservation "
      "benchmark";
  const double dp = pp.d_plus, dm = pp.d_minus, tp = pp.half_period;
  auto wave = [s, dp, dm, tp](double x, double t) {
    const double z = std::abs(fold(x - s * t, tp));
    return dp * std::exp(-0.5 * z) + dm * std::exp(0.5 * z) + s - 4.0 / 3.0;
  };
  pr.exact = wave;
  pr.initial = [wave](double x) { return wave(x, 0.0); };
  const double a = pr.a, b = pr.b;
  pr.kinks_at = [s, tp, a, b](double t) {
    return crest_positions(t, s, 2.0 * tp, a, b);
  };
  return pr;
}

}  // namespace

PeakedWaveParams periodic_peakon_params(double s, double g) {
  const double rad1 = 4.0 * g + 4.0 * s - 2.0 * s * s;
  if (rad1 < 0.0) {
    std::ostringstream os;
    os << "periodic_peakon_params: 4g + 4s - 2s^2 = " << rad1
       << " is negative; no real wave amplitudes for s = " << s
       << ", g = " << g;
    throw std::domain_error(os.str());
  }
  const double rad2 = 9.0 * s * s - 18.0 * s + 8.0 - 18.0 * g;
  if (rad2 < 0.0) {
    std::ostringstream os;
    os << "periodic_peakon_params: 9s^2 - 18s + 8 - 18g = " << rad2
       << " is negative; no real trough value for s = " << s << ", g = " << g;
    throw std::domain_error(os.str());
  }
  PeakedWaveParams pp;
  const double root1 = std::sqrt(rad1);
  pp.d_plus = (4.0 + 3.0 * root1) / 6.0;
  pp.d_minus = (4.0 - 3.0 * root1) / 6.0;
  pp.trough = (-4.0 + 3.0 * s + std::sqrt(2.0 * rad2)) / 3.0;
  if (pp.d_minus <= 0.0) {
    pp.d_minus = std::max(pp.d_minus, 0.0);
    pp.half_period = std::numeric_limits<double>::infinity();
  } else {
    pp.half_period = 2.0 * std::abs(std::log(pp.trough - s + 4.0 / 3.0) -
                                    std::log(2.0 * pp.d_minus));
  }
  return pp;
}

const std::vector<std::string>& problem_ids() {
  static const std::vector<std::string> ids = {
      "smooth_manufactured", "shock1",        "shock2",
      "two_soliton",         "single_peakon", "periodic_peakon"};
  return ids;
}

Problem make_problem(const std::string& id, double s, double g) {
  if (id == "smooth_manufactured") return smooth_manufactured();
  if (id == "shock1") return shock1();
  if (id == "shock2") return shock2();
  if (id == "two_soliton") return two_soliton();
  if (id == "single_peakon") return single_peakon(s);
  if (id == "periodic_peakon") return periodic_peakon(s, g);
  std::ostringstream os;
  os << "make_problem: unknown problem id '" << id << "'; known ids:";
  for (const std::string& known : problem_ids()) os << ' ' << known;
  throw std::invalid_argument(os.str());
}

double two_soliton_profile(double x, double t) {
  constexpr double k1 = 0.4, k2 = 0.6;
  constexpr double a2 = ((k1 - k2) / (k1 + k2)) * ((k1 - k2) / (k1 + k2));
  const double th1 = k1 * x - k1 * k1 * k1 * t + 4.0;
  const double th2 = k2 * x - k2 * k2 * k2 * t + 15.0;
  // Shift all exponents by the largest one appearing in the denominator so
  // nothing overflows; every remaining exponent is then <= -log(a2).
  const double m = std::max({0.0, th1, th2, th1 + th2 + std::log(a2)});
  const double num =
      12.0 * (k1 * k1 * std::exp(th1 - 2.0 * m) +
              k2 * k2 * std::exp(th2 - 2.0 * m) +
              2.0 * (k2 - k1) * (k2 - k1) * std::exp(th1 + th2 - 2.0 * m) +
              a2 * (k2 * k2 * std::exp(2.0 * th1 + th2 - 2.0 * m) +
                    k1 * k1 * std::exp(th1 + 2.0 * th2 - 2.0 * m)));
  const double den = std::exp(-m) + std::exp(th1 - m) + std::exp(th2 - m) +
                     a2 * std::exp(th1 + th2 - m);
  return num / (den * den);
}

}  // namespace fwdg
