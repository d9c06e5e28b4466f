#pragma once

// Reference implementations used only by tests. Everything here is kept
// deliberately independent of the main computation paths: adaptive Simpson
// instead of product integration, plain series summation instead of contour
// quadrature, direct lab-time sums instead of the warp-then-transform route.

#include <cmath>
#include <complex>
#include <functional>

#include "wws/errors.hpp"
#include "wws/signal.hpp"
#include "wws/structure.hpp"

namespace wws::oracle {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  double left_exponent = 0.0;   // integrand ~ tau^p near tau = 0
  double right_exponent = 0.0;  // integrand ~ (t - tau)^p near tau = t
};

namespace detail {

template <class F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth, int& budget, double t_report) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth > 0 && std::abs(delta) < 15.0 * tol) return left + right + delta / 15.0;
  if (--budget <= 0)
    throw convergence_error("adaptive quadrature: subdivision budget exhausted", t_report);
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, budget, t_report) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, budget, t_report);
}

template <class F>
double adaptive_simpson(F f, double a, double b, double tol, int& budget, double t_report) {
  const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0, budget, t_report);
}

// integral of F over (0, b] where F(tau) ~ tau^p * smooth; the substitution
// tau = b*u^c with c = 1/(1+p) flattens the endpoint.
template <class F>
double endpoint_integral(F F_fn, double b, double p, double tol, int& budget, double t_report) {
  const double c = 1.0 / (1.0 + p);
  auto g = [&](double u) {
    const double tau = b * std::pow(u, c);
    return F_fn(tau) * b * c * std::pow(u, c - 1.0);
  };
  return adaptive_simpson(g, 1e-14, 1.0, tol, budget, t_report);
}

}  // namespace detail

// Dirichlet convolution (k * g)(t) = int_0^t k(t - tau) g(tau) dtau with
// declared endpoint exponents in (-1, 0].
inline double adaptive_convolve(const std::function<double(double)>& k,
                                const std::function<double(double)>& g, double t,
                                const QuadratureSpec& spec = {}) {
  if (!(t > 0.0)) throw config_error("adaptive_convolve: t must be positive");
  int budget = spec.max_subdivisions;
  const double half = 0.5 * t;
  const double tol = std::max(spec.abs_tol, spec.rel_tol);
  auto left_fn = [&](double tau) { return k(t - tau) * g(tau); };
  auto right_fn = [&](double sig) { return k(sig) * g(t - sig); };
  const double left =
      detail::endpoint_integral(left_fn, half, spec.left_exponent, 0.5 * tol, budget, t);
  const double right =
      detail::endpoint_integral(right_fn, half, spec.right_exponent, 0.5 * tol, budget, t);
  return left + right;
}

// Mittag-Leffler E_{a,b}(z) by direct series, restricted to the regime where
// the series is numerically trustworthy.
inline double mittag_leffler(double a, double b, double z) {
  if (!(a > 0.0) || !(b > 0.0)) throw config_error("mittag_leffler: need a, b > 0");
  if (std::abs(z) > 50.0)
    throw range_error("mittag_leffler: |z| too large for the series regime");
  double sum = 1.0 / std::tgamma(b);
  double sign = 1.0;
  const double ln_az = std::log(std::abs(z) > 0 ? std::abs(z) : 1e-300);
  for (int k = 1; k < 800; ++k) {
    sign = (z < 0.0) ? -sign : sign;
    const double term = sign * std::exp(k * ln_az - std::lgamma(a * k + b));
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum) && k > 4) return sum;
  }
  throw convergence_error("mittag_leffler: series did not settle", z);
}

// Classical finite-difference derivative, 4th-order central stencils with
// one-sided ends; n in {1, 2}.
inline SampledSignal fd_derivative(const SampledSignal& v, int n) {
  if (n != 1 && n != 2) throw config_error("fd_derivative: order must be 1 or 2");
  if (v.size() < 6) throw grid_error("fd_derivative: grid too short");
  const double h = v.step;
  const auto& f = v.values;
  SampledSignal out = v;
  const std::size_t m = v.size();
  if (n == 1) {
    for (std::size_t i = 2; i + 2 < m; ++i)
      out.values[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    out.values[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * h);
    out.values[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    out.values[m - 2] = -(-3.0 * f[m - 1] - 10.0 * f[m - 2] + 18.0 * f[m - 3] - 6.0 * f[m - 4] + f[m - 5]) / (12.0 * h);
    out.values[m - 1] = -(-25.0 * f[m - 1] + 48.0 * f[m - 2] - 36.0 * f[m - 3] + 16.0 * f[m - 4] - 3.0 * f[m - 5]) / (12.0 * h);
  } else {
    for (std::size_t i = 2; i + 2 < m; ++i)
      out.values[i] =
          (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h);
    auto onesided = [&](std::size_t i0, long stride) {
      const cplx a0 = f[i0], a1 = f[i0 + stride], a2 = f[i0 + 2 * stride], a3 = f[i0 + 3 * stride],
                 a4 = f[i0 + 4 * stride], a5 = f[i0 + 5 * stride];
      return (15.0 / 4.0 * a0 - 77.0 / 6.0 * a1 + 107.0 / 6.0 * a2 - 13.0 * a3 + 61.0 / 12.0 * a4 -
              5.0 / 6.0 * a5) /
             (h * h);
    };
    out.values[0] = onesided(0, 1);
    out.values[1] = onesided(1, 1);
    out.values[m - 1] = onesided(m - 1, -1);
    out.values[m - 2] = onesided(m - 2, -1);
  }
  return out;
}

// Slow direct-quadrature transform: trapezoid over the lab-time grid of
// exp(-i xi psi(t)) omega(t) u(t) psi'(t), no warping, no recurrences.
inline SampledSignal direct_wft(const SampledSignal& u, const StructurePair& s,
                                const FrequencyGrid& freq) {
  u.require(Domain::lab_time, "direct_wft");
  const std::size_t n = u.size();
  std::vector<double> phase(n), amp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = u.point(j);
    phase[j] = s.scale.eval(t);
    amp[j] = s.weight.eval(t) * s.scale.deriv(t);
  }
  SampledSignal out;
  out.domain = Domain::frequency;
  out.start = freq.point(0);
  out.step = freq.step;
  out.values.resize(freq.size());
  const double norm = u.step / std::sqrt(2.0 * M_PI);
  for (std::size_t i = 0; i < freq.size(); ++i) {
    const double xi = freq.point(i);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double wj = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      acc += wj * amp[j] * u.values[j] * std::polar(1.0, -xi * phase[j]);
    }
    out.values[i] = acc * norm;
  }
  return out;
}

}  // namespace wws::oracle
