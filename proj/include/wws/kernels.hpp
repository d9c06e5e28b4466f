#pragma once

// Sonine kernel pairs (k, kappa) of order n and their spectral symbols.
//
// Conventions used throughout:
//   * kappa is the derivative-side kernel, k the integral-side kernel.
//   * Phi(s)  = L{kappa}(s)           (spectral symbol)
//   * Psi(s)  = s^n Phi(s)            (full operator symbol)
//   * L{k}(s) = 1 / (s^n Phi(s))      (Sonine duality in the Laplace domain)
//   * (k * kappa)(t) = t^{n-1}/(n-1)! for order n; tempered pairs carry an
//     extra factor exp(-rate * t) because both kernels are tempered.
//
// Zoo (order n = 1 unless noted):
//   power-law           kappa = z^{-a}/Gamma(1-a),  k = z^{a-1}/Gamma(a),
//                       Phi = s^{a-1}, diffusive
//   tempered-power-law  power-law kernels times exp(-rate z); full symbol is
//                       the shifted (s + rate)^a, so the integral-side symbol
//                       is (s + rate)^{-a}
//   caputo-fabrizio     k = exp(-a z/(1-a)),  kappa = delta + a/(1-a),
//                       Phi = (s + a/(1-a))/s, diffusive
//   atangana-baleanu    kappa = E_a(-(a/(1-a)) z^a), conjugate k has no time
//                       form; Phi = s^{a-1}/(s^a + a/(1-a)), diffusive
//   distributed-order   kappa = int b(a) z^{-a}/Gamma(1-a) da,
//                       Phi_b(s) = int_0^1 b(a) s^{a-1} da, diffusive
//   bessel-klein-gordon kappa = J_0(2 sqrt(gamma z)), Phi = exp(-gamma/s)/s,
//                       oscillatory (not completely monotone)
//
// All fractional powers and logarithms use the principal branch, evaluated on
// the imaginary axis as s = i xi; negative xi then picks up the conjugate
// values automatically for real kernels.

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wws/detail/gauss.hpp"
#include "wws/detail/talbot.hpp"
#include "wws/errors.hpp"
#include "wws/signal.hpp"

namespace wws {

enum class Regime { diffusive, oscillatory };

struct SpectralSymbol {
  int order = 1;
  std::function<cplx(cplx)> phi;   // Phi(s), analytic off the negative real axis
  std::optional<cplx> psi_zero;    // lim_{s->0} s^n Phi(s) where the limit exists

  cplx phi_at(double xi) const { return phi(cplx(0.0, xi)); }

  cplx psi(cplx s) const {
    cplx p = phi(s);
    for (int i = 0; i < order; ++i) p *= s;
    return p;
  }
  cplx psi_at(double xi) const { return psi(cplx(0.0, xi)); }
};

// Distribution of fractional orders b(alpha) on [0,1].
struct OrderDistribution {
  enum class Kind { uniform, tabulated };
  Kind kind = Kind::uniform;
  std::vector<double> alpha;    // ascending breakpoints in [0,1]
  std::vector<double> density;  // values at the breakpoints, linear between

  double eval(double a) const {
    if (kind == Kind::uniform) return (a >= 0.0 && a <= 1.0) ? 1.0 : 0.0;
    if (a <= alpha.front() || a >= alpha.back()) {
      if (a == alpha.front()) return density.front();
      if (a == alpha.back()) return density.back();
      return 0.0;
    }
    auto it = std::upper_bound(alpha.begin(), alpha.end(), a);
    std::size_t i = static_cast<std::size_t>(it - alpha.begin()) - 1;
    const double w = (a - alpha[i]) / (alpha[i + 1] - alpha[i]);
    return density[i] * (1.0 - w) + density[i + 1] * w;
  }

  static OrderDistribution uniform() { return {}; }

  static OrderDistribution tabulated(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size() || a.size() < 2)
      throw config_error("OrderDistribution: need matching breakpoint/density tables");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0.0 || a[i] > 1.0 || (i > 0 && a[i] <= a[i - 1]))
        throw config_error("OrderDistribution: breakpoints must ascend within [0,1]");
      if (b[i] < 0.0) throw config_error("OrderDistribution: density must be nonnegative");
    }
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      mass += 0.5 * (b[i] + b[i + 1]) * (a[i + 1] - a[i]);
    if (std::abs(mass - 1.0) > 1e-8)
      throw config_error("OrderDistribution: density must integrate to 1 (got " +
                         std::to_string(mass) + ")");
    OrderDistribution d;
    d.kind = Kind::tabulated;
    d.alpha = std::move(a);
    d.density = std::move(b);
    return d;
  }
};

namespace detail {

// integral over [0,1] of b(alpha) * f(alpha); cell-wise for tabulated b so
// narrow spikes are resolved by their own breakpoints.
template <class F>
auto order_integral(const OrderDistribution& b, F&& f) {
  using R = decltype(f(0.5) * 1.0);
  if (b.kind == OrderDistribution::Kind::uniform) {
    return gauss_panel([&](double a) -> R { return f(a); }, 0.0, 1.0, 64);
  }
  R acc{};
  for (std::size_t i = 0; i + 1 < b.alpha.size(); ++i) {
    const double lo = b.alpha[i], hi = b.alpha[i + 1];
    if (hi <= lo) continue;
    acc += gauss_panel([&](double a) -> R { return b.eval(a) * f(a); }, lo, hi, 8);
  }
  return acc;
}

}  // namespace detail

struct LevyDensity {
  std::function<double(double)> eval;      // g(z), z > 0
  double integrability_exponent = 0.0;     // g(z) ~ C z^{-p} near 0
  double kill = 0.0;                       // killing rate Psi(0+) (tempered pairs)
  std::function<double(double)> tail_mass; // int_H^inf g(z) dz
};

struct SoninePair {
  std::string name;
  int order = 1;
  double alpha = 0.0;
  double gamma = 0.0;
  double temper_rate = 0.0;
  Regime regime = Regime::diffusive;

  // closed time forms of the *untempered* kernels; null when only the
  // spectral route exists. Tempering multiplies both by exp(-rate z) and is
  // applied on evaluation.
  std::function<double(double)> base_k;
  std::function<double(double)> base_kappa;
  double kappa_delta = 0.0;  // coefficient of a Dirac component in kappa
  double k_exponent = 0.0;   // small-z power of base_k
  double kappa_exponent = 0.0;

  SpectralSymbol symbol;
  std::optional<OrderDistribution> distribution;

  // optional exact panel moments int_a^b kernel(z) ((z-a)/(b-a))^j dz for the
  // product-integration engine (used where the small-z behaviour is not a
  // clean power, e.g. distributed order).
  std::function<double(double, double, int)> kappa_moment;

  bool has_k() const { return static_cast<bool>(base_k); }
  bool has_kappa() const { return static_cast<bool>(base_kappa) && kappa_delta == 0.0; }
};

struct KernelParams {
  double alpha = 0.5;
  double rate = 0.0;
  double gamma = 1.0;
  std::optional<OrderDistribution> distribution;
};

// ---------------------------------------------------------------------------
// distributed-order symbols

inline std::function<cplx(cplx)> distributed_phi_quadrature(const OrderDistribution& b) {
  return [b](cplx s) -> cplx {
    const cplx L = std::log(s);
    return detail::order_integral(b, [&](double a) { return std::exp((a - 1.0) * L); });
  };
}

inline SpectralSymbol distributed_symbol(const OrderDistribution& b) {
  SpectralSymbol sym;
  sym.order = 1;
  sym.psi_zero = cplx(0.0, 0.0);
  if (b.kind == OrderDistribution::Kind::uniform) {
    // Phi_uni(s) = (s - 1)/(s ln s); removable point at s = 1
    sym.phi = [](cplx s) -> cplx {
      const cplx d = s - 1.0;
      if (std::abs(d) < 1e-6) {
        const cplx series = 1.0 - d / 2.0 + d * d / 3.0 - d * d * d / 4.0;
        return 1.0 / (s * series);
      }
      return d / (s * std::log(s));
    };
  } else {
    sym.phi = distributed_phi_quadrature(b);
  }
  return sym;
}

// ---------------------------------------------------------------------------
// zoo construction

namespace detail {

inline double mittag_leffler_from_transform(double a, double coef, double z) {
  // E_a(-coef * z^a) via contour inversion of s^{a-1}/(s^a + coef); stable at
  // arguments where the alternating series loses all its digits.
  if (z == 0.0) return 1.0;
  return talbot_invert(
      [a, coef](cplx s) { return std::pow(s, a - 1.0) / (std::pow(s, a) + coef); }, z);
}

}  // namespace detail

inline SoninePair make_kernel(const std::string& name, const KernelParams& p = {});

inline SoninePair temper_kernel(const SoninePair& pair, double rate) {
  if (!(rate >= 0.0)) throw config_error("temper_kernel: rate must be nonnegative");
  if (!pair.has_k()) throw config_error("temper_kernel: pair lacks a closed-form k");
  SoninePair out = pair;
  if (rate == 0.0) return out;
  out.temper_rate = pair.temper_rate + rate;
  // full symbol shifts: Psi_new(s) = Psi_old(s + rate), hence the integral
  // side becomes the shifted transform of k.
  const SpectralSymbol base = pair.symbol;
  const int n = pair.order;
  out.symbol.order = n;
  out.symbol.phi = [base, rate, n](cplx s) -> cplx {
    cplx shifted = base.psi(s + rate);
    for (int i = 0; i < n; ++i) shifted /= s;
    return shifted;
  };
  out.symbol.psi_zero = base.psi(cplx(rate, 0.0));
  return out;
}

inline SoninePair make_kernel(const std::string& name, const KernelParams& p) {
  SoninePair pair;
  pair.name = name;
  if (name == "power-law" || name == "tempered-power-law") {
    const double a = p.alpha;
    if (!(a > 0.0) || !(a < 1.0))
      throw config_error("make_kernel: power-law family needs 0 < alpha < 1");
    pair.alpha = a;
    pair.order = 1;
    pair.regime = Regime::diffusive;
    const double ck = 1.0 / std::tgamma(a);
    const double cq = 1.0 / std::tgamma(1.0 - a);
    pair.base_k = [a, ck](double z) { return ck * std::pow(z, a - 1.0); };
    pair.base_kappa = [a, cq](double z) { return cq * std::pow(z, -a); };
    pair.k_exponent = a - 1.0;
    pair.kappa_exponent = -a;
    pair.symbol.order = 1;
    pair.symbol.phi = [a](cplx s) { return std::pow(s, a - 1.0); };
    pair.symbol.psi_zero = cplx(0.0, 0.0);
    if (name == "tempered-power-law") {
      if (!(p.rate >= 0.0)) throw config_error("make_kernel: tempering rate must be >= 0");
      pair = temper_kernel(pair, p.rate);
      pair.name = name;
    }
    return pair;
  }
  if (name == "caputo-fabrizio") {
    const double a = p.alpha;
    if (!(a > 0.0) || !(a < 1.0))
      throw config_error("make_kernel: caputo-fabrizio needs 0 < alpha < 1");
    const double r = a / (1.0 - a);
    pair.alpha = a;
    pair.order = 1;
    pair.regime = Regime::diffusive;
    pair.base_k = [r](double z) { return std::exp(-r * z); };
    pair.base_kappa = [r](double) { return r; };  // smooth part; plus a unit delta
    pair.kappa_delta = 1.0;
    pair.symbol.order = 1;
    pair.symbol.phi = [r](cplx s) { return (s + r) / s; };
    pair.symbol.psi_zero = cplx(r, 0.0);
    return pair;
  }
  if (name == "atangana-baleanu") {
    const double a = p.alpha;
    if (!(a > 0.0) || !(a < 1.0))
      throw config_error("make_kernel: atangana-baleanu needs 0 < alpha < 1");
    const double r = a / (1.0 - a);
    pair.alpha = a;
    pair.order = 1;
    pair.regime = Regime::diffusive;
    pair.base_kappa = [a, r](double z) { return detail::mittag_leffler_from_transform(a, r, z); };
    pair.kappa_exponent = 0.0;  // E_a(0) = 1, regular at the origin
    pair.symbol.order = 1;
    pair.symbol.phi = [a, r](cplx s) { return std::pow(s, a - 1.0) / (std::pow(s, a) + r); };
    pair.symbol.psi_zero = cplx(0.0, 0.0);
    return pair;
  }
  if (name == "distributed-order") {
    const OrderDistribution b = p.distribution.value_or(OrderDistribution::uniform());
    pair.order = 1;
    pair.regime = Regime::diffusive;
    pair.distribution = b;
    pair.symbol = distributed_symbol(b);
    pair.base_kappa = [b](double z) {
      return detail::order_integral(
          b, [&](double a) { return std::pow(z, -a) / std::tgamma(1.0 - a); });
    };
    pair.kappa_exponent = 0.0;  // not a clean power; exact moments supplied below
    pair.kappa_moment = [b](double lo, double hi, int j) -> double {
      const double h = hi - lo;
      return detail::order_integral(b, [&](double a) {
        const double m0 = (std::pow(hi, 1.0 - a) - std::pow(lo, 1.0 - a)) / (1.0 - a);
        if (j == 0) return m0 / std::tgamma(1.0 - a);
        const double m1 =
            ((std::pow(hi, 2.0 - a) - std::pow(lo, 2.0 - a)) / (2.0 - a) - lo * m0) / h;
        return m1 / std::tgamma(1.0 - a);
      });
    };
    return pair;
  }
  if (name == "bessel-klein-gordon") {
    const double g = p.gamma;
    if (!(g > 0.0)) throw config_error("make_kernel: bessel-klein-gordon needs gamma > 0");
    pair.gamma = g;
    pair.order = 1;
    pair.regime = Regime::oscillatory;
    pair.base_kappa = [g](double z) { return std::cyl_bessel_j(0.0, 2.0 * std::sqrt(g * z)); };
    pair.kappa_exponent = 0.0;
    pair.symbol.order = 1;
    pair.symbol.phi = [g](cplx s) { return std::exp(-g / s) / s; };
    pair.symbol.psi_zero = std::nullopt;  // exp(-gamma/s) has no limit along the axis
    return pair;
  }
  throw config_error("make_kernel: unknown kernel name '" + name + "'");
}

// The alpha -> 1 limit: kappa = delta, k = Heaviside, Psi(s) = s. Useful as a
// classical sanity anchor for the solver.
inline SoninePair classical_pair() {
  SoninePair pair;
  pair.name = "classical";
  pair.order = 1;
  pair.alpha = 1.0;
  pair.regime = Regime::diffusive;
  pair.base_k = [](double) { return 1.0; };
  pair.base_kappa = [](double) { return 0.0; };
  pair.kappa_delta = 1.0;
  pair.symbol.order = 1;
  pair.symbol.phi = [](cplx) { return cplx(1.0, 0.0); };
  pair.symbol.psi_zero = cplx(0.0, 0.0);
  return pair;
}

// ---------------------------------------------------------------------------
// pointwise kernel evaluation

enum class KernelSide { k, kappa };

inline double eval_kernel(const SoninePair& pair, KernelSide side, double z) {
  if (z < 0.0) throw config_error("eval_kernel: z must be nonnegative");
  const bool want_k = (side == KernelSide::k);
  if (want_k ? !pair.has_k() : !pair.has_kappa())
    throw unsupported_form_error("eval_kernel: no closed time form for the " +
                                 std::string(want_k ? "k" : "kappa") +
                                 " kernel of '" + pair.name + "'; use the spectral route");
  const double expo = want_k ? pair.k_exponent : pair.kappa_exponent;
  if (z == 0.0 && expo < 0.0)
    throw range_error("eval_kernel: kernel singular at z = 0");
  const double base = want_k ? pair.base_k(z) : pair.base_kappa(z);
  return std::exp(-pair.temper_rate * z) * base;
}

// ---------------------------------------------------------------------------
// Sonine-condition verifier

struct SonineReport {
  struct Row {
    double t;
    double value;
    double target;
    double error;
  };
  std::vector<Row> rows;
  double max_error = 0.0;
  bool pass = false;
};

namespace detail {

// int_0^t f(t - tau) g(tau) dtau where f ~ tau^{pf}, g ~ tau^{pg} near 0.
// Split at t/2 and absorb each endpoint singularity with tau = (t/2) q^c.
template <class F, class G>
double split_convolve(F&& f, G&& g, double t, double pf, double pg, int nodes) {
  const double half = 0.5 * t;
  auto one_side = [&](auto&& inner, double p) {
    const double c = 1.0 / (1.0 + p);
    return gauss_panel(
        [&](double q) {
          const double tau = half * std::pow(q, c);
          return inner(tau) * half * c * std::pow(q, c - 1.0);
        },
        0.0, 1.0, nodes);
  };
  const double left = one_side([&](double tau) { return f(t - tau) * g(tau); }, pg);
  const double right = one_side([&](double sig) { return f(sig) * g(t - sig); }, pf);
  return left + right;
}

}  // namespace detail

// Low-level verifier for an explicit kernel pairing (also used by the CLI's
// deliberate-mismatch diagnostic).
inline SonineReport check_sonine_condition(const std::function<double(double)>& k, double k_exp,
                                           const std::function<double(double)>& kappa,
                                           double kappa_exp, int order, double conv_rate,
                                           const std::vector<double>& t_points, double tol) {
  SonineReport rep;
  double fact = 1.0;
  for (int i = 2; i < order; ++i) fact *= i;
  for (double t : t_points) {
    if (!(t > 0.0)) throw config_error("check_sonine_condition: t points must be positive");
    const double coarse = detail::split_convolve(k, kappa, t, k_exp, kappa_exp, 32);
    const double value = detail::split_convolve(k, kappa, t, k_exp, kappa_exp, 64);
    const double target = std::exp(-conv_rate * t) * std::pow(t, order - 1) / fact;
    const double scale = std::max({std::abs(value), std::abs(target), 1.0});
    if (std::abs(value - coarse) > std::max(0.05 * tol, 1e-12 * scale))
      throw convergence_error("check_sonine_condition: quadrature has not converged", t);
    const double err = std::abs(value - target);
    rep.rows.push_back({t, value, target, err});
    rep.max_error = std::max(rep.max_error, err);
  }
  rep.pass = rep.max_error < tol;
  return rep;
}

inline SonineReport check_sonine_condition(const SoninePair& pair,
                                           const std::vector<double>& t_points, double tol) {
  if (!pair.has_k() || !pair.has_kappa())
    throw unsupported_form_error(
        "check_sonine_condition: both closed time forms are required; '" + pair.name +
        "' supports only the spectral duality check");
  const double r = pair.temper_rate;
  auto k = [&pair, r](double z) { return std::exp(-r * z) * pair.base_k(z); };
  auto kappa = [&pair, r](double z) { return std::exp(-r * z) * pair.base_kappa(z); };
  return check_sonine_condition(k, pair.k_exponent, kappa, pair.kappa_exponent, pair.order,
                                r, t_points, tol);
}

// ---------------------------------------------------------------------------
// numerical Laplace transform (for the symbol-kernel duality checks)

inline double numerical_laplace(const std::function<double(double)>& f, double exponent,
                                double s) {
  if (!(s > 0.0)) throw config_error("numerical_laplace: need s > 0");
  // [0,1] with the endpoint substitution, then a finite exponential tail
  const double c = 1.0 / (1.0 + exponent);
  const double head = detail::gauss_panel(
      [&](double q) {
        const double z = std::pow(q, c);
        return f(z) * std::exp(-s * z) * c * std::pow(q, c - 1.0);
      },
      0.0, 1.0, 64);
  const double tail = detail::gauss_panel(
      [&](double z) { return f(z) * std::exp(-s * z); }, 1.0, 1.0 + 42.0 / s, 64);
  return head + tail;
}

inline double kernel_laplace(const SoninePair& pair, KernelSide side, double s) {
  const bool want_k = (side == KernelSide::k);
  if (want_k ? !pair.has_k() : !pair.has_kappa())
    throw unsupported_form_error("kernel_laplace: no closed time form");
  const double r = pair.temper_rate;
  auto f = [&pair, r, want_k](double z) {
    return std::exp(-r * z) * (want_k ? pair.base_k(z) : pair.base_kappa(z));
  };
  return numerical_laplace(f, want_k ? pair.k_exponent : pair.kappa_exponent, s);
}

// ---------------------------------------------------------------------------
// Levy densities (power-law family)

inline LevyDensity levy_density(const SoninePair& pair) {
  const bool power_family = (pair.name == "power-law" || pair.name == "tempered-power-law");
  if (!power_family || pair.order != 1 || !(pair.alpha > 0.0) || !(pair.alpha < 1.0))
    throw no_levy_error("levy_density: only the (tempered) power-law class with n = 1 carries "
                        "an explicit Levy density");
  const double a = pair.alpha;
  const double r = pair.temper_rate;
  const double c = a / std::tgamma(1.0 - a);
  LevyDensity g;
  g.eval = [a, r, c](double z) { return c * std::exp(-r * z) * std::pow(z, -1.0 - a); };
  g.integrability_exponent = 1.0 + a;
  g.kill = (r > 0.0) ? std::pow(r, a) : 0.0;  // Psi(s) -> rate^alpha as s -> 0
  g.tail_mass = [a, r, c](double H) {
    if (r == 0.0) return std::pow(H, -a) / std::tgamma(1.0 - a);
    return detail::gauss_panel(
        [&](double z) { return c * std::exp(-r * z) * std::pow(z, -1.0 - a); }, H,
        H + 60.0 / r, 64);
  };
  return g;
}

}  // namespace wws
