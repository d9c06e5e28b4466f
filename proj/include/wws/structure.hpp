#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "wws/detail/interp.hpp"
#include "wws/errors.hpp"
#include "wws/signal.hpp"

namespace wws {

// Time-scale function psi: an increasing diffeomorphism from its domain onto
// the whole real line. The built-in kinds:
//   identity     psi(t) = t                 on (-inf, inf)
//   signed_power psi(t) = sgn(t)|t|^beta    on (-inf, inf), beta > 0
//   logarithmic  psi(t) = ln t              on (0, inf)
// The signed-power extension keeps t^beta an increasing bijection of the real
// line; its derivative is singular at t = 0 for beta < 1, so grids must not
// contain t = 0 (half-offset grids take care of that).
struct ScaleFunction {
  enum class Kind { identity, signed_power, logarithmic, custom };

  Kind kind = Kind::identity;
  double beta = 1.0;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();
  std::function<double(double)> f_eval, f_deriv, f_inverse;  // custom only

  double eval(double t) const {
    check_domain(t);
    switch (kind) {
      case Kind::identity: return t;
      case Kind::signed_power: return sgn(t) * std::pow(std::abs(t), beta);
      case Kind::logarithmic: return std::log(t);
      case Kind::custom: return f_eval(t);
    }
    return t;
  }

  double deriv(double t) const {
    check_domain(t);
    switch (kind) {
      case Kind::identity: return 1.0;
      case Kind::signed_power: return beta * std::pow(std::abs(t), beta - 1.0);
      case Kind::logarithmic: return 1.0 / t;
      case Kind::custom: return f_deriv(t);
    }
    return 1.0;
  }

  double inverse(double y) const {
    switch (kind) {
      case Kind::identity: return y;
      case Kind::signed_power: return sgn(y) * std::pow(std::abs(y), 1.0 / beta);
      case Kind::logarithmic: return std::exp(y);
      case Kind::custom: return f_inverse(y);
    }
    return y;
  }

 private:
  static double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }
  void check_domain(double t) const {
    if (!(t > domain_lo) || !(t < domain_hi))
      throw range_error("ScaleFunction: t outside scale domain");
  }
};

struct WeightFunction {
  enum class Kind { unit, exponential, custom };

  Kind kind = Kind::unit;
  double rate = 0.0;  // exponential: omega(t) = exp(rate * t)
  std::function<double(double)> f_eval;

  double eval(double t) const {
    switch (kind) {
      case Kind::unit: return 1.0;
      case Kind::exponential: return std::exp(rate * t);
      case Kind::custom: {
        double w = f_eval(t);
        if (!(w > 0.0)) throw config_error("WeightFunction: weight must stay positive");
        return w;
      }
    }
    return 1.0;
  }
};

// Admissible pair (psi, omega): the medium's internal clock plus a strictly
// positive weight on the same domain.
struct StructurePair {
  ScaleFunction scale;
  WeightFunction weight;
};

namespace detail {

// Sampled admissibility check used for custom triples: strict monotonicity,
// positive derivative, inverse consistency, and a surjectivity probe at the
// domain ends.
inline void validate_scale(const ScaleFunction& s) {
  const double lo = std::isinf(s.domain_lo) ? -40.0 : s.domain_lo;
  const double hi = std::isinf(s.domain_hi) ? 40.0 : s.domain_hi;
  const int n = 257;
  double prev = 0.0;
  for (int i = 1; i < n; ++i) {
    const double t = lo + (hi - lo) * i / n;
    const double y = s.eval(t);
    if (i > 1 && !(y > prev))
      throw config_error("make_scale: sampled eval is not strictly increasing");
    prev = y;
    if (!(s.deriv(t) > 0.0))
      throw config_error("make_scale: derivative must be positive on the domain");
    const double back = s.inverse(y);
    if (std::abs(back - t) > 1e-10 * std::max(1.0, std::abs(t)))
      throw config_error("make_scale: inverse(eval(t)) deviates from t");
  }
  // eval must blow up toward the domain ends (psi maps onto all of R)
  auto probe = [&](double frac) { return lo + (hi - lo) * frac; };
  if (!(s.eval(probe(1.0 / n)) < -1e2) || !(s.eval(probe(1.0 - 1.0 / n)) > 1e2))
    throw config_error("make_scale: eval does not diverge toward the domain endpoints");
}

}  // namespace detail

inline ScaleFunction make_scale(ScaleFunction::Kind kind, double beta = 1.0) {
  ScaleFunction s;
  s.kind = kind;
  switch (kind) {
    case ScaleFunction::Kind::identity:
      break;
    case ScaleFunction::Kind::signed_power:
      if (!(beta > 0.0)) throw config_error("make_scale: signed-power needs beta > 0");
      s.beta = beta;
      break;
    case ScaleFunction::Kind::logarithmic:
      s.domain_lo = 0.0;
      break;
    case ScaleFunction::Kind::custom:
      throw config_error("make_scale: custom scales go through make_custom_scale");
  }
  return s;
}

inline ScaleFunction make_custom_scale(std::function<double(double)> eval,
                                       std::function<double(double)> deriv,
                                       std::function<double(double)> inverse,
                                       double domain_lo, double domain_hi) {
  ScaleFunction s;
  s.kind = ScaleFunction::Kind::custom;
  s.f_eval = std::move(eval);
  s.f_deriv = std::move(deriv);
  s.f_inverse = std::move(inverse);
  s.domain_lo = domain_lo;
  s.domain_hi = domain_hi;
  detail::validate_scale(s);
  return s;
}

inline WeightFunction make_weight_unit() { return {}; }

inline WeightFunction make_weight_exponential(double rate) {
  WeightFunction w;
  w.kind = WeightFunction::Kind::exponential;
  w.rate = rate;
  return w;
}

inline WeightFunction make_custom_weight(std::function<double(double)> eval) {
  WeightFunction w;
  w.kind = WeightFunction::Kind::custom;
  w.f_eval = std::move(eval);
  return w;
}

inline StructurePair identity_structure() { return {make_scale(ScaleFunction::Kind::identity), {}}; }

namespace detail {

inline void check_edge_decay(const SampledSignal& v, const char* who, Diagnostics* diag) {
  double peak = 0.0;
  for (const cplx& z : v.values) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return;
  const double edge = std::max(std::abs(v.values.front()), std::abs(v.values.back()));
  if (edge > 1e-8 * peak)
    warn_into(diag, std::string(who) + ": signal edge magnitude " + std::to_string(edge / peak) +
                        " of peak exceeds 1e-8 (window may truncate the tails)");
}

}  // namespace detail

// v(y) = omega(psi^{-1}(y)) * u(psi^{-1}(y)); u interpolated cubically between
// its lab-time samples.
inline SampledSignal warp_signal(const SampledSignal& u, const StructurePair& s,
                                 const GridSpec& y_grid, Diagnostics* diag = nullptr) {
  u.require(Domain::lab_time, "warp_signal");
  SampledSignal v;
  v.domain = Domain::warped_time;
  v.start = y_grid.start;
  v.step = y_grid.step;
  v.values.resize(y_grid.count);
  for (std::size_t j = 0; j < y_grid.count; ++j) {
    const double t = s.scale.inverse(y_grid.point(j));
    const cplx uj = detail::cubic_interp(u.values, u.start, u.step, t);
    v.values[j] = s.weight.eval(t) * uj;
  }
  detail::check_edge_decay(v, "warp_signal", diag);
  return v;
}

// u(t) = v(psi(t)) / omega(t); inverse of warp_signal up to interpolation.
inline SampledSignal unwarp_signal(const SampledSignal& v, const StructurePair& s,
                                   const GridSpec& t_grid, Diagnostics* diag = nullptr) {
  (void)diag;
  v.require(Domain::warped_time, "unwarp_signal");
  SampledSignal u;
  u.domain = Domain::lab_time;
  u.start = t_grid.start;
  u.step = t_grid.step;
  u.values.resize(t_grid.count);
  for (std::size_t j = 0; j < t_grid.count; ++j) {
    const double t = t_grid.point(j);
    const double y = s.scale.eval(t);
    u.values[j] = detail::cubic_interp(v.values, v.start, v.step, y) / s.weight.eval(t);
  }
  return u;
}

}  // namespace wws
