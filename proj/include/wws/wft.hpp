#pragma once

// Weighted Fourier transform and its inverse. The forward transform is
// computed through the factorization  F o Q_psi^{-1} o M_omega : the input is
// warped onto a uniform grid in y = psi(t), where the classical transform is
// taken by trapezoidal quadrature with the symmetric 1/sqrt(2pi) convention.
// A slow direct-quadrature version lives in the oracle namespace for
// cross-checking the factorization itself.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wws/errors.hpp"
#include "wws/signal.hpp"
#include "wws/structure.hpp"

namespace wws {

struct WftOptions {
  // Step of the internal warped grid; 0 picks u.step * min(psi') over the
  // input grid. Override where the automatic choice oversamples (log scales
  // with wide lab windows).
  double y_step = 0.0;
};

namespace detail {

inline GridSpec warped_grid(const SampledSignal& u, const ScaleFunction& scale, double y_step) {
  const double y0 = scale.eval(u.point(0));
  const double y1 = scale.eval(u.back());
  if (y_step <= 0.0) {
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < u.size(); ++j)
      dmin = std::min(dmin, scale.deriv(u.point(j)));
    y_step = u.step * dmin;
  }
  GridSpec g;
  g.start = y0;
  g.step = y_step;
  g.count = static_cast<std::size_t>((y1 - y0) / y_step) + 1;
  return g;
}

// sum_j w_j v_j exp(-i xi y_j) via a complex rotation recurrence; trapezoid
// weights at the ends.
inline cplx oscillatory_sum(const std::vector<cplx>& v, double y0, double h, double xi) {
  const cplx rot0 = std::polar(1.0, -xi * y0);
  const cplx step = std::polar(1.0, -xi * h);
  cplx rot = rot0;
  cplx acc = 0.5 * v.front() * rot;
  const std::size_t n = v.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    rot *= step;
    acc += v[j] * rot;
  }
  rot *= step;
  acc += 0.5 * v.back() * rot;
  return acc;
}

}  // namespace detail

inline SampledSignal forward_wft(const SampledSignal& u, const StructurePair& s,
                                 const FrequencyGrid& freq, const WftOptions& opts = {},
                                 Diagnostics* diag = nullptr) {
  u.require(Domain::lab_time, "forward_wft");
  const GridSpec yg = detail::warped_grid(u, s.scale, opts.y_step);
  const SampledSignal v = warp_signal(u, s, yg, diag);
  SampledSignal out;
  out.domain = Domain::frequency;
  out.start = freq.point(0);
  out.step = freq.step;
  out.values.resize(freq.size());
  const double norm = yg.step / std::sqrt(2.0 * M_PI);
  for (std::size_t i = 0; i < freq.size(); ++i)
    out.values[i] = norm * detail::oscillatory_sum(v.values, yg.start, yg.step, freq.point(i));
  return out;
}

inline SampledSignal inverse_wft(const SampledSignal& spec, const StructurePair& s,
                                 const GridSpec& t_grid, Diagnostics* diag = nullptr) {
  spec.require(Domain::frequency, "inverse_wft");
  detail::check_edge_decay(spec, "inverse_wft", diag);
  SampledSignal u;
  u.domain = Domain::lab_time;
  u.start = t_grid.start;
  u.step = t_grid.step;
  u.values.resize(t_grid.count);
  const double norm = spec.step / std::sqrt(2.0 * M_PI);
  for (std::size_t j = 0; j < t_grid.count; ++j) {
    const double t = t_grid.point(j);
    const double y = s.scale.eval(t);
    // conjugate recurrence: exp(+i xi y)
    cplx acc = detail::oscillatory_sum(spec.values, -spec.start, -spec.step, y);
    u.values[j] = acc * norm / s.weight.eval(t);
  }
  return u;
}

// <u, v> = int u conj(v) omega psi' dt on a shared lab-time grid.
inline cplx weighted_inner_product(const SampledSignal& u, const SampledSignal& v,
                                   const StructurePair& s) {
  u.require(Domain::lab_time, "weighted_inner_product");
  v.require(Domain::lab_time, "weighted_inner_product");
  if (u.size() != v.size() || u.start != v.start || u.step != v.step)
    throw grid_error("weighted_inner_product: signals live on different grids");
  cplx acc = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double t = u.point(j);
    const double w = ((j == 0 || j + 1 == u.size()) ? 0.5 : 1.0) * s.weight.eval(t) *
                     s.scale.deriv(t);
    acc += w * u.values[j] * std::conj(v.values[j]);
  }
  return acc * u.step;
}

inline double weighted_norm(const SampledSignal& u, const StructurePair& s) {
  return std::sqrt(std::abs(weighted_inner_product(u, u, s)));
}

struct PlancherelReport {
  double norm_time = 0.0;
  double norm_freq = 0.0;
  double rel_error = 0.0;
};

// Unitarity check. The transform is an isometry onto L2 with respect to the
// rectified measure omega^2 psi' dt (the norm of omega*u in warped time), so
// that is what norm_time measures.
inline PlancherelReport plancherel_check(const SampledSignal& u, const StructurePair& s,
                                         const FrequencyGrid& freq, const WftOptions& opts = {},
                                         Diagnostics* diag = nullptr) {
  u.require(Domain::lab_time, "plancherel_check");
  double nt2 = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double t = u.point(j);
    const double w = (j == 0 || j + 1 == u.size()) ? 0.5 : 1.0;
    const double om = s.weight.eval(t);
    nt2 += w * std::norm(u.values[j]) * om * om * s.scale.deriv(t);
  }
  nt2 *= u.step;
  const SampledSignal spec = forward_wft(u, s, freq, opts, diag);
  double nf2 = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double w = (i == 0 || i + 1 == spec.size()) ? 0.5 : 1.0;
    nf2 += w * std::norm(spec.values[i]);
  }
  nf2 *= spec.step;
  PlancherelReport rep;
  rep.norm_time = std::sqrt(nt2);
  rep.norm_freq = std::sqrt(nf2);
  rep.rel_error = std::abs(rep.norm_time - rep.norm_freq) / std::max(rep.norm_time, 1e-300);
  return rep;
}

}  // namespace wws
