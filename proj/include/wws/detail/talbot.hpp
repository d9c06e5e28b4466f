#pragma once

#include <cmath>
#include <complex>

namespace wws::detail {

// Fixed Talbot rule for inverting a Laplace transform at a single y > 0.
// The deformed contour s(theta) = r*theta*(cot(theta) + i), r = 2M/(5y),
// wraps the negative real axis, so transforms with branch cuts or poles on
// (-inf, 0] are handled as long as they are analytic to the right of it.
// Cancellation costs roughly 0.17*M digits, leaving ~1e-8 relative accuracy
// at M = 32 -- ample for the solver tolerances here.
template <class F>
double talbot_invert(F&& gt, double y, int M = 32) {
  using cplx = std::complex<double>;
  const double r = 2.0 * M / (5.0 * y);
  double acc = 0.5 * std::real(gt(cplx(r, 0.0))) * std::exp(r * y);
  for (int k = 1; k < M; ++k) {
    const double th = k * M_PI / M;
    const double cot = std::cos(th) / std::sin(th);
    const cplx s(r * th * cot, r * th);
    const double sigma = th + (th * cot - 1.0) * cot;
    acc += std::real(std::exp(s * y) * gt(s) * cplx(1.0, sigma));
  }
  return acc * r / M;
}

}  // namespace wws::detail
