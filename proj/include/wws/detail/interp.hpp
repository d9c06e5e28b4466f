#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "wws/errors.hpp"
#include "wws/signal.hpp"

namespace wws::detail {

// Local 4-point (cubic Lagrange) interpolation on a uniform grid. The stencil
// shifts at the ends, so x may sit anywhere inside [x0, x0 + (n-1)h].
inline cplx cubic_interp(const std::vector<cplx>& v, double x0, double h, double x) {
  const std::size_t n = v.size();
  if (n < 4) throw grid_error("cubic_interp: need at least 4 samples");
  const double s = (x - x0) / h;
  const double slack = 1e-9;
  if (s < -slack || s > static_cast<double>(n - 1) + slack)
    throw range_error("cubic_interp: point outside grid");
  long j = static_cast<long>(std::floor(s));
  long base = std::clamp<long>(j - 1, 0, static_cast<long>(n) - 4);
  const double t = s - static_cast<double>(base);
  // Lagrange weights at offsets 0..3
  const double w0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  const double w1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  const double w2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  const double w3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return w0 * v[base] + w1 * v[base + 1] + w2 * v[base + 2] + w3 * v[base + 3];
}

}  // namespace wws::detail
