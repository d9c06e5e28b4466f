#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "wws/errors.hpp"

namespace wws {

using cplx = std::complex<double>;

enum class Domain { lab_time, warped_time, frequency };

// Uniform grid descriptor: points start + j*step, j = 0..count-1.
struct GridSpec {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double point(std::size_t j) const { return start + step * static_cast<double>(j); }
  double back() const { return point(count == 0 ? 0 : count - 1); }
};

// Complex samples of a function on a uniform grid, tagged with the domain the
// grid lives in (lab time t, warped time y, or frequency xi).
struct SampledSignal {
  Domain domain = Domain::lab_time;
  double start = 0.0;
  double step = 1.0;
  std::vector<cplx> values;

  std::size_t size() const { return values.size(); }
  double point(std::size_t j) const { return start + step * static_cast<double>(j); }
  double back() const { return point(size() == 0 ? 0 : size() - 1); }
  GridSpec grid() const { return {start, step, size()}; }

  void require(Domain d, const char* who) const {
    if (domain != d) throw grid_error(std::string(who) + ": unexpected signal domain");
    if (values.empty()) throw grid_error(std::string(who) + ": empty signal");
    if (!(step > 0.0)) throw grid_error(std::string(who) + ": non-positive grid step");
  }
};

template <class F>
SampledSignal sample_signal(Domain d, const GridSpec& g, F&& fn) {
  SampledSignal s;
  s.domain = d;
  s.start = g.start;
  s.step = g.step;
  s.values.resize(g.count);
  for (std::size_t j = 0; j < g.count; ++j) s.values[j] = cplx(fn(g.point(j)));
  return s;
}

// Symmetric frequency grid. Points sit at half-offsets (j + 1/2 - half)*step,
// so xi = 0 is never sampled (several symbols are singular or undefined there)
// while the grid stays exactly symmetric: xi in grid  =>  -xi in grid.
struct FrequencyGrid {
  double step = 0.0;
  std::size_t half = 0;

  std::size_t size() const { return 2 * half; }
  double point(std::size_t j) const {
    return (static_cast<double>(j) + 0.5 - static_cast<double>(half)) * step;
  }
  double max_abs() const { return (static_cast<double>(half) - 0.5) * step; }

  static FrequencyGrid symmetric(double xi_max, double xi_step) {
    if (!(xi_step > 0.0) || !(xi_max > xi_step))
      throw config_error("FrequencyGrid: need xi_max > xi_step > 0");
    FrequencyGrid g;
    g.step = xi_step;
    g.half = static_cast<std::size_t>(xi_max / xi_step + 0.5);
    return g;
  }
};

// Non-fatal findings (edge-decay violations and the like). Pass nullptr to
// ignore.
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

inline void warn_into(Diagnostics* d, std::string msg) {
  if (d) d->warn(std::move(msg));
}

}  // namespace wws
