#pragma once

#include <stdexcept>
#include <string>

namespace wws {

// Library-wide base so callers can catch everything from this code in one go.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad construction parameters or malformed configuration.
struct config_error : error {
  using error::error;
};

// Evaluation requested outside a grid or scale domain.
struct range_error : error {
  using error::error;
};

// Grid/domain-tag mismatch between signals.
struct grid_error : error {
  using error::error;
};

// A kernel has no closed time form for the requested slot; callers should
// switch to the spectral route.
struct unsupported_form_error : error {
  using error::error;
};

// Spectral multiplier unbounded or ellipticity violated; carries the
// offending frequency.
struct ill_posed_error : error {
  double xi;
  ill_posed_error(const std::string& what, double xi_) : error(what), xi(xi_) {}
};

// Tail integral diverges (decay exponent too small for the growth exponent).
struct divergent_tail_error : error {
  using error::error;
};

// Kernel class has no known Levy-density representation.
struct no_levy_error : error {
  using error::error;
};

// Adaptive quadrature failed to reach the requested tolerance; carries the
// evaluation point it was working on.
struct convergence_error : error {
  double at;
  convergence_error(const std::string& what, double at_) : error(what), at(at_) {}
};

}  // namespace wws
