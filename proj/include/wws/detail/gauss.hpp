#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

namespace wws::detail {

struct GaussRule {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

// Gauss-Legendre nodes by Newton iteration on P_n; cached per order.
inline const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache = [] {
    std::map<int, GaussRule> m;
    for (int n : {4, 8, 16, 32, 64, 96}) {
      GaussRule r;
      r.x.resize(n);
      r.w.resize(n);
      for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
          double p0 = 1.0, p1 = x;
          for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
          }
          dp = n * (x * p1 - p0) / (x * x - 1.0);
          double dx = p1 / dp;
          x -= dx;
          if (std::abs(dx) < 1e-15) break;
        }
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
      }
      m.emplace(n, std::move(r));
    }
    return m;
  }();
  return cache.at(n);
}

template <class F>
auto gauss_panel(F&& f, double a, double b, int n = 16) {
  const GaussRule& r = gauss_legendre(n);
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  decltype(f(mid)) acc{};
  for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(mid + hw * r.x[i]);
  return acc * hw;
}

}  // namespace wws::detail
