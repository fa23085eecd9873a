#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <vector>

#include "polyharm/errors.hpp"

namespace polyharm {

/// Default step: 1e-4 * max(1, |x|).
inline double default_fd_step(double x) noexcept { return 1e-4 * std::max(1.0, std::abs(x)); }

/// Central difference of order 1 or 2 with one level of Richardson extrapolation
/// between steps h and 2h. Evaluates f on [x - 2h, x + 2h]; truncation error O(h^4).
template <std::invocable<double> F>
double fd_derivative(F&& f, double x, int order, double h) {
  detail::require_domain(h > 0.0 && std::isfinite(h), "finite-difference step must be positive");
  auto central = [&](double step) {
    const double fp = f(x + step);
    const double fm = f(x - step);
    if (order == 1) return (fp - fm) / (2.0 * step);
    return (fp - 2.0 * f(x) + fm) / (step * step);
  };
  if (order != 1 && order != 2) throw DomainError("derivative order must be 1 or 2");
  return (4.0 * central(h) - central(2.0 * h)) / 3.0;
}

template <std::invocable<double> F>
double fd_derivative(F&& f, double x, int order) {
  return fd_derivative(std::forward<F>(f), x, order, default_fd_step(x));
}

struct Bracket {
  double lo;
  double hi;
};

/// Sign-change brackets of f on a uniform grid of `grid_points` over [a, b].
/// An exact zero at an interior grid point yields the degenerate bracket [x, x];
/// zeros at the endpoints are ignored (the interval is treated as open).
template <std::invocable<double> F>
std::vector<Bracket> scan_roots(F&& f, double a, double b, int grid_points) {
  detail::require_domain(grid_points >= 2, "scan needs at least two grid points");
  detail::require_domain(a < b, "scan interval must be nonempty");
  std::vector<Bracket> out;
  const double step = (b - a) / (grid_points - 1);
  double prev_x = a;
  double prev_f = f(a);
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? b : a + i * step;
    const double fx = f(x);
    const bool interior = i < grid_points - 1;
    if (fx == 0.0 && interior) {
      out.push_back({x, x});
    } else if (prev_f != 0.0 && fx != 0.0 && std::signbit(prev_f) != std::signbit(fx)) {
      out.push_back({prev_x, x});
    }
    prev_x = x;
    prev_f = fx;
  }
  return out;
}

}  // namespace polyharm
