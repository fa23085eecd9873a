#pragma once
/**
 * @brief Brute-force and finite-difference checks of the closed forms.
 *
 * Oracles differentiate energies numerically and compare against the analytic
 * derivative and the operator route; they never use the analytic derivative as the
 * numerical reference.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "polyharm/critical_points.hpp"
#include "polyharm/finite_difference.hpp"
#include "polyharm/reduced_energy.hpp"
#include "polyharm/section_calculus.hpp"

namespace polyharm {

struct OracleReport {
  std::string name;
  double max_residual = 0.0;
  int samples = 0;
  bool passed = false;
  double tolerance = 0.0;
  /// Per-route residuals of single-point checks, keyed by route name.
  std::map<std::string, double> routes;
};

/// Builds a report with passed == (max_residual <= tolerance). NaN never passes.
inline OracleReport make_oracle_report(std::string name, double max_residual, int samples, double tolerance,
                                       std::map<std::string, double> routes = {}) {
  OracleReport out;
  out.name = std::move(name);
  out.max_residual = max_residual;
  out.samples = samples;
  out.tolerance = tolerance;
  out.passed = max_residual <= tolerance;
  out.routes = std::move(routes);
  return out;
}

/// |a - b| / max(1, |a|, |b|)
inline double scaled_difference(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Three routes to d/dt E_r(phi_{alpha+t}) at t = 0:
///   fd        finite differences of total_energy
///   analytic  1/2 Vol(S^{n-1}) (n-1)^r eps_r'(alpha)
///   tension   -Vol(S^{n-1}) * tau_r coefficient
/// The residual is the largest pairwise difference over max(1, |routes|, E_r(alpha)).
inline OracleReport verify_variation(double alpha, int n, int r, double tol = 1e-7) {
  const HypersphereConfig cfg(r, n);
  const double vol = unit_sphere_volume(n - 1);
  const double fd = fd_derivative([&](double a) { return total_energy(cfg, a); }, alpha, 1);
  const double analytic = 0.5 * vol * ipow(n - 1.0, r) * eps_r_deriv(alpha, r, 1);
  const double tension_route = -vol * tau_r(alpha, n, r).coeff;
  const double scale =
      std::max({1.0, std::abs(fd), std::abs(analytic), std::abs(tension_route), total_energy(cfg, alpha)});
  const double worst =
      std::max({std::abs(fd - analytic), std::abs(fd - tension_route), std::abs(analytic - tension_route)}) / scale;
  return make_oracle_report("variation(alpha=" + std::to_string(alpha) + ",n=" + std::to_string(n) +
                                ",r=" + std::to_string(r) + ")",
                            worst, 1, tol, {{"fd", fd}, {"analytic", analytic}, {"tension", tension_route}});
}

/// d eps_C / d alpha by finite differences, divided by eps_C (log-derivative), which keeps
/// the residual dimensionless when the bracket power (r-2) makes eps_C very large.
inline double fd_clifford_log_slope(double alpha, const CliffordConfig& cfg) {
  const double h = std::min(default_fd_step(alpha), 0.25 * std::min(alpha, 0.5 * std::numbers::pi - alpha));
  const double slope = fd_derivative([&](double a) { return eps_C(a, cfg); }, alpha, 1, h);
  return slope / eps_C(alpha, cfg);
}

/// r = 2: eps_2^C = sin^2 cos^2 is critical only at alpha = pi/4, i.e. t = 1/2.
inline OracleReport verify_biharmonic_clifford(double t, int p, int q, double tol = 1e-8) {
  const CliffordConfig cfg = CliffordConfig::from_parameter(p, q, 2, t);
  const double alpha = std::asin(std::sqrt(t));
  const double fd = std::abs(fd_clifford_log_slope(alpha, cfg));
  const double offset = std::abs(t - 0.5);
  return make_oracle_report("biharmonic_clifford(t=" + std::to_string(t) + ")", std::max(fd, offset), 1, tol,
                            {{"fd_eps_C", fd}, {"half_offset", offset}});
}

/// With R1^2 = sin^2 alpha = t: finite-difference slope of eps_C, the polynomial
/// criticality residual, and |P(t)|. At a genuine root all three vanish together.
inline OracleReport verify_clifford_criticality(double t, int p, int q, int r, double tol = 1e-8) {
  if (r == 2) return verify_biharmonic_clifford(t, p, q, tol);
  const CliffordConfig cfg = CliffordConfig::from_parameter(p, q, r, t);
  const double alpha = std::asin(std::sqrt(t));
  const double fd = std::abs(fd_clifford_log_slope(alpha, cfg));
  const double res334 = std::abs(residual_334(t, cfg));
  const double poly = std::abs(build_P(p, q, r)(t));
  return make_oracle_report("clifford_criticality(t=" + std::to_string(t) + ",p=" + std::to_string(p) +
                                ",q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")",
                            std::max({fd, res334, poly}), 1, tol,
                            {{"fd_eps_C", fd}, {"residual_334", res334}, {"poly", poly}});
}

/// Hypersphere report at alpha*: numerical first derivative of eps_r vanishes and the
/// numerical second derivative is strictly negative.
inline OracleReport verify_hypersphere_report(const SolutionReport& report, int r, double tol = 1e-7) {
  auto energy = [&](double a) { return eps_r(a, r); };
  const double slope = std::abs(fd_derivative(energy, report.alpha_star, 1));
  const double curvature = fd_derivative(energy, report.alpha_star, 2);
  const double residual = curvature < 0.0 ? slope : std::numeric_limits<double>::infinity();
  return make_oracle_report("hypersphere(r=" + std::to_string(r) + ")", residual, 1, tol,
                            {{"fd_eps_deriv", slope}, {"fd_eps_second", curvature}});
}

}  // namespace polyharm
