#pragma once
/**
 * @brief Invariant batteries behind `polyharm verify`.
 *
 * Each battery sweeps a fixed, seeded sample set and folds the worst residual into a
 * single OracleReport. Finite-difference routes use the caller's tolerance; analytic
 * cross-evaluations use fixed tolerances.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "polyharm/christoffel.hpp"
#include "polyharm/critical_points.hpp"
#include "polyharm/fd_oracle.hpp"
#include "polyharm/finite_difference.hpp"
#include "polyharm/reduced_energy.hpp"
#include "polyharm/section_calculus.hpp"

namespace polyharm {

enum class Suite { energy, ladder, tau, clifford, all };

inline constexpr std::array<std::string_view, 5> suite_names{"energy", "ladder", "tau", "clifford", "all"};

inline Suite parse_suite(std::string_view name) {
  for (std::size_t i = 0; i < suite_names.size(); ++i) {
    if (suite_names[i] == name) return static_cast<Suite>(i);
  }
  throw DomainError("unknown suite: " + std::string(name));
}

namespace detail {

/// 200 interior points k pi / 201 of (0, pi).
inline std::vector<double> angle_grid(int points = 200, double upper = std::numbers::pi) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  for (int k = 1; k <= points; ++k) out.push_back(upper * k / (points + 1));
  return out;
}

inline double relative_to(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), std::numeric_limits<double>::min());
}

/// Largest scaled difference between Gamma^k_ij and Gamma^k_ji.
inline double symmetry_defect(const ChristoffelSample& g) {
  double worst = 0.0;
  const int n = g.dimension();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(g(k, i, j) - g(k, j, i)));
    }
  }
  return worst;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// energy

inline std::vector<OracleReport> energy_battery(double fd_tol) {
  std::vector<OracleReport> out;
  const auto grid = detail::angle_grid();

  double sym = 0.0;
  double rec = 0.0;
  double total_rec = 0.0;
  int count = 0;
  for (int r = 2; r <= 8; ++r) {
    for (double a : grid) {
      const double e = eps_r(a, r);
      const double scale = std::max(e, 1e-300);
      sym = std::max(sym, std::abs(eps_r(std::numbers::pi - a, r) - e) / scale);
      const double c = std::cos(a);
      rec = std::max(rec, std::abs(eps_r(a, r + 1) - c * c * e) / scale);
      for (int n = 2; n <= 5; ++n) {
        const double lower = total_energy(HypersphereConfig(r, n), a);
        const double upper = total_energy(HypersphereConfig(r + 1, n), a);
        total_rec = std::max(total_rec, std::abs(upper - (n - 1.0) * c * c * lower) / std::max(upper, 1e-300));
      }
      ++count;
    }
  }
  out.push_back(make_oracle_report("energy.symmetry", sym, count, 1e-12));
  out.push_back(make_oracle_report("energy.eps_recursion", rec, count, 1e-13));
  out.push_back(make_oracle_report("energy.total_recursion", total_rec, count * 4, 1e-13));

  std::mt19937_64 rng(20180713);
  std::uniform_real_distribution<double> angle(0.05, std::numbers::pi - 0.05);
  std::uniform_int_distribution<int> order(2, 10);
  double d1 = 0.0;
  double d2 = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = angle(rng);
    const int r = order(rng);
    const double fd1 = fd_derivative([&](double x) { return eps_r(x, r); }, a, 1);
    const double fd2 = fd_derivative([&](double x) { return eps_r_deriv(x, r, 1); }, a, 1);
    d1 = std::max(d1, std::abs(fd1 - eps_r_deriv(a, r, 1)));
    d2 = std::max(d2, std::abs(fd2 - eps_r_deriv(a, r, 2)));
  }
  out.push_back(make_oracle_report("energy.first_derivative_fd", d1, 100, fd_tol));
  out.push_back(make_oracle_report("energy.second_derivative_fd", d2, 100, fd_tol));

  double radii = 0.0;
  double fd_radii = 0.0;
  for (int r = 2; r <= 64; ++r) {
    const SolutionReport rep = solve_hypersphere(r);
    double bad = rep.residuals.at("eps_deriv");
    if (eps_r_deriv(rep.alpha_star, r, 2) >= 0.0 || rep.stable.value_or(true)) bad = 1.0;
    bad = std::max(bad, std::abs(rep.parameter - 1.0 / std::sqrt(static_cast<double>(r))));
    radii = std::max(radii, bad);
    fd_radii = std::max(fd_radii, verify_hypersphere_report(rep, r, fd_tol).max_residual);
  }
  out.push_back(make_oracle_report("energy.hypersphere_radii", radii, 63, 1e-12));
  out.push_back(make_oracle_report("energy.hypersphere_fd", fd_radii, 63, fd_tol));

  double route = 0.0;
  int route_samples = 0;
  for (int r = 2; r <= 8; ++r) {
    for (int n = 2; n <= 5; ++n) {
      for (double a : grid) {
        const double closed = total_energy(HypersphereConfig(r, n), a);
        if (closed == 0.0) continue;
        route = std::max(route, detail::relative_to(operator_energy(a, n, r), closed));
        ++route_samples;
      }
    }
  }
  out.push_back(make_oracle_report("energy.operator_route", route, route_samples, 1e-10));
  return out;
}

// ---------------------------------------------------------------------------
// ladder

inline std::vector<OracleReport> ladder_battery(double fd_tol) {
  std::vector<OracleReport> out;

  std::mt19937_64 rng(314159);
  std::uniform_real_distribution<double> angle(0.2, std::numbers::pi - 0.2);
  double table = 0.0;
  double sym = 0.0;
  constexpr int christoffel_samples = 50;
  for (int i = 0; i < christoffel_samples; ++i) {
    const int n = 2 + i % 5;
    std::vector<double> chart(static_cast<std::size_t>(n - 1));
    for (double& x : chart) x = angle(rng);
    const double a = angle(rng);
    const ChristoffelSample numeric = christoffel_numeric(a, chart, n);
    table = std::max(table, max_abs_difference(numeric, christoffel_closed(a, chart, n)));
    sym = std::max(sym, detail::symmetry_defect(numeric));
  }
  out.push_back(make_oracle_report("ladder.christoffel_table", table, christoffel_samples, fd_tol));
  out.push_back(make_oracle_report("ladder.christoffel_symmetry", sym, christoffel_samples, fd_tol));

  double g_err = 0.0;
  double h_err = 0.0;
  double power_err = 0.0;
  double frame_err = 0.0;
  int samples = 0;
  for (int n = 2; n <= 6; ++n) {
    for (double a : detail::angle_grid(50)) {
      const double s = std::sin(a);
      const double c = std::cos(a);
      const EquivariantSection tau = tension(a, n);
      const EquivariantSection g = apply_d(tau);
      const EquivariantSection h = apply_dstar(g);
      g_err = std::max(g_err, scaled_difference(g.coeff, -(n - 1.0) * c * c));
      h_err = std::max(h_err, scaled_difference(h.coeff, (n - 1.0) * g.coeff * s * c));
      h_err = std::max(h_err, scaled_difference(h.coeff, (n - 1.0) * tau.coeff * c * c));
      EquivariantSection iterate = tau;
      for (int k = 1; k <= 6; ++k) {
        iterate = rough_laplacian(iterate);
        power_err = std::max(power_err, scaled_difference(iterate.coeff, ipow((n - 1.0) * c * c, k) * tau.coeff));
        frame_err = std::max(frame_err, scaled_difference(nabla_frame(iterate).coeff, apply_d(iterate).coeff));
      }
      ++samples;
    }
  }
  out.push_back(make_oracle_report("ladder.d_tension", g_err, samples, 1e-12));
  out.push_back(make_oracle_report("ladder.dstar_d_tension", h_err, samples, 1e-12));
  out.push_back(make_oracle_report("ladder.laplacian_power", power_err, samples * 6, 1e-12));
  out.push_back(make_oracle_report("ladder.frame_matches_d", frame_err, samples * 6, 1e-12));
  return out;
}

// ---------------------------------------------------------------------------
// tau

inline std::vector<OracleReport> tau_battery(double fd_tol) {
  std::vector<OracleReport> out;
  double master = 0.0;
  double variation = 0.0;
  int samples = 0;
  for (int r = 2; r <= 6; ++r) {
    for (int n = 2; n <= 5; ++n) {
      for (double a : detail::angle_grid()) {
        const double assembled = tau_r(a, n, r).coeff;
        const double closed = -0.5 * ipow(n - 1.0, r) * eps_r_deriv(a, r, 1);
        master = std::max(master, scaled_difference(assembled, closed));
        variation = std::max(variation, verify_variation(a, n, r, fd_tol).max_residual);
        ++samples;
      }
    }
  }
  out.push_back(make_oracle_report("tau.master_identity", master, samples, 1e-9));
  out.push_back(make_oracle_report("tau.variation_three_way", variation, samples, fd_tol));

  double critical = 0.0;
  for (int r = 2; r <= 12; ++r) {
    for (int n = 2; n <= 5; ++n) {
      critical = std::max(critical, verify_variation(solve_hypersphere(r).alpha_star, n, r, fd_tol).max_residual);
      critical = std::max(critical, std::abs(tau_r(0.5 * std::numbers::pi, n, r).coeff));
    }
  }
  out.push_back(make_oracle_report("tau.vanishes_at_criticals", critical, 11 * 4, fd_tol));
  return out;
}

// ---------------------------------------------------------------------------
// clifford

/// Number of roots of P in (0, 1) seen by a uniform sign scan.
inline int scanned_root_count(int p, int q, int r, int grid_points) {
  const CubicPolynomial poly = build_P(p, q, r);
  return static_cast<int>(scan_roots([&](double t) { return poly(t); }, 0.0, 1.0, grid_points).size());
}

inline std::vector<OracleReport> clifford_battery(double fd_tol, int scan_grid = 100000) {
  std::vector<OracleReport> out;

  double boundary = 0.0;
  int cells = 0;
  double at_least_one = 0.0;
  double sufficiency = 0.0;
  double count_match = 0.0;
  double criticality = 0.0;
  int emitted = 0;
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      for (int r = 2; r <= 40; ++r) {
        const CubicPolynomial poly = build_P(p, q, r);
        boundary = std::max({boundary, std::abs(poly(0.0) + p), std::abs(poly(1.0) - q)});
        ++cells;
        const auto reports = solve_clifford(p, q, r);
        for (const SolutionReport& rep : reports) {
          criticality = std::max(criticality, verify_clifford_criticality(rep.parameter, p, q, r, fd_tol).max_residual);
          ++emitted;
        }
        if (r < 3) continue;
        if (reports.empty()) at_least_one = 1.0;
        const int scanned = scanned_root_count(p, q, r, scan_grid);
        const int solved = static_cast<int>(root_solve(poly, 0.0, 1.0, 1e-12).size());
        if (discriminant_condition(p, q, r) > 0.0 && (scanned != 3 || solved != 3)) sufficiency = 1.0;
        if (p != q && scanned != solved) count_match = 1.0;
      }
    }
  }
  out.push_back(make_oracle_report("clifford.boundary_values", boundary, cells, 0.0));
  out.push_back(make_oracle_report("clifford.at_least_one_root", at_least_one, cells, 0.0));
  out.push_back(make_oracle_report("clifford.discriminant_sufficiency", sufficiency, cells, 0.0));
  out.push_back(make_oracle_report("clifford.scan_matches_solver", count_match, cells, 0.0));
  out.push_back(make_oracle_report("clifford.root_criticality", criticality, emitted, 1e-8));

  double closed = 0.0;
  for (int r = 2; r <= 40; ++r) {
    const auto reports = solve_clifford(1, 1, r);
    if (r <= 4) {
      if (reports.size() != 1 || reports[0].parameter != 0.5 || reports[0].kind != SolutionKind::minimal) closed = 1.0;
      continue;
    }
    if (reports.size() != 3) {
      closed = 1.0;
      continue;
    }
    const double half_width = 0.5 * std::sqrt((r - 4.0) / r);
    closed = std::max({closed, std::abs(reports[0].parameter - (0.5 - half_width)),
                       std::abs(reports[2].parameter - (0.5 + half_width))});
  }
  out.push_back(make_oracle_report("clifford.equal_dimensions", closed, 39, 1e-10));

  std::mt19937_64 rng(1234567);
  std::uniform_int_distribution<int> dim(1, 16);
  double minimal = 0.0;
  for (int i = 0; i < 12; ++i) {
    const int p = dim(rng);
    const int q = dim(rng);
    const double t = static_cast<double>(p) / (p + q);
    double bad = std::abs(minimality_factor(t, p, q));
    if (classify_clifford(t, p, q) != SolutionKind::minimal) bad = 1.0;
    minimal = std::max(minimal, bad);
  }
  out.push_back(make_oracle_report("clifford.minimality", minimal, 12, 1e-10));
  return out;
}

inline std::vector<OracleReport> run_suite(Suite suite, double fd_tol) {
  std::vector<OracleReport> out;
  auto append = [&](std::vector<OracleReport> more) { out.insert(out.end(), more.begin(), more.end()); };
  if (suite == Suite::energy || suite == Suite::all) append(energy_battery(fd_tol));
  if (suite == Suite::ladder || suite == Suite::all) append(ladder_battery(fd_tol));
  if (suite == Suite::tau || suite == Suite::all) append(tau_battery(fd_tol));
  if (suite == Suite::clifford || suite == Suite::all) append(clifford_battery(fd_tol));
  return out;
}

}  // namespace polyharm
