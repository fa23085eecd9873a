#pragma once
/**
 * @brief Classified critical points of the reduced energies.
 *
 * Hyperspheres: the unique proper critical radius is R = 1/sqrt(r), with the
 * harmonic equator alpha = pi/2 between the two mirror-image solutions.
 *
 * Clifford tori: for r >= 3 the admissible parameters t = R1^2 are the roots in (0, 1)
 * of the cubic
 *   P(t) = r(p+q) t^3 + [q - p - r(q + 2p)] t^2 + (2p + rp) t - p,
 * while r = 2 is special-cased (t = 1/2, proper iff p != q).
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyharm/errors.hpp"
#include "polyharm/reduced_energy.hpp"

namespace polyharm {

enum class SolutionKind { harmonic, minimal, proper_r_harmonic };

constexpr std::string_view to_string(SolutionKind kind) noexcept {
  switch (kind) {
    case SolutionKind::harmonic:
      return "harmonic";
    case SolutionKind::minimal:
      return "minimal";
    case SolutionKind::proper_r_harmonic:
      return "proper_r_harmonic";
  }
  return "unknown";
}

struct SolutionReport {
  /// R for hyperspheres, t = R1^2 for Clifford tori.
  double parameter = 0.0;
  double alpha_star = 0.0;
  SolutionKind kind = SolutionKind::proper_r_harmonic;
  /// Empty when no second-variation statement is available (Clifford tori).
  std::optional<bool> stable;
  std::optional<double> r1;
  std::optional<double> r2;
  std::map<std::string, double> residuals;
};

struct CubicPolynomial {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double t) const noexcept { return ((c3 * t + c2) * t + c1) * t + c0; }
  double derivative(double t) const noexcept { return (3.0 * c3 * t + 2.0 * c2) * t + c1; }
  double second_derivative(double t) const noexcept { return 6.0 * c3 * t + 2.0 * c2; }
  /// Sum of |coefficients|; scale for absolute tolerances on P(t), t in [0, 1].
  double magnitude() const noexcept { return std::abs(c3) + std::abs(c2) + std::abs(c1) + std::abs(c0); }
};

namespace detail {

inline void require_clifford_args(int p, int q, int r) {
  require_domain(p >= 1 && q >= 1, "sphere dimensions p, q must be >= 1");
  require_order(r);
}

inline constexpr double admissibility_margin = 1e-9;
inline constexpr double minimality_tolerance = 1e-9;
inline constexpr int scan_points = 4096;

}  // namespace detail

inline CubicPolynomial build_P(int p, int q, int r) {
  detail::require_clifford_args(p, q, r);
  return CubicPolynomial{
      static_cast<double>(r * (p + q)),
      static_cast<double>(q - p - r * (q + 2 * p)),
      static_cast<double>(2 * p + r * p),
      static_cast<double>(-p),
  };
}

/// (r^4 - 4r^3 + 24r^2 - 40r - 8) pq + 4(1-r)^3 (p^2 + q^2).
/// Equals disc(P) / (pq), so a positive value means three distinct real roots of P,
/// all of which lie in (0, 1).
inline double discriminant_condition(int p, int q, int r) {
  detail::require_clifford_args(p, q, r);
  if (r < 3) throw UnsupportedOrder("the discriminant condition is stated for r >= 3");
  const std::int64_t R = r;
  const std::int64_t P = p;
  const std::int64_t Q = q;
  const std::int64_t lead = R * R * R * R - 4 * R * R * R + 24 * R * R - 40 * R - 8;
  const std::int64_t one_minus = 1 - R;
  const std::int64_t value = lead * P * Q + 4 * one_minus * one_minus * one_minus * (P * P + Q * Q);
  return static_cast<double>(value);
}

/// |p/R1^2 - q/R2^2| with R1^2 = t, R2^2 = 1 - t. Vanishes exactly at the minimal torus.
inline double minimality_factor(double t, int p, int q) { return p / t - q / (1.0 - t); }

/// Minimal iff t = p/(p+q) within 1e-9, otherwise proper.
inline SolutionKind classify_clifford(double t, int p, int q) {
  const double minimal_t = static_cast<double>(p) / static_cast<double>(p + q);
  return std::abs(t - minimal_t) <= detail::minimality_tolerance ? SolutionKind::minimal
                                                                 : SolutionKind::proper_r_harmonic;
}

namespace detail {

/// Root of a monotone function on [lo, hi] with f(lo), f(hi) of opposite sign.
/// Bisection down to a coarse width, then Newton steps safeguarded by the bracket.
template <class F, class DF>
double bracketed_root(const F& f, const DF& df, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int it = 0; it < 60 && hi - lo > 1e-6 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double slope = df(x);
    double next = (slope != 0.0) ? x - fx / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x || hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

/// Interior zeros of the quadratic P' on (lo, hi): P' is monotone on each side of
/// the zero of P'' so every sign change isolates exactly one root.
inline std::vector<double> derivative_zeros(const CubicPolynomial& poly, double lo, double hi) {
  auto d1 = [&](double t) { return poly.derivative(t); };
  auto d2 = [&](double t) { return poly.second_derivative(t); };
  std::vector<double> cuts{lo};
  if (poly.c3 != 0.0) {
    const double inflection = -poly.c2 / (3.0 * poly.c3);
    if (inflection > lo && inflection < hi) cuts.push_back(inflection);
  }
  cuts.push_back(hi);
  std::vector<double> zeros;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    const double fa = d1(a);
    const double fb = d1(b);
    if (fa == 0.0 && a > lo) zeros.push_back(a);
    if (fa != 0.0 && fb != 0.0 && std::signbit(fa) != std::signbit(fb)) {
      zeros.push_back(bracketed_root(d1, d2, a, b));
    }
  }
  // A double zero of P' at the inflection point (triple root of P) never changes sign.
  if (cuts.size() == 3) {
    const double inflection = cuts[1];
    if (std::abs(d1(inflection)) <= 64.0 * std::numeric_limits<double>::epsilon() * poly.magnitude() &&
        std::find(zeros.begin(), zeros.end(), inflection) == zeros.end()) {
      zeros.push_back(inflection);
    }
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

}  // namespace detail

/// All real roots of `poly` in the open interval (lo, hi).
///
/// The interval is cut at a uniform 4096-point grid and at every critical point of P,
/// so P is monotone between consecutive cuts: each sign change brackets exactly one
/// root, refined by bisection then Newton. A critical point with |P| <= tol * |P|_1 is
/// reported as a tangential (even-multiplicity) root. Roots closer than `tol` are merged.
inline std::vector<double> root_solve(const CubicPolynomial& poly, double lo, double hi, double tol) {
  detail::require_domain(tol > 0.0, "root tolerance must be positive");
  detail::require_domain(lo < hi, "root interval must be nonempty");
  auto f = [&](double t) { return poly(t); };
  auto df = [&](double t) { return poly.derivative(t); };

  const std::vector<double> critical = detail::derivative_zeros(poly, lo, hi);
  std::vector<double> cuts;
  cuts.reserve(detail::scan_points + critical.size());
  const double step = (hi - lo) / (detail::scan_points - 1);
  for (int i = 0; i < detail::scan_points; ++i) {
    cuts.push_back(i == detail::scan_points - 1 ? hi : lo + i * step);
  }
  cuts.insert(cuts.end(), critical.begin(), critical.end());
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (a == b) continue;
    const double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0 && a > lo) roots.push_back(a);
    if (fa != 0.0 && fb != 0.0 && std::signbit(fa) != std::signbit(fb)) {
      roots.push_back(detail::bracketed_root(f, df, a, b));
    }
  }
  const double touch = tol * poly.magnitude();
  for (double c : critical) {
    if (std::abs(f(c)) <= touch) roots.push_back(c);
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double x : roots) {
    if (!(x > lo && x < hi)) continue;
    if (!merged.empty() && x - merged.back() < tol) {
      if (std::abs(f(x)) < std::abs(f(merged.back()))) merged.back() = x;
      continue;
    }
    merged.push_back(x);
  }
  return merged;
}

/// The proper r-harmonic hypersphere: R = 1/sqrt(r), alpha* = arcsin R.
inline SolutionReport solve_hypersphere(int r) {
  detail::require_order(r);
  SolutionReport out;
  out.parameter = 1.0 / std::sqrt(static_cast<double>(r));
  out.alpha_star = std::asin(out.parameter);
  out.kind = SolutionKind::proper_r_harmonic;
  out.stable = eps_r_deriv(out.alpha_star, r, 2) >= 0.0;
  out.residuals["eps_deriv"] = std::abs(eps_r_deriv(out.alpha_star, r, 1));
  return out;
}

/// All critical points of eps_r on (0, pi), ascending: alpha*, pi/2, pi - alpha*.
/// The equator is harmonic; it carries zero energy, the global minimum, so it is flagged stable.
inline std::vector<SolutionReport> enumerate_hypersphere_criticals(int r) {
  const SolutionReport first = solve_hypersphere(r);

  SolutionReport equator;
  equator.alpha_star = 0.5 * std::numbers::pi;
  equator.parameter = 1.0;
  equator.kind = SolutionKind::harmonic;
  equator.stable = true;
  equator.residuals["eps_deriv"] = std::abs(eps_r_deriv(equator.alpha_star, r, 1));

  SolutionReport mirror = first;
  mirror.alpha_star = std::numbers::pi - first.alpha_star;
  mirror.residuals["eps_deriv"] = std::abs(eps_r_deriv(mirror.alpha_star, r, 1));

  return {first, equator, mirror};
}

namespace detail {

inline SolutionReport clifford_report(double t, int p, int q, int r, SolutionKind kind) {
  SolutionReport out;
  out.parameter = t;
  out.alpha_star = std::asin(std::sqrt(t));
  out.kind = kind;
  out.r1 = std::sqrt(t);
  out.r2 = std::sqrt(1.0 - t);
  const CliffordConfig cfg = CliffordConfig::from_parameter(p, q, r, t);
  out.residuals["poly"] = std::abs(build_P(p, q, r)(t));
  if (r >= 3) {
    out.residuals["residual_334"] = std::abs(residual_334(t, cfg));
  } else {
    out.residuals["eps_C_deriv"] = std::abs(eps_C_deriv(out.alpha_star, cfg));
  }
  return out;
}

}  // namespace detail

/// Admissible Clifford parameters t = R1^2 for order r, ascending.
inline std::vector<SolutionReport> solve_clifford(int p, int q, int r) {
  detail::require_clifford_args(p, q, r);
  std::vector<SolutionReport> out;

  if (r == 2) {
    const auto kind = (p == q) ? SolutionKind::minimal : SolutionKind::proper_r_harmonic;
    out.push_back(detail::clifford_report(0.5, p, q, r, kind));
    return out;
  }

  if (p == q) {
    // P(t) = p (2t - 1)(r t^2 - r t + 1): closed-form roots, 1/2 is exactly p/(p+q).
    out.push_back(detail::clifford_report(0.5, p, q, r, SolutionKind::minimal));
    if (r > 4) {
      const double half_width = 0.5 * std::sqrt(static_cast<double>(r - 4) / r);
      out.insert(out.begin(), detail::clifford_report(0.5 - half_width, p, q, r, SolutionKind::proper_r_harmonic));
      out.push_back(detail::clifford_report(0.5 + half_width, p, q, r, SolutionKind::proper_r_harmonic));
    }
    return out;
  }

  const CubicPolynomial poly = build_P(p, q, r);
  for (double t : root_solve(poly, 0.0, 1.0, 1e-12)) {
    if (t <= detail::admissibility_margin || t >= 1.0 - detail::admissibility_margin) continue;
    out.push_back(detail::clifford_report(t, p, q, r, classify_clifford(t, p, q)));
  }
  return out;
}

}  // namespace polyharm
