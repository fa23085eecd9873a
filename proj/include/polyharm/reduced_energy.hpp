#pragma once
/**
 * @brief Reduced (one-variable) r-energies of the two equivariant map families.
 *
 * Hypersphere family: w -> (sin a * w, cos a) from S^{n-1} into S^n. Its r-energy is
 *   E_r = 1/2 Vol(S^{n-1}) (n-1)^r eps_r(a),   eps_r(a) = sin^2 a cos^{2(r-1)} a.
 *
 * Clifford family: S^p(R1) x S^q(R2) -> S^{p+q+1}, (R1 w, R2 z) -> (sin a w, cos a z).
 * Up to a positive constant its r-energy is
 *   eps_C(a) = sin^2 a cos^2 a [ (p/R1^2) cos^2 a + (q/R2^2) sin^2 a ]^{r-2}.
 *
 * All derivatives here are hand-differentiated closed forms. Angles are radians.
 */

#include <cmath>
#include <numbers>
#include <string>

#include "polyharm/errors.hpp"

namespace polyharm {

/// x^k, k >= 0, by repeated multiplication. ipow(x, 0) == 1 for every x, including 0.
constexpr double ipow(double x, int k) noexcept {
  double out = 1.0;
  for (; k > 0; --k) out *= x;
  return out;
}

/// Vol(S^m) = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
inline double unit_sphere_volume(int m) {
  detail::require_domain(m >= 0, "sphere dimension must be non-negative");
  const double half = 0.5 * static_cast<double>(m + 1);
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

class HypersphereConfig {
 public:
  HypersphereConfig(int order, int dimension) : order_(order), dimension_(dimension) {
    detail::require_domain(order_ >= 2, "order r must be >= 2, got " + std::to_string(order_));
    detail::require_domain(dimension_ >= 2, "ambient dimension n must be >= 2, got " + std::to_string(dimension_));
  }

  int order() const noexcept { return order_; }
  /// n: the domain is S^{n-1}, the target S^n.
  int dimension() const noexcept { return dimension_; }

 private:
  int order_;
  int dimension_;
};

/// Exponents and radii of a generalized Clifford torus. R2 is always derived from R1,
/// so R1^2 + R2^2 = 1 holds by construction.
class CliffordConfig {
 public:
  /// From t = R1^2 in (0, 1).
  static CliffordConfig from_parameter(int p, int q, int order, double t) {
    detail::require_domain(std::isfinite(t) && t > 0.0 && t < 1.0, "R1^2 must lie in (0, 1)");
    return CliffordConfig(p, q, order, t);
  }

  static CliffordConfig from_radius(int p, int q, int order, double r1) {
    detail::require_domain(std::isfinite(r1) && r1 > 0.0 && r1 < 1.0, "R1 must lie in (0, 1)");
    return CliffordConfig(p, q, order, r1 * r1);
  }

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int order() const noexcept { return order_; }
  double r1_squared() const noexcept { return t_; }
  double r2_squared() const noexcept { return 1.0 - t_; }
  double r1() const { return std::sqrt(t_); }
  double r2() const { return std::sqrt(1.0 - t_); }
  /// p / R1^2
  double first_weight() const noexcept { return p_ / t_; }
  /// q / R2^2
  double second_weight() const noexcept { return q_ / (1.0 - t_); }

 private:
  CliffordConfig(int p, int q, int order, double t) : p_(p), q_(q), order_(order), t_(t) {
    detail::require_domain(p_ >= 1 && q_ >= 1, "sphere dimensions p, q must be >= 1");
    detail::require_domain(order_ >= 2, "order r must be >= 2, got " + std::to_string(order_));
  }

  int p_;
  int q_;
  int order_;
  double t_;
};

namespace detail {

inline void require_order(int r) {
  require_domain(r >= 2, "order r must be >= 2, got " + std::to_string(r));
}

inline void require_open_angle(double alpha, double upper) {
  require_domain(std::isfinite(alpha) && alpha > 0.0 && alpha < upper,
                 "angle " + std::to_string(alpha) + " outside (0, " + std::to_string(upper) + ")");
}

}  // namespace detail

/// sin^2(a) cos^{2(r-1)}(a) on (0, pi).
inline double eps_r(double alpha, int r) {
  detail::require_order(r);
  detail::require_open_angle(alpha, std::numbers::pi);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  return s * s * ipow(c, 2 * (r - 1));
}

/// First or second derivative of eps_r.
///   eps_r'  = 2 s c^{2r-3} (1 - r s^2)
///   eps_r'' = 2 [ (c^{2r-2} - (2r-3) s^2 c^{2r-4}) (1 - r s^2) - 2 r s^2 c^{2r-2} ]
inline double eps_r_deriv(double alpha, int r, int order_of_deriv) {
  detail::require_order(r);
  detail::require_open_angle(alpha, std::numbers::pi);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double s2 = s * s;
  const double tail = 1.0 - r * s2;
  switch (order_of_deriv) {
    case 1:
      return 2.0 * s * ipow(c, 2 * r - 3) * tail;
    case 2: {
      const double c_hi = ipow(c, 2 * r - 2);
      const double c_lo = ipow(c, 2 * r - 4);
      return 2.0 * ((c_hi - (2 * r - 3) * s2 * c_lo) * tail - 2.0 * r * s2 * c_hi);
    }
    default:
      throw DomainError("derivative order must be 1 or 2");
  }
}

/// Reduced Clifford energy on (0, pi/2). For r = 2 the bracket is absent.
inline double eps_C(double alpha, const CliffordConfig& cfg) {
  detail::require_open_angle(alpha, 0.5 * std::numbers::pi);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double base = s * s * c * c;
  if (cfg.order() == 2) return base;
  const double bracket = cfg.first_weight() * c * c + cfg.second_weight() * s * s;
  return base * ipow(bracket, cfg.order() - 2);
}

/// Left side of the r >= 3 criticality condition as a polynomial in x = sin^2(a):
///   a + [(r-1)(b - a) - 2a] x + r (a - b) x^2,   a = p/R1^2, b = q/R2^2.
/// eps_C'(alpha) = 2 sin cos B^{r-3} * residual_334(sin^2 alpha), B the bracket of eps_C.
inline double residual_334(double sin2, const CliffordConfig& cfg) {
  if (cfg.order() < 3) throw UnsupportedOrder("the polynomial criticality condition needs r >= 3");
  detail::require_domain(std::isfinite(sin2) && sin2 >= 0.0 && sin2 <= 1.0, "sin^2 alpha must lie in [0, 1]");
  const double a = cfg.first_weight();
  const double b = cfg.second_weight();
  const int r = cfg.order();
  return a + ((r - 1) * (b - a) - 2.0 * a) * sin2 + r * (a - b) * sin2 * sin2;
}

/// d eps_C / d alpha
///   = 2 s c [ (c^2 - s^2) B^{r-2} + (r-2) s^2 c^2 (b - a) B^{r-3} ]
inline double eps_C_deriv(double alpha, const CliffordConfig& cfg) {
  detail::require_open_angle(alpha, 0.5 * std::numbers::pi);
  const double s = std::sin(alpha);
  const double c = std::cos(alpha);
  const double s2 = s * s;
  const double c2 = c * c;
  const int r = cfg.order();
  if (r == 2) return 2.0 * s * c * (c2 - s2);
  const double a = cfg.first_weight();
  const double b = cfg.second_weight();
  const double bracket = a * c2 + b * s2;
  const double lower = ipow(bracket, r - 3);
  return 2.0 * s * c * ((c2 - s2) * bracket * lower + (r - 2) * s2 * c2 * (b - a) * lower);
}

/// E_r of the hypersphere map: 1/2 Vol(S^{n-1}) (n-1)^r eps_r(alpha).
inline double total_energy(const HypersphereConfig& cfg, double alpha) {
  const int n = cfg.dimension();
  const int r = cfg.order();
  return 0.5 * unit_sphere_volume(n - 1) * ipow(n - 1.0, r) * eps_r(alpha, r);
}

}  // namespace polyharm
