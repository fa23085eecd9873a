#pragma once
/**
 * @brief Operator-level calculus on the pull-back bundle of the hypersphere map
 * w -> (sin a w, cos a), restricted to equivariant sections.
 *
 * Every operator appearing in the r-tension field maps the two equivariant shapes
 *   radial      A d/da
 *   tangential  B sum_i dw^i (x) d/dw_i    (frame form: B dphi(e_j))
 * into each other, so a section is one scalar plus its kind. Operators check the
 * input kind and throw ContractError on a shape mismatch.
 *
 * Conventions: rough Laplacian = d*d (non-negative); target curvature of the unit
 * sphere R(X, Y)W = <Y, W> X - <X, W> Y; |d/da| = 1 and |dphi(e_j)|^2 = sin^2 a.
 */

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polyharm/errors.hpp"
#include "polyharm/reduced_energy.hpp"

namespace polyharm {

enum class SectionKind { radial, tangential };

struct EquivariantSection {
  SectionKind kind = SectionKind::radial;
  double coeff = 0.0;
  double alpha = 0.5 * std::numbers::pi;
  int n = 2;
};

namespace detail {

inline void require_kind(const EquivariantSection& s, SectionKind kind, const char* op) {
  if (s.kind != kind) {
    throw ContractError(std::string(op) + ": expected a " +
                        (kind == SectionKind::radial ? "radial" : "tangential") + " section");
  }
}

inline void require_section_angle(const EquivariantSection& s) {
  require_domain(std::isfinite(s.alpha) && s.alpha > 0.0 && s.alpha < std::numbers::pi,
                 "section angle outside (0, pi)");
  require_domain(s.n >= 2, "ambient dimension n must be >= 2");
}

/// Gamma^a_ij / (g_S)_ij
inline double gamma_normal(double alpha) { return -std::sin(alpha) * std::cos(alpha); }
/// Gamma^j_ia / delta^j_i
inline double gamma_mixed(double alpha) { return std::cos(alpha) / std::sin(alpha); }

}  // namespace detail

/// dphi(e_j) itself: the tangential section with coefficient 1.
inline EquivariantSection frame_section(double alpha, int n) {
  return {SectionKind::tangential, 1.0, alpha, n};
}

/// tau(phi) = F d/da, F = -(n-1) sin a cos a.
inline EquivariantSection tension(double alpha, int n) {
  EquivariantSection out{SectionKind::radial, 0.0, alpha, n};
  detail::require_section_angle(out);
  out.coeff = -(n - 1.0) * std::sin(alpha) * std::cos(alpha);
  return out;
}

/// d(A d/da) = A Gamma^i_{ia} dw^i (x) d/dw_i: coefficient A cot a.
inline EquivariantSection apply_d(const EquivariantSection& s) {
  detail::require_kind(s, SectionKind::radial, "apply_d");
  detail::require_section_angle(s);
  return {SectionKind::tangential, s.coeff * detail::gamma_mixed(s.alpha), s.alpha, s.n};
}

/// d*(B dw^i (x) d/dw_i) = -g_S^{ij} B Gamma^a_{ij} d/da, traced over the n-1 directions.
inline EquivariantSection apply_dstar(const EquivariantSection& s) {
  detail::require_kind(s, SectionKind::tangential, "apply_dstar");
  detail::require_section_angle(s);
  const double trace = static_cast<double>(s.n - 1);
  return {SectionKind::radial, -trace * s.coeff * detail::gamma_normal(s.alpha), s.alpha, s.n};
}

/// d*d on radial sections: coefficient (n-1) cos^2 a times A.
inline EquivariantSection rough_laplacian(const EquivariantSection& s) {
  detail::require_kind(s, SectionKind::radial, "rough_laplacian");
  return apply_dstar(apply_d(s));
}

/// nabla_{e_j}(A d/da) along an orthonormal frame of S^{n-1}, via the embedding
/// S^n in R^{n+1}: d/da = (cos a w, -sin a) differentiates to cos a e_j, and
/// dphi(e_j) = sin a e_j, so the frame coefficient is A <cos a e_j, sin a e_j> / sin^2 a.
inline EquivariantSection nabla_frame(const EquivariantSection& s) {
  detail::require_kind(s, SectionKind::radial, "nabla_frame");
  detail::require_section_angle(s);
  const double sn = std::sin(s.alpha);
  const double cs = std::cos(s.alpha);
  return {SectionKind::tangential, s.coeff * (cs * sn) / (sn * sn), s.alpha, s.n};
}

/// sum_j R(X_j, Y_j) dphi(e_j), where a radial section contributes X_j = A d/da and a
/// tangential one X_j = B dphi(e_j). Exactly one argument must be radial; pass
/// frame_section() for a bare dphi(e_j). The result is radial:
///   R(rad A, tang B) -> +(n-1) sin^2 a A B,   R(tang B, rad A) -> -(n-1) sin^2 a A B.
inline EquivariantSection curvature_action(const EquivariantSection& x, const EquivariantSection& y) {
  if (x.alpha != y.alpha || x.n != y.n) throw ContractError("curvature_action: sections live over different maps");
  if (x.kind == y.kind) throw ContractError("curvature_action: needs one radial and one tangential argument");
  detail::require_section_angle(x);
  const double sn = std::sin(x.alpha);
  const double frame_sum = (x.n - 1.0) * sn * sn;
  // R(X, Y)W = <Y, W>X - <X, W>Y with W = dphi(e_j); only the term pairing the
  // tangential argument with W survives, since <d/da, e_j> = 0.
  const double sign = (x.kind == SectionKind::radial) ? 1.0 : -1.0;
  return {SectionKind::radial, sign * frame_sum * x.coeff * y.coeff, x.alpha, x.n};
}

/// Rough-Laplacian powers of the tension field, index k holds Lap^k tau (k = 0..max_power).
inline std::vector<EquivariantSection> laplacian_ladder(double alpha, int n, int max_power) {
  std::vector<EquivariantSection> out;
  out.reserve(static_cast<std::size_t>(max_power + 1));
  out.push_back(tension(alpha, n));
  for (int k = 1; k <= max_power; ++k) out.push_back(rough_laplacian(out.back()));
  return out;
}

/// The r-tension field assembled term by term from the general 2s / 2s+1 formulas,
/// with Lap^{-1} = 0 and empty l-sums equal to zero. Its coefficient equals
/// -((n-1)^r / 2) eps_r'(alpha).
inline EquivariantSection tau_r(double alpha, int n, int r) {
  detail::require_order(r);
  const std::vector<EquivariantSection> ladder = laplacian_ladder(alpha, n, r - 1);
  const EquivariantSection zero{SectionKind::radial, 0.0, alpha, n};
  auto lap = [&](int k) -> const EquivariantSection& { return k < 0 ? zero : ladder[static_cast<std::size_t>(k)]; };
  const EquivariantSection frame = frame_section(alpha, n);

  double coeff = 0.0;
  if (r % 2 == 0) {
    const int s = r / 2;
    coeff = lap(2 * s - 1).coeff - curvature_action(lap(2 * s - 2), frame).coeff;
    for (int l = 1; l <= s - 1; ++l) {
      coeff -= curvature_action(nabla_frame(lap(s + l - 2)), lap(s - l - 1)).coeff -
               curvature_action(lap(s + l - 2), nabla_frame(lap(s - l - 1))).coeff;
    }
  } else {
    const int s = (r - 1) / 2;
    coeff = lap(2 * s).coeff - curvature_action(lap(2 * s - 1), frame).coeff;
    for (int l = 1; l <= s - 1; ++l) {
      coeff -= curvature_action(nabla_frame(lap(s + l - 1)), lap(s - l - 1)).coeff -
               curvature_action(lap(s + l - 1), nabla_frame(lap(s - l - 1))).coeff;
    }
    coeff -= curvature_action(nabla_frame(lap(s - 1)), lap(s - 1)).coeff;
  }
  return {SectionKind::radial, coeff, alpha, n};
}

/// Pointwise squared norm, frame sums multiplied out: radial A^2, tangential (n-1) sin^2 a B^2.
inline double squared_norm(const EquivariantSection& s) {
  if (s.kind == SectionKind::radial) return s.coeff * s.coeff;
  const double sn = std::sin(s.alpha);
  return (s.n - 1.0) * sn * sn * s.coeff * s.coeff;
}

/// r-energy from the operator route: 1/2 Vol(S^{n-1}) |Lap^{s-1} tau|^2 for r = 2s,
/// 1/2 Vol(S^{n-1}) sum_j |nabla_{e_j} Lap^{s-1} tau|^2 for r = 2s+1.
inline double operator_energy(double alpha, int n, int r) {
  detail::require_order(r);
  const int s = r / 2;
  const std::vector<EquivariantSection> ladder = laplacian_ladder(alpha, n, s - 1);
  const EquivariantSection& top = ladder.back();
  const double density = (r % 2 == 0) ? squared_norm(top) : squared_norm(nabla_frame(top));
  return 0.5 * unit_sphere_volume(n - 1) * density;
}

}  // namespace polyharm
