#pragma once
/**
 * @brief Christoffel symbols of the warped metric g = sin^2(a) g_S + da^2 on S^n.
 *
 * Coordinates are (theta_0, ..., theta_{m-1}, a) with m = n - 1: polar angles on
 * S^{m} followed by the warping angle a, which is always the last index (n - 1 when
 * zero-based). In the polar chart
 *   g_S = sum_k h_k dtheta_k^2,   h_k = prod_{j<k} sin^2 theta_j.
 *
 * Two independent routes are provided: the closed-form table, and the textbook formula
 *   Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_li - d_l g_ij)
 * applied to finite-difference derivatives of the assembled metric.
 */

#include <Eigen/Dense>
#include <cmath>
#include <span>
#include <vector>

#include "polyharm/errors.hpp"
#include "polyharm/finite_difference.hpp"

namespace polyharm {

/// Gamma[k][i][j] at one point, dimension n.
class ChristoffelSample {
 public:
  explicit ChristoffelSample(int n) : n_(n), data_(static_cast<std::size_t>(n * n * n), 0.0) {}

  int dimension() const noexcept { return n_; }
  double& operator()(int k, int i, int j) { return data_[index(k, i, j)]; }
  double operator()(int k, int i, int j) const { return data_[index(k, i, j)]; }

 private:
  std::size_t index(int k, int i, int j) const { return static_cast<std::size_t>((k * n_ + i) * n_ + j); }

  int n_;
  std::vector<double> data_;
};

namespace detail {

inline void require_chart(double alpha, std::span<const double> chart_point, int n) {
  require_domain(n >= 2, "ambient dimension n must be >= 2");
  require_domain(static_cast<int>(chart_point.size()) == n - 1, "chart point needs n - 1 polar angles");
  require_domain(std::abs(std::sin(alpha)) > 1e-8, "warping angle at a chart singularity (sin a = 0)");
  // The last polar angle is periodic; all earlier ones must stay off their poles.
  for (std::size_t j = 0; j + 1 < chart_point.size(); ++j) {
    require_domain(std::abs(std::sin(chart_point[j])) > 1e-8, "polar chart singularity");
  }
}

/// h_k = prod_{j<k} sin^2 theta_j
inline double polar_weight(std::span<const double> theta, int k) {
  double h = 1.0;
  for (int j = 0; j < k; ++j) h *= std::sin(theta[j]) * std::sin(theta[j]);
  return h;
}

}  // namespace detail

/// Closed-form Christoffel symbols of the polar chart on S^m (diagonal metric):
///   Gamma^k_kj = Gamma^k_jk = cot theta_j   (j < k),
///   Gamma^k_jj = -(h_j / h_k) cot theta_k   (k < j),
/// everything else zero.
inline double sphere_christoffel(std::span<const double> theta, int k, int i, int j) {
  const int m = static_cast<int>(theta.size());
  if (k >= m || i >= m || j >= m) return 0.0;
  if (i == k && j < k) return std::cos(theta[j]) / std::sin(theta[j]);
  if (j == k && i < k) return std::cos(theta[i]) / std::sin(theta[i]);
  if (i == j && k < i) {
    return -detail::polar_weight(theta, i) / detail::polar_weight(theta, k) * std::cos(theta[k]) / std::sin(theta[k]);
  }
  return 0.0;
}

/// The closed table for the warped metric:
///   (i)   tangential indices: pass-through of the S^{n-1} symbols
///   (ii)  Gamma^a_ij = -sin a cos a (g_S)_ij
///   (iii) Gamma^j_ia = Gamma^j_ai = cot a delta^j_i
///   (iv)  Gamma^j_aa = Gamma^a_ja = 0
inline ChristoffelSample christoffel_closed(double alpha, std::span<const double> chart_point, int n) {
  detail::require_chart(alpha, chart_point, n);
  const int a = n - 1;
  const double cot = std::cos(alpha) / std::sin(alpha);
  ChristoffelSample out(n);
  for (int k = 0; k < a; ++k) {
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < a; ++j) out(k, i, j) = sphere_christoffel(chart_point, k, i, j);
    }
  }
  for (int i = 0; i < a; ++i) {
    out(a, i, i) = -std::sin(alpha) * std::cos(alpha) * detail::polar_weight(chart_point, i);
    out(i, i, a) = cot;
    out(i, a, i) = cot;
  }
  return out;
}

/// g(y) for y = (theta_0..theta_{n-2}, a).
inline Eigen::MatrixXd warped_metric(std::span<const double> coords) {
  const int n = static_cast<int>(coords.size());
  const double s = std::sin(coords[n - 1]);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n - 1; ++k) g(k, k) = s * s * detail::polar_weight(coords.first(n - 1), k);
  g(n - 1, n - 1) = 1.0;
  return g;
}

/// Christoffel symbols computed only from the metric: finite-difference metric
/// derivatives (step 1e-5, one Richardson level) fed into the textbook formula.
inline ChristoffelSample christoffel_numeric(double alpha, std::span<const double> chart_point, int n) {
  detail::require_chart(alpha, chart_point, n);
  std::vector<double> y(chart_point.begin(), chart_point.end());
  y.push_back(alpha);

  constexpr double step = 1e-5;
  // dg[l](i, j) = d g_ij / d y_l
  std::vector<Eigen::MatrixXd> dg(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        auto entry = [&](double x) {
          std::vector<double> shifted = y;
          shifted[static_cast<std::size_t>(l)] = x;
          return warped_metric(shifted)(i, j);
        };
        const double d = fd_derivative(entry, y[static_cast<std::size_t>(l)], 1, step);
        dg[static_cast<std::size_t>(l)](i, j) = d;
        dg[static_cast<std::size_t>(l)](j, i) = d;
      }
    }
  }

  const Eigen::MatrixXd g_inv = warped_metric(y).inverse();
  ChristoffelSample out(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int l = 0; l < n; ++l) {
          sum += g_inv(k, l) * (dg[static_cast<std::size_t>(i)](j, l) + dg[static_cast<std::size_t>(j)](l, i) -
                                dg[static_cast<std::size_t>(l)](i, j));
        }
        out(k, i, j) = 0.5 * sum;
      }
    }
  }
  return out;
}

/// max |A - B| over all entries.
inline double max_abs_difference(const ChristoffelSample& a, const ChristoffelSample& b) {
  if (a.dimension() != b.dimension()) throw ContractError("Christoffel samples differ in dimension");
  double worst = 0.0;
  const int n = a.dimension();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(a(k, i, j) - b(k, i, j)));
    }
  }
  return worst;
}

}  // namespace polyharm
