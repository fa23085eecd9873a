#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "polyharm/reduced_energy.hpp"

using namespace polyharm;
using std::numbers::pi;

namespace {

// Test-local central difference with a step sweep; independent of the library's fd code.
template <class F>
double sweep_central(F f, double x, int order) {
  double best = 0.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  double best_gap = std::numeric_limits<double>::infinity();
  for (double h = 1e-2; h > 1e-6; h /= 2.0) {
    const double d = order == 1 ? (f(x + h) - f(x - h)) / (2 * h) : (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    if (std::isfinite(prev) && std::abs(d - prev) < best_gap) {
      best_gap = std::abs(d - prev);
      best = d;
    }
    prev = d;
  }
  return best;
}

}  // namespace

TEST(EpsR, Examples) {
  EXPECT_NEAR(eps_r(pi / 2, 3), 0.0, 1e-30);
  EXPECT_NEAR(eps_r(pi / 4, 2), 0.25, 1e-15);
  EXPECT_NEAR(eps_r(std::asin(1 / std::sqrt(3.0)), 3), 4.0 / 27.0, 1e-15);
}

TEST(EpsR, DomainErrors) {
  EXPECT_THROW(eps_r(0.0, 2), DomainError);
  EXPECT_THROW(eps_r(pi, 2), DomainError);
  EXPECT_THROW(eps_r(-0.3, 2), DomainError);
  EXPECT_THROW(eps_r(1.0, 1), DomainError);
  EXPECT_THROW(eps_r(std::nan(""), 2), DomainError);
  EXPECT_THROW(eps_r_deriv(1.0, 2, 3), DomainError);
}

TEST(EpsRDeriv, Examples) {
  EXPECT_NEAR(eps_r_deriv(std::asin(1 / std::sqrt(2.0)), 2, 1), 0.0, 1e-15);
  EXPECT_NEAR(eps_r_deriv(pi / 2, 3, 1), 0.0, 1e-15);
  // -4 r sin^2 cos^{2r-2} at the critical point, r = 5: -1.6384 (mpmath numeric diff).
  const double second = eps_r_deriv(std::asin(1 / std::sqrt(5.0)), 5, 2);
  EXPECT_LT(second, 0.0);
  EXPECT_NEAR(second, -1.6384, 1e-12);
  EXPECT_NEAR(second, sweep_central([](double a) { return eps_r(a, 5); }, std::asin(1 / std::sqrt(5.0)), 2), 1e-6);
}

TEST(EpsRDeriv, MatchesCentralDifferencesAtRandomSamples) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> angle(0.05, pi - 0.05);
  std::uniform_int_distribution<int> order(2, 12);
  for (int i = 0; i < 100; ++i) {
    const double a = angle(rng);
    const int r = order(rng);
    const double h = 1e-5;
    const double fd1 = (eps_r(a + h, r) - eps_r(a - h, r)) / (2 * h);
    const double fd2 = (eps_r_deriv(a + h, r, 1) - eps_r_deriv(a - h, r, 1)) / (2 * h);
    EXPECT_NEAR(eps_r_deriv(a, r, 1), fd1, 1e-6) << "a=" << a << " r=" << r;
    EXPECT_NEAR(eps_r_deriv(a, r, 2), fd2, 1e-6) << "a=" << a << " r=" << r;
  }
}

TEST(EpsR, SymmetryRecursionAndZeros) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(0.01, pi - 0.01);
  for (int i = 0; i < 200; ++i) {
    const double a = angle(rng);
    for (int r = 2; r <= 9; ++r) {
      const double e = eps_r(a, r);
      EXPECT_NEAR(eps_r(pi - a, r), e, 1e-11 * e);
      const double c = std::cos(a);
      EXPECT_NEAR(eps_r(a, r + 1), c * c * e, 1e-14 * e + 1e-300);
      EXPECT_GT(e, 0.0);
    }
  }
}

TEST(EpsC, Examples) {
  const auto sym2 = CliffordConfig::from_parameter(1, 1, 2, 0.5);
  EXPECT_NEAR(eps_C(pi / 4, sym2), 0.25, 1e-15);
  const auto sym3 = CliffordConfig::from_parameter(1, 1, 3, 0.5);
  EXPECT_NEAR(eps_C(pi / 4, sym3), 0.5, 1e-15);
  EXPECT_NEAR(eps_C(1e-9, sym3), 0.0, 1e-17);
  EXPECT_THROW(eps_C(pi / 2, sym3), DomainError);
  EXPECT_THROW(eps_C(0.0, sym3), DomainError);
}

TEST(CliffordConfig, RadiiAreComplementary) {
  const auto cfg = CliffordConfig::from_radius(2, 3, 4, 0.6);
  EXPECT_NEAR(cfg.r1_squared() + cfg.r2_squared(), 1.0, 0.0);
  EXPECT_NEAR(cfg.r2(), 0.8, 1e-15);
  EXPECT_THROW(CliffordConfig::from_radius(1, 1, 3, 0.0), DomainError);
  EXPECT_THROW(CliffordConfig::from_radius(1, 1, 3, 1.0), DomainError);
  EXPECT_THROW(CliffordConfig::from_parameter(0, 1, 3, 0.5), DomainError);
  EXPECT_THROW(CliffordConfig::from_parameter(1, 1, 1, 0.5), DomainError);
}

TEST(EpsCDeriv, Examples) {
  for (int r = 2; r <= 9; ++r) {
    EXPECT_NEAR(eps_C_deriv(pi / 4, CliffordConfig::from_parameter(3, 3, r, 0.5)), 0.0, 1e-13 * ipow(6.0, r - 2)) << r;
  }
  // mpmath: d/da eps_C at a = 0.1, p = q = 1, r = 3, R1^2 = 1/2.
  const auto cfg = CliffordConfig::from_parameter(1, 1, 3, 0.5);
  EXPECT_GT(eps_C_deriv(0.1, cfg), 0.0);
  EXPECT_NEAR(eps_C_deriv(0.1, cfg), 0.3894183423086505, 1e-14);
}

TEST(EpsCDeriv, MatchesCentralDifferences) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> angle(0.05, pi / 2 - 0.05);
  std::uniform_real_distribution<double> param(0.1, 0.9);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> order(2, 7);
  for (int i = 0; i < 100; ++i) {
    const auto cfg = CliffordConfig::from_parameter(dim(rng), dim(rng), order(rng), param(rng));
    const double a = angle(rng);
    const double h = 1e-6;
    const double fd = (eps_C(a + h, cfg) - eps_C(a - h, cfg)) / (2 * h);
    EXPECT_NEAR(eps_C_deriv(a, cfg), fd, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST(EpsC, BalancedWeightsReduceToPower) {
  // p/R1^2 = q/R2^2 = w makes the bracket constant.
  for (int r = 2; r <= 8; ++r) {
    const auto cfg = CliffordConfig::from_parameter(2, 6, r, 0.25);
    const double w = cfg.first_weight();
    ASSERT_NEAR(w, cfg.second_weight(), 1e-12);
    for (double a : {0.2, 0.5, 1.1}) {
      const double s = std::sin(a), c = std::cos(a);
      EXPECT_NEAR(eps_C(a, cfg), ipow(w, r - 2) * s * s * c * c, 1e-12 * ipow(w, r - 2));
    }
  }
}

TEST(Residual334, RejectsOrderTwo) {
  EXPECT_THROW(residual_334(0.5, CliffordConfig::from_parameter(1, 2, 2, 0.5)), UnsupportedOrder);
}

TEST(Residual334, VanishesWhereDerivativeVanishes) {
  // eps_C' = 2 s c B^{r-3} residual_334: normalising the derivative recovers the residual.
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> angle(0.05, pi / 2 - 0.05);
  std::uniform_real_distribution<double> param(0.05, 0.95);
  std::uniform_int_distribution<int> dim(1, 10);
  std::uniform_int_distribution<int> order(3, 12);
  for (int i = 0; i < 100; ++i) {
    const auto cfg = CliffordConfig::from_parameter(dim(rng), dim(rng), order(rng), param(rng));
    const double a = angle(rng);
    const double s = std::sin(a), c = std::cos(a);
    const double bracket = cfg.first_weight() * c * c + cfg.second_weight() * s * s;
    const double normalised = eps_C_deriv(a, cfg) / (2 * s * c * ipow(bracket, cfg.order() - 3));
    const double res = residual_334(s * s, cfg);
    EXPECT_NEAR(normalised, res, 1e-9 * std::max(1.0, std::abs(res)));
  }
}

TEST(TotalEnergy, Examples) {
  EXPECT_NEAR(total_energy(HypersphereConfig(2, 3), pi / 4), 2 * pi, 1e-13);
  EXPECT_NEAR(total_energy(HypersphereConfig(5, 4), pi / 2), 0.0, 1e-30);
  for (double a : {0.3, 1.0, 2.2}) {
    const double ratio = total_energy(HypersphereConfig(3, 3), a) / total_energy(HypersphereConfig(2, 3), a);
    EXPECT_NEAR(ratio, 2 * std::cos(a) * std::cos(a), 1e-14);
  }
}

TEST(TotalEnergy, SphereVolumes) {
  EXPECT_NEAR(unit_sphere_volume(1), 2 * pi, 1e-14);
  EXPECT_NEAR(unit_sphere_volume(2), 4 * pi, 1e-14);
  EXPECT_NEAR(unit_sphere_volume(3), 2 * pi * pi, 1e-13);
  EXPECT_THROW(HypersphereConfig(2, 1), DomainError);
  EXPECT_THROW(HypersphereConfig(1, 3), DomainError);
}
