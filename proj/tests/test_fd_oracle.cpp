#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polyharm/fd_oracle.hpp"
#include "polyharm/finite_difference.hpp"
#include "polyharm/verification.hpp"

using namespace polyharm;
using std::numbers::pi;

TEST(FdDerivative, Examples) {
  EXPECT_NEAR(fd_derivative([](double a) { return eps_r(a, 2); }, pi / 4, 1), 0.0, 1e-8);
  EXPECT_LT(fd_derivative([](double a) { return eps_r(a, 5); }, std::asin(1 / std::sqrt(5.0)), 2), 0.0);
  EXPECT_NEAR(fd_derivative([](double x) { return x * x; }, 1.0, 1), 2.0, 1e-10);
  EXPECT_NEAR(fd_derivative([](double x) { return x * x; }, 1.0, 2), 2.0, 1e-6);
  EXPECT_THROW(fd_derivative([](double x) { return x; }, 1.0, 1, 0.0), DomainError);
  EXPECT_THROW(fd_derivative([](double x) { return x; }, 1.0, 3), DomainError);
}

TEST(FdDerivative, ObservedOrderAtLeastThreeAndHalf) {
  const auto check = [](auto f, auto df, auto d2f, double x) {
    for (int order : {1, 2}) {
      const double exact = order == 1 ? df(x) : d2f(x);
      double prev_err = 0.0;
      for (int level = 0; level < 3; ++level) {
        const double h = 0.1 / (1 << level);
        const double err = std::abs(fd_derivative(f, x, order, h) - exact);
        if (level > 0) {
          EXPECT_GE(std::log2(prev_err / err), 3.5) << "order " << order << " h " << h;
        }
        prev_err = err;
      }
    }
  };
  check([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
        [](double x) { return -std::sin(x); }, 0.7);
  check([](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
        [](double x) { return std::exp(x); }, 0.3);
}

TEST(ScanRoots, Examples) {
  const CubicPolynomial big = build_P(1, 2, 10);
  EXPECT_EQ(scan_roots([&](double t) { return big(t); }, 0.0, 1.0, 100000).size(), 3u);

  const CubicPolynomial sym = build_P(1, 1, 3);
  const auto one = scan_roots([&](double t) { return sym(t); }, 0.0, 1.0, 100000);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LE(one[0].lo, 0.5);
  EXPECT_GE(one[0].hi, 0.5);

  // eps_2' on (0, pi): zeros of sin at the endpoints are not roots.
  const auto crit = scan_roots([](double a) { return std::sin(a) * std::cos(a) * std::cos(2 * a); }, 0.0, pi, 10000);
  ASSERT_EQ(crit.size(), 3u);
  EXPECT_NEAR(crit[0].lo, pi / 4, 1e-3);
  EXPECT_NEAR(crit[1].lo, pi / 2, 1e-3);
  EXPECT_NEAR(crit[2].lo, 3 * pi / 4, 1e-3);
}

TEST(ScanRoots, ExactGridZero) {
  // 0.5 is a grid point of a 5-point grid on [0, 1].
  const auto br = scan_roots([](double t) { return t - 0.5; }, 0.0, 1.0, 5);
  ASSERT_EQ(br.size(), 1u);
  EXPECT_EQ(br[0].lo, 0.5);
  EXPECT_EQ(br[0].hi, 0.5);
  EXPECT_THROW(scan_roots([](double t) { return t; }, 0.0, 1.0, 1), DomainError);
}

TEST(VerifyVariation, Examples) {
  const OracleReport crit = verify_variation(std::asin(0.5), 3, 4);
  EXPECT_TRUE(crit.passed);
  EXPECT_LT(crit.max_residual, 1e-8);
  for (const auto& [route, value] : crit.routes) EXPECT_NEAR(value, 0.0, 1e-8) << route;

  const OracleReport generic = verify_variation(0.9, 3, 2);
  EXPECT_LT(generic.max_residual, 1e-7);
  // -Vol(S^2) * tau = 1/2 Vol(S^2) (n-1)^2 eps_2'(0.9) = 8 pi sin(1.8) cos(1.8).
  EXPECT_NEAR(generic.routes.at("analytic"), 8 * pi * std::sin(1.8) * std::cos(1.8), 1e-12);

  for (int n = 2; n <= 5; ++n) {
    const OracleReport eq = verify_variation(pi / 2, n, 3);
    EXPECT_TRUE(eq.passed);
    for (const auto& [route, value] : eq.routes) EXPECT_NEAR(value, 0.0, 1e-10) << route;
  }
}

TEST(VerifyCliffordCriticality, Examples) {
  const double outer = 0.5 + 0.5 * std::sqrt(0.2);
  const OracleReport root = verify_clifford_criticality(outer, 1, 1, 5);
  EXPECT_TRUE(root.passed);
  for (const auto& [route, value] : root.routes) EXPECT_LT(value, 1e-8) << route;

  // Minimal torus: the tension factor p/R1^2 - q/R2^2 vanishes.
  EXPECT_NEAR(minimality_factor(2.0 / 7.0, 2, 5), 0.0, 1e-13);

  // t = 0.3 is not a root for (1, 2, 3): P(0.3) = -0.247.
  const OracleReport miss = verify_clifford_criticality(0.3, 1, 2, 3);
  EXPECT_FALSE(miss.passed);
  EXPECT_NEAR(miss.routes.at("poly"), 0.247, 1e-12);
  for (const auto& [route, value] : miss.routes) EXPECT_GT(value, 1e-3) << route;
}

TEST(VerifyCliffordCriticality, OrderTwoRoutesToBiharmonicCheck) {
  EXPECT_TRUE(verify_clifford_criticality(0.5, 1, 2, 2).passed);
  EXPECT_FALSE(verify_clifford_criticality(0.4, 1, 2, 2).passed);
}

TEST(VerifyCliffordCriticality, EveryEmittedRootPasses) {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 8; ++q) {
      for (int r = 2; r <= 40; ++r) {
        for (const auto& rep : solve_clifford(p, q, r)) {
          const OracleReport check = verify_clifford_criticality(rep.parameter, p, q, r, 1e-8);
          EXPECT_TRUE(check.passed) << check.name << " residual " << check.max_residual;
        }
      }
    }
  }
}

TEST(VerifyHypersphere, EveryReportPasses) {
  for (int r = 2; r <= 64; ++r) {
    const OracleReport check = verify_hypersphere_report(solve_hypersphere(r), r, 1e-7);
    EXPECT_TRUE(check.passed) << check.name << ' ' << check.max_residual;
    EXPECT_LT(check.routes.at("fd_eps_second"), 0.0);
  }
}

TEST(OracleReport, PassFlagFollowsTolerance) {
  EXPECT_TRUE(make_oracle_report("x", 1e-9, 1, 1e-8).passed);
  EXPECT_FALSE(make_oracle_report("x", 1e-7, 1, 1e-8).passed);
  EXPECT_FALSE(make_oracle_report("x", std::nan(""), 1, 1e-8).passed);
}

TEST(Batteries, AllSuitesPass) {
  for (const OracleReport& rep : run_suite(Suite::all, 1e-7)) {
    EXPECT_TRUE(rep.passed) << rep.name << " residual " << rep.max_residual << " tol " << rep.tolerance;
  }
  EXPECT_THROW(parse_suite("bogus"), DomainError);
}
