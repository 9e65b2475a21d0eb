#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "harmonic/bessel.hpp"
#include "support/oracles.hpp"

using namespace harmonic;

TEST_CASE("values at t = 0") {
  CHECK(bessel::j(0, 0.0) == 1.0);
  CHECK(bessel::j(1, 0.0) == 0.0);
  CHECK(bessel::j(17, 0.0) == 0.0);
  CHECK(bessel::j_integral(0, 0.0) == Catch::Approx(1.0).margin(1e-15));
  CHECK(bessel::j_integral(5, 0.0) == Catch::Approx(0.0).margin(1e-15));
  // denormal-range arguments short-circuit instead of overflowing 2m/t
  CHECK(bessel::j(0, 1e-250) == 1.0);
  CHECK(bessel::j(1, 1e-250) == 0.5e-250);
  CHECK(bessel::j(9, 1e-250) == 0.0);
}

TEST_CASE("recurrence agrees with the series and Romberg oracles") {
  for (int n : {0, 1, 2, 5, 11}) {
    for (double t : {0.1, 1.0, 4.5, 9.25}) {
      const double ref = oracle::bessel_j_series(n, t);
      CHECK(bessel::j(n, t) == Catch::Approx(ref).margin(1e-13));
    }
  }
  for (int n : {0, 3, 20, 60}) {
    for (double t : {2.0, 27.5, 80.0}) {
      const double ref = oracle::bessel_j_romberg(n, t);
      CHECK(bessel::j(n, t) == Catch::Approx(ref).margin(1e-12));
      CHECK(bessel::j_integral(n, t) == Catch::Approx(ref).margin(1e-12));
    }
  }
}

TEST_CASE("first zero of J0") {
  // root bracketed by the integral-definition oracle
  double lo = 2.0, hi = 3.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (oracle::bessel_j_romberg(0, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double root = 0.5 * (lo + hi);
  CHECK(root == Catch::Approx(2.404826).margin(2e-6));
  CHECK(std::abs(bessel::j(0, 2.404826)) < 1e-6);
}

TEST_CASE("evaluator cross-checks routes on construction") {
  const bessel::BesselEvaluator fast(bessel::Method::BackwardRecurrence);
  const bessel::BesselEvaluator slow(bessel::Method::IntegralDefinition);
  for (int n : {0, 4, 33}) {
    for (double t : {0.5, 12.0, 77.0}) {
      CHECK(fast(n, t) == Catch::Approx(slow(n, t)).margin(1e-12));
    }
  }
}

TEST_CASE("|J_n| <= 1 on a wide grid") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dn(0, 220);
  std::uniform_real_distribution<double> dt(0.0, 420.0);
  for (int rep = 0; rep < 400; ++rep) {
    const double v = bessel::j(dn(rng), dt(rng));
    REQUIRE(std::isfinite(v));
    CHECK(std::abs(v) <= 1.0 + 1e-14);
  }
}

TEST_CASE("derivative identity 2J_n' = J_{n-1} - J_{n+1}") {
  const double h = 1e-5;
  for (int n : {1, 2, 7, 19}) {
    for (double t : {0.7, 5.0, 31.0, 140.0}) {
      const double lhs =
          (bessel::j(n, t + h) - bessel::j(n, t - h)) / h;  // 2 J_n'
      CHECK(lhs == Catch::Approx(bessel::j(n - 1, t) - bessel::j(n + 1, t)).margin(1e-7));
    }
  }
}

TEST_CASE("three-term recurrence is distinct from the derivative identity") {
  // (2n/t) J_n = J_{n-1} + J_{n+1}; this is NOT 2 J_n'.
  for (int n : {1, 3, 12}) {
    for (double t : {0.9, 8.0, 55.0}) {
      CHECK(2.0 * n / t * bessel::j(n, t) ==
            Catch::Approx(bessel::j(n - 1, t) + bessel::j(n + 1, t)).margin(1e-12));
    }
  }
}

TEST_CASE("even-sum identity residual") {
  CHECK(bessel::identity_residual(0.0, 1) == 0.0);  // J_0(0) = 1, empty tail
  CHECK(bessel::identity_residual(10.0, 60) < 1e-10);
  CHECK(bessel::identity_residual(50.0, 100) < 1e-10);
  CHECK_THROWS_AS(bessel::identity_residual(100.0, 60), std::invalid_argument);
}

TEST_CASE("identity residual stays < 1e-10 for t = 0..50 with the K guard") {
  for (int t = 0; t <= 50; ++t) {
    const int K = (t + 1) / 2 + 60;
    CHECK(bessel::identity_residual(static_cast<double>(t), K) < 1e-10);
  }
}

TEST_CASE("G_n: zero at t=0, G_0 -> 1, reduction for even orders") {
  CHECK(bessel::integral_G(7, 0.0) == 0.0);
  CHECK(bessel::integral_G(0, 400.0) == Catch::Approx(1.0).margin(2e-2));

  // G_2(30) against the independent Romberg oracle
  const double ref = oracle::romberg(
      [](double s) { return oracle::bessel_j_romberg(2, s); }, 0.0, 30.0, 16, 1e-10);
  CHECK(bessel::integral_G(2, 30.0) == Catch::Approx(ref).margin(1e-8));

  // the even-order reduction is asserted internally; these must not throw
  for (int n : {2, 4, 10, 40}) {
    for (double t : {3.0, 17.0, 52.0}) CHECK_NOTHROW(bessel::integral_G(n, t));
  }
}

TEST_CASE("alternating sums: trivial values and boundedness spot checks") {
  const auto z = bessel::alternating_sums(1, 0.0);
  CHECK(z.first == 0.0);
  CHECK(z.second == 0.0);

  const auto s5 = bessel::alternating_sums(5, 10.0);
  CHECK(std::abs(s5.first) < 2.0);
  CHECK(std::abs(s5.second) < 2.0);

  // brute-force oracle for the partial sums
  double odd = 0.0, even = 0.0;
  for (int k = 0; k < 5; ++k) {
    odd += ((k & 1) ? -1.0 : 1.0) * oracle::bessel_j_romberg(2 * k + 1, 10.0);
    even += (((k + 1) & 1) ? -1.0 : 1.0) * oracle::bessel_j_romberg(2 * k + 2, 10.0);
  }
  CHECK(s5.first == Catch::Approx(odd).margin(1e-11));
  CHECK(s5.second == Catch::Approx(even).margin(1e-11));

  const auto s100 = bessel::alternating_sums(100, 200.0);
  CHECK(std::abs(s100.first) < 2.0);
  CHECK(std::abs(s100.second) < 2.0);
}

TEST_CASE("full alternating series reach their Jacobi-Anger limits") {
  // sin t = 2 sum_{k>=0} (-1)^k J_{2k+1}(t),
  // cos t = J_0(t) + 2 sum_{k>=1} (-1)^k J_{2k}(t)
  for (double t : {1.0, 7.0, 23.0}) {
    const auto s = bessel::alternating_sums(static_cast<int>(t) / 2 + 40, t);
    CHECK(s.first == Catch::Approx(0.5 * std::sin(t)).margin(1e-12));
    CHECK(s.second ==
          Catch::Approx(0.5 * (std::cos(t) - bessel::j(0, t))).margin(1e-12));
  }
}
