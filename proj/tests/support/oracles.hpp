#pragma once

// Test-only oracles, deliberately independent of the library's quadrature
// and recurrence paths: Romberg on the trapezoid rule, truncated power
// series, and brute-force series summation. Slow is fine here.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

// Romberg integration (trapezoid + Richardson). Independent of the
// library's Gauss-Legendre panels.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int max_level = 22, double tol = 1e-12) {
  std::vector<std::vector<double>> r(1);
  double h = b - a;
  r[0].push_back(0.5 * h * (f(a) + f(b)));
  for (int k = 1; k <= max_level; ++k) {
    h *= 0.5;
    double s = 0.0;
    const std::int64_t n = std::int64_t{1} << k;
    for (std::int64_t i = 1; i < n; i += 2) s += f(a + static_cast<double>(i) * h);
    r.emplace_back();
    r[static_cast<std::size_t>(k)].push_back(0.5 * r[static_cast<std::size_t>(k) - 1][0] + s * h);
    double p4 = 4.0;
    for (int j = 1; j <= k; ++j) {
      const auto& prev = r[static_cast<std::size_t>(k) - 1];
      auto& cur = r[static_cast<std::size_t>(k)];
      cur.push_back(cur[static_cast<std::size_t>(j) - 1] +
                    (cur[static_cast<std::size_t>(j) - 1] - prev[static_cast<std::size_t>(j) - 1]) /
                        (p4 - 1.0));
      p4 *= 4.0;
    }
    if (k >= 5) {
      const double cur = r[static_cast<std::size_t>(k)].back();
      const double prev = r[static_cast<std::size_t>(k) - 1].back();
      if (std::abs(cur - prev) < tol * std::max(1.0, std::abs(cur))) return cur;
    }
  }
  return r.back().back();
}

// Si(x) by its power series; good to ~1e-14 for |x| <= 12.
inline double si_series(double x) {
  if (x < 0.0) return -si_series(-x);
  if (x > 12.0) throw std::invalid_argument("si_series: series oracle limited to |x| <= 12");
  double sum = 0.0;
  double num = x;  // x^{2k+1}/(2k+1)!
  for (int k = 0; k < 60; ++k) {
    sum += ((k & 1) ? -1.0 : 1.0) * num / (2.0 * k + 1.0);
    num *= x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return sum;
}

// J_n by the ascending power series; accurate for small t.
inline double bessel_j_series(int n, double t, int terms = 60) {
  const double half = 0.5 * t;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;  // (t/2)^n / n!
  double sum = term;
  for (int m = 1; m < terms; ++m) {
    term *= -half * half / (static_cast<double>(m) * (m + n));
    sum += term;
  }
  return sum;
}

// J_n by Romberg on the integral definition (no panels, no recurrence).
inline double bessel_j_romberg(int n, double t) {
  constexpr double pi = 3.141592653589793238462643;
  return romberg([n, t](double x) { return std::cos(n * x - t * std::sin(x)); }, 0.0, pi,
                 24, 1e-13) /
         pi;
}

// Central second difference.
inline double second_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracle
