#pragma once

// Bessel functions of the first kind J_n, their running integrals
// G_n(t) = int_0^t J_n, and the bounded-sum quantities built from them.
//
// Two independent evaluation routes:
//   * the integral definition J_n(t) = (1/pi) int_0^pi cos(n x - t sin x) dx,
//     by oscillation-resolved Gauss-Legendre panels (ground truth, slower);
//   * Miller-style backward recurrence normalized with
//     J_0 + 2 sum_k J_{2k} = 1 (fast path; forward recurrence is unstable
//     for n > t, downward is stable everywhere).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/quadrature.hpp"

namespace harmonic::bessel {

inline double j_integral(int n, double t, int min_panels = 1) {
  if (n < 0) throw std::invalid_argument("j_integral: n must be >= 0");
  constexpr double pi = 3.141592653589793238462643;
  const double freq = std::max({static_cast<double>(n), std::abs(t), 1.0});
  const int n_panels = std::max(min_panels, quad::panel_count(0.0, pi, freq));
  return quad::panels([n, t](double x) { return std::cos(n * x - t * std::sin(x)); },
                      0.0, pi, n_panels) /
         pi;
}

// J_0 .. J_{n_max} at a single argument, one downward pass.
inline std::vector<double> j_column(int n_max, double t) {
  if (n_max < 0) throw std::invalid_argument("j_column: n_max must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (t >= 0.0 && t < 1e-200) {  // below any representable J_n spread
    out[0] = 1.0;
    if (n_max >= 1 && t > 0.0) out[1] = 0.5 * t;
    return out;
  }
  if (t < 0.0) throw std::invalid_argument("j_column: t must be >= 0");
  // Start high enough that J_start is ~1e-18 of the significant orders.
  const double top = std::max(static_cast<double>(n_max), t);
  int start = n_max + 32 + static_cast<int>(13.0 * std::cbrt(top) + 0.5);
  if (start < static_cast<int>(t) + 32) start = static_cast<int>(t) + 32 +
        static_cast<int>(13.0 * std::cbrt(top) + 0.5);
  double next = 0.0;   // J_{m+1} (unnormalized)
  double cur = 1e-160; // J_m
  double norm = 0.0;   // accumulates J_0 + 2 sum J_{2k}
  for (int m = start; m >= 1; --m) {
    double prev = (2.0 * m / t) * cur - next;
    next = cur;
    cur = prev;
    if (m - 1 <= n_max) out[static_cast<std::size_t>(m - 1)] = cur;
    if (((m - 1) & 1) == 0) norm += (m - 1 == 0) ? cur : 2.0 * cur;
    if (std::abs(cur) > 1e250) {  // rescale to dodge overflow
      const double s = 1e-250;
      cur *= s;
      next *= s;
      norm *= s;
      for (auto& v : out) v *= s;
    }
  }
  for (auto& v : out) v /= norm;
  return out;
}

inline double j(int n, double t) {
  if (n < 0) throw std::invalid_argument("bessel::j: n must be >= 0");
  return j_column(n, t)[static_cast<std::size_t>(n)];
}

enum class Method { IntegralDefinition, BackwardRecurrence };

// Evaluator with a selectable route. Construction cross-checks the two
// routes against each other on a sparse (n, t) sample.
struct BesselEvaluator {
  Method method = Method::BackwardRecurrence;
  int quad_panels = 64;

  explicit BesselEvaluator(Method m = Method::BackwardRecurrence, int panels = 64)
      : method(m), quad_panels(panels) {
    for (int n : {0, 1, 7, 25, 50}) {
      for (double t : {0.0, 0.5, 10.0, 40.75, 100.0}) {
        const double a = j_integral(n, t);
        const double b = j(n, t);
        if (std::abs(a - b) > 1e-12)
          throw std::runtime_error("BesselEvaluator: route disagreement " +
                                   std::to_string(a - b) + " at n=" + std::to_string(n) +
                                   " t=" + std::to_string(t));
      }
    }
  }

  double operator()(int n, double t) const {
    return method == Method::IntegralDefinition ? j_integral(n, t, quad_panels)
                                                : j(n, t);
  }
};

// |J_0(t) + 2 sum_{k=1}^K J_{2k}(t) - 1|. K must leave a dead tail:
// K >= t/2 + 40 always suffices; smaller K is accepted only when the
// evaluated J_{2K}(t) is already below 1e-16 past the turning point.
inline double identity_residual(double t, int K) {
  if (K < 1) throw std::invalid_argument("identity_residual: K must be >= 1");
  const auto col = j_column(2 * K, t);
  const bool guard = K >= static_cast<int>(std::ceil(t / 2.0)) + 40;
  const bool dead_tail =
      2.0 * K >= t && std::abs(col[static_cast<std::size_t>(2 * K)]) < 1e-16;
  if (!guard && !dead_tail)
    throw std::invalid_argument("identity_residual: K below the t/2 + 40 tail guard");
  double s = col[0];
  for (int k = 1; k <= K; ++k) s += 2.0 * col[static_cast<std::size_t>(2 * k)];
  return std::abs(s - 1.0);
}

// G_n(t) by quadrature. For even n the reduction
//   G_{2m}(t) = G_0(t) - 2 sum_{k=0}^{m-1} J_{2k+1}(t)
// (successive integration by parts via 2 J_n' = J_{n-1} - J_{n+1})
// is evaluated as a consistency check and must agree to 1e-8.
inline double integral_G(int n, double t) {
  if (n < 0) throw std::invalid_argument("integral_G: n must be >= 0");
  if (t == 0.0) return 0.0;
  if (t < 0.0) throw std::invalid_argument("integral_G: t must be >= 0");
  auto integrate = [&](int order) {
    return quad::oscillatory([order](double s) { return j(order, s); }, 0.0, t, 1.0);
  };
  const double g = integrate(n);
  if (n >= 2 && n % 2 == 0) {
    const int m = n / 2;
    const auto col = j_column(n, t);
    double odd = 0.0;
    for (int k = 0; k < m; ++k) odd += col[static_cast<std::size_t>(2 * k + 1)];
    const double reduced = integrate(0) - 2.0 * odd;
    if (std::abs(reduced - g) > 1e-8)
      throw std::runtime_error("integral_G: even-order reduction mismatch " +
                               std::to_string(reduced - g));
  }
  return g;
}

// (sum_{k=0}^{n-1} (-1)^k J_{2k+1}(t), sum_{k=1}^{n} (-1)^k J_{2k}(t))
inline std::pair<double, double> alternating_sums(int n, double t) {
  if (n < 1) throw std::invalid_argument("alternating_sums: n must be >= 1");
  const auto col = j_column(2 * n, t);
  double odd = 0.0, even = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sgn = (k & 1) ? -1.0 : 1.0;
    odd += sgn * col[static_cast<std::size_t>(2 * k + 1)];
    even -= sgn * col[static_cast<std::size_t>(2 * k + 2)];  // (-1)^{k+1}
  }
  return {odd, even};
}

}  // namespace harmonic::bessel
