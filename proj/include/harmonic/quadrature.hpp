#pragma once

// Panel-based Gauss-Legendre quadrature plus a small adaptive Simpson rule.
//
// The oscillatory integrands in this library all have phases of the form
// n*x +/- t*sin(x). Splitting [a,b] into panels of width <= pi/freq keeps
// the phase variation per panel below ~2*pi, where a 16-point rule is
// accurate to machine precision. Singular-looking integrands are expected
// to be made removable by the caller (series substitution near the
// singular point); nodes are interior, so endpoints are never evaluated.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace harmonic::quad {

// 16-point Gauss-Legendre rule on [-1,1], positive half (symmetric).
inline constexpr std::array<double, 8> kGL16Node = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};

inline constexpr std::array<double, 8> kGL16Weight = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <class F>
double gauss16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    const double dx = half * kGL16Node[i];
    acc += kGL16Weight[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

// Composite rule with a fixed number of equal panels.
template <class F>
double panels(F&& f, double a, double b, int n_panels) {
  if (n_panels < 1) throw std::invalid_argument("panels: n_panels < 1");
  const double h = (b - a) / n_panels;
  double acc = 0.0;
  for (int p = 0; p < n_panels; ++p) acc += gauss16(f, a + p * h, a + (p + 1) * h);
  return acc;
}

// Panel count so that each panel sees at most ~one oscillation of a phase
// with rate |freq| (radians per unit x).
inline int panel_count(double a, double b, double freq) {
  const double f = std::max(std::abs(freq), 1.0);
  const double n = std::ceil((b - a) * f / 3.141592653589793);
  if (n > 4.0e6) throw std::invalid_argument("panel_count: grid too fine");
  return static_cast<int>(std::max(1.0, n));
}

template <class F>
double oscillatory(F&& f, double a, double b, double freq) {
  if (!(b > a)) return 0.0;
  return panels(f, a, b, panel_count(a, b, freq));
}

namespace detail {
template <class F>
double simpson_step(F& f, double a, double m, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth, long* budget) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  if (budget && (*budget -= 2) <= 0)
    throw std::runtime_error("adaptive_simpson: evaluation budget exhausted");
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget) +
         simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}
}  // namespace detail

// budget: optional cap on integrand evaluations; exhausting it throws
// (useful when the integrand carries finite-difference noise and a tight
// tolerance could otherwise expand the whole recursion tree).
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-10,
                        int max_depth = 48, long* budget = nullptr) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, m, b, fa, fm, fb, whole, tol, max_depth, budget);
}

inline double sinc(double u) {
  const double au = std::abs(u);
  if (au < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  }
  return std::sin(u) / u;
}

// Sine integral Si(x) = int_0^x sin(u)/u du, by oscillation-resolved panels.
inline double si(double x) {
  if (x == 0.0) return 0.0;
  if (x < 0.0) return -si(-x);
  return oscillatory([](double u) { return sinc(u); }, 0.0, x, 1.0);
}

}  // namespace harmonic::quad
