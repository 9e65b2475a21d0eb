#pragma once

// The release gate: ten numbered checks covering the closed-form oracle,
// three-solver agreement, the Bessel identities, the limit constants, the
// V_n growth law, the uniform-bound sweeps, spectral reconstruction, the
// integrator invariants, and the decomposition identities. Every tolerance
// is pinned here, in code. cmd_verify and the acceptance test binary both
// run through this header.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "harmonic/bessel.hpp"
#include "harmonic/dynamics.hpp"
#include "harmonic/lattice.hpp"
#include "harmonic/oscillatory_bounds.hpp"
#include "harmonic/parallel.hpp"
#include "harmonic/spectral.hpp"

namespace harmonic::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

template <class Fn>
Result timed(int id, std::string name, Fn&& fn) {
  Result r;
  r.id = id;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += std::string(" exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

// 1. alternating data vs the closed form (-1)^k cos(2wt)
inline Result criterion_1() {
  return detail::timed(1, "closed-form oracle (alternating)", [](Result& r) {
    double worst = 0.0;
    for (double omega : {0.5, 1.0}) {
      const auto tr = dynamics::solve_ode(lattice::InitialCondition::alternating(), omega,
                                          20.0, 1e-3, -8, 8);
      for (std::size_t ti = 0; ti < tr.times.size(); ++ti) {
        const double c = std::cos(2.0 * omega * tr.times[ti]);
        for (long k = -8; k <= 8; ++k)
          worst = std::max(worst, std::abs(tr.at(ti, k) - ((k & 1L) ? -c : c)));
      }
    }
    r.pass = worst < 1e-6;
    r.detail = detail::fmt("max |q - closed form| = %.3g (tol 1e-6)", worst);
  });
}

// 2. OdeTruncated vs SpectralFormula vs BesselSeries for sign, w = 1/2
inline Result criterion_2() {
  return detail::timed(2, "three-solver agreement (sign)", [](Result& r) {
    std::vector<double> times;
    for (int i = 0; i <= 80; ++i) times.push_back(0.5 * i);
    std::vector<long> idx;
    for (long n = 1; n <= 20; ++n) idx.push_back(n);
    const auto cv =
        dynamics::cross_validate(lattice::InitialCondition::sign(), 0.5, times, idx, 1e-5);
    double worst = 0.0;
    for (const auto& row : cv.rows) worst = std::max(worst, row.sup_diff);
    r.pass = cv.pass && cv.used.size() == 3;
    r.detail = detail::fmt("%zu solvers, max pairwise sup-diff = %.3g (tol 1e-5)",
                           cv.used.size(), worst);
  });
}

// 3. Bessel even-sum identity
inline Result criterion_3() {
  return detail::timed(3, "bessel even-sum identity", [](Result& r) {
    double worst = 0.0;
    for (int t = 0; t <= 50; ++t) {
      const int K = (t + 1) / 2 + 60;
      worst = std::max(worst, bessel::identity_residual(static_cast<double>(t), K));
    }
    r.pass = worst < 1e-10;
    r.detail = detail::fmt("max residual over t=0..50 is %.3g (tol 1e-10)", worst);
  });
}

// 4. Dirichlet kernel integral vs the Leibniz sums
inline Result criterion_4() {
  return detail::timed(4, "dirichlet kernel integral", [](Result& r) {
    double worst = 0.0;
    for (long n = 1; n <= 200; ++n)
      worst = std::max(worst, std::abs(spectral::dirichlet_kernel_integral(n) -
                                       spectral::dirichlet_kernel_sum(n)));
    const double at_pi = std::abs(spectral::dirichlet_kernel_integral(1000) -
                                  3.141592653589793238462643);
    r.pass = worst < 1e-10 && at_pi < 1e-3;
    r.detail = detail::fmt("max |quad - sum| = %.3g (tol 1e-10), |I(1000) - pi| = %.3g "
                           "(tol 1e-3)",
                           worst, at_pi);
  });
}

// 5. limit constants and convergence toward nu
inline Result criterion_5() {
  return detail::timed(5, "limit constants (L+, L-, nu)", [](Result& r) {
    const auto sgn = spectral::limits_and_nu(lattice::InitialCondition::sign());
    const auto spk = spectral::limits_and_nu(lattice::InitialCondition::spike(3.0));
    const double v_err = std::max(
        {std::abs(sgn.L_plus - 1.0), std::abs(sgn.L_minus + 1.0), std::abs(sgn.nu),
         std::abs(spk.L_plus - 1.0), std::abs(spk.L_minus - 1.0), std::abs(spk.nu - 1.0)});

    // one long run per initial condition; q_1 recorded every 0.25
    const double omega = 0.5, horizon = 400.0 + 16.0;
    dynamics::OdeOptions opt;
    opt.dt = 2e-3;
    opt.record_dt = 0.25;
    const auto run_sign = dynamics::solve_ode(lattice::InitialCondition::sign(), omega,
                                              horizon, opt.dt, 1, 1, opt);
    const auto run_spike = dynamics::solve_ode(lattice::InitialCondition::spike(3.0), omega,
                                               horizon, opt.dt, 1, 1, opt);
    auto at_time = [](const dynamics::Trajectory& tr, double t) {
      const auto i = static_cast<std::size_t>(std::llround(t / 0.25));
      return tr.q.at(i)[0];
    };
    // sign: pointwise doubling samples
    bool mono_sign = true;
    std::string svals = "sign |q1(T)|:";
    double prev = 1e300;
    for (double T : {50.0, 100.0, 200.0, 400.0}) {
      const double v = std::abs(at_time(run_sign, T) - sgn.nu);
      svals += detail::fmt(" %.2e", v);
      mono_sign = mono_sign && v < prev;
      prev = v;
    }
    // spike: one-period envelope sup over [T, T + 4 pi]
    bool mono_spike = true;
    std::string pvals = " spike sup|q1 - nu| on [T, T+4pi]:";
    prev = 1e300;
    for (double T : {50.0, 100.0, 200.0, 400.0}) {
      double sup = 0.0;
      for (double t = T; t <= T + 4.0 * 3.141592653589793; t += 0.25)
        sup = std::max(sup, std::abs(at_time(run_spike, t) - spk.nu));
      pvals += detail::fmt(" %.2e", sup);
      mono_spike = mono_spike && sup < prev;
      prev = sup;
    }
    r.pass = v_err < 1e-2 && mono_sign && mono_spike;
    r.detail = detail::fmt("max limit error %.3g (tol 1e-2); ", v_err) + svals + pvals +
               (mono_sign && mono_spike ? " (decreasing)" : " (NOT decreasing)");
  });
}

// 6. V_n growth law against the frozen quadrature oracle
inline Result criterion_6() {
  return detail::timed(6, "V_n growth law", [](Result& r) {
    // frozen: independent adaptive-Simpson oracle over n = 2..200
    const double oracle_running_max = 9.770780163556;  // attained at n = 2
    const double oracle_v2 = 13.545177444480;
    const double oracle_v157 = 3780.398169668995;

    std::vector<double> ratio(201, 0.0);
    par::parallel_for(199, [&](std::size_t i) {
      const int n = static_cast<int>(i) + 2;
      ratio[static_cast<std::size_t>(n)] =
          bounds::eval_V(n) / (n * std::log(static_cast<double>(n)));
    });
    double run_max = 0.0;
    for (int n = 2; n <= 200; ++n) run_max = std::max(run_max, ratio[static_cast<std::size_t>(n)]);

    // trend over the last decade n in [20, 200]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int n = 20; n <= 200; ++n) {
      const double x = std::log(static_cast<double>(n));
      const double y = ratio[static_cast<std::size_t>(n)];
      sx += x; sy += y; sxx += x * x; sxy += x * y; ++m;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);

    const double spot2 = std::abs(bounds::eval_V(2) - oracle_v2);
    const double spot157 = std::abs(bounds::eval_V(157) - oracle_v157);
    r.pass = run_max <= 1.05 * oracle_running_max && slope <= 1e-3 && spot2 < 1e-6 &&
             spot157 < 1e-4;
    r.detail = detail::fmt("max V_n/(n ln n) = %.6f (<= 1.05 x %.6f), slope(last decade) "
                           "= %.3g, oracle spots %.2g/%.2g",
                           run_max, oracle_running_max, slope, spot2, spot157);
  });
}

// 7. uniform-bound sweeps, stable under grid-density doubling
inline Result criterion_7() {
  return detail::timed(7, "uniform-bound sweeps", [](Result& r) {
    bool ok = true;
    std::string d;
    auto stable = [&](const char* tag, double coarse, double dense) {
      const double rel = std::abs(dense - coarse) / std::max(std::abs(dense), 1e-300);
      ok = ok && std::isfinite(dense) && rel < 0.01;
      d += detail::fmt(" %s sup=%.4f (d=%.2g%%)", tag, dense, 100.0 * rel);
    };

    // n is integer-valued: both grids carry every order 1..200 and the
    // density doubling applies to the continuous t axis.
    const auto i_c = bounds::sweep_I(200, 1, 400.0, 0.5);
    const auto i_d = bounds::sweep_I(200, 1, 400.0, 0.25);
    stable("I", i_c.empirical_sup, i_d.empirical_sup);

    const auto g_c = bounds::sweep_G(200, 1, 400.0, 0.5);
    const auto g_d = bounds::sweep_G(200, 1, 400.0, 0.25);
    stable("G", g_c.empirical_sup, g_d.empirical_sup);
    ok = ok && g_d.empirical_sup < 5.0;  // derived guard

    const auto a_c = bounds::sweep_alt(200, 1, 400.0, 0.25);
    const auto a_d = bounds::sweep_alt(200, 1, 400.0, 0.125);
    stable("alt_odd", a_c.first.empirical_sup, a_d.first.empirical_sup);
    stable("alt_even", a_c.second.empirical_sup, a_d.second.empirical_sup);

    // |C_n(t)| per gamma regime: one (n,t) sweep, points filtered by t/n
    const auto c_coarse = bounds::sweep_C(200, 1, 400.0, 0.25);
    const auto c_dense = bounds::sweep_C(200, 1, 400.0, 0.125);
    struct Band {
      const char* tag;
      double lo, hi;  // closed band, overlapping at the partition points
    };
    const std::vector<Band> bands = {
        {"C[g<=g1]", 0.0, bounds::kGamma1},
        {"C[g1..1]", bounds::kGamma1, 1.0},
        {"C[1..g2]", 1.0, bounds::kGamma2},
        {"C[g>=g2]", bounds::kGamma2, 1e300},
    };
    auto band_sup = [](const report::BoundSweepReport& rep, double lo, double hi) {
      double sup = 0.0;
      for (std::size_t i = 0; i < rep.grid.size(); ++i) {
        const double g = rep.grid[i].b / rep.grid[i].a;
        if (g >= lo - 1e-12 && g <= hi + 1e-12)
          sup = std::max(sup, std::abs(rep.values[i]));
      }
      return sup;
    };
    for (const auto& band : bands)
      stable(band.tag, band_sup(c_coarse, band.lo, band.hi),
             band_sup(c_dense, band.lo, band.hi));

    r.pass = ok;
    r.detail = d + " (all deltas < 1%, G sup < 5)";
  });
}

// 8. spectral reconstruction constancy
inline Result criterion_8() {
  return detail::timed(8, "reconstruction constancy", [](Result& r) {
    double worst = 0.0;
    for (const auto& ic :
         {lattice::InitialCondition::sign(), lattice::InitialCondition::spike(3.0)}) {
      const auto q0 = lattice::sample(ic);
      const auto qd = lattice::discrete_laplacian(q0);
      const double A = spectral::compute_A(qd);
      spectral::detail::SymCoeffs sym(qd);
      double lo = 1e300, hi = -1e300;
      for (long n = -64; n <= 64; ++n) {
        const double c = q0.at(n) - spectral::tilde_q(sym, A, n);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      worst = std::max(worst, hi - lo);
    }
    r.pass = worst < 1e-6;
    r.detail = detail::fmt("max spread of q_n(0) - tilde_q_n over n in [-64,64] = %.3g "
                           "(tol 1e-6)",
                           worst);
  });
}

// 9. integrator physics invariants
inline Result criterion_9() {
  return detail::timed(9, "physics invariants", [](Result& r) {
    dynamics::OdeOptions opt;
    opt.record_dt = 1.0;
    const auto tr =
        dynamics::solve_ode(lattice::InitialCondition::sign(), 1.0, 100.0, 1e-3, -2, 2, opt);
    const double drift = tr.energy_drift_rel;

    dynamics::Chain chain(lattice::InitialCondition::spike(2.0), 1.0, 140, 1e-3, 4);
    chain.step(100000);
    chain.flip_momenta();
    chain.step(100000);
    double rev = 0.0;
    for (long k = -140; k <= 140; ++k)
      rev = std::max(rev, std::abs(chain.q_at(k) -
                                   lattice::evaluate_ic(lattice::InitialCondition::spike(2.0), k)));

    std::mt19937 rng(20260809);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::map<long, double> t1, t2, mix;
    const double alpha = 1.7, beta = -0.6;
    for (long k = -5; k <= 5; ++k) {
      t1[k] = u(rng);
      t2[k] = u(rng);
      mix[k] = alpha * t1[k] + beta * t2[k];
    }
    const auto a =
        dynamics::solve_ode(lattice::InitialCondition::custom(t1, 8), 1.0, 10.0, 5e-3, -5, 5);
    const auto b =
        dynamics::solve_ode(lattice::InitialCondition::custom(t2, 8), 1.0, 10.0, 5e-3, -5, 5);
    const auto m =
        dynamics::solve_ode(lattice::InitialCondition::custom(mix, 8), 1.0, 10.0, 5e-3, -5, 5);
    double lin = 0.0;
    for (std::size_t ti = 0; ti < m.times.size(); ++ti)
      for (long k = -5; k <= 5; ++k)
        lin = std::max(lin,
                       std::abs(m.at(ti, k) - (alpha * a.at(ti, k) + beta * b.at(ti, k))));

    r.pass = drift < 1e-6 && rev < 1e-8 && lin < 1e-10;
    r.detail = detail::fmt("energy drift %.3g (tol 1e-6), reversal %.3g (tol 1e-8), "
                           "linearity %.3g (tol 1e-10)",
                           drift, rev, lin);
  });
}

// 10. decomposition identities on a random grid
inline Result criterion_10() {
  return detail::timed(10, "decomposition identities", [](Result& r) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dn(1, 60);
    std::uniform_real_distribution<double> dt(0.0, 80.0), dr(0.5, 150.0);
    double worst_gest = 0.0, worst_rm = 0.0;
    for (int i = 0; i < 50; ++i) {
      const long n = dn(rng);
      const double t = dt(rng);
      const double lhs = bounds::eval_main_gest(n, t);
      const double rhs =
          spectral::dirichlet_kernel_sum(n) - 2.0 * bounds::eval_I(2 * n, t);
      worst_gest = std::max(worst_gest, std::abs(lhs - rhs));
    }
    for (int i = 0; i < 50; ++i) {
      const double n = dr(rng);
      const double t = dt(rng);
      const auto [rr, mm] = bounds::eval_R_M(n, t);
      const double c_tilde = quad::oscillatory(
          [n, t](double x) { return std::cos(t * std::sin(x)) * bounds::ratio_lin(n, x); },
          0.0, 0.25 * 3.141592653589793238462643, std::max(n, t));
      worst_rm = std::max(worst_rm, std::abs(c_tilde - 0.5 * (rr + mm)));
    }
    r.pass = worst_gest < 1e-8 && worst_rm < 1e-8;
    r.detail = detail::fmt("max |gest - (dirichlet - 2 I_{2n})| = %.3g, max |Ctilde - "
                           "(R+M)/2| = %.3g (tol 1e-8)",
                           worst_gest, worst_rm);
  });
}

inline std::vector<Result> run_all() {
  std::vector<Result> out;
  out.push_back(criterion_1());
  out.push_back(criterion_2());
  out.push_back(criterion_3());
  out.push_back(criterion_4());
  out.push_back(criterion_5());
  out.push_back(criterion_6());
  out.push_back(criterion_7());
  out.push_back(criterion_8());
  out.push_back(criterion_9());
  out.push_back(criterion_10());

  // runtime budgets
  auto budget = [&](int id, double limit) {
    auto& c = out[static_cast<std::size_t>(id - 1)];
    if (c.seconds >= limit) {
      c.pass = false;
      c.detail += detail::fmt(" [runtime %.1fs exceeded %.0fs budget]", c.seconds, limit);
    }
  };
  budget(1, 10.0);
  budget(2, 60.0);
  budget(7, 600.0);
  return out;
}

}  // namespace harmonic::acceptance
