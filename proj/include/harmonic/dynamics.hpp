#pragma once

// Trajectories of the truncated chain q_k'' = omega^2 (Delta q)_k by three
// independent routes: a symplectic ODE integrator, the spectral solution
// formula, and (for the sign initial condition) the Bessel series. All
// spectral/Bessel time arguments carry 2*omega*t from the dispersion
// 2*omega*sin(lambda/2).
//
// Truncation: the lattice is cut at half-width N = max|report index| +
// ceil(omega*T) + margin with boundary cells frozen at their initial
// values. Group velocity is at most omega, so boundary influence on the
// reported cells stays below 1e-10 (exponentially small outside the light
// cone).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/bessel.hpp"
#include "harmonic/lattice.hpp"
#include "harmonic/quadrature.hpp"
#include "harmonic/report.hpp"
#include "harmonic/spectral.hpp"

namespace harmonic::dynamics {

enum class Solver { OdeTruncated, SpectralFormula, BesselSeries, ClosedForm };

inline const char* solver_name(Solver s) {
  switch (s) {
    case Solver::OdeTruncated: return "ode";
    case Solver::SpectralFormula: return "spectral";
    case Solver::BesselSeries: return "bessel";
    case Solver::ClosedForm: return "closed-form";
  }
  return "?";
}

struct Trajectory {
  Solver solver = Solver::OdeTruncated;
  double omega = 1.0;
  long k_lo = 0, k_hi = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> q;  // [time][k - k_lo]
  std::vector<std::vector<double>> p;  // OdeTruncated only
  // provenance
  double dt = 0.0;
  long half_width = 0;
  long margin = 0;
  double energy_drift_rel = 0.0;

  std::size_t n_indices() const { return static_cast<std::size_t>(k_hi - k_lo + 1); }
  double at(std::size_t ti, long k) const {
    if (k < k_lo || k > k_hi) throw std::out_of_range("Trajectory::at index");
    return q.at(ti)[static_cast<std::size_t>(k - k_lo)];
  }
};

struct OdeOptions {
  double dt = 0.0;        // 0 -> min(0.01/omega, 0.01)
  long margin = 32;
  int order = 4;          // 4: Forest-Ruth composition of Verlet, 2: plain Verlet
  double record_dt = 0.0; // 0 -> every step
  long forced_half_width = 0;  // 0 -> computed from T and the report window
};

// Truncated chain with frozen boundary cells, stepped by a symmetric
// symplectic composition (kick-drift-kick).
class Chain {
 public:
  Chain(const lattice::InitialCondition& ic, double omega, long half_width, double dt,
        int order = 4)
      : omega_(omega), n_(half_width), dt_(dt) {
    if (!(omega > 0.0)) throw std::invalid_argument("Chain: omega must be > 0");
    if (!(dt > 0.0) || dt > 0.1 / omega)
      throw std::invalid_argument("Chain: need 0 < dt <= 0.1/omega");
    if (half_width < 1) throw std::invalid_argument("Chain: half width must be >= 1");
    if (order == 2) {
      drift_ = {1.0};
      kick_ = {0.5, 0.5};
    } else if (order == 4) {
      const double w1 = 1.0 / (2.0 - std::cbrt(2.0));
      const double w0 = 1.0 - 2.0 * w1;
      drift_ = {w1, w0, w1};
      kick_ = {0.5 * w1, 0.5 * (w1 + w0), 0.5 * (w0 + w1), 0.5 * w1};
    } else {
      throw std::invalid_argument("Chain: order must be 2 or 4");
    }
    const std::size_t cells = static_cast<std::size_t>(2 * n_ + 1);
    q_.resize(cells);
    p_.assign(cells, 0.0);
    accel_.assign(cells, 0.0);
    for (long k = -n_; k <= n_; ++k)
      q_[static_cast<std::size_t>(k + n_)] = lattice::evaluate_ic(ic, k);
    compute_accel();
  }

  void step(long n_steps = 1) {
    for (long s = 0; s < n_steps; ++s) {
      for (std::size_t j = 0; j < drift_.size(); ++j) {
        kick(kick_[j]);
        drift(drift_[j]);
        compute_accel();
      }
      kick(kick_.back());
    }
  }

  void flip_momenta() {
    for (auto& v : p_) v = -v;
  }

  double q_at(long k) const { return q_[static_cast<std::size_t>(k + n_)]; }
  double p_at(long k) const { return p_[static_cast<std::size_t>(k + n_)]; }
  long half_width() const { return n_; }
  double dt() const { return dt_; }

  // 1/2 sum p^2 + (omega^2/2) sum (q_{k+1} - q_k)^2 over the truncation.
  double energy() const {
    double kin = 0.0, pot = 0.0;
    for (double v : p_) kin += v * v;
    for (std::size_t i = 0; i + 1 < q_.size(); ++i) {
      const double d = q_[i + 1] - q_[i];
      pot += d * d;
    }
    return 0.5 * kin + 0.5 * omega_ * omega_ * pot;
  }

 private:
  void compute_accel() {
    const double w2 = omega_ * omega_;
    for (std::size_t i = 1; i + 1 < q_.size(); ++i)
      accel_[i] = w2 * (q_[i + 1] - 2.0 * q_[i] + q_[i - 1]);
    // boundary cells stay frozen
    accel_.front() = 0.0;
    accel_.back() = 0.0;
  }
  void kick(double c) {
    const double cdt = c * dt_;
    for (std::size_t i = 1; i + 1 < p_.size(); ++i) p_[i] += cdt * accel_[i];
  }
  void drift(double c) {
    const double cdt = c * dt_;
    for (std::size_t i = 1; i + 1 < q_.size(); ++i) q_[i] += cdt * p_[i];
  }

  double omega_;
  long n_;
  double dt_;
  std::vector<double> drift_, kick_;
  std::vector<double> q_, p_, accel_;
};

inline long required_half_width(double omega, double T, long k_lo, long k_hi, long margin) {
  const long reach = std::max(std::labs(k_lo), std::labs(k_hi));
  return reach + static_cast<long>(std::ceil(omega * T)) + margin;
}

inline Trajectory solve_ode(const lattice::InitialCondition& ic, double omega, double T,
                            double dt, long k_lo, long k_hi, OdeOptions opt = {}) {
  if (k_hi < k_lo) throw std::invalid_argument("solve_ode: empty report window");
  if (!(T >= 0.0)) throw std::invalid_argument("solve_ode: T must be >= 0");
  if (dt <= 0.0) dt = opt.dt > 0.0 ? opt.dt : std::min(0.01 / omega, 0.01);
  const long need = required_half_width(omega, T, k_lo, k_hi, opt.margin);
  long n = need;
  if (opt.forced_half_width > 0) {
    if (opt.forced_half_width < need)
      throw std::invalid_argument("solve_ode: truncation half-width " +
                                  std::to_string(opt.forced_half_width) +
                                  " too small; need N >= " + std::to_string(need));
    n = opt.forced_half_width;
  }

  Chain chain(ic, omega, n, dt, opt.order);
  const long steps = static_cast<long>(std::llround(T / dt));
  const long stride = opt.record_dt <= 0.0
                          ? 1
                          : std::max<long>(1, static_cast<long>(std::llround(opt.record_dt / dt)));

  Trajectory tr;
  tr.solver = Solver::OdeTruncated;
  tr.omega = omega;
  tr.k_lo = k_lo;
  tr.k_hi = k_hi;
  tr.dt = dt;
  tr.half_width = n;
  tr.margin = opt.margin;

  const double e0 = chain.energy();
  double drift_max = 0.0;
  auto record = [&](long step_idx) {
    tr.times.push_back(step_idx * dt);
    std::vector<double> row, prow;
    row.reserve(tr.n_indices());
    prow.reserve(tr.n_indices());
    for (long k = k_lo; k <= k_hi; ++k) {
      row.push_back(chain.q_at(k));
      prow.push_back(chain.p_at(k));
    }
    tr.q.push_back(std::move(row));
    tr.p.push_back(std::move(prow));
    drift_max = std::max(drift_max, std::abs(chain.energy() - e0));
  };

  record(0);
  for (long s = 1; s <= steps; ++s) {
    chain.step();
    if (s % stride == 0 || s == steps) record(s);
  }
  tr.energy_drift_rel = drift_max / std::max(std::abs(e0), 1e-300);
  return tr;
}

// ---- spectral formula ----

// q_n(t) = q_n(0) - (1/pi) int_0^pi K(l) [Q+ cos(nl) + Q- sin(nl)] dl with
// K(l) = (1 - cos(2 w t sin(l/2))) / (4 sin^2(l/2)) = sin^2(w t sin(l/2)) /
// (2 sin^2(l/2)); the lambda->0 limit (w t)^2/2 is removable and the kernel
// form above is stable all the way down.
inline double spectral_value(const spectral::detail::SymCoeffs& sym, double q0_n,
                             double omega, long n, double t) {
  if (t == 0.0) return q0_n;
  constexpr double pi = 3.141592653589793238462643;
  const double wt = omega * t;
  const double dn = static_cast<double>(n);
  auto integrand = [&](double lam) {
    const double sh = std::sin(0.5 * lam);
    const double osc = std::sin(wt * sh);
    const double kernel = 0.5 * (osc * osc) / (sh * sh);
    return kernel * (sym.q_plus(lam) * std::cos(dn * lam) +
                     sym.q_minus(lam) * std::sin(dn * lam));
  };
  const double freq =
      std::max({std::abs(dn), std::abs(wt), static_cast<double>(sym.radius), 1.0});
  return q0_n - quad::oscillatory(integrand, 0.0, pi, freq) / pi;
}

inline Trajectory solve_spectral(const lattice::InitialCondition& ic, double omega,
                                 const std::vector<double>& times,
                                 const std::vector<long>& indices) {
  const auto rep = spectral::classify(ic);
  if (!spectral::is_member(rep.verdict))
    throw std::invalid_argument(
        std::string("solve_spectral: initial condition is ") +
        spectral::verdict_name(rep.verdict) +
        "; the spectral formula needs a member of l^Delta (use solve_ode)");
  const auto q0 = lattice::sample(ic);
  const auto qd = lattice::discrete_laplacian(q0);
  spectral::detail::SymCoeffs sym(qd);

  Trajectory tr;
  tr.solver = Solver::SpectralFormula;
  tr.omega = omega;
  tr.k_lo = *std::min_element(indices.begin(), indices.end());
  tr.k_hi = *std::max_element(indices.begin(), indices.end());
  tr.times = times;
  for (double t : times) {
    std::vector<double> row(tr.n_indices(), 0.0);
    for (long k = tr.k_lo; k <= tr.k_hi; ++k)
      row[static_cast<std::size_t>(k - tr.k_lo)] =
          spectral_value(sym, q0.at(k), omega, k, t);
    tr.q.push_back(std::move(row));
  }
  return tr;
}

// ---- Bessel series for the sign initial condition ----

// q_n(t) = J_0 + 2 sum_{k=1}^{n-1} J_{2k} + J_{2n}, all at argument 2*w*t;
// cross-checked against the tail form 1 + J_{2n} - 2 sum_{k>=n} J_{2k}.
inline double solve_bessel_sign(double omega, long n, double t) {
  if (n < 1) throw std::invalid_argument("solve_bessel_sign: n must be >= 1");
  const double arg = 2.0 * omega * t;
  const int top = static_cast<int>(2 * n) + 64 +
                  static_cast<int>(std::ceil(arg) + 13.0 * std::cbrt(std::max(arg, 1.0)));
  const auto col = bessel::j_column(top, arg);
  double finite = col[0] + col[static_cast<std::size_t>(2 * n)];
  for (long k = 1; k < n; ++k) finite += 2.0 * col[static_cast<std::size_t>(2 * k)];
  double tail = 0.0;
  for (long k = n; 2 * k <= top; ++k) {
    const double term = col[static_cast<std::size_t>(2 * k)];
    tail += term;
    if (2 * k > arg + 8 && std::abs(term) < 1e-17) break;
  }
  const double via_tail = 1.0 + col[static_cast<std::size_t>(2 * n)] - 2.0 * tail;
  if (std::abs(finite - via_tail) > 1e-10)
    throw std::runtime_error("solve_bessel_sign: series forms disagree by " +
                             std::to_string(finite - via_tail) +
                             " (Bessel evaluation fault)");
  return finite;
}

inline Trajectory solve_bessel_sign_trajectory(double omega, const std::vector<double>& times,
                                               const std::vector<long>& indices) {
  Trajectory tr;
  tr.solver = Solver::BesselSeries;
  tr.omega = omega;
  tr.k_lo = *std::min_element(indices.begin(), indices.end());
  tr.k_hi = *std::max_element(indices.begin(), indices.end());
  tr.times = times;
  for (double t : times) {
    std::vector<double> row(tr.n_indices(), 0.0);
    for (long k = tr.k_lo; k <= tr.k_hi; ++k) {
      double v = 0.0;  // sign is odd, so q_0 = 0 and q_{-n} = -q_n
      if (k > 0) v = solve_bessel_sign(omega, k, t);
      if (k < 0) v = -solve_bessel_sign(omega, -k, t);
      row[static_cast<std::size_t>(k - tr.k_lo)] = v;
    }
    tr.q.push_back(std::move(row));
  }
  return tr;
}

// ---- closed forms ----

inline bool has_closed_form(const lattice::InitialCondition& ic) {
  return ic.rule == lattice::Rule::Alternating || ic.rule == lattice::Rule::Constant;
}

inline Trajectory solve_closed_form(const lattice::InitialCondition& ic, double omega,
                                    const std::vector<double>& times,
                                    const std::vector<long>& indices) {
  if (!has_closed_form(ic))
    throw std::invalid_argument("solve_closed_form: only alternating and constant rules");
  Trajectory tr;
  tr.solver = Solver::ClosedForm;
  tr.omega = omega;
  tr.k_lo = *std::min_element(indices.begin(), indices.end());
  tr.k_hi = *std::max_element(indices.begin(), indices.end());
  tr.times = times;
  for (double t : times) {
    std::vector<double> row(tr.n_indices(), 0.0);
    for (long k = tr.k_lo; k <= tr.k_hi; ++k) {
      const double v = ic.rule == lattice::Rule::Alternating
                           ? ((k & 1L) ? -1.0 : 1.0) * std::cos(2.0 * omega * t)
                           : ic.param;
      row[static_cast<std::size_t>(k - tr.k_lo)] = v;
    }
    tr.q.push_back(std::move(row));
  }
  return tr;
}

// ---- cross validation ----

struct CrossValidation {
  struct Row {
    Solver a, b;
    double sup_diff;
  };
  std::vector<Solver> used;
  std::vector<Row> rows;
  double tolerance = 1e-5;
  bool pass = false;
};

inline CrossValidation cross_validate(const lattice::InitialCondition& ic, double omega,
                                      const std::vector<double>& times,
                                      const std::vector<long>& indices,
                                      double tolerance = 1e-5) {
  if (times.empty() || indices.empty())
    throw std::invalid_argument("cross_validate: empty grid");
  const double T = *std::max_element(times.begin(), times.end());
  const long k_lo = *std::min_element(indices.begin(), indices.end());
  const long k_hi = *std::max_element(indices.begin(), indices.end());

  std::vector<Trajectory> runs;
  {
    OdeOptions opt;
    opt.dt = std::min(0.002, 0.01 / omega);
    Trajectory ode = solve_ode(ic, omega, T, opt.dt, k_lo, k_hi, opt);
    // resample the ODE run onto the requested times
    Trajectory res = ode;
    res.times = times;
    res.q.clear();
    res.p.clear();
    for (double t : times) {
      const auto idx = static_cast<std::size_t>(std::llround(t / ode.dt));
      if (idx >= ode.q.size() ||
          std::abs(ode.times[idx] - t) > 0.5 * ode.dt + 1e-12)
        throw std::invalid_argument(
            "cross_validate: requested times must lie on the ODE step grid");
      res.q.push_back(ode.q[idx]);
    }
    runs.push_back(std::move(res));
  }
  if (spectral::is_member(spectral::classify(ic).verdict))
    runs.push_back(solve_spectral(ic, omega, times, indices));
  if (ic.rule == lattice::Rule::Sign)
    runs.push_back(solve_bessel_sign_trajectory(omega, times, indices));
  if (has_closed_form(ic)) runs.push_back(solve_closed_form(ic, omega, times, indices));

  if (runs.size() < 2)
    throw std::invalid_argument(
        "cross_validate: fewer than two applicable solvers for this initial condition");

  CrossValidation cv;
  cv.tolerance = tolerance;
  for (const auto& r : runs) cv.used.push_back(r.solver);
  bool all_ok = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      double sup = 0.0;
      for (std::size_t ti = 0; ti < times.size(); ++ti)
        for (long k : indices)
          sup = std::max(sup, std::abs(runs[i].at(ti, k) - runs[j].at(ti, k)));
      cv.rows.push_back({runs[i].solver, runs[j].solver, sup});
      all_ok = all_ok && sup < tolerance;
    }
  }
  cv.pass = all_ok;
  return cv;
}

// ---- uniform-boundedness sweep ----

inline report::BoundSweepReport boundedness_sweep(const lattice::InitialCondition& ic,
                                                  double omega, double T,
                                                  const std::vector<long>& indices,
                                                  double dt_report = 0.1) {
  if (indices.empty()) throw std::invalid_argument("boundedness_sweep: no indices");
  const long k_lo = *std::min_element(indices.begin(), indices.end());
  const long k_hi = *std::max_element(indices.begin(), indices.end());
  const long n = required_half_width(omega, T, k_lo, k_hi, 32);
  const double dt = std::min(0.01 / omega, 0.01);
  Chain chain(ic, omega, n, dt, 4);

  const long steps = std::max<long>(1, static_cast<long>(std::llround(T / dt)));
  const long stride = std::max<long>(1, static_cast<long>(std::llround(dt_report / dt)));

  double running_sup = 0.0;
  double arg_t = 0.0;
  long arg_k = indices.front();
  auto scan = [&](double t_now) {
    for (long k : indices) {
      const double v = std::abs(chain.q_at(k));
      if (v > running_sup) {
        running_sup = v;
        arg_t = t_now;
        arg_k = k;
      }
    }
  };
  scan(0.0);

  const std::vector<long> checkpoints = {std::max<long>(1, steps / 8),
                                         std::max<long>(1, steps / 4),
                                         std::max<long>(1, steps / 2), steps};
  std::vector<report::GridPoint> grid;
  std::vector<double> sups;
  std::size_t next_cp = 0;
  for (long s = 1; s <= steps; ++s) {
    chain.step();
    if (s % stride == 0 || s == steps) scan(s * dt);
    while (next_cp < checkpoints.size() && s == checkpoints[next_cp]) {
      grid.push_back({s * dt, static_cast<double>(arg_k)});
      sups.push_back(running_sup);
      ++next_cp;
    }
  }

  report::BoundSweepReport rep;
  rep.target = report::Target::TrajectorySup;
  rep.quantity = "sup_{k,t<=T} |q_k(t)|, running sup at T/8, T/4, T/2, T";
  rep.grid = std::move(grid);
  rep.values = std::move(sups);
  rep.finalize();
  rep.argmax = {arg_t, static_cast<double>(arg_k)};

  const bool member = spectral::is_member(spectral::classify(ic).verdict);
  const std::size_t m = rep.values.size();
  const bool stable =
      m >= 2 && rep.values[m - 1] <= rep.values[m - 2] * 1.01 + 1e-300;
  if (!member)
    rep.verdict = report::SweepVerdict::INFORMATIONAL;
  else
    rep.verdict = stable ? report::SweepVerdict::PASS : report::SweepVerdict::FAIL;
  return rep;
}

}  // namespace harmonic::dynamics
