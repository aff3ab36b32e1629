#include "lz/propagation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lz {

TimeGrid TimeGrid::over(double t_max, double dt) {
  TimeGrid g;
  g.t_max = t_max;
  g.dt = dt;
  g.n_steps = (dt > 0.0) ? std::lround(2.0 * t_max / dt) : 0;
  g.validate();
  return g;
}

void TimeGrid::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("TimeGrid: dt must be > 0");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("TimeGrid: t_max must be > 0");
  if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
  if (std::abs(static_cast<double>(n_steps) * dt - 2.0 * t_max) > 0.5 * dt)
    throw std::invalid_argument("TimeGrid: n_steps * dt does not reproduce 2 t_max within dt/2");
}

RotationVector exact_factor_rotation(double t, double dt, const LZParams& p) {
  const double w = -dt / p.hbar;
  return RotationVector(w * p.delta, 0.0, w * p.v * t);
}

Unitary2 trotter_factor_exact(double t, double dt, const LZParams& p) {
  return euler_exp<double>(exact_factor_rotation(t, dt, p));
}

Unitary2 trotter_factor_split(double t, double dt, const LZParams& p) {
  const double w = -dt / p.hbar;
  const Unitary2 uz = euler_exp<double>(RotationVector(0.0, 0.0, w * p.v * t));
  const Unitary2 ux = euler_exp<double>(RotationVector(w * p.delta, 0.0, 0.0));
  return uz * ux;
}

double split_period(const LZParams& p, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("split_period: dt must be > 0");
  if (!(p.v > 0.0)) throw std::invalid_argument("split_period: v must be > 0");
  return 2.0 * M_PI * p.hbar / (p.v * dt);
}

bool split_guard_ok(const TimeGrid& grid, const LZParams& p) {
  return grid.t_max <= 0.25 * split_period(p, grid.dt);
}

namespace {

struct FactorCoeffs {
  // Exact factor as [[c - i sz, -i sx], [-i sx, c + i sz]].
  double c, sx, sz;
};

inline FactorCoeffs exact_coeffs(double t, double dt, const LZParams& p) {
  const double hz = p.v * t;
  const double omega = std::hypot(hz, p.delta);
  const double g = omega * dt / p.hbar;
  const double s = detail::sinc(g) * dt / p.hbar;  // sin(g)/omega
  return {detail::cos_small_safe(g), s * p.delta, s * hz};
}

}  // namespace

ProbabilityTrace propagate(const State2& psi0, const TimeGrid& grid, FactorForm form,
                           PropagationMode mode, const LZParams& p,
                           const PropagateOptions& opts) {
  grid.validate();
  p.validate();
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("propagate: psi0 must be normalized");

  ProbabilityTrace trace;
  if (form == FactorForm::Split && !split_guard_ok(grid, p)) {
    std::ostringstream os;
    os << "split-form periodicity guard: t_max = " << grid.t_max << " exceeds T/4 = "
       << 0.25 * split_period(p, grid.dt) << " (T = 2 pi hbar / (v dt)); expect degraded accuracy";
    trace.warnings.push_back(os.str());
  }

  const long n = grid.n_steps;
  const long every = opts.sample_every > 0 ? opts.sample_every : std::max<long>(1, n / 10000);
  trace.times.reserve(static_cast<size_t>(n / every) + 2);
  trace.p_plus.reserve(static_cast<size_t>(n / every) + 2);
  trace.p_minus.reserve(static_cast<size_t>(n / every) + 2);

  std::complex<double> a = psi0(0), b = psi0(1);
  Matrix2c u_acc = Matrix2c::Identity();

  auto record = [&](double t_now) {
    std::complex<double> aa = a, bb = b;
    if (mode == PropagationMode::Operator) {
      aa = u_acc(0, 0) * psi0(0) + u_acc(0, 1) * psi0(1);
      bb = u_acc(1, 0) * psi0(0) + u_acc(1, 1) * psi0(1);
    }
    trace.times.push_back(t_now);
    trace.p_plus.push_back(std::norm(aa));
    trace.p_minus.push_back(std::norm(bb));
  };

  const double toff = opts.midpoint ? 0.5 * grid.dt : 0.0;
  record(grid.time_at(0));
  for (long k = 0; k < n; ++k) {
    const double t = grid.time_at(k) + toff;
    if (form == FactorForm::Exact && mode == PropagationMode::State) {
      // Hot path: one hand-expanded 2x2 mat-vec per step.
      const FactorCoeffs f = exact_coeffs(t, grid.dt, p);
      const std::complex<double> na(f.c * a.real() + f.sz * a.imag() + f.sx * b.imag(),
                                    f.c * a.imag() - f.sz * a.real() - f.sx * b.real());
      const std::complex<double> nb(f.c * b.real() - f.sz * b.imag() + f.sx * a.imag(),
                                    f.c * b.imag() + f.sz * b.real() - f.sx * a.real());
      a = na;
      b = nb;
    } else {
      const Unitary2 u = (form == FactorForm::Exact) ? trotter_factor_exact(t, grid.dt, p)
                                                     : trotter_factor_split(t, grid.dt, p);
      if (mode == PropagationMode::State) {
        const std::complex<double> na = u(0, 0) * a + u(0, 1) * b;
        const std::complex<double> nb = u(1, 0) * a + u(1, 1) * b;
        a = na;
        b = nb;
      } else {
        u_acc = (u * u_acc).eval();
      }
    }
    if ((k + 1) % every == 0 && k + 1 != n) record(grid.time_at(k + 1));
  }
  record(grid.realized_end());

  if (mode == PropagationMode::Operator) {
    trace.final_state = u_acc * psi0;
  } else {
    trace.final_state = State2(a, b);
  }
  return trace;
}

}  // namespace lz
