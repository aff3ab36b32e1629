// Trotterized time-ordered propagation over [-t_max, t_max]. Each step applies
// exp(-i H(t_k) dt / hbar) with left-endpoint evaluation t_k = -t_max + k dt,
// either as the exact single exponential of the instantaneous Hamiltonian or
// in the split sigma_z * sigma_x form, propagating the state or accumulating
// the operator.
#ifndef LZ_PROPAGATION_HPP
#define LZ_PROPAGATION_HPP

#include <string>
#include <vector>

#include "lz/model.hpp"
#include "lz/su2.hpp"

namespace lz {

struct TimeGrid {
  double t_max = 30.0;  // window half-width
  double dt = 1e-4;
  long n_steps = 0;

  // Rounds n_steps = round(2 t_max / dt) and validates the grid.
  static TimeGrid over(double t_max, double dt);

  double time_at(long k) const { return -t_max + static_cast<double>(k) * dt; }
  // Right window edge actually reached; differs from t_max when 2 t_max / dt
  // is not an integer.
  double realized_end() const { return time_at(n_steps); }
  double realized_t_max() const { return 0.5 * static_cast<double>(n_steps) * dt; }

  void validate() const;
};

enum class FactorForm { Exact, Split };
enum class PropagationMode { State, Operator };

struct ProbabilityTrace {
  std::vector<double> times;
  std::vector<double> p_plus;
  std::vector<double> p_minus;
  State2 final_state = State2(1.0, 0.0);
  std::vector<std::string> warnings;
};

// Rotation vector of the exact factor: gamma = -(dt/hbar) (delta, 0, v t).
RotationVector exact_factor_rotation(double t, double dt, const LZParams& p);

Unitary2 trotter_factor_exact(double t, double dt, const LZParams& p);
// exp(-i v t sigma_z dt/hbar) * exp(-i delta sigma_x dt/hbar), left-to-right.
Unitary2 trotter_factor_split(double t, double dt, const LZParams& p);

// Period of the split-form sigma_z sub-factor artifact, T = 2 pi hbar / (v dt).
double split_period(const LZParams& p, double dt);

// True when the window respects the split-form guard t_max <= T/4.
bool split_guard_ok(const TimeGrid& grid, const LZParams& p);

struct PropagateOptions {
  long sample_every = 0;   // 0 -> max(1, n_steps / 10^4)
  bool midpoint = false;   // evaluate H at t + dt/2 instead of t
};

ProbabilityTrace propagate(const State2& psi0, const TimeGrid& grid, FactorForm form,
                           PropagationMode mode, const LZParams& p,
                           const PropagateOptions& opts = {});

}  // namespace lz

#endif  // LZ_PROPAGATION_HPP
