// Landau-Zener problem definition: sweep parameters, the Hamiltonian
// H(t) = v t sigma_z + delta sigma_x, its instantaneous spectrum, and the
// closed-form transition probability exp(-pi delta^2 / (v hbar)) used as the
// reference value everywhere.
#ifndef LZ_MODEL_HPP
#define LZ_MODEL_HPP

#include <cmath>
#include <stdexcept>

#include "lz/su2.hpp"

namespace lz {

struct LZParams {
  double v = M_PI;     // sweep rate, energy/time
  double delta = 1.0;  // coupling, energy
  double hbar = 1.0;   // action

  void validate() const {
    if (!(v > 0.0)) throw std::invalid_argument("LZParams: v must be > 0");
    if (!(delta >= 0.0)) throw std::invalid_argument("LZParams: delta must be >= 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("LZParams: hbar must be > 0");
  }
};

inline Matrix2c hamiltonian(double t, const LZParams& p) {
  using C = std::complex<double>;
  Matrix2c h;
  h << C(p.v * t), C(p.delta), C(p.delta), C(-p.v * t);
  return h;
}

// (E-, E+) = -+ sqrt(v^2 t^2 + delta^2); minimal gap 2 delta at t = 0.
inline std::pair<double, double> instantaneous_energies(double t, const LZParams& p) {
  const double e = std::hypot(p.v * t, p.delta);
  return {-e, e};
}

inline double exact_transition_probability(const LZParams& p) {
  return std::exp(-M_PI * p.delta * p.delta / (p.v * p.hbar));
}

inline State2 psi_plus() { return State2(1.0, 0.0); }
inline State2 psi_minus() { return State2(0.0, 1.0); }

}  // namespace lz

#endif  // LZ_MODEL_HPP
