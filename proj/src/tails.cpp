#include "lz/tails.hpp"

#include <cmath>
#include <stdexcept>

#include "lz/special_functions.hpp"

namespace lz {

Matrix2c tail_integral_matrix(double t_max, const LZParams& p) {
  if (!(t_max > 0.0)) throw std::invalid_argument("tail_integral_matrix: t_max must be > 0");
  p.validate();
  const Cx minus_i_d(0.0, -p.delta / p.hbar);
  Matrix2c m;
  m << Cx(1.0), minus_i_d * xi(t_max, p.v, p.hbar),
       minus_i_d * eta(t_max, p.v, p.hbar), Cx(1.0);
  return m;
}

Unitary2 z_operator(double t, const LZParams& p) {
  const double phase = 0.5 * p.v * t * t / p.hbar;
  Matrix2c z;
  z << std::polar(1.0, -phase), Cx(0.0), Cx(0.0), std::polar(1.0, phase);
  return z;
}

State2 initial_state_perturbed(double t_max, const LZParams& p) {
  const State2 raw = z_operator(-t_max, p) * (tail_integral_matrix(t_max, p) * psi_plus());
  return raw.normalized();
}

std::pair<double, double> final_probability_perturbed(const State2& psi_at_tmax, double t_max,
                                                      const LZParams& p) {
  if (std::abs(psi_at_tmax.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("final_probability_perturbed: state must be normalized");
  const State2 raw =
      tail_integral_matrix(t_max, p) * (z_operator(t_max, p).adjoint() * psi_at_tmax);
  const State2 phi = raw.normalized();
  return {std::norm(phi(0)), std::norm(phi(1))};
}

}  // namespace lz
