// First-order interaction-picture evolution over the semi-infinite intervals
// (-inf, -t_max] and [t_max, +inf). With H0 = v t sigma_z rotated away by
// Z(t) = exp(-i v t^2 sigma_z / 2 hbar), the remaining coupling integrates in
// closed form to the tail matrix
//
//   M(t_max) = [[1, -(i delta/hbar) xi(t_max)], [-(i delta/hbar) eta(t_max), 1]]
//
// which serves both tails because V'_I(-t) = V'_I(t). M is approximate and not
// unitary; states are renormalized by hand after each application.
#ifndef LZ_TAILS_HPP
#define LZ_TAILS_HPP

#include <utility>

#include "lz/model.hpp"
#include "lz/su2.hpp"

namespace lz {

enum class TailSide { Left, Right };

Matrix2c tail_integral_matrix(double t_max, const LZParams& p);

// Z(t) = diag(exp(-i v t^2 / 2 hbar), exp(+i v t^2 / 2 hbar))
Unitary2 z_operator(double t, const LZParams& p);

// normalize( Z(-t_max) M(t_max) |psi_+> ); the Z^{-1}(-inf) factor is a pure
// phase on a sigma_z eigenstate and is dropped.
State2 initial_state_perturbed(double t_max, const LZParams& p);

// Probabilities after the right tail: normalize( M(t_max) Z(t_max)^{-1} psi ).
std::pair<double, double> final_probability_perturbed(const State2& psi_at_tmax, double t_max,
                                                      const LZParams& p);

}  // namespace lz

#endif  // LZ_TAILS_HPP
