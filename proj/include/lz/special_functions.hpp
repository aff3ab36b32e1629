// Complex error function and the Fresnel-type tail integrals eta(t), xi(t)
// that enter the first-order perturbative extrapolation:
//
//   eta(t) = integral_{-inf}^{-t} exp(-i (v/hbar) s^2) ds
//          = sqrt(pi hbar / 2v) (1-i)/2 [1 - erf(sqrt(v/2hbar) (1+i) t)]
//   xi(t)  = integral_{-inf}^{-t} exp(+i (v/hbar) s^2) ds = conj(eta(t))
//
// hbar enters only through the effective rate v/hbar (the integrand is
// exp(+-i v s^2 / hbar)).
#ifndef LZ_SPECIAL_FUNCTIONS_HPP
#define LZ_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <stdexcept>

namespace lz {

using Cx = std::complex<double>;

struct ErfResult {
  Cx value;
  double est_abs_error = 0.0;
};

// Raised when an intermediate exp(-z^2) would overflow a double; the caller
// should switch to the asymptotic limit along its ray instead.
struct OverflowDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// erf(z) = 2/sqrt(pi) int_0^z exp(-u^2) du, analytically continued.
// Taylor series for small |z| or near the imaginary axis (no cancellation
// there); Laplace continued fraction for erfc elsewhere.
ErfResult erf_complex(Cx z);

Cx eta(double t, double v, double hbar = 1.0);
Cx xi(double t, double v, double hbar = 1.0);

}  // namespace lz

#endif  // LZ_SPECIAL_FUNCTIONS_HPP
