#include "lz/special_functions.hpp"

#include <cmath>
#include <limits>

namespace lz {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kEps = 2.22e-16;

// Power series erf(z) = 2/sqrt(pi) sum_n (-1)^n z^(2n+1) / (n! (2n+1)).
// Absolute rounding loss scales with the largest partial sum, which the
// estimate tracks.
ErfResult erf_series(Cx z) {
  const Cx zz = z * z;
  Cx term = z;
  Cx sum = z;
  double max_mag = std::abs(z);
  double last = 0.0;
  for (int n = 1; n <= 2000; ++n) {
    term *= -zz / static_cast<double>(n);
    const Cx contrib = term / static_cast<double>(2 * n + 1);
    sum += contrib;
    max_mag = std::max(max_mag, std::abs(sum));
    last = std::abs(contrib);
    if (last < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  const double scale = 2.0 / kSqrtPi;
  ErfResult r;
  r.value = scale * sum;
  r.est_abs_error = scale * (std::sqrt(40.0) * kEps * max_mag + last);
  return r;
}

// Laplace continued fraction for sqrt(pi) e^{z^2} erfc(z), Re z > 0,
// evaluated with the modified Lentz algorithm.
ErfResult erf_continued_fraction(Cx z) {
  constexpr double tiny = 1e-290;
  Cx f(tiny, 0.0);
  Cx c = f;
  Cx d(0.0, 0.0);
  double delta_gap = 1.0;
  int it = 0;
  for (int k = 1; k <= 5000; ++k) {
    const double a = (k == 1) ? 1.0 : 0.5 * (k - 1);
    d = z + a * d;
    if (d == Cx(0.0)) d = Cx(tiny, 0.0);
    c = z + a / c;
    if (c == Cx(0.0)) c = Cx(tiny, 0.0);
    d = Cx(1.0) / d;
    const Cx delta = c * d;
    f *= delta;
    it = k;
    delta_gap = std::abs(delta - Cx(1.0));
    if (delta_gap < 1e-17) break;
  }
  // exp(-z^2) stays bounded whenever this branch is selected (Re z > 1).
  const Cx erfc = std::exp(-z * z) * f / kSqrtPi;
  ErfResult r;
  r.value = Cx(1.0) - erfc;
  r.est_abs_error = std::abs(erfc) * (std::sqrt(static_cast<double>(it)) * kEps + delta_gap) + kEps;
  return r;
}

}  // namespace

ErfResult erf_complex(Cx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("erf_complex: non-finite argument");

  // Reduce to the first quadrant: erf(-z) = -erf(z), erf(conj z) = conj erf(z).
  bool negate = false, conjugate = false;
  if (z.real() < 0.0) { z = -z; negate = true; }
  if (z.imag() < 0.0) { z = std::conj(z); conjugate = true; }

  const double x = z.real(), y = z.imag();
  // |erf| ~ exp(y^2 - x^2) near the imaginary axis; refuse what a double
  // cannot hold.
  if (y * y - x * x > 700.0)
    throw OverflowDomainError("erf_complex: exp(-z^2) overflows; use the asymptotic limit");

  // The series cancellation loss is exp(2 x^2); it is benign for small |z|
  // and anywhere close to the imaginary axis. The continued fraction covers
  // the rest of the right half plane and the full |z| range of the eta/xi
  // rays (arg = +-pi/4).
  ErfResult r = (std::abs(z) <= 3.0 || x <= 1.0) ? erf_series(z) : erf_continued_fraction(z);

  if (conjugate) r.value = std::conj(r.value);
  if (negate) r.value = -r.value;
  return r;
}

Cx eta(double t, double v, double hbar) {
  if (!(v > 0.0)) throw std::invalid_argument("eta: v must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("eta: hbar must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("eta: t must be >= 0");
  const double veff = v / hbar;
  const Cx arg = std::sqrt(veff / 2.0) * Cx(1.0, 1.0) * t;
  const ErfResult e = erf_complex(arg);
  return std::sqrt(M_PI / (2.0 * veff)) * Cx(0.5, -0.5) * (Cx(1.0) - e.value);
}

Cx xi(double t, double v, double hbar) {
  if (!(v > 0.0)) throw std::invalid_argument("xi: v must be > 0");
  if (!(hbar > 0.0)) throw std::invalid_argument("xi: hbar must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("xi: t must be >= 0");
  const double veff = v / hbar;
  const Cx arg = std::sqrt(veff / 2.0) * Cx(-1.0, 1.0) * t;
  const ErfResult e = erf_complex(arg);
  return std::sqrt(M_PI / (2.0 * veff)) * Cx(0.5, 0.5) * (Cx(1.0) + e.value);
}

}  // namespace lz
