// SU(2) rotation calculus on exact 2x2 complex matrices: Pauli matrices,
// the generalized Euler identity exp(i g.sigma) = cos|g| I + i sin|g| (g.sigma)/|g|,
// and versor (4-component) composition of Pauli exponentials.
#ifndef LZ_SU2_HPP
#define LZ_SU2_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace lz {

template <class Scalar>
using Matrix2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <class Scalar>
using State2T = Eigen::Matrix<std::complex<Scalar>, 2, 1>;
template <class Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using Matrix2c = Matrix2<double>;
// Unitary by contract; check with unitarity_defect() when in doubt.
using Unitary2 = Matrix2c;
using State2 = State2T<double>;
using RotationVector = Eigen::Vector3d;

enum class Axis { X = 0, Y = 1, Z = 2 };

template <class Scalar = double>
Matrix2<Scalar> identity2() {
  return Matrix2<Scalar>::Identity();
}

template <class Scalar = double>
Matrix2<Scalar> pauli(Axis i) {
  using C = std::complex<Scalar>;
  Matrix2<Scalar> m;
  switch (i) {
    case Axis::X: m << C(0), C(1), C(1), C(0); break;
    case Axis::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Axis::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

// g.sigma as a concrete matrix.
template <class Scalar>
Matrix2<Scalar> pauli_dot(const Vector3<Scalar>& g) {
  using C = std::complex<Scalar>;
  Matrix2<Scalar> m;
  m << C(g.z()), C(g.x(), -g.y()), C(g.x(), g.y()), C(-g.z());
  return m;
}

namespace detail {

// sin(x)/x and cos(x), series-evaluated below the small-angle threshold so the
// |g| -> 0 limit of the Euler identity stays finite.
inline constexpr double kSmallAngle = 1e-6;

template <class Scalar>
Scalar sinc(Scalar x) {
  if (std::abs(x) < Scalar(kSmallAngle)) {
    const Scalar x2 = x * x;
    return Scalar(1) - x2 / Scalar(6) * (Scalar(1) - x2 / Scalar(20) * (Scalar(1) - x2 / Scalar(42)));
  }
  return std::sin(x) / x;
}

template <class Scalar>
Scalar cos_small_safe(Scalar x) {
  if (std::abs(x) < Scalar(kSmallAngle)) {
    const Scalar x2 = x * x;
    return Scalar(1) - x2 / Scalar(2) * (Scalar(1) - x2 / Scalar(12) * (Scalar(1) - x2 / Scalar(30)));
  }
  return std::cos(x);
}

}  // namespace detail

// exp(i g.sigma) = cos|g| I + i sin|g| g_hat.sigma; exactly unitary up to roundoff.
template <class Scalar>
Matrix2<Scalar> euler_exp(const Vector3<Scalar>& g) {
  using C = std::complex<Scalar>;
  const Scalar r = g.norm();
  const Scalar c = detail::cos_small_safe(r);
  const Scalar s = detail::sinc(r);  // sin|g| / |g|
  Matrix2<Scalar> m;
  m << C(c, s * g.z()), C(s * g.y(), s * g.x()),
       C(-s * g.y(), s * g.x()), C(c, -s * g.z());
  return m;
}

// Unit 4-vector (cos|g|, sin|g| g_hat) of an SU(2) element exp(i g.sigma).
// Closed under composition without any inverse trigonometry.
template <class Scalar>
struct VersorT {
  Scalar c = Scalar(1);
  Vector3<Scalar> s = Vector3<Scalar>::Zero();

  static VersorT identity() { return {}; }

  static VersorT from_rotation(const Vector3<Scalar>& g) {
    const Scalar r = g.norm();
    return {detail::cos_small_safe(r), detail::sinc(r) * g};
  }

  Matrix2<Scalar> matrix() const {
    using C = std::complex<Scalar>;
    Matrix2<Scalar> m;
    m << C(c, s.z()), C(s.y(), s.x()), C(-s.y(), s.x()), C(c, -s.z());
    return m;
  }

  Scalar norm_defect() const { return std::abs(c * c + s.squaredNorm() - Scalar(1)); }
};

using Versor = VersorT<double>;

// Versor of exp(i a.sigma) exp(i b.sigma); the first argument is the LEFT factor.
// The cross-product term carries the non-commutativity. Renormalized after every
// composition so drift stays bounded over millions of merges.
template <class Scalar>
VersorT<Scalar> compose(const VersorT<Scalar>& a, const VersorT<Scalar>& b) {
  VersorT<Scalar> r;
  r.c = a.c * b.c - a.s.dot(b.s);
  r.s = a.c * b.s + b.c * a.s - a.s.cross(b.s);
  const Scalar inv = Scalar(1) / std::sqrt(r.c * r.c + r.s.squaredNorm());
  r.c *= inv;
  r.s *= inv;
  return r;
}

template <class Scalar>
Matrix2<Scalar> matmul(const Matrix2<Scalar>& a, const Matrix2<Scalar>& b) {
  return a * b;
}

template <class Scalar>
Matrix2<Scalar> adjoint(const Matrix2<Scalar>& a) {
  return a.adjoint();
}

template <class Scalar>
State2T<Scalar> apply(const Matrix2<Scalar>& u, const State2T<Scalar>& psi) {
  return u * psi;
}

// max elementwise |U^dag U - I|
template <class Scalar>
Scalar unitarity_defect(const Matrix2<Scalar>& u) {
  return (u.adjoint() * u - Matrix2<Scalar>::Identity()).cwiseAbs().maxCoeff();
}

}  // namespace lz

#endif  // LZ_SU2_HPP
