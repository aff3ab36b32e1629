#include "lz/compression.hpp"

#include <cmath>
#include <stdexcept>

namespace lz {

namespace {

inline Matrix2c x_factor(double angle) {
  return euler_exp<double>(RotationVector(-angle, 0.0, 0.0));
}
inline Matrix2c z_factor(double angle) {
  return euler_exp<double>(RotationVector(0.0, 0.0, -angle));
}

}  // namespace

SplitSequence SplitSequence::from_grid(const TimeGrid& grid, const LZParams& p) {
  grid.validate();
  p.validate();
  SplitSequence s;
  const long n = grid.n_steps;
  s.x_angles.assign(static_cast<size_t>(n) + 1, p.delta * grid.dt / p.hbar);
  s.x_angles.back() = 0.0;  // pad
  s.z_angles.resize(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k)
    s.z_angles[static_cast<size_t>(k)] = p.v * grid.time_at(k) * grid.dt / p.hbar;
  return s;
}

SplitSequence SplitSequence::single_x(double angle) {
  SplitSequence s;
  s.x_angles = {angle};
  return s;
}

void SplitSequence::validate() const {
  if (x_angles.size() != z_angles.size() + 1)
    throw std::invalid_argument("SplitSequence: need one more X angle than Z angles");
}

Matrix2c SplitSequence::product_matrix() const {
  validate();
  Matrix2c u = x_factor(x_angles[0]);
  for (size_t k = 0; k < z_angles.size(); ++k)
    u = (x_factor(x_angles[k + 1]) * (z_factor(z_angles[k]) * u)).eval();
  return u;
}

Matrix2c ZXZAngles::matrix() const {
  return z_factor(a) * x_factor(b) * z_factor(c);
}

ZXZAngles xzx_to_zxz(double alpha, double beta, double gamma) {
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double cp = std::cos(alpha + gamma), sp = std::sin(alpha + gamma);
  const double cm = std::cos(alpha - gamma), sm = std::sin(alpha - gamma);
  // Matrix elements of the XZX product:
  //   (1,1) = cos(b) e^{-i phi},  cos(b) cos(phi) = cb*cp, cos(b) sin(phi) = sb*cm
  //   (1,2) = -i sin(b) e^{-i psi}, sin(b) cos(psi) = cb*sp, sin(b) sin(psi) = -sb*sm
  const double diag_re = cb * cp, diag_im = sb * cm;
  const double off_re = cb * sp, off_im = -sb * sm;
  const double cos_b = std::hypot(diag_re, diag_im);
  const double sin_b = std::hypot(off_re, off_im);
  // 0/0 points of the paper's ratio form are removable: a vanishing element
  // leaves the corresponding phase free, so pin it to zero.
  const double phi = (cos_b < 1e-300) ? 0.0 : std::atan2(diag_im, diag_re);
  const double psi = (sin_b < 1e-300) ? 0.0 : std::atan2(off_im, off_re);
  return {0.5 * (phi + psi), std::atan2(sin_b, cos_b), 0.5 * (phi - psi)};
}

ZXZAngles compress_xzx(const SplitSequence& seq) {
  seq.validate();
  ZXZAngles acc{0.0, seq.x_angles[0], 0.0};
  for (size_t k = 0; k < seq.z_angles.size(); ++k) {
    const ZXZAngles w = xzx_to_zxz(seq.x_angles[k + 1], seq.z_angles[k] + acc.a, acc.b);
    acc = {w.a, w.b, w.c + acc.c};
  }
  return acc;
}

VersorSequence versor_sequence_from_grid(const TimeGrid& grid, const LZParams& p) {
  grid.validate();
  p.validate();
  VersorSequence seq(static_cast<size_t>(grid.n_steps));
  for (long k = 0; k < grid.n_steps; ++k)
    seq[static_cast<size_t>(k)] =
        Versor::from_rotation(exact_factor_rotation(grid.time_at(k), grid.dt, p));
  return seq;
}

namespace {

// In-place pairwise rounds over buf[0..m); later element composes on the left.
Versor reduce_pairwise(std::vector<Versor>& buf, size_t m) {
  if (m == 0) throw std::invalid_argument("compress_nn: empty sequence");
  while (m > 1) {
    const size_t half = m / 2;
    for (size_t i = 0; i < half; ++i) buf[i] = compose(buf[2 * i + 1], buf[2 * i]);
    if (m % 2 == 1) {
      buf[half] = buf[m - 1];
      m = half + 1;
    } else {
      m = half;
    }
  }
  return buf[0];
}

}  // namespace

Versor compress_nn(VersorSequence seq) {
  return reduce_pairwise(seq, seq.size());
}

Versor compress_nn_chunked(long n, const std::function<Versor(long)>& factor_at, long chunk_size,
                           ChunkedTelemetry* telemetry) {
  if (n < 1) throw std::invalid_argument("compress_nn_chunked: need n >= 1");
  if (chunk_size < 2) throw std::invalid_argument("compress_nn_chunked: chunk_size must be >= 2");
  std::vector<Versor> buf(static_cast<size_t>(std::min<long>(chunk_size, n)));
  Versor acc;
  bool have_acc = false;
  long peak = 0, chunks = 0;
  for (long lo = 0; lo < n; lo += chunk_size) {
    const long m = std::min<long>(chunk_size, n - lo);
    for (long i = 0; i < m; ++i) buf[static_cast<size_t>(i)] = factor_at(lo + i);
    peak = std::max(peak, m + (have_acc ? 1 : 0));
    const Versor chunk = reduce_pairwise(buf, static_cast<size_t>(m));
    acc = have_acc ? compose(chunk, acc) : chunk;  // chunk is later in time
    have_acc = true;
    ++chunks;
  }
  if (telemetry) {
    telemetry->peak_resident_versors = peak;
    telemetry->chunks = chunks;
  }
  return acc;
}

}  // namespace lz
