// Compression of the Trotter factor sequence into one (nearest-neighbor,
// exact-form versors) or three (XZX -> ZXZ rebracketing, split form)
// exponential factors exactly equal to the time-ordered product.
#ifndef LZ_COMPRESSION_HPP
#define LZ_COMPRESSION_HPP

#include <functional>
#include <string>
#include <vector>

#include "lz/propagation.hpp"
#include "lz/su2.hpp"

namespace lz {

// Alternating split-form factor angles, stored earliest-first; the operator
// product reads latest-leftmost:
//   X(x[n]) Z(z[n-1]) X(x[n-1]) ... Z(z[0]) X(x[0])
// x_angles[k] is the exp(-i theta sigma_x) angle preceding z_angles[k]; the
// final x_angles entry is the zero-angle pad that keeps every window X Z X.
struct SplitSequence {
  std::vector<double> x_angles;
  std::vector<double> z_angles;

  static SplitSequence from_grid(const TimeGrid& grid, const LZParams& p);
  static SplitSequence single_x(double angle);

  size_t factor_count() const { return x_angles.size() + z_angles.size(); }
  void validate() const;

  // Direct matrix product, latest factor leftmost (oracle path).
  Matrix2c product_matrix() const;
};

struct ZXZAngles {
  double a, b, c;
  Matrix2c matrix() const;
};

// Angles (a, b, c) with exp(-i a sz) exp(-i b sx) exp(-i c sz) equal to
// exp(-i alpha sx) exp(-i beta sz) exp(-i gamma sx); b in [0, pi/2]. The two
// phases are recovered with quadrant-resolved arctangents of the analytic
// matrix elements, so the identity holds exactly, not only up to sign.
ZXZAngles xzx_to_zxz(double alpha, double beta, double gamma);

ZXZAngles compress_xzx(const SplitSequence& seq);

using VersorSequence = std::vector<Versor>;  // earliest-first

// One versor per exact Trotter factor over the grid.
VersorSequence versor_sequence_from_grid(const TimeGrid& grid, const LZParams& p);

// Pairwise tree reduction, ceil(log2 n) rounds, later factor composing on the
// left. Deterministic pairing over the index range.
Versor compress_nn(VersorSequence seq);

struct ChunkedTelemetry {
  long peak_resident_versors = 0;
  long chunks = 0;
};

// Same reduction applied chunk by chunk to a lazily generated sequence;
// holds at most chunk_size versors plus the running accumulator.
Versor compress_nn_chunked(long n, const std::function<Versor(long)>& factor_at, long chunk_size,
                           ChunkedTelemetry* telemetry = nullptr);

struct CompressionBenchResult {
  long n_factors = 0;
  std::string method;
  double wall_time_s = 0.0;
  long peak_versor_count = 0;
  double max_abs_deviation = 0.0;  // vs direct matrix-product oracle
};

}  // namespace lz

#endif  // LZ_COMPRESSION_HPP
