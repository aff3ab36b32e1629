// Reproduction studies: single pipelines (tails x factor form x engine),
// accuracy sweeps over dt and t_max against the closed-form probability,
// the perturbed-vs-propagated phase comparison, and oscillation-period
// analysis of the unperturbed trace.
#ifndef LZ_EXPERIMENTS_HPP
#define LZ_EXPERIMENTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lz/compression.hpp"
#include "lz/model.hpp"
#include "lz/propagation.hpp"
#include "lz/tails.hpp"

namespace lz {

enum class Engine { StepwiseProduct, NearestNeighborCompression, XZXCompression };

struct PipelineSpec {
  LZParams params;
  TimeGrid grid = TimeGrid::over(30.0, 1e-4);
  FactorForm form = FactorForm::Exact;
  PropagationMode mode = PropagationMode::State;
  bool use_left_tail = true;
  bool use_right_tail = true;
  Engine engine = Engine::StepwiseProduct;
  long sample_every = 0;       // 0 -> auto
  long chunk_size = 1 << 16;   // nearest-neighbor engine memory cap
  bool want_trace = true;

  // XZX requires the split form, nearest-neighbor the exact form.
  void validate() const;
};

struct PipelineResult {
  double p_plus = 0.0;
  ProbabilityTrace trace;  // empty for compression engines or want_trace = false
  double realized_t_max = 0.0;
  std::vector<std::string> warnings;
};

PipelineResult run_pipeline(const PipelineSpec& spec);

struct SweepRecord {
  std::string method;  // perturbed-exact | perturbed-split | unperturbed-exact | unperturbed-split
  double param = 0.0;
  double p_plus = 0.0;
  double delta_p = 0.0;  // perturbed: P+(inf) - P_exact; unperturbed: P+(t_max) - P_exact
  double abs_delta_p = 0.0;
  double wall_time_s = 0.0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // sorted by method, then swept parameter
  std::vector<std::string> warnings;
};

// The four method combinations at fixed t_max (from base.grid), one record per dt.
SweepResult sweep_dt(const std::vector<double>& dts, const PipelineSpec& base, int workers = 0);

// The four method combinations at fixed dt, one record per t_max.
SweepResult sweep_tmax(const std::vector<double>& tmaxs, double dt, const PipelineSpec& base,
                       int workers = 0);

struct PhaseComparison {
  std::vector<double> t;  // negative times, ascending
  std::vector<double> re_proj_pert, re_proj_unpert;
  std::vector<double> abs_proj_pert, abs_proj_unpert;
};

// <psi_-|psi(t)> along the incoming branch: the state propagated from
// |psi_+> at -t_max_far versus the perturbed initial state generated at each
// -t. The moduli agree; the phases do not.
PhaseComparison phase_comparison(double t_max_far, double t_max_near, double dt,
                                 const LZParams& p, long n_samples = 2000);

struct TooFewExtremaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OscillationRecord {
  double t_peak;  // parabola-refined maximum location
  double v_t2;    // v * t_peak^2
};

// Local maxima of p_plus for t > 5; throws TooFewExtremaError below 3 maxima.
std::vector<OscillationRecord> oscillation_analysis(const ProbabilityTrace& trace,
                                                    const LZParams& p);

}  // namespace lz

#endif  // LZ_EXPERIMENTS_HPP
