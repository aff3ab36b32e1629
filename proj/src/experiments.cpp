#include "lz/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace lz {

namespace {

double now_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Runs fn(i) for i in [0, n) on up to `workers` threads; results land by index.
void run_indexed(long n, int workers, const std::function<void(long)>& fn) {
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::max<long>(1, std::min<long>(workers, n)));
  if (workers == 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

void PipelineSpec::validate() const {
  params.validate();
  grid.validate();
  if (engine == Engine::XZXCompression && form != FactorForm::Split)
    throw std::invalid_argument("PipelineSpec: XZX compression requires the split form");
  if (engine == Engine::NearestNeighborCompression && form != FactorForm::Exact)
    throw std::invalid_argument(
        "PipelineSpec: nearest-neighbor compression requires the exact form");
  if (chunk_size < 2) throw std::invalid_argument("PipelineSpec: chunk_size must be >= 2");
}

PipelineResult run_pipeline(const PipelineSpec& spec) {
  spec.validate();
  const LZParams& p = spec.params;
  const TimeGrid& grid = spec.grid;

  PipelineResult res;
  const State2 psi0 =
      spec.use_left_tail ? initial_state_perturbed(grid.t_max, p) : psi_plus();

  State2 psi_end;
  switch (spec.engine) {
    case Engine::StepwiseProduct: {
      PropagateOptions opts;
      opts.sample_every = spec.sample_every;
      ProbabilityTrace trace = propagate(psi0, grid, spec.form, spec.mode, p, opts);
      psi_end = trace.final_state;
      res.warnings = trace.warnings;
      if (spec.want_trace) res.trace = std::move(trace);
      break;
    }
    case Engine::NearestNeighborCompression: {
      const Versor u = compress_nn_chunked(
          grid.n_steps,
          [&](long k) {
            return Versor::from_rotation(exact_factor_rotation(grid.time_at(k), grid.dt, p));
          },
          std::min<long>(spec.chunk_size, std::max<long>(grid.n_steps, 2)));
      psi_end = u.matrix() * psi0;
      break;
    }
    case Engine::XZXCompression: {
      if (!split_guard_ok(grid, p))
        res.warnings.push_back("split-form periodicity guard violated (t_max > T/4)");
      const ZXZAngles zxz = compress_xzx(SplitSequence::from_grid(grid, p));
      psi_end = zxz.matrix() * psi0;
      break;
    }
  }

  res.realized_t_max = grid.realized_t_max();
  if (spec.use_right_tail) {
    const auto pm = final_probability_perturbed(psi_end.normalized(), std::abs(grid.realized_end()), p);
    res.p_plus = pm.first;
  } else {
    res.p_plus = std::norm(psi_end(0));
  }
  return res;
}

namespace {

struct MethodCombo {
  const char* name;
  bool tails;
  FactorForm form;
};

constexpr MethodCombo kCombos[] = {
    {"perturbed-exact", true, FactorForm::Exact},
    {"perturbed-split", true, FactorForm::Split},
    {"unperturbed-exact", false, FactorForm::Exact},
    {"unperturbed-split", false, FactorForm::Split},
};

SweepResult sweep_over(const std::vector<double>& params_list, const PipelineSpec& base,
                       int workers, const std::function<TimeGrid(double)>& grid_of) {
  const long n_combo = static_cast<long>(std::size(kCombos));
  const long n = n_combo * static_cast<long>(params_list.size());
  SweepResult out;
  out.records.resize(static_cast<size_t>(n));
  std::vector<std::vector<std::string>> warn(static_cast<size_t>(n));

  run_indexed(n, workers, [&](long i) {
    const MethodCombo& combo = kCombos[i / static_cast<long>(params_list.size())];
    const double param = params_list[static_cast<size_t>(i) % params_list.size()];
    PipelineSpec spec = base;
    spec.grid = grid_of(param);
    spec.form = combo.form;
    spec.use_left_tail = spec.use_right_tail = combo.tails;
    spec.want_trace = false;
    const double p_exact = exact_transition_probability(spec.params);
    const double t0 = now_s();
    const PipelineResult r = run_pipeline(spec);
    const double t1 = now_s();
    SweepRecord& rec = out.records[static_cast<size_t>(i)];
    rec.method = combo.name;
    rec.param = param;
    rec.p_plus = r.p_plus;
    rec.delta_p = r.p_plus - p_exact;
    rec.abs_delta_p = std::abs(rec.delta_p);
    rec.wall_time_s = t1 - t0;
    for (const auto& w : r.warnings)
      warn[static_cast<size_t>(i)].push_back(std::string(combo.name) + " @ " +
                                             std::to_string(param) + ": " + w);
  });

  for (auto& ws : warn)
    for (auto& w : ws) out.warnings.push_back(std::move(w));
  // Canonical long-format order: method blocks, ascending parameter inside.
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) {
                     if (a.method != b.method) return a.method < b.method;
                     return a.param < b.param;
                   });
  return out;
}

}  // namespace

SweepResult sweep_dt(const std::vector<double>& dts, const PipelineSpec& base, int workers) {
  for (double dt : dts)
    if (!(dt > 0.0)) throw std::invalid_argument("sweep_dt: all dts must be > 0");
  return sweep_over(dts, base, workers,
                    [&](double dt) { return TimeGrid::over(base.grid.t_max, dt); });
}

SweepResult sweep_tmax(const std::vector<double>& tmaxs, double dt, const PipelineSpec& base,
                       int workers) {
  for (double tm : tmaxs)
    if (!(tm > 0.0)) throw std::invalid_argument("sweep_tmax: all t_max must be > 0");
  return sweep_over(tmaxs, base, workers, [&](double tm) { return TimeGrid::over(tm, dt); });
}

PhaseComparison phase_comparison(double t_max_far, double t_max_near, double dt,
                                 const LZParams& p, long n_samples) {
  if (!(t_max_far >= t_max_near) || !(t_max_near > 0.0))
    throw std::invalid_argument("phase_comparison: need t_max_far >= t_max_near > 0");
  if (!(dt > 0.0)) throw std::invalid_argument("phase_comparison: dt must be > 0");
  p.validate();

  const long n = std::lround((t_max_far - t_max_near) / dt);
  const long every = std::max<long>(1, n / std::max<long>(n_samples, 1));
  PhaseComparison out;

  State2 psi = psi_plus();
  auto sample = [&](double t) {
    const std::complex<double> proj_unpert = psi(1);
    const State2 pert = initial_state_perturbed(std::abs(t), p);
    const std::complex<double> proj_pert = pert(1);
    out.t.push_back(t);
    out.re_proj_unpert.push_back(proj_unpert.real());
    out.abs_proj_unpert.push_back(std::abs(proj_unpert));
    out.re_proj_pert.push_back(proj_pert.real());
    out.abs_proj_pert.push_back(std::abs(proj_pert));
  };

  sample(-t_max_far);
  for (long k = 0; k < n; ++k) {
    const double t = -t_max_far + static_cast<double>(k) * dt;
    psi = trotter_factor_exact(t, dt, p) * psi;
    if ((k + 1) % every == 0 || k + 1 == n) sample(-t_max_far + static_cast<double>(k + 1) * dt);
  }
  return out;
}

std::vector<OscillationRecord> oscillation_analysis(const ProbabilityTrace& trace,
                                                    const LZParams& p) {
  std::vector<OscillationRecord> peaks;
  const auto& ts = trace.times;
  const auto& ps = trace.p_plus;
  for (size_t i = 1; i + 1 < ts.size(); ++i) {
    if (ts[i] <= 5.0) continue;
    if (ps[i] > ps[i - 1] && ps[i] > ps[i + 1]) {
      const double h = 0.5 * (ts[i + 1] - ts[i - 1]);
      const double denom = ps[i - 1] - 2.0 * ps[i] + ps[i + 1];
      const double off = (denom != 0.0) ? 0.5 * h * (ps[i - 1] - ps[i + 1]) / denom : 0.0;
      const double tp = ts[i] + off;
      peaks.push_back({tp, p.v * tp * tp});
    }
  }
  if (peaks.size() < 3)
    throw TooFewExtremaError("oscillation_analysis: fewer than 3 maxima found for t > 5");
  return peaks;
}

}  // namespace lz
