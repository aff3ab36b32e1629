// Command-line front end: traces, accuracy sweeps, phase comparison,
// oscillation analysis and compression benchmarks, with CSV/JSON output.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lz/io.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  double v = M_PI;
  double delta = 1.0;
  double hbar = 1.0;
  double t_max = 30.0;
  double dt = 1e-4;
  std::string form = "exact";
  std::string mode = "state";
  std::string tails = "both";  // both | none | left | right
  std::string engine = "stepwise";
  long sample_every = 0;
  long chunk_size = 1 << 16;
  int workers = 0;
  long seed = 20240817;  // recorded in the sidecar for reproducibility
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_output = true) {
  cmd->add_option("--v", o.v, "Sweep rate v (energy/time)")
      ->envname("LZ_V")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--delta", o.delta, "Coupling delta (energy)")
      ->envname("LZ_DELTA")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd->add_option("--hbar", o.hbar, "Reduced Planck constant (action units)")
      ->envname("LZ_HBAR")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--t-max", o.t_max, "Window half-width T_max (time)")
      ->envname("LZ_T_MAX")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--dt", o.dt, "Trotter step (time)")
      ->envname("LZ_DT")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--form", o.form, "Factor form: exact | split")
      ->envname("LZ_FORM")->check(CLI::IsMember({"exact", "split"}))->capture_default_str();
  cmd->add_option("--mode", o.mode, "Propagation mode: state | operator")
      ->envname("LZ_MODE")->check(CLI::IsMember({"state", "operator"}))->capture_default_str();
  cmd->add_option("--tails", o.tails, "Perturbative tails: both | none | left | right")
      ->envname("LZ_TAILS")->check(CLI::IsMember({"both", "none", "left", "right"}))
      ->capture_default_str();
  cmd->add_option("--engine", o.engine, "Engine: stepwise | nn | xzx")
      ->envname("LZ_ENGINE")->check(CLI::IsMember({"stepwise", "nn", "xzx"}))
      ->capture_default_str();
  cmd->add_option("--sample-every", o.sample_every, "Trace sampling stride (0 = auto)")
      ->envname("LZ_SAMPLE_EVERY")->capture_default_str();
  cmd->add_option("--chunk-size", o.chunk_size, "Versor chunk size for the nn engine")
      ->envname("LZ_CHUNK_SIZE")->check(CLI::Range(2L, (1L << 30)))->capture_default_str();
  cmd->add_option("--workers", o.workers, "Sweep worker threads (0 = hardware)")
      ->envname("LZ_WORKERS")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed recorded for randomized test reproduction")
      ->envname("LZ_SEED")->capture_default_str();
  auto* out = cmd->add_option("-o,--output", o.output, "Output file path")->envname("LZ_OUTPUT");
  if (needs_output) out->required();
  cmd->set_config("--config", "", "Flat key = value config file; flags win over file values");
}

lz::PipelineSpec make_spec(const CommonOpts& o) {
  lz::PipelineSpec s;
  s.params = {o.v, o.delta, o.hbar};
  s.grid = lz::TimeGrid::over(o.t_max, o.dt);
  s.form = lz::parse_factor_form(o.form);
  s.mode = lz::parse_mode(o.mode);
  s.engine = lz::parse_engine(o.engine);
  s.use_left_tail = (o.tails == "both" || o.tails == "left");
  s.use_right_tail = (o.tails == "both" || o.tails == "right");
  s.sample_every = o.sample_every;
  s.chunk_size = o.chunk_size;
  return s;
}

json config_echo(const CommonOpts& o) {
  return json{{"v", o.v},           {"delta", o.delta},
              {"hbar", o.hbar},     {"t_max", o.t_max},
              {"dt", o.dt},         {"form", o.form},
              {"mode", o.mode},     {"tails", o.tails},
              {"engine", o.engine}, {"sample_every", o.sample_every},
              {"chunk_size", o.chunk_size}, {"workers", o.workers},
              {"seed", o.seed},     {"output", o.output}};
}

std::string sidecar_path(const std::string& out) {
  const auto dot = out.find_last_of('.');
  const std::string stem = (dot == std::string::npos) ? out : out.substr(0, dot);
  return stem + ".json";
}

void write_with_sidecar(const std::string& path, const std::string& csv, json sidecar,
                        const CommonOpts& o) {
  sidecar["effective_config"] = config_echo(o);
  sidecar["library_version"] = lz::kLibraryVersion;
  lz::atomic_write(path, csv);
  lz::atomic_write(sidecar_path(path), sidecar.dump(2) + "\n");
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> vals;
  std::string body = text;
  bool logspace = false;
  if (body.rfind("logspace(", 0) == 0 && body.back() == ')') {
    logspace = true;
    body = body.substr(9, body.size() - 10);
  }
  size_t pos = 0;
  while (pos <= body.size()) {
    const size_t comma = body.find(',', pos);
    const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
    try {
      if (!tok.empty()) vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": cannot parse '" + tok + "' as a number");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (logspace) {
    if (vals.size() != 3)
      throw std::invalid_argument(flag + ": logspace needs (first,last,count)");
    const double a = vals[0], b = vals[1];
    const long n = std::lround(vals[2]);
    if (n < 2 || !(a > 0.0) || !(b > 0.0))
      throw std::invalid_argument(flag + ": logspace needs positive endpoints and count >= 2");
    vals.clear();
    const double la = std::log10(a), lb = std::log10(b);
    for (long i = 0; i < n; ++i)
      vals.push_back(std::pow(10.0, la + (lb - la) * static_cast<double>(i) /
                                             static_cast<double>(n - 1)));
  }
  if (vals.empty()) throw std::invalid_argument(flag + ": empty list");
  return vals;
}

double wall_s() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

int cmd_trace(const CommonOpts& o) {
  lz::PipelineSpec spec = make_spec(o);
  if (spec.engine != lz::Engine::StepwiseProduct)
    throw std::invalid_argument("engine: trace requires the stepwise engine");
  spec.want_trace = true;
  const lz::PipelineResult r = lz::run_pipeline(spec);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  json sidecar = lz::pipeline_sidecar(spec, r);
  write_with_sidecar(o.output, lz::trace_csv(r.trace), sidecar, o);
  return 0;
}

int cmd_sweep_dt(const CommonOpts& o, const std::string& dts_text) {
  const std::vector<double> dts = parse_list(dts_text, "--dts");
  lz::PipelineSpec base = make_spec(o);
  base.want_trace = false;
  const lz::SweepResult sweep = lz::sweep_dt(dts, base, o.workers);
  for (const auto& w : sweep.warnings) std::cerr << "warning: " << w << "\n";
  json sidecar{{"sweep", "dt"}, {"points", dts}, {"warnings", sweep.warnings}};
  write_with_sidecar(o.output, lz::sweep_csv(sweep), sidecar, o);
  return 0;
}

int cmd_sweep_tmax(const CommonOpts& o, const std::string& tmaxs_text) {
  const std::vector<double> tmaxs = parse_list(tmaxs_text, "--t-maxs");
  lz::PipelineSpec base = make_spec(o);
  base.want_trace = false;
  const lz::SweepResult sweep = lz::sweep_tmax(tmaxs, o.dt, base, o.workers);
  for (const auto& w : sweep.warnings) std::cerr << "warning: " << w << "\n";
  json sidecar{{"sweep", "t_max"}, {"points", tmaxs}, {"warnings", sweep.warnings}};
  write_with_sidecar(o.output, lz::sweep_csv(sweep), sidecar, o);
  return 0;
}

int cmd_phase_compare(const CommonOpts& o, double t_max_far, double t_max_near, long n_samples) {
  const lz::LZParams p{o.v, o.delta, o.hbar};
  const lz::PhaseComparison pc =
      lz::phase_comparison(t_max_far, t_max_near, o.dt, p, n_samples);
  json sidecar{{"t_max_far", t_max_far}, {"t_max_near", t_max_near}, {"n_samples", n_samples}};
  write_with_sidecar(o.output, lz::phase_csv(pc), sidecar, o);
  return 0;
}

int cmd_oscillations(const CommonOpts& o) {
  lz::PipelineSpec spec = make_spec(o);
  spec.use_left_tail = spec.use_right_tail = false;  // analysis needs the raw oscillations
  spec.engine = lz::Engine::StepwiseProduct;
  spec.want_trace = true;
  if (spec.sample_every == 0)
    spec.sample_every = std::max<long>(1, spec.grid.n_steps / 50000);
  const lz::PipelineResult r = lz::run_pipeline(spec);
  const auto peaks = lz::oscillation_analysis(r.trace, spec.params);
  json sidecar = lz::pipeline_sidecar(spec, r);
  sidecar["n_peaks"] = peaks.size();
  write_with_sidecar(o.output, lz::oscillation_csv(peaks), sidecar, o);
  return 0;
}

int cmd_compress_bench(const CommonOpts& o, long n_factors) {
  const lz::LZParams p{o.v, o.delta, o.hbar};
  lz::TimeGrid grid = lz::TimeGrid::over(o.t_max, 2.0 * o.t_max / static_cast<double>(n_factors));
  std::vector<lz::CompressionBenchResult> rows;

  {  // nearest-neighbor (exact factors), padded with identity versors to 2^k
    long n_pad = 1;
    while (n_pad < grid.n_steps) n_pad <<= 1;
    lz::Matrix2c oracle = lz::Matrix2c::Identity();
    for (long k = 0; k < grid.n_steps; ++k)
      oracle = (lz::trotter_factor_exact(grid.time_at(k), grid.dt, p) * oracle).eval();
    lz::ChunkedTelemetry tel;
    const double t0 = wall_s();
    const lz::Versor u = lz::compress_nn_chunked(
        n_pad,
        [&](long k) {
          return k < grid.n_steps
                     ? lz::Versor::from_rotation(
                           lz::exact_factor_rotation(grid.time_at(k), grid.dt, p))
                     : lz::Versor::identity();
        },
        std::min<long>(o.chunk_size, std::max<long>(n_pad, 2)), &tel);
    const double t1 = wall_s();
    rows.push_back({grid.n_steps, "nn", t1 - t0, tel.peak_resident_versors,
                    (u.matrix() - oracle).cwiseAbs().maxCoeff()});
  }
  {  // XZX (split factors)
    const lz::SplitSequence seq = lz::SplitSequence::from_grid(grid, p);
    const lz::Matrix2c oracle = seq.product_matrix();
    const double t0 = wall_s();
    const lz::ZXZAngles zxz = lz::compress_xzx(seq);
    const double t1 = wall_s();
    const lz::Matrix2c rec = zxz.matrix();
    const double dev = std::min((rec - oracle).cwiseAbs().maxCoeff(),
                                (rec + oracle).cwiseAbs().maxCoeff());
    rows.push_back({grid.n_steps, "xzx", t1 - t0, 0, dev});
  }

  json j;
  j["results"] = lz::bench_json(rows);
  j["effective_config"] = config_echo(o);
  j["n_factors"] = n_factors;
  j["library_version"] = lz::kLibraryVersion;
  lz::atomic_write(o.output, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-Zener transition probability via Trotterized propagation,\n"
               "perturbative infinite-time tails and SU(2) factor compression.\n"
               "Units: hbar defaults to 1; times in 1/energy, v in energy/time.\n"
               "Environment overrides use the LZ_ prefix (e.g. LZ_DT)."};
  app.require_subcommand(1);

  CommonOpts o;
  std::string dts_text, tmaxs_text;
  double t_max_far = 1000.0, t_max_near = 30.0;
  long n_samples = 2000, n_factors = 1 << 16;

  auto* trace = app.add_subcommand("trace", "Time evolution trace of P+(t) (CSV + JSON sidecar)");
  add_common(trace, o);

  auto* sdt = app.add_subcommand(
      "sweep-dt", "Accuracy vs time step for the four method combinations (long-format CSV)");
  add_common(sdt, o);
  sdt->add_option("--dts", dts_text,
                  "Comma list (1e-2,1e-3,...) or logspace(first,last,count)")->required();

  auto* stm = app.add_subcommand(
      "sweep-tmax", "Accuracy vs window half-width at fixed dt (long-format CSV)");
  add_common(stm, o);
  stm->add_option("--t-maxs", tmaxs_text,
                  "Comma list (10,30,100) or logspace(first,last,count)")->required();

  auto* pc = app.add_subcommand(
      "phase-compare", "Perturbed vs propagated <psi_-|psi(t)> along the incoming branch");
  add_common(pc, o);
  pc->add_option("--t-max-far", t_max_far, "Propagation start |t| (time)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  pc->add_option("--t-max-near", t_max_near, "Comparison end |t| (time)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  pc->add_option("--n-samples", n_samples, "Approximate sample count")->capture_default_str();

  auto* osc = app.add_subcommand(
      "oscillations", "Locate P+(t) maxima for t > 5 and tabulate v*t^2 spacings");
  add_common(osc, o);

  auto* cb = app.add_subcommand(
      "compress-bench", "Benchmark nn and xzx compression against the matrix product (JSON)");
  add_common(cb, o);
  cb->add_option("--n-factors", n_factors, "Trotter factor count")
      ->check(CLI::Range(1L, (1L << 26)))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // validation failure; the message names the offending option
  }

  try {
    if (app.got_subcommand(trace)) return cmd_trace(o);
    if (app.got_subcommand(sdt)) return cmd_sweep_dt(o, dts_text);
    if (app.got_subcommand(stm)) return cmd_sweep_tmax(o, tmaxs_text);
    if (app.got_subcommand(pc)) return cmd_phase_compare(o, t_max_far, t_max_near, n_samples);
    if (app.got_subcommand(osc)) return cmd_oscillations(o);
    if (app.got_subcommand(cb)) return cmd_compress_bench(o, n_factors);
  } catch (const lz::TooFewExtremaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
