#include "lz/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lz {

std::string to_string(FactorForm f) { return f == FactorForm::Exact ? "exact" : "split"; }
std::string to_string(PropagationMode m) {
  return m == PropagationMode::State ? "state" : "operator";
}
std::string to_string(Engine e) {
  switch (e) {
    case Engine::StepwiseProduct: return "stepwise";
    case Engine::NearestNeighborCompression: return "nn";
    case Engine::XZXCompression: return "xzx";
  }
  return "stepwise";
}

FactorForm parse_factor_form(const std::string& s) {
  if (s == "exact") return FactorForm::Exact;
  if (s == "split") return FactorForm::Split;
  throw std::invalid_argument("form: expected 'exact' or 'split', got '" + s + "'");
}

PropagationMode parse_mode(const std::string& s) {
  if (s == "state") return PropagationMode::State;
  if (s == "operator") return PropagationMode::Operator;
  throw std::invalid_argument("mode: expected 'state' or 'operator', got '" + s + "'");
}

Engine parse_engine(const std::string& s) {
  if (s == "stepwise") return Engine::StepwiseProduct;
  if (s == "nn") return Engine::NearestNeighborCompression;
  if (s == "xzx") return Engine::XZXCompression;
  throw std::invalid_argument("engine: expected 'stepwise', 'nn' or 'xzx', got '" + s + "'");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string trace_csv(const ProbabilityTrace& trace) {
  std::string out = "t,p_plus,p_minus\n";
  for (size_t i = 0; i < trace.times.size(); ++i) {
    out += format_double(trace.times[i]);
    out += ',';
    out += format_double(trace.p_plus[i]);
    out += ',';
    out += format_double(trace.p_minus[i]);
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = "method,param,p_plus,delta_p,abs_delta_p,wall_time_s\n";
  for (const auto& r : sweep.records) {
    out += r.method;
    out += ',';
    out += format_double(r.param);
    out += ',';
    out += format_double(r.p_plus);
    out += ',';
    out += format_double(r.delta_p);
    out += ',';
    out += format_double(r.abs_delta_p);
    out += ',';
    out += format_double(r.wall_time_s);
    out += '\n';
  }
  return out;
}

std::string phase_csv(const PhaseComparison& pc) {
  std::string out = "t,re_proj_pert,re_proj_unpert,abs_proj_pert,abs_proj_unpert\n";
  for (size_t i = 0; i < pc.t.size(); ++i) {
    out += format_double(pc.t[i]);
    out += ',';
    out += format_double(pc.re_proj_pert[i]);
    out += ',';
    out += format_double(pc.re_proj_unpert[i]);
    out += ',';
    out += format_double(pc.abs_proj_pert[i]);
    out += ',';
    out += format_double(pc.abs_proj_unpert[i]);
    out += '\n';
  }
  return out;
}

std::string oscillation_csv(const std::vector<OscillationRecord>& recs) {
  std::string out = "t_peak,v_t2,delta_v_t2\n";
  for (size_t i = 0; i < recs.size(); ++i) {
    out += format_double(recs[i].t_peak);
    out += ',';
    out += format_double(recs[i].v_t2);
    out += ',';
    out += (i == 0 ? "" : format_double(recs[i].v_t2 - recs[i - 1].v_t2));
    out += '\n';
  }
  return out;
}

nlohmann::json pipeline_sidecar(const PipelineSpec& spec, const PipelineResult& result) {
  nlohmann::json j;
  j["library_version"] = kLibraryVersion;
  j["params"] = {{"v", spec.params.v}, {"delta", spec.params.delta}, {"hbar", spec.params.hbar}};
  j["grid"] = {{"t_max", spec.grid.t_max},
               {"dt", spec.grid.dt},
               {"n_steps", spec.grid.n_steps},
               {"realized_t_max", spec.grid.realized_t_max()}};
  j["form"] = to_string(spec.form);
  j["mode"] = to_string(spec.mode);
  j["engine"] = to_string(spec.engine);
  j["use_left_tail"] = spec.use_left_tail;
  j["use_right_tail"] = spec.use_right_tail;
  j["sample_every"] = spec.sample_every;
  j["chunk_size"] = spec.chunk_size;
  j["p_plus"] = result.p_plus;
  j["warnings"] = result.warnings;
  return j;
}

nlohmann::json bench_json(const std::vector<CompressionBenchResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    j.push_back({{"n_factors", r.n_factors},
                 {"method", r.method},
                 {"wall_time_s", r.wall_time_s},
                 {"peak_versor_count", r.peak_versor_count},
                 {"max_abs_deviation", r.max_abs_deviation}});
  }
  return j;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("atomic_write: cannot open " + tmp.string());
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("atomic_write: write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("atomic_write: rename to " + target.string() + " failed: " +
                             ec.message());
  }
}

}  // namespace lz
