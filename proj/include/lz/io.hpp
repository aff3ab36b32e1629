// CSV / JSON serialization for traces, sweeps, phase comparisons and
// benchmark reports, plus atomic file writes (temp + rename).
#ifndef LZ_IO_HPP
#define LZ_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lz/compression.hpp"
#include "lz/experiments.hpp"

namespace lz {

inline constexpr const char* kLibraryVersion = "0.1.0";

std::string to_string(FactorForm f);
std::string to_string(PropagationMode m);
std::string to_string(Engine e);
FactorForm parse_factor_form(const std::string& s);
PropagationMode parse_mode(const std::string& s);
Engine parse_engine(const std::string& s);

// Round-trip-exact float formatting shared by every writer.
std::string format_double(double x);

std::string trace_csv(const ProbabilityTrace& trace);
std::string sweep_csv(const SweepResult& sweep);  // long format with a method column
std::string phase_csv(const PhaseComparison& pc);
std::string oscillation_csv(const std::vector<OscillationRecord>& recs);

nlohmann::json pipeline_sidecar(const PipelineSpec& spec, const PipelineResult& result);
nlohmann::json bench_json(const std::vector<CompressionBenchResult>& results);

// Writes content to path via a temp file in the same directory, then renames.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace lz

#endif  // LZ_IO_HPP
