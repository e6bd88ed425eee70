#pragma once

#include "errfloat/stats.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace errfloat::exp {

/// Shortest round-trip decimal rendering of a double ("inf" for infinities).
std::string format_double(double v);

/// Samples CSV: problem_id,coord,depth,location,delta,x,ee,re_m,e,k,c
/// with x and ee as lossless decimal text. Failed problems contribute no
/// rows; their tally lives in the summary.
void write_samples_csv(const std::string& path, const std::vector<ProblemResult>& results);

nlohmann::json summary_to_json(const StatsSummary& summary);
StatsSummary summary_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const EEConfig& cfg);
EEConfig config_from_json(const nlohmann::json& j);

/// Everything needed to reproduce a run bit-identically; written alongside
/// every output.
struct RunManifest {
    EEConfig cfg;
    std::uint64_t seed = 0;
    int per_depth = 0;
    std::vector<int> depths;
    std::string command;
    std::string mode = "k";
    std::vector<std::string> outputs;
    std::string tool_version;
};

nlohmann::json manifest_to_json(const RunManifest& m);
void write_json(const std::string& path, const nlohmann::json& j);

struct SweepCell {
    int te_bits = 0;
    double rthd = 0.0;
    StatsSummary summary;
};

/// One full experiment per (T_e, RTHD) cell over a shared problem set;
/// oracle results are computed once (they depend only on T).
std::vector<SweepCell> run_sweep(const std::vector<int>& te_list,
                                 const std::vector<double>& rthd_list,
                                 const std::vector<ProblemSpec>& specs, EEConfig base,
                                 int threads = 0);

}  // namespace errfloat::exp
