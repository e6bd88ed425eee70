#include "errfloat/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace errfloat::exp {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_samples_csv(const std::string& path, const std::vector<ProblemResult>& results) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "problem_id,coord,depth,location,delta,x,ee,re_m,e,k,c\n";
    for (const auto& r : results) {
        for (const auto& s : r.samples) {
            out << s.problem_id << ',' << s.coord << ',' << s.depth << ','
                << location_name(s.location) << ',' << s.delta << ','
                << softfp::to_report(s.x) << ',' << softfp::to_report(s.ee) << ','
                << format_double(s.re_m) << ',' << format_double(s.e) << ','
                << format_double(s.k) << ',' << format_double(s.c) << '\n';
        }
    }
}

json config_to_json(const EEConfig& cfg) {
    return json{{"t_bits", cfg.t_bits},   {"te_bits", cfg.te_bits}, {"rthd", cfg.rthd},
                {"eez", cfg.eez},         {"qeps", cfg.qeps},       {"k_min", cfg.k_min},
                {"k_max", cfg.k_max},     {"c_min", cfg.c_min},     {"c_max", cfg.c_max},
                {"eps", cfg.eps()},       {"q", cfg.q()},           {"track_re_m", cfg.track_re_m}};
}

EEConfig config_from_json(const json& j) {
    EEConfig cfg;
    cfg.t_bits = j.at("t_bits");
    cfg.te_bits = j.at("te_bits");
    cfg.rthd = j.at("rthd");
    cfg.eez = j.at("eez");
    cfg.qeps = j.at("qeps");
    cfg.k_min = j.at("k_min");
    cfg.k_max = j.at("k_max");
    cfg.c_min = j.at("c_min");
    cfg.c_max = j.at("c_max");
    cfg.track_re_m = j.at("track_re_m");
    return cfg;
}

namespace {

json histogram_to_json(const Histogram& h) {
    return json{{"scale", h.scale == HistScale::cubic ? "cubic" : "linear"},
                {"edges", h.edges},
                {"counts", h.counts}};
}

Histogram histogram_from_json(const json& j) {
    Histogram h;
    h.scale = j.at("scale") == "cubic" ? HistScale::cubic : HistScale::linear;
    h.edges = j.at("edges").get<std::vector<double>>();
    h.counts = j.at("counts").get<std::vector<std::size_t>>();
    return h;
}

json proportion_to_json(const Proportion& p) {
    return json{{"estimate", p.estimate}, {"wilson_lo", p.wilson_lo}, {"wilson_hi", p.wilson_hi}};
}

Proportion proportion_from_json(const json& j) {
    return {j.at("estimate"), j.at("wilson_lo"), j.at("wilson_hi")};
}

json bucket_to_json(const BucketStats& b) {
    return json{{"threshold", b.threshold},
                {"constrained", b.constrained},
                {"n_problems", b.n_problems},
                {"n_samples", b.n_samples},
                {"k_infinite", b.k_infinite},
                {"k_mean", b.k_mean},
                {"k_stdev", b.k_stdev},
                {"k_min", b.k_min},
                {"k_max", b.k_max},
                {"delta_k", b.delta_k},
                {"k_outside", b.k_outside},
                {"alpha", proportion_to_json(b.alpha)},
                {"c_mean", b.c_mean},
                {"c_stdev", b.c_stdev},
                {"c_min", b.c_min},
                {"c_max", b.c_max},
                {"delta_c", b.delta_c},
                {"c_outside", b.c_outside},
                {"beta", proportion_to_json(b.beta)},
                {"k_hist", histogram_to_json(b.k_hist)},
                {"c_hist", histogram_to_json(b.c_hist)}};
}

BucketStats bucket_from_json(const json& j) {
    BucketStats b;
    b.threshold = j.at("threshold");
    b.constrained = j.at("constrained");
    b.n_problems = j.at("n_problems");
    b.n_samples = j.at("n_samples");
    b.k_infinite = j.at("k_infinite");
    b.k_mean = j.at("k_mean");
    b.k_stdev = j.at("k_stdev");
    b.k_min = j.at("k_min");
    b.k_max = j.at("k_max");
    b.delta_k = j.at("delta_k");
    b.k_outside = j.at("k_outside");
    b.alpha = proportion_from_json(j.at("alpha"));
    b.c_mean = j.at("c_mean");
    b.c_stdev = j.at("c_stdev");
    b.c_min = j.at("c_min");
    b.c_max = j.at("c_max");
    b.delta_c = j.at("delta_c");
    b.c_outside = j.at("c_outside");
    b.beta = proportion_from_json(j.at("beta"));
    b.k_hist = histogram_from_json(j.at("k_hist"));
    b.c_hist = histogram_from_json(j.at("c_hist"));
    return b;
}

}  // namespace

json summary_to_json(const StatsSummary& s) {
    json buckets = json::array();
    for (const auto& b : s.buckets) buckets.push_back(bucket_to_json(b));
    return json{{"config", config_to_json(s.cfg)},
                {"total_problems", s.total_problems},
                {"failed_problems", s.failed_problems},
                {"total_samples", s.total_samples},
                {"buckets", buckets},
                {"zero_e_samples", s.zero_e_samples},
                {"zero_e_zero_ee", s.zero_e_zero_ee},
                {"zero_e_mean_abs_ee", s.zero_e_mean_abs_ee},
                {"zero_e_max_abs_ee", s.zero_e_max_abs_ee},
                {"coverage_hits", s.coverage_hits},
                {"coverage_total", s.coverage_total}};
}

StatsSummary summary_from_json(const json& j) {
    StatsSummary s;
    s.cfg = config_from_json(j.at("config"));
    s.total_problems = j.at("total_problems");
    s.failed_problems = j.at("failed_problems");
    s.total_samples = j.at("total_samples");
    for (const auto& b : j.at("buckets")) s.buckets.push_back(bucket_from_json(b));
    s.zero_e_samples = j.at("zero_e_samples");
    s.zero_e_zero_ee = j.at("zero_e_zero_ee");
    s.zero_e_mean_abs_ee = j.at("zero_e_mean_abs_ee");
    s.zero_e_max_abs_ee = j.at("zero_e_max_abs_ee");
    s.coverage_hits = j.at("coverage_hits");
    s.coverage_total = j.at("coverage_total");
    return s;
}

json manifest_to_json(const RunManifest& m) {
    return json{{"config", config_to_json(m.cfg)},
                {"seed", m.seed},
                {"per_depth", m.per_depth},
                {"depths", m.depths},
                {"command", m.command},
                {"mode", m.mode},
                {"outputs", m.outputs},
                {"tool_version", m.tool_version}};
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::vector<SweepCell> run_sweep(const std::vector<int>& te_list,
                                 const std::vector<double>& rthd_list,
                                 const std::vector<ProblemSpec>& specs, EEConfig base,
                                 int threads) {
    if (te_list.empty() || rthd_list.empty())
        throw std::invalid_argument("run_sweep: empty grid axis");
    OracleSet oracles = oracle_all(specs, base.t_bits, threads);
    std::vector<SweepCell> cells;
    for (int te : te_list) {
        for (double rthd : rthd_list) {
            EEConfig cfg = base;
            cfg.te_bits = te;
            cfg.rthd = rthd;
            cfg.validate();
            auto results = run_experiment(specs, cfg, threads, &oracles);
            std::vector<double> thresholds = default_thresholds();
            if (std::find(thresholds.begin(), thresholds.end(), rthd) == thresholds.end())
                thresholds.push_back(rthd);
            cells.push_back({te, rthd, summarize(results, thresholds, cfg)});
        }
    }
    return cells;
}

}  // namespace errfloat::exp
