#pragma once

#include "errfloat/experiments.hpp"

#include <cstddef>
#include <vector>

namespace errfloat::exp {

enum class HistScale { linear, cubic };

/// Bin edges are reported in the original value domain; for the cubic scale
/// binning is uniform in sign(v)*|v|^(1/3).
struct Histogram {
    HistScale scale = HistScale::linear;
    std::vector<double> edges;      // bins + 1 entries
    std::vector<std::size_t> counts;
};

Histogram histogram(const std::vector<double>& values, HistScale scale, int bins);

/// Wilson score interval for a binomial proportion.
struct Proportion {
    double estimate = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
};
Proportion wilson_interval(std::size_t hits, std::size_t total, double z = 1.96);

/// k/c statistics of one classification bucket.
struct BucketStats {
    double threshold = 0.0;
    bool constrained = true;      // re_m < threshold vs ill-conditioned rest
    std::size_t n_problems = 0;
    std::size_t n_samples = 0;    // finite-k samples
    std::size_t k_infinite = 0;
    double k_mean = 0.0, k_stdev = 0.0, k_min = 0.0, k_max = 0.0, delta_k = 0.0;
    std::size_t k_outside = 0;    // outside cfg's [k_min, k_max]
    Proportion alpha;
    double c_mean = 0.0, c_stdev = 0.0, c_min = 0.0, c_max = 0.0, delta_c = 0.0;
    std::size_t c_outside = 0;
    Proportion beta;
    Histogram k_hist;
    Histogram c_hist;
};

struct StatsSummary {
    EEConfig cfg;
    std::size_t total_problems = 0;
    std::size_t failed_problems = 0;
    std::size_t total_samples = 0;
    std::vector<BucketStats> buckets;  // constrained + ill per threshold

    // e = 0 subset at the run's configuration.
    std::size_t zero_e_samples = 0;
    std::size_t zero_e_zero_ee = 0;
    double zero_e_mean_abs_ee = 0.0;
    double zero_e_max_abs_ee = 0.0;

    // True-value coverage of interval_k among samples constrained at cfg.rthd.
    std::size_t coverage_hits = 0;
    std::size_t coverage_total = 0;
};

inline const std::vector<double>& default_thresholds() {
    static const std::vector<double> t = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
    return t;
}

/// Problem-level classification: a problem is constrained under RTHD_j iff
/// the max re_m over its 10 coordinates is below RTHD_j.
StatsSummary summarize(const std::vector<ProblemResult>& results,
                       const std::vector<double>& thresholds, const EEConfig& cfg);

}  // namespace errfloat::exp
