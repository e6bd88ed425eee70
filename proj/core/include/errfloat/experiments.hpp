#pragma once

#include "errfloat/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace errfloat::exp {

enum class Location { origin, minus11, pi_sqrt2 };

const char* location_name(Location loc);

/// One pentagon in/out problem instance.
struct ProblemSpec {
    int id = 0;
    int depth = 1;               // 1, 2 or 3
    Location location = Location::origin;
    std::string delta;           // decimal literal
};

/// delta ranges per depth: [0, 0.001], [0, 0.01], [0, 0.1].
/// Deterministic under `seed`; per_depth problems per (depth, location).
std::vector<ProblemSpec> gen_test_set(std::uint64_t seed, int per_depth,
                                      const std::vector<int>& depths = {1, 2, 3});

/// The 10 coordinate literals (x0,y0,...,x4,y4) of the base pentagon at the
/// spec's location. These exact decimal strings define the intended real
/// values consumed by both the fpe pipeline and the truth oracle.
std::array<std::string, 10> pentagon_literals(const ProblemSpec& spec);

/// Per-coordinate observation.
struct KcSample {
    int problem_id = 0;
    int coord = 0;
    int depth = 1;
    Location location = Location::origin;
    std::string delta;
    softfp::PFloat x;
    softfp::PFloat ee;
    double re_m = 0.0;
    Dyadic e_exact;          // oracle value minus computed value
    double e = 0.0;
    double k = 0.0;
    bool k_infinite = false;  // ee = 0 with e != 0
    double c = 0.0;
    Dyadic true_value;        // oracle coordinate, for coverage checks
};

struct ProblemResult {
    ProblemSpec spec;
    bool failed = false;      // degenerate geometry in either pipeline
    std::vector<KcSample> samples;
    double max_re_m = 0.0;
};

/// k = e/ee; (0, 0) -> 1, (e != 0, 0) -> infinite flag.
struct KRatio {
    double value = 0.0;
    bool infinite = false;
};
KRatio compute_k(double e, double ee);

/// c = e / (sign(ee)*(|ee| + QEPS)) with sign(0) = +1.
double compute_c(double e, double ee, const EEConfig& cfg);

/// Pentagon pipeline at oracle precision (4T bits); nullopt if degenerate.
std::optional<std::array<Dyadic, 10>> oracle_eval(const ProblemSpec& spec, int t_bits);

/// Full problem: fpe pipeline plus oracle, k/c per coordinate.
/// A precomputed oracle (shared across sweep cells) may be passed in.
ProblemResult run_problem(const ProblemSpec& spec, const EEConfig& cfg,
                          const std::optional<std::array<Dyadic, 10>>* oracle = nullptr,
                          IntervalMode mode = IntervalMode::k);

using OracleSet = std::vector<std::optional<std::array<Dyadic, 10>>>;

/// Oracle results for every spec; reusable across sweep cells sharing T.
OracleSet oracle_all(const std::vector<ProblemSpec>& specs, int t_bits, int threads = 0);

/// Runs all problems, optionally across worker threads (<= 0 means use
/// ERRFLOAT_THREADS or hardware concurrency). Output order matches `specs`.
std::vector<ProblemResult> run_experiment(const std::vector<ProblemSpec>& specs,
                                          const EEConfig& cfg, int threads = 0,
                                          const OracleSet* oracles = nullptr,
                                          IntervalMode mode = IntervalMode::k);

}  // namespace errfloat::exp
