#pragma once

#include "errfloat/config.hpp"
#include "errfloat/softfp.hpp"

#include <string>
#include <vector>

namespace errfloat {

/// The fpe entity: computed value, estimated absolute error, and the
/// maximum relative error registered during its evaluation.
struct Fpe {
    softfp::PFloat x;     // T bits
    softfp::PFloat ee;    // T_e bits
    double re_m = 0.0;
};

/// Emitted when an operation produces re >= RTHD. The result is still
/// returned; discarding, warning or extending precision is caller policy.
struct ThresholdSignal {
    std::string op;
    double re = 0.0;
    double rthd = 0.0;
};

enum class IntervalMode { k, c };

struct Interval {
    Dyadic lo;
    Dyadic hi;
};

/// Generalized relative error re(x, ee) = min(|ee/x|, |x+ee|/EEZ).
/// |ee/x| counts as +inf when x = 0 and ee != 0, as 0 when both are 0.
double rel_err(const softfp::PFloat& x, const softfp::PFloat& ee, const EEConfig& cfg);

/// Confidence interval [x + k_min*ee, x + k_max*ee], endpoints ordered.
Interval interval_k(const Fpe& a, const EEConfig& cfg);

/// Perturbed variant with ce = sign(ee)*(|ee| + QEPS), sign(0) = +1;
/// nonempty even when ee = 0.
Interval interval_c(const Fpe& a, const EEConfig& cfg);

Interval confidence_interval(const Fpe& a, const EEConfig& cfg, IntervalMode mode);

/// True iff the two confidence intervals overlap with positive length;
/// disjoint or merely touching intervals are not equal.
bool fpe_equal(const Fpe& a, const Fpe& b, const EEConfig& cfg, IntervalMode mode);

/// True iff 0 lies in the closed confidence interval.
bool contains_zero(const Fpe& a, const EEConfig& cfg, IntervalMode mode);

/// Arithmetic over fpe values. Threshold crossings are collected in
/// `signals`; the context is otherwise stateless and values are immutable,
/// so independent expressions may use separate contexts concurrently.
class FpeContext {
public:
    explicit FpeContext(const EEConfig& cfg) : cfg_(cfg) {}

    const EEConfig& config() const { return cfg_; }
    const std::vector<ThresholdSignal>& signals() const { return signals_; }
    void clear_signals() { signals_.clear(); }

    Fpe literal(const std::string& text);
    Fpe add(const Fpe& a, const Fpe& b) { return binary(a, b, softfp::Op::add, "add"); }
    Fpe sub(const Fpe& a, const Fpe& b) { return binary(a, b, softfp::Op::sub, "sub"); }
    Fpe mul(const Fpe& a, const Fpe& b) { return binary(a, b, softfp::Op::mul, "mul"); }
    Fpe div(const Fpe& a, const Fpe& b) { return binary(a, b, softfp::Op::div, "div"); }
    Fpe sqrt(const Fpe& a);
    Fpe negate(const Fpe& a) const { return {a.x.negated(), a.ee.negated(), a.re_m}; }

private:
    Fpe binary(const Fpe& a, const Fpe& b, softfp::Op op, const char* tag);
    Fpe finish(const Dyadic& pe, bool pe_sticky, const softfp::RoundSplit& split,
               double ancestor_re_m, const char* tag);

    EEConfig cfg_;
    std::vector<ThresholdSignal> signals_;
};

}  // namespace errfloat
