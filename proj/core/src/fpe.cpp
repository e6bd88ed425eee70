#include "errfloat/fpe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace errfloat {

namespace mp = boost::multiprecision;
using softfp::PFloat;

namespace {

// Truncating division of exact dyadics to `bits` quotient bits.
std::pair<Dyadic, bool> dyadic_div(const Dyadic& num, const Dyadic& den, long bits) {
    if (den.is_zero()) throw softfp::SoftfpError("division by zero");
    if (num.is_zero()) return {Dyadic(), false};
    BigInt n = mp::abs(num.mantissa());
    BigInt d = mp::abs(den.mantissa());
    long shift = bits + static_cast<long>(mp::msb(d)) + 1;
    BigInt q, r;
    mp::divide_qr(n << static_cast<unsigned>(shift), d, q, r);
    int sign = num.sign() * den.sign();
    return {Dyadic(sign < 0 ? BigInt(-q) : q, num.exponent2() - den.exponent2() - shift),
            r != 0};
}

}  // namespace

double rel_err(const PFloat& x, const PFloat& ee, const EEConfig& cfg) {
    double ratio;
    if (x.is_zero()) {
        if (ee.is_zero()) return 0.0;
        ratio = std::numeric_limits<double>::infinity();
    } else {
        ratio = std::abs(ee.to_double() / x.to_double());
    }
    double near_zero = std::abs((x.to_dyadic() + ee.to_dyadic()).to_double()) / cfg.eez;
    return std::min(ratio, near_zero);
}

Interval interval_k(const Fpe& a, const EEConfig& cfg) {
    Dyadic x = a.x.to_dyadic();
    Dyadic ee = a.ee.to_dyadic();
    Dyadic p = x + Dyadic::from_double(cfg.k_min) * ee;
    Dyadic q = x + Dyadic::from_double(cfg.k_max) * ee;
    return p <= q ? Interval{p, q} : Interval{q, p};
}

Interval interval_c(const Fpe& a, const EEConfig& cfg) {
    Dyadic x = a.x.to_dyadic();
    Dyadic ce = a.ee.to_dyadic().abs() + Dyadic::from_double(cfg.qeps);
    if (a.ee.to_dyadic().sign() < 0) ce = -ce;  // sign(0) = +1
    Dyadic p = x + Dyadic::from_double(cfg.c_min) * ce;
    Dyadic q = x + Dyadic::from_double(cfg.c_max) * ce;
    return p <= q ? Interval{p, q} : Interval{q, p};
}

Interval confidence_interval(const Fpe& a, const EEConfig& cfg, IntervalMode mode) {
    return mode == IntervalMode::k ? interval_k(a, cfg) : interval_c(a, cfg);
}

bool fpe_equal(const Fpe& a, const Fpe& b, const EEConfig& cfg, IntervalMode mode) {
    Interval ia = confidence_interval(a, cfg, mode);
    Interval ib = confidence_interval(b, cfg, mode);
    Dyadic lo = std::max(ia.lo, ib.lo);
    Dyadic hi = std::min(ia.hi, ib.hi);
    return lo < hi;
}

bool contains_zero(const Fpe& a, const EEConfig& cfg, IntervalMode mode) {
    Interval iv = confidence_interval(a, cfg, mode);
    return iv.lo.sign() <= 0 && iv.hi.sign() >= 0;
}

Fpe FpeContext::literal(const std::string& text) {
    auto conv = softfp::from_decimal(text, cfg_.t_bits, cfg_.te_bits);
    double re = rel_err(conv.x, conv.conv_err, cfg_);
    if (re >= cfg_.rthd) signals_.push_back({"literal", re, cfg_.rthd});
    return {std::move(conv.x), std::move(conv.conv_err), cfg_.track_re_m ? re : 0.0};
}

Fpe FpeContext::finish(const Dyadic& pe, bool pe_sticky, const softfp::RoundSplit& split,
                       double ancestor_re_m, const char* tag) {
    PFloat ee = PFloat::from_dyadic(pe + split.le.to_dyadic(), cfg_.te_bits, pe_sticky);
    double re = rel_err(split.z, ee, cfg_);
    if (re >= cfg_.rthd) signals_.push_back({tag, re, cfg_.rthd});
    double re_m = cfg_.track_re_m ? std::max(ancestor_re_m, re) : 0.0;
    return {split.z, std::move(ee), re_m};
}

Fpe FpeContext::binary(const Fpe& a, const Fpe& b, softfp::Op op, const char* tag) {
    softfp::Accumulator w = softfp::exact_op(a.x, b.x, op);
    softfp::RoundSplit split = softfp::round_split(w);

    Dyadic pe;
    bool pe_sticky = false;
    switch (op) {
        case softfp::Op::add:
            pe = a.ee.to_dyadic() + b.ee.to_dyadic();
            break;
        case softfp::Op::sub:
            pe = a.ee.to_dyadic() - b.ee.to_dyadic();
            break;
        case softfp::Op::mul:
            pe = b.x.to_dyadic() * a.ee.to_dyadic() + a.x.to_dyadic() * b.ee.to_dyadic();
            break;
        case softfp::Op::div: {
            // (e_x - z*e_y)/y with z the rounded quotient.
            Dyadic num = a.ee.to_dyadic() - split.z.to_dyadic() * b.ee.to_dyadic();
            auto [q, sticky] = dyadic_div(num, b.x.to_dyadic(), 2L * cfg_.te_bits + 8);
            pe = q;
            pe_sticky = sticky;
            break;
        }
    }
    return finish(pe, pe_sticky, split, std::max(a.re_m, b.re_m), tag);
}

Fpe FpeContext::sqrt(const Fpe& a) {
    softfp::Accumulator w = softfp::sqrt_exact(a.x);
    softfp::RoundSplit split = softfp::round_split(w);
    Dyadic pe;
    bool pe_sticky = false;
    if (!a.ee.to_dyadic().is_zero()) {
        if (split.z.is_zero()) throw softfp::SoftfpError("sqrt error propagation at zero root");
        auto [q, sticky] =
            dyadic_div(a.ee.to_dyadic(), Dyadic(2) * split.z.to_dyadic(), 2L * cfg_.te_bits + 8);
        pe = q;
        pe_sticky = sticky;
    }
    return finish(pe, pe_sticky, split, a.re_m, "sqrt");
}

}  // namespace errfloat
