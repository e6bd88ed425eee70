#include "errfloat/softfp.hpp"

#include <cctype>

namespace errfloat::softfp {

namespace mp = boost::multiprecision;

namespace {

long bit_length(const BigInt& v) {
    return v == 0 ? 0 : static_cast<long>(mp::msb(v)) + 1;
}

void check_exponent(long e) {
    if (e < kExpMin || e > kExpMax)
        throw SoftfpError("simulated exponent out of range: " + std::to_string(e));
}

}  // namespace

PFloat PFloat::from_parts(int sign, long exponent, BigInt sig, int precision) {
    if (sig == 0) return zero(precision);
    if (bit_length(sig) != precision)
        throw SoftfpError("from_parts: significand not normalized to precision");
    check_exponent(exponent);
    PFloat r;
    r.sign_ = sign < 0 ? -1 : 1;
    r.exp_ = exponent;
    r.sig_ = std::move(sig);
    r.prec_ = precision;
    return r;
}

PFloat PFloat::from_dyadic(const Dyadic& d, int precision, bool sticky) {
    (void)sticky;  // first dropped bit alone decides under ties-away rounding
    if (d.is_zero()) return zero(precision);
    BigInt a = mp::abs(d.mantissa());
    long len = bit_length(a);
    long exp = d.exponent2() + len;
    if (len > precision) {
        long drop = len - precision;
        bool guard = mp::bit_test(a, static_cast<unsigned>(drop - 1));
        a >>= static_cast<unsigned>(drop);
        if (guard) {
            ++a;
            if (bit_length(a) > precision) { a >>= 1; ++exp; }
        }
    } else {
        a <<= static_cast<unsigned>(precision - len);
    }
    return from_parts(d.sign(), exp, std::move(a), precision);
}

Accumulator Accumulator::from_dyadic(const Dyadic& d, int value_precision, bool sticky) {
    Accumulator acc;
    acc.value_precision = value_precision;
    acc.sticky = sticky;
    if (d.is_zero()) return acc;
    BigInt a = mp::abs(d.mantissa());
    long len = bit_length(a);
    long wide = 2 * value_precision;
    long exp = d.exponent2() + len;
    if (len > wide) {
        long drop = len - wide;
        BigInt mask = (BigInt(1) << static_cast<unsigned>(drop)) - 1;
        if ((a & mask) != 0) acc.sticky = true;
        a >>= static_cast<unsigned>(drop);
    } else {
        a <<= static_cast<unsigned>(wide - len);
    }
    check_exponent(exp);
    acc.sign = d.sign();
    acc.exponent = exp;
    acc.sig = std::move(a);
    return acc;
}

Accumulator exact_op(const PFloat& a, const PFloat& b, Op op) {
    if (a.precision() != b.precision())
        throw SoftfpError("exact_op: operand precisions differ");
    const int t = a.precision();
    switch (op) {
        case Op::add:
            return Accumulator::from_dyadic(a.to_dyadic() + b.to_dyadic(), t);
        case Op::sub:
            return Accumulator::from_dyadic(a.to_dyadic() - b.to_dyadic(), t);
        case Op::mul:
            // 2T-bit product: always exact in the accumulator.
            return Accumulator::from_dyadic(a.to_dyadic() * b.to_dyadic(), t);
        case Op::div: {
            if (b.is_zero()) throw SoftfpError("division by zero");
            if (a.is_zero()) return Accumulator::from_dyadic(Dyadic(), t);
            const unsigned shift = static_cast<unsigned>(2 * t + 2);
            BigInt num = a.significand() << shift;
            BigInt q, r;
            mp::divide_qr(num, b.significand(), q, r);
            Dyadic quotient(a.sign() * b.sign() < 0 ? BigInt(-q) : q,
                            a.exponent() - b.exponent() - static_cast<long>(shift));
            return Accumulator::from_dyadic(quotient, t, r != 0);
        }
    }
    throw SoftfpError("exact_op: bad op");
}

Accumulator sqrt_exact(const PFloat& a) {
    const int t = a.precision();
    if (a.is_zero()) return Accumulator::from_dyadic(Dyadic(), t);
    if (a.sign() < 0) throw SoftfpError("sqrt of negative value");
    // value = sig * 2^E; pick j with E - j even and the root >= 2T bits.
    long e = a.exponent() - t;
    long j = 3 * t + 2;
    if (((e - j) & 1) != 0) ++j;
    BigInt rem;
    BigInt radicand = a.significand() << static_cast<unsigned>(j);
    BigInt root = mp::sqrt(radicand, rem);
    return Accumulator::from_dyadic(Dyadic(root, (e - j) / 2), t, rem != 0);
}

RoundSplit round_split(const Accumulator& w) {
    const int t = w.value_precision;
    if (w.is_zero()) return {PFloat::zero(t), PFloat::zero(t)};
    const BigInt low_mask = (BigInt(1) << static_cast<unsigned>(t)) - 1;
    BigInt u = w.sig >> static_cast<unsigned>(t);
    BigInt v = w.sig & low_mask;
    bool v1 = mp::bit_test(v, static_cast<unsigned>(t - 1));

    BigInt mz = u;
    BigInt le_mag = v;
    int le_sign = w.sign;
    if (v1) {
        ++mz;
        le_mag = (BigInt(1) << static_cast<unsigned>(t)) - v;
        le_sign = -w.sign;
    }

    PFloat z;
    if (bit_length(mz) > t) {
        z = PFloat::from_parts(w.sign, w.exponent + 1, BigInt(1) << static_cast<unsigned>(t - 1), t);
    } else {
        z = PFloat::from_parts(w.sign, w.exponent, std::move(mz), t);
    }
    // |le| <= 2^(T-1) ulps of v: always exact in T bits.
    PFloat le = PFloat::from_dyadic(
        Dyadic(le_sign < 0 ? BigInt(-le_mag) : le_mag, w.exponent - 2 * t), t);
    return {std::move(z), std::move(le)};
}

namespace {

struct ParsedDecimal {
    int sign = 1;
    BigInt digits;   // integer significand
    long pow10 = 0;  // value = sign * digits * 10^pow10
};

ParsedDecimal parse_decimal(const std::string& literal) {
    ParsedDecimal p;
    size_t i = 0;
    const size_t n = literal.size();
    if (i < n && (literal[i] == '+' || literal[i] == '-')) {
        if (literal[i] == '-') p.sign = -1;
        ++i;
    }
    bool any_digit = false;
    long frac_digits = 0;
    bool in_frac = false;
    for (; i < n; ++i) {
        char ch = literal[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            p.digits = p.digits * 10 + (ch - '0');
            if (in_frac) ++frac_digits;
            any_digit = true;
        } else if (ch == '.' && !in_frac) {
            in_frac = true;
        } else {
            break;
        }
    }
    long exp10 = 0;
    if (i < n && (literal[i] == 'e' || literal[i] == 'E')) {
        ++i;
        bool neg = false;
        if (i < n && (literal[i] == '+' || literal[i] == '-')) {
            neg = literal[i] == '-';
            ++i;
        }
        bool any_exp = false;
        for (; i < n && std::isdigit(static_cast<unsigned char>(literal[i])); ++i) {
            exp10 = exp10 * 10 + (literal[i] - '0');
            any_exp = true;
        }
        if (!any_exp) throw SoftfpError("malformed literal: " + literal);
        if (neg) exp10 = -exp10;
    }
    if (!any_digit || i != n) throw SoftfpError("malformed literal: " + literal);
    p.pow10 = exp10 - frac_digits;
    return p;
}

}  // namespace

DecimalConversion from_decimal(const std::string& literal, int t_bits, int te_bits) {
    ParsedDecimal p = parse_decimal(literal);
    if (p.digits == 0)
        return {PFloat::zero(t_bits), PFloat::zero(te_bits)};

    // Wide intermediate with at least T + T_e + 1 bits (plus guard bits).
    Dyadic w;
    bool sticky = false;
    if (p.pow10 >= 0) {
        BigInt m = p.digits * mp::pow(BigInt(5), static_cast<unsigned>(p.pow10));
        w = Dyadic(p.sign < 0 ? BigInt(-m) : m, p.pow10);
    } else {
        const long wide = std::max(2L * t_bits, static_cast<long>(t_bits + te_bits + 8));
        unsigned k = static_cast<unsigned>(-p.pow10);
        BigInt den = mp::pow(BigInt(5), k);
        long shift = wide + bit_length(den);
        BigInt q, r;
        mp::divide_qr(p.digits << static_cast<unsigned>(shift), den, q, r);
        sticky = r != 0;
        w = Dyadic(p.sign < 0 ? BigInt(-q) : q, p.pow10 - shift);
    }

    PFloat x = PFloat::from_dyadic(w, t_bits, sticky);
    PFloat conv_err = PFloat::from_dyadic(w - x.to_dyadic(), te_bits, sticky);
    return {std::move(x), std::move(conv_err)};
}

std::string to_report(const PFloat& a) {
    return a.to_dyadic().to_decimal_string();
}

}  // namespace errfloat::softfp
