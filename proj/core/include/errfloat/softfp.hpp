#pragma once

#include "errfloat/dyadic.hpp"

#include <optional>
#include <string>
#include <utility>

namespace errfloat::softfp {

/// Raised on division by zero, sqrt of a negative value, exponent range
/// violations and malformed decimal literals. No infinities or NaNs are
/// modeled in the simulated format.
class SoftfpError : public std::runtime_error {
public:
    explicit SoftfpError(const std::string& what) : std::runtime_error(what) {}
};

// Simulated exponent range. Wider than binary64 so that the oracle runs at
// 4x precision without ever hitting the rails; out-of-range still signals.
inline constexpr long kExpMin = -16382;
inline constexpr long kExpMax = 16383;

enum class Op { add, sub, mul, div };

/// Parametric-precision binary floating-point value.
/// value = sign * (sig / 2^P) * 2^exponent with sig in [2^(P-1), 2^P),
/// i.e. the significand is the fraction 0.b1...bP with b1 = 1 when nonzero.
class PFloat {
public:
    PFloat() : sign_(1), exp_(0), sig_(0), prec_(1) {}

    static PFloat zero(int precision) {
        PFloat z;
        z.prec_ = precision;
        return z;
    }

    /// Builds from already-normalized parts.
    static PFloat from_parts(int sign, long exponent, BigInt sig, int precision);

    /// Rounds an exact dyadic to `precision` bits, nearest with ties away
    /// from zero. `sticky` marks extra nonzero bits below the dyadic itself.
    static PFloat from_dyadic(const Dyadic& d, int precision, bool sticky = false);

    bool is_zero() const { return sig_ == 0; }
    int sign() const { return sign_; }
    long exponent() const { return exp_; }
    const BigInt& significand() const { return sig_; }
    int precision() const { return prec_; }

    Dyadic to_dyadic() const {
        if (is_zero()) return Dyadic();
        return Dyadic(sign_ < 0 ? BigInt(-sig_) : sig_, exp_ - prec_);
    }
    double to_double() const { return to_dyadic().to_double(); }

    PFloat negated() const {
        PFloat r = *this;
        if (!r.is_zero()) r.sign_ = -r.sign_;
        return r;
    }

    friend bool operator==(const PFloat& a, const PFloat& b) {
        return a.to_dyadic() == b.to_dyadic();
    }

private:
    int sign_;     // +1 or -1
    long exp_;
    BigInt sig_;
    int prec_;
};

/// Exact wide result of one operation: 2T significand bits [u|v] plus a
/// sticky flag recording any nonzero bits truncated below position 2T.
struct Accumulator {
    int sign = 1;
    long exponent = 0;
    BigInt sig;          // 2T bits, top bit set when nonzero
    bool sticky = false;
    int value_precision = 1;   // T; the accumulator holds 2T bits

    bool is_zero() const { return sig == 0; }
    int wide_precision() const { return 2 * value_precision; }

    Dyadic to_dyadic() const {
        if (is_zero()) return Dyadic();
        return Dyadic(sign < 0 ? BigInt(-sig) : sig, exponent - wide_precision());
    }

    /// Truncates an exact dyadic toward zero into a 2T-bit accumulator.
    static Accumulator from_dyadic(const Dyadic& d, int value_precision, bool sticky = false);
};

/// Exact-to-2T operation on two T-bit operands. For add/sub/mul the result
/// is exact whenever it fits in 2T bits; alignment overflow and inexact
/// quotients set sticky.
Accumulator exact_op(const PFloat& a, const PFloat& b, Op op);

/// Square root to 2T bits, truncated, sticky iff inexact.
Accumulator sqrt_exact(const PFloat& a);

struct RoundSplit {
    PFloat z;    // rounded result, T bits
    PFloat le;   // local rounding error, le = w - z, exact in T bits
};

/// Mantissa-split rounding: z from the high half u (plus carry when v1 = 1),
/// le from the low half v. le = w - z exactly whenever sticky is false.
RoundSplit round_split(const Accumulator& w);

struct DecimalConversion {
    PFloat x;          // T-bit value
    PFloat conv_err;   // residual w - x rounded to T_e bits
};

/// Converts a decimal literal through a wide intermediate (>= T+T_e+1 bits),
/// then splits it into the T-bit value and its T_e-bit conversion error.
DecimalConversion from_decimal(const std::string& literal, int t_bits, int te_bits);

/// Lossless decimal rendering for logs and CSV.
std::string to_report(const PFloat& a);

}  // namespace errfloat::softfp
