#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace errfloat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binary rational: value = mantissa * 2^exponent2.
/// Addition, subtraction and multiplication are exact; there is no division.
/// Used for error-propagation expressions that must see a single final
/// rounding, and for exact endpoint arithmetic in the interval predicates.
class Dyadic {
public:
    Dyadic() : m_(0), e2_(0) {}
    Dyadic(BigInt mantissa, long exponent2) : m_(std::move(mantissa)), e2_(exponent2) {
        normalize();
    }
    explicit Dyadic(long long v) : m_(v), e2_(0) { normalize(); }

    static Dyadic from_double(double v) {
        if (v == 0.0) return Dyadic();
        if (!std::isfinite(v)) throw std::invalid_argument("Dyadic: non-finite double");
        int e = 0;
        double f = std::frexp(v, &e);              // v = f * 2^e, |f| in [0.5, 1)
        auto m = static_cast<long long>(std::ldexp(f, 53));
        return Dyadic(BigInt(m), e - 53);
    }

    bool is_zero() const { return m_ == 0; }
    int sign() const { return m_ == 0 ? 0 : (m_ < 0 ? -1 : 1); }
    const BigInt& mantissa() const { return m_; }
    long exponent2() const { return e2_; }

    Dyadic operator-() const { return Dyadic(-m_, e2_); }

    Dyadic abs() const { return m_ < 0 ? Dyadic(-m_, e2_) : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long e = std::min(a.e2_, b.e2_);
        BigInt ma = a.m_ << static_cast<unsigned>(a.e2_ - e);
        BigInt mb = b.m_ << static_cast<unsigned>(b.e2_ - e);
        return Dyadic(ma + mb, e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.m_ * b.m_, a.e2_ + b.e2_);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return (a - b).is_zero(); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

    double to_double() const {
        if (m_ == 0) return 0.0;
        // Keep the top 64 bits and track the shift so huge mantissas convert safely.
        BigInt a = boost::multiprecision::abs(m_);
        long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
        long drop = bits > 64 ? bits - 64 : 0;
        auto top = static_cast<std::uint64_t>(a >> static_cast<unsigned>(drop));
        double d = std::ldexp(static_cast<double>(top), static_cast<int>(e2_ + drop));
        return m_ < 0 ? -d : d;
    }

    /// Exact decimal rendering (every dyadic has a finite decimal expansion).
    std::string to_decimal_string() const;

private:
    void normalize() {
        if (m_ == 0) { e2_ = 0; return; }
        unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(boost::multiprecision::abs(m_)));
        if (tz > 0) { m_ >>= tz; e2_ += static_cast<long>(tz); }
    }

    BigInt m_;
    long e2_;
};

}  // namespace errfloat
