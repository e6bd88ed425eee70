#include "errfloat/dyadic.hpp"

namespace errfloat {

std::string Dyadic::to_decimal_string() const {
    if (m_ == 0) return "0";
    BigInt a = boost::multiprecision::abs(m_);
    std::string body;
    if (e2_ >= 0) {
        body = BigInt(a << static_cast<unsigned>(e2_)).str();
    } else {
        // m * 2^-k = m * 5^k * 10^-k: exact digits, point k places from the right.
        unsigned k = static_cast<unsigned>(-e2_);
        BigInt scaled = a * boost::multiprecision::pow(BigInt(5), k);
        std::string digits = scaled.str();
        if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
        body = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
        while (body.back() == '0') body.pop_back();
        if (body.back() == '.') body.pop_back();
    }
    return m_ < 0 ? "-" + body : body;
}

}  // namespace errfloat
