#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace betanum {

using BigInt = boost::multiprecision::cpp_int;

// Decimal integer parsing. The underlying string constructor follows C++
// literal rules (leading 0 means octal), so leading zeros are stripped here.
inline BigInt parse_int(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    size_t first = s.find_first_not_of('0');
    if (first == std::string::npos)
        s = s.empty() ? s : "0";
    else
        s.erase(0, first);
    if (s.empty()) throw std::invalid_argument("parse_int: empty integer '" + text + "'");
    BigInt v(s);
    return neg ? BigInt(-v) : v;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt big_pow(const BigInt& a, unsigned e) {
    return boost::multiprecision::pow(a, e);
}

inline BigInt pow10(unsigned k) { return big_pow(BigInt(10), k); }

// floor(sqrt(a)) for a >= 0
inline BigInt big_isqrt(const BigInt& a) { return boost::multiprecision::sqrt(a); }

// number of bits in |a|; 0 for a == 0
inline unsigned bit_length(const BigInt& a) {
    if (a == 0) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(big_abs(a))) + 1;
}

inline std::string to_string(const BigInt& a) { return a.str(); }

}  // namespace betanum
