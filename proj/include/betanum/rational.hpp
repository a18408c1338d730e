#pragma once

#include "betanum/bigint.hpp"
#include "betanum/errors.hpp"

#include <compare>
#include <string>
#include <utility>

namespace betanum {

// Exact rational; always in lowest terms with positive denominator.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    // "a/b" or "a" with optional leading '-'
    static BigRational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return BigRational(parse_int(text));
        return BigRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    BigRational operator-() const {
        BigRational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    BigRational& operator+=(const BigRational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    BigRational& operator-=(const BigRational& o) { return *this += -o; }
    BigRational& operator*=(const BigRational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    BigRational& operator/=(const BigRational& o) {
        if (o.num_ == 0) throw DivisionByZero();
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
                         : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    BigRational pow(unsigned e) const {
        BigRational r;
        r.num_ = big_pow(num_, e);
        r.den_ = big_pow(den_, e);
        return r;
    }

    // floor toward -infinity
    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) q -= 1;
        return q;
    }
    BigInt ceil() const { return -(-*this).floor(); }

    // Fixed-point decimal, round half away from zero. Exact and deterministic.
    std::string to_decimal(unsigned digits) const {
        BigInt scaled = big_abs(num_) * pow10(digits);
        BigInt q = scaled / den_;
        BigInt r = scaled - q * den_;
        if (2 * r >= den_) q += 1;
        std::string s = betanum::to_string(q);
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        std::string out;
        if (sign() < 0 && q != 0) out += '-';
        out += s.substr(0, s.size() - digits);
        if (digits > 0) {
            out += '.';
            out += s.substr(s.size() - digits);
        }
        return out;
    }

    double to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

    std::string to_string() const {
        if (den_ == 1) return betanum::to_string(num_);
        return betanum::to_string(num_) + "/" + betanum::to_string(den_);
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_ == 0) throw DivisionByZero();
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = big_gcd(big_abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline BigRational abs(const BigRational& q) { return q.abs(); }

}  // namespace betanum
