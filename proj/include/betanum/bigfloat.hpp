#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/bigint.hpp"
#include "betanum/errors.hpp"
#include "betanum/rational.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace betanum {

// Binary floating point with runtime precision: value = mant * 2^exp with
// |mant| < 2^prec after rounding (round half away from zero). Used only on
// the numeric paths (root finding, bounds); every certified decision in the
// library is made in exact rational arithmetic.
class BigFloat {
public:
    BigFloat() = default;  // zero
    explicit BigFloat(unsigned prec) : prec_(prec) {}

    static BigFloat from_int(BigInt v, unsigned prec) {
        BigFloat r(prec);
        r.m_ = std::move(v);
        r.normalize();
        return r;
    }

    static BigFloat from_rational(const BigRational& q, unsigned prec) {
        if (q.is_zero()) return BigFloat(prec);
        BigFloat r(prec);
        BigInt num = big_abs(q.num()) << (prec + 2);
        r.m_ = num / q.den();
        if (q.sign() < 0) r.m_ = -r.m_;
        r.e_ = -static_cast<long long>(prec + 2);
        r.normalize();
        return r;
    }

    static BigFloat from_double(double v, unsigned prec) {
        if (v == 0.0) return BigFloat(prec);
        int ex = 0;
        double m = std::frexp(v, &ex);  // v = m * 2^ex, |m| in [0.5, 1)
        long long mi = static_cast<long long>(std::ldexp(m, 62));
        BigFloat r(prec);
        r.m_ = mi;
        r.e_ = ex - 62;
        r.normalize();
        return r;
    }

    BigRational to_rational() const {
        if (m_ == 0) return BigRational(0);
        if (e_ >= 0) return BigRational(shl(m_, static_cast<unsigned>(e_)));
        return BigRational(m_, BigInt(1) << static_cast<unsigned>(-e_));
    }

    double to_double() const { return to_rational().to_double(); }
    std::string to_decimal(unsigned digits) const { return to_rational().to_decimal(digits); }

    unsigned prec() const { return prec_; }
    int sign() const { return m_ == 0 ? 0 : (m_ < 0 ? -1 : 1); }
    bool is_zero() const { return m_ == 0; }

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r = a;
        r.m_ = -r.m_;
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        unsigned prec = std::max(a.prec_, b.prec_);
        if (a.m_ == 0) return b.with_prec(prec);
        if (b.m_ == 0) return a.with_prec(prec);
        const BigFloat *hi = &a, *lo = &b;
        if (a.e_ < b.e_) std::swap(hi, lo);
        long long shift = hi->e_ - lo->e_;
        // the smaller addend vanishes below the rounding point
        if (shift > static_cast<long long>(prec) + 4 + static_cast<long long>(bit_length(lo->m_)))
            return hi->with_prec(prec);
        BigFloat r(prec);
        r.m_ = shl(hi->m_, static_cast<unsigned>(shift)) + lo->m_;
        r.e_ = lo->e_;
        r.normalize();
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec_, b.prec_));
        r.m_ = a.m_ * b.m_;
        r.e_ = a.e_ + b.e_;
        r.normalize();
        return r;
    }

    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.m_ == 0) throw DivisionByZero();
        unsigned prec = std::max(a.prec_, b.prec_);
        if (a.m_ == 0) return BigFloat(prec);
        BigFloat r(prec);
        unsigned s = prec + 2 + bit_length(b.m_);
        r.m_ = shl(a.m_, s) / b.m_;
        r.e_ = a.e_ - b.e_ - static_cast<long long>(s);
        r.normalize();
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    // exact comparisons via the rational view
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return a.to_rational() < b.to_rational();
    }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return a.to_rational() <= b.to_rational();
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    BigFloat abs() const { return m_ < 0 ? -*this : *this; }

    friend BigFloat sqrt(const BigFloat& x) {
        if (x.m_ < 0) throw NonRealResult();
        if (x.m_ == 0) return x;
        unsigned want = 2 * (x.prec_ + 2);
        unsigned bl = bit_length(x.m_);
        long long s = bl < want ? static_cast<long long>(want - bl) : 0;
        if ((x.e_ - s) % 2 != 0) s += 1;
        BigFloat r(x.prec_);
        r.m_ = big_isqrt(x.m_ << static_cast<unsigned>(s));
        r.e_ = (x.e_ - s) / 2;
        r.normalize();
        return r;
    }

private:
    BigInt m_;
    long long e_ = 0;
    unsigned prec_ = 128;

    // sign-safe left shift (cpp_int disallows shifting negative values)
    static BigInt shl(const BigInt& v, unsigned s) {
        return v < 0 ? BigInt(-(BigInt(-v) << s)) : BigInt(v << s);
    }

    BigFloat with_prec(unsigned prec) const {
        BigFloat r = *this;
        r.prec_ = std::max(r.prec_, prec);
        return r;
    }

    void normalize() {
        if (m_ == 0) {
            e_ = 0;
            return;
        }
        unsigned bl = bit_length(m_);
        if (bl <= prec_) return;
        unsigned shift = bl - prec_;
        bool neg = m_ < 0;
        BigInt a = big_abs(m_);
        BigInt q = a >> shift;
        BigInt rem = a - (q << shift);
        if (rem * 2 >= (BigInt(1) << shift)) q += 1;
        if (bit_length(q) > prec_) {  // rounding carried into one extra bit
            q >>= 1;
            e_ += 1;
        }
        m_ = neg ? -q : q;
        e_ += shift;
    }
};

// Complex number over BigFloat.
struct ComplexFloat {
    BigFloat re, im;

    ComplexFloat() = default;
    ComplexFloat(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexFloat from_doubles(double r, double i, unsigned prec) {
        return {BigFloat::from_double(r, prec), BigFloat::from_double(i, prec)};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ComplexFloat conj() const { return {re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm2()); }

    friend ComplexFloat operator+(const ComplexFloat& a, const ComplexFloat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexFloat operator-(const ComplexFloat& a, const ComplexFloat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexFloat operator-(const ComplexFloat& a) { return {-a.re, -a.im}; }
    friend ComplexFloat operator*(const ComplexFloat& a, const ComplexFloat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexFloat operator*(const ComplexFloat& a, const BigFloat& s) {
        return {a.re * s, a.im * s};
    }
    friend ComplexFloat operator/(const ComplexFloat& a, const ComplexFloat& b) {
        BigFloat n2 = b.norm2();
        if (n2.is_zero()) throw DivisionByZero();
        ComplexFloat num = a * b.conj();
        return {num.re / n2, num.im / n2};
    }

    ComplexFloat& operator+=(const ComplexFloat& o) { return *this = *this + o; }
    ComplexFloat& operator-=(const ComplexFloat& o) { return *this = *this - o; }
    ComplexFloat& operator*=(const ComplexFloat& o) { return *this = *this * o; }
};

// beta as a BigFloat: refine the isolating interval below 2^-(prec+8), then
// take the midpoint.
inline BigFloat algebraic_to_bigfloat(const AlgebraicReal& beta, unsigned prec) {
    BigRational width(BigInt(1), BigInt(1) << (prec + 8));
    beta.refine_below_width(width);
    return BigFloat::from_rational(beta.midpoint(), prec);
}

}  // namespace betanum
