#pragma once

#include "betanum/bigint.hpp"
#include "betanum/errors.hpp"
#include "betanum/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace betanum {

// Integer polynomial. Coefficients are stored lowest-degree first; external
// I/O (construction from CLI input, to_string) is highest-first.
class IntPolynomial {
public:
    IntPolynomial() = default;  // zero polynomial
    explicit IntPolynomial(std::vector<BigInt> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
        trim();
    }

    static IntPolynomial from_high_first(std::vector<BigInt> coeffs) {
        std::vector<BigInt> low(coeffs.rbegin(), coeffs.rend());
        return IntPolynomial(std::move(low));
    }

    // x^k
    static IntPolynomial x_power(unsigned k) {
        std::vector<BigInt> c(k + 1, BigInt(0));
        c[k] = 1;
        return IntPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt coeff(size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return IntPolynomial();
        std::vector<BigInt> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(i);
        return IntPolynomial(std::move(d));
    }

    BigRational eval(const BigRational& x) const {
        BigRational r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + BigRational(c_[i]);
        return r;
    }

    BigInt eval_int(const BigInt& x) const {
        BigInt r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // Human-readable rendering, highest-degree first: "x^2-x-1".
    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const BigInt& a = c_[i];
            if (a == 0) continue;
            bool neg = a < 0;
            BigInt mag = big_abs(a);
            if (out.empty()) {
                if (neg) out += '-';
            } else {
                out += neg ? '-' : '+';
            }
            bool write_coeff = (mag != 1) || (i == 0);
            if (write_coeff) out += betanum::to_string(mag);
            if (i >= 1) {
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<BigInt> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

namespace detail {

// Rational-coefficient polynomial, lowest-degree first, trimmed.
using QPoly = std::vector<BigRational>;

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int qp_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qp_from_int(const IntPolynomial& f) {
    QPoly p;
    p.reserve(f.coeffs().size());
    for (const BigInt& c : f.coeffs()) p.emplace_back(c);
    return p;
}

inline BigRational qp_eval(const QPoly& p, const BigRational& x) {
    BigRational r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline QPoly qp_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * BigRational(BigInt(i));
    return d;
}

// quotient and remainder of a by b, b nonzero
inline std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    qp_trim(a);
    if (b.empty()) throw DivisionByZero();
    QPoly q;
    int db = qp_degree(b);
    if (qp_degree(a) >= db) q.assign(a.size() - b.size() + 1, BigRational(0));
    while (qp_degree(a) >= db) {
        int da = qp_degree(a);
        BigRational f = a[da] / b[db];
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        a.pop_back();  // leading term cancels exactly
        qp_trim(a);
    }
    return {std::move(q), std::move(a)};
}

inline QPoly qp_rem(QPoly a, const QPoly& b) { return qp_divmod(std::move(a), b).second; }

// monic gcd
inline QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        QPoly r = qp_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        BigRational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

struct RatInterval {
    BigRational lo, hi;
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    BigRational width() const { return hi - lo; }
};

inline RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    BigRational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    BigRational lo = p1, hi = p1;
    for (const BigRational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return {std::move(lo), std::move(hi)};
}

// Horner evaluation of p over the interval x.
inline RatInterval qp_eval_interval(const QPoly& p, const RatInterval& x) {
    RatInterval r{BigRational(0), BigRational(0)};
    for (size_t i = p.size(); i-- > 0;) {
        r = iv_mul(r, x);
        r.lo += p[i];
        r.hi += p[i];
    }
    return r;
}

// Sturm chain: s0 = f, s1 = f', s_{k+1} = -rem(s_{k-1}, s_k), until zero.
inline std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f);
    QPoly d = qp_derivative(f);
    qp_trim(d);
    if (!d.empty()) chain.push_back(std::move(d));
    while (chain.size() >= 2 && !chain.back().empty() && qp_degree(chain.back()) >= 1) {
        QPoly r = qp_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

// Sign variations of the chain at x, zeros dropped.
inline int sign_variations(const std::vector<QPoly>& chain, const BigRational& x) {
    int vars = 0, last = 0;
    for (const QPoly& p : chain) {
        int s = qp_eval(p, x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

// Number of distinct roots of the (squarefree) chain's polynomial in (lo, hi].
// With zeros dropped from the sign sequences, V(lo) - V(hi) counts the
// half-open interval: a root at hi is counted, a root at lo is not.
inline int sturm_count(const std::vector<QPoly>& chain, const BigRational& lo,
                       const BigRational& hi) {
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace detail

inline bool is_squarefree(const IntPolynomial& f) {
    if (f.degree() < 1) return false;
    detail::QPoly g = detail::qp_gcd(detail::qp_from_int(f), detail::qp_from_int(f.derivative()));
    return detail::qp_degree(g) == 0;
}

// Exact number of real roots of squarefree f in (lo, hi].
inline int sturm_root_count(const IntPolynomial& f, const BigRational& lo, const BigRational& hi) {
    if (!is_squarefree(f)) throw NotSquarefree();
    auto chain = detail::sturm_chain(detail::qp_from_int(f));
    return detail::sturm_count(chain, lo, hi);
}

}  // namespace betanum
