#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/errors.hpp"
#include "betanum/polynomial.hpp"
#include "betanum/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace betanum {

// Element of Q(beta) represented as a rational coefficient vector of length
// deg(f), reduced modulo the defining polynomial. Arithmetic runs in the
// residue ring Q[x]/(f); f may be reducible (then only division can fail).
class FieldElement {
public:
    explicit FieldElement(AlgebraicReal base)
        : base_(std::move(base)), c_(static_cast<size_t>(base_.degree()), BigRational(0)) {}

    FieldElement(AlgebraicReal base, std::vector<BigRational> coeffs) : base_(std::move(base)) {
        c_ = reduce(base_, std::move(coeffs));
    }

    static FieldElement constant(const AlgebraicReal& base, BigRational value) {
        std::vector<BigRational> c(static_cast<size_t>(base.degree()), BigRational(0));
        c[0] = std::move(value);
        return FieldElement(base, std::move(c), already_reduced{});
    }

    // beta itself (x reduced mod f; for deg-1 bases this is the rational root)
    static FieldElement generator(const AlgebraicReal& base) {
        std::vector<BigRational> c(2, BigRational(0));
        c[1] = BigRational(1);
        return FieldElement(base, std::move(c));
    }

    const AlgebraicReal& base() const { return base_; }
    const std::vector<BigRational>& coeffs() const { return c_; }

    bool rep_is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool rep_is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    const BigRational& rat_value() const { return c_[0]; }  // valid when rep_is_rational()

    friend FieldElement operator-(const FieldElement& a) {
        FieldElement r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_base(b);
        FieldElement r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_base(b);
        FieldElement r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_base(b);
        if (a.c_.empty()) return a;
        std::vector<BigRational> conv(2 * a.c_.size() - 1, BigRational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return FieldElement(a.base_, reduce(a.base_, std::move(conv)), already_reduced{});
    }
    friend FieldElement operator*(const FieldElement& a, const BigRational& s) {
        FieldElement r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend FieldElement operator*(const BigRational& s, const FieldElement& a) { return a * s; }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement pow(unsigned e) const {
        FieldElement r = constant(base_, BigRational(1));
        FieldElement b = *this;
        while (e > 0) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e > 0) b *= b;
        }
        return r;
    }

    // Multiplicative inverse in Q[x]/(f) by the extended Euclidean algorithm.
    // Throws DivisionByZero when the value is zero, NonInvertibleDivisor when
    // the value is nonzero but gcd(rep, f) is nonconstant (reducible f only).
    FieldElement inverse() const {
        if (rep_is_zero()) throw DivisionByZero();
        detail::QPoly r0 = detail::qp_from_int(base_.poly());
        detail::QPoly r1(c_.begin(), c_.end());
        detail::qp_trim(r1);
        detail::QPoly s0, s1{BigRational(1)};  // invariant: r_k == s_k * rep (mod f)
        while (!r1.empty()) {
            auto [q, rem] = detail::qp_divmod(r0, r1);
            detail::QPoly s2 = qp_sub(s0, qp_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (detail::qp_degree(r0) >= 1) {
            // gcd nonconstant: value is zero iff beta is a root of the gcd
            auto chain = detail::sturm_chain(r0);
            auto [lo, hi] = base_.interval();
            if (detail::sturm_count(chain, lo, hi) == 1) throw DivisionByZero();
            throw NonInvertibleDivisor();
        }
        BigRational lead = r0[0];
        std::vector<BigRational> inv(s0.begin(), s0.end());
        for (auto& c : inv) c /= lead;
        return FieldElement(base_, reduce(base_, std::move(inv)), already_reduced{});
    }

    // Exact sign of the value at beta. Decidable: a quick interval test, then
    // a zero certificate via gcd(rep, f) + Sturm, then bisection until the
    // interval evaluation excludes 0.
    int sign() const {
        if (rep_is_zero()) return 0;
        if (rep_is_rational()) return c_[0].sign();
        detail::QPoly rep(c_.begin(), c_.end());
        detail::qp_trim(rep);
        for (int round = 0;; ++round) {
            auto [lo, hi] = base_.interval();
            detail::RatInterval v = detail::qp_eval_interval(rep, {lo, hi});
            if (v.lo.sign() > 0) return 1;
            if (v.hi.sign() < 0) return -1;
            if (round == 0) {
                detail::QPoly g = detail::qp_gcd(rep, detail::qp_from_int(base_.poly()));
                if (detail::qp_degree(g) >= 1) {
                    auto chain = detail::sturm_chain(g);
                    if (detail::sturm_count(chain, lo, hi) == 1) return 0;
                }
            }
            base_.refine();
        }
    }

    bool is_zero() const { return sign() == 0; }

    // value equality (decidable even over reducible f)
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return (a - b).sign() == 0;
    }

    // The unique n with n <= value < n+1.
    BigInt floor_int() const {
        if (rep_is_rational()) return c_[0].floor();
        detail::QPoly rep(c_.begin(), c_.end());
        detail::qp_trim(rep);
        for (;;) {
            auto [lo, hi] = base_.interval();
            detail::RatInterval v = detail::qp_eval_interval(rep, {lo, hi});
            BigInt flo = v.lo.floor(), fhi = v.hi.floor();
            if (flo == fhi) return flo;
            if (fhi - flo == 1) {
                // value < fhi+1 already; decide value >= fhi exactly
                FieldElement diff = *this - constant(base_, BigRational(fhi));
                return diff.sign() >= 0 ? fhi : flo;
            }
            base_.refine();
        }
    }

    FieldElement frac() const { return *this - constant(base_, BigRational(floor_int())); }

    // Decimal string correct to within one unit in the last place.
    std::string to_decimal(unsigned digits) const {
        if (rep_is_rational()) return c_[0].to_decimal(digits);
        detail::QPoly rep(c_.begin(), c_.end());
        detail::qp_trim(rep);
        BigRational eps(BigInt(1), pow10(digits) * 4);
        for (;;) {
            auto [lo, hi] = base_.interval();
            detail::RatInterval v = detail::qp_eval_interval(rep, {lo, hi});
            if (v.width() < eps) {
                BigRational mid = (v.lo + v.hi) / BigRational(2);
                return mid.to_decimal(digits);
            }
            base_.refine();
        }
    }

    // Rendering as a polynomial in the base, e.g. "3b-4" or "1/2b^2+b".
    std::string to_poly_string(const std::string& var = "b") const {
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            const BigRational& a = c_[i];
            if (a.is_zero()) continue;
            bool neg = a.sign() < 0;
            BigRational mag = a.abs();
            if (out.empty()) {
                if (neg) out += '-';
            } else {
                out += neg ? '-' : '+';
            }
            bool write_coeff = !(mag == BigRational(1)) || i == 0;
            if (write_coeff) out += mag.to_string();
            if (i >= 1) {
                out += var;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    AlgebraicReal base_;
    std::vector<BigRational> c_;

    struct already_reduced {};
    FieldElement(AlgebraicReal base, std::vector<BigRational> coeffs, already_reduced)
        : base_(std::move(base)), c_(std::move(coeffs)) {}

    void check_base(const FieldElement& o) const {
        if (!base_.same_handle(o.base_)) throw BaseMismatch();
    }

    // Reduce an arbitrary-length coefficient vector modulo the monic f and
    // pad to length deg(f).
    static std::vector<BigRational> reduce(const AlgebraicReal& base,
                                           std::vector<BigRational> raw) {
        const auto& f = base.poly().coeffs();  // low-first, monic
        size_t deg = f.size() - 1;
        for (size_t i = raw.size(); i-- > deg;) {
            BigRational lead = raw[i];
            if (lead.is_zero()) continue;
            raw[i] = BigRational(0);
            for (size_t j = 0; j < deg; ++j) raw[i - deg + j] -= lead * BigRational(f[j]);
        }
        raw.resize(deg, BigRational(0));
        return raw;
    }

    static detail::QPoly qp_mul(const detail::QPoly& a, const detail::QPoly& b) {
        if (a.empty() || b.empty()) return {};
        detail::QPoly c(a.size() + b.size() - 1, BigRational(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        detail::qp_trim(c);
        return c;
    }

    static detail::QPoly qp_sub(const detail::QPoly& a, const detail::QPoly& b) {
        detail::QPoly c(std::max(a.size(), b.size()), BigRational(0));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.size()) c[i] += a[i];
            if (i < b.size()) c[i] -= b[i];
        }
        detail::qp_trim(c);
        return c;
    }
};

inline int sign(const FieldElement& a) { return a.sign(); }
inline BigInt floor_int(const FieldElement& a) { return a.floor_int(); }
inline FieldElement frac(const FieldElement& a) { return a.frac(); }
inline std::string to_decimal(const FieldElement& a, unsigned digits) {
    return a.to_decimal(digits);
}

// Reduce an integer polynomial modulo the defining polynomial of the base;
// the value of the result is p(beta).
inline FieldElement reduce_mod_base(const AlgebraicReal& base, const IntPolynomial& p) {
    std::vector<BigRational> raw;
    raw.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) raw.emplace_back(c);
    return FieldElement(base, std::move(raw));
}

}  // namespace betanum
