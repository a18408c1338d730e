#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/digit_word.hpp"
#include "betanum/errors.hpp"
#include "betanum/field_element.hpp"
#include "betanum/polynomial.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace betanum {

enum class ExpansionStatus { Finite, EventuallyPeriodic, Undetermined };

// The expansion of unity d_beta(1): preperiod digits t_1..t_m and period
// digits t_{m+1}..t_{m+p}. Empty period = finite expansion. Detected
// expansions are canonicalized to minimal (m, p).
struct RenyiExpansion {
    std::vector<int> preperiod, period;
    ExpansionStatus status = ExpansionStatus::Undetermined;

    size_t preperiod_length() const { return preperiod.size(); }
    size_t period_length() const { return period.size(); }

    std::vector<int> all_digits() const {
        std::vector<int> d = preperiod;
        d.insert(d.end(), period.begin(), period.end());
        return d;
    }

    PeriodicWord word() const { return {preperiod, period}; }

    // "1 1" (finite), "2 (1)^w" (eventually periodic), "(1 0)^w" (pure period)
    std::string to_string() const {
        std::string out = render_digits(preperiod, true);
        if (!period.empty()) {
            if (!out.empty()) out += ' ';
            out += "(" + render_digits(period, true) + ")^w";
        }
        return out;
    }
};

enum class ParryClass { SimpleParry, NonSimpleParry, NotDetectedWithinBound };

// One application of the unity-expansion map: digit = floor(beta*state),
// next = frac(beta*state). Validates 0 <= state <= 1.
inline std::pair<int, FieldElement> t_step(const FieldElement& state) {
    if (state.sign() < 0 || (state - FieldElement::constant(state.base(), 1)).sign() > 0)
        throw StateOutOfRange();
    FieldElement y = FieldElement::generator(state.base()) * state;
    BigInt digit = y.floor_int();
    return {static_cast<int>(digit), y - FieldElement::constant(state.base(), BigRational(digit))};
}

namespace detail {

// Reduce a detected (preperiod, period) digit pair to minimal (m, p): first
// the shortest period among divisors, then absorb the preperiod tail into
// the period by rotation while the last digits coincide.
inline void minimize_preperiod_period(std::vector<int>& pre, std::vector<int>& per) {
    for (size_t d = 1; d <= per.size() / 2; ++d) {
        if (per.size() % d != 0) continue;
        bool tiles = true;
        for (size_t i = d; i < per.size() && tiles; ++i) tiles = per[i] == per[i % d];
        if (tiles) {
            per.resize(d);
            break;
        }
    }
    while (!pre.empty() && !per.empty() && pre.back() == per.back()) {
        std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
        pre.pop_back();
    }
}

}  // namespace detail

// Iterate the unity-expansion map from state 1 with exact state-repeat
// detection. Undetermined (with the digits collected so far) when max_steps
// is exhausted; that is a result, not an error.
inline RenyiExpansion renyi_expansion(const AlgebraicReal& beta, int max_steps = 10000) {
    if (!beta.greater_than_one()) throw Error("renyi_expansion: base must exceed 1");
    if (max_steps < 1) throw Error("renyi_expansion: max_steps must be positive");
    FieldElement b = FieldElement::generator(beta);
    FieldElement s = FieldElement::constant(beta, 1);
    std::map<std::vector<BigRational>, int> seen;
    seen.emplace(s.coeffs(), 0);
    std::vector<int> digits;
    for (int step = 0; step < max_steps; ++step) {
        FieldElement y = b * s;
        BigInt digit = y.floor_int();
        digits.push_back(static_cast<int>(digit));
        FieldElement next = y - FieldElement::constant(beta, BigRational(digit));
        if (next.is_zero()) return {std::move(digits), {}, ExpansionStatus::Finite};
        auto it = seen.find(next.coeffs());
        if (it != seen.end()) {
            int j = it->second;
            std::vector<int> pre(digits.begin(), digits.begin() + j);
            std::vector<int> per(digits.begin() + j, digits.end());
            detail::minimize_preperiod_period(pre, per);
            return {std::move(pre), std::move(per), ExpansionStatus::EventuallyPeriodic};
        }
        seen.emplace(next.coeffs(), step + 1);
        s = std::move(next);
    }
    return {std::move(digits), {}, ExpansionStatus::Undetermined};
}

// The largest infinite representation of 1: d itself when infinite, else
// (t_1 .. t_{m-1} (t_m - 1))^w. Deliberately not re-minimalized; the
// lexicographic comparator consumes it as an infinite word.
inline RenyiExpansion infinite_renyi(const RenyiExpansion& d) {
    if (d.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    if (d.status == ExpansionStatus::EventuallyPeriodic) return d;
    std::vector<int> per = d.preperiod;
    per.back() -= 1;
    return {{}, std::move(per), ExpansionStatus::EventuallyPeriodic};
}

// Monic integer polynomial with beta as a root, read off the digits:
// x^m - t_1 x^{m-1} - ... - t_m for finite d, and
// (x^p - 1)(x^m - t_1 x^{m-1} - ... - t_m) - t_{m+1} x^{p-1} - ... - t_{m+p}
// for eventually periodic d.
inline IntPolynomial parry_polynomial(const RenyiExpansion& d) {
    if (d.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    size_t m = d.preperiod.size();
    std::vector<BigInt> q(m + 1, BigInt(0));
    q[m] = 1;
    for (size_t i = 1; i <= m; ++i) q[m - i] = -BigInt(d.preperiod[i - 1]);
    IntPolynomial qp{std::move(q)};
    if (d.status == ExpansionStatus::Finite) return qp;
    size_t p = d.period.size();
    IntPolynomial xp_minus_1 = IntPolynomial::x_power(static_cast<unsigned>(p)) -
                               IntPolynomial(std::vector<BigInt>{BigInt(1)});
    std::vector<BigInt> tail(p, BigInt(0));
    for (size_t i = 1; i <= p; ++i) tail[p - i] = BigInt(d.period[i - 1]);
    return xp_minus_1 * qp - IntPolynomial(std::move(tail));
}

// As above, but also verifies exactly that the polynomial vanishes at beta.
inline IntPolynomial parry_polynomial(const RenyiExpansion& d, const AlgebraicReal& beta) {
    IntPolynomial p = parry_polynomial(d);
    if (reduce_mod_base(beta, p).sign() != 0)
        throw Error("parry polynomial does not vanish at the detected base");
    return p;
}

inline ParryClass classify(const RenyiExpansion& d) {
    switch (d.status) {
        case ExpansionStatus::Finite:
            return ParryClass::SimpleParry;
        case ExpansionStatus::EventuallyPeriodic:
            return ParryClass::NonSimpleParry;
        default:
            return ParryClass::NotDetectedWithinBound;
    }
}

inline std::string to_string(ParryClass c) {
    switch (c) {
        case ParryClass::SimpleParry:
            return "simple";
        case ParryClass::NonSimpleParry:
            return "non-simple";
        default:
            return "not-detected-within-bound";
    }
}

}  // namespace betanum
