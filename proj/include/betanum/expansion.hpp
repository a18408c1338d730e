#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/digit_word.hpp"
#include "betanum/errors.hpp"
#include "betanum/field_element.hpp"
#include "betanum/renyi.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace betanum {

// Greedy expansion of a nonnegative element of Q(beta): integer digits
// x_k..x_0 (most significant first), then fractional preperiod and period.
// `truncated` is set when the fractional digit budget ran out before the
// remainders repeated.
struct BetaExpansion {
    std::vector<int> int_digits;  // {0} for values < 1 (including 0)
    std::vector<int> frac_preperiod;
    std::vector<int> frac_period;  // empty = terminating
    bool truncated = false;

    bool is_exact() const { return !truncated; }

    // "100•", "0•1", "1•(0001)^w"; digits space-separated above 9.
    std::string to_string() const {
        bool spaces = false;
        for (const auto* v : {&int_digits, &frac_preperiod, &frac_period})
            for (int d : *v)
                if (d > 9) spaces = true;
        std::string out = render_digits(int_digits, spaces);
        out += "\xE2\x80\xA2";  // bullet
        out += render_digits(frac_preperiod, spaces);
        if (!frac_period.empty()) out += "(" + render_digits(frac_period, spaces) + ")^w";
        if (truncated) out += "...";
        return out;
    }

    // The full digit word x_k x_{k-1} ... x_0 x_{-1} ... as an infinite word.
    PeriodicWord word() const {
        std::vector<int> pre = int_digits;
        pre.insert(pre.end(), frac_preperiod.begin(), frac_preperiod.end());
        return {std::move(pre), frac_period};
    }
};

// The greedy algorithm. Integer digits are found with a comparison ladder
// against j*beta^i (no division); fractional remainders are tracked exactly
// and a repeated remainder yields the period.
inline BetaExpansion greedy_expand(const FieldElement& x, int max_frac_digits = 256) {
    if (x.sign() < 0) throw NegativeInput();
    const AlgebraicReal& base = x.base();
    FieldElement b = FieldElement::generator(base);
    FieldElement one = FieldElement::constant(base, 1);
    int digit_max = static_cast<int>(b.floor_int());

    BetaExpansion e;
    FieldElement r = x;
    if ((x - one).sign() < 0) {
        e.int_digits = {0};
    } else {
        // beta^k <= x < beta^{k+1}
        std::vector<FieldElement> powers{one};
        while ((x - powers.back() * b).sign() >= 0) powers.push_back(powers.back() * b);
        for (size_t i = powers.size(); i-- > 0;) {
            int digit = 0;
            for (int j = 1; j <= digit_max; ++j) {
                if ((r - powers[i] * BigRational(j)).sign() < 0) break;
                digit = j;
            }
            e.int_digits.push_back(digit);
            if (digit > 0) r -= powers[i] * BigRational(digit);
        }
    }

    // fractional part, r in [0, 1)
    std::map<std::vector<BigRational>, size_t> seen;
    std::vector<int> fd;
    FieldElement s = r;
    for (;;) {
        if (s.is_zero()) {
            e.frac_preperiod = std::move(fd);
            break;
        }
        auto it = seen.find(s.coeffs());
        if (it != seen.end()) {
            size_t j = it->second;
            e.frac_preperiod.assign(fd.begin(), fd.begin() + j);
            e.frac_period.assign(fd.begin() + j, fd.end());
            break;
        }
        if (fd.size() >= static_cast<size_t>(max_frac_digits)) {
            e.frac_preperiod = std::move(fd);
            e.truncated = true;
            break;
        }
        seen.emplace(s.coeffs(), fd.size());
        FieldElement y = b * s;
        BigInt digit = y.floor_int();
        fd.push_back(static_cast<int>(digit));
        s = y - FieldElement::constant(base, BigRational(digit));
    }
    return e;
}

// Exact value of an expansion; the fractional period is summed as a
// geometric series, so beta^p - 1 must be invertible.
inline FieldElement digits_value(const BetaExpansion& e, const AlgebraicReal& base) {
    if (e.truncated) throw TruncatedExpansion();
    FieldElement b = FieldElement::generator(base);
    FieldElement v(base);
    for (int d : e.int_digits) v = v * b + FieldElement::constant(base, d);
    // tail value just after the radix point, built back to front:
    // acc = period sum, then acc -> (acc + digit) / beta per preperiod digit
    FieldElement acc(base);
    if (!e.frac_period.empty()) {
        FieldElement per_num(base);
        for (int d : e.frac_period) per_num = per_num * b + FieldElement::constant(base, d);
        acc = per_num / (b.pow(static_cast<unsigned>(e.frac_period.size())) -
                         FieldElement::constant(base, 1));
    }
    for (size_t i = e.frac_preperiod.size(); i-- > 0;)
        acc = (acc + FieldElement::constant(base, e.frac_preperiod[i])) / b;
    return v + acc;
}

// Admissibility: every suffix of the (zero-padded) digit word is strictly
// lexicographically smaller than d*_beta(1). Suffix classes repeat after
// preperiod + one period, so only finitely many comparisons are needed.
inline bool parry_valid(const PeriodicWord& digits, const RenyiExpansion& dstar) {
    if (dstar.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    PeriodicWord d{dstar.preperiod, dstar.period};
    size_t classes = digits.pre.size() + digits.period_len();
    for (size_t i = 0; i < classes; ++i)
        if (lex_compare(digits.suffix(i), d) >= 0) return false;
    return true;
}

enum class Ordering { Less, Equal, Greater };

// Radix order on exact expansions; agrees with the real order of the values.
inline Ordering radix_compare(const BetaExpansion& a, const BetaExpansion& b) {
    if (a.truncated || b.truncated) throw TruncatedExpansion();
    auto stripped = [](const std::vector<int>& v) {
        size_t i = 0;
        while (i < v.size() && v[i] == 0) ++i;
        return std::vector<int>(v.begin() + i, v.end());
    };
    std::vector<int> ia = stripped(a.int_digits), ib = stripped(b.int_digits);
    if (ia.size() != ib.size()) return ia.size() < ib.size() ? Ordering::Less : Ordering::Greater;
    std::vector<int> pa = ia, pb = ib;
    pa.insert(pa.end(), a.frac_preperiod.begin(), a.frac_preperiod.end());
    pb.insert(pb.end(), b.frac_preperiod.begin(), b.frac_preperiod.end());
    int c = lex_compare({std::move(pa), a.frac_period}, {std::move(pb), b.frac_period});
    return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
}

}  // namespace betanum
