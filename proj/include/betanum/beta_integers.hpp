#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/digit_word.hpp"
#include "betanum/errors.hpp"
#include "betanum/expansion.hpp"
#include "betanum/field_element.hpp"
#include "betanum/renyi.hpp"
#include "betanum/words.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace betanum {

// The finitely many gap lengths between consecutive beta-integers,
// Delta_i = beta^i - sum_{j<=i} t_j beta^{i-j}, indexed by the gap letter.
struct DistanceSet {
    std::vector<FieldElement> deltas;
};

// Closed-form distances; construction verifies they form the right
// eigenvector of the substitution matrix for eigenvalue beta with
// Delta_0 = 1, are positive, and are mutually distinct.
inline DistanceSet distances(const AlgebraicReal& beta, const RenyiExpansion& d) {
    if (d.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    std::vector<int> t = d.all_digits();
    size_t n = t.size();
    FieldElement b = FieldElement::generator(beta);
    DistanceSet ds;
    ds.deltas.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement v = b.pow(static_cast<unsigned>(i));
        for (size_t j = 1; j <= i; ++j)
            v -= FieldElement::constant(beta, t[j - 1]) * b.pow(static_cast<unsigned>(i - j));
        ds.deltas.push_back(std::move(v));
    }
    // consistency checks (cheap: d is small)
    SubstMatrix M = substitution_matrix(canonical_substitution(d));
    for (size_t i = 0; i < n; ++i) {
        FieldElement row(beta);
        for (size_t j = 0; j < n; ++j)
            row += FieldElement::constant(beta, BigRational(M.m[i][j])) * ds.deltas[j];
        if (!(row == b * ds.deltas[i]))
            throw Error("distances: eigenvector identity failed");
    }
    if (!(ds.deltas[0] == FieldElement::constant(beta, 1)))
        throw Error("distances: Delta_0 != 1");
    for (size_t i = 0; i < n; ++i) {
        if (ds.deltas[i].sign() <= 0) throw Error("distances: nonpositive gap");
        for (size_t j = i + 1; j < n; ++j)
            if ((ds.deltas[i] - ds.deltas[j]).sign() == 0)
                throw Error("distances: gaps are not mutually distinct");
    }
    return ds;
}

// Exact enumeration of the nonnegative beta-integers: b_0 = 0 and
// b_{n+1} = b_n + Delta_{u_n}, with u the fixed point of the canonical
// substitution. Single-owner stateful; run independent streams in parallel.
class BetaIntegerStream {
public:
    struct Item {
        size_t n;
        FieldElement b;
        int gap_letter;  // u_n, the letter coding the gap to b_{n+1}
    };

    BetaIntegerStream(const AlgebraicReal& beta, const RenyiExpansion& d)
        : dist_(distances(beta, d)),
          word_(fixed_point(canonical_substitution(d))),
          b_(FieldElement(beta)) {}

    Item next() {
        int letter = word_.letter(n_);
        Item item{n_, b_, letter};
        b_ += dist_.deltas[static_cast<size_t>(letter)];
        ++n_;
        return item;
    }

    const DistanceSet& gaps() const { return dist_; }

private:
    DistanceSet dist_;
    WordStream word_;
    FieldElement b_;
    size_t n_ = 0;
};

inline BetaIntegerStream beta_integers(const AlgebraicReal& beta, const RenyiExpansion& d) {
    if (d.status == ExpansionStatus::Undetermined) throw NotParry();
    return BetaIntegerStream(beta, d);
}

inline BetaIntegerStream beta_integers(const AlgebraicReal& beta, int max_steps = 10000) {
    return beta_integers(beta, renyi_expansion(beta, max_steps));
}

// Greedy digits of an ordinary integer in the numeration system U.
struct UExpansion {
    std::vector<int> digits;  // most significant first; empty for n = 0

    std::string to_string() const { return render_digits(digits, false); }
};

// Greedy representation n = sum a_i U_i. U must be strictly increasing with
// U_0 = 1 and extend past n.
inline UExpansion n_to_expansion(const BigInt& n, const std::vector<BigInt>& U) {
    if (n < 0) throw Error("n_to_expansion: n must be nonnegative");
    if (U.empty() || U[0] != 1) throw Error("n_to_expansion: U must start with 1");
    if (n == 0) return {};
    if (U.back() <= n) throw Error("n_to_expansion: U does not extend past n");
    size_t k = 0;
    while (k + 1 < U.size() && U[k + 1] <= n) {
        if (U[k + 1] <= U[k]) throw Error("n_to_expansion: U must be strictly increasing");
        ++k;
    }
    UExpansion e;
    e.digits.reserve(k + 1);
    BigInt rem = n;
    for (size_t i = k + 1; i-- > 0;) {
        BigInt a = rem / U[i];
        e.digits.push_back(static_cast<int>(a));
        rem -= a * U[i];
    }
    return e;
}

// n = sum a_i U_i, exact.
inline BigInt expansion_to_n(const UExpansion& e, const std::vector<BigInt>& U) {
    if (e.digits.size() > U.size()) throw Error("expansion_to_n: not enough U entries");
    BigInt n(0);
    size_t k = e.digits.size();
    for (size_t i = 0; i < k; ++i) n += BigInt(e.digits[i]) * U[k - 1 - i];
    return n;
}

// b = sum a_i beta^i, exact. Digits are trusted (internally generated greedy
// digits); use the checked overload for externally supplied strings.
inline FieldElement b_from_digits(const UExpansion& e, const AlgebraicReal& beta) {
    FieldElement b = FieldElement::generator(beta);
    FieldElement v(beta);
    for (int a : e.digits) v = v * b + FieldElement::constant(beta, a);
    return v;
}

inline FieldElement b_from_digits_checked(const UExpansion& e, const AlgebraicReal& beta,
                                          const RenyiExpansion& dstar) {
    if (!parry_valid(PeriodicWord{e.digits, {}}, dstar)) throw InvalidDigits();
    return b_from_digits(e, beta);
}

}  // namespace betanum
