#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/bigint.hpp"
#include "betanum/errors.hpp"
#include "betanum/field_element.hpp"
#include "betanum/polynomial.hpp"
#include "betanum/renyi.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace betanum {

// A substitution over {0, .., d-1}, given by the images of the letters.
struct Substitution {
    std::vector<std::vector<int>> images;

    int alphabet_size() const { return static_cast<int>(images.size()); }

    std::vector<int> apply(const std::vector<int>& word) const {
        std::vector<int> out;
        for (int a : word) {
            const auto& img = images[static_cast<size_t>(a)];
            out.insert(out.end(), img.begin(), img.end());
        }
        return out;
    }

    // One line per letter: "0 -> 01".
    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < images.size(); ++i) {
            if (i > 0) out += '\n';
            out += std::to_string(i) + " -> " + render_digits(images[i], false);
        }
        return out;
    }
};

// The canonical substitution of a detected expansion of unity:
// letter i -> 0^{t_{i+1}} (i+1) for all but the last letter; the last letter
// maps to 0^{t_m} (simple) or 0^{t_{m+p}} m (non-simple).
inline Substitution canonical_substitution(const RenyiExpansion& d) {
    if (d.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    std::vector<int> t = d.all_digits();
    size_t n = t.size();
    bool simple = d.status == ExpansionStatus::Finite;
    if (!simple && d.preperiod.empty())
        throw Error("canonical_substitution: empty preperiod in a non-simple expansion");
    Substitution s;
    s.images.resize(n);
    for (size_t i = 0; i < n; ++i) {
        s.images[i].assign(static_cast<size_t>(t[i]), 0);
        if (i + 1 < n)
            s.images[i].push_back(static_cast<int>(i) + 1);
        else if (!simple)
            s.images[i].push_back(static_cast<int>(d.preperiod.size()));
    }
    return s;
}

// d x d nonnegative integer matrix, (M)_{ij} = occurrences of letter j in
// the image of letter i (rows act on count row-vectors from the left).
struct SubstMatrix {
    std::vector<std::vector<BigInt>> m;

    int dim() const { return static_cast<int>(m.size()); }

    std::string to_string() const {
        std::string out = "[";
        for (size_t i = 0; i < m.size(); ++i) {
            out += i ? ",[" : "[";
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (j) out += ',';
                out += betanum::to_string(m[i][j]);
            }
            out += ']';
        }
        return out + "]";
    }
};

inline SubstMatrix substitution_matrix(const Substitution& s) {
    size_t d = s.images.size();
    SubstMatrix M;
    M.m.assign(d, std::vector<BigInt>(d, BigInt(0)));
    for (size_t i = 0; i < d; ++i)
        for (int a : s.images[i]) M.m[i][static_cast<size_t>(a)] += 1;
    return M;
}

// Primitivity: some power k <= (d-1)^2 + 1 of the boolean adjacency matrix
// is all-positive (Wielandt's bound caps the search).
inline bool is_primitive(const SubstMatrix& M) {
    size_t d = M.m.size();
    if (d == 0) return false;
    auto positive = [&](const std::vector<std::vector<bool>>& B) {
        for (const auto& row : B)
            for (bool v : row)
                if (!v) return false;
        return true;
    };
    std::vector<std::vector<bool>> A(d, std::vector<bool>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) A[i][j] = M.m[i][j] > 0;
    std::vector<std::vector<bool>> P = A;
    size_t cap = (d - 1) * (d - 1) + 1;
    for (size_t k = 1; k <= cap; ++k) {
        if (positive(P)) return true;
        std::vector<std::vector<bool>> N(d, std::vector<bool>(d, false));
        for (size_t i = 0; i < d; ++i)
            for (size_t l = 0; l < d; ++l)
                if (P[i][l])
                    for (size_t j = 0; j < d; ++j) N[i][j] = N[i][j] || A[l][j];
        P = std::move(N);
    }
    return false;
}

// Characteristic polynomial det(xI - M) by the Berkowitz algorithm:
// division-free, exact integer coefficients throughout.
inline IntPolynomial char_poly(const SubstMatrix& M) {
    size_t n = M.m.size();
    if (n == 0) return IntPolynomial(std::vector<BigInt>{BigInt(1)});
    // p holds coefficients highest-degree first for the leading r x r block
    std::vector<BigInt> p{BigInt(1), -M.m[0][0]};
    for (size_t r = 2; r <= n; ++r) {
        // Toeplitz column: c_0 = 1, c_1 = -a_rr, c_k = -(S A^{k-2} R)
        std::vector<BigInt> c(r + 1, BigInt(0));
        c[0] = 1;
        c[1] = -M.m[r - 1][r - 1];
        std::vector<BigInt> vec(r - 1);
        for (size_t j = 0; j < r - 1; ++j) vec[j] = M.m[r - 1][j];  // row S
        for (size_t k = 2; k <= r; ++k) {
            BigInt dot(0);
            for (size_t j = 0; j < r - 1; ++j) dot += vec[j] * M.m[j][r - 1];  // . R
            c[k] = -dot;
            if (k < r) {
                std::vector<BigInt> nxt(r - 1, BigInt(0));
                for (size_t j = 0; j < r - 1; ++j)
                    for (size_t l = 0; l < r - 1; ++l) nxt[l] += vec[j] * M.m[j][l];
                vec = std::move(nxt);
            }
        }
        std::vector<BigInt> np(r + 1, BigInt(0));
        for (size_t i = 0; i <= r; ++i)
            for (size_t j = 0; j < r && j <= i; ++j) np[i] += c[i - j] * p[j];
        p = std::move(np);
    }
    return IntPolynomial::from_high_first(std::move(p));
}

// Lazy prefix generator of the fixed point from letter 0, grown by applying
// the substitution to the whole buffer. Single-owner; create independent
// streams per consumer.
class WordStream {
public:
    explicit WordStream(Substitution s) : phi_(std::move(s)) {
        if (phi_.images.empty() || phi_.images[0].empty() || phi_.images[0][0] != 0 ||
            phi_.images[0].size() < 2)
            throw BadSeedLetter();
        for (const auto& img : phi_.images)
            if (img.empty()) throw BadSeedLetter();
        buf_ = {0};
    }

    int alphabet_size() const { return phi_.alphabet_size(); }

    int letter(size_t i) {
        ensure(i + 1);
        return buf_[i];
    }

    const std::vector<int>& prefix(size_t n) {
        ensure(n);
        return buf_;
    }

private:
    Substitution phi_;
    std::vector<int> buf_;

    void ensure(size_t n) {
        while (buf_.size() < n) buf_ = phi_.apply(buf_);
    }
};

inline WordStream fixed_point(const Substitution& s) { return WordStream(s); }

// Exact letter frequencies of the fixed point: beta^{m-1-i} / sum beta^j for
// a finite expansion, sigma_i (beta-1) / (beta^m (beta^p - 1)) otherwise.
inline std::vector<FieldElement> closed_frequencies(const AlgebraicReal& beta,
                                                    const RenyiExpansion& d) {
    if (d.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    FieldElement b = FieldElement::generator(beta);
    FieldElement one = FieldElement::constant(beta, 1);
    std::vector<FieldElement> rho;
    if (d.status == ExpansionStatus::Finite) {
        size_t m = d.preperiod.size();
        FieldElement denom(beta);
        for (size_t j = 0; j < m; ++j) denom += b.pow(static_cast<unsigned>(j));
        for (size_t i = 0; i < m; ++i)
            rho.push_back(b.pow(static_cast<unsigned>(m - 1 - i)) / denom);
    } else {
        size_t m = d.preperiod.size(), p = d.period.size();
        FieldElement bp1 = b.pow(static_cast<unsigned>(p)) - one;
        FieldElement denom = b.pow(static_cast<unsigned>(m)) * bp1;
        FieldElement bm1 = b - one;
        for (size_t i = 0; i < m + p; ++i) {
            FieldElement sigma = i < m ? b.pow(static_cast<unsigned>(m - 1 - i)) * bp1
                                       : b.pow(static_cast<unsigned>(m + p - 1 - i));
            rho.push_back(sigma * bm1 / denom);
        }
    }
    return rho;
}

// Letter counts over the length-n prefix, divided by n.
inline std::vector<BigRational> empirical_frequencies(WordStream& w, size_t n) {
    if (n < 1) throw Error("empirical_frequencies: n must be positive");
    size_t alphabet = static_cast<size_t>(w.alphabet_size());
    const std::vector<int>& pre = w.prefix(n);
    std::vector<BigInt> counts(alphabet, BigInt(0));
    for (size_t i = 0; i < n; ++i) counts[static_cast<size_t>(pre[i])] += 1;
    std::vector<BigRational> out;
    out.reserve(alphabet);
    for (const BigInt& c : counts) out.emplace_back(c, BigInt(n));
    return out;
}

// U_i = (1, 0, .., 0) M^i (1, .., 1)^T = |phi^i(0)|; returns U_0..U_n.
inline std::vector<BigInt> u_sequence(const SubstMatrix& M, size_t n) {
    size_t d = M.m.size();
    std::vector<BigInt> row(d, BigInt(0));
    row[0] = 1;
    std::vector<BigInt> U;
    U.reserve(n + 1);
    for (size_t i = 0;; ++i) {
        BigInt total(0);
        for (const BigInt& v : row) total += v;
        U.push_back(total);
        if (i == n) break;
        std::vector<BigInt> nxt(d, BigInt(0));
        for (size_t a = 0; a < d; ++a) {
            if (row[a] == 0) continue;
            for (size_t b2 = 0; b2 < d; ++b2) nxt[b2] += row[a] * M.m[a][b2];
        }
        row = std::move(nxt);
    }
    return U;
}

// U entries until the last one strictly exceeds bound.
inline std::vector<BigInt> u_sequence_exceeding(const SubstMatrix& M, const BigInt& bound) {
    std::vector<BigInt> U = u_sequence(M, 0);
    size_t d = M.m.size();
    std::vector<BigInt> row(d, BigInt(0));
    row[0] = 1;
    while (U.back() <= bound) {
        std::vector<BigInt> nxt(d, BigInt(0));
        for (size_t a = 0; a < d; ++a) {
            if (row[a] == 0) continue;
            for (size_t b2 = 0; b2 < d; ++b2) nxt[b2] += row[a] * M.m[a][b2];
        }
        row = std::move(nxt);
        BigInt total(0);
        for (const BigInt& v : row) total += v;
        U.push_back(total);
    }
    return U;
}

}  // namespace betanum
