#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/bigint.hpp"
#include "betanum/errors.hpp"
#include "betanum/polynomial.hpp"
#include "betanum/rational.hpp"

#include <string>
#include <vector>

namespace betanum {

// Either a named preset or an explicit polynomial + isolating interval.
struct BetaSpec {
    std::string preset;                     // empty when poly is given
    std::vector<BigInt> poly_high_first;    // defining polynomial, highest first
    BigRational lo, hi;
};

// tau, tau2, delta, theta, tribonacci, int:<k>
inline AlgebraicReal preset_beta(const std::string& name) {
    auto make = [](std::vector<BigInt> high_first, long long lo, long long hi) {
        return AlgebraicReal(IntPolynomial::from_high_first(std::move(high_first)),
                             BigRational(lo), BigRational(hi));
    };
    if (name == "tau") return make({1, -1, -1}, 1, 2);
    if (name == "tau2") return make({1, -3, 1}, 2, 3);
    if (name == "delta") return make({1, -2, -1}, 2, 3);
    if (name == "theta") return make({1, -4, 1}, 3, 4);
    if (name == "tribonacci") return make({1, -1, -1, -1}, 1, 2);
    if (name.rfind("int:", 0) == 0) {
        BigInt k(name.substr(4));
        if (k < 2) throw Error("preset int:<k> requires k >= 2");
        return AlgebraicReal(IntPolynomial::from_high_first({BigInt(1), -k}),
                             BigRational(k - 1), BigRational(k + 1));
    }
    throw Error("unknown preset '" + name + "'");
}

// Resolve a base description to a numeration base; enforces beta > 1.
inline AlgebraicReal make_beta(const BetaSpec& spec) {
    if (!spec.preset.empty()) return preset_beta(spec.preset);
    AlgebraicReal beta(IntPolynomial::from_high_first(spec.poly_high_first), spec.lo, spec.hi);
    if (!beta.greater_than_one()) throw Error("base must exceed 1");
    return beta;
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"tau", "tau2", "delta", "theta", "tribonacci"};
    return names;
}

}  // namespace betanum
