#pragma once

#include "betanum/betanum.hpp"

#include <cstdint>
#include <vector>

namespace testsupport {

// exact rational from a fixed-point decimal string like "-0.618034"
inline betanum::BigRational rat_from_decimal(std::string dec) {
    bool neg = !dec.empty() && dec[0] == '-';
    if (neg) dec.erase(0, 1);
    auto dot = dec.find('.');
    betanum::BigRational q;
    if (dot == std::string::npos) {
        q = betanum::BigRational(betanum::parse_int(dec));
    } else {
        std::string digits = dec.substr(0, dot) + dec.substr(dot + 1);
        q = betanum::BigRational(betanum::parse_int(digits),
                                 betanum::pow10(static_cast<unsigned>(dec.size() - dot - 1)));
    }
    return neg ? -q : q;
}

// Deterministic splitmix64; fixed seeds keep every suite reproducible.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline betanum::BigRational random_rational(Rng& rng, long long num_mag = 1000,
                                            long long den_max = 1000) {
    return betanum::BigRational(betanum::BigInt(rng.range(-num_mag, num_mag)),
                                betanum::BigInt(rng.range(1, den_max)));
}

inline betanum::FieldElement random_element(Rng& rng, const betanum::AlgebraicReal& base,
                                            long long num_mag = 1000, long long den_max = 1000) {
    std::vector<betanum::BigRational> c;
    for (int i = 0; i < base.degree(); ++i) c.push_back(random_rational(rng, num_mag, den_max));
    return betanum::FieldElement(base, std::move(c));
}

// nonnegative element below beta^3, by rejection
inline betanum::FieldElement random_in_beta_cubed(Rng& rng, const betanum::AlgebraicReal& base) {
    betanum::FieldElement cube = betanum::FieldElement::generator(base).pow(3);
    for (;;) {
        betanum::FieldElement x = random_element(rng, base, 40, 12);
        if (x.sign() < 0) continue;
        if ((x - cube).sign() >= 0) continue;
        return x;
    }
}

}  // namespace testsupport
