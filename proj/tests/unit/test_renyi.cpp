#include "betanum/betanum.hpp"

#include <doctest.h>

#include <vector>

using namespace betanum;

namespace {

// digit word of d, as an infinite fractional tail ".t_1 t_2 ..." whose value
// must be exactly 1
FieldElement unity_value(const AlgebraicReal& beta, const RenyiExpansion& d) {
    BetaExpansion e;
    e.int_digits = {0};
    e.frac_preperiod = d.preperiod;
    e.frac_period = d.period;
    return digits_value(e, beta);
}

}  // namespace

TEST_CASE("t_step: the unity-expansion map") {
    AlgebraicReal t = preset_beta("tau");
    FieldElement one = FieldElement::constant(t, 1);
    auto [d1, s1] = t_step(one);
    CHECK(d1 == 1);
    CHECK(s1 == FieldElement::generator(t) - one);
    auto [d2, s2] = t_step(s1);
    CHECK(d2 == 1);
    CHECK(s2.sign() == 0);

    AlgebraicReal two = preset_beta("int:2");
    auto [d3, s3] = t_step(FieldElement::constant(two, 1));
    CHECK(d3 == 2);
    CHECK(s3.sign() == 0);

    CHECK_THROWS_AS(t_step(FieldElement::constant(t, 2)), StateOutOfRange);
    CHECK_THROWS_AS(t_step(FieldElement::constant(t, BigRational(-1, 2))), StateOutOfRange);
}

TEST_CASE("detection on the worked bases") {
    AlgebraicReal t = preset_beta("tau");
    RenyiExpansion d = renyi_expansion(t);
    CHECK(d.status == ExpansionStatus::Finite);
    CHECK(d.preperiod == std::vector<int>{1, 1});
    CHECK(d.period.empty());

    RenyiExpansion d2 = renyi_expansion(preset_beta("tau2"));
    CHECK(d2.status == ExpansionStatus::EventuallyPeriodic);
    CHECK(d2.preperiod == std::vector<int>{2});
    CHECK(d2.period == std::vector<int>{1});

    // 2 + sqrt 3: T(1) = beta - 3 is a fixed point of the map
    RenyiExpansion dt = renyi_expansion(preset_beta("theta"));
    CHECK(dt.preperiod == std::vector<int>{3});
    CHECK(dt.period == std::vector<int>{2});

    RenyiExpansion dd = renyi_expansion(preset_beta("delta"));
    CHECK(dd.status == ExpansionStatus::Finite);
    CHECK(dd.preperiod == std::vector<int>{2, 1});

    RenyiExpansion dtri = renyi_expansion(preset_beta("tribonacci"));
    CHECK(dtri.preperiod == std::vector<int>{1, 1, 1});

    RenyiExpansion di = renyi_expansion(preset_beta("int:2"));
    CHECK(di.status == ExpansionStatus::Finite);
    CHECK(di.preperiod == std::vector<int>{2});
}

TEST_CASE("budget exhaustion is a result, not an error") {
    AlgebraicReal sqrt2(IntPolynomial::from_high_first({1, 0, -2}), BigRational(1), BigRational(2));
    RenyiExpansion d = renyi_expansion(sqrt2, 25);
    CHECK(d.status == ExpansionStatus::Undetermined);
    CHECK(d.preperiod.size() == 25);
    CHECK(classify(d) == ParryClass::NotDetectedWithinBound);
}

TEST_CASE("the largest infinite representation of unity") {
    RenyiExpansion d = renyi_expansion(preset_beta("tau"));
    RenyiExpansion star = infinite_renyi(d);
    CHECK(star.preperiod.empty());
    CHECK(star.period == std::vector<int>{1, 0});

    RenyiExpansion d2 = renyi_expansion(preset_beta("int:2"));
    CHECK(infinite_renyi(d2).period == std::vector<int>{1});

    RenyiExpansion dn = renyi_expansion(preset_beta("tau2"));
    RenyiExpansion sn = infinite_renyi(dn);
    CHECK(sn.preperiod == dn.preperiod);
    CHECK(sn.period == dn.period);

    RenyiExpansion und;
    CHECK_THROWS_AS(infinite_renyi(und), UndeterminedInput);
}

TEST_CASE("defining polynomials read off the digits") {
    AlgebraicReal t = preset_beta("tau");
    CHECK(parry_polynomial(renyi_expansion(t), t) == IntPolynomial::from_high_first({1, -1, -1}));
    AlgebraicReal t2 = preset_beta("tau2");
    CHECK(parry_polynomial(renyi_expansion(t2), t2) == IntPolynomial::from_high_first({1, -3, 1}));
    // three ones: x^3 - x^2 - x - 1, root-checked against the tribonacci base
    AlgebraicReal tri = preset_beta("tribonacci");
    IntPolynomial p = parry_polynomial(renyi_expansion(tri), tri);
    CHECK(p == IntPolynomial::from_high_first({1, -1, -1, -1}));
    CHECK(reduce_mod_base(tri, p).sign() == 0);
    RenyiExpansion und;
    CHECK_THROWS_AS(parry_polynomial(und), UndeterminedInput);
}

TEST_CASE("classification") {
    CHECK(classify(renyi_expansion(preset_beta("tau"))) == ParryClass::SimpleParry);
    CHECK(classify(renyi_expansion(preset_beta("tau2"))) == ParryClass::NonSimpleParry);
}

TEST_CASE("invariant: the digit tail of unity sums to exactly 1") {
    for (const char* name : {"tau", "tau2", "delta", "theta", "tribonacci", "int:2"}) {
        AlgebraicReal beta = preset_beta(name);
        RenyiExpansion d = renyi_expansion(beta);
        CHECK(unity_value(beta, d) == FieldElement::constant(beta, 1));
    }
}

TEST_CASE("invariant: digits never exceed the leading digit") {
    for (const char* name : {"tau", "tau2", "delta", "theta", "tribonacci", "int:2"}) {
        RenyiExpansion d = renyi_expansion(preset_beta(name));
        int t1 = d.preperiod.at(0);
        for (int digit : d.all_digits()) CHECK(digit <= t1);
        CHECK(t1 >= 1);
    }
}

TEST_CASE("invariant: detected (m, p) is minimal and detection is fast on the presets") {
    for (const char* name : {"tau", "tau2", "delta", "theta", "tribonacci", "int:2"}) {
        RenyiExpansion d = renyi_expansion(preset_beta(name), 10);
        CHECK(d.status != ExpansionStatus::Undetermined);  // Pisot presets terminate quickly
        if (d.status != ExpansionStatus::EventuallyPeriodic) continue;
        // no proper divisor of the period tiles it
        for (size_t q = 1; q < d.period.size(); ++q) {
            if (d.period.size() % q != 0) continue;
            bool tiles = true;
            for (size_t i = q; i < d.period.size(); ++i) tiles = tiles && d.period[i] == d.period[i % q];
            CHECK_FALSE(tiles);
        }
        // the preperiod tail cannot be absorbed into the period
        if (!d.preperiod.empty()) CHECK(d.preperiod.back() != d.period.back());
    }
}

TEST_CASE("canonicalization to minimal preperiod and period") {
    // period shrinks to its primitive tile
    std::vector<int> pre{3}, per{1, 2, 1, 2};
    detail::minimize_preperiod_period(pre, per);
    CHECK(pre == std::vector<int>{3});
    CHECK(per == std::vector<int>{1, 2});
    // preperiod tail rotates into the period, repeatedly
    pre = {3, 2, 1};
    per = {2, 1};
    detail::minimize_preperiod_period(pre, per);
    CHECK(pre == std::vector<int>{3});
    CHECK(per == std::vector<int>{2, 1});
    // both reductions in sequence
    pre = {2, 1};
    per = {1, 1};
    detail::minimize_preperiod_period(pre, per);
    CHECK(pre == std::vector<int>{2});
    CHECK(per == std::vector<int>{1});
}

TEST_CASE("digit-string rendering") {
    RenyiExpansion d = renyi_expansion(preset_beta("tau"));
    CHECK(d.to_string() == "1 1");
    CHECK(infinite_renyi(d).to_string() == "(1 0)^w");
    CHECK(renyi_expansion(preset_beta("tau2")).to_string() == "2 (1)^w");
}
