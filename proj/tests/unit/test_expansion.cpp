#include "betanum/betanum.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

#include <vector>

using namespace betanum;
using testsupport::Rng;

TEST_CASE("the three worked golden-mean expansions") {
    AlgebraicReal t = preset_beta("tau");
    FieldElement b = FieldElement::generator(t);
    FieldElement one = FieldElement::constant(t, 1);

    BetaExpansion e1 = greedy_expand(b + one);  // (3 + sqrt 5)/2
    CHECK(e1.int_digits == std::vector<int>{1, 0, 0});
    CHECK(e1.frac_preperiod.empty());
    CHECK(e1.frac_period.empty());
    CHECK(e1.to_string() == "100\xE2\x80\xA2");

    BetaExpansion e2 = greedy_expand(b - one);  // (sqrt 5 - 1)/2
    CHECK(e2.int_digits == std::vector<int>{0});
    CHECK(e2.frac_preperiod == std::vector<int>{1});
    CHECK(e2.to_string() == "0\xE2\x80\xA2" "1");

    FieldElement x3(t, {BigRational(1, 5), BigRational(3, 5)});  // (5 + 3 sqrt 5)/10
    BetaExpansion e3 = greedy_expand(x3);
    CHECK(e3.int_digits == std::vector<int>{1});
    CHECK(e3.frac_preperiod.empty());
    CHECK(e3.frac_period == std::vector<int>{0, 0, 0, 1});
    CHECK(e3.to_string() == "1\xE2\x80\xA2(0001)^w");

    BetaExpansion z = greedy_expand(FieldElement(t));
    CHECK(z.int_digits == std::vector<int>{0});
    CHECK(z.to_string() == "0\xE2\x80\xA2");

    CHECK_THROWS_AS(greedy_expand(-one), NegativeInput);
}

TEST_CASE("values of expansions, and the inverse direction of the fixtures") {
    AlgebraicReal t = preset_beta("tau");
    FieldElement b = FieldElement::generator(t);
    FieldElement one = FieldElement::constant(t, 1);

    BetaExpansion e1;
    e1.int_digits = {1, 0, 0};
    CHECK(digits_value(e1, t) == b + one);

    BetaExpansion e0;
    e0.int_digits = {0};
    CHECK(digits_value(e0, t).sign() == 0);

    BetaExpansion e2;
    e2.int_digits = {0};
    e2.frac_preperiod = {1};
    CHECK(digits_value(e2, t) == b - one);

    BetaExpansion trunc;
    trunc.int_digits = {1};
    trunc.truncated = true;
    CHECK_THROWS_AS(digits_value(trunc, t), TruncatedExpansion);
    CHECK_THROWS_AS(radix_compare(trunc, e1), TruncatedExpansion);
}

TEST_CASE("admissibility against the infinite expansion of unity") {
    RenyiExpansion dstar = infinite_renyi(renyi_expansion(preset_beta("tau")));
    CHECK_FALSE(parry_valid(PeriodicWord{{1, 1}, {}}, dstar));
    CHECK(parry_valid(PeriodicWord{{1, 0, 1}, {}}, dstar));
    // the word (10)^w itself is not strictly smaller than its own shift horizon
    CHECK_FALSE(parry_valid(PeriodicWord{{}, {1, 0}}, dstar));
    CHECK(parry_valid(PeriodicWord{{0}, {}}, dstar));
}

TEST_CASE("radix order matches the order of the real values") {
    AlgebraicReal t = preset_beta("tau");
    FieldElement b = FieldElement::generator(t);
    FieldElement one = FieldElement::constant(t, 1);
    BetaExpansion big = greedy_expand(b + one);
    BetaExpansion small = greedy_expand(b - one);
    CHECK(radix_compare(big, small) == Ordering::Greater);
    CHECK(radix_compare(big, big) == Ordering::Equal);
    BetaExpansion u = greedy_expand(one);
    BetaExpansion v = greedy_expand(b);
    CHECK(radix_compare(u, v) == Ordering::Less);  // 1 < tau, cross-checked below
    CHECK((one - b).sign() < 0);
}

TEST_CASE("infinite digit words compare by value, not by representation") {
    // 1(01)^w and 10(10)^w spell the same infinite word
    PeriodicWord a{{1}, {0, 1}};
    PeriodicWord b{{1, 0}, {1, 0}};
    CHECK(lex_compare(a, b) == 0);
    CHECK(lex_compare(b, a) == 0);
    // differing only deep inside the periodic tail
    PeriodicWord c{{1}, {0, 1, 0, 1, 0, 0}};
    CHECK(lex_compare(c, a) < 0);
    CHECK(lex_compare(a, c) > 0);
    // a finite word against its zero padding
    PeriodicWord f{{1, 0}, {}};
    PeriodicWord g{{1, 0}, {0}};
    CHECK(lex_compare(f, g) == 0);
    CHECK(f.suffix(5).at(0) == 0);
}

TEST_CASE("a too-small fractional budget sets the truncated flag") {
    AlgebraicReal t = preset_beta("tau");
    FieldElement x3(t, {BigRational(1, 5), BigRational(3, 5)});  // period 0001
    BetaExpansion cut = greedy_expand(x3, 3);
    CHECK(cut.truncated);
    CHECK(cut.frac_preperiod == std::vector<int>{0, 0, 0});
    CHECK(cut.frac_period.empty());
    CHECK(cut.to_string() == "1\xE2\x80\xA2" "000...");
    // the budget that just reaches the repeat still detects the period
    BetaExpansion full = greedy_expand(x3, 4);
    CHECK_FALSE(full.truncated);
    CHECK(full.frac_period == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("property: greedy round trip, admissibility, digit bound, order isomorphism") {
    Rng rng(909);
    for (const char* name : {"tau", "tau2"}) {
        AlgebraicReal beta = preset_beta(name);
        RenyiExpansion dstar = infinite_renyi(renyi_expansion(beta));
        int digit_cap = static_cast<int>(FieldElement::generator(beta).floor_int());
        std::vector<FieldElement> values;
        std::vector<BetaExpansion> expansions;
        int exact_roundtrips = 0;
        for (int i = 0; i < 250; ++i) {
            FieldElement x = testsupport::random_in_beta_cubed(rng, beta);
            BetaExpansion e = greedy_expand(x, 4096);
            for (int d : e.int_digits) CHECK(d <= digit_cap);
            for (int d : e.frac_preperiod) CHECK(d <= digit_cap);
            for (int d : e.frac_period) CHECK(d <= digit_cap);
            CHECK(parry_valid(e.word(), dstar));
            if (!e.truncated) {
                CHECK(digits_value(e, beta) == x);
                ++exact_roundtrips;
                values.push_back(x);
                expansions.push_back(e);
            }
        }
        CHECK(exact_roundtrips >= 200);  // the budget rarely truncates at these denominators
        size_t pairs = 0;
        for (size_t i = 0; i + 1 < values.size() && pairs < 260; ++i, ++pairs) {
            int s = (values[i] - values[i + 1]).sign();
            Ordering o = radix_compare(expansions[i], expansions[i + 1]);
            CHECK(o == (s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal)));
        }
        CHECK(pairs >= 190);  // ~250 pairs per base, > 500 across the suite
    }
}

TEST_CASE("every greedy expansion of a beta-integer is admissible") {
    AlgebraicReal t = preset_beta("tau");
    RenyiExpansion d = renyi_expansion(t);
    RenyiExpansion dstar = infinite_renyi(d);
    BetaIntegerStream s = beta_integers(t, d);
    for (int n = 0; n < 200; ++n) {
        auto item = s.next();
        BetaExpansion e = greedy_expand(item.b);
        CHECK(e.frac_preperiod.empty());
        CHECK(e.frac_period.empty());
        CHECK(parry_valid(e.word(), dstar));
    }
}
