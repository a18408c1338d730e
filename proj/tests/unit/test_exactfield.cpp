#include "betanum/betanum.hpp"

#include "../support/generators.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace betanum;
using testsupport::Rng;

namespace {

AlgebraicReal tau() { return preset_beta("tau"); }

// tau in a deliberately reducible residue ring: (x^2-x-1)(x+1) = x^3-2x-1
AlgebraicReal tau_in_cubic() {
    return AlgebraicReal(IntPolynomial::from_high_first({1, 0, -2, -1}), BigRational(3, 2),
                         BigRational(17, 10));
}

}  // namespace

TEST_CASE("rational normalization, parsing, floors, decimals") {
    CHECK(BigRational(6, -4) == BigRational(-3, 2));
    CHECK(BigRational::parse("-7/21") == BigRational(-1, 3));
    CHECK(BigRational::parse("5") == BigRational(5));
    CHECK(BigRational(-7, 2).floor() == -4);
    CHECK(BigRational(7, 2).floor() == 3);
    CHECK(BigRational(-6, 3).floor() == -2);
    CHECK(BigRational(1, 3).to_decimal(6) == "0.333333");
    CHECK(BigRational(2, 3).to_decimal(6) == "0.666667");
    CHECK(BigRational(-1, 8).to_decimal(2) == "-0.13");  // half away from zero
    CHECK(BigRational(0).to_decimal(6) == "0.000000");
    CHECK_THROWS_AS(BigRational(1, 0), DivisionByZero);
}

TEST_CASE("algebraic_real_new validates its contract") {
    CHECK_NOTHROW(algebraic_real_new(IntPolynomial::from_high_first({1, -1, -1}), BigRational(1),
                                     BigRational(2)));
    // degenerate linear root: the integer 2
    AlgebraicReal two = algebraic_real_new(IntPolynomial::from_high_first({1, -2}), BigRational(1),
                                           BigRational(3));
    CHECK(two.degree() == 1);
    CHECK(FieldElement::generator(two).floor_int() == 2);
    CHECK_THROWS_AS(algebraic_real_new(IntPolynomial::from_high_first({2, -1}), BigRational(0),
                                       BigRational(1)),
                    NotMonic);
    // (x-1)^2 has nonconstant gcd with its derivative
    CHECK_THROWS_AS(algebraic_real_new(IntPolynomial::from_high_first({1, -2, 1}), BigRational(0),
                                       BigRational(2)),
                    NotSquarefree);
    try {
        algebraic_real_new(IntPolynomial::from_high_first({1, -3, 2}), BigRational(0),
                           BigRational(3));
        CHECK(false);
    } catch (const RootCountNotOne& e) {
        CHECK(e.count == 2);
    }
}

TEST_CASE("sturm_root_count matches the closed-form roots") {
    IntPolynomial golden = IntPolynomial::from_high_first({1, -1, -1});
    // roots are (1 +- sqrt 5)/2 ~ 1.618 and -0.618
    CHECK(sturm_root_count(golden, BigRational(1), BigRational(2)) == 1);
    CHECK(sturm_root_count(golden, BigRational(-1), BigRational(0)) == 1);
    CHECK(sturm_root_count(golden, BigRational(-1), BigRational(2)) == 2);
    CHECK(sturm_root_count(IntPolynomial::from_high_first({1, 0, 1}), BigRational(-10),
                           BigRational(10)) == 0);
    // half-open convention: a root exactly at hi counts, at lo it does not
    IntPolynomial shifted = IntPolynomial::from_high_first({1, -2});
    CHECK(sturm_root_count(shifted, BigRational(1), BigRational(2)) == 1);
    CHECK(sturm_root_count(shifted, BigRational(2), BigRational(3)) == 0);
    CHECK_THROWS_AS(sturm_root_count(IntPolynomial::from_high_first({1, -2, 1}), BigRational(0),
                                     BigRational(2)),
                    NotSquarefree);
}

TEST_CASE("ring operations reduce modulo the defining polynomial") {
    AlgebraicReal t = tau();
    FieldElement b = FieldElement::generator(t);
    FieldElement one = FieldElement::constant(t, 1);
    CHECK((b * b).coeffs() == std::vector<BigRational>{BigRational(1), BigRational(1)});
    CHECK(b.pow(0) == one);
    AlgebraicReal t2 = preset_beta("tau2");
    FieldElement c = FieldElement::generator(t2);
    CHECK((c * c).coeffs() == std::vector<BigRational>{BigRational(-1), BigRational(3)});
}

TEST_CASE("division: defining relation, identity, and the worked constant") {
    AlgebraicReal t = tau();
    FieldElement b = FieldElement::generator(t);
    FieldElement one = FieldElement::constant(t, 1);
    CHECK((b + one) / b == b);
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        FieldElement a = testsupport::random_element(rng, t);
        CHECK(a / one == a);
    }
    FieldElement c = (b * BigRational(2) - one) / (b + one);
    CHECK(c.to_decimal(10) == "0.8541019662");
    CHECK_THROWS_AS(one / FieldElement(t), DivisionByZero);
}

TEST_CASE("division failures over a reducible residue ring") {
    AlgebraicReal base = tau_in_cubic();
    FieldElement one = FieldElement::constant(base, 1);
    // x + 1 vanishes at the spurious factor root -1: nonzero value, no inverse
    FieldElement nzd(base, {BigRational(1), BigRational(1), BigRational(0)});
    CHECK(nzd.sign() > 0);
    CHECK_THROWS_AS(one / nzd, NonInvertibleDivisor);
    // x^2 - x - 1 is a zero divisor that IS zero at beta
    FieldElement zd(base, {BigRational(-1), BigRational(-1), BigRational(1)});
    CHECK(zd.sign() == 0);
    CHECK_FALSE(zd.rep_is_zero());
    CHECK_THROWS_AS(one / zd, DivisionByZero);
}

TEST_CASE("sign decisions, including the gcd zero certificate") {
    AlgebraicReal t = tau();
    FieldElement b = FieldElement::generator(t);
    FieldElement one = FieldElement::constant(t, 1);
    CHECK((b - one).sign() == 1);
    CHECK((b * b - b - one).sign() == 0);
    CHECK((b * BigRational(2) - FieldElement::constant(t, 4)).sign() == -1);
    CHECK_THROWS_AS(b + FieldElement::generator(preset_beta("tau2")), BaseMismatch);
}

TEST_CASE("floor and frac, including exact integers hidden in higher-degree reps") {
    AlgebraicReal t = tau();
    FieldElement b = FieldElement::generator(t);
    CHECK(b.floor_int() == 1);
    CHECK(b.frac() == b - FieldElement::constant(t, 1));
    CHECK(FieldElement::constant(t, 3).floor_int() == 3);
    CHECK(FieldElement::constant(t, 3).frac().sign() == 0);
    AlgebraicReal t2 = preset_beta("tau2");
    CHECK(FieldElement::generator(t2).floor_int() == 2);
    // value is exactly 1 but the representative has degree 2
    AlgebraicReal base = tau_in_cubic();
    FieldElement hidden(base, {BigRational(0), BigRational(-1), BigRational(1)});  // x^2 - x
    CHECK(hidden.floor_int() == 1);
    CHECK(hidden.frac().sign() == 0);
    FieldElement neg(base, {BigRational(0), BigRational(1), BigRational(-1)});  // -(x^2 - x) = -1
    CHECK(neg.floor_int() == -1);
}

TEST_CASE("decimal rendering is correct to one ulp") {
    AlgebraicReal t = tau();
    FieldElement b = FieldElement::generator(t);
    CHECK(b.to_decimal(6) == "1.618034");
    CHECK(FieldElement(t).to_decimal(6) == "0.000000");
    FieldElement one = FieldElement::constant(t, 1);
    FieldElement c = (b * BigRational(2) - one) / (b + one);
    CHECK(c.to_decimal(6) == "0.854102");
    CHECK(c.to_decimal(12) == "0.854101966250");
}

TEST_CASE("property: exact ring laws on random elements") {
    Rng rng(101);
    AlgebraicReal bases[] = {tau(), preset_beta("tribonacci"), tau_in_cubic()};
    for (const AlgebraicReal& base : bases) {
        for (int i = 0; i < 340; ++i) {
            FieldElement a = testsupport::random_element(rng, base, 100, 40);
            FieldElement b = testsupport::random_element(rng, base, 100, 40);
            FieldElement c = testsupport::random_element(rng, base, 100, 40);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).rep_is_zero());
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("property: sign order is consistent with decimal rendering") {
    Rng rng(202);
    AlgebraicReal t = tau();
    for (int i = 0; i < 1000; ++i) {
        FieldElement a = testsupport::random_element(rng, t, 1000, 1000);
        FieldElement b = testsupport::random_element(rng, t, 1000, 1000);
        int s = (a - b).sign();
        std::string diff = (a - b).to_decimal(40);
        bool all_zero = diff.find_first_not_of("0.-") == std::string::npos;
        if (s == 0) {
            CHECK(all_zero);
        } else {
            CHECK_FALSE(all_zero);
            CHECK((s < 0) == (diff[0] == '-'));
        }
    }
}

TEST_CASE("property: division inverts multiplication") {
    Rng rng(303);
    AlgebraicReal t = tau();
    int done = 0;
    while (done < 500) {
        FieldElement a = testsupport::random_element(rng, t, 200, 60);
        FieldElement b = testsupport::random_element(rng, t, 200, 60);
        if (b.sign() == 0) continue;
        CHECK((a * b) / b == a);
        ++done;
    }
}

TEST_CASE("property: floor + frac identity with 0 <= frac < 1") {
    Rng rng(404);
    AlgebraicReal bases[] = {tau(), preset_beta("theta")};
    for (const AlgebraicReal& base : bases) {
        for (int i = 0; i < 250; ++i) {
            FieldElement a = testsupport::random_element(rng, base, 500, 80);
            FieldElement fr = a.frac();
            CHECK(FieldElement::constant(base, BigRational(a.floor_int())) + fr == a);
            CHECK(fr.sign() >= 0);
            CHECK((fr - FieldElement::constant(base, 1)).sign() < 0);
        }
    }
}
