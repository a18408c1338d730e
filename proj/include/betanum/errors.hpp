#pragma once

#include <stdexcept>
#include <string>

namespace betanum {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotMonic : Error {
    NotMonic() : Error("polynomial is not monic") {}
};

struct NotSquarefree : Error {
    NotSquarefree() : Error("polynomial is not squarefree (gcd(f, f') is nonconstant)") {}
};

struct RootCountNotOne : Error {
    int count;
    explicit RootCountNotOne(int c)
        : Error("interval isolates " + std::to_string(c) + " roots, expected exactly 1"), count(c) {}
};

struct BaseMismatch : Error {
    BaseMismatch() : Error("field elements belong to different bases") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// gcd(rep, f) is nonconstant while the divisor's value is nonzero; possible
// only over a reducible defining polynomial.  Callers fall back to numerics.
struct NonInvertibleDivisor : Error {
    NonInvertibleDivisor() : Error("divisor is not invertible modulo the defining polynomial") {}
};

struct StateOutOfRange : Error {
    StateOutOfRange() : Error("iteration state lies outside [0, 1]") {}
};

struct UndeterminedInput : Error {
    UndeterminedInput() : Error("expansion status is Undetermined") {}
};

struct NegativeInput : Error {
    NegativeInput() : Error("input must be nonnegative") {}
};

struct TruncatedExpansion : Error {
    TruncatedExpansion() : Error("expansion was truncated before periodicity was decided") {}
};

struct InvalidDigits : Error {
    InvalidDigits() : Error("digit string violates the admissibility condition") {}
};

struct NotParry : Error {
    NotParry() : Error("base was not detected as a Parry number within the iteration budget") {}
};

struct RepeatedRoots : Error {
    RepeatedRoots() : Error("roots are not certified mutually distinct") {}
};

struct NonRealResult : Error {
    NonRealResult() : Error("imaginary residue exceeds tolerance; result should be real") {}
};

struct NotPisot : Error {
    NotPisot() : Error("bound requires a certified Pisot base") {}
};

struct NotQuadratic : Error {
    NotQuadratic() : Error("closed form applies to quadratic bases only") {}
};

struct PrecisionNotReached : Error {
    PrecisionNotReached() : Error("root refinement did not reach the requested residual") {}
};

struct BadSeedLetter : Error {
    BadSeedLetter() : Error("substitution has no fixed point from letter 0") {}
};

}  // namespace betanum
