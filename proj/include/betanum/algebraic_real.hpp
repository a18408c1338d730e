#pragma once

#include "betanum/errors.hpp"
#include "betanum/polynomial.hpp"
#include "betanum/rational.hpp"

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace betanum {

// A real algebraic number: a monic squarefree integer polynomial together
// with an isolating rational interval (lo, hi] containing exactly one root.
// Handles share state; the isolating interval only ever shrinks, and
// refinement is synchronized so elements over the same base can be used from
// several threads.
class AlgebraicReal {
public:
    AlgebraicReal(IntPolynomial f, BigRational lo, BigRational hi)
        : st_(std::make_shared<State>()) {
        if (!f.is_monic()) throw NotMonic();
        if (!is_squarefree(f)) throw NotSquarefree();
        st_->chain = detail::sturm_chain(detail::qp_from_int(f));
        int count = detail::sturm_count(st_->chain, lo, hi);
        if (count != 1) throw RootCountNotOne(count);
        st_->f = std::move(f);
        st_->lo = std::move(lo);
        st_->hi = std::move(hi);
    }

    const IntPolynomial& poly() const { return st_->f; }
    int degree() const { return st_->f.degree(); }

    std::pair<BigRational, BigRational> interval() const {
        std::lock_guard<std::mutex> lock(st_->mu);
        return {st_->lo, st_->hi};
    }

    BigRational midpoint() const {
        auto [lo, hi] = interval();
        return (lo + hi) / BigRational(2);
    }

    // One bisection step; keeps the half that contains the root.
    void refine() const {
        std::lock_guard<std::mutex> lock(st_->mu);
        refine_locked();
    }

    void refine_below_width(const BigRational& width) const {
        std::lock_guard<std::mutex> lock(st_->mu);
        while (st_->hi - st_->lo >= width) refine_locked();
    }

    // True iff the isolated root exceeds 1. (The root lies in (lo, hi]; it is
    // in (1, hi] exactly when it exceeds 1, and the half-open Sturm count is
    // 0 or 1 there.)
    bool greater_than_one() const {
        auto [lo, hi] = interval();
        if (lo >= BigRational(1)) return true;
        if (hi <= BigRational(1)) return false;
        return detail::sturm_count(st_->chain, BigRational(1), hi) == 1;
    }

    bool same_handle(const AlgebraicReal& o) const { return st_ == o.st_; }

private:
    struct State {
        IntPolynomial f;
        std::vector<detail::QPoly> chain;
        mutable std::mutex mu;
        BigRational lo, hi;
    };
    std::shared_ptr<State> st_;

    void refine_locked() const {
        BigRational mid = (st_->lo + st_->hi) / BigRational(2);
        if (detail::sturm_count(st_->chain, st_->lo, mid) == 1)
            st_->hi = mid;
        else
            st_->lo = mid;
    }
};

// Factory mirroring the construction contract; throws NotMonic,
// NotSquarefree, or RootCountNotOne.
inline AlgebraicReal algebraic_real_new(IntPolynomial f, BigRational lo, BigRational hi) {
    return AlgebraicReal(std::move(f), std::move(lo), std::move(hi));
}

}  // namespace betanum
