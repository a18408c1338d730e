#pragma once

#include "betanum/algebraic_real.hpp"
#include "betanum/beta_integers.hpp"
#include "betanum/bigfloat.hpp"
#include "betanum/errors.hpp"
#include "betanum/field_element.hpp"
#include "betanum/renyi.hpp"
#include "betanum/roots.hpp"
#include "betanum/words.hpp"

#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace betanum {

namespace detail {

inline BigFloat evaluate_at(const FieldElement& a, const BigFloat& beta_value) {
    BigFloat r(beta_value.prec());
    const auto& c = a.coeffs();
    for (size_t i = c.size(); i-- > 0;)
        r = r * beta_value + BigFloat::from_rational(c[i], beta_value.prec());
    return r;
}

}  // namespace detail

// The scaling constant c_beta = lim b_n / n = (beta-1) p'(beta) / (beta^l
// (beta^L - 1)) with (l, L) = (0, m) for a finite expansion of unity and
// (m, p) otherwise. Exact whenever the denominator is invertible in the
// residue ring; the numeric value is always carried.
struct AsymptoticConstants {
    std::optional<FieldElement> c_exact;  // absent only after a NonInvertibleDivisor fallback
    BigFloat c_numeric;
    int l = 0, L = 0;
    FieldElement p_prime_at_beta;
    IntPolynomial parry;
    AlgebraicReal beta;
    unsigned prec_bits = 128;

    bool exact_available() const { return c_exact.has_value(); }

    AsymptoticConstants(FieldElement p_prime, IntPolynomial parry_poly, AlgebraicReal base)
        : p_prime_at_beta(std::move(p_prime)), parry(std::move(parry_poly)), beta(std::move(base)) {}
};

inline AsymptoticConstants c_beta(const AlgebraicReal& beta, const RenyiExpansion& d,
                                  unsigned prec_bits = 128) {
    if (d.status == ExpansionStatus::Undetermined) throw UndeterminedInput();
    IntPolynomial parry = parry_polynomial(d, beta);
    FieldElement p_prime = reduce_mod_base(beta, parry.derivative());
    AsymptoticConstants cc(p_prime, parry, beta);
    cc.prec_bits = prec_bits;
    bool simple = d.status == ExpansionStatus::Finite;
    cc.l = simple ? 0 : static_cast<int>(d.preperiod.size());
    cc.L = simple ? static_cast<int>(d.preperiod.size()) : static_cast<int>(d.period.size());

    FieldElement b = FieldElement::generator(beta);
    FieldElement one = FieldElement::constant(beta, 1);
    FieldElement num = (b - one) * p_prime;
    FieldElement den = b.pow(static_cast<unsigned>(cc.l)) *
                       (b.pow(static_cast<unsigned>(cc.L)) - one);
    try {
        FieldElement c = num / den;
        if (c.sign() <= 0 || (c - one).sign() > 0)
            throw Error("c_beta: value outside (0, 1]");
        cc.c_numeric = detail::evaluate_at(c, algebraic_to_bigfloat(beta, prec_bits));
        cc.c_exact = std::move(c);
    } catch (const NonInvertibleDivisor&) {
        BigFloat bf = algebraic_to_bigfloat(beta, prec_bits);
        cc.c_numeric = detail::evaluate_at(num, bf) / detail::evaluate_at(den, bf);
    }
    return cc;
}

// Product form of the same limit over the conjugates (Vandermonde route):
// (beta-1)/(beta^l (beta^L - 1)) * prod_j (beta - beta_j).
inline BigFloat c_beta_product(const BigFloat& beta_numeric, const ConjugateSet& roots, int l,
                               int L) {
    if (!roots.distinct) throw RepeatedRoots();
    unsigned prec = beta_numeric.prec();
    BigFloat one = BigFloat::from_int(1, prec);
    ComplexFloat prod{one, BigFloat(prec)};
    ComplexFloat bc{beta_numeric, BigFloat(prec)};
    for (const ComplexFloat& r : roots.roots) prod = prod * (bc - r);
    BigFloat bl = one, bL = one;
    for (int i = 0; i < l; ++i) bl = bl * beta_numeric;
    for (int i = 0; i < L; ++i) bL = bL * beta_numeric;
    BigFloat scale = (beta_numeric - one) / (bl * (bL - one));
    ComplexFloat c = prod * scale;
    return c.re;
}

enum class Pisot { Yes, No, Unknown };

struct PisotResult {
    Pisot verdict = Pisot::Unknown;
    BigFloat margin;  // min over conjugates of 1 - |beta_j| - radius_j
};

// Certified comparison of every conjugate modulus against 1, using
// residual-derived error radii. Unknown when some disk straddles the circle.
inline PisotResult is_pisot(const IntPolynomial& p, const ConjugateSet& roots) {
    unsigned prec = roots.perron.prec() ? roots.perron.prec() : 128;
    PisotResult res;
    BigFloat one = BigFloat::from_int(1, prec);
    if (roots.roots.empty()) {
        res.verdict = Pisot::Yes;
        res.margin = one;
        return res;
    }
    std::vector<BigFloat> cf, cfd;
    IntPolynomial pd = p.derivative();
    for (const BigInt& c : p.coeffs()) cf.push_back(BigFloat::from_int(c, prec));
    for (const BigInt& c : pd.coeffs()) cfd.push_back(BigFloat::from_int(c, prec));
    BigFloat deg = BigFloat::from_int(p.degree(), prec);
    bool all_inside = true, some_outside = false, first = true;
    for (const ComplexFloat& z : roots.roots) {
        BigFloat mod = z.abs();
        BigFloat dv = detail::poly_eval(cfd, z).abs();
        if (dv.is_zero()) return {Pisot::Unknown, BigFloat(prec)};
        BigFloat radius = detail::poly_eval(cf, z).abs() / dv * deg;
        BigFloat gap = one - mod - radius;  // certified inside iff > 0
        if (first || gap < res.margin) res.margin = gap;
        first = false;
        if (!(gap.sign() > 0)) all_inside = false;
        if ((mod - radius - one).sign() > 0) some_outside = true;
    }
    res.verdict = all_inside ? Pisot::Yes : (some_outside ? Pisot::No : Pisot::Unknown);
    return res;
}

enum class Verdict { Bounded, UnboundedPredicted, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Bounded:
            return "Bounded";
        case Verdict::UnboundedPredicted:
            return "UnboundedPredicted";
        default:
            return "Unknown";
    }
}

// Boundedness of (b_n - c_beta n) holds exactly when beta is Pisot and its
// Parry polynomial is minimal. Minimality is proxied by equality with the
// user-supplied defining polynomial; no factorization is attempted, so
// Unknown is the honest fallback.
inline Verdict boundedness_predicted(const RenyiExpansion& d, const IntPolynomial& parry,
                                     const IntPolynomial& defining, const ConjugateSet& roots) {
    if (d.status != ExpansionStatus::Undetermined && !(parry_polynomial(d) == parry))
        throw Error("boundedness_predicted: parry polynomial does not match the expansion");
    PisotResult pr = is_pisot(parry, roots);
    if (pr.verdict == Pisot::No) return Verdict::UnboundedPredicted;
    if (pr.verdict == Pisot::Yes && parry == defining && roots.distinct) return Verdict::Bounded;
    return Verdict::Unknown;
}

// b_n - c_beta n for a single n via the greedy digits (random access form).
inline FieldElement drift_at(const AlgebraicReal& beta, const AsymptoticConstants& cc,
                             const std::vector<BigInt>& U, const BigInt& n) {
    if (!cc.exact_available()) throw NonInvertibleDivisor();
    FieldElement b_n = b_from_digits(n_to_expansion(n, U), beta);
    return b_n - *cc.c_exact * BigRational(n);
}

// Conjugate-sum form of the same drift:
//   b_n - c_beta n = -c_beta * sum_j z_j / p'(beta_j) * w_j,
// with z_j = sum a_i beta_j^i and w_j = 1 + beta_j + .. + beta_j^{m-1}
// (finite case) or beta_j^m (1 + .. + beta_j^{p-1}) (eventually periodic
// case). The uniform sign replaces the alternating one printed in some
// derivations of the Vandermonde inverse; it is the convention this library
// ships, calibrated exactly against the direct drift.
inline BigFloat drift_via_conjugates(const UExpansion& digits, const ConjugateSet& roots,
                                     const AsymptoticConstants& cc, const RenyiExpansion& d,
                                     const BigRational& imag_tol = BigRational(BigInt(1),
                                                                               pow10(18))) {
    if (!roots.distinct) throw RepeatedRoots();
    unsigned prec = cc.c_numeric.prec();
    std::vector<BigFloat> cfd;
    IntPolynomial pd = cc.parry.derivative();
    for (const BigInt& c : pd.coeffs()) cfd.push_back(BigFloat::from_int(c, prec));
    bool simple = d.status == ExpansionStatus::Finite;
    size_t m = d.preperiod.size(), p = d.period.size();
    ComplexFloat sum;
    BigFloat one = BigFloat::from_int(1, prec);
    for (const ComplexFloat& bj : roots.roots) {
        ComplexFloat z;
        for (int a : digits.digits) z = z * bj + ComplexFloat{BigFloat::from_int(a, prec), {}};
        ComplexFloat w;
        if (simple) {
            ComplexFloat pw{one, {}};
            for (size_t i = 0; i < m; ++i) {
                w += pw;
                pw = pw * bj;
            }
        } else {
            ComplexFloat pw{one, {}};
            ComplexFloat geo;
            for (size_t i = 0; i < p; ++i) {
                geo += pw;
                pw = pw * bj;
            }
            ComplexFloat bm{one, {}};
            for (size_t i = 0; i < m; ++i) bm = bm * bj;
            w = bm * geo;
        }
        sum += z / detail::poly_eval(cfd, bj) * w;
    }
    ComplexFloat result = -(sum * cc.c_numeric);
    if (result.im.abs().to_rational() > imag_tol) throw NonRealResult();
    return result.re;
}

// Generic a-priori bound 2 c_beta beta sum_j 1/((1-|beta_j|)^2 |p'(beta_j)|),
// valid for Pisot bases (it rests on |beta_j| < 1). Empty sum -> 0.
inline BigFloat drift_bound(const AsymptoticConstants& cc, const BigFloat& beta_numeric,
                            const ConjugateSet& roots) {
    PisotResult pr = is_pisot(cc.parry, roots);
    if (pr.verdict != Pisot::Yes) throw NotPisot();
    unsigned prec = beta_numeric.prec();
    BigFloat one = BigFloat::from_int(1, prec);
    std::vector<BigFloat> cfd;
    IntPolynomial pd = cc.parry.derivative();
    for (const BigInt& c : pd.coeffs()) cfd.push_back(BigFloat::from_int(c, prec));
    BigFloat sum(prec);
    for (const ComplexFloat& z : roots.roots) {
        BigFloat gap = one - z.abs();
        sum += one / (gap * gap * detail::poly_eval(cfd, z).abs());
    }
    return BigFloat::from_int(2, prec) * cc.c_numeric * beta_numeric * sum;
}

enum class QuadraticUnitKind { SimpleUnit, NonSimpleUnit };

// Closed form for quadratic Parry units:
//   simple:      b_n = c n + (1/b)(1-b)/(1+b) + ((b-1)/b) {(n+1)/(1+b)}
//   non-simple:  b_n = c n + (1/b) {n/b}
// with exact fractional parts in Q(beta). The kind is caller-supplied and
// validated against the stream in the tests.
inline FieldElement quadratic_unit_formula(const AlgebraicReal& beta, const BigInt& n,
                                           QuadraticUnitKind kind) {
    if (beta.degree() != 2) throw NotQuadratic();
    FieldElement b = FieldElement::generator(beta);
    FieldElement one = FieldElement::constant(beta, 1);
    FieldElement nfe = FieldElement::constant(beta, BigRational(n));
    if (kind == QuadraticUnitKind::SimpleUnit) {
        FieldElement c = (one + b * b) / (b * (one + b));
        FieldElement shift = (one - b) / (b * (one + b));
        FieldElement wobble = ((b - one) / b) * ((nfe + one) / (one + b)).frac();
        return c * nfe + shift + wobble;
    }
    FieldElement c = one - one / (b * b);
    return c * nfe + (one / b) * (nfe / b).frac();
}

struct DriftReport {
    size_t n_max = 0;
    std::string sup_drift;  // max |b_n - c_beta n| over n <= n_max, decimal
    std::optional<FieldElement> sup_exact;
    size_t arg_max = 0;
    std::optional<std::string> predicted_bound;
    std::optional<BigFloat> predicted_bound_value;
    bool pisot = false;
    enum class MinimalPoly { Yes, No, Unknown };
    MinimalPoly minimal_poly = MinimalPoly::Unknown;
    Verdict verdict = Verdict::Unknown;
    bool exact = true;  // false when a NonInvertibleDivisor forced numerics
};

struct ReportOptions {
    int max_steps = 10000;
    unsigned prec_bits = 128;
    unsigned jobs = 1;
    unsigned digits = 12;
    // called as (n, drift decimal) for every n <= N, in order
    std::function<void(size_t, const std::string&)> row_sink;
};

namespace detail {

struct SweepResult {
    FieldElement sup;
    size_t arg = 0;
    std::vector<std::pair<size_t, std::string>> rows;
};

// Exact drift walk over n in [from, to]: drift_{n+1} = drift_n + Delta_{u_n} - c.
inline SweepResult sweep_exact(const AlgebraicReal& beta, const std::vector<FieldElement>& step,
                               const std::vector<int>& letters, const FieldElement& start_drift,
                               size_t from, size_t to, bool collect_rows, unsigned digits) {
    SweepResult res{FieldElement(beta), 0, {}};
    FieldElement drift = start_drift;
    for (size_t n = from;; ++n) {
        if (collect_rows) res.rows.emplace_back(n, drift.to_decimal(digits));
        FieldElement absd = drift.sign() < 0 ? -drift : drift;
        if ((absd - res.sup).sign() > 0) {
            res.sup = std::move(absd);
            res.arg = n;
        }
        if (n == to) break;
        drift += step[static_cast<size_t>(letters[n])];
    }
    return res;
}

}  // namespace detail

// Exact sweep of the drift sequence over n <= N with sup, argmax, the
// a-priori bound when available, and the boundedness verdict.
inline DriftReport drift_report(const AlgebraicReal& beta, size_t N,
                                const ReportOptions& opt = {}) {
    RenyiExpansion d = renyi_expansion(beta, opt.max_steps);
    if (d.status == ExpansionStatus::Undetermined) throw NotParry();
    AsymptoticConstants cc = c_beta(beta, d, opt.prec_bits);

    DriftReport rep;
    rep.n_max = N;
    rep.exact = cc.exact_available();

    std::optional<ConjugateSet> roots;
    try {
        RootOptions ro;
        ro.prec_bits = opt.prec_bits;
        roots = conjugate_roots(cc.parry, ro);
    } catch (const Error&) {
        roots.reset();
    }
    if (roots) {
        PisotResult pr = is_pisot(cc.parry, *roots);
        rep.pisot = pr.verdict == Pisot::Yes;
        rep.verdict = boundedness_predicted(d, cc.parry, beta.poly(), *roots);
        if (rep.pisot && roots->distinct) {
            BigFloat bound =
                drift_bound(cc, algebraic_to_bigfloat(beta, opt.prec_bits), *roots);
            rep.predicted_bound = bound.to_decimal(opt.digits);
            rep.predicted_bound_value = bound;
        }
    }
    if (cc.parry == beta.poly())
        rep.minimal_poly = DriftReport::MinimalPoly::Yes;
    else if (cc.parry.degree() > beta.poly().degree())
        rep.minimal_poly = DriftReport::MinimalPoly::No;

    DistanceSet ds = distances(beta, d);
    WordStream w = fixed_point(canonical_substitution(d));

    if (!cc.exact_available()) {
        // numeric-only mode (reducible defining polynomial blocked division)
        BigFloat bf = algebraic_to_bigfloat(beta, opt.prec_bits);
        std::vector<BigFloat> step;
        for (const FieldElement& delta : ds.deltas)
            step.push_back(detail::evaluate_at(delta, bf) - cc.c_numeric);
        BigFloat drift(opt.prec_bits), sup(opt.prec_bits);
        size_t arg = 0;
        for (size_t n = 0;; ++n) {
            if (opt.row_sink) opt.row_sink(n, drift.to_decimal(opt.digits));
            BigFloat a = drift.abs();
            if (a > sup) {
                sup = a;
                arg = n;
            }
            if (n == N) break;
            drift += step[static_cast<size_t>(w.letter(n))];
        }
        rep.sup_drift = sup.to_decimal(opt.digits);
        rep.arg_max = arg;
        return rep;
    }

    const FieldElement& c = *cc.c_exact;
    std::vector<FieldElement> step;
    for (const FieldElement& delta : ds.deltas) step.push_back(delta - c);

    unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
    if (jobs <= 1 || N < 2 * jobs) {
        const std::vector<int>& letters = w.prefix(N);  // N letters drive N steps
        detail::SweepResult r = detail::sweep_exact(beta, step, letters, FieldElement(beta), 0, N,
                                                    static_cast<bool>(opt.row_sink), opt.digits);
        if (opt.row_sink)
            for (auto& [n, s] : r.rows) opt.row_sink(n, s);
        rep.sup_exact = r.sup;
        rep.sup_drift = r.sup.to_decimal(opt.digits);
        rep.arg_max = r.arg;
        return rep;
    }

    // parallel chunks; each owns its FieldElement copies, interval refinement
    // on the shared base is internally synchronized
    std::vector<int> letters = w.prefix(N);
    SubstMatrix M = substitution_matrix(canonical_substitution(d));
    std::vector<BigInt> U = u_sequence_exceeding(M, BigInt(N));
    std::vector<size_t> cut;
    for (unsigned k = 0; k <= jobs; ++k) cut.push_back(N * k / jobs);
    cut.back() = N;
    std::vector<std::optional<detail::SweepResult>> results(jobs);
    std::vector<std::thread> threads;
    for (unsigned k = 0; k < jobs; ++k) {
        threads.emplace_back([&, k] {
            size_t from = cut[k], to = k + 1 == jobs ? N : cut[k + 1] - 1;
            FieldElement b_from = b_from_digits(n_to_expansion(BigInt(from), U), beta);
            FieldElement start = b_from - c * BigRational(BigInt(from));
            results[k] = detail::sweep_exact(beta, step, letters, start, from, to,
                                             static_cast<bool>(opt.row_sink), opt.digits);
        });
    }
    for (auto& t : threads) t.join();
    FieldElement sup(beta);
    size_t arg = 0;
    for (unsigned k = 0; k < jobs; ++k) {
        if (opt.row_sink)
            for (auto& [n, s] : results[k]->rows) opt.row_sink(n, s);
        if ((results[k]->sup - sup).sign() > 0) {
            sup = results[k]->sup;
            arg = results[k]->arg;
        }
    }
    rep.sup_exact = sup;
    rep.sup_drift = sup.to_decimal(opt.digits);
    rep.arg_max = arg;
    return rep;
}

}  // namespace betanum
