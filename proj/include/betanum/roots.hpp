#pragma once

#include "betanum/bigfloat.hpp"
#include "betanum/bigint.hpp"
#include "betanum/errors.hpp"
#include "betanum/polynomial.hpp"
#include "betanum/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace betanum {

struct RootOptions {
    unsigned prec_bits = 128;
    BigRational residual{BigInt(1), pow10(30)};  // target max |p(z_i)|
    int max_iter = 400;
};

// All roots of the polynomial except the dominant one (the numeration base,
// which is the strictly largest root in modulus by Perron-Frobenius for the
// polynomials this library feeds in). Numeric only; never used on any
// certified decision path.
struct ConjugateSet {
    std::vector<ComplexFloat> roots;  // conjugates, beta excluded
    BigFloat perron;                  // the excluded dominant real root
    BigRational residual_bound;       // certified max |p(z)| over all roots
    bool distinct = false;            // error disks pairwise disjoint
};

namespace detail {

inline std::complex<double> poly_eval(const std::vector<double>& c, std::complex<double> x) {
    std::complex<double> r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

inline ComplexFloat poly_eval(const std::vector<BigFloat>& c, const ComplexFloat& x) {
    ComplexFloat r;
    for (size_t i = c.size(); i-- > 0;) {
        r = r * x;
        r.re = r.re + c[i];
    }
    return r;
}

// Simultaneous (Weierstrass-Durand-Kerner) sweep in double precision from
// powers of 0.4 + 0.9i; gets every root to ~1e-12 for the modest degrees
// handled here.
inline std::vector<std::complex<double>> dk_double(const std::vector<double>& c, int n) {
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9), p = 1;
    for (int i = 0; i < n; ++i) {
        p *= seed;
        z[i] = p;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double step = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == std::complex<double>(0, 0)) {
                z[i] += std::complex<double>(1e-4, 1e-4);
                continue;
            }
            std::complex<double> d = poly_eval(c, z[i]) / denom;
            z[i] -= d;
            step += std::norm(d);
        }
        if (!(step == step)) break;  // NaN: give up, high-precision phase recovers
        if (step < 1e-26) break;
    }
    return z;
}

}  // namespace detail

// Find every complex root of a squarefree integer polynomial by simultaneous
// iteration at prec_bits working precision, then return all but the dominant
// real root. Error radii are residual-derived (Newton corrections scaled by
// the degree); `distinct` certifies pairwise disjoint disks.
inline ConjugateSet conjugate_roots(const IntPolynomial& p, const RootOptions& opt = {}) {
    if (!is_squarefree(p)) throw NotSquarefree();
    int n = p.degree();
    unsigned prec = opt.prec_bits;
    ConjugateSet out;

    if (n == 1) {
        // single rational root -c0/c1
        BigRational root(-p.coeff(0), p.coeff(1));
        out.perron = BigFloat::from_rational(root, prec);
        out.residual_bound = BigRational(0);
        out.distinct = true;
        return out;
    }

    std::vector<double> cd(p.coeffs().size());
    double lead = p.coeffs().back().convert_to<double>();
    for (size_t i = 0; i < cd.size(); ++i) cd[i] = p.coeffs()[i].convert_to<double>() / lead;
    auto warm = detail::dk_double(cd, n);

    std::vector<BigFloat> cf;
    cf.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) cf.push_back(BigFloat::from_int(c, prec));
    std::vector<BigFloat> cfd;  // derivative coefficients
    IntPolynomial dp = p.derivative();
    for (const BigInt& c : dp.coeffs()) cfd.push_back(BigFloat::from_int(c, prec));

    std::vector<ComplexFloat> z(n);
    for (int i = 0; i < n; ++i) {
        double re = warm[i].real(), im = warm[i].imag();
        if (!(re == re) || !(im == im)) {  // NaN fallback seed
            re = 0.4 * (i + 1);
            im = 0.9 * (i + 1);
        }
        z[i] = ComplexFloat::from_doubles(re, im, prec);
    }

    BigRational target2 = opt.residual * opt.residual;
    bool reached = false;
    for (int iter = 0; iter < opt.max_iter && !reached; ++iter) {
        for (int i = 0; i < n; ++i) {
            ComplexFloat denom{BigFloat::from_int(1, prec), BigFloat(prec)};
            for (int j = 0; j < n; ++j)
                if (j != i) denom = denom * (z[i] - z[j]);
            if (denom.norm2().is_zero()) {
                z[i].re += BigFloat::from_rational(BigRational(BigInt(1), BigInt(1000)), prec);
                continue;
            }
            z[i] = z[i] - detail::poly_eval(cf, z[i]) / denom;
        }
        reached = true;
        for (int i = 0; i < n && reached; ++i)
            reached = detail::poly_eval(cf, z[i]).norm2().to_rational() <= target2;
    }
    if (!reached) throw PrecisionNotReached();

    // residual bound and error radii
    BigRational max_residual(0);
    BigFloat max_radius;
    std::vector<BigFloat> radius(n);
    bool radii_ok = true;
    BigFloat deg = BigFloat::from_int(n, prec);
    for (int i = 0; i < n; ++i) {
        BigFloat pv = detail::poly_eval(cf, z[i]).abs();
        BigRational r = pv.to_rational();
        if (r > max_residual) max_residual = r;
        BigFloat dv = detail::poly_eval(cfd, z[i]).abs();
        if (dv.is_zero()) {
            radii_ok = false;
            break;
        }
        radius[i] = pv / dv * deg;
        if (radius[i] > max_radius) max_radius = radius[i];
    }
    out.residual_bound = max_residual;
    out.distinct = radii_ok;
    if (radii_ok) {
        BigFloat two = BigFloat::from_int(2, prec);
        for (int i = 0; i < n && out.distinct; ++i)
            for (int j = i + 1; j < n && out.distinct; ++j)
                out.distinct = (z[i] - z[j]).abs() > two * max_radius;
    }

    // the dominant root is real and strictly largest in modulus
    int dom = 0;
    BigFloat best = z[0].norm2();
    for (int i = 1; i < n; ++i) {
        BigFloat m2 = z[i].norm2();
        if (m2 > best) {
            best = m2;
            dom = i;
        }
    }
    out.perron = z[dom].re;
    for (int i = 0; i < n; ++i)
        if (i != dom) out.roots.push_back(z[i]);
    return out;
}

}  // namespace betanum
