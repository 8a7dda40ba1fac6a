#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "henon/polynomial.hpp"

namespace henon {

using cd = std::complex<double>;

struct PointC2 {
    cd x;
    cd y;
};

// One generalized Henon factor f(x,y) = (y, p(y) - delta*x) with p monic of
// degree >= 2 and delta != 0. p_coeffs holds c0..c_{d-1}; the leading 1 is
// implicit.
struct HenonFactor {
    int degree = 2;
    std::vector<GaussianRational> p_coeffs;
    GaussianRational delta;

    HenonFactor() = default;
    HenonFactor(int d, std::vector<GaussianRational> coeffs, GaussianRational dlt);

    cd delta_cd() const { return delta.to_complex(); }
    cd p_at(cd y) const;            // p(y)
    cd p_derivative_at(cd y) const;  // p'(y)
};

// Ordered composition f = f_n o ... o f_1, n >= 1.
struct HenonComposition {
    std::vector<HenonFactor> factors;

    HenonComposition() = default;
    explicit HenonComposition(std::vector<HenonFactor> fs);

    size_t n() const { return factors.size(); }
    std::int64_t degree() const;        // d = d_1 ... d_n
    GaussianRational jacobian() const;  // delta = delta_1 ... delta_n
    cd jacobian_cd() const { return jacobian().to_complex(); }

    // One warning per factor whose tail coefficient c_{d-1} is nonzero; the
    // structural analysis assumes that term has been conjugated away.
    std::vector<std::string> warnings() const;
};

PointC2 evaluate_factor(const HenonFactor& f, PointC2 p);
// Exact inverse of evaluate_factor: (x,y) -> ((p(x) - y)/delta, x).
PointC2 evaluate_inverse_factor(const HenonFactor& f, PointC2 p);

PointC2 apply(const HenonComposition& comp, PointC2 p);
PointC2 apply_inverse(const HenonComposition& comp, PointC2 p);

// Cyclic left rotation by k: factors [f_{k+1},...,f_n,f_1,...,f_k]. The
// rotated composition is conjugate to the original, so degree, Jacobian and
// multiplier spectra are preserved.
HenonComposition rotate(const HenonComposition& comp, size_t k);

// Index helper for the cyclic variables y_1..y_n (0-based internally).
inline size_t cyclic_next(size_t i, size_t n) { return (i + 1) % n; }
inline size_t cyclic_prev(size_t i, size_t n) { return (i + n - 1) % n; }

namespace detail {

// p_i(y_i) as an n-variable polynomial.
template <class F>
Polynomial<F> factor_p_poly(const HenonFactor& f, size_t var_index, size_t nvars) {
    Polynomial<F> p(nvars);
    p.add_term([&] {
        Exponent m(nvars);
        m[var_index] = f.degree;
        return m;
    }(), FieldTraits<F>::one());
    for (int k = 0; k < f.degree; ++k) {
        Exponent m(nvars);
        m[var_index] = k;
        p.add_term(m, convert_coeff<F>(f.p_coeffs[k]));
    }
    return p;
}

// p_i'(y_i) as an n-variable polynomial.
template <class F>
Polynomial<F> factor_p_derivative_poly(const HenonFactor& f, size_t var_index, size_t nvars) {
    return factor_p_poly<F>(f, var_index, nvars).derivative(var_index);
}

// The linear part y_{i+1} + delta_i * y_{i-1} with cyclic indices; for n=1
// and n=2 the colliding variables simply sum their coefficients.
template <class F>
Polynomial<F> cyclic_linear_part(const HenonComposition& comp, size_t i) {
    size_t n = comp.n();
    Polynomial<F> l(n);
    Exponent next(n), prev(n);
    next[cyclic_next(i, n)] = 1;
    prev[cyclic_prev(i, n)] = 1;
    l.add_term(next, FieldTraits<F>::one());
    l.add_term(prev, convert_coeff<F>(comp.factors[i].delta));
    return l;
}

}  // namespace detail

// The fixed-point system: phi_i = p_i(y_i) - y_{i+1} - delta_i * y_{i-1}
// with indices mod n. Leading monomials are exactly y_i^{d_i}.
template <class F>
std::vector<Polynomial<F>> fixed_point_system(const HenonComposition& comp) {
    size_t n = comp.n();
    std::vector<Polynomial<F>> system;
    system.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Polynomial<F> phi = detail::factor_p_poly<F>(comp.factors[i], i, n);
        phi -= detail::cyclic_linear_part<F>(comp, i);
        system.push_back(std::move(phi));
    }
    return system;
}

// 2x2 complex matrix with polynomial-free numeric entries.
struct Mat2c {
    cd m11, m12, m21, m22;

    cd trace() const { return m11 + m22; }
    cd det() const { return m11 * m22 - m12 * m21; }
    // Eigenvalues ordered by modulus, smallest first.
    std::pair<cd, cd> eigenvalues() const;

    friend Mat2c operator*(const Mat2c& a, const Mat2c& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
};

// Chain-rule differential of the composition at the cycle (y_1,...,y_n):
// the product of the factor matrices ((0,1),(-delta_j, p_j'(y_j))), the
// rightmost factor evaluated at y_1. det = jacobian up to rounding.
Mat2c differential_numeric(const HenonComposition& comp, const std::vector<cd>& ys);

template <class F>
struct Matrix2Poly {
    Polynomial<F> m11, m12, m21, m22;

    Polynomial<F> trace() const { return m11 + m22; }
    Polynomial<F> det() const { return m11 * m22 - m12 * m21; }
};

namespace detail {

template <class F>
Matrix2Poly<F> matrix_product(const Matrix2Poly<F>& a, const Matrix2Poly<F>& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

}  // namespace detail

// Symbolic differential: same product with entries as polynomials in
// y_1..y_n. Its determinant is identically the constant jacobian.
template <class F>
Matrix2Poly<F> differential_symbolic(const HenonComposition& comp) {
    size_t n = comp.n();
    Matrix2Poly<F> acc{Polynomial<F>::one(n), Polynomial<F>(n), Polynomial<F>(n),
                       Polynomial<F>::one(n)};
    for (size_t j = 0; j < n; ++j) {
        Matrix2Poly<F> fj{Polynomial<F>(n), Polynomial<F>::one(n),
                          Polynomial<F>::constant(n, -convert_coeff<F>(comp.factors[j].delta)),
                          detail::factor_p_derivative_poly<F>(comp.factors[j], j, n)};
        acc = detail::matrix_product(fj, acc);
    }
    return acc;
}

// Multiplier polynomial: lambda^2 - lambda*(m11 + m22) + jacobian, a
// polynomial in y_1..y_n vanishing on the fixed-point cycles whose
// differential has eigenvalue lambda. For lambda != 0 the leading term is
// -lambda * d_1...d_n * y_1^{d_1-1}...y_n^{d_n-1}.
template <class F>
Polynomial<F> multiplier_polynomial(const HenonComposition& comp, const F& lambda) {
    size_t n = comp.n();
    Matrix2Poly<F> m = differential_symbolic<F>(comp);
    Polynomial<F> phi = Polynomial<F>::constant(n, lambda * lambda + convert_coeff<F>(comp.jacobian()));
    phi -= m.trace().scaled(lambda);
    return phi;
}

// q_i := p_i - y_i^{d_i} (the non-leading part of p_i).
template <class F>
Polynomial<F> tail_polynomial(const HenonComposition& comp, size_t i) {
    size_t n = comp.n();
    Polynomial<F> q(n);
    for (int k = 0; k < comp.factors[i].degree; ++k) {
        Exponent m(n);
        m[i] = k;
        q.add_term(m, convert_coeff<F>(comp.factors[i].p_coeffs[k]));
    }
    return q;
}

// eta_i(y_i) = y_i*q_i'(y_i) - alpha*p_i'(y_i) - d_i*q_i(y_i); univariate in
// y_i of degree <= d_i - 1, represented in the full n-variable ring.
template <class F>
Polynomial<F> eta_polynomial(const HenonComposition& comp, size_t i, const F& alpha) {
    size_t n = comp.n();
    Polynomial<F> q = tail_polynomial<F>(comp, i);
    Polynomial<F> yq = Polynomial<F>::variable(n, i) * q.derivative(i);
    Polynomial<F> ap = detail::factor_p_derivative_poly<F>(comp.factors[i], i, n).scaled(alpha);
    Polynomial<F> dq = q.scaled(F(static_cast<long>(comp.factors[i].degree)));
    return yq - ap - dq;
}

}  // namespace henon
