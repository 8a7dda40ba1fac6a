#include "henon/henon_map.hpp"

#include <cmath>

#include "henon/errors.hpp"

namespace henon {

HenonFactor::HenonFactor(int d, std::vector<GaussianRational> coeffs, GaussianRational dlt)
    : degree(d), p_coeffs(std::move(coeffs)), delta(std::move(dlt)) {
    if (degree < 2) throw ValidationError("factor degree must be >= 2");
    if (delta.is_zero()) throw ValidationError("delta must be nonzero");
    if (p_coeffs.size() != static_cast<size_t>(degree))
        throw ValidationError("expected " + std::to_string(degree) +
                              " coefficients c0..c" + std::to_string(degree - 1));
}

cd HenonFactor::p_at(cd y) const {
    // Horner with the implicit leading 1.
    cd acc = 1.0;
    for (int k = degree - 1; k >= 0; --k) acc = acc * y + p_coeffs[k].to_complex();
    return acc;
}

cd HenonFactor::p_derivative_at(cd y) const {
    cd acc = static_cast<double>(degree);
    for (int k = degree - 1; k >= 1; --k)
        acc = acc * y + static_cast<double>(k) * p_coeffs[k].to_complex();
    return acc;
}

HenonComposition::HenonComposition(std::vector<HenonFactor> fs) : factors(std::move(fs)) {
    if (factors.empty()) throw ValidationError("composition needs at least one factor");
}

std::int64_t HenonComposition::degree() const {
    std::int64_t d = 1;
    for (const auto& f : factors) d *= f.degree;
    return d;
}

GaussianRational HenonComposition::jacobian() const {
    GaussianRational d{Rational(1)};
    for (const auto& f : factors) d *= f.delta;
    return d;
}

std::vector<std::string> HenonComposition::warnings() const {
    std::vector<std::string> out;
    for (size_t j = 0; j < factors.size(); ++j) {
        const auto& f = factors[j];
        if (!f.p_coeffs[f.degree - 1].is_zero())
            out.push_back("factor " + std::to_string(j + 1) + ": coefficient of y^" +
                          std::to_string(f.degree - 1) +
                          " is nonzero; structural checks assume that term is removed by an "
                          "affine conjugation");
    }
    return out;
}

PointC2 evaluate_factor(const HenonFactor& f, PointC2 p) {
    return {p.y, f.p_at(p.y) - f.delta_cd() * p.x};
}

PointC2 evaluate_inverse_factor(const HenonFactor& f, PointC2 p) {
    return {(f.p_at(p.x) - p.y) / f.delta_cd(), p.x};
}

PointC2 apply(const HenonComposition& comp, PointC2 p) {
    for (const auto& f : comp.factors) p = evaluate_factor(f, p);
    return p;
}

PointC2 apply_inverse(const HenonComposition& comp, PointC2 p) {
    for (auto it = comp.factors.rbegin(); it != comp.factors.rend(); ++it)
        p = evaluate_inverse_factor(*it, p);
    return p;
}

HenonComposition rotate(const HenonComposition& comp, size_t k) {
    size_t n = comp.n();
    if (k >= n) throw ValidationError("rotation index must satisfy 0 <= k < n");
    std::vector<HenonFactor> fs;
    fs.reserve(n);
    for (size_t i = 0; i < n; ++i) fs.push_back(comp.factors[(i + k) % n]);
    return HenonComposition(std::move(fs));
}

std::pair<cd, cd> Mat2c::eigenvalues() const {
    cd t = trace();
    cd disc = std::sqrt(t * t - 4.0 * det());
    cd a = (t - disc) / 2.0;
    cd b = (t + disc) / 2.0;
    if (std::abs(a) > std::abs(b)) std::swap(a, b);
    return {a, b};
}

Mat2c differential_numeric(const HenonComposition& comp, const std::vector<cd>& ys) {
    if (ys.size() != comp.n()) throw RingMismatchError("cycle length mismatch");
    Mat2c acc{1.0, 0.0, 0.0, 1.0};
    for (size_t j = 0; j < comp.n(); ++j) {
        const auto& f = comp.factors[j];
        Mat2c fj{0.0, 1.0, -f.delta_cd(), f.p_derivative_at(ys[j])};
        acc = fj * acc;
    }
    return acc;
}

}  // namespace henon
