#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "henon/henon_map.hpp"
#include "henon/sampling.hpp"
#include "henon/span_check.hpp"

using namespace henon;

namespace {

GaussianRational gr(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

HenonFactor pure_square(Rational delta) {
    return HenonFactor(2, {gr(0), gr(0)}, GaussianRational(std::move(delta)));
}

cd random_cd(std::mt19937_64& rng, double span = 2.0) {
    std::uniform_real_distribution<double> u(-span, span);
    return {u(rng), u(rng)};
}

std::vector<cd> random_cycle(std::mt19937_64& rng, size_t n, double span = 2.0) {
    std::vector<cd> ys(n);
    for (auto& y : ys) y = random_cd(rng, span);
    return ys;
}

}  // namespace

TEST_CASE("factor validation") {
    CHECK_THROWS_AS(HenonFactor(1, {gr(0)}, gr(1)), ValidationError);
    CHECK_THROWS_AS(HenonFactor(2, {gr(0), gr(0)}, gr(0)), ValidationError);
    CHECK_THROWS_AS(HenonFactor(2, {gr(0)}, gr(1)), ValidationError);

    // nonzero y^{d-1} coefficient triggers a normal-form warning
    HenonComposition tilted({HenonFactor(2, {gr(0), gr(1)}, gr(1, 2))});
    CHECK(tilted.warnings().size() == 1);
    HenonComposition clean({pure_square(Rational(1, 2))});
    CHECK(clean.warnings().empty());
}

TEST_CASE("factor evaluation and inverse") {
    HenonFactor f1(2, {gr(0), gr(0)}, gr(1));
    PointC2 fixed = evaluate_factor(f1, {0.0, 0.0});
    CHECK(std::abs(fixed.x) == 0.0);
    CHECK(std::abs(fixed.y) == 0.0);

    HenonFactor f2(2, {gr(0), gr(0)}, gr(1, 2));
    PointC2 moved = evaluate_factor(f2, {2.0, 1.0});
    CHECK(moved.x == cd(1.0, 0.0));
    CHECK(std::abs(moved.y) == doctest::Approx(0.0));

    HenonFactor cubic(3, {gr(0), gr(0), gr(0)}, gr(2));
    PointC2 p{cd(1.3, 0.0), cd(-0.7, 0.0)};
    PointC2 roundtrip = evaluate_inverse_factor(cubic, evaluate_factor(cubic, p));
    CHECK(std::abs(roundtrip.x - p.x) < 1e-12);
    CHECK(std::abs(roundtrip.y - p.y) < 1e-12);

    PointC2 origin = evaluate_inverse_factor(f1, {0.0, 0.0});
    CHECK(std::abs(origin.x) == 0.0);
    CHECK(std::abs(origin.y) == 0.0);

    std::mt19937_64 rng(99);
    SampleOptions opts;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    opts.n = 1;
    double worst = 0.0;
    for (int round = 0; round < 200; ++round) {
        auto comp = sample_composition(rng, opts);
        const auto& f = comp.factors[0];
        PointC2 q{random_cd(rng), random_cd(rng)};
        PointC2 back = evaluate_inverse_factor(f, evaluate_factor(f, q));
        PointC2 forth = evaluate_factor(f, evaluate_inverse_factor(f, q));
        worst = std::max({worst, std::abs(back.x - q.x), std::abs(back.y - q.y),
                          std::abs(forth.x - q.x), std::abs(forth.y - q.y)});
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("fixed-point system with cyclic collapse") {
    // n = 1: successor and predecessor both collapse onto y1
    HenonComposition single({pure_square(Rational(1, 2))});
    auto system1 = fixed_point_system<GaussianRational>(single);
    CHECK(system1[0].str() == "y1^2 - 3/2*y1");

    // n = 2: phi_1 = p_1(y_1) - (1 + delta_1) y_2
    HenonComposition pair_comp({HenonFactor(2, {gr(1, 3), gr(0)}, gr(1, 2)),
                                HenonFactor(2, {gr(0), gr(0)}, gr(1, 5))});
    auto system2 = fixed_point_system<GaussianRational>(pair_comp);
    ExactPoly expected = ExactPoly::variable_power(2, 0, 2) + ExactPoly::constant(2, gr(1, 3)) -
                         ExactPoly::variable(2, 1).scaled(gr(3, 2));
    CHECK(system2[0] == expected);

    // any n: leading monomials are exactly y_i^{d_i}
    std::mt19937_64 rng(41);
    SampleOptions opts;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    for (size_t n = 1; n <= 5; ++n) {
        opts.n = n;
        auto comp = sample_composition(rng, opts);
        auto system = fixed_point_system<GaussianRational>(comp);
        for (size_t i = 0; i < n; ++i) {
            Exponent expected_lm(n);
            expected_lm[i] = comp.factors[i].degree;
            CHECK(system[i].leading_monomial() == expected_lm);
        }
    }

    // zeros of the system are fixed points of the composition: check the
    // symmetric rational solution y_i = 1 + delta of the pure-square cycle
    HenonComposition sym({pure_square(Rational(1, 2)), pure_square(Rational(1, 2)),
                          pure_square(Rational(1, 2))});
    auto sys = fixed_point_system<GaussianRational>(sym);
    std::vector<GaussianRational> point(3, gr(3, 2));
    for (const auto& phi : sys) CHECK(evaluate_exact(phi, point).is_zero());
    PointC2 q{cd(1.5, 0.0), cd(1.5, 0.0)};
    PointC2 image = apply(sym, q);
    CHECK(std::abs(image.x - q.x) < 1e-12);
    CHECK(std::abs(image.y - q.y) < 1e-12);
}

TEST_CASE("numeric differential") {
    HenonComposition single({pure_square(Rational(1, 2))});
    Mat2c m = differential_numeric(single, {cd(1.5, 0.0)});
    CHECK(m.m11 == cd(0.0, 0.0));
    CHECK(m.m12 == cd(1.0, 0.0));
    CHECK(m.m21 == cd(-0.5, 0.0));
    CHECK(m.m22 == cd(3.0, 0.0));
    auto [alpha, beta] = m.eigenvalues();
    double root7 = std::sqrt(7.0);
    CHECK(std::abs(alpha - cd((3.0 - root7) / 2.0, 0.0)) < 1e-12);
    CHECK(std::abs(beta - cd((3.0 + root7) / 2.0, 0.0)) < 1e-12);

    // determinant is the jacobian for any input (moderate magnitudes keep
    // the rounding of the 2x2 determinant far below the tolerance)
    std::mt19937_64 rng(59);
    SampleOptions opts;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    for (int round = 0; round < 30; ++round) {
        opts.n = 1 + round % 3;
        auto comp = sample_composition(rng, opts);
        auto ys = random_cycle(rng, comp.n(), 0.5);
        Mat2c d = differential_numeric(comp, ys);
        CHECK(std::abs(d.det() - comp.jacobian_cd()) < 1e-10);
        auto [a, b] = d.eigenvalues();
        CHECK(std::abs(a * b - comp.jacobian_cd()) < 1e-10);
    }
}

TEST_CASE("symbolic differential") {
    // n = 1: ((0, 1), (-delta, p'))
    HenonComposition single({HenonFactor(2, {gr(1, 4), gr(0)}, gr(2, 3))});
    auto m1 = differential_symbolic<GaussianRational>(single);
    CHECK(m1.m11.is_zero());
    CHECK(m1.m12 == ExactPoly::one(1));
    CHECK(m1.m21 == ExactPoly::constant(1, gr(-2, 3)));
    CHECK(m1.m22 == ExactPoly::variable(1, 0).scaled(gr(2)));

    // n = 2 closed form: ((-d1, p1'), (-d1 p2', p1' p2' - d2))
    HenonComposition two({HenonFactor(2, {gr(1, 3), gr(0)}, gr(1, 2)),
                          HenonFactor(3, {gr(-1), gr(1, 2), gr(0)}, gr(2))});
    auto m2 = differential_symbolic<GaussianRational>(two);
    ExactPoly p1d = detail::factor_p_derivative_poly<GaussianRational>(two.factors[0], 0, 2);
    ExactPoly p2d = detail::factor_p_derivative_poly<GaussianRational>(two.factors[1], 1, 2);
    CHECK(m2.m11 == ExactPoly::constant(2, gr(-1, 2)));
    CHECK(m2.m12 == p1d);
    CHECK(m2.m21 == p2d.scaled(gr(-1, 2)));
    CHECK(m2.m22 == p1d * p2d - ExactPoly::constant(2, gr(2)));

    // numeric/symbolic agreement at random points
    std::mt19937_64 rng(61);
    SampleOptions opts;
    opts.n = 3;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    auto comp = sample_composition(rng, opts);
    auto sym = differential_symbolic<GaussianRational>(comp);
    for (int round = 0; round < 100; ++round) {
        auto ys = random_cycle(rng, 3);
        Mat2c numeric = differential_numeric(comp, ys);
        CHECK(std::abs(to_float(sym.m11).evaluate(ys) - numeric.m11) < 1e-10);
        CHECK(std::abs(to_float(sym.m12).evaluate(ys) - numeric.m12) < 1e-10);
        CHECK(std::abs(to_float(sym.m21).evaluate(ys) - numeric.m21) < 1e-10);
        CHECK(std::abs(to_float(sym.m22).evaluate(ys) - numeric.m22) < 1e-10);
    }

    // det(M) == jacobian as an exact polynomial identity
    SampleOptions small;
    small.degree_menu = {2, 3};
    small.normal_form = false;
    for (size_t n = 1; n <= 4; ++n) {
        small.n = n;
        auto sample = sample_composition(rng, small);
        auto m = differential_symbolic<GaussianRational>(sample);
        CHECK(m.det() == ExactPoly::constant(n, sample.jacobian()));
    }
}

TEST_CASE("multiplier polynomial") {
    // n = 1: lambda^2 - 2 lambda y1 + delta
    HenonComposition single({pure_square(Rational(1, 2))});
    GaussianRational lambda = gr(2);
    ExactPoly phi = multiplier_polynomial<GaussianRational>(single, lambda);
    ExactPoly expected = ExactPoly::constant(1, lambda * lambda + gr(1, 2)) -
                         ExactPoly::variable(1, 0).scaled(lambda * gr(2));
    CHECK(phi == expected);

    // leading term: monomial prod y_i^{d_i - 1}, coefficient -lambda * prod d_i
    std::mt19937_64 rng(71);
    SampleOptions opts;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    for (size_t n = 1; n <= 4; ++n) {
        opts.n = n;
        auto comp = sample_composition(rng, opts);
        ExactPoly p = multiplier_polynomial<GaussianRational>(comp, gr(8));
        Exponent lm(n);
        long degree_product = 1;
        for (size_t i = 0; i < n; ++i) {
            lm[i] = comp.factors[i].degree - 1;
            degree_product *= comp.factors[i].degree;
        }
        auto lt = p.leading();
        CHECK(lt.monomial == lm);
        CHECK(lt.coefficient == gr(-8) * gr(degree_product));
    }

    // lambda = 0 degenerates to the constant jacobian
    auto comp = sample_composition(rng, opts);
    ExactPoly det_only = multiplier_polynomial<GaussianRational>(comp, gr(0));
    CHECK(det_only == ExactPoly::constant(comp.n(), comp.jacobian()));
}

TEST_CASE("eta polynomials") {
    // pure power: eta = -alpha d y^{d-1}
    HenonComposition pure({HenonFactor(3, {gr(0), gr(0), gr(0)}, gr(1, 2))});
    GaussianRational alpha = gr(5, 7);
    ExactPoly eta = eta_polynomial<GaussianRational>(pure, 0, alpha);
    CHECK(eta == ExactPoly::variable_power(1, 0, 2).scaled(-alpha * gr(3)));

    // p = y^2 + c, alpha = 0: eta = -2c
    HenonComposition shifted({HenonFactor(2, {gr(2, 3), gr(0)}, gr(1))});
    CHECK(eta_polynomial<GaussianRational>(shifted, 0, gr(0)) ==
          ExactPoly::constant(1, gr(-4, 3)));

    // alpha = 0, q = 0: eta vanishes
    HenonComposition zero_tail({pure_square(Rational(1, 2)), pure_square(Rational(1, 3))});
    CHECK(eta_polynomial<GaussianRational>(zero_tail, 0, gr(0)).is_zero());
    CHECK(eta_polynomial<GaussianRational>(zero_tail, 1, gr(0)).is_zero());

    // degree bound: deg(eta) <= d - 1
    std::mt19937_64 rng(73);
    SampleOptions opts;
    opts.n = 2;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    for (int round = 0; round < 20; ++round) {
        auto comp = sample_composition(rng, opts);
        for (size_t j = 0; j < comp.n(); ++j) {
            ExactPoly e = eta_polynomial<GaussianRational>(comp, j, gr(1, 2));
            CHECK(e.degree() <= comp.factors[j].degree - 1);
        }
    }
}

TEST_CASE("rotation") {
    HenonFactor a(2, {gr(1), gr(0)}, gr(1, 2));
    HenonFactor b(3, {gr(0), gr(2), gr(0)}, gr(1, 3));
    HenonFactor c(2, {gr(-1), gr(0)}, gr(2));
    HenonComposition comp({a, b, c});

    auto same = rotate(comp, 0);
    CHECK(same.factors[0].p_coeffs == a.p_coeffs);

    auto shifted = rotate(comp, 1);
    CHECK(shifted.factors[0].degree == b.degree);
    CHECK(shifted.factors[1].degree == c.degree);
    CHECK(shifted.factors[2].degree == a.degree);

    CHECK(shifted.degree() == comp.degree());
    CHECK(shifted.jacobian() == comp.jacobian());
    CHECK_THROWS_AS(rotate(comp, 3), ValidationError);
}

TEST_CASE("span profile of the abstract differential") {
    // n = 1 is vacuous for m11 and trivially fine elsewhere
    HenonComposition single({pure_square(Rational(1, 2))});
    CHECK(span_profile_check(single, gr(2)).ok);

    // n = 2 base case: m11 = -delta_1 (|L| = 0), m12 = P_1 (|L| = 1)
    HenonComposition two({pure_square(Rational(1, 2)), pure_square(Rational(1, 3))});
    auto report = span_profile_check(two, gr(4));
    CHECK(report.ok);
    for (const auto& entry : report.entries) {
        if (entry.name == "m11") CHECK(entry.observed_sizes == std::vector<int>{0});
        if (entry.name == "m12") CHECK(entry.observed_sizes == std::vector<int>{1});
    }

    // random deltas for n = 3..6
    std::mt19937_64 rng(79);
    SampleOptions opts;
    opts.degree_menu = {2, 3};
    opts.normal_form = false;
    for (size_t n = 3; n <= 6; ++n) {
        opts.n = n;
        auto comp = sample_composition(rng, opts);
        auto r = span_profile_check(comp, gr(static_cast<long>(comp.degree())));
        for (const auto& entry : r.entries) {
            INFO(entry.name);
            for (const auto& v : entry.violations) INFO(v);
            CHECK(entry.ok);
        }
        CHECK(r.ok);
    }
}
