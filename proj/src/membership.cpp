#include "henon/membership.hpp"

#include <algorithm>

#include "henon/errors.hpp"

namespace henon {

namespace {

ExactPoly derivative_product(const HenonComposition& comp, const std::vector<size_t>& indices) {
    size_t n = comp.n();
    ExactPoly acc = ExactPoly::one(n);
    for (size_t i : indices)
        acc = acc * detail::factor_p_derivative_poly<GaussianRational>(comp.factors[i], i, n);
    return acc;
}

}  // namespace

GroebnerReport<GaussianRational> verify_groebner_system(const HenonComposition& comp,
                                                        CancelToken token) {
    return buchberger_verify(fixed_point_system<GaussianRational>(comp), token);
}

MembershipReport membership_against_system(const HenonComposition& comp, ExactPoly target,
                                           CancelToken token) {
    auto system = fixed_point_system<GaussianRational>(comp);
    MembershipReport report;
    report.basis_verified = buchberger_verify(system, token).is_groebner;
    report.division = divide_multivariate(target, system, token);
    report.is_member = report.division.remainder.is_zero();
    if (!report.is_member) report.remainder_leading = report.division.remainder.leading();

    report.quotient_leading_bound_ok = true;
    if (!target.is_zero()) {
        const Exponent& lm = target.leading_monomial();
        for (size_t j = 0; j < system.size(); ++j) {
            if (report.division.quotients[j].is_zero()) continue;
            Exponent product_lm =
                report.division.quotients[j].leading_monomial() + system[j].leading_monomial();
            if (compare_monomials(product_lm, lm) == std::strong_ordering::greater)
                report.quotient_leading_bound_ok = false;
        }
        report.target_leading_outside_ideal = true;
        for (const auto& phi : system)
            if (phi.leading_monomial().divides(lm)) report.target_leading_outside_ideal = false;
    }
    report.target = std::move(target);
    return report;
}

MembershipReport phi_membership(const HenonComposition& comp, const GaussianRational& lambda,
                                CancelToken token) {
    return membership_against_system(comp, multiplier_polynomial<GaussianRational>(comp, lambda),
                                     token);
}

MembershipReport shifted_phi_membership(const HenonComposition& comp,
                                        const GaussianRational& lambda,
                                        const GaussianRational& alpha, CancelToken token) {
    size_t n = comp.n();
    ExactPoly shift = ExactPoly::variable(n, 0) - ExactPoly::constant(n, alpha);
    return membership_against_system(
        comp, shift * multiplier_polynomial<GaussianRational>(comp, lambda), token);
}

DecompositionReport decomposition_identity_verify(const HenonComposition& comp,
                                                  const DecompositionInput& input) {
    size_t n = comp.n();
    const auto& J = input.index_set;
    if (J.empty() || !std::is_sorted(J.begin(), J.end()) ||
        std::adjacent_find(J.begin(), J.end()) != J.end() || J.back() >= n)
        throw ValidationError("index set must be strictly increasing within the variable range");
    if (std::find(J.begin(), J.end(), input.pivot) == J.end())
        throw ValidationError("pivot must belong to the index set");

    const size_t j = input.pivot;
    std::vector<size_t> J_without_pivot;
    for (size_t i : J)
        if (i != j) J_without_pivot.push_back(i);

    // Split h on occurrence of the pivot symbol: terms containing p'_j feed
    // rho1 (with the factor removed), the rest feed rho2.
    ExactPoly rho1(n), rho2(n), h(n);
    for (const auto& term : input.h_terms) {
        const auto& L = term.indices;
        if (!std::is_sorted(L.begin(), L.end()) ||
            std::adjacent_find(L.begin(), L.end()) != L.end())
            throw ValidationError("span term indices must be strictly increasing");
        for (size_t i : L)
            if (std::find(J.begin(), J.end(), i) == J.end())
                throw ValidationError("span term index outside the index set");
        if (L.size() + 2 > J.size() || (J.size() - L.size()) % 2 != 0)
            throw ValidationError("span term size must be |J|-2k for some k >= 1");
        ExactPoly expanded = derivative_product(comp, L).scaled(term.coeff);
        h += expanded;
        auto pivot_pos = std::find(L.begin(), L.end(), j);
        if (pivot_pos == L.end()) {
            rho2 += expanded;
        } else {
            std::vector<size_t> reduced(L.begin(), L.end());
            reduced.erase(reduced.begin() + (pivot_pos - L.begin()));
            rho1 += derivative_product(comp, reduced).scaled(term.coeff);
        }
    }

    GaussianRational dj{Rational(comp.factors[j].degree)};
    ExactPoly mu = derivative_product(comp, J_without_pivot) + rho1;

    DecompositionReport report;
    report.quotient = mu.scaled(dj);
    report.cofactor = eta_polynomial<GaussianRational>(comp, j, input.alpha) +
                      detail::cyclic_linear_part<GaussianRational>(comp, j).scaled(dj);
    report.rho1 = rho1;
    report.rho2 = rho2;

    ExactPoly shift = ExactPoly::variable(n, j) - ExactPoly::constant(n, input.alpha);
    report.lhs = shift * (derivative_product(comp, J) + h);

    ExactPoly phi_j = fixed_point_system<GaussianRational>(comp)[j];
    ExactPoly rhs = report.quotient * phi_j + report.cofactor * mu + shift * rho2;
    report.difference = report.lhs - rhs;
    report.identity_ok = report.difference.is_zero();

    ExactPoly quotient_times_phi = report.quotient * phi_j;
    report.leading_match_ok = !report.lhs.is_zero() && !quotient_times_phi.is_zero() &&
                              report.lhs.leading_monomial() ==
                                  quotient_times_phi.leading_monomial();
    return report;
}

}  // namespace henon
