#include "henon/span_check.hpp"

#include <algorithm>
#include <set>

namespace henon {

namespace {

// Differential of the composition with each p_j' replaced by the opaque
// variable P_j; only the deltas stay numeric.
Matrix2Poly<GaussianRational> abstract_differential(const HenonComposition& comp) {
    size_t n = comp.n();
    Matrix2Poly<GaussianRational> acc{ExactPoly::one(n), ExactPoly(n), ExactPoly(n),
                                      ExactPoly::one(n)};
    for (size_t j = 0; j < n; ++j) {
        Matrix2Poly<GaussianRational> fj{
            ExactPoly(n), ExactPoly::one(n),
            ExactPoly::constant(n, -comp.factors[j].delta),
            ExactPoly::variable(n, j)};
        acc = detail::matrix_product(fj, acc);
    }
    return acc;
}

enum class Profile { inner, outer, multiplier };

SpanEntryReport check_entry(const std::string& name, const ExactPoly& poly, size_t n,
                            Profile profile) {
    SpanEntryReport report;
    report.name = name;
    std::set<int> sizes;
    const int max_size = profile == Profile::outer ? static_cast<int>(n) - 1
                                                   : static_cast<int>(n) - 2;
    const int parity = profile == Profile::outer ? static_cast<int>(n + 1) % 2
                                                 : static_cast<int>(n) % 2;
    for (const auto& [m, c] : poly.terms()) {
        bool squarefree = true;
        int support = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] > 1) squarefree = false;
            if (m[i] > 0) ++support;
        }
        if (!squarefree) {
            report.ok = false;
            report.violations.push_back(monomial_to_string(m, "P") + ": not squarefree");
            continue;
        }
        sizes.insert(support);
        bool size_ok = support <= max_size;
        bool parity_ok = support % 2 == parity;
        if (profile == Profile::multiplier && support == 0) size_ok = parity_ok = true;
        if (!size_ok || !parity_ok) {
            report.ok = false;
            report.violations.push_back(monomial_to_string(m, "P") + ": |L|=" +
                                        std::to_string(support) +
                                        (!size_ok ? " exceeds bound" : " has wrong parity"));
        }
    }
    report.observed_sizes.assign(sizes.begin(), sizes.end());
    return report;
}

}  // namespace

SpanCheckReport span_profile_check(const HenonComposition& comp, const GaussianRational& lambda) {
    size_t n = comp.n();
    Matrix2Poly<GaussianRational> m = abstract_differential(comp);

    Exponent full(n);
    for (size_t i = 0; i < n; ++i) full[i] = 1;
    ExactPoly full_product = ExactPoly::monomial(n, full, FieldTraits<GaussianRational>::one());

    ExactPoly multiplier =
        ExactPoly::constant(n, lambda * lambda + comp.jacobian()) - m.trace().scaled(lambda);
    // Strip the full product P_1...P_n (the analogue of subtracting it from
    // m22); its coefficient here is -lambda.
    ExactPoly multiplier_rest = multiplier;
    multiplier_rest.add_term(full, -multiplier.coefficient(full));

    SpanCheckReport report;
    report.entries.push_back(check_entry("m11", m.m11, n, Profile::inner));
    report.entries.push_back(check_entry("m12", m.m12, n, Profile::outer));
    report.entries.push_back(check_entry("m21", m.m21, n, Profile::outer));
    report.entries.push_back(check_entry("m22_minus_full_product", m.m22 - full_product, n,
                                         Profile::inner));
    report.entries.push_back(check_entry("multiplier_minus_full_product", multiplier_rest, n,
                                         Profile::multiplier));
    for (const auto& e : report.entries) report.ok = report.ok && e.ok;
    return report;
}

}  // namespace henon
