#include "henon/fixpoints.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "henon/division.hpp"
#include "henon/errors.hpp"

namespace henon {

QuotientBasis quotient_basis(const HenonComposition& comp) {
    size_t n = comp.n();
    QuotientBasis basis;
    Exponent cursor(n);
    // Odometer over the box [0, d_i - 1]^n.
    while (true) {
        basis.monomials.push_back(cursor);
        size_t i = 0;
        while (i < n) {
            if (++cursor[i] < comp.factors[i].degree) break;
            cursor[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(basis.monomials.begin(), basis.monomials.end(),
              [](const Exponent& a, const Exponent& b) {
                  return compare_monomials(a, b) == std::strong_ordering::less;
              });
    return basis;
}

namespace {

template <class F>
Eigen::MatrixXcd multiplication_matrix_impl(const HenonComposition& comp, size_t var_index,
                                            const QuotientBasis& basis) {
    size_t n = comp.n();
    auto system = fixed_point_system<F>(comp);
    size_t dim = basis.dimension();
    std::map<Exponent, size_t, GradedLexGreater> row_of;
    for (size_t r = 0; r < dim; ++r) row_of[basis.monomials[r]] = r;

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t col = 0; col < dim; ++col) {
        Exponent shifted = basis.monomials[col];
        shifted[var_index] += 1;
        auto nf = divide_multivariate(
                      Polynomial<F>::monomial(n, shifted, FieldTraits<F>::one()), system)
                      .remainder;
        for (const auto& [mono, coeff] : nf.terms()) {
            auto it = row_of.find(mono);
            if (it == row_of.end()) throw SolveError("normal form left the quotient basis box");
            m(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(col)) =
                FieldTraits<F>::to_complex(coeff);
        }
    }
    return m;
}

}  // namespace

Eigen::MatrixXcd multiplication_matrix(const HenonComposition& comp, size_t var_index,
                                       CoeffMode mode) {
    if (var_index >= comp.n()) throw ValidationError("variable index out of range");
    QuotientBasis basis = quotient_basis(comp);
    return mode == CoeffMode::exact
               ? multiplication_matrix_impl<GaussianRational>(comp, var_index, basis)
               : multiplication_matrix_impl<cd>(comp, var_index, basis);
}

std::string to_string(FixedPointClass c) {
    switch (c) {
        case FixedPointClass::saddle: return "saddle";
        case FixedPointClass::attracting: return "attracting";
        case FixedPointClass::repelling: return "repelling";
        case FixedPointClass::semi_neutral: return "semi-neutral";
        default: return "indeterminate";
    }
}

FixedPointClass classify_multipliers(cd alpha, cd beta, double eps) {
    double a = std::abs(alpha), b = std::abs(beta);
    if (!std::isfinite(a) || !std::isfinite(b)) return FixedPointClass::indeterminate;
    if (std::abs(a - 1.0) <= eps || std::abs(b - 1.0) <= eps)
        return FixedPointClass::semi_neutral;
    if (a < 1.0 && b < 1.0) return FixedPointClass::attracting;
    if (a > 1.0 && b > 1.0) return FixedPointClass::repelling;
    return FixedPointClass::saddle;
}

namespace {

double system_residual(const std::vector<FloatPoly>& system, const std::vector<cd>& point) {
    double r = 0.0;
    for (const auto& phi : system) r = std::max(r, std::abs(phi.evaluate(point)));
    return r;
}

// One Newton step on the full system; keeps the original point when the
// step does not improve the residual (multiple roots, bad eigenvectors).
void newton_polish(const std::vector<FloatPoly>& system,
                   const std::vector<std::vector<FloatPoly>>& jacobian, std::vector<cd>& point) {
    size_t n = system.size();
    Eigen::MatrixXcd j(n, n);
    Eigen::VectorXcd rhs(n);
    for (size_t i = 0; i < n; ++i) {
        rhs(static_cast<Eigen::Index>(i)) = -system[i].evaluate(point);
        for (size_t m = 0; m < n; ++m)
            j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m)) =
                jacobian[i][m].evaluate(point);
    }
    Eigen::VectorXcd step = j.fullPivLu().solve(rhs);
    std::vector<cd> candidate = point;
    for (size_t i = 0; i < n; ++i) candidate[i] += step(static_cast<Eigen::Index>(i));
    if (system_residual(system, candidate) <= system_residual(system, point)) point = candidate;
}

bool lex_less(const std::vector<cd>& a, const std::vector<cd>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

}  // namespace

std::vector<FixedPointRecord> solve_fixed_points(const HenonComposition& comp,
                                                 const SolveOptions& opts) {
    size_t n = comp.n();
    QuotientBasis basis = quotient_basis(comp);
    size_t dim = basis.dimension();

    std::vector<Eigen::MatrixXcd> mats;
    mats.reserve(n);
    for (size_t i = 0; i < n; ++i)
        mats.push_back(multiplication_matrix_impl<GaussianRational>(comp, i, basis));

    auto system = fixed_point_system<cd>(comp);
    std::vector<std::vector<FloatPoly>> jacobian(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t m = 0; m < n; ++m) jacobian[i].push_back(system[i].derivative(m));

    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    double worst = 0.0;
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(dim, dim);
        for (size_t i = 0; i < n; ++i) combo += cd(unit(rng), 0.0) * mats[i];

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo, /*computeEigenvectors=*/true);
        if (solver.info() != Eigen::Success) continue;

        std::vector<std::vector<cd>> points;
        points.reserve(dim);
        bool all_good = true;
        worst = 0.0;
        for (size_t k = 0; k < dim; ++k) {
            Eigen::VectorXcd v = solver.eigenvectors().col(static_cast<Eigen::Index>(k));
            std::vector<cd> point(n);
            for (size_t i = 0; i < n; ++i) point[i] = v.dot(mats[i] * v);  // v is unit length
            newton_polish(system, jacobian, point);
            double res = system_residual(system, point);
            worst = std::max(worst, res);
            if (res >= opts.tolerance) all_good = false;
            points.push_back(std::move(point));
        }
        if (!all_good) continue;

        // Deterministic clustering: sort, then union points within the
        // cluster radius (max-coordinate distance).
        std::sort(points.begin(), points.end(), lex_less);
        std::vector<int> parent(dim);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = a + 1; b < dim; ++b) {
                double dist = 0.0;
                for (size_t i = 0; i < n; ++i)
                    dist = std::max(dist, std::abs(points[a][i] - points[b][i]));
                if (dist <= opts.cluster_radius) parent[find(static_cast<int>(b))] =
                    find(static_cast<int>(a));
            }

        std::map<int, std::vector<size_t>> clusters;
        for (size_t k = 0; k < dim; ++k) clusters[find(static_cast<int>(k))].push_back(k);

        std::vector<FixedPointRecord> records;
        records.reserve(clusters.size());
        for (const auto& [root, members] : clusters) {
            size_t rep = members.front();
            for (size_t m : members)
                if (system_residual(system, points[m]) < system_residual(system, points[rep]))
                    rep = m;
            FixedPointRecord rec;
            rec.y_cycle = points[rep];
            rec.point = {rec.y_cycle[n - 1], rec.y_cycle[0]};
            rec.residual = system_residual(system, rec.y_cycle);
            rec.multiplicity = static_cast<int>(members.size());
            auto [alpha, beta] = differential_numeric(comp, rec.y_cycle).eigenvalues();
            rec.multiplier_small = alpha;
            rec.multiplier_large = beta;
            rec.classification = classify_multipliers(alpha, beta);
            rec.unstable_multiplier_equals_degree =
                unstable_multiplier_matches_degree(beta, comp.degree());
            records.push_back(std::move(rec));
        }
        return records;
    }
    throw SolveError("fixed-point solve failed after " + std::to_string(opts.max_attempts) +
                     " random combinations; worst residual " + std::to_string(worst));
}

MultiplierGroupReport multiplier_group_bound_check(const HenonComposition& comp,
                                                   const std::vector<FixedPointRecord>& records,
                                                   double multiplier_tolerance) {
    MultiplierGroupReport report;
    report.degree = comp.degree();
    if (comp.jacobian().norm2() >= 1) {
        report.verdict = "inapplicable: |jacobian| >= 1";
        return report;
    }
    if (comp.n() < 3) {
        report.verdict = "inapplicable: needs at least three factors";
        return report;
    }
    for (const auto& rec : records)
        if (rec.multiplicity != 1) {
            report.verdict = "inapplicable: non-distinct spectrum";
            return report;
        }
    if (records.size() != static_cast<size_t>(report.degree)) {
        report.verdict = "inapplicable: non-distinct spectrum";
        return report;
    }

    std::vector<const FixedPointRecord*> usable;
    for (const auto& rec : records) {
        if (rec.classification == FixedPointClass::semi_neutral)
            ++report.excluded_semi_neutral;
        else
            usable.push_back(&rec);
    }

    std::vector<int> parent(usable.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t a = 0; a < usable.size(); ++a)
        for (size_t b = a + 1; b < usable.size(); ++b) {
            bool same =
                std::abs(usable[a]->multiplier_small - usable[b]->multiplier_small) <=
                    multiplier_tolerance &&
                std::abs(usable[a]->multiplier_large - usable[b]->multiplier_large) <=
                    multiplier_tolerance;
            if (same) parent[find(static_cast<int>(b))] = find(static_cast<int>(a));
        }
    std::map<int, int> sizes;
    for (size_t k = 0; k < usable.size(); ++k) ++sizes[find(static_cast<int>(k))];
    for (const auto& [root, size] : sizes) report.largest_group = std::max(report.largest_group, size);
    report.group_count = static_cast<int>(sizes.size());
    report.applicable = true;
    report.bound_violated = report.largest_group > report.degree - 2;
    report.verdict = report.bound_violated ? "violated" : "ok";
    return report;
}

MultiplierGroupReport multiplier_group_bound_check(const HenonComposition& comp,
                                                   double multiplier_tolerance,
                                                   const SolveOptions& opts) {
    return multiplier_group_bound_check(comp, solve_fixed_points(comp, opts),
                                        multiplier_tolerance);
}

std::vector<cd> univariate_roots(const std::vector<cd>& coeffs) {
    size_t k = coeffs.size();
    if (k == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(k, k);
    for (size_t r = 1; r < k; ++r) companion(static_cast<Eigen::Index>(r),
                                             static_cast<Eigen::Index>(r - 1)) = 1.0;
    for (size_t r = 0; r < k; ++r)
        companion(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k - 1)) = -coeffs[r];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<cd> roots(k);
    for (size_t r = 0; r < k; ++r) roots[r] = solver.eigenvalues()(static_cast<Eigen::Index>(r));
    return roots;
}

}  // namespace henon
