#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "henon/henon_map.hpp"

namespace henon {

// Monomial basis of the quotient ring: the box of exponents with
// 0 <= a_i <= d_i - 1, i.e. exactly the monomials not divisible by any
// leading monomial y_i^{d_i} of the fixed-point system. Ascending graded-lex.
struct QuotientBasis {
    std::vector<Exponent> monomials;
    size_t dimension() const { return monomials.size(); }
};

QuotientBasis quotient_basis(const HenonComposition& comp);

enum class CoeffMode { exact, floating };

// Matrix of multiplication by y_i on the quotient ring in the box basis.
// Exact mode reduces with rational arithmetic and converts at the end;
// floating mode runs the division in complex doubles.
Eigen::MatrixXcd multiplication_matrix(const HenonComposition& comp, size_t var_index,
                                       CoeffMode mode = CoeffMode::exact);

struct SolveOptions {
    double tolerance = 1e-8;       // max |phi_i| allowed after polish
    double cluster_radius = 1e-6;  // absolute radius for multiplicity grouping
    std::uint64_t seed = 20250808;
    int max_attempts = 5;  // fresh random combinations before giving up
};

enum class FixedPointClass { saddle, attracting, repelling, semi_neutral, indeterminate };

std::string to_string(FixedPointClass c);

// Classification bands use eps around the unit circle: anything with a
// multiplier modulus within eps of 1 is semi-neutral.
FixedPointClass classify_multipliers(cd alpha, cd beta, double eps = 1e-6);

// Diagnostic: the unstable multiplier coincides with the composition degree.
inline bool unstable_multiplier_matches_degree(cd beta, std::int64_t degree) {
    double d = static_cast<double>(degree);
    return std::abs(beta - d) < 1e-6 * d;
}

struct FixedPointRecord {
    std::vector<cd> y_cycle;  // (y_1,...,y_n)
    PointC2 point;            // (y_n, y_1)
    double residual = 0.0;    // max_i |phi_i| at the cycle
    int multiplicity = 1;     // cluster cardinality
    cd multiplier_small;      // alpha, |alpha| <= |beta|
    cd multiplier_large;      // beta
    FixedPointClass classification = FixedPointClass::indeterminate;
    bool unstable_multiplier_equals_degree = false;  // |beta - d| < 1e-6 * d
};

// Enumerates all d fixed points (with multiplicity) by eigen-decomposing a
// random real combination of the multiplication matrices, reading the
// coordinates off per-variable Rayleigh quotients, and polishing with one
// Newton step on the fixed-point system. Multiplicities sum to d.
std::vector<FixedPointRecord> solve_fixed_points(const HenonComposition& comp,
                                                 const SolveOptions& opts = {});

struct MultiplierGroupReport {
    bool applicable = false;
    std::string verdict;  // "ok" or the reason the check does not apply
    int largest_group = 0;
    int group_count = 0;
    int excluded_semi_neutral = 0;
    std::int64_t degree = 0;
    bool bound_violated = false;  // largest_group > d - 2
};

// Groups fixed points by multiplier pair (within the tolerance) and checks
// that no d-1 of them share multipliers. Requires |jacobian| < 1, n >= 3 and
// d distinct fixed points; otherwise reports inapplicable without asserting.
MultiplierGroupReport multiplier_group_bound_check(const HenonComposition& comp,
                                                   const std::vector<FixedPointRecord>& records,
                                                   double multiplier_tolerance = 1e-6);

MultiplierGroupReport multiplier_group_bound_check(const HenonComposition& comp,
                                                   double multiplier_tolerance = 1e-6,
                                                   const SolveOptions& opts = {});

// Roots of the monic polynomial y^k + coeffs[k-1]*y^{k-1} + ... + coeffs[0]
// via the companion matrix. Test oracle for the n = 1 solver path.
std::vector<cd> univariate_roots(const std::vector<cd>& coeffs);

}  // namespace henon
