#pragma once

#include <string>
#include <vector>

#include "henon/henon_map.hpp"

namespace henon {

// Result of the structural check on the differential entries expanded over
// abstract symbols P_1..P_n standing for the factor derivatives p_j'. Every
// monomial must be a squarefree P-product; the admissible support sizes |L|
// depend on the entry:
//   m11 and m22 - P_1...P_n :  |L| <= n-2 and |L| == n (mod 2)
//   m12, m21                :  |L| <= n-1 and |L| == n-1 (mod 2)
//   multiplier polynomial   :  as m11/m22, with |L| = 0 additionally
//                              admitted (the lambda^2 and jacobian constants)
struct SpanEntryReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> violations;  // offending monomials with reason
    std::vector<int> observed_sizes;      // distinct |L| values seen, ascending
};

struct SpanCheckReport {
    bool ok = true;
    std::vector<SpanEntryReport> entries;
};

SpanCheckReport span_profile_check(const HenonComposition& comp, const GaussianRational& lambda);

}  // namespace henon
