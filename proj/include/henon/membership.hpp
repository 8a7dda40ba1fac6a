#pragma once

#include <optional>
#include <string>
#include <vector>

#include "henon/division.hpp"
#include "henon/henon_map.hpp"

namespace henon {

// Exact-arithmetic membership certificate for a target polynomial against
// the fixed-point system. Meaningful only when basis_verified is true (the
// system passed the Buchberger check), in which case is_member is exact:
// the target lies in the ideal iff the remainder vanishes.
struct MembershipReport {
    ExactPoly target;
    DivisionResult<GaussianRational> division;
    bool is_member = false;
    bool basis_verified = false;
    // LM(target) >= LM(A_j * phi_j) for every quotient (division contract).
    bool quotient_leading_bound_ok = false;
    // Leading term of the nonzero remainder.
    std::optional<ExactPoly::Term> remainder_leading;
    // True when LM(target) avoids every y_i^{d_i} (so it survives division).
    bool target_leading_outside_ideal = false;
};

// Runs the Buchberger criterion on the exact fixed-point system.
GroebnerReport<GaussianRational> verify_groebner_system(
    const HenonComposition& comp, CancelToken token = CancelToken::none());

// Divides an arbitrary exact target by the fixed-point system and assembles
// the certificate fields.
MembershipReport membership_against_system(const HenonComposition& comp, ExactPoly target,
                                           CancelToken token = CancelToken::none());

// Certificate that the multiplier polynomial for the given lambda is not a
// member of the fixed-point ideal (nonzero remainder).
MembershipReport phi_membership(const HenonComposition& comp, const GaussianRational& lambda,
                                CancelToken token = CancelToken::none());

// Certificate for (y_1 - alpha) * multiplier polynomial.
MembershipReport shifted_phi_membership(const HenonComposition& comp,
                                        const GaussianRational& lambda,
                                        const GaussianRational& alpha,
                                        CancelToken token = CancelToken::none());

// One scaled squarefree derivative product c * p'_{l1} ... p'_{ls}.
struct SpanTerm {
    std::vector<size_t> indices;  // 0-based, strictly increasing
    GaussianRational coeff;
};

// Input for the structured division identity
//   (y_j - alpha)((p')^J + h)
//     = A*phi_j + B*((p')^{J\{j}} + rho1) + (y_j - alpha)*rho2
// with B = eta_j + d_j*(y_{j+1} + delta_j*y_{j-1}). h must be a combination
// of squarefree products over J with |L| <= |J|-2 and |L| == |J| (mod 2).
struct DecompositionInput {
    std::vector<size_t> index_set;  // J, 0-based, strictly increasing
    size_t pivot = 0;               // j, must lie in J
    GaussianRational alpha;
    std::vector<SpanTerm> h_terms;
};

struct DecompositionReport {
    bool identity_ok = false;
    bool leading_match_ok = false;
    ExactPoly lhs;
    ExactPoly difference;  // lhs - rhs, must be identically zero
    ExactPoly quotient;    // A
    ExactPoly cofactor;    // B
    ExactPoly rho1;
    ExactPoly rho2;
};

DecompositionReport decomposition_identity_verify(const HenonComposition& comp,
                                                  const DecompositionInput& input);

}  // namespace henon
