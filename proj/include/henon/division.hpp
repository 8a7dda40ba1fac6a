#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "henon/polynomial.hpp"

namespace henon {

// Cooperative cancellation for long-running exact divisions. The CLI wires
// this to SIGINT; library callers normally pass none().
class CancelToken {
  public:
    CancelToken() = default;
    explicit CancelToken(std::shared_ptr<const std::atomic<bool>> flag) : flag_(std::move(flag)) {}
    static CancelToken none() { return {}; }
    bool cancelled() const { return flag_ && flag_->load(std::memory_order_relaxed); }

  private:
    std::shared_ptr<const std::atomic<bool>> flag_;
};

template <class F>
struct DivisionResult {
    std::vector<Polynomial<F>> quotients;  // one per divisor, in list order
    Polynomial<F> remainder;
};

// Multivariate division of g by an ordered divisor list: repeatedly reduce
// the current leading term by the first divisor whose leading monomial
// divides it, otherwise move it to the remainder. Guarantees
//   g = sum quotients[j]*divisors[j] + remainder   (exact in exact mode),
// no remainder term divisible by any divisor's leading monomial, and
// LM(g) >= LM(quotients[j]*divisors[j]) for all j.
template <class F>
DivisionResult<F> divide_multivariate(const Polynomial<F>& g,
                                      const std::vector<Polynomial<F>>& divisors,
                                      CancelToken token = CancelToken::none()) {
    for (const auto& d : divisors) {
        g.check_ring(d);
        if (d.is_zero()) throw ZeroDivisorError("zero polynomial in divisor list");
    }
    DivisionResult<F> out;
    out.quotients.assign(divisors.size(), Polynomial<F>(g.nvars()));
    out.remainder = Polynomial<F>(g.nvars());

    std::vector<typename Polynomial<F>::Term> lts;
    lts.reserve(divisors.size());
    for (const auto& d : divisors) lts.push_back(d.leading());

    Polynomial<F> work = g;
    while (!work.is_zero()) {
        if (token.cancelled()) throw CancelledError("division cancelled");
        auto lt = work.leading();
        bool reduced = false;
        for (size_t j = 0; j < divisors.size(); ++j) {
            if (!lts[j].monomial.divides(lt.monomial)) continue;
            Exponent qm = lt.monomial - lts[j].monomial;
            F qc = lt.coefficient / lts[j].coefficient;
            out.quotients[j].add_term(qm, qc);
            work -= divisors[j].times_term(qm, qc);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.add_term(lt.monomial, lt.coefficient);
            work.add_term(lt.monomial, -lt.coefficient);
        }
    }
    return out;
}

// S(f,g) = (L/LT(f))*f - (L/LT(g))*g with L = lcm(LM(f), LM(g)).
// The leading monomials cancel, so LM(S) < L whenever S != 0.
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    f.check_ring(g);
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("s-polynomial of zero");
    auto lf = f.leading();
    auto lg = g.leading();
    Exponent l = lcm(lf.monomial, lg.monomial);
    Polynomial<F> a = f.times_term(l - lf.monomial, FieldTraits<F>::one() / lf.coefficient);
    Polynomial<F> b = g.times_term(l - lg.monomial, FieldTraits<F>::one() / lg.coefficient);
    return a - b;
}

template <class F>
struct GroebnerReport {
    bool is_groebner = false;
    // Witness of the first failing pair, when not a Groebner basis.
    std::optional<std::pair<size_t, size_t>> failing_pair;
    std::optional<Polynomial<F>> witness_remainder;
};

// Buchberger's criterion: the basis is a Groebner basis iff every
// S-polynomial reduces to zero against it. Every pair is divided; no
// coprimality shortcut is taken, so the check is a genuine certificate.
template <class F>
GroebnerReport<F> buchberger_verify(const std::vector<Polynomial<F>>& basis,
                                    CancelToken token = CancelToken::none()) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    for (const auto& b : basis)
        if (b.is_zero()) throw ZeroPolynomialError("zero polynomial in basis");

    GroebnerReport<F> report;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Polynomial<F> s = s_polynomial(basis[i], basis[j]);
            if (s.is_zero()) continue;
            auto division = divide_multivariate(s, basis, token);
            if (!division.remainder.is_zero()) {
                report.is_groebner = false;
                report.failing_pair = {i, j};
                report.witness_remainder = std::move(division.remainder);
                return report;
            }
        }
    }
    report.is_groebner = true;
    return report;
}

}  // namespace henon
