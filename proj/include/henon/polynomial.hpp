#pragma once

#include <complex>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "henon/exponent.hpp"
#include "henon/gaussian_rational.hpp"

namespace henon {

// Coefficient field plumbing. Exact mode keeps coefficients exactly; float
// mode drops anything with magnitude below drop_threshold after every
// arithmetic step (non-certifying, keeps term counts sane).
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {Rational(1)}; }
    static bool is_zero(const GaussianRational& c) { return c.is_zero(); }
    static std::complex<double> to_complex(const GaussianRational& c) { return c.to_complex(); }
    static std::string str(const GaussianRational& c) { return c.str(); }
    static bool needs_parens(const GaussianRational& c) { return !c.is_real() && c.real() != 0; }
};

template <>
struct FieldTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static constexpr double drop_threshold = 1e-10;
    static std::complex<double> zero() { return {}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static bool is_zero(const std::complex<double>& c) { return std::abs(c) < drop_threshold; }
    static std::complex<double> to_complex(const std::complex<double>& c) { return c; }
    static std::string str(const std::complex<double>& c) {
        char buf[64];
        if (c.imag() == 0.0) {
            std::snprintf(buf, sizeof buf, "%.17g", c.real());
            return buf;
        }
        std::string out;
        if (c.real() != 0.0) {
            std::snprintf(buf, sizeof buf, "%.17g", c.real());
            out = buf;
            if (c.imag() > 0) out += "+";
        }
        std::snprintf(buf, sizeof buf, "%.17g", c.imag());
        out += buf;
        out += "*i";
        return out;
    }
    static bool needs_parens(const std::complex<double>& c) { return c.imag() != 0.0 && c.real() != 0.0; }
};

// Sparse multivariate polynomial over F, terms kept in decreasing graded-lex
// order so the leading term is terms().begin(). Canonical form: no stored
// zero coefficients. Immutable in spirit; arithmetic returns new values.
template <class F>
class Polynomial {
  public:
    using Traits = FieldTraits<F>;
    using TermMap = std::map<Exponent, F, GradedLexGreater>;
    struct Term {
        Exponent monomial;
        F coefficient;
    };

    Polynomial() : nvars_(0) {}
    explicit Polynomial(size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(size_t nvars, F c) {
        Polynomial p(nvars);
        p.add_term(Exponent(nvars), std::move(c));
        return p;
    }
    static Polynomial one(size_t nvars) { return constant(nvars, Traits::one()); }
    // Monomial var_index (0-based) to the given power.
    static Polynomial variable_power(size_t nvars, size_t var_index, int power, F c = Traits::one()) {
        Exponent m(nvars);
        m[var_index] = power;
        Polynomial p(nvars);
        p.add_term(m, std::move(c));
        return p;
    }
    static Polynomial variable(size_t nvars, size_t var_index) {
        return variable_power(nvars, var_index, 1);
    }
    static Polynomial monomial(size_t nvars, Exponent m, F c) {
        Polynomial p(nvars);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;  // -1 for the zero polynomial
    }

    // Order-maximal term. Throws for the zero polynomial.
    Term leading() const {
        if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
        return {terms_.begin()->first, terms_.begin()->second};
    }
    const Exponent& leading_monomial() const {
        if (terms_.empty()) throw ZeroPolynomialError("leading monomial of the zero polynomial");
        return terms_.begin()->first;
    }

    F coefficient(const Exponent& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    // Accumulates c on monomial m, erasing the entry if it cancels.
    void add_term(const Exponent& m, F c) {
        if (m.size() != nvars_) throw RingMismatchError("term exponent length mismatch");
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }

    Polynomial scaled(const F& c) const {
        Polynomial r(nvars_);
        if (Traits::is_zero(c)) return r;
        for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
        return r;
    }

    // this * c*y^m  (single-term multiply used heavily by division).
    Polynomial times_term(const Exponent& m, const F& c) const {
        Polynomial r(nvars_);
        if (Traits::is_zero(c)) return r;
        for (const auto& [mm, cc] : terms_) r.add_term(mm + m, cc * c);
        return r;
    }

    Polynomial derivative(size_t var_index) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[var_index] == 0) continue;
            Exponent dm = m;
            dm[var_index] -= 1;
            r.add_term(dm, c * F(static_cast<long>(m[var_index])));
        }
        return r;
    }

    std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const {
        if (point.size() != nvars_) throw RingMismatchError("evaluation point length mismatch");
        std::complex<double> acc = 0.0;
        for (const auto& [m, c] : terms_) {
            std::complex<double> t = Traits::to_complex(c);
            for (size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < m[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text form, terms in decreasing graded-lex order, e.g.
    // "y1^2 - 3/2*y1". Mixed complex coefficients are parenthesized.
    std::string str(const std::string& var = "y") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = Traits::str(c);
            bool negative = cs.size() > 1 && cs[0] == '-' && !Traits::needs_parens(c);
            if (first) {
                first = false;
                if (negative) {
                    out += "-";
                    cs.erase(cs.begin());
                }
            } else {
                if (negative) {
                    out += " - ";
                    cs.erase(cs.begin());
                } else {
                    out += " + ";
                }
            }
            if (m.is_one()) {
                out += Traits::needs_parens(c) ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += monomial_to_string(m, var);
            } else {
                out += (Traits::needs_parens(c) ? "(" + cs + ")" : cs) + "*" + monomial_to_string(m, var);
            }
        }
        return out;
    }

    void check_ring(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw RingMismatchError("polynomials from different rings");
    }

  private:
    size_t nvars_;
    TermMap terms_;
};

using ExactPoly = Polynomial<GaussianRational>;
using FloatPoly = Polynomial<std::complex<double>>;

inline FloatPoly to_float(const ExactPoly& p) {
    FloatPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.to_complex());
    return r;
}

template <class F>
F convert_coeff(const GaussianRational& c);
template <>
inline GaussianRational convert_coeff<GaussianRational>(const GaussianRational& c) {
    return c;
}
template <>
inline std::complex<double> convert_coeff<std::complex<double>>(const GaussianRational& c) {
    return c.to_complex();
}

// Exact evaluation at an exact point.
inline GaussianRational evaluate_exact(const ExactPoly& p, const std::vector<GaussianRational>& point) {
    if (point.size() != p.nvars()) throw RingMismatchError("evaluation point length mismatch");
    GaussianRational acc;
    for (const auto& [m, c] : p.terms()) {
        GaussianRational t = c;
        for (size_t i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < m[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

}  // namespace henon
