#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "henon/errors.hpp"

namespace henon {

// Exponent vector of a monomial y1^e1 * ... * yn^en. Entries are >= 0 and the
// length is fixed by the ring the monomial lives in.
struct Exponent {
    std::vector<int> e;

    Exponent() = default;
    explicit Exponent(size_t nvars) : e(nvars, 0) {}
    Exponent(std::initializer_list<int> init) : e(init) {}

    size_t size() const { return e.size(); }
    int operator[](size_t i) const { return e[i]; }
    int& operator[](size_t i) { return e[i]; }

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    }

    bool divides(const Exponent& other) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        Exponent r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    // Requires b.divides(a).
    friend Exponent operator-(const Exponent& a, const Exponent& b) {
        Exponent r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }

    friend Exponent lcm(const Exponent& a, const Exponent& b) {
        Exponent r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.e == b.e; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
};

// Graded lexicographical comparison: total degree first; on a tie, the
// leftmost differing entry decides (larger entry means larger monomial, so
// y1 > y2 > ... > yn). Total, multiplicative, with 1 minimal.
inline std::strong_ordering compare_monomials(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw RingMismatchError("monomial comparison across rings (lengths " +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] <=> b.e[i];
    return std::strong_ordering::equal;
}

// Map comparator putting the largest monomial first.
struct GradedLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return compare_monomials(a, b) == std::strong_ordering::greater;
    }
};

// "y1^2*y3"; "1" for the empty monomial.
inline std::string monomial_to_string(const Exponent& m, const std::string& var = "y") {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var + std::to_string(i + 1);
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace henon
