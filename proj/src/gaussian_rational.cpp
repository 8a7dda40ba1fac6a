#include "henon/gaussian_rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "henon/errors.hpp"

namespace henon {

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s[0] == '+') s.erase(s.begin());  // GMP rejects a leading '+'
    if (s.empty()) throw ValidationError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_plain_integer(num) || !is_plain_integer(den))
            throw ValidationError("bad rational literal: '" + text + "'");
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ValidationError("bad rational literal: '" + text + "'");
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw ValidationError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }

    auto dot = s.find('.');
    if (dot == std::string::npos) {
        if (!is_plain_integer(s)) throw ValidationError("bad rational literal: '" + text + "'");
        return Rational(mpz_class(s));
    }

    // Literal decimal expansion: digits.digits -> digitsdigits / 10^k.
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
        neg = head[0] == '-';
        head.erase(head.begin());
    }
    if (head.empty() && frac.empty()) throw ValidationError("bad decimal literal: '" + text + "'");
    for (char c : head + frac)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("bad decimal literal: '" + text + "'");
    mpz_class numerator(head.empty() ? std::string("0") + frac : head + frac,
                        10);
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
    Rational q(numerator, denominator);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw ValidationError("non-finite value cannot become a rational");
    Rational q;
    mpq_set_d(q.get_mpq_t(), value);  // exact: doubles are dyadic rationals
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero GaussianRational");
    Rational n2 = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n2;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string imag_part;
    if (im_ == 1)
        imag_part = "i";
    else if (im_ == -1)
        imag_part = "-i";
    else
        imag_part = rational_to_string(im_) + "*i";
    if (re_ == 0) return imag_part;
    if (im_ > 0) return rational_to_string(re_) + "+" + imag_part;
    return rational_to_string(re_) + imag_part;  // minus sign already present
}

GaussianRational gaussian_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ValidationError("empty complex literal");

    // Split re/im at the last top-level +/- that is not the leading sign.
    auto split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') split = i;
    bool has_i = s.back() == 'i';
    if (!has_i) return GaussianRational(rational_from_string(s));

    std::string im_text = split == std::string::npos ? s : s.substr(split);
    std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
    // strip trailing "i" and an optional "*"
    im_text.pop_back();
    if (!im_text.empty() && im_text.back() == '*') im_text.pop_back();
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    Rational im = rational_from_string(im_text);
    Rational re = re_text.empty() ? Rational(0) : rational_from_string(re_text);
    return {re, im};
}

}  // namespace henon
