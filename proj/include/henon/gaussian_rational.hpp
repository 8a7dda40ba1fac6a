#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace henon {

using Rational = mpq_class;

// Parses "num/den", integer, or plain decimal ("-1.25" -> -5/4).
// Decimal strings expand literally; no exponent notation.
Rational rational_from_string(const std::string& text);

// Exact conversion of a finite double (mantissa * 2^exp).
Rational rational_from_double(double value);

// "a/b", or "a" when the denominator is 1. Always lowest terms.
std::string rational_to_string(const Rational& q);

// Complex number with exact rational real and imaginary parts.
// Value type; all arithmetic is exact.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        // mpq equality assumes canonical form; enforce it at the boundary
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational from_complex(std::complex<double> z) {
        return {rational_from_double(z.real()), rational_from_double(z.imag())};
    }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    // |z|^2 as an exact rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Canonical text form: "a/b", "c/d*i", or "a/b+c/d*i" (minus sign folded in).
    std::string str() const;

  private:
    Rational re_;
    Rational im_;
};

// Parses the canonical forms produced by str(), plus bare rationals/decimals.
GaussianRational gaussian_from_string(const std::string& text);

}  // namespace henon
