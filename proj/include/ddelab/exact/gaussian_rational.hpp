#pragma once

#include <complex>
#include <compare>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace ddelab {

using Rational = mpq_class;

/// Element of Q(i): re + im*i with both parts kept in lowest terms.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(const Rational& re, const Rational& im = 0) : re_(re), im_(im) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    /// True when both parts are integers.
    bool is_gaussian_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Total order (re first, then im); only used for canonical sorting.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    GaussianRational pow(unsigned e) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// "3", "-1/2", "2*i", "(1/2+3*i)" style rendering; `wrap` parenthesizes
    /// two-part values so they can be used as a factor.
    std::string to_string(bool wrap = false) const;

    /// Exact square root in Q(i) when one exists.
    std::optional<GaussianRational> sqrt_exact() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::optional<Rational> rational_sqrt(const Rational& q);

} // namespace ddelab
