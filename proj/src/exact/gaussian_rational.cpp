#include "ddelab/exact/gaussian_rational.hpp"

#include "ddelab/exact/errors.hpp"

namespace ddelab {

bool GaussianRational::is_gaussian_integer() const {
    return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

GaussianRational GaussianRational::pow(unsigned e) const {
    GaussianRational result(1);
    GaussianRational base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::string GaussianRational::to_string(bool wrap) const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    std::string s = re_.get_str() + (sgn(im_) > 0 ? "+" : "") + imag;
    return wrap ? "(" + s + ")" : s;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::optional<GaussianRational> GaussianRational::sqrt_exact() const {
    if (sgn(im_) == 0) {
        if (sgn(re_) >= 0) {
            if (auto r = rational_sqrt(re_)) return GaussianRational(*r, 0);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-re_)) return GaussianRational(0, *r);
        return std::nullopt;
    }
    // (u + v i)^2 = re + im i  =>  u^2 = (re + |z|)/2, v = im / (2u)
    auto modulus = rational_sqrt(norm());
    if (!modulus) return std::nullopt;
    auto u = rational_sqrt((re_ + *modulus) / 2);
    if (!u || sgn(*u) == 0) return std::nullopt;
    Rational v = im_ / (2 * *u);
    return GaussianRational(*u, v);
}

} // namespace ddelab
