#pragma once

#include <complex>
#include <string>

#include "ddelab/exact/field_elem.hpp"

namespace ddelab {

/// Rational function of z. Coefficients are exact; they may also involve the
/// constant parameters lambda, mu, nu, k, which shifts and derivatives treat
/// as constants.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long c) : f_(c) {}
    RatFunc(const GaussianRational& c) : f_(c) {}
    explicit RatFunc(FieldElem f);

    static RatFunc z() { return RatFunc(FieldElem::var(Var::z)); }

    const FieldElem& value() const { return f_; }

    bool is_zero() const { return f_.is_zero(); }
    /// Free of z (it may still carry parameter symbols).
    bool is_constant() const { return !f_.depends_on(Var::z); }
    /// Exact Q(i) value when the function is a pure number.
    std::optional<GaussianRational> as_number() const { return f_.as_constant(); }

    int num_degree() const;
    int den_degree() const;

    RatFunc& operator+=(const RatFunc& o) { f_ += o.f_; return *this; }
    RatFunc& operator-=(const RatFunc& o) { f_ -= o.f_; return *this; }
    RatFunc& operator*=(const RatFunc& o) { f_ *= o.f_; return *this; }
    RatFunc& operator/=(const RatFunc& o) { f_ /= o.f_; return *this; }
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const { return RatFunc(-f_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.f_ == b.f_; }

    RatFunc pow(int e) const { return RatFunc(f_.pow(e)); }
    /// R(z + c).
    RatFunc shift(const GaussianRational& c) const;
    /// dR/dz.
    RatFunc derive() const { return RatFunc(f_.derivative(Var::z)); }
    /// R(-z).
    RatFunc mirror() const;

    /// R evaluated at the symbolic point zhat + j, as a field element in zhat.
    FieldElem at_base(long j) const;

    /// Numeric value at a complex point; every symbol other than z must be absent.
    std::complex<double> evaluate(std::complex<double> z) const;

    std::string to_string() const { return f_.to_string(); }

private:
    FieldElem f_;
};

/// R(z + c) for a Gaussian-integer shift c.
RatFunc rf_shift(const RatFunc& r, const GaussianRational& c);

} // namespace ddelab
