#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddelab/exact/mpoly.hpp"

namespace ddelab {

/// Element of the fraction field Q(i)(session symbols).
///
/// The denominator is held as a product of monic polynomial factors with
/// positive exponents; the numerator carries every scalar. No multivariate gcd
/// is ever computed: after each operation the numerator is trial-divided by
/// the denominator factors, which keeps fractions small in practice but does
/// not make them canonical. Zero testing is still exact, since a fraction is
/// zero iff its numerator is the zero polynomial.
class FieldElem {
public:
    struct Factor {
        MPoly poly;
        int exp = 0;
    };

    FieldElem() = default;
    FieldElem(long c) : num_(c) {}
    FieldElem(const GaussianRational& c) : num_(c) {}
    FieldElem(const MPoly& p) : num_(p) {}

    static FieldElem var(Var v) { return FieldElem(MPoly::var(v)); }
    static FieldElem fraction(const MPoly& num, const MPoly& den);

    const MPoly& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    /// Expanded denominator polynomial.
    MPoly den() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool depends_on(Var v) const;
    std::uint32_t support_mask() const;
    /// The value when the element is a plain Q(i) constant.
    std::optional<GaussianRational> as_constant() const;

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    FieldElem operator-() const;

    /// Exact identity test through the difference.
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    FieldElem inverse() const;
    FieldElem pow(int e) const;
    FieldElem derivative(Var v) const;
    FieldElem substitute(Var v, const MPoly& value) const;
    FieldElem shift(Var v, const GaussianRational& c) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> values) const;

    std::string to_string() const;

private:
    void add_den_factor(const MPoly& p, int exp);
    void cancel();

    MPoly num_;
    std::vector<Factor> den_;
};

/// True iff F is identically zero as a rational expression.
inline bool frac_is_zero(const FieldElem& f) { return f.is_zero(); }

} // namespace ddelab
