#pragma once

#include <complex>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ddelab/exact/gaussian_rational.hpp"
#include "ddelab/exact/symbols.hpp"

namespace ddelab {

struct Term {
    Monomial exps{};
    GaussianRational coeff;
};

/// Sparse multivariate polynomial over Q(i) in the session symbols.
/// Terms are kept sorted in decreasing lexicographic monomial order with no
/// zero coefficients, so structural equality is polynomial equality.
class MPoly {
public:
    MPoly() = default;
    MPoly(const GaussianRational& c);
    MPoly(long c) : MPoly(GaussianRational(c)) {}

    static MPoly var(Var v);
    static MPoly var_index(int index);
    static MPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the monomial 1.
    GaussianRational constant_coeff() const;
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const { return terms_.front(); }
    const Term& trailing() const { return terms_.back(); }

    int degree(Var v) const;
    int min_degree(Var v) const;
    bool depends_on(Var v) const;
    /// Bit i set iff the polynomial involves symbol i.
    std::uint32_t support_mask() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const GaussianRational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const GaussianRational& c) { return a *= c; }
    MPoly operator-() const;

    friend bool operator==(const MPoly& a, const MPoly& b);
    /// Total order used to canonically sort factor lists.
    friend std::strong_ordering operator<=>(const MPoly& a, const MPoly& b);

    MPoly pow(unsigned e) const;
    MPoly derivative(Var v) const;
    /// Replace symbol v by `value`.
    MPoly substitute(Var v, const MPoly& value) const;
    /// p(v) -> p(v + c).
    MPoly shift(Var v, const GaussianRational& c) const;
    /// Coefficients of v^0, v^1, ..., v^deg as polynomials free of v.
    std::vector<MPoly> coefficients_in(Var v) const;
    /// Multiply every exponent vector by the monomial `m`.
    MPoly times_monomial(const Monomial& m) const;

    /// Exact quotient if `d` divides this polynomial, otherwise nullopt.
    std::optional<MPoly> divide_exact(const MPoly& d) const;

    std::complex<double> evaluate(std::span<const std::complex<double>> values) const;

    std::string to_string() const;

private:
    void normalize_sorted_unique();
    std::vector<Term> terms_;
};

bool monomial_divides(const Monomial& d, const Monomial& m);

} // namespace ddelab
