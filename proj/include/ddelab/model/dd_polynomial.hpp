#pragma once

#include <string>
#include <vector>

#include "ddelab/model/equation.hpp"

namespace ddelab {

/// w^(deriv)(z + shift) raised to exp.
struct DDFactor {
    GaussianRational shift;
    int deriv = 0;
    int exp = 1;
};

struct DDTerm {
    RatFunc coeff;
    std::vector<DDFactor> factors;
};

/// Finite sum of rational coefficients times products of shifted derivatives of w.
class DDPolynomial {
public:
    DDPolynomial() = default;

    void add_term(RatFunc coeff, std::vector<DDFactor> factors);
    const std::vector<DDTerm>& terms() const { return terms_; }
    /// Distinct shifts appearing in the terms.
    std::vector<GaussianRational> shifts() const;
    /// Largest total exponent over the terms.
    int total_degree() const;

    DDPolynomial& operator+=(const DDPolynomial& o);
    friend DDPolynomial operator+(DDPolynomial a, const DDPolynomial& b) { return a += b; }
    friend DDPolynomial operator*(const DDPolynomial& a, const DDPolynomial& b);
    DDPolynomial scaled(const RatFunc& s) const;

    std::string to_string() const;

private:
    std::vector<DDTerm> terms_;
};

/// Replaces every w^(m)(z + c) by the m-th derivative of the candidate shifted by c.
RatFunc substitute_rational(const DDPolynomial& p, const RatFunc& candidate);

/// Polynomial form of the equation obtained by clearing w and Q from the denominators:
///   LogDeriv:      w Q (w(z+1) - w(z-1)) + a w' Q - w P
///   PureLogDeriv:  w (w(z+1) - w(z-1)) + a w' - b w
///   InverseSquare: w^2 (w(z+1) - w(z-1)) - a w' - b w - c w^2
DDPolynomial cleared_form(const DelayDiffEq& eq);

} // namespace ddelab
