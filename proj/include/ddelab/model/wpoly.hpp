#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddelab/exact/laurent_series.hpp"
#include "ddelab/exact/ratfunc.hpp"

namespace ddelab {

/// Polynomial in w whose coefficients are rational functions of z, stored in
/// ascending powers of w with no trailing zero coefficient.
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(std::vector<RatFunc> coeffs);

    static WPoly w() { return WPoly({RatFunc(0), RatFunc(1)}); }
    static WPoly constant(const RatFunc& c) { return WPoly({c}); }
    /// w - root.
    static WPoly linear(const RatFunc& root) { return WPoly({-root, RatFunc(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    const std::vector<RatFunc>& coeffs() const { return c_; }
    RatFunc coeff(int k) const;
    const RatFunc& leading() const;

    WPoly& operator+=(const WPoly& o);
    WPoly& operator-=(const WPoly& o);
    friend WPoly operator+(WPoly a, const WPoly& b) { return a += b; }
    friend WPoly operator-(WPoly a, const WPoly& b) { return a -= b; }
    friend WPoly operator*(const WPoly& a, const WPoly& b);
    WPoly operator-() const;
    WPoly scaled(const RatFunc& s) const;
    WPoly pow(unsigned e) const;
    friend bool operator==(const WPoly& a, const WPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<WPoly, WPoly> divmod(const WPoly& d) const;

    /// P(z, r(z)).
    RatFunc evaluate(const RatFunc& r) const;
    /// Coefficients shifted z -> z + c.
    WPoly shift_z(const GaussianRational& c) const;
    /// Coefficients mapped z -> -z.
    WPoly mirror_z() const;
    /// d/dw.
    WPoly derivative_w() const;

    /// P(zhat + j + t, S(t)).
    LaurentSeries evaluate_series(const LaurentSeries& s, int offset, int terms) const {
        return ls_eval_poly(c_, s, offset, terms);
    }

    std::string to_string() const;

private:
    void trim();
    std::vector<RatFunc> c_;
};

/// Res(P, Q) = lc(P)^deg(Q) * prod Q(root_i(P)); zero iff P and Q share a root.
FieldElem resultant_in_w(const WPoly& p, const WPoly& q);

/// Exact square root of a polynomial in z alone, when one exists.
std::optional<MPoly> poly_sqrt(const MPoly& f);
/// Exact square root of a rational function of z, when one exists.
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& r);

} // namespace ddelab
