#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddelab/model/wpoly.hpp"

namespace ddelab {

struct QFactor {
    RatFunc root;
    int mult = 1;
};

/// Q = lead * prod (w - root)^mult * residual.
struct FactoredQ {
    RatFunc lead{1};
    std::vector<QFactor> factors;
    /// Monic factor without rational roots, taken on assertion.
    std::optional<WPoly> residual;

    WPoly expand() const;
    int degree() const;
    /// Throws DomainError when two roots coincide.
    void check_distinct_roots() const;
};

/// Factors a polynomial of degree at most 2 into rational roots, when the
/// discriminant is a perfect square in Q(i)(z).
std::optional<FactoredQ> factor_small(const WPoly& q);

enum class EqClass { LogDeriv, PureLogDeriv, InverseSquare };

std::string class_name(EqClass c);
std::optional<EqClass> class_from_name(const std::string& name);

/// One of the three equation classes, all written as
///   w(z+1) - w(z-1) = N(z, w(z), w'(z))
/// where
///   LogDeriv:      N = -a w'/w + P/Q
///   PureLogDeriv:  N = -a w'/w + b
///   InverseSquare: N = (a w' + b w)/w^2 + c.
struct DelayDiffEq {
    std::string id;
    EqClass cls = EqClass::PureLogDeriv;
    RatFunc a, b, c;
    WPoly P, Q;
    FactoredQ q_factors;
    /// Normalization performed on the input, e.g. rescaling to monic Q.
    std::vector<std::string> notes;

    static DelayDiffEq log_deriv(RatFunc a, WPoly p, FactoredQ q);
    static DelayDiffEq pure_log_deriv(RatFunc a, RatFunc b);
    static DelayDiffEq inverse_square(RatFunc a, RatFunc b, RatFunc c);

    /// The equation satisfied by v(z) = w(-z), in the same class.
    DelayDiffEq mirrored() const;
    /// The equation satisfied by v(z) = w(z + s).
    DelayDiffEq shifted(long s) const;

    bool a_constant() const { return a.is_constant(); }
    bool b_constant() const { return b.is_constant(); }
    bool c_constant() const { return c.is_constant(); }

    /// N evaluated on the local expansion of w at zhat + j.
    LaurentSeries rhs_series(const LaurentSeries& w, int offset, int terms) const;

    std::string to_string() const;
};

struct DegreeReport {
    int deg_p = 0;
    int deg_q = 0;
    int deg_r = 0;
};

/// Degree data of the right-hand side P/Q as a rational function of w.
DegreeReport mohonko_degree(const DelayDiffEq& eq);

} // namespace ddelab
