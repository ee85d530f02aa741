#include "ddelab/model/equation.hpp"

#include <sstream>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

WPoly FactoredQ::expand() const {
    WPoly q = WPoly::constant(lead);
    for (const auto& f : factors) q = q * WPoly::linear(f.root).pow(static_cast<unsigned>(f.mult));
    if (residual) q = q * *residual;
    return q;
}

int FactoredQ::degree() const {
    int d = residual ? residual->degree() : 0;
    for (const auto& f : factors) d += f.mult;
    return d;
}

void FactoredQ::check_distinct_roots() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].mult < 1) throw DomainError("factor multiplicity must be positive");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].root == factors[j].root)
                throw DomainError("duplicate factor root " + factors[i].root.to_string());
    }
}

std::optional<FactoredQ> factor_small(const WPoly& q) {
    if (q.is_zero()) return std::nullopt;
    FactoredQ out;
    out.lead = q.leading();
    if (q.degree() == 0) return out;
    if (q.degree() == 1) {
        out.factors.push_back({-q.coeff(0) / q.coeff(1), 1});
        return out;
    }
    if (q.degree() != 2) return std::nullopt;
    const RatFunc p = q.coeff(1) / q.coeff(2), r = q.coeff(0) / q.coeff(2);
    const RatFunc half_p = p / RatFunc(2);
    auto s = ratfunc_sqrt(half_p * half_p - r);
    if (!s) return std::nullopt;
    if (s->is_zero()) {
        out.factors.push_back({-half_p, 2});
    } else {
        out.factors.push_back({-half_p + *s, 1});
        out.factors.push_back({-half_p - *s, 1});
    }
    return out;
}

std::string class_name(EqClass c) {
    switch (c) {
    case EqClass::LogDeriv: return "log-deriv";
    case EqClass::PureLogDeriv: return "pure-log-deriv";
    case EqClass::InverseSquare: return "inverse-square";
    }
    return "?";
}

std::optional<EqClass> class_from_name(const std::string& name) {
    if (name == "log-deriv") return EqClass::LogDeriv;
    if (name == "pure-log-deriv") return EqClass::PureLogDeriv;
    if (name == "inverse-square") return EqClass::InverseSquare;
    return std::nullopt;
}

DelayDiffEq DelayDiffEq::log_deriv(RatFunc a, WPoly p, FactoredQ q) {
    DelayDiffEq eq;
    eq.cls = EqClass::LogDeriv;
    eq.a = std::move(a);
    eq.P = std::move(p);
    eq.Q = q.expand();
    eq.q_factors = std::move(q);
    return eq;
}

DelayDiffEq DelayDiffEq::pure_log_deriv(RatFunc a, RatFunc b) {
    DelayDiffEq eq;
    eq.cls = EqClass::PureLogDeriv;
    eq.a = std::move(a);
    eq.b = std::move(b);
    return eq;
}

DelayDiffEq DelayDiffEq::inverse_square(RatFunc a, RatFunc b, RatFunc c) {
    DelayDiffEq eq;
    eq.cls = EqClass::InverseSquare;
    eq.a = std::move(a);
    eq.b = std::move(b);
    eq.c = std::move(c);
    return eq;
}

DelayDiffEq DelayDiffEq::mirrored() const {
    DelayDiffEq m = *this;
    m.a = a.mirror();
    switch (cls) {
    case EqClass::LogDeriv: {
        m.P = -P.mirror_z();
        FactoredQ q;
        q.lead = q_factors.lead.mirror();
        for (const auto& f : q_factors.factors) q.factors.push_back({f.root.mirror(), f.mult});
        if (q_factors.residual) q.residual = q_factors.residual->mirror_z();
        m.q_factors = q;
        m.Q = Q.mirror_z();
        break;
    }
    case EqClass::PureLogDeriv: m.b = -b.mirror(); break;
    case EqClass::InverseSquare:
        m.b = -b.mirror();
        m.c = -c.mirror();
        break;
    }
    return m;
}

DelayDiffEq DelayDiffEq::shifted(long s) const {
    const GaussianRational g(s);
    DelayDiffEq m = *this;
    m.a = a.shift(g);
    m.b = b.shift(g);
    m.c = c.shift(g);
    m.P = P.shift_z(g);
    m.Q = Q.shift_z(g);
    m.q_factors.lead = q_factors.lead.shift(g);
    for (auto& f : m.q_factors.factors) f.root = f.root.shift(g);
    if (m.q_factors.residual) m.q_factors.residual = m.q_factors.residual->shift_z(g);
    return m;
}

LaurentSeries DelayDiffEq::rhs_series(const LaurentSeries& w, int offset, int terms) const {
    switch (cls) {
    case EqClass::LogDeriv: {
        LaurentSeries out = ls_compose_rational({P.coeffs(), Q.coeffs()}, w, offset);
        if (!a.is_zero()) out -= taylor_at(a, offset, terms) * ls_log_derivative(w);
        return out.with_offset(offset);
    }
    case EqClass::PureLogDeriv: {
        LaurentSeries out = taylor_at(b, offset, terms);
        if (!a.is_zero()) out -= taylor_at(a, offset, terms) * ls_log_derivative(w);
        return out.with_offset(offset);
    }
    case EqClass::InverseSquare: {
        LaurentSeries num = taylor_at(a, offset, terms) * w.derivative() + taylor_at(b, offset, terms) * w;
        LaurentSeries out = num * w.pow(2).inverse() + taylor_at(c, offset, terms);
        return out.with_offset(offset);
    }
    }
    throw DomainError("unknown equation class");
}

std::string DelayDiffEq::to_string() const {
    std::ostringstream os;
    os << "w(z+1) - w(z-1) = ";
    switch (cls) {
    case EqClass::LogDeriv:
        os << "-(" << a.to_string() << ")*w'/w + (" << P.to_string() << ")/(" << Q.to_string() << ')';
        break;
    case EqClass::PureLogDeriv:
        os << "-(" << a.to_string() << ")*w'/w + " << b.to_string();
        break;
    case EqClass::InverseSquare:
        os << "((" << a.to_string() << ")*w' + (" << b.to_string() << ")*w)/w^2 + " << c.to_string();
        break;
    }
    return os.str();
}

DegreeReport mohonko_degree(const DelayDiffEq& eq) {
    DegreeReport r;
    if (eq.cls != EqClass::LogDeriv) throw DomainError("degree report is defined for the log-deriv class");
    r.deg_p = std::max(eq.P.degree(), 0);
    r.deg_q = std::max(eq.Q.degree(), 0);
    r.deg_r = std::max(r.deg_p, r.deg_q);
    return r;
}

} // namespace ddelab
