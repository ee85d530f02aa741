#include "ddelab/model/dd_polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ddelab {

void DDPolynomial::add_term(RatFunc coeff, std::vector<DDFactor> factors) {
    if (coeff.is_zero()) return;
    std::erase_if(factors, [](const DDFactor& f) { return f.exp == 0; });
    terms_.push_back({std::move(coeff), std::move(factors)});
}

std::vector<GaussianRational> DDPolynomial::shifts() const {
    std::vector<GaussianRational> out;
    for (const auto& t : terms_)
        for (const auto& f : t.factors)
            if (std::find(out.begin(), out.end(), f.shift) == out.end()) out.push_back(f.shift);
    std::sort(out.begin(), out.end());
    return out;
}

int DDPolynomial::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (const auto& f : t.factors) s += f.exp;
        d = std::max(d, s);
    }
    return d;
}

DDPolynomial& DDPolynomial::operator+=(const DDPolynomial& o) {
    for (const auto& t : o.terms_) terms_.push_back(t);
    return *this;
}

DDPolynomial operator*(const DDPolynomial& a, const DDPolynomial& b) {
    DDPolynomial out;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            std::vector<DDFactor> fs = s.factors;
            fs.insert(fs.end(), t.factors.begin(), t.factors.end());
            out.add_term(s.coeff * t.coeff, std::move(fs));
        }
    return out;
}

DDPolynomial DDPolynomial::scaled(const RatFunc& s) const {
    DDPolynomial out;
    for (const auto& t : terms_) out.add_term(t.coeff * s, t.factors);
    return out;
}

std::string DDPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << '(' << terms_[i].coeff.to_string() << ')';
        for (const auto& f : terms_[i].factors) {
            os << "*w" << std::string(static_cast<std::size_t>(f.deriv), '\'');
            os << "(z";
            if (!f.shift.is_zero()) os << '+' << f.shift.to_string(true);
            os << ')';
            if (f.exp != 1) os << '^' << f.exp;
        }
    }
    return os.str();
}

RatFunc substitute_rational(const DDPolynomial& p, const RatFunc& candidate) {
    std::vector<RatFunc> derivs{candidate};
    std::map<std::pair<int, GaussianRational>, RatFunc> cache;
    auto value = [&](const DDFactor& f) -> const RatFunc& {
        auto key = std::make_pair(f.deriv, f.shift);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        while (static_cast<int>(derivs.size()) <= f.deriv) derivs.push_back(derivs.back().derive());
        return cache.emplace(key, derivs[static_cast<std::size_t>(f.deriv)].shift(f.shift)).first->second;
    };
    RatFunc acc(0);
    for (const auto& t : p.terms()) {
        RatFunc term = t.coeff;
        for (const auto& f : t.factors) term *= value(f).pow(f.exp);
        acc += term;
    }
    return acc;
}

namespace {

DDPolynomial w_power(int e) {
    DDPolynomial p;
    p.add_term(RatFunc(1), {{GaussianRational(0), 0, e}});
    return p;
}

DDPolynomial from_wpoly(const WPoly& q) {
    DDPolynomial p;
    for (int k = 0; k <= q.degree(); ++k) p.add_term(q.coeff(k), {{GaussianRational(0), 0, k}});
    return p;
}

DDPolynomial difference() {
    DDPolynomial p;
    p.add_term(RatFunc(1), {{GaussianRational(1), 0, 1}});
    p.add_term(RatFunc(-1), {{GaussianRational(-1), 0, 1}});
    return p;
}

DDPolynomial derivative_term(const RatFunc& coeff) {
    DDPolynomial p;
    p.add_term(coeff, {{GaussianRational(0), 1, 1}});
    return p;
}

} // namespace

DDPolynomial cleared_form(const DelayDiffEq& eq) {
    switch (eq.cls) {
    case EqClass::LogDeriv: {
        const DDPolynomial q = from_wpoly(eq.Q);
        return w_power(1) * q * difference() + derivative_term(eq.a) * q + (w_power(1) * from_wpoly(eq.P)).scaled(-1);
    }
    case EqClass::PureLogDeriv:
        return w_power(1) * difference() + derivative_term(eq.a) + w_power(1).scaled(-eq.b);
    case EqClass::InverseSquare:
        return w_power(2) * difference() + derivative_term(-eq.a) + w_power(1).scaled(-eq.b) +
               w_power(2).scaled(-eq.c);
    }
    return {};
}

} // namespace ddelab
