#include "ddelab/exact/field_elem.hpp"

#include <algorithm>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

using Factor = FieldElem::Factor;

struct Content {
    GaussianRational scale;
    Monomial monomial{};
    MPoly rest;
};

// p = scale * x^monomial * rest with rest monic and free of monomial content.
Content split_content(const MPoly& p) {
    Content c;
    Monomial m = p.terms().front().exps;
    for (const auto& t : p.terms())
        for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], t.exps[i]);
    std::vector<Term> terms = p.terms();
    for (auto& t : terms)
        for (int i = 0; i < kNumVars; ++i) t.exps[i] = static_cast<std::uint16_t>(t.exps[i] - m[i]);
    c.rest = MPoly::from_terms(std::move(terms));
    c.scale = c.rest.leading().coeff;
    c.rest *= c.scale.inverse();
    c.monomial = m;
    return c;
}

bool is_single_monomial(const MPoly& p) { return p.size() == 1; }

std::optional<MPoly> divide_by_monomial(const MPoly& p, const Monomial& m) {
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) {
        if (!monomial_divides(m, t.exps)) return std::nullopt;
        for (int i = 0; i < kNumVars; ++i) t.exps[i] = static_cast<std::uint16_t>(t.exps[i] - m[i]);
    }
    return MPoly::from_terms(std::move(terms));
}

std::optional<MPoly> try_divide(const MPoly& num, const MPoly& factor) {
    if (is_single_monomial(factor)) return divide_by_monomial(num, factor.leading().exps);
    return num.divide_exact(factor);
}

void insert_factor(std::vector<Factor>& list, const MPoly& poly, int exp) {
    auto it = std::lower_bound(list.begin(), list.end(), poly,
                               [](const Factor& f, const MPoly& p) { return f.poly < p; });
    if (it != list.end() && it->poly == poly)
        it->exp += exp;
    else
        list.insert(it, Factor{poly, exp});
}

MPoly expand(const std::vector<Factor>& list) {
    MPoly r(1);
    for (const auto& f : list) r *= f.poly.pow(static_cast<unsigned>(f.exp));
    return r;
}

// Divide `num` by as many powers of the factors in `den` as possible,
// lowering their exponents; factors that reach exponent zero are removed.
void cross_cancel(MPoly& num, std::vector<Factor>& den) {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto& f : den) {
        while (f.exp > 0) {
            auto q = try_divide(num, f.poly);
            if (!q) break;
            num = std::move(*q);
            --f.exp;
        }
    }
    std::erase_if(den, [](const Factor& f) { return f.exp == 0; });
}

} // namespace

FieldElem FieldElem::fraction(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw DomainError("fraction with zero denominator");
    FieldElem r(num);
    if (r.is_zero()) return r;
    r.add_den_factor(den, 1);
    r.cancel();
    return r;
}

void FieldElem::add_den_factor(const MPoly& p, int exp) {
    Content c = split_content(p);
    num_ *= c.scale.pow(static_cast<unsigned>(exp)).inverse();
    for (int i = 0; i < kNumVars; ++i)
        if (c.monomial[i]) insert_factor(den_, MPoly::var_index(i), c.monomial[i] * exp);
    if (!c.rest.is_constant()) insert_factor(den_, c.rest, exp);
}

void FieldElem::cancel() { cross_cancel(num_, den_); }

MPoly FieldElem::den() const { return expand(den_); }

bool FieldElem::depends_on(Var v) const {
    if (num_.depends_on(v)) return true;
    return std::any_of(den_.begin(), den_.end(), [v](const Factor& f) { return f.poly.depends_on(v); });
}

std::uint32_t FieldElem::support_mask() const {
    std::uint32_t m = num_.support_mask();
    for (const auto& f : den_) m |= f.poly.support_mask();
    return m;
}

std::optional<GaussianRational> FieldElem::as_constant() const {
    if (!den_.empty() || !num_.is_constant()) return std::nullopt;
    return num_.constant_coeff();
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    bool same_den = den_.size() == o.den_.size();
    for (std::size_t i = 0; same_den && i < den_.size(); ++i)
        same_den = den_[i].exp == o.den_[i].exp && den_[i].poly == o.den_[i].poly;
    if (same_den) {
        num_ += o.num_;
        cancel();
        return *this;
    }
    // Least common multiple of the two factor lists (matched structurally).
    std::vector<Factor> lcm;
    std::vector<Factor> cof_a, cof_b;
    std::size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
        if (j == o.den_.size() || (i < den_.size() && den_[i].poly < o.den_[j].poly)) {
            lcm.push_back(den_[i]);
            cof_b.push_back(den_[i]);
            ++i;
        } else if (i == den_.size() || o.den_[j].poly < den_[i].poly) {
            lcm.push_back(o.den_[j]);
            cof_a.push_back(o.den_[j]);
            ++j;
        } else {
            int e = std::max(den_[i].exp, o.den_[j].exp);
            lcm.push_back(Factor{den_[i].poly, e});
            if (e > den_[i].exp) cof_a.push_back(Factor{den_[i].poly, e - den_[i].exp});
            if (e > o.den_[j].exp) cof_b.push_back(Factor{den_[i].poly, e - o.den_[j].exp});
            ++i;
            ++j;
        }
    }
    num_ = num_ * expand(cof_a) + o.num_ * expand(cof_b);
    den_ = std::move(lcm);
    cancel();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = FieldElem();
    MPoly other_num = o.num_;
    std::vector<Factor> other_den = o.den_;
    cross_cancel(num_, other_den);
    cross_cancel(other_num, den_);
    num_ *= other_num;
    for (const auto& f : other_den) insert_factor(den_, f.poly, f.exp);
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DomainError("division by zero field element");
    FieldElem r(expand(den_));
    r.add_den_factor(num_, 1);
    return r;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.num_ == b.num_ && a.den_.size() == b.den_.size()) {
        bool same = true;
        for (std::size_t i = 0; same && i < a.den_.size(); ++i)
            same = a.den_[i].exp == b.den_[i].exp && a.den_[i].poly == b.den_[i].poly;
        if (same) return true;
    }
    return (a - b).is_zero();
}

FieldElem FieldElem::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return FieldElem(1);
    FieldElem r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_;
    for (auto& f : r.den_) f.exp *= e;
    return r;
}

FieldElem FieldElem::derivative(Var v) const {
    // d/dv [n / prod f_i^e_i] = (n' D - n sum_i e_i f_i' D/f_i) / prod f_i^(e_i+1),
    // D being the product of the factors that involve v.
    FieldElem r;
    std::vector<std::size_t> dep;
    for (std::size_t i = 0; i < den_.size(); ++i)
        if (den_[i].poly.depends_on(v)) dep.push_back(i);
    if (dep.empty()) {
        r.num_ = num_.derivative(v);
        r.den_ = r.num_.is_zero() ? std::vector<Factor>{} : den_;
        r.cancel();
        return r;
    }
    MPoly d_all(1);
    for (std::size_t i : dep) d_all *= den_[i].poly;
    MPoly numerator = num_.derivative(v) * d_all;
    for (std::size_t i : dep) {
        MPoly others(1);
        for (std::size_t k : dep)
            if (k != i) others *= den_[k].poly;
        numerator -= num_ * den_[i].poly.derivative(v) * others * GaussianRational(den_[i].exp);
    }
    r.num_ = std::move(numerator);
    r.den_ = den_;
    for (std::size_t i : dep) ++r.den_[i].exp;
    r.cancel();
    return r;
}

FieldElem FieldElem::substitute(Var v, const MPoly& value) const {
    FieldElem r(num_.substitute(v, value));
    if (r.is_zero()) return r;
    for (const auto& f : den_) {
        MPoly s = f.poly.substitute(v, value);
        if (s.is_zero()) throw DomainError("substitution annihilates a denominator factor");
        r.add_den_factor(s, f.exp);
    }
    r.cancel();
    return r;
}

FieldElem FieldElem::shift(Var v, const GaussianRational& c) const {
    if (c.is_zero()) return *this;
    return substitute(v, MPoly::var(v) + MPoly(c));
}

std::complex<double> FieldElem::evaluate(std::span<const std::complex<double>> values) const {
    std::complex<double> r = num_.evaluate(values);
    for (const auto& f : den_) r /= std::pow(f.poly.evaluate(values), f.exp);
    return r;
}

std::string FieldElem::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d;
    for (const auto& f : den_) {
        if (!d.empty()) d += "*";
        std::string p = f.poly.to_string();
        if (f.poly.size() > 1 || f.exp > 1) p = "(" + p + ")";
        d += p;
        if (f.exp > 1) d += "^" + std::to_string(f.exp);
    }
    return n + "/(" + d + ")";
}

} // namespace ddelab
