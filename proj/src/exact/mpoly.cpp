#include "ddelab/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

namespace {

// Decreasing order: larger monomial first.
bool term_before(const Monomial& a, const Monomial& b) { return a > b; }

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

// Merge two sorted term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_before(a[i].exps, b[j].exps))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_before(b[j].exps, a[i].exps)) {
            out.push_back(b[j]);
            if (subtract) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            GaussianRational c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back(Term{a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

bool monomial_divides(const Monomial& d, const Monomial& m) {
    for (int i = 0; i < kNumVars; ++i)
        if (d[i] > m[i]) return false;
    return true;
}

MPoly::MPoly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.push_back(Term{Monomial{}, c});
}

MPoly MPoly::var(Var v) { return var_index(index_of(v)); }

MPoly MPoly::var_index(int index) {
    MPoly p;
    Term t;
    t.exps[static_cast<std::size_t>(index)] = 1;
    t.coeff = GaussianRational(1);
    p.terms_.push_back(std::move(t));
    return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
    MPoly p;
    p.terms_ = std::move(terms);
    p.normalize_sorted_unique();
    return p;
}

void MPoly::normalize_sorted_unique() {
    std::vector<std::size_t> idx(terms_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return term_before(terms_[a].exps, terms_[b].exps);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (std::size_t k : idx) {
        Term& t = terms_[k];
        if (!out.empty() && out.back().exps == t.exps) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Monomial{});
}

GaussianRational MPoly::constant_coeff() const {
    if (!terms_.empty() && terms_.back().exps == Monomial{}) return terms_.back().coeff;
    return GaussianRational(0);
}

int MPoly::degree(Var v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[index_of(v)]));
    return d;
}

int MPoly::min_degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = terms_.front().exps[index_of(v)];
    for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.exps[index_of(v)]));
    return d;
}

bool MPoly::depends_on(Var v) const { return degree(v) > 0; }

std::uint32_t MPoly::support_mask() const {
    std::uint32_t mask = 0;
    for (const auto& t : terms_)
        for (int i = 0; i < kNumVars; ++i)
            if (t.exps[i]) mask |= 1u << i;
    return mask;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.is_zero()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (b.is_constant()) return a * b.terms_[0].coeff;
    if (a.is_constant()) return b * a.terms_[0].coeff;
    const MPoly& small = a.size() <= b.size() ? a : b;
    const MPoly& big = a.size() <= b.size() ? b : a;
    // Each row small[i] * big is already sorted; accumulate row by row.
    std::vector<Term> acc;
    for (const auto& s : small.terms_) {
        std::vector<Term> row;
        row.reserve(big.size());
        for (const auto& t : big.terms_) row.push_back(Term{monomial_mul(s.exps, t.exps), s.coeff * t.coeff});
        acc = acc.empty() ? std::move(row) : merge(acc, row, false);
    }
    MPoly r;
    r.terms_ = std::move(acc);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exps != b.terms_[i].exps || !(a.terms_[i].coeff == b.terms_[i].coeff))
            return false;
    return true;
}

std::strong_ordering operator<=>(const MPoly& a, const MPoly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.terms_[i].exps <=> b.terms_[i].exps; c != 0) return c;
        if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(1);
    MPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

MPoly MPoly::derivative(Var v) const {
    const int vi = index_of(v);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.exps[vi] == 0) continue;
        Term d{t.exps, t.coeff * GaussianRational(static_cast<long>(t.exps[vi]))};
        d.exps[vi] = static_cast<std::uint16_t>(d.exps[vi] - 1);
        out.push_back(std::move(d));
    }
    // Lowering one exponent keeps the lex order among the surviving terms.
    MPoly r;
    r.terms_ = std::move(out);
    return r;
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
    const int vi = index_of(v);
    int deg = degree(v);
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(deg, 0) + 1));
    for (const auto& t : terms_) {
        Term c = t;
        c.exps[vi] = 0;
        buckets[t.exps[vi]].push_back(std::move(c));
    }
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(MPoly::from_terms(std::move(b)));
    return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
    if (!depends_on(v)) return *this;
    auto coeffs = coefficients_in(v);
    MPoly result = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        result *= value;
        result += coeffs[k];
    }
    return result;
}

MPoly MPoly::shift(Var v, const GaussianRational& c) const {
    if (c.is_zero()) return *this;
    return substitute(v, MPoly::var(v) + MPoly(c));
}

MPoly MPoly::times_monomial(const Monomial& m) const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.exps = monomial_mul(t.exps, m);
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (is_zero()) return MPoly();
    if (d.is_constant()) return *this * d.terms_[0].coeff.inverse();
    // Cheap necessary conditions: extreme terms divide and per-symbol degrees fit.
    if (!monomial_divides(d.leading().exps, leading().exps)) return std::nullopt;
    if (!monomial_divides(d.trailing().exps, trailing().exps)) return std::nullopt;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (d.degree(v) > degree(v)) return std::nullopt;
        if (d.min_degree(v) > min_degree(v)) return std::nullopt;
    }
    GaussianRational lc_inv = d.leading().coeff.inverse();
    std::vector<Term> quotient;
    std::vector<Term> rem = terms_;
    while (!rem.empty()) {
        const Term& lt = rem.front();
        if (!monomial_divides(d.leading().exps, lt.exps)) return std::nullopt;
        if (!monomial_divides(d.trailing().exps, rem.back().exps)) return std::nullopt;
        Term q{monomial_div(lt.exps, d.leading().exps), lt.coeff * lc_inv};
        std::vector<Term> scaled;
        scaled.reserve(d.size());
        for (const auto& t : d.terms_) scaled.push_back(Term{monomial_mul(t.exps, q.exps), t.coeff * q.coeff});
        quotient.push_back(std::move(q));
        rem = merge(rem, scaled, true);
    }
    MPoly r;
    r.terms_ = std::move(quotient);
    return r;
}

std::complex<double> MPoly::evaluate(std::span<const std::complex<double>> values) const {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& t : terms_) {
        std::complex<double> v = t.coeff.to_complex();
        for (int i = 0; i < kNumVars; ++i)
            for (int e = 0; e < t.exps[i]; ++e) v *= values[static_cast<std::size_t>(i)];
        sum += v;
    }
    return sum;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            if (!t.exps[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
        }
        GaussianRational c = t.coeff;
        bool negative = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
        if (negative) c = -c;
        std::string piece;
        if (mono.empty())
            piece = c.to_string(true);
        else if (c.is_one())
            piece = mono;
        else
            piece = c.to_string(true) + "*" + mono;
        if (first)
            out += (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

} // namespace ddelab
