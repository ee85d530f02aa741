#include "ddelab/model/wpoly.hpp"

#include <sstream>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

WPoly::WPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

void WPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool WPoly::is_monic() const { return !c_.empty() && c_.back() == RatFunc(1); }

RatFunc WPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return RatFunc(0);
    return c_[static_cast<std::size_t>(k)];
}

const RatFunc& WPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

WPoly& WPoly::operator+=(const WPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

WPoly& WPoly::operator-=(const WPoly& o) { return *this += -o; }

WPoly WPoly::operator-() const {
    WPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

WPoly operator*(const WPoly& a, const WPoly& b) {
    if (a.is_zero() || b.is_zero()) return WPoly();
    std::vector<RatFunc> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
    }
    return WPoly(std::move(out));
}

WPoly WPoly::scaled(const RatFunc& s) const {
    std::vector<RatFunc> out = c_;
    for (auto& c : out) c *= s;
    return WPoly(std::move(out));
}

WPoly WPoly::pow(unsigned e) const {
    WPoly r = constant(RatFunc(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::pair<WPoly, WPoly> WPoly::divmod(const WPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    WPoly r = *this;
    const int dd = d.degree();
    if (r.degree() < dd) return {WPoly(), r};
    std::vector<RatFunc> q(static_cast<std::size_t>(r.degree() - dd + 1));
    const RatFunc inv = RatFunc(1) / d.leading();
    while (!r.is_zero() && r.degree() >= dd) {
        const int shift = r.degree() - dd;
        RatFunc f = r.leading() * inv;
        q[static_cast<std::size_t>(shift)] = f;
        std::vector<RatFunc> sub(static_cast<std::size_t>(r.degree() + 1));
        for (int k = 0; k <= dd; ++k) sub[static_cast<std::size_t>(k + shift)] = d.c_[static_cast<std::size_t>(k)] * f;
        WPoly s(std::move(sub));
        r -= s;
    }
    return {WPoly(std::move(q)), r};
}

RatFunc WPoly::evaluate(const RatFunc& r) const {
    RatFunc acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * r + c_[k];
    return acc;
}

WPoly WPoly::shift_z(const GaussianRational& c) const {
    std::vector<RatFunc> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.shift(c));
    return WPoly(std::move(out));
}

WPoly WPoly::mirror_z() const {
    std::vector<RatFunc> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.mirror());
    return WPoly(std::move(out));
}

WPoly WPoly::derivative_w() const {
    if (c_.size() <= 1) return WPoly();
    std::vector<RatFunc> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * RatFunc(static_cast<long>(k));
    return WPoly(std::move(out));
}

std::string WPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool one = c_[k] == RatFunc(1);
        if (k == 0 || !one) os << '(' << c_[k].to_string() << ')';
        if (k > 0) {
            if (!one) os << '*';
            os << 'w';
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

namespace {

FieldElem resultant_rec(const WPoly& a, const WPoly& b) {
    if (a.is_zero() || b.is_zero()) return FieldElem(0);
    const int m = a.degree(), n = b.degree();
    if (n == 0) return b.leading().value().pow(m);
    if (m == 0) return a.leading().value().pow(n);
    const FieldElem sign((m * n) % 2 == 0 ? 1 : -1);
    if (m < n) return sign * resultant_rec(b, a);
    WPoly r = a.divmod(b).second;
    if (r.is_zero()) return FieldElem(0);
    return sign * b.leading().value().pow(m - r.degree()) * resultant_rec(b, r);
}

} // namespace

FieldElem resultant_in_w(const WPoly& p, const WPoly& q) { return resultant_rec(p, q); }

std::optional<MPoly> poly_sqrt(const MPoly& f) {
    if (f.is_zero()) return MPoly();
    if (f.support_mask() & ~(1u << index_of(Var::z))) return std::nullopt;
    const int deg = f.degree(Var::z);
    if (deg % 2 != 0) return std::nullopt;
    auto fc = f.coefficients_in(Var::z);
    auto lead = fc.back().constant_coeff().sqrt_exact();
    if (!lead) return std::nullopt;
    const int d = deg / 2;
    // s = sum s_k z^k, determined from the top down.
    std::vector<GaussianRational> s(static_cast<std::size_t>(d + 1));
    s[static_cast<std::size_t>(d)] = *lead;
    const GaussianRational two_lead = *lead * GaussianRational(2);
    for (int k = d - 1; k >= 0; --k) {
        // coefficient of z^(d+k) in f minus contributions of the known part
        GaussianRational acc = fc[static_cast<std::size_t>(d + k)].constant_coeff();
        for (int i = k + 1; i <= d; ++i) {
            const int j = d + k - i;
            if (j > k && j <= d) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
        }
        s[static_cast<std::size_t>(k)] = acc / two_lead;
    }
    MPoly root;
    for (int k = 0; k <= d; ++k)
        root += MPoly(s[static_cast<std::size_t>(k)]) * MPoly::var(Var::z).pow(static_cast<unsigned>(k));
    if (!(root * root == f)) return std::nullopt;
    return root;
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& r) {
    if (r.is_zero()) return RatFunc(0);
    const MPoly den = r.value().den();
    auto s = poly_sqrt(r.value().num() * den);
    if (!s) return std::nullopt;
    return RatFunc(FieldElem(*s) / FieldElem(den));
}

} // namespace ddelab
