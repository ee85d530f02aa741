#include "ddelab/exact/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "ddelab/exact/errors.hpp"

namespace ddelab {

LaurentSeries LaurentSeries::exact_zero(int offset) {
    LaurentSeries s;
    s.offset_ = offset;
    return s;
}

LaurentSeries LaurentSeries::zero_to(int precision, int offset) {
    LaurentSeries s;
    s.exact_zero_ = false;
    s.offset_ = offset;
    s.order_ = precision;
    return s;
}

LaurentSeries LaurentSeries::monomial(const FieldElem& c, int power, int rel_precision, int offset) {
    if (rel_precision < 1) throw DomainError("series needs at least one coefficient");
    std::vector<FieldElem> cs(static_cast<std::size_t>(rel_precision));
    cs[0] = c;
    return from_coeffs(power, std::move(cs), offset);
}

LaurentSeries LaurentSeries::from_coeffs(int order, std::vector<FieldElem> coeffs, int offset) {
    LaurentSeries s;
    s.exact_zero_ = false;
    s.offset_ = offset;
    s.order_ = order;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

void LaurentSeries::normalize() {
    if (exact_zero_) return;
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k == 0) return;
    order_ += static_cast<int>(k);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
}

LaurentSeries LaurentSeries::with_offset(int j) const {
    LaurentSeries s = *this;
    s.offset_ = j;
    return s;
}

int LaurentSeries::order() const {
    if (exact_zero_) throw DomainError("order of the zero series");
    if (c_.empty())
        throw TruncationError("order uncertified: no nonzero coefficient below t^" + std::to_string(order_));
    return order_;
}

const FieldElem& LaurentSeries::leading() const {
    if (c_.empty()) throw TruncationError("leading coefficient of a series that vanishes to truncation");
    return c_.front();
}

FieldElem LaurentSeries::coeff(int power) const {
    if (exact_zero_) return FieldElem();
    if (power >= precision())
        throw TruncationError("coefficient of t^" + std::to_string(power) + " is beyond the truncation window");
    if (power < order_) return FieldElem();
    return c_[static_cast<std::size_t>(power - order_)];
}

LaurentSeries LaurentSeries::truncated(int rel_precision) const {
    if (c_.size() <= static_cast<std::size_t>(std::max(rel_precision, 0))) return *this;
    LaurentSeries s = *this;
    s.c_.resize(static_cast<std::size_t>(std::max(rel_precision, 1)));
    return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    if (o.exact_zero_) return *this;
    if (exact_zero_) {
        *this = o;
        return *this;
    }
    const int prec = std::min(precision(), o.precision());
    const int lo = std::min(order_, o.order_);
    if (lo >= prec) {
        *this = zero_to(prec, offset_);
        return *this;
    }
    std::vector<FieldElem> out(static_cast<std::size_t>(prec - lo));
    for (int p = lo; p < prec; ++p) {
        FieldElem v;
        if (p >= order_ && p - order_ < static_cast<int>(c_.size())) v = c_[static_cast<std::size_t>(p - order_)];
        if (p >= o.order_ && p - o.order_ < static_cast<int>(o.c_.size()))
            v += o.c_[static_cast<std::size_t>(p - o.order_)];
        out[static_cast<std::size_t>(p - lo)] = std::move(v);
    }
    order_ = lo;
    c_ = std::move(out);
    normalize();
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
    if (exact_zero_) return *this;
    if (o.exact_zero_) {
        *this = exact_zero(offset_);
        return *this;
    }
    if (c_.empty() || o.c_.empty()) {
        *this = zero_to(order_ + o.order_, offset_);
        return *this;
    }
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<FieldElem> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        FieldElem acc;
        for (std::size_t i = 0; i <= k; ++i) {
            if (c_[i].is_zero() || o.c_[k - i].is_zero()) continue;
            acc += c_[i] * o.c_[k - i];
        }
        out[k] = std::move(acc);
    }
    order_ += o.order_;
    c_ = std::move(out);
    normalize();
    return *this;
}

LaurentSeries LaurentSeries::scaled(const FieldElem& c) const {
    if (exact_zero_ || c_.empty()) return *this;
    if (c.is_zero()) return exact_zero(offset_);
    LaurentSeries s = *this;
    for (auto& x : s.c_) x *= c;
    return s;
}

LaurentSeries LaurentSeries::inverse() const {
    if (exact_zero_) throw DomainError("inverse of the zero series");
    if (c_.empty()) throw TruncationError("inverse of a series that vanishes to truncation");
    const std::size_t n = c_.size();
    const FieldElem inv0 = c_[0].inverse();
    std::vector<FieldElem> r(n);
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        FieldElem acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (c_[i].is_zero() || r[k - i].is_zero()) continue;
            acc += c_[i] * r[k - i];
        }
        if (!acc.is_zero()) r[k] = -(acc * inv0);
    }
    return from_coeffs(-order_, std::move(r), offset_);
}

LaurentSeries LaurentSeries::pow(unsigned n) const {
    if (n == 0) {
        const int m = c_.empty() ? kDefaultTruncation : static_cast<int>(c_.size());
        return monomial(FieldElem(1), 0, m, offset_);
    }
    LaurentSeries base = *this;
    LaurentSeries result;
    bool first = true;
    while (n > 0) {
        if (n & 1u) {
            if (first) {
                result = base;
                first = false;
            } else {
                result *= base;
            }
        }
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return result;
}

LaurentSeries LaurentSeries::derivative() const {
    if (exact_zero_) return *this;
    if (c_.empty()) return zero_to(order_ - 1, offset_);
    std::vector<FieldElem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const long p = order_ + static_cast<long>(i);
        if (p != 0) out[i] = c_[i] * FieldElem(p);
    }
    return from_coeffs(order_ - 1, std::move(out), offset_);
}

std::string LaurentSeries::to_string() const {
    if (exact_zero_) return "0";
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (any) os << " + ";
        const int p = order_ + static_cast<int>(i);
        os << '(' << c_[i].to_string() << ')';
        if (p != 0) os << "*t^" << p;
        any = true;
    }
    if (any) os << " + ";
    os << "O(t^" << precision() << ')';
    return os.str();
}

LaurentSeries ls_log_derivative(const LaurentSeries& s) {
    if (s.is_exact_zero() || s.is_zero_to_truncation()) throw DomainError("log-derivative of zero series");
    return s.derivative() * s.inverse();
}

namespace {

LaurentSeries poly_series_at(const MPoly& p, int offset, int terms) {
    const MPoly point = MPoly::var(Var::zhat) + MPoly(GaussianRational(offset)) + MPoly::var(Var::z);
    auto cs = p.substitute(Var::z, point).coefficients_in(Var::z);
    std::vector<FieldElem> out(static_cast<std::size_t>(terms));
    for (std::size_t k = 0; k < out.size() && k < cs.size(); ++k) out[k] = FieldElem(cs[k]);
    return LaurentSeries::from_coeffs(0, std::move(out), offset);
}

} // namespace

LaurentSeries taylor_at(const FieldElem& f, int offset, int terms) {
    if (terms < 1) throw DomainError("series needs at least one coefficient");
    if (f.is_zero()) return LaurentSeries::exact_zero(offset);
    LaurentSeries s = poly_series_at(f.num(), offset, terms);
    for (const auto& fac : f.den_factors()) {
        if (!fac.poly.depends_on(Var::z)) {
            s = s.scaled(FieldElem(fac.poly).pow(-fac.exp));
            continue;
        }
        s *= poly_series_at(fac.poly, offset, terms).inverse().pow(static_cast<unsigned>(fac.exp));
    }
    return s;
}

LaurentSeries ls_eval_poly(const std::vector<RatFunc>& coeffs, const LaurentSeries& s, int offset, int terms) {
    LaurentSeries result = LaurentSeries::exact_zero(offset);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        result *= s;
        if (!coeffs[k].is_zero()) result += taylor_at(coeffs[k], offset, terms);
    }
    return result.with_offset(offset);
}

LaurentSeries ls_compose_rational(const RationalInW& r, const LaurentSeries& s, int offset) {
    int terms = s.rel_precision();
    if (s.is_zero_to_truncation()) terms = std::max(s.precision(), 1);
    else if (s.is_regular()) terms += std::max(s.order(), 0);
    terms = std::max(terms, 1);
    LaurentSeries den = ls_eval_poly(r.den, s, offset, terms);
    if (den.is_exact_zero() || den.is_zero_to_truncation())
        throw TruncationError("indeterminate composition; raise truncation");
    return ls_eval_poly(r.num, s, offset, terms) * den.inverse();
}

} // namespace ddelab
