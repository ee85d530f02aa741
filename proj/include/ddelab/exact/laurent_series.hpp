#pragma once

#include <climits>
#include <string>
#include <vector>

#include "ddelab/exact/field_elem.hpp"
#include "ddelab/exact/ratfunc.hpp"

namespace ddelab {

inline constexpr int kDefaultTruncation = 16;
inline constexpr int kMaxTruncation = 128;

/// Truncated Laurent series in the local variable t = z - (zhat + j).
///
/// A regular series is t^order * (c[0] + c[1] t + ... + c[M-1] t^(M-1)) + O(t^(order+M))
/// with c[0] != 0, so order is certified. A series whose known coefficients
/// all vanish is stored as O(t^precision) with no coefficients; its order is
/// then unknown and asking for it raises TruncationError. The exact zero has
/// infinite precision.
class LaurentSeries {
public:
    /// The exact zero.
    LaurentSeries() = default;

    static LaurentSeries exact_zero(int offset = 0);
    /// O(t^precision).
    static LaurentSeries zero_to(int precision, int offset = 0);
    /// c t^power + O(t^(power + rel_precision)).
    static LaurentSeries monomial(const FieldElem& c, int power, int rel_precision, int offset = 0);
    /// t^order * sum coeffs[k] t^k + O(t^(order + coeffs.size())); leading zeros are stripped.
    static LaurentSeries from_coeffs(int order, std::vector<FieldElem> coeffs, int offset = 0);

    int offset() const { return offset_; }
    LaurentSeries with_offset(int j) const;

    bool is_exact_zero() const { return exact_zero_; }
    /// True when no nonzero coefficient survives the truncation window.
    bool is_zero_to_truncation() const { return !exact_zero_ && c_.empty(); }
    bool is_regular() const { return !c_.empty(); }

    /// Certified local order; TruncationError when no coefficient survives.
    int order() const;
    /// Absolute precision: coefficients of t^k for k below it are known.
    int precision() const { return exact_zero_ ? INT_MAX : order_ + static_cast<int>(c_.size()); }
    /// Number of known coefficients from the leading one on.
    int rel_precision() const { return static_cast<int>(c_.size()); }

    const FieldElem& leading() const;
    /// Coefficient of t^power; TruncationError beyond the precision.
    FieldElem coeff(int power) const;
    const std::vector<FieldElem>& coeffs() const { return c_; }

    /// Drops coefficients so that at most rel_precision remain.
    LaurentSeries truncated(int rel_precision) const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const LaurentSeries& o);
    LaurentSeries& operator/=(const LaurentSeries& o) { return *this *= o.inverse(); }
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
    friend LaurentSeries operator/(LaurentSeries a, const LaurentSeries& b) { return a /= b; }
    LaurentSeries operator-() const;

    LaurentSeries scaled(const FieldElem& c) const;
    LaurentSeries inverse() const;
    LaurentSeries pow(unsigned n) const;
    /// d/dt.
    LaurentSeries derivative() const;
    /// Applies f to every coefficient (e.g. substitution of a symbol).
    template <class F>
    LaurentSeries map_coeffs(F&& f) const {
        if (exact_zero_ || c_.empty()) return *this;
        std::vector<FieldElem> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return from_coeffs(order_, std::move(out), offset_);
    }

    std::string to_string() const;

private:
    void normalize();

    bool exact_zero_ = true;
    int offset_ = 0;
    int order_ = 0;
    std::vector<FieldElem> c_;
};

/// S'/S. Result has order -1 with leading coefficient order(S).
LaurentSeries ls_log_derivative(const LaurentSeries& s);

/// Taylor expansion of f (a field element in z and constants) at z = zhat + j + t,
/// with `terms` coefficients.
LaurentSeries taylor_at(const FieldElem& f, int offset, int terms);
inline LaurentSeries taylor_at(const RatFunc& r, int offset, int terms) {
    return taylor_at(r.value(), offset, terms);
}

/// Rational function of w whose coefficients are rational functions of z;
/// coefficient vectors are in ascending powers of w.
struct RationalInW {
    std::vector<RatFunc> num;
    std::vector<RatFunc> den{RatFunc(1)};
};

/// Polynomial in w with coefficients in z evaluated on a local series.
LaurentSeries ls_eval_poly(const std::vector<RatFunc>& coeffs, const LaurentSeries& s, int offset, int terms);

/// R(zhat + j + t, S(t)).
LaurentSeries ls_compose_rational(const RationalInW& r, const LaurentSeries& s, int offset);

} // namespace ddelab
