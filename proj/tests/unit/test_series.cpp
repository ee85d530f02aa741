#include <doctest.h>

#include <random>

#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/laurent_series.hpp"

using namespace ddelab;

namespace {

FieldElem alpha() { return FieldElem::var(Var::alpha); }
FieldElem K() { return FieldElem::var(Var::K); }

// Coefficients of a series given directly as rationals, used as an oracle for
// products and quotients computed by hand-rolled convolution below.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(std::min(a.size(), b.size()));
    for (std::size_t k = 0; k < r.size(); ++k)
        for (std::size_t i = 0; i <= k; ++i) r[k] += a[i] * b[k - i];
    return r;
}

LaurentSeries from_rationals(int order, const std::vector<Rational>& c) {
    std::vector<FieldElem> fs;
    for (const auto& x : c) fs.emplace_back(GaussianRational(x));
    return LaurentSeries::from_coeffs(order, fs);
}

} // namespace

TEST_CASE("log-derivative of alpha t") {
    auto s = LaurentSeries::monomial(alpha(), 1, 8);
    auto l = ls_log_derivative(s);
    CHECK(l.order() == -1);
    CHECK(l.leading() == FieldElem(1));
    CHECK(l.coeff(0).is_zero());
}

TEST_CASE("log-derivative of alpha t^p") {
    for (int p : {2, 3}) {
        auto l = ls_log_derivative(LaurentSeries::monomial(alpha(), p, 8));
        CHECK(l.order() == -1);
        CHECK(l.leading() == FieldElem(p));
    }
}

TEST_CASE("log-derivative of K + beta t") {
    FieldElem beta = FieldElem::var(Var::y0);
    auto s = LaurentSeries::from_coeffs(0, {K(), beta, 0, 0, 0, 0});
    auto l = ls_log_derivative(s);
    CHECK(l.order() == 0);
    CHECK(frac_is_zero(l.leading() - beta / K()));
    CHECK(frac_is_zero(l.coeff(1) + beta * beta / (K() * K())));
}

TEST_CASE("log-derivative of the zero series") {
    CHECK_THROWS_WITH_AS(ls_log_derivative(LaurentSeries::exact_zero()), "log-derivative of zero series",
                         DomainError);
    CHECK_THROWS_AS(ls_log_derivative(LaurentSeries::zero_to(5)), DomainError);
}

TEST_CASE("compose 1/w on alpha t") {
    RationalInW r{{RatFunc(1)}, {RatFunc(0), RatFunc(1)}};
    auto out = ls_compose_rational(r, LaurentSeries::monomial(alpha(), 1, 6), 0);
    CHECK(out.order() == -1);
    CHECK(frac_is_zero(out.leading() - FieldElem(1) / alpha()));
}

TEST_CASE("compose w^2 on a/t") {
    RationalInW r{{RatFunc(0), RatFunc(0), RatFunc(1)}, {RatFunc(1)}};
    auto out = ls_compose_rational(r, LaurentSeries::monomial(K(), -1, 6), 0);
    CHECK(out.order() == -2);
    CHECK(out.leading() == K() * K());
}

TEST_CASE("compose (w+1)/(w-1) on 1/t") {
    RationalInW r{{RatFunc(1), RatFunc(1)}, {RatFunc(-1), RatFunc(1)}};
    auto out = ls_compose_rational(r, LaurentSeries::monomial(1, -1, 6), 0);
    // (1+t)/(1-t) = 1 + 2 t + 2 t^2 + ...
    std::vector<Rational> oracle = convolve({1, 1, 0, 0, 0}, {1, 1, 1, 1, 1});
    CHECK(out.order() == 0);
    for (int k = 0; k < 3; ++k) CHECK(out.coeff(k) == FieldElem(GaussianRational(oracle[static_cast<std::size_t>(k)])));
    CHECK(out.coeff(1) == FieldElem(2));
    CHECK(out.coeff(2) == FieldElem(2));
}

TEST_CASE("indeterminate composition") {
    RationalInW r{{RatFunc(1)}, {RatFunc(0), RatFunc(1)}};
    CHECK_THROWS_WITH_AS(ls_compose_rational(r, LaurentSeries::zero_to(4), 0),
                         "indeterminate composition; raise truncation", TruncationError);
}

TEST_CASE("order laws for powers, inverses, log-derivatives") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> ord(-4, 4), cf(-9, 9);
    for (int it = 0; it < 30; ++it) {
        int p = ord(rng);
        std::vector<Rational> c(10);
        for (auto& x : c) x = Rational(cf(rng), 1 + std::abs(cf(rng)));
        if (c[0] == 0) c[0] = 1;
        auto s = from_rationals(p, c);
        for (unsigned q = 1; q <= 3; ++q) CHECK(s.pow(q).order() == static_cast<int>(q) * p);
        CHECK(s.inverse().order() == -p);
        CHECK(frac_is_zero((s * s.inverse()).coeff(0) - FieldElem(1)));
        for (int k = 1; k < 10; ++k) CHECK((s * s.inverse()).coeff(k).is_zero());
        if (p != 0) {
            auto l = ls_log_derivative(s);
            CHECK(l.order() == -1);
            CHECK(l.leading() == FieldElem(p));
        }
        auto sq = s * s;
        auto oracle = convolve(c, c);
        for (int k = 0; k < 10; ++k) CHECK(sq.coeff(2 * p + k) == FieldElem(GaussianRational(oracle[static_cast<std::size_t>(k)])));
    }
}

TEST_CASE("truncation windows propagate") {
    auto a = LaurentSeries::monomial(1, -2, 6);  // precision 4
    auto b = LaurentSeries::monomial(1, 0, 6);   // precision 6
    CHECK((a + b).precision() == 4);
    CHECK((a * b).precision() == 4);
    CHECK_THROWS_AS((a + b).coeff(4), TruncationError);
    auto cancel = a - a;
    CHECK(cancel.is_zero_to_truncation());
    CHECK_THROWS_AS(cancel.order(), TruncationError);
    CHECK_FALSE(cancel.is_exact_zero());
}

TEST_CASE("taylor expansion of rational coefficients at a shifted base point") {
    // 1/(z+1) at zhat + 2 + t: coefficients (-1)^k / (zhat+3)^(k+1)
    RatFunc r = RatFunc(1) / (RatFunc::z() + RatFunc(1));
    auto s = taylor_at(r, 2, 5);
    FieldElem base = FieldElem::var(Var::zhat) + FieldElem(3);
    for (int k = 0; k < 5; ++k) {
        FieldElem expect = FieldElem(k % 2 == 0 ? 1 : -1) / base.pow(k + 1);
        CHECK(frac_is_zero(s.coeff(k) - expect));
    }
    auto poly = taylor_at(RatFunc::z() * RatFunc::z(), -1, 4);
    FieldElem zh = FieldElem::var(Var::zhat) - FieldElem(1);
    CHECK(frac_is_zero(poly.coeff(0) - zh * zh));
    CHECK(frac_is_zero(poly.coeff(1) - FieldElem(2) * zh));
    CHECK(poly.coeff(2) == FieldElem(1));
    CHECK(poly.coeff(3).is_zero());
}
