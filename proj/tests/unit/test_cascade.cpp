#include <doctest.h>

#include <random>

#include "ddelab/cascade/confinement.hpp"
#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/expr_parser.hpp"

using namespace ddelab;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }
FieldElem zhat() { return FieldElem::var(Var::zhat); }
FieldElem alpha() { return FieldElem::var(Var::alpha); }
FieldElem K() { return FieldElem::var(Var::K); }

SeedSpec zero_seed(int p = 1) {
    SeedSpec s;
    s.p = p;
    return s;
}

} // namespace

TEST_CASE("seed windows") {
    auto d = seed_local_data(zero_seed());
    CHECK(d.window.at(-1).order() == 0);
    CHECK(d.window.at(-1).leading() == K());
    CHECK(d.window.at(0).order() == 1);
    CHECK(d.window.at(0).leading() == alpha());

    SeedSpec pole;
    pole.kind = SeedKind::PoleOfW;
    auto dp = seed_local_data(pole);
    CHECK(dp.window.at(0).order() == -1);
    CHECK(dp.window.at(0).leading() == alpha());

    SeedSpec wb;
    wb.kind = SeedKind::ZeroOfWMinusB;
    wb.p = 2;
    wb.b = RatFunc::z();
    auto db = seed_local_data(wb);
    const auto& s = db.window.at(0);
    CHECK(s.coeff(0) == zhat());
    CHECK(s.coeff(1) == FieldElem(1));
    CHECK(s.coeff(2) == alpha());
    CHECK(s.precision() >= 3);

    SeedSpec bad;
    bad.p = 0;
    CHECK_THROWS_AS(seed_local_data(bad), DomainError);
}

TEST_CASE("steps of the pure log-derivative equation with a = z") {
    auto eq = DelayDiffEq::pure_log_deriv(RatFunc::z(), RatFunc(0));
    auto st = seed_local_data(zero_seed(), 4);
    auto w1 = cascade_step(eq, st, 0);
    CHECK(w1.order() == -1);
    CHECK(w1.leading() == -zhat());
    st.window[1] = w1;
    auto w2 = cascade_step(eq, st, 1);
    CHECK(w2.order() == -1);
    CHECK(w2.leading() == zhat() + FieldElem(1));
    st.window[2] = w2;
    auto w3 = cascade_step(eq, st, 2);
    CHECK(w3.order() == -1);
    CHECK(w3.leading() == FieldElem(2));
}

TEST_CASE("constant a: the chain closes with b(zhat+2) - b(zhat+1)") {
    auto eq = DelayDiffEq::pure_log_deriv(RatFunc(3), R("z^2"));
    auto pat = run_cascade(eq, zero_seed(), 3);
    REQUIRE(pat.certified_count() == 3);
    CHECK(pat.at(1)->order == -1);
    CHECK(pat.at(2)->order == -1);
    CHECK(pat.at(3)->order == 0);
    FieldElem expect = (R("z^2").shift(2) - R("z^2").shift(1)).at_base(0);
    CHECK(frac_is_zero(pat.at(3)->leading - expect));
}

TEST_CASE("inverse-square with a = 1, b = nu confines at offset 3") {
    auto eq = DelayDiffEq::inverse_square(RatFunc(1), RatFunc(GaussianRational(Rational(2, 5))), RatFunc(0));
    auto pat = run_cascade(eq, zero_seed(), 4);
    REQUIRE(pat.certified_count() == 4);
    CHECK(pat.at(1)->order == -2);
    CHECK(pat.at(2)->order == 1);
    CHECK(pat.at(3)->order == 0);
    auto v = confinement_report(pat, eq);
    CHECK(v.kind == ConfinementKind::ConfinedAt);
    CHECK(v.offset == 3);
    for (const auto& w : v.witnesses) CHECK(w.vanishes);
}

TEST_CASE("inverse-square with a = 1, b = z leaves a simple-pole tail") {
    auto eq = DelayDiffEq::inverse_square(RatFunc(1), RatFunc::z(), RatFunc(0));
    auto pat = run_cascade(eq, zero_seed(), 5);
    REQUIRE(pat.certified_count() == 5);
    CHECK(pat.at(3)->order == -1);
    CHECK(pat.at(3)->leading == FieldElem(-2) / alpha());
    CHECK(pat.at(4)->order == 0);
    // -alpha a(zhat+3) / gamma(zhat) with gamma = -2
    CHECK(pat.at(4)->leading == alpha() / FieldElem(2));
    CHECK(pat.at(5)->order == -1);
    auto v = confinement_report(pat, eq);
    CHECK(v.kind == ConfinementKind::SimplePoleTail);
    bool gamma_seen = false;
    for (const auto& w : v.witnesses)
        if (w.name == "gamma(zhat)") {
            gamma_seen = true;
            CHECK(w.value == FieldElem(-2));
        }
    CHECK(gamma_seen);
}

TEST_CASE("gamma closed form") {
    CHECK(gamma_of(RatFunc(1), RatFunc(7)).is_zero());
    CHECK(gamma_of(RatFunc(1), RatFunc::z()) == RatFunc(-2));
    RatFunc lam(FieldElem::var(Var::lambda)), mu(FieldElem::var(Var::mu)), k(FieldElem::var(Var::k));
    RatFunc a = lam + mu * RatFunc::z();
    CHECK(frac_is_zero(gamma_of(a, k * a - mu).value()));
    // a(z) - 2a(z+1) = 0 for a = 2^(-z) is not rational; for rational a it only
    // vanishes when a = 0.
    CHECK_THROWS_WITH_AS(gamma_of(RatFunc(0), RatFunc(1)), "formula singular; use cascade directly", DomainError);
}

TEST_CASE("polynomial blowup") {
    auto w4 = DelayDiffEq::log_deriv(RatFunc(1), WPoly({0, 0, 0, 0, RatFunc(1)}), FactoredQ{});
    auto r = polynomial_blowup(w4, 3);
    CHECK(r.orders == std::vector<int>{4, 16, 64});
    CHECK(r.geometric);
    auto w2 = DelayDiffEq::log_deriv(RatFunc(1), WPoly({0, 0, RatFunc(1)}), FactoredQ{});
    CHECK(polynomial_blowup(w2, 3).orders == std::vector<int>{2, 4, 8});
    auto w1 = DelayDiffEq::log_deriv(RatFunc(1), WPoly({0, RatFunc(1)}), FactoredQ{});
    auto r1 = polynomial_blowup(w1, 3);
    CHECK_FALSE(r1.geometric);
    for (int o : r1.orders) CHECK(o <= 1);

    SeedSpec pole;
    pole.kind = SeedKind::PoleOfW;
    auto pat = run_cascade(w4, pole, 3);
    auto v = confinement_report(pat, w4);
    CHECK(v.kind == ConfinementKind::ExponentialOrderGrowth);
    CHECK(v.ratio == 4);
}

TEST_CASE("leading coefficients do not depend on the truncation") {
    auto eq = DelayDiffEq::inverse_square(R("1+z"), R("z^2"), RatFunc(0));
    CascadeOptions small, large;
    small.truncation = 4;
    large.truncation = 8;
    auto a = run_cascade(eq, zero_seed(), 3, small);
    auto b = run_cascade(eq, zero_seed(), 3, large);
    REQUIRE(a.certified_count() == 3);
    REQUIRE(b.certified_count() == 3);
    for (int j = 1; j <= 3; ++j) {
        CHECK(a.at(j)->order == b.at(j)->order);
        CHECK(a.at(j)->leading == b.at(j)->leading);
    }
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("adaptive truncation recovers from a too-small window") {
    auto eq = DelayDiffEq::inverse_square(RatFunc(1), RatFunc::z(), RatFunc(0));
    CascadeOptions tiny;
    tiny.truncation = 1;
    auto pat = run_cascade(eq, zero_seed(), 4, tiny);
    CHECK(pat.certified_count() == 4);
    CHECK(pat.truncation > 1);
    CHECK(pat.at(4)->leading == alpha() / FieldElem(2));

    tiny.max_truncation = 1;
    auto capped = run_cascade(eq, zero_seed(), 4, tiny);
    CHECK(capped.certified_count() < 4);
    CHECK_FALSE(capped.failure.empty());
}

TEST_CASE("backward cascade runs on the mirrored equation") {
    auto eq = DelayDiffEq::pure_log_deriv(RatFunc::z(), RatFunc(0));
    CascadeOptions back;
    back.backward = true;
    auto pat = run_cascade(eq, zero_seed(), 1, back);
    CHECK(pat.backward);
    // mirrored a is -z, so w(-zhat - 1) has leading coefficient -p a(zhat) with a -> -z
    CHECK(pat.at(1)->leading == zhat());
}

TEST_CASE("pattern export") {
    auto eq = DelayDiffEq::inverse_square(RatFunc(1), RatFunc(0), RatFunc(0));
    auto j = run_cascade(eq, zero_seed(), 3).to_json();
    REQUIRE(j.size() == 3);
    CHECK(j[0]["offset"] == 1);
    CHECK(j[0]["order"] == -2);
    CHECK(j[0]["certified"] == true);
    CHECK(j[0]["leading"].is_string());
}
