#include <doctest.h>

#include <numbers>
#include <random>

#include "ddelab/cascade/confinement.hpp"
#include "ddelab/classify/classifier.hpp"
#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/expr_parser.hpp"
#include "ddelab/model/parse_equation.hpp"

using namespace ddelab;
using nlohmann::json;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }

DelayDiffEq log_deriv(const char* p_json, const char* q_json) {
    return parse_equation(json::parse(std::string(R"({"class":"log-deriv","a":"1","P":)") + p_json +
                                      R"(,"Q":)" + q_json + "}"));
}

GaussianRational random_gr(std::mt19937& rng) {
    std::uniform_int_distribution<int> n(-9, 9), d(1, 7);
    return GaussianRational(Rational(n(rng), d(rng)), Rational(n(rng), d(rng)));
}

} // namespace

TEST_CASE("log-deriv branch table") {
    const char* q2 = R"({"factors":[{"root":"z"},{"root":"2*z"}]})";
    auto a = log_deriv(R"(["1","0","0","1"])", q2);
    auto va = log_deriv_verdict(a);
    CHECK(va.outcome == Outcome::ConsistentBranchA);
    CHECK(va.branch_a);
    CHECK_FALSE(va.branch_b);

    auto viol = log_deriv_verdict(log_deriv(R"(["0","0","0","0","1"])", q2));
    CHECK(viol.outcome == Outcome::ViolatesNecessaryCondition);
    CHECK(viol.degrees->deg_r == 4);

    auto b = log_deriv_verdict(log_deriv(R"(["z"])", R"({"factors":[]})"));
    CHECK(b.outcome == Outcome::ConsistentBranchB);
    CHECK(b.degrees->deg_r == 0);
}

TEST_CASE("overlapping branches are both flagged") {
    auto v = log_deriv_verdict(log_deriv(R"(["1","z"])", R"({"factors":[]})"));
    CHECK(v.branch_a);
    CHECK(v.branch_b);
    CHECK(v.outcome == Outcome::ConsistentBranchA);
}

TEST_CASE("log-deriv hypothesis violations") {
    auto common = log_deriv_verdict(log_deriv(R"(["-z","1"])", R"({"factors":[{"root":"z"},{"root":"1"}]})"));
    CHECK(common.outcome == Outcome::HypothesisViolation);
    REQUIRE(common.failed_hypotheses.size() == 1);
    CHECK(common.failed_hypotheses[0] == "P and Q have a common root");

    auto zero_root = log_deriv_verdict(log_deriv(R"(["1","0","1"])", R"({"factors":[{"root":"0"}]})"));
    CHECK(zero_root.outcome == Outcome::HypothesisViolation);
    CHECK(zero_root.failed_hypotheses[0] == "Q(z,0) ≡ 0");

    auto unfactored = log_deriv_verdict(log_deriv(R"(["1","0","0","1"])", R"({"factors":[],"residual":["-z","0","1"]})"));
    CHECK(unfactored.outcome == Outcome::HypothesisViolation);
}

TEST_CASE("log-deriv verdict is invariant under common rescaling") {
    auto plain = log_deriv_verdict(log_deriv(R"(["1","0","0","1"])", R"({"coeffs":["2*z^2","-3*z","1"]})"));
    auto scaled = log_deriv_verdict(
        log_deriv(R"j(["1/(z-4)","0","0","1/(z-4)"])j", R"j({"coeffs":["2*z^2/(z-4)","-3*z/(z-4)","1/(z-4)"]})j"));
    CHECK(plain.outcome == scaled.outcome);
    CHECK(plain.degrees->deg_r == scaled.degrees->deg_r);
    CHECK(plain.to_json() == log_deriv_verdict(log_deriv(R"(["1","0","0","1"])", R"({"coeffs":["2*z^2","-3*z","1"]})")).to_json());
}

TEST_CASE("pure log-derivative verdicts") {
    auto kvm = pure_log_deriv_verdict(DelayDiffEq::pure_log_deriv(RatFunc(1), RatFunc(2)));
    CHECK(kvm.outcome == Outcome::ConsistentBranchA);
    auto az = pure_log_deriv_verdict(DelayDiffEq::pure_log_deriv(RatFunc::z(), RatFunc(0)));
    CHECK(az.outcome == Outcome::ViolatesNecessaryCondition);
    CHECK_FALSE(az.exponential_p);
    CHECK_THROWS_AS(pure_log_deriv_verdict(DelayDiffEq::pure_log_deriv(RatFunc(0), RatFunc(1))), DomainError);
}

TEST_CASE("pi*i multiples are flagged as a courtesy note") {
    // 245850922/78256779 agrees with pi to about 1e-16
    RatFunc pi_approx(GaussianRational(Rational(245850922, 78256779)));
    RatFunc a = R("z^2+1");
    auto v = pure_log_deriv_verdict(DelayDiffEq::pure_log_deriv(a, RatFunc(GaussianRational(0, 3)) * pi_approx * a));
    REQUIRE(v.exponential_p);
    CHECK(*v.exponential_p == 3);
    CHECK(v.outcome == Outcome::ViolatesNecessaryCondition);
    auto off = pure_log_deriv_verdict(
        DelayDiffEq::pure_log_deriv(RatFunc(1), RatFunc(GaussianRational(0, 1)) * RatFunc(GaussianRational(Rational(22, 7)))));
    CHECK_FALSE(off.exponential_p);
    CHECK(detect_pi_i_multiple({0.0, -2 * std::numbers::pi}) == -2);
    CHECK_FALSE(detect_pi_i_multiple({0.0, 70 * std::numbers::pi}));
}

TEST_CASE("inverse-square normal form extraction") {
    auto v = inverse_square_verdict(DelayDiffEq::inverse_square(R("1+2*z"), R("1+6*z"), RatFunc(0)));
    CHECK(v.outcome == Outcome::ConsistentBranchA);
    REQUIRE(v.params);
    CHECK(v.params->lambda == GaussianRational(1));
    CHECK(v.params->mu == GaussianRational(2));
    CHECK(v.params->nu == GaussianRational(3));

    auto c1 = inverse_square_verdict(DelayDiffEq::inverse_square(RatFunc(1), RatFunc(0), RatFunc(1)));
    CHECK(c1.outcome == Outcome::ViolatesNecessaryCondition);
    CHECK(c1.failed_condition == "c ≢ 0");

    auto sq = inverse_square_verdict(DelayDiffEq::inverse_square(R("z^2"), R("z"), RatFunc(0)));
    CHECK(sq.outcome == Outcome::ViolatesNecessaryCondition);
    CHECK(sq.failed_condition.rfind("a is not affine", 0) == 0);

    auto nb = inverse_square_verdict(DelayDiffEq::inverse_square(RatFunc(1), RatFunc::z(), RatFunc(0)));
    CHECK(nb.outcome == Outcome::ViolatesNecessaryCondition);
    CHECK(nb.failed_condition.rfind("b - nu*a + mu", 0) == 0);

    CHECK_THROWS_AS(inverse_square_verdict(DelayDiffEq::inverse_square(RatFunc(0), RatFunc(1), RatFunc(0))), DomainError);
}

TEST_CASE("normal form round trip over random Gaussian rationals") {
    std::mt19937 rng(2718);
    for (int it = 0; it < 40; ++it) {
        NormalFormParams p{random_gr(rng), random_gr(rng), random_gr(rng)};
        if (p.lambda.is_zero() && p.mu.is_zero()) continue;
        auto eq = build_normal_form(p.lambda, p.mu, p.nu);
        auto v = inverse_square_verdict(eq);
        REQUIRE(v.params);
        CHECK(*v.params == p);
        auto rebuilt = build_normal_form(v.params->lambda, v.params->mu, v.params->nu);
        CHECK(rebuilt.a == eq.a);
        CHECK(rebuilt.b == eq.b);
    }
}

TEST_CASE("classifier agrees with the cascade on random inverse-square equations") {
    std::mt19937 rng(161803);
    std::uniform_int_distribution<int> n(-5, 5), d(1, 4);
    for (int it = 0; it < 6; ++it) {
        GaussianRational lambda(Rational(n(rng), d(rng)) + 7), mu(Rational(n(rng), d(rng))), nu(Rational(n(rng), d(rng)));
        auto eq = build_normal_form(lambda, mu, nu);
        auto pat = run_cascade(eq, SeedSpec{}, 4);
        CHECK(inverse_square_verdict(eq).outcome == Outcome::ConsistentBranchA);
        auto cv = confinement_report(pat, eq);
        CHECK(cv.kind == ConfinementKind::ConfinedAt);
        CHECK(cv.offset == 3);

        // Same a with b pushed off the normal form: gamma no longer vanishes.
        auto off = DelayDiffEq::inverse_square(eq.a, eq.b + RatFunc::z() * RatFunc(GaussianRational(d(rng))), RatFunc(0));
        CHECK(inverse_square_verdict(off).outcome == Outcome::ViolatesNecessaryCondition);
        CHECK_FALSE(gamma_of(off.a, off.b).is_zero());
        auto pv = confinement_report(run_cascade(off, SeedSpec{}, 5), off);
        CHECK(pv.kind == ConfinementKind::SimplePoleTail);
    }
}

TEST_CASE("verdicts are pure") {
    auto eq = build_normal_form(2, 1, GaussianRational(Rational(1, 2)));
    CHECK(classify(eq).to_json() == classify(eq).to_json());
}
