#include <doctest.h>

#include <random>

#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/expr_parser.hpp"
#include "ddelab/model/dd_polynomial.hpp"
#include "ddelab/model/parse_equation.hpp"

using namespace ddelab;
using nlohmann::json;

namespace {

RatFunc Z() { return RatFunc::z(); }
RatFunc R(const char* s) { return parse_ratfunc(s); }

GaussianRational at(const RatFunc& r, const GaussianRational& z0) {
    return *r.value().substitute(Var::z, MPoly(z0)).as_constant();
}

// Determinant of the Sylvester matrix with fraction-free elimination.
GaussianRational sylvester_det(const std::vector<GaussianRational>& p, const std::vector<GaussianRational>& q) {
    const int m = static_cast<int>(p.size()) - 1, n = static_cast<int>(q.size()) - 1;
    const int N = m + n;
    std::vector<std::vector<GaussianRational>> M(N, std::vector<GaussianRational>(N));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = p[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = q[n - k];
    GaussianRational sign(1), prev(1);
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int s = k + 1;
            while (s < N && M[s][k].is_zero()) ++s;
            if (s == N) return GaussianRational(0);
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[N - 1][N - 1];
}

std::vector<GaussianRational> at_point(const WPoly& p, const GaussianRational& z0) {
    std::vector<GaussianRational> out;
    for (const auto& c : p.coeffs()) out.push_back(at(c, z0));
    return out;
}

json branch_a_entry() {
    return json::parse(R"({"id":"ba","class":"log-deriv","a":"1",
        "P":["1","0","0","1"],"Q":{"factors":[{"root":"z","mult":1},{"root":"2*z","mult":1}]}})");
}

} // namespace

TEST_CASE("parse the normalized constant-coefficient equation") {
    auto eq = parse_equation(json::parse(R"({"id":"kvm","class":"pure-log-deriv","a":"3/2","b":"2"})"));
    CHECK(eq.cls == EqClass::PureLogDeriv);
    CHECK(eq.a_constant());
    CHECK(eq.b_constant());
    CHECK(eq.a == RatFunc(GaussianRational(Rational(3, 2))));
}

TEST_CASE("parse a log-deriv entry with factored Q") {
    auto eq = parse_equation(branch_a_entry());
    CHECK(eq.cls == EqClass::LogDeriv);
    REQUIRE(eq.q_factors.factors.size() == 2);
    CHECK(eq.q_factors.factors[0].root == Z());
    CHECK(eq.q_factors.factors[1].root == RatFunc(2) * Z());
    CHECK(eq.Q == WPoly({RatFunc(2) * Z() * Z(), RatFunc(-3) * Z(), RatFunc(1)}));
    CHECK(eq.P.degree() == 3);
}

TEST_CASE("inverse-square with a identically zero is rejected") {
    CHECK_THROWS_WITH_AS(parse_equation(json::parse(R"({"class":"inverse-square","a":"0","b":"z"})")),
                         "entry.a: a(z) ≡ 0 violates the inverse-square hypothesis a(z) ≢ 0", SchemaError);
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_equation(json::parse(R"({"class":"pure-log-deriv","a":"z+","b":"1"})")), SchemaError);
    CHECK_THROWS_AS(parse_equation(json::parse(R"({"class":"pure-log-deriv","a":"1","bogus":1})")), SchemaError);
    CHECK_THROWS_AS(parse_equation(json::parse(R"({"class":"cubic","a":"1"})")), SchemaError);
    CHECK_THROWS_WITH_AS(
        parse_equation(json::parse(R"({"class":"log-deriv","P":["1"],"Q":{"factors":[{"root":"z"},{"root":"z"}]}})")),
        "entry.Q.factors: duplicate factor root z", SchemaError);
    CHECK_THROWS_WITH_AS(
        parse_equation(json::parse(R"({"class":"log-deriv","P":["1"],"Q":{"coeffs":["-2","0","2"],"monic":true}})")),
        "entry.Q: Q is not monic", SchemaError);
    CHECK_THROWS_AS(parse_equation(json::parse(R"({"class":"log-deriv","P":["1"],"Q":{"coeffs":["1","0","0","1"]}})")),
                    SchemaError);
    auto ok = parse_equation(json::parse(R"({"class":"pure-log-deriv","a":"1","cascade":{}})"), "entry", {"cascade"});
    CHECK(ok.cls == EqClass::PureLogDeriv);
}

TEST_CASE("non-monic Q is normalized with a note") {
    auto eq = parse_equation(json::parse(R"({"class":"log-deriv","P":["2","0","0","2"],"Q":{"coeffs":["4*z^2","-6*z","2"]}})"));
    CHECK(eq.Q.is_monic());
    CHECK(eq.P == WPoly({RatFunc(1), 0, 0, RatFunc(1)}));
    REQUIRE(eq.q_factors.factors.size() == 2);
    CHECK(eq.notes.size() == 1);
}

TEST_CASE("quadratic factoring by square discriminant") {
    WPoly q({R("z^2 - 1"), R("-2*z"), RatFunc(1)});  // (w - z - 1)(w - z + 1)
    auto f = factor_small(q);
    REQUIRE(f);
    CHECK(f->expand() == q);
    CHECK(f->factors.size() == 2);
    CHECK_FALSE(factor_small(WPoly({R("-z"), 0, RatFunc(1)})));
    auto dbl = factor_small(WPoly({R("1/z^2"), R("-2/z"), RatFunc(1)}));
    REQUIRE(dbl);
    CHECK(dbl->factors.size() == 1);
    CHECK(dbl->factors[0].mult == 2);
    CHECK(dbl->factors[0].root == R("1/z"));
}

TEST_CASE("degree reports") {
    auto eq = parse_equation(branch_a_entry());
    auto r = mohonko_degree(eq);
    CHECK(r.deg_p == 3);
    CHECK(r.deg_q == 2);
    CHECK(r.deg_r == 3);
    eq.P = WPoly({0, 0, 0, 0, RatFunc(1)});
    r = mohonko_degree(eq);
    CHECK((r.deg_p == 4 && r.deg_q == 2 && r.deg_r == 4));
    auto c = DelayDiffEq::log_deriv(RatFunc(1), WPoly::constant(Z()), FactoredQ{});
    r = mohonko_degree(c);
    CHECK((r.deg_p == 0 && r.deg_q == 0 && r.deg_r == 0));
}

TEST_CASE("degree is invariant under common rescaling") {
    auto eq = parse_equation(branch_a_entry());
    auto scaled = parse_equation(json::parse(R"({"class":"log-deriv",
        "P":["z+1","0","0","z+1"],"Q":{"coeffs":["2*z^3+2*z^2","-3*z^2-3*z","z+1"]}})"));
    auto r1 = mohonko_degree(eq), r2 = mohonko_degree(scaled);
    CHECK(r1.deg_r == r2.deg_r);
    CHECK(scaled.P == eq.P);
    CHECK(scaled.Q == eq.Q);
}

TEST_CASE("resultants") {
    CHECK(resultant_in_w(WPoly::w(), WPoly::linear(1)) == FieldElem(-1));
    CHECK(frac_is_zero(resultant_in_w(WPoly::linear(Z()), WPoly::linear(Z()) * WPoly::linear(-1))));
    WPoly p({RatFunc(1), 0, 0, RatFunc(1)});
    WPoly q = WPoly::linear(Z()) * WPoly::linear(RatFunc(2) * Z());
    FieldElem res = resultant_in_w(p, q);
    CHECK(res == ((Z().pow(3) + RatFunc(1)) * (RatFunc(8) * Z().pow(3) + RatFunc(1))).value());
}

TEST_CASE("resultant agrees with the Sylvester determinant at random points") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> c(-4, 4), d(1, 3);
    auto random_coeff = [&] {
        return RatFunc(GaussianRational(Rational(c(rng), d(rng)))) * Z().pow(d(rng) - 1) +
               RatFunc(GaussianRational(Rational(c(rng), 1), Rational(c(rng) % 2)));
    };
    for (int it = 0; it < 12; ++it) {
        std::vector<RatFunc> pc(static_cast<std::size_t>(d(rng) + 1)), qc(static_cast<std::size_t>(d(rng) + 1));
        for (auto& x : pc) x = random_coeff();
        for (auto& x : qc) x = random_coeff();
        pc.back() = pc.back() + RatFunc(11);
        qc.back() = RatFunc(1);
        WPoly p(pc), q(qc);
        FieldElem res = resultant_in_w(p, q);
        for (int s = 0; s < 3; ++s) {
            GaussianRational z0(Rational(c(rng) * 7 + 1, d(rng) + 4));
            if (at(p.leading(), z0).is_zero()) continue;
            auto exact = res.substitute(Var::z, MPoly(z0)).as_constant();
            REQUIRE(exact);
            CHECK(*exact == sylvester_det(at_point(p, z0), at_point(q, z0)));
        }
    }
}

TEST_CASE("resultant zero test agrees with root substitution") {
    WPoly q = WPoly::linear(Z()) * WPoly::linear(R("1/(z+1)"));
    WPoly shares = WPoly::linear(R("1/(z+1)")) * WPoly::linear(R("z^2"));
    WPoly clean({RatFunc(1), 0, 0, RatFunc(1)});
    for (const auto* p : {&shares, &clean}) {
        bool by_roots = false;
        for (auto r : {Z(), R("1/(z+1)")}) by_roots = by_roots || p->evaluate(r).is_zero();
        CHECK(frac_is_zero(resultant_in_w(*p, q)) == by_roots);
    }
}

TEST_CASE("substitution of rational candidates") {
    auto pure = DelayDiffEq::pure_log_deriv(R("z"), R("z^2+1"));
    RatFunc c0(GaussianRational(Rational(5, 3)));
    CHECK(substitute_rational(cleared_form(pure), c0) == -pure.b * c0);

    DDPolynomial diff;
    diff.add_term(RatFunc(1), {{GaussianRational(1), 0, 1}});
    diff.add_term(RatFunc(-1), {{GaussianRational(-1), 0, 1}});
    CHECK(substitute_rational(diff, Z() * Z()) == RatFunc(4) * Z());

    auto eq = parse_equation(branch_a_entry());
    for (const auto& f : eq.q_factors.factors) {
        RatFunc v = substitute_rational(cleared_form(eq), f.root);
        CHECK_FALSE(frac_is_zero(v.value()));
        CHECK(v == -f.root * eq.P.evaluate(f.root));
    }
}

TEST_CASE("substitution is linear and multiplicative") {
    DDPolynomial a, b;
    a.add_term(R("z"), {{GaussianRational(1), 1, 2}});
    a.add_term(R("1/(z-3)"), {{GaussianRational(0), 0, 1}, {GaussianRational(-1), 0, 1}});
    b.add_term(R("2"), {{GaussianRational(-1), 2, 1}});
    b.add_term(R("z^2"), {});
    for (auto cand : {R("z^3 - z"), R("1/(z+2)"), R("(z+i)/(z-1)")}) {
        CHECK(substitute_rational(a + b, cand) == substitute_rational(a, cand) + substitute_rational(b, cand));
        CHECK(substitute_rational(a * b, cand) == substitute_rational(a, cand) * substitute_rational(b, cand));
        CHECK(substitute_rational(a.scaled(R("z+5")), cand) == R("z+5") * substitute_rational(a, cand));
    }
}

TEST_CASE("mirror maps solutions of one equation to the other") {
    // w = z solves w(z+1) - w(z-1) = -a w'/w + b with a = z, b = 3.
    auto eq = DelayDiffEq::pure_log_deriv(Z(), RatFunc(3));
    CHECK(frac_is_zero(substitute_rational(cleared_form(eq), Z()).value()));
    CHECK(frac_is_zero(substitute_rational(cleared_form(eq.mirrored()), -Z()).value()));
    auto inv = DelayDiffEq::inverse_square(R("z+1"), R("z"), R("2/(z-5)"));
    auto cand = R("1/(z+3)");
    RatFunc lhs = substitute_rational(cleared_form(inv), cand).mirror();
    RatFunc rhs = substitute_rational(cleared_form(inv.mirrored()), cand.mirror());
    CHECK(lhs == -rhs);
    auto ld = parse_equation(branch_a_entry());
    RatFunc l2 = substitute_rational(cleared_form(ld), cand).mirror();
    RatFunc r2 = substitute_rational(cleared_form(ld.mirrored()), cand.mirror());
    CHECK(l2 == -r2);
}
