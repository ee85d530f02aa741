#include <doctest.h>

#include <random>

#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/field_elem.hpp"
#include "ddelab/exact/ratfunc.hpp"

using namespace ddelab;

namespace {

FieldElem zv() { return FieldElem::var(Var::z); }

MPoly random_poly(std::mt19937& rng, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_deg), coef(-5, 5), var(0, 2);
    std::vector<Term> ts;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Term term;
        term.exps.fill(0);
        for (int v = 0; v < 2; ++v) term.exps[static_cast<std::size_t>(var(rng))] = static_cast<std::uint16_t>(deg(rng));
        term.coeff = GaussianRational(Rational(coef(rng), 1 + std::abs(coef(rng))), Rational(coef(rng) % 2));
        ts.push_back(term);
    }
    return MPoly::from_terms(std::move(ts));
}

FieldElem random_frac(std::mt19937& rng) {
    MPoly den;
    do den = random_poly(rng, 3, 2); while (den.is_zero());
    return FieldElem::fraction(random_poly(rng, 4, 3), den);
}

RatFunc gamma_formula(const RatFunc& a, const RatFunc& b) {
    RatFunc a1 = a.shift(1), a2 = a.shift(2);
    RatFunc d = a - RatFunc(2) * a1;
    return (a * b.shift(2) - (RatFunc(2) * a1 - a) * b) / d -
           RatFunc(2) * a2 * (a * a1.derive() - a1 * a.derive()) / (d * d);
}

} // namespace

TEST_CASE("gaussian rationals stay canonical") {
    GaussianRational a(Rational(2, 4), Rational(-6, 8));
    CHECK(a.re() == Rational(1, 2));
    CHECK(a.im() == Rational(-3, 4));
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(GaussianRational(Rational(3), Rational(-1)).to_string(false) == "3-i");
    CHECK_THROWS_AS(GaussianRational(0).inverse(), DomainError);
}

TEST_CASE("polynomial shift of z squared") {
    RatFunc r = RatFunc::z() * RatFunc::z();
    RatFunc s = rf_shift(r, 1);
    CHECK(s == RatFunc::z() * RatFunc::z() + RatFunc(2) * RatFunc::z() + RatFunc(1));
    CHECK(s.num_degree() == 2);
    CHECK(s.value().num().to_string() == "z^2 + 2*z + 1");
}

TEST_CASE("shift of 1/z by -1") {
    RatFunc r = RatFunc(1) / RatFunc::z();
    RatFunc s = rf_shift(r, -1);
    CHECK(s == RatFunc(1) / (RatFunc::z() - RatFunc(1)));
    CHECK(s.den_degree() == 1);
    CHECK(s.num_degree() == 0);
}

TEST_CASE("second difference of an affine map vanishes") {
    RatFunc lam(FieldElem::var(Var::lambda)), mu(FieldElem::var(Var::mu));
    RatFunc a = lam + mu * RatFunc::z();
    CHECK(frac_is_zero((rf_shift(a, 2) - RatFunc(2) * rf_shift(a, 1) + a).value()));
    RatFunc q = RatFunc::z() * RatFunc::z();
    CHECK_FALSE(frac_is_zero((rf_shift(q, 2) - RatFunc(2) * rf_shift(q, 1) + q).value()));
}

TEST_CASE("shift rejects non-integer offsets") {
    CHECK_THROWS_AS(rf_shift(RatFunc::z(), GaussianRational(Rational(1, 2))), DomainError);
    CHECK(rf_shift(RatFunc::z(), GaussianRational::i()) == RatFunc::z() + RatFunc(GaussianRational::i()));
}

TEST_CASE("zero test on unreduced fractions") {
    FieldElem f = FieldElem::fraction((zv() * zv() - 1).num(), (zv() - 1).num());
    CHECK(frac_is_zero(f - (zv() + 1)));
    CHECK_FALSE(frac_is_zero(f - zv()));
}

TEST_CASE("gamma identity evaluations") {
    RatFunc one(1), z = RatFunc::z();
    CHECK(frac_is_zero(gamma_formula(one, one).value()));
    RatFunc g = gamma_formula(one, z);
    CHECK_FALSE(frac_is_zero(g.value()));
    CHECK(*g.as_number() == GaussianRational(-2));
}

TEST_CASE("ring laws on random fractions") {
    std::mt19937 rng(20240611);
    for (int it = 0; it < 40; ++it) {
        FieldElem a = random_frac(rng), b = random_frac(rng), c = random_frac(rng);
        CHECK(frac_is_zero((a + b) + c - (a + (b + c))));
        CHECK(frac_is_zero((a * b) * c - a * (b * c)));
        CHECK(frac_is_zero(a * (b + c) - (a * b + a * c)));
        CHECK(frac_is_zero(a + (-a)));
        if (!b.is_zero()) CHECK(frac_is_zero((a / b) * b - a));
    }
}

TEST_CASE("zero test agrees with cross multiplication") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        FieldElem f = random_frac(rng);
        FieldElem g = (it % 2 == 0) ? f * random_frac(rng) / FieldElem(GaussianRational(it + 1))
                                    : random_frac(rng);
        if (it % 4 == 0) g = f;
        if (it % 4 == 2) g = f * FieldElem(random_poly(rng, 2, 2)) / FieldElem(random_poly(rng, 2, 2) + MPoly(7));
        bool cross = (f.num() * g.den() - g.num() * f.den()).is_zero();
        CHECK(frac_is_zero(f - g) == cross);
    }
}

TEST_CASE("shift is a ring homomorphism and commutes with derivative") {
    std::mt19937 rng(99);
    for (int it = 0; it < 25; ++it) {
        RatFunc f(FieldElem::fraction(random_poly(rng, 3, 3).substitute(Var::zhat, MPoly(1)).substitute(Var::alpha, MPoly(2)),
                                      MPoly::var(Var::z) * MPoly::var(Var::z) + MPoly(it + 1)));
        RatFunc g(FieldElem::fraction(MPoly::var(Var::z) + MPoly(3), MPoly::var(Var::z) - MPoly(it)));
        GaussianRational c(it % 5 - 2, it % 3 - 1);
        CHECK(rf_shift(f * g, c) == rf_shift(f, c) * rf_shift(g, c));
        CHECK(rf_shift(f + g, c) == rf_shift(f, c) + rf_shift(g, c));
        CHECK(rf_shift(f, c).derive() == rf_shift(f.derive(), c));
    }
}

TEST_CASE("numeric evaluation matches exact value") {
    RatFunc r = (RatFunc::z() * RatFunc::z() + RatFunc(1)) / (RatFunc::z() - RatFunc(GaussianRational::i()));
    auto v = r.evaluate({2.0, 1.0});
    std::complex<double> z(2.0, 1.0);
    CHECK(std::abs(v - (z * z + 1.0) / (z - std::complex<double>(0, 1))) < 1e-14);
    RatFunc p(FieldElem::var(Var::lambda));
    CHECK_THROWS_AS(p.evaluate(1.0), DomainError);
}
