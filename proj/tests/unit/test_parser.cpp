#include <doctest.h>

#include "ddelab/exact/errors.hpp"
#include "ddelab/exact/expr_parser.hpp"

using namespace ddelab;

TEST_CASE("parse basic rational expressions") {
    RatFunc z = RatFunc::z();
    CHECK(parse_ratfunc("z^2 + 2*z + 1") == rf_shift(z * z, 1));
    CHECK(parse_ratfunc("1/(z-1)") == RatFunc(1) / (z - RatFunc(1)));
    CHECK(parse_ratfunc(" 3/4 ") == RatFunc(GaussianRational(Rational(3, 4))));
    CHECK(parse_ratfunc("2*i*z") == RatFunc(GaussianRational(0, 2)) * z);
    CHECK(parse_ratfunc("z^-2") == RatFunc(1) / (z * z));
    CHECK(parse_ratfunc("z^(-1)") == RatFunc(1) / z);
    CHECK(parse_ratfunc("-(z+1)^2\n - -1") == -(z + RatFunc(1)) * (z + RatFunc(1)) + RatFunc(1));
    CHECK(parse_ratfunc("lambda + mu*z", true).value().depends_on(Var::mu));
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_ratfunc("z +\n  * 2");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_ratfunc("z^z"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("w + 1"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("lambda"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("1/0"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("(z+1"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc(""), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("z^2^3"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("0^-1"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
    const char* inputs[] = {"(z^3 - 2*z + 1/2)/(z^2 + i)", "(1+2*i)*z^4 - z", "1/((z-1)^2*(z+3))",
                            "-i*z + 7/3"};
    for (const char* in : inputs) {
        RatFunc r = parse_ratfunc(in);
        CHECK(parse_ratfunc(r.to_string()) == r);
    }
}
