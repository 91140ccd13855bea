#include "doctest.h"

#include "cmf/expr.hpp"

using namespace cmf;

namespace {
const VarList XY{"x", "y"};
const VarList TS{"t", "s"};
} // namespace

TEST_CASE("literals, variables and precedence") {
    CHECK(parseExpression("5", XY) == MPoly::constant(XY, Rat(5)));
    CHECK(parseExpression("2 + 3 * 4", XY) == MPoly::constant(XY, Rat(14)));
    CHECK(parseExpression("(2 + 3) * 4", XY) == MPoly::constant(XY, Rat(20)));
    CHECK(parseExpression("3/4", XY) == MPoly::constant(XY, Rat(3, 4)));
    CHECK(parseExpression("x", XY) == MPoly::var(XY, "x"));
    CHECK(parseExpression("x*y^2", XY) == MPoly::monomial(XY, {1, 2}, Rat(1)));
    CHECK(parseExpression("2*x^3", XY) == MPoly::monomial(XY, {3, 0}, Rat(2)));
}

TEST_CASE("unary sign binds tighter than addition, looser than power") {
    CHECK(parseExpression("-x^2", XY) == MPoly::monomial(XY, {2, 0}, Rat(-1)));
    CHECK(parseExpression("-x + y", XY) ==
          MPoly::monomial(XY, {1, 0}, Rat(-1)) + MPoly::var(XY, "y"));
    CHECK(parseExpression("--x", XY) == MPoly::var(XY, "x"));
    CHECK(parseExpression("2 - -3", XY) == MPoly::constant(XY, Rat(5)));
}

TEST_CASE("powers take unsigned integer exponents") {
    CHECK(parseExpression("x^0", XY) == MPoly::constant(XY, Rat(1)));
    CHECK(parseExpression("(x + y)^2", XY) == parseExpression("x^2 + 2*x*y + y^2", XY));
    CHECK_THROWS_AS(parseExpression("x^y", XY), ParseError);
    CHECK_THROWS_AS(parseExpression("x^(2)", XY), ParseError);
    CHECK_THROWS_AS(parseExpression("t^^4", TS), ParseError);
    CHECK_THROWS_AS(parseExpression("x^20000", XY), ParseError);
}

TEST_CASE("division needs a nonzero constant divisor") {
    CHECK(parseExpression("x/2", XY) == MPoly::var(XY, "x").scaled(Rat(1, 2)));
    CHECK(parseExpression("(x + y)/(2^2)", XY) ==
          parseExpression("x + y", XY).scaled(Rat(1, 4)));
    CHECK_THROWS_WITH_AS(parseExpression("x/y", XY),
                         doctest::Contains("SyntaxError"), ParseError);
    CHECK_THROWS_WITH_AS(parseExpression("x/0", XY),
                         doctest::Contains("DivisionByZero"), ParseError);
    CHECK_THROWS_AS(parseExpression("x/(1 - 1)", XY), ParseError);
}

TEST_CASE("unknown variables and trailing input are rejected with positions") {
    try {
        parseExpression("x + z", XY);
        FAIL("expected UnknownVariable");
    } catch (const ParseError& e) {
        CHECK(e.code() == "UnknownVariable");
        CHECK(e.line() == 1);
        CHECK(e.col() == 5);
    }
    CHECK_THROWS_AS(parseExpression("2 t", XY), ParseError);
    CHECK_THROWS_AS(parseExpression("x +", XY), ParseError);
    CHECK_THROWS_AS(parseExpression("", XY), ParseError);
    CHECK_THROWS_AS(parseExpression("(x", XY), ParseError);
    CHECK_THROWS_AS(parseExpression("x$", XY), ParseError);
}

TEST_CASE("line seeding shifts reported positions") {
    try {
        parseExpression("q", XY, 7);
        FAIL("expected UnknownVariable");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);
    }
}

TEST_CASE("rational expressions") {
    CHECK(parseRationalExpr("3/4") == Rat(3, 4));
    CHECK(parseRationalExpr("-1/2 + 1/3") == Rat(-1, 6));
    CHECK(parseRationalExpr("2^5") == Rat(32));
    CHECK_THROWS_AS(parseRationalExpr("x"), ParseError);
    CHECK_THROWS_AS(parseRationalExpr("1/0"), ParseError);
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parseExpression("  x  +  y ", XY) == parseExpression("x+y", XY));
    CHECK(parseExpression("x\t^\t2", XY) == parseExpression("x^2", XY));
}
