#include "doctest.h"

#include "cmf/expr.hpp"
#include "cmf/resultant.hpp"

using namespace cmf;

namespace {
const VarList XYT{"x", "y", "t"};
const VarList T{"t"};
} // namespace

TEST_CASE("eliminating t from a monomial parametrization") {
    // res_t(x - t^2, y - t^3) generates the kernel of t -> (t^2, t^3).
    MPoly f = parseExpression("x - t^2", XYT);
    MPoly g = parseExpression("y - t^3", XYT);
    MPoly r = sylvesterResultant(f, g, "t");
    MPoly expect = parseExpression("y^2 - x^3", r.vars());
    bool match = (r == expect) || (r == -expect);
    CHECK(match);

    // The resultant vanishes on the parametrization.
    std::map<std::string, MPoly> sub{{"x", parseExpression("t^2", T)},
                                     {"y", parseExpression("t^3", T)}};
    CHECK(r.mapVars(XYT).substitute(T, sub).isZero());
}

TEST_CASE("resultant detects a common root") {
    const VarList Tonly{"t"};
    MPoly f = parseExpression("t^2 - 3*t + 2", Tonly); // roots 1, 2
    CHECK(sylvesterResultant(f, parseExpression("t - 1", Tonly), "t").isZero());
    CHECK(sylvesterResultant(f, parseExpression("t - 2", Tonly), "t").isZero());
    MPoly r = sylvesterResultant(f, parseExpression("t - 3", Tonly), "t");
    CHECK(r.isConstant());
    CHECK(r.constantValue() == Rat(2)); // f(3) = 2
}

TEST_CASE("multiplicativity in the second argument") {
    const VarList Tonly{"t"};
    MPoly f = parseExpression("t^2 + 1", Tonly);
    MPoly g = parseExpression("t - 2", Tonly);
    MPoly h = parseExpression("t + 3", Tonly);
    MPoly lhs = sylvesterResultant(f, g * h, "t");
    MPoly rhs = sylvesterResultant(f, g, "t") * sylvesterResultant(f, h, "t");
    CHECK(lhs == rhs);
}

TEST_CASE("degree must be positive in the eliminated variable") {
    MPoly f = parseExpression("x - t^2", XYT);
    MPoly c = parseExpression("x + y", XYT);
    CHECK_THROWS_AS(sylvesterResultant(f, c, "t"), Error);
}
