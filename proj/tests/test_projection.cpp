#include "doctest.h"

#include "cmf/branch.hpp"
#include "cmf/expr.hpp"
#include "cmf/projection.hpp"

using namespace cmf;

namespace {

StandardBranch mk(const std::vector<std::string>& coords,
                  const std::vector<std::string>& params = {}) {
    VarList tvars{"t"};
    for (const auto& p : params) tvars.push_back(p);
    std::vector<MPoly> cs;
    int maxDeg = 1;
    for (const auto& s : coords) {
        cs.push_back(parseExpression(s, tvars));
        maxDeg = std::max(maxDeg, cs.back().degreeIn("t"));
    }
    return standardize(Branch::fromCoords(std::move(cs), params, maxDeg + 2));
}

ProjectionPlane planeOf(const std::vector<long>& v) {
    ProjectionPlane L;
    for (long x : v) L.z.push_back(Rat(x));
    return L;
}

const StandardBranch M467 = mk({"t^4", "t^6", "t^7"});

} // namespace

TEST_CASE("projection applies the two linear forms") {
    PlaneBranch pb = project(M467, planeOf({1, 0, 0, 0, 1, 1}));
    CHECK(pb.x == parseExpression("t^4", pb.tvars));
    CHECK(pb.y == parseExpression("t^6 + t^7", pb.tvars));
    CHECK(pb.exact);
    CHECK(pb.params.empty());
}

TEST_CASE("non-transversal planes are rejected unless forced") {
    ProjectionPlane bad = planeOf({1, 0, 0, 0, 0, 1}); // kills the t^6 direction
    CHECK_THROWS_WITH_AS(project(M467, bad),
                         doctest::Contains("NonTransversal"), Error);
    PlaneBranch pb = project(M467, bad, {}, true);
    CHECK(pb.y == parseExpression("t^7", pb.tvars));
}

TEST_CASE("degenerate images are always rejected") {
    // L1 = L2 gives two equal coordinates: the image is not reduced.
    CHECK_THROWS_AS(project(M467, planeOf({1, 0, 0, 1, 0, 0}), {}, true), Error);
}

TEST_CASE("family perturbation adds a parameter to one coefficient") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"}, {"s"});
    PlaneBranch pb = project(b, planeOf({1, 0, 0, 0, 1, 1}), {{1, 2, "s"}});
    CHECK(pb.params == std::vector<std::string>{"s"});
    CHECK(pb.y == parseExpression("t^6 + t^7 + s*t^7", pb.tvars));
    PlaneBranch at0 = specialize(pb, {{"s", Rat(0)}});
    CHECK(at0.y == parseExpression("t^6 + t^7", at0.tvars));
}

TEST_CASE("implicit equation of the cusp") {
    StandardBranch cusp = mk({"t^2", "t^3"});
    ImplicitEquation eq = implicitize(project(cusp, planeOf({1, 0, 0, 1})));
    CHECK(eq.F == parseExpression("y^2 - x^3", eq.vars));
    CHECK(eq.norm.exact);
}

TEST_CASE("implicit equation vanishes on the parametrization") {
    PlaneBranch pb = project(M467, planeOf({1, 0, 0, 0, 1, 1}));
    ImplicitEquation eq = implicitize(pb);
    CHECK(eq.F == parseExpression("y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7", eq.vars));
    const VarList T{"t"};
    std::map<std::string, MPoly> sub{{"x", pb.x.mapVars(T)}, {"y", pb.y.mapVars(T)}};
    CHECK(eq.F.substitute(T, sub).isZero());
    // Normalization: the pure y-power has coefficient one.
    int dy = eq.F.degreeIn("y");
    Expo pure(eq.vars.size(), 0);
    pure[1] = dy;
    CHECK(eq.F.coeff(pure) == Rat(1));
}

TEST_CASE("generic Milnor number from the frozen plane enumeration") {
    MuBarReport mb = muBar(M467);
    CHECK(mb.mu == 16);
    CHECK(mb.px1.charExponents == mb.px2.charExponents);
    CHECK(mb.px1.e == 4);
}

TEST_CASE("delta bounds for a space branch against its plane projection") {
    DeltaBounds db = deltaBoundsCheck(M467);
    CHECK(db.deltaSpace == 5);
    CHECK(db.deltaPlane == 8);
    CHECK(db.upper == 12);
    CHECK(db.lowerOk);
    CHECK(db.upperOk);
}

TEST_CASE("specializing the family equation recovers the fiber equation") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"}, {"s"});
    PlaneBranch fam = project(b, planeOf({1, 0, 0, 0, 1, 1}), {{1, 2, "s"}});
    ImplicitEquation eqFam = implicitize(fam);
    REQUIRE(eqFam.norm.exact);
    ImplicitEquation eq0 = specialize(eqFam, {{"s", Rat(0)}});
    CHECK(eq0.F == parseExpression("y^4 - 2*x^3*y^2 + x^6 - 4*x^5*y - x^7", eq0.vars));

    // A nearby fiber still vanishes on its parametrization.
    ImplicitEquation eq1 = specialize(eqFam, {{"s", Rat(1, 3)}});
    PlaneBranch pb1 = specialize(fam, {{"s", Rat(1, 3)}});
    const VarList T{"t"};
    std::map<std::string, MPoly> sub{{"x", pb1.x.mapVars(T)}, {"y", pb1.y.mapVars(T)}};
    CHECK(eq1.F.substitute(T, sub).isZero());
}

TEST_CASE("puiseux data via an internal plane standardization") {
    PlaneBranch pb = project(M467, planeOf({1, 0, 0, 0, 1, 1}));
    PuiseuxData px = puiseuxOfPlaneBranch(pb);
    CHECK(px.e == 4);
    CHECK(px.charExponents == std::vector<int>{6, 7});
    CHECK(px.mu == 16);
    CHECK(px.multSequence == std::vector<int>{4, 2, 2, 1});
}
