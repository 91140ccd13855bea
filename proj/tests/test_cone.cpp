#include "doctest.h"

#include "cmf/branch.hpp"
#include "cmf/cone.hpp"
#include "cmf/expr.hpp"

using namespace cmf;

namespace {

StandardBranch mk(const std::vector<std::string>& coords) {
    VarList tvars{"t"};
    std::vector<MPoly> cs;
    int maxDeg = 1;
    for (const auto& s : coords) {
        cs.push_back(parseExpression(s, tvars));
        maxDeg = std::max(maxDeg, cs.back().degreeIn("t"));
    }
    return standardize(Branch::fromCoords(std::move(cs), {}, maxDeg + 2));
}

ProjectionPlane planeOf(const std::vector<long>& v) {
    ProjectionPlane L;
    for (long x : v) L.z.push_back(Rat(x));
    return L;
}

} // namespace

TEST_CASE("secant cone of the (4, 6, 7) monomial curve") {
    SecantCone cone = secantCone(mk({"t^4", "t^6", "t^7"}));
    CHECK(cone.n == 3);
    CHECK(cone.e == 4);
    REQUIRE(cone.planes.size() == 2);
    CHECK(cone.planes[0].direction == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
    CHECK(cone.planes[0].residues == std::vector<int>{1, 3});
    CHECK(cone.planes[0].jump == 6);
    CHECK(cone.planes[1].direction == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    CHECK(cone.planes[1].residues == std::vector<int>{2});
    CHECK(cone.planes[1].jump == 7);
    CHECK(cone.truncatedResidues.empty());
}

TEST_CASE("plane directions are normalized and residues proper") {
    for (auto coords : std::vector<std::vector<std::string>>{
             {"t^5", "t^6", "t^8", "t^9"}, {"t^3", "t^4", "t^5"}, {"t^4", "t^6 + t^7", "t^7"}}) {
        StandardBranch b = mk(coords);
        SecantCone cone = secantCone(b);
        CHECK(cone.e == b.e);
        for (const auto& p : cone.planes) {
            REQUIRE(static_cast<int>(p.direction.size()) == cone.n);
            CHECK(p.direction[0] == Rat(0));
            size_t first = 1;
            while (first < p.direction.size() && p.direction[first].isZero()) ++first;
            REQUIRE(first < p.direction.size());
            CHECK(p.direction[first] == Rat(1));
            CHECK(p.jump > cone.e);
            for (int r : p.residues) {
                CHECK(r >= 1);
                CHECK(r < cone.e);
                // The jump is genuinely a jump for this residue class.
                CHECK((static_cast<long>(r) * p.jump) % cone.e != 0);
            }
        }
    }
}

TEST_CASE("transversality agrees with the explicit minor conditions") {
    // For the cone of (t^4, t^6, t^7) the planes are spanned by the tangent
    // (1,0,0) with (0,1,0) and with (0,0,1), so L = (z1..z3, z4..z6) is
    // transversal iff z1 z5 - z2 z4 and z1 z6 - z3 z4 are both nonzero.
    SecantCone cone = secantCone(mk({"t^4", "t^6", "t^7"}));
    for (long z1 = -1; z1 <= 1; ++z1)
        for (long z2 = -1; z2 <= 1; ++z2)
            for (long z3 = -1; z3 <= 1; ++z3)
                for (long z4 = -1; z4 <= 1; ++z4)
                    for (long z5 = -1; z5 <= 1; ++z5)
                        for (long z6 = -1; z6 <= 1; ++z6) {
                            ProjectionPlane L = planeOf({z1, z2, z3, z4, z5, z6});
                            bool expect = (z1 * z5 - z2 * z4) != 0 && (z1 * z6 - z3 * z4) != 0;
                            CHECK(isTransversal(cone, L) == expect);
                        }
}

TEST_CASE("generic plane enumeration is deterministic and transversal") {
    SecantCone cone = secantCone(mk({"t^4", "t^6", "t^7"}));
    auto planes = pickGenericPlanes(cone, 3);
    REQUIRE(planes.size() == 3);
    for (const auto& L : planes) CHECK(isTransversal(cone, L));
    auto again = pickGenericPlanes(cone, 3);
    for (size_t i = 0; i < 3; ++i) CHECK(planes[i].z == again[i].z);
    CHECK(pickGenericPlane(cone).z == planes[0].z);
}

TEST_CASE("projection plane accessors split the coefficient vector") {
    ProjectionPlane L = planeOf({1, 0, 2, 0, 1, 3});
    CHECK(L.n() == 3);
    CHECK(L.l1() == std::vector<Rat>{Rat(1), Rat(0), Rat(2)});
    CHECK(L.l2() == std::vector<Rat>{Rat(0), Rat(1), Rat(3)});
}
