#include "doctest.h"

#include <random>

#include "cmf/branch.hpp"
#include "cmf/expr.hpp"
#include "cmf/matfact.hpp"

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

ModuleData moduleOf(const std::string& x, const std::string& y,
                    const std::vector<std::string>& gens) {
    const VarList T{"t"};
    ModuleData md;
    md.plane.tvars = T;
    md.plane.x = parseExpression(x, T);
    md.plane.y = parseExpression(y, T);
    int maxDeg = std::max(md.plane.x.degreeIn("t"), md.plane.y.degreeIn("t"));
    for (const auto& g : gens) {
        md.gens.push_back(parseExpression(g, T));
        maxDeg = std::max(maxDeg, md.gens.back().degreeIn("t"));
    }
    for (const auto& g : md.gens)
        md.genOrders.push_back(seriesFromPoly(g, "t", maxDeg + 2).order().value_or(-1));
    md.plane.trunc = md.trunc = maxDeg + 2;
    return md;
}

} // namespace

TEST_CASE("quotient generators for standard projections") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    ModuleData md = quotientGenerators(b, project(b, planeOf({1, 0, 0, 0, 1, 1})));
    REQUIRE(md.size() == 2);
    CHECK(md.genOrders == std::vector<int>{0, 7});
    CHECK(md.gens[0] == parseExpression("1", md.gens[0].vars()));
    CHECK(md.gens[1] == parseExpression("t^7", md.gens[1].vars()));

    StandardBranch c = mk({"t^3", "t^4", "t^5"});
    ModuleData md2 = quotientGenerators(c, project(c, planeOf({1, 0, 0, 0, 1, 0})));
    CHECK(md2.genOrders == std::vector<int>{0, 5});

    // Forcing the non-generic plane (x, z) changes the quotient orders.
    ModuleData md3 = quotientGenerators(b, project(b, planeOf({1, 0, 0, 0, 0, 1}), {}, true));
    CHECK(md3.genOrders == std::vector<int>{0, 6});
}

TEST_CASE("a branch that declares parameters but does not use them is accepted") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"}, {"s"});
    PlaneBranch pb = project(b, planeOf({1, 0, 0, 0, 1, 1}), {{1, 2, "s"}});
    ModuleData md = quotientGenerators(b, pb);
    CHECK(md.genOrders == std::vector<int>{0, 7});

    // Coordinates genuinely involving a parameter are refused.
    StandardBranch u = mk({"t^4", "t^6 + s*t^7", "t^7"}, {"s"});
    CHECK_THROWS_WITH_AS(quotientGenerators(u, pb), doctest::Contains("MissingParameter"),
                         Error);
}

TEST_CASE("syzygy vectors annihilate the generators") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    PlaneBranch pb = project(b, planeOf({1, 0, 0, 0, 1, 1}));
    ModuleData md = quotientGenerators(b, pb);
    SyzygyBasis sz = syzygySearch(md, 7);
    CHECK(!sz.vectors.empty());
    const VarList T{"t"};
    for (const auto& vec : sz.vectors) {
        REQUIRE(vec.size() == md.size());
        MPoly acc(T);
        std::map<std::string, MPoly> sub{{"x", md.plane.x.mapVars(T)},
                                         {"y", md.plane.y.mapVars(T)}};
        for (size_t i = 0; i < vec.size(); ++i)
            acc = acc + vec[i].substitute(T, sub) * md.gens[i].mapVars(T);
        CHECK(acc.isZero());
    }
}

TEST_CASE("built factorization passes every check") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    MatrixFactorization mf = buildMF(b, planeOf({1, 0, 0, 0, 1, 1}));
    CHECK(mf.size == 2);
    MFCheckReport rep = verifyMF(mf);
    CHECK(rep.ok());
    CHECK(rep.productIsF);
    CHECK(rep.entriesInMaxIdeal);
    CHECK(rep.detUnitTimesF);
    REQUIRE(rep.columnsAreSyzygies.has_value());
    CHECK(*rep.columnsAreSyzygies);
    CHECK(!rep.detConstant.isZero());
    CHECK(rep.witness.empty());
    // det(d) = c F exactly.
    auto q = MPoly::divideExact(mf.d.det(), mf.eq.F);
    REQUIRE(q.has_value());
    CHECK(q->isConstant());
}

TEST_CASE("factorization of a family specializes to the fiber factorization") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"}, {"s"});
    PlaneBranch fam = project(b, planeOf({1, 0, 0, 0, 1, 1}), {{1, 2, "s"}});
    BuildOptions opts;
    opts.degreeCap = 5;
    opts.paramCap = 4;
    MatrixFactorization mf = buildMF(b, fam, opts);
    CHECK(verifyMF(mf).ok());
    REQUIRE(mf.eq.norm.exact);

    // At s = 0 the product identity survives specialization.
    PolyMatrix d0 = mf.d.evalPartial({{"s", Rat(0)}});
    PolyMatrix h0 = mf.h.evalPartial({{"s", Rat(0)}});
    MPoly F0 = mf.eq.F.evalPartial({{"s", Rat(0)}});
    PolyMatrix prod = d0 * h0;
    for (int i = 0; i < mf.size; ++i)
        for (int j = 0; j < mf.size; ++j)
            CHECK(prod.at(i, j) == (i == j ? F0 : MPoly::zero(F0.vars())));
}

TEST_CASE("verification rejects tampered factorizations") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    MatrixFactorization mf = buildMF(b, planeOf({1, 0, 0, 0, 1, 1}));

    MatrixFactorization broken = mf;
    broken.d.at(0, 0) = broken.d.at(0, 0) + parseExpression("x", broken.d.vars());
    MFCheckReport rep = verifyMF(broken);
    CHECK(!rep.ok());
    CHECK(!rep.productIsF);
    CHECK(!rep.witness.empty());

    MatrixFactorization constant = mf;
    constant.h.at(1, 1) = constant.h.at(1, 1) + MPoly::constant(constant.h.vars(), Rat(1));
    MFCheckReport rep2 = verifyMF(constant);
    CHECK(!rep2.entriesInMaxIdeal);
    CHECK(!rep2.ok());
}

TEST_CASE("module closure verdicts") {
    // 1 and t over (t^3, t^4): t * t = t^2 is missing from e M.
    AlgebraVerdict bad = isAlgebra(moduleOf("t^3", "t^4", {"1", "t"}), 0);
    CHECK(!bad.isAlgebra);
    CHECK(bad.pairI == 1);
    CHECK(bad.pairJ == 1);
    CHECK(bad.witness.find("t^2") != std::string::npos);

    AlgebraVerdict good = isAlgebra(moduleOf("t^3", "t^4", {"1", "t^5"}), 0);
    CHECK(good.isAlgebra);
    CHECK(good.witness.empty());

    AlgebraVerdict proj = isAlgebra(moduleOf("t^4", "t^6 + t^7", {"1", "t^7"}), 0);
    CHECK(proj.isAlgebra);
}

TEST_CASE("closure verdict is invariant under module-preserving recombination") {
    // Replacing g2 by g2 + x g1 spans the same module.
    AlgebraVerdict a = isAlgebra(moduleOf("t^3", "t^4", {"1", "t^5"}), 0);
    AlgebraVerdict b = isAlgebra(moduleOf("t^3", "t^4", {"1", "t^5 + t^3"}), 0);
    CHECK(a.isAlgebra == b.isAlgebra);

    AlgebraVerdict c = isAlgebra(moduleOf("t^3", "t^4", {"1", "t"}), 0);
    AlgebraVerdict d = isAlgebra(moduleOf("t^3", "t^4", {"1", "t + t^4"}), 0);
    CHECK(c.isAlgebra == d.isAlgebra);
}

TEST_CASE("genericity witness accepts the standard plane and rejects a bad one") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    GenericWitnessReport ok =
        isGenericProjectionWitness(b, project(b, planeOf({1, 0, 0, 0, 1, 1})));
    CHECK(ok.generic);
    CHECK(ok.independentModM2);
    CHECK(ok.muMatches);
    CHECK(ok.muPlane == 16);
    CHECK(ok.muBarSpace == 16);
    CHECK(ok.reason.empty());

    GenericWitnessReport bad =
        isGenericProjectionWitness(b, project(b, planeOf({1, 0, 0, 0, 0, 1}), {}, true));
    CHECK(!bad.generic);
    CHECK(bad.independentModM2);
    CHECK(!bad.muMatches);
    CHECK(bad.muPlane == 18);
    CHECK(!bad.reason.empty());
}

TEST_CASE("equivalence under seeded coordinate changes") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    MatrixFactorization mf = buildMF(b, planeOf({1, 0, 0, 0, 1, 1}));

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coef(-2, 2);
    int done = 0;
    while (done < 2) {
        QMatrix U(2, 2), V(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                U.at(i, j) = Rat(coef(rng));
                V.at(i, j) = Rat(coef(rng));
            }
        auto Vi = inverseOf(V);
        if (detOf(U).isZero() || !Vi.has_value()) continue;
        auto Ui = inverseOf(U);
        REQUIRE(Ui.has_value());
        ++done;
        auto lift = [&](const QMatrix& m) {
            PolyMatrix p(2, 2, mf.d.vars());
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) p.at(i, j) = MPoly::constant(mf.d.vars(), m.at(i, j));
            return p;
        };
        // d' = U d V^{-1} and h' = V h U^{-1} keep d' h' = F Id.
        MatrixFactorization other = mf;
        other.d = lift(U) * mf.d * lift(*Vi);
        other.h = lift(V) * mf.h * lift(*Ui);
        other.gens.reset();

        EquivalenceVerdict verdict = mfEquivalent(mf, other, 1);
        CHECK(verdict.kind == EquivalenceVerdict::Equivalent);
        REQUIRE(verdict.phi.has_value());
        REQUIRE(verdict.psi.has_value());
        // The witness conjugates d onto d'.
        CHECK(*verdict.phi * mf.d == other.d * *verdict.psi);
    }
}

TEST_CASE("equivalence requires matching equations") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    MatrixFactorization mf = buildMF(b, planeOf({1, 0, 0, 0, 1, 1}));
    StandardBranch c = mk({"t^3", "t^4", "t^5"});
    MatrixFactorization other = buildMF(c, planeOf({1, 0, 0, 0, 1, 0}));
    CHECK(verifyMF(other).ok());
    CHECK_THROWS_WITH_AS(mfEquivalent(mf, other), doctest::Contains("SameFRequired"), Error);
}

TEST_CASE("cokernel screen proves inequivalence") {
    StandardBranch b = mk({"t^4", "t^6", "t^7"});
    MatrixFactorization mf = buildMF(b, planeOf({1, 0, 0, 0, 1, 1}));
    // diag(F, 1) is a factorization of F with a different corank at 0.
    MatrixFactorization triv;
    triv.eq = mf.eq;
    triv.size = 2;
    triv.d = PolyMatrix(2, 2, mf.d.vars());
    triv.h = PolyMatrix(2, 2, mf.d.vars());
    triv.d.at(0, 0) = mf.eq.F;
    triv.d.at(1, 1) = MPoly::constant(mf.d.vars(), Rat(1));
    triv.h.at(0, 0) = MPoly::constant(mf.d.vars(), Rat(1));
    triv.h.at(1, 1) = mf.eq.F;
    EquivalenceVerdict verdict = mfEquivalent(mf, triv, 1);
    CHECK(verdict.kind == EquivalenceVerdict::Inequivalent);
    CHECK(!verdict.certificate.empty());
}
