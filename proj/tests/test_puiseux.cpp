#include "doctest.h"

#include <numeric>

#include "cmf/branch.hpp"
#include "cmf/expr.hpp"
#include "cmf/puiseux.hpp"

using namespace cmf;

namespace {

StandardBranch plane(const std::string& x, const std::string& y, int window = 0) {
    VarList tvars{"t"};
    std::vector<MPoly> cs{parseExpression(x, tvars), parseExpression(y, tvars)};
    int maxDeg = std::max(cs[0].degreeIn("t"), cs[1].degreeIn("t"));
    return standardize(Branch::fromCoords(std::move(cs), {}, window ? window : maxDeg + 2));
}

// Semigroup generators from the characteristic sequence:
// b0 = e, b1 = beta_1, b_{k+1} = b_k d_{k-1} / d_k + beta_{k+1} - beta_k
// with d_0 = e, d_k = gcd(d_{k-1}, beta_k).
std::vector<long> generatorRecursion(int e, const std::vector<int>& beta) {
    std::vector<long> b{e};
    std::vector<int> d{e};
    for (size_t i = 0; i < beta.size(); ++i) d.push_back(std::gcd(d.back(), beta[i]));
    if (!beta.empty()) b.push_back(beta[0]);
    for (size_t k = 1; k < beta.size(); ++k)
        b.push_back(b[k] * d[k - 1] / d[k] + beta[k] - beta[k - 1]);
    return b;
}

} // namespace

TEST_CASE("characteristic data of (t^4, t^6 + t^7)") {
    PuiseuxData px = puiseuxCharacteristic(plane("t^4", "t^6 + t^7"));
    CHECK(px.e == 4);
    CHECK(px.charExponents == std::vector<int>{6, 7});
    CHECK(px.gcdSeq == std::vector<int>{4, 2, 1});
    CHECK(px.sgGenerators == std::vector<long>{4, 6, 13});
    CHECK(px.multSequence == std::vector<int>{4, 2, 2, 1});
    CHECK(px.delta == 8);
    CHECK(px.mu == 16);
    CHECK(px.conductor == 16);
}

TEST_CASE("characteristic data of the cusp") {
    PuiseuxData px = puiseuxCharacteristic(plane("t^2", "t^3"));
    CHECK(px.e == 2);
    CHECK(px.charExponents == std::vector<int>{3});
    CHECK(px.multSequence == std::vector<int>{2, 1});
    CHECK(px.delta == 1);
    CHECK(px.mu == 2);
}

TEST_CASE("generator recursion matches the reported semigroup generators") {
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"t^4", "t^6 + t^7"},
             {"t^2", "t^3"},
             {"t^6", "t^9 + t^10"},
             {"t^4", "t^10 + t^11"}}) {
        PuiseuxData px = puiseuxCharacteristic(plane(x, y));
        CHECK(px.sgGenerators == generatorRecursion(px.e, px.charExponents));
    }
}

TEST_CASE("delta from gaps equals delta from the multiplicity sequence") {
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"t^4", "t^6 + t^7"},
             {"t^3", "t^7 + t^8"},
             {"t^5", "t^7"},
             {"t^6", "t^8 + t^9"}}) {
        DeltaReport r = deltaConsistency(plane(x, y));
        CHECK(r.agree);
        CHECK(r.deltaGaps == r.deltaMultSeq);
        CHECK(r.px.mu == 2 * r.deltaGaps);
    }
}

TEST_CASE("multiplicity sequence by explicit blow-up") {
    CHECK(multiplicitySequenceFromExponents(4, {6, 7}) == std::vector<int>{4, 2, 2, 1});
    CHECK(multiplicitySequenceFromExponents(2, {3}) == std::vector<int>{2, 1});
    CHECK(multiplicitySequenceFromExponents(5, {6}) == std::vector<int>{5, 1});
    CHECK(multiplicitySequenceFromExponents(1, {}) == std::vector<int>{1});
    // Sum over the sequence of m(m-1)/2 gives delta.
    long delta = 0;
    for (int m : multiplicitySequenceFromExponents(4, {6, 7}))
        delta += static_cast<long>(m) * (m - 1) / 2;
    CHECK(delta == 8);
}

TEST_CASE("smooth branch has no characteristic exponents") {
    PuiseuxData px = puiseuxCharacteristic(plane("t", "t^2", 6));
    CHECK(px.e == 1);
    CHECK(px.charExponents.empty());
    CHECK(px.delta == 0);
    CHECK(px.mu == 0);
}
