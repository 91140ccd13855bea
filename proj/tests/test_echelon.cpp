#include "doctest.h"

#include <random>

#include "cmf/echelon.hpp"

using namespace cmf;

namespace {

TSeries randomSeries(std::mt19937& rng, int trunc, int minOrder) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::vector<Rat> c(trunc);
    for (int k = minOrder; k < trunc; ++k) c[static_cast<size_t>(k)] = Rat(num(rng));
    return TSeries::fromCoeffs(std::move(c));
}

} // namespace

TEST_CASE("insert records one monic row per pivot order") {
    SeriesSpan sp(10);
    CHECK(sp.insert(TSeries::monomial(3, Rat(2), 10)) == 3);
    CHECK(sp.hasPivot(3));
    CHECK(sp.rows().at(3).coeff(3) == Rat(1));
    // Same order again: reduces away.
    CHECK(!sp.insert(TSeries::monomial(3, Rat(-5), 10)).has_value());
    CHECK(sp.size() == 1);
    CHECK(sp.insert(TSeries::monomial(5, Rat(1), 10)) == 5);
    CHECK(sp.pivotOrders() == std::set<int>{3, 5});
}

TEST_CASE("reduce gives a normal form: members reduce to the zero window") {
    std::mt19937 rng(9101);
    for (int it = 0; it < 15; ++it) {
        SeriesSpan sp(12);
        std::vector<TSeries> rows;
        for (int i = 0; i < 4; ++i) {
            TSeries v = randomSeries(rng, 12, i);
            rows.push_back(v);
            sp.insert(v);
        }
        // Random combination of the inserted rows is in the span.
        std::uniform_int_distribution<int> coef(-3, 3);
        TSeries comb(12);
        for (const auto& v : rows) comb = comb + v.scaled(Rat(coef(rng)));
        CHECK(sp.reduce(comb).isZeroWindow());
    }
}

TEST_CASE("reduce is idempotent and kills pivot coefficients") {
    std::mt19937 rng(9102);
    SeriesSpan sp(12);
    for (int i = 0; i < 5; ++i) sp.insert(randomSeries(rng, 12, i));
    TSeries v = randomSeries(rng, 12, 0);
    TSeries r = sp.reduce(v);
    CHECK(sp.reduce(r) == r);
    for (int piv : sp.pivotOrders()) CHECK(r.coeff(piv) == Rat(0));
}

TEST_CASE("backReduce yields the unique triangular basis") {
    SeriesSpan sp(8);
    TSeries a(8), b(8);
    a.setCoeff(1, Rat(1));
    a.setCoeff(2, Rat(3));
    b.setCoeff(2, Rat(1));
    sp.insert(a);
    sp.insert(b);
    sp.backReduce();
    // Row with pivot 1 no longer involves order 2.
    CHECK(sp.rows().at(1).coeff(2) == Rat(0));
    CHECK(sp.rows().at(2).coeff(2) == Rat(1));
}

TEST_CASE("echelonPivotOrders triangularizes") {
    TSeries a(8), b(8), c(8);
    a.setCoeff(1, Rat(2));
    a.setCoeff(3, Rat(1));
    b.setCoeff(1, Rat(4));
    b.setCoeff(3, Rat(2)); // dependent on a
    c.setCoeff(2, Rat(5));
    EchelonResult r = echelonPivotOrders({a, b, c});
    CHECK(r.pivotOrders == std::set<int>{1, 2});
    CHECK(r.reducedBasis.size() == 2);
    CHECK(r.reducedBasis[0].coeff(1) == Rat(1));
    CHECK(r.reducedBasis[1].coeff(2) == Rat(1));
}
