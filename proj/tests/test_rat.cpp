#include "doctest.h"

#include "cmf/rat.hpp"

using namespace cmf;

TEST_CASE("rationals canonicalize to lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).isInteger());
    CHECK(Rat(6, 3).num() == 2);
    CHECK(Rat(6, 3).den() == 1);
}

TEST_CASE("field arithmetic") {
    Rat a(3, 4), b(5, 6);
    CHECK(a + b == Rat(19, 12));
    CHECK(a - b == Rat(-1, 12));
    CHECK(a * b == Rat(5, 8));
    CHECK(a / b == Rat(9, 10));
    CHECK(-a == Rat(-3, 4));
    CHECK(a + (-a) == Rat(0));
    CHECK(a * a.inv() == Rat(1));
    CHECK(pow(Rat(2, 3), 5) == Rat(32, 243));
    CHECK(pow(a, 0) == Rat(1));
    CHECK(abs(Rat(-7, 2)) == Rat(7, 2));
}

TEST_CASE("ordering is the usual one on Q") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(7, 3) > Rat(2));
    CHECK(Rat(2, 6).sign() == 1);
    CHECK(Rat(-2, 6).sign() == -1);
    CHECK(Rat(0).sign() == 0);
}

TEST_CASE("parse accepts p and p/q") {
    CHECK(Rat::parse("5") == Rat(5));
    CHECK(Rat::parse("-7/21") == Rat(-1, 3));
    CHECK(Rat::parse("0") == Rat(0));
    CHECK_THROWS_AS(Rat::parse("abc"), Error);
}

TEST_CASE("division by zero is rejected with a stable code") {
    CHECK_THROWS_WITH_AS(Rat(1, 0), "DivisionByZero: rational with zero denominator", Error);
    Rat a(1);
    CHECK_THROWS_AS(a /= Rat(0), Error);
    CHECK_THROWS_AS(Rat(0).inv(), Error);
}

TEST_CASE("str round-trips through parse") {
    for (long n = -6; n <= 6; ++n)
        for (long d = 1; d <= 5; ++d) {
            Rat r(n, d);
            CHECK(Rat::parse(r.str()) == r);
        }
}
