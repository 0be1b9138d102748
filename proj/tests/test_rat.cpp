#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gpl/rat.hpp"

using gpl::Int;
using gpl::Rat;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-1, -2) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 3).den() == 1);
    CHECK(Rat(6, 3).num() == 2);
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rat(1, 0), gpl::ZeroDenominator);
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), gpl::ZeroDenominator);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2) + Rat(2, 3) == Rat(8, 3));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(2, 3) / Rat(4, 3) == Rat(1, 2));
    CHECK(-Rat(5, 2) == Rat(-5, 2));
}

TEST_CASE("ordering by cross multiplication") {
    CHECK(Rat(2, 3) < Rat(8, 3));
    CHECK(Rat(7, 3) < Rat(8, 3));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(8, 3) <= Rat(8, 3));
    CHECK(Rat(1567, 588) < Rat(8, 3)); // the (3,3,4) slope sits just below 8/3
}

TEST_CASE("fraction strings") {
    CHECK(Rat(8, 3).str() == "8/3");
    CHECK(Rat(2).str() == "2");
    CHECK(Rat(-5, 2).str() == "-5/2");
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(4, 2).str() == "2");
}

TEST_CASE("integrality") {
    CHECK(Rat(6, 3).is_integer());
    CHECK_FALSE(Rat(7, 3).is_integer());
    CHECK(Rat(6, 3).to_integer() == 2);
    CHECK_THROWS_AS(Rat(7, 3).to_integer(), gpl::Error);
}

TEST_CASE("field laws hold on random values") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        Rat a(num(rng), den(rng));
        Rat b(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK((a < b) == (b > a));
    }
}

TEST_CASE("values stay exact far beyond machine words") {
    Rat tiny(1, Int("1000000000000000000000000000000"));
    Rat sum;
    for (int i = 0; i < 1000; ++i) sum += tiny;
    CHECK(sum == Rat(1, Int("1000000000000000000000000000")));
}
