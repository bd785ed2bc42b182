#include "gpd/rational.hpp"

#include <doctest.h>

using gpd::GaussRat;
using gpd::Rat;

TEST_CASE("gaussian rational field arithmetic") {
    GaussRat a(Rat(1, 2), Rat(1));
    GaussRat b(Rat(3), Rat(-1, 2));
    CHECK(a + b == GaussRat(Rat(7, 2), Rat(1, 2)));
    CHECK(a * b == GaussRat(Rat(2), Rat(11, 4)));
    CHECK(a - a == GaussRat(0));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == GaussRat(Rat(1, 2), Rat(-1)));
    CHECK((a * a.conj()).is_real());
    CHECK_THROWS(a / GaussRat(0));
}

TEST_CASE("token printing") {
    CHECK(gpd::to_string(GaussRat(4)) == "4");
    CHECK(gpd::to_string(GaussRat(Rat(3, 2))) == "3/2");
    CHECK(gpd::to_string(GaussRat(Rat(-3, 2))) == "-3/2");
    CHECK(gpd::to_string(GaussRat(Rat(1), Rat(1, 2))) == "1+1/2*i");
    CHECK(gpd::to_string(GaussRat(Rat(0), Rat(-2))) == "0-2*i");
}

TEST_CASE("token parsing round-trips") {
    for (const char* tok : {"0", "4", "-7/3", "1+1/2*i", "0-2*i", "5/6-7/8*i"}) {
        auto q = gpd::parse_gauss_rat(tok);
        REQUIRE(q.has_value());
        CHECK(gpd::to_string(*q) == tok);
    }
    CHECK(gpd::parse_gauss_rat("2/4") == GaussRat(Rat(1, 2)));
    CHECK(gpd::parse_gauss_rat("i") == GaussRat::i());
    CHECK(gpd::parse_gauss_rat("-1/2*i") == GaussRat(Rat(0), Rat(-1, 2)));
    CHECK(!gpd::parse_gauss_rat("").has_value());
    CHECK(!gpd::parse_gauss_rat("1.5").has_value());
    CHECK(!gpd::parse_gauss_rat("1+i+1").has_value());
    CHECK(!gpd::parse_gauss_rat("1/").has_value());
}

TEST_CASE("integer extraction guards") {
    CHECK(gpd::rat_to_int(Rat(6, 2)) == 3);
    CHECK_THROWS(gpd::rat_to_int(Rat(1, 2)));
    CHECK_THROWS(gpd::gauss_to_int(GaussRat::i()));
}
