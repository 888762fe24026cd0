#include "tritile/rat.hpp"

#include <doctest.h>

using namespace tritile;

TEST_CASE("rational parsing") {
    CHECK(parse_rat("3/4") == rat(3, 4));
    CHECK(parse_rat("-3/4") == rat(-3, 4));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("0.25") == rat(1, 4));
    CHECK(parse_rat("-1.5") == rat(-3, 2));
    CHECK(parse_rat("6/4") == rat(3, 2));  // canonicalized
    CHECK_THROWS(parse_rat("abc"));
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat(""));
}

TEST_CASE("rational formatting and predicates") {
    CHECK(rat_to_string(rat(3, 4)) == "3/4");
    CHECK(rat_to_string(Rat(-7)) == "-7");
    CHECK(is_integer(Rat(5)));
    CHECK(!is_integer(rat(5, 3)));
    CHECK(rat_to_double(rat(1, 2)) == 0.5);
}

TEST_CASE("exact square roots") {
    auto r = rat_sqrt_exact(Rat(49));
    REQUIRE(r.has_value());
    CHECK(*r == Rat(7));
    CHECK(rat_sqrt_exact(rat(9, 4)).value() == rat(3, 2));
    CHECK(!rat_sqrt_exact(Rat(3)).has_value());
    CHECK(!rat_sqrt_exact(rat(1, 3)).has_value());
    CHECK(!rat_sqrt_exact(Rat(-4)).has_value());
}
