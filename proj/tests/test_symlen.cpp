#include "tritile/symlen.hpp"
#include "tritile/spec.hpp"

#include <doctest.h>

using namespace tritile;

TEST_CASE("symbolic length arithmetic") {
    SymLen a = SymLen::unit(SideLabel::A);
    SymLen b = SymLen::unit(SideLabel::B);
    SymLen c = SymLen::unit(SideLabel::C);
    SymLen v = a - b + c;
    CHECK(v.q[0] == 1);
    CHECK(v.q[1] == -1);
    CHECK(v.q[2] == 1);
    CHECK((v + v) == rat(2, 1) * v);
    CHECK((v - v).is_zero());
    CHECK(-v == SymLen(Rat(-1), Rat(1), Rat(-1)));
    CHECK(v != a);
}

TEST_CASE("evaluation against a numeric spec") {
    TileSpec spec = make_spec(3, 5);
    CHECK(spec.c == doctest::Approx(7.0));
    SymLen v = SymLen(Rat(27), Rat(1), Rat(7));  // 27a + b + 7c
    CHECK(v.eval(spec) == doctest::Approx(135.0));
}

TEST_CASE("printing") {
    CHECK(SymLen(Rat(2), Rat(-1), rat(1, 3)).to_string() == "2a - b + 1/3c");
    CHECK(SymLen::zero().to_string() == "0");
    CHECK(SymLen::unit(SideLabel::B).to_string() == "b");
    CHECK((-SymLen::unit(SideLabel::C)).to_string() == "-c");
}
