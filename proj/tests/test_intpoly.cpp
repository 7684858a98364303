#include <doctest.h>

#include "rpp/intpoly.hpp"
#include "rpp/modpoly.hpp"

using namespace rpp;

namespace {
// coefficients from the constant term upward
IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }
}  // namespace

TEST_CASE("degree and trimming") {
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly({0, 0, 0}).degree() == -1);
    CHECK(P({1}).degree() == 0);
    CHECK(P({-1, 0, 2}).degree() == 2);
    CHECK(P({5, 1, 0}).degree() == 1);
}

TEST_CASE("arithmetic basics") {
    IntPoly a = P({-1, 0, 2});  // 2z^2 - 1
    IntPoly b = P({1, 1});      // z + 1
    CHECK(a + b == P({0, 1, 2}));
    CHECK(a - a == IntPoly());
    CHECK(a * b == P({-1, -1, 2, 2}));
    CHECK(a.derivative() == P({0, 4}));
    CHECK(P({7}).derivative() == IntPoly());
    CHECK(a.eval(Rat(2)) == Rat(7));
    CHECK(a.eval(make_rat(Int(1), Int(2))) == make_rat(Int(-1), Int(2)));
}

TEST_CASE("content and primitive part") {
    IntPoly a = P({-2, 0, 4});
    CHECK(a.content() == 2);
    CHECK(a.primitive_part() == P({-1, 0, 2}));
    CHECK((-a).primitive_normalized() == P({-1, 0, 2}));
    CHECK(IntPoly().content() == 0);
}

TEST_CASE("poly_gcd: spec examples") {
    // gcd(z^2-1, z-1) = z-1
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // a = (2z+1)(z-1), b = 2z+1  ->  2z+1
    IntPoly a = P({1, 2}) * P({-1, 1});
    CHECK(a == P({-1, -1, 2}));
    CHECK(poly_gcd(a, P({1, 2})) == P({1, 2}));
    // coprime pair
    CHECK(poly_gcd(P({1, 0, 1}), P({0, 1})) == P({1}));
    CHECK_THROWS_AS(poly_gcd(IntPoly(), IntPoly()), std::invalid_argument);
}

TEST_CASE("poly_gcd result is primitive with positive lead") {
    IntPoly a = P({2, 4}) * P({-3, 3});  // content present on both sides
    IntPoly b = P({2, 4}) * P({5});
    IntPoly g = poly_gcd(a, b);
    CHECK(g == P({1, 2}));
    CHECK(g.content() == 1);
    CHECK(sign(g.lead()) > 0);
}

TEST_CASE("squarefree_part: spec examples") {
    CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));   // (z-1)^2 -> z-1
    CHECK(squarefree_part(P({0, -1, 0, 1})) == P({0, -1, 0, 1}));  // z^3-z
    // (2z+1)^2 (z-1) -> 2z^2 - z - 1
    IntPoly a = P({1, 2}) * P({1, 2}) * P({-1, 1});
    CHECK(squarefree_part(a) == P({-1, -1, 2}));
    CHECK_THROWS_AS(squarefree_part(IntPoly()), std::invalid_argument);
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // (z-1)^3 (z+2)^2 (z^2+1)
    IntPoly a = P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({2, 1}) * P({2, 1}) *
                P({1, 0, 1});
    auto dec = squarefree_decomposition(a);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].first == P({1, 0, 1}));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P({2, 1}));
    CHECK(dec[1].second == 2);
    CHECK(dec[2].first == P({-1, 1}));
    CHECK(dec[2].second == 3);
}

TEST_CASE("exact division") {
    IntPoly a = P({-1, -1, 2});
    CHECK(*a.divided_exactly_by(P({1, 2})) == P({-1, 1}));
    CHECK(!P({1, 1, 1}).divided_exactly_by(P({1, 2})).has_value());
}

TEST_CASE("poly_compose: spec examples") {
    IntPoly t2 = P({-1, 0, 2});
    auto r = poly_compose(t2, P({0, 1}), P({1}));
    CHECK(r.num == t2);
    CHECK(r.den == P({1}));
    r = poly_compose(t2, t2, P({1}));
    // oracle: expand 2(2z^2-1)^2 - 1 directly
    IntPoly expect = t2 * t2 * Int(2) - P({1});
    CHECK(expect == P({1, 0, -8, 0, 8}));
    CHECK(r.num == expect);
    CHECK(r.den == P({1}));
    r = poly_compose(P({0, 0, 1}), P({0, 1}), P({-1, 1}));
    CHECK(r.num == P({0, 0, 1}));
    CHECK(r.den == P({1, -2, 1}));
}

TEST_CASE("poly_compose clears pair content") {
    // outer = 2z, inner = (2z, 2): raw pair (4z, 2) reduces to (2z, 1)
    auto r = poly_compose(P({0, 2}), P({0, 2}), P({2}));
    Int g;
    mpz_gcd(g.get_mpz_t(), r.num.content().get_mpz_t(),
            r.den.content().get_mpz_t());
    CHECK(g == 1);
}

TEST_CASE("eval_sign spec examples") {
    CHECK(P({-2, 0, 1}).sign_at(Rat(1)) == -1);
    CHECK(P({-2, 0, 1}).sign_at(make_rat(Int(3), Int(2))) == 1);
    CHECK(P({-1, -1, 2}).sign_at(Rat(1)) == 0);
}

TEST_CASE("modular certificates") {
    CHECK(certified_squarefree(P({-1, 0, 2})));
    CHECK(!certified_squarefree(P({1, -2, 1})));  // (z-1)^2
    CHECK(certified_coprime(P({1, 0, 1}), P({0, 1})));
    CHECK(!certified_coprime(P({-1, 0, 1}), P({-1, 1})));
}

TEST_CASE("seeded random: gcd of products sees the planted factor") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        auto rand_poly = [&](int deg) {
            std::vector<Int> c(deg + 1);
            for (auto &v : c) v = Int(rng.next_in(-9, 9));
            if (c.back() == 0) c.back() = 1;
            return IntPoly(std::move(c));
        };
        IntPoly common = rand_poly(2);
        IntPoly a = common * rand_poly(2);
        IntPoly b = common * rand_poly(1);
        IntPoly g = poly_gcd(a, b);
        CHECK(g.divided_exactly_by(common.primitive_normalized()).has_value());
    }
}
