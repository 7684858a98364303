#include <doctest.h>

#include "rpp/ratmap.hpp"

using namespace rpp;

namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

RationalMap cheb2() { return RationalMap(P({-1, 0, 2}), P({1})); }

// T_d by the recurrence, used as an oracle against iterate_map
IntPoly cheb_poly(int d) {
    IntPoly t0 = P({1}), t1 = P({0, 1});
    if (d == 0) return t0;
    for (int i = 1; i < d; ++i) {
        IntPoly t2 = IntPoly({0, 2}) * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

RationalMap random_map(SplitMix64 &rng, int deg) {
    while (true) {
        std::vector<Int> pc(deg + 1), qc(deg + 1);
        for (auto &v : pc) v = Int(rng.next_in(-5, 5));
        for (auto &v : qc) v = Int(rng.next_in(-5, 5));
        if (pc.back() == 0 && qc.back() == 0) continue;
        IntPoly p(std::move(pc)), q(std::move(qc));
        if (p.is_zero() && q.is_zero()) continue;
        RationalMap f(std::move(p), std::move(q));
        if (f.degree() == deg) return f;
    }
}

}  // namespace

TEST_CASE("construction normalizes: spec examples") {
    CHECK(cheb2().degree() == 2);
    RationalMap f(P({-1, 0, 1}), P({0, 1}));
    CHECK(f.degree() == 2);
    CHECK(f.num() == P({-1, 0, 1}));
    RationalMap g(P({-1, 0, 1}), P({-1, 1}));
    CHECK(g.degree() == 1);
    CHECK(g.num() == P({1, 1}));
    CHECK(g.den() == P({1}));
    CHECK_THROWS_AS(RationalMap(IntPoly(), IntPoly()), std::invalid_argument);
}

TEST_CASE("construction: sign and content normalization") {
    RationalMap f(P({2, 0, -4}), P({0, -2}));
    CHECK(f.den() == P({0, 1}));
    CHECK(f.num() == P({-1, 0, 2}));
    RationalMap c(P({3}), IntPoly());  // constant-infinity map
    CHECK(c.degree() == 0);
    CHECK(c.eval(ProjPoint::finite(Rat(5))).at_infinity);
}

TEST_CASE("eval: spec examples") {
    RationalMap f(P({-1, 0, 1}), P({0, 1}));
    CHECK(f.eval(ProjPoint::finite(Rat(0))).at_infinity);
    CHECK(cheb2().eval(ProjPoint::infinity()).at_infinity);
    RationalMap h3(P({0, -12, 0, 8}), P({1}));
    auto v = h3.eval(ProjPoint::finite(Rat(1)));
    CHECK(!v.at_infinity);
    CHECK(v.value == -4);
    // limit at infinity for equal degrees
    RationalMap r(P({0, 0, 3}), P({1, 0, 2}));
    auto w = r.eval(ProjPoint::infinity());
    CHECK(w.value == make_rat(Int(3), Int(2)));
}

TEST_CASE("iterate: spec examples") {
    RationalMap f = cheb2();
    RationalMap f2 = iterate_map(f, 2);
    CHECK(f2.num() == P({1, 0, -8, 0, 8}));
    CHECK(f2.den() == P({1}));
    CHECK(iterate_map(f, 1) == f);
    RationalMap f3 = iterate_map(f, 3);
    CHECK(f3.num() == cheb_poly(8));
}

TEST_CASE("iterate: degree law on random maps") {
    SplitMix64 rng(11);
    for (int d = 2; d <= 3; ++d)
        for (int t = 0; t < 10; ++t) {
            RationalMap f = random_map(rng, d);
            long dk = d;
            for (int k = 2; k <= 3; ++k) {
                dk *= d;
                CHECK(iterate_map(f, k).degree() == dk);
            }
        }
}

TEST_CASE("iterate: budget error, never a wrong answer") {
    RunConfig cfg;
    cfg.max_iterate_degree = 100;
    CHECK_THROWS_AS(iterate_map(cheb2(), 11, cfg), BudgetError);
}

TEST_CASE("fixed_point_data: spec examples") {
    auto d1 = fixed_point_data(cheb2(), 1);
    CHECK(d1.F == P({-1, -1, 2}));
    CHECK(d1.infinity_multiplicity == 1);
    CHECK(d1.all_real);
    REQUIRE(d1.roots.size() == 2);
    CHECK(compare_point_rat(d1.roots[0], make_rat(Int(-1), Int(2))) == 0);
    CHECK(compare_point_rat(d1.roots[1], Rat(1)) == 0);

    RationalMap h3(P({0, -12, 0, 8}), P({1}));
    auto d2 = fixed_point_data(h3, 1);
    CHECK(d2.F == P({0, -13, 0, 8}));
    CHECK(d2.roots.size() == 3);
    CHECK(d2.all_real);

    RationalMap r(P({-1, 0, 1}), P({0, 1}));
    auto d3 = fixed_point_data(r, 1);
    CHECK(d3.F.degree() == 0);
    CHECK(d3.roots.empty());
    CHECK(d3.infinity_multiplicity == 3);
    CHECK(d3.all_real);
}

TEST_CASE("fixed-point count law") {
    SplitMix64 rng(17);
    for (int t = 0; t < 20; ++t) {
        RationalMap f = random_map(rng, 2);
        for (int k = 1; k <= 3; ++k) {
            auto d = fixed_point_data(f, k);
            long dk = 1;
            for (int i = 0; i < k; ++i) dk *= 2;
            CHECK(d.F.degree() + d.infinity_multiplicity == dk + 1);
        }
    }
}

TEST_CASE("derivative: spec examples") {
    CHECK(cheb2().derivative().num() == P({0, 4}));
    RationalMap f(P({-1, 0, 1}), P({0, 1}));
    RationalMap df = f.derivative();
    CHECK(df.num() == P({1, 0, 1}));
    CHECK(df.den() == P({0, 0, 1}));
    RationalMap c(P({7}), P({1}));
    CHECK(c.derivative().num() == IntPoly());
}

TEST_CASE("multiplier identity F'(z0) = q(z0)(f'(z0) - 1) at planted 0") {
    SplitMix64 rng(23);
    for (int deg = 2; deg <= 3; ++deg)
        for (int t = 0; t < 25; ++t) {
            RationalMap f = [&] {
                while (true) {
                    std::vector<Int> pc(deg + 1), qc(deg);
                    pc[0] = 0;
                    for (std::size_t i = 1; i < pc.size(); ++i)
                        pc[i] = Int(rng.next_in(-5, 5));
                    for (auto &v : qc) v = Int(rng.next_in(-5, 5));
                    if (pc.back() == 0) pc.back() = 1;
                    if (qc[0] == 0) qc[0] = 1;
                    IntPoly p(std::move(pc)), q(std::move(qc));
                    RationalMap g(std::move(p), std::move(q));
                    if (g.degree() == deg && g.num().coeff(0) == 0) return g;
                }
            }();
            IntPoly Fraw = fixed_point_poly_raw(f);
            Rat lhs = Fraw.derivative().eval(Rat(0));
            RationalMap df = f.derivative();
            Rat q0 = f.den().eval(Rat(0));
            Rat fp0 = df.num().eval(Rat(0)) / df.den().eval(Rat(0));
            CHECK(lhs == q0 * (fp0 - 1));
        }
}

TEST_CASE("classify_multiplier: spec examples") {
    auto roots = fixed_point_data(cheb2(), 1).roots;
    auto c1 = classify_multiplier(cheb2(), roots[1], 1);
    CHECK(c1.verdict == MultVerdict::Repelling);
    CHECK(c1.lambda_bounds.first == 4);

    RationalMap g(P({-1, 0, 2}), P({0, 1}));  // 2z - 1/z
    auto groots = fixed_point_data(g, 1).roots;
    REQUIRE(groots.size() == 2);
    auto c2 = classify_multiplier(g, groots[1], 1);
    CHECK(c2.verdict == MultVerdict::Repelling);
    CHECK(c2.lambda_bounds.first == 3);

    CHECK_THROWS_AS(
        classify_multiplier(cheb2(), IsolatingInterval::exact(Rat(5)), 1),
        std::invalid_argument);
}

TEST_CASE("indifferent multipliers detected exactly") {
    // f(z) = z^2 + z: 0 is a fixed point with f'(0) = 1
    RationalMap f(P({0, 1, 1}), P({1}));
    auto d = fixed_point_data(f, 1);
    REQUIRE(!d.roots.empty());
    auto c = classify_multiplier(f, d.roots[0], 1);
    CHECK(c.verdict == MultVerdict::IndifferentPlus);

    // f(z) = -z + z^2 ... llambda = -1 at 0: F_1 = z^2 - 2z simple root 0,
    // F_2 has a multiple root there
    RationalMap g(P({0, -1, 1}), P({1}));
    auto dg = fixed_point_data(g, 1);
    auto cg = classify_multiplier(g, dg.roots[0], 1);
    CHECK(cg.verdict == MultVerdict::IndifferentMinus);
}

TEST_CASE("multiplier_at_infinity: spec examples") {
    auto a = multiplier_at_infinity(cheb2(), 1);
    CHECK(a.verdict == MultVerdict::Attracting);
    CHECK(a.lambda_bounds.first == 0);

    RationalMap g(P({-1, 0, 2}), P({0, 1}));
    auto b = multiplier_at_infinity(g, 1);
    CHECK(b.verdict == MultVerdict::Attracting);
    CHECK(b.lambda_bounds.first == make_rat(Int(1), Int(2)));

    RationalMap r(P({-1, 0, 1}), P({0, 1}));
    auto c = multiplier_at_infinity(r, 1);
    CHECK(c.verdict == MultVerdict::IndifferentPlus);

    RationalMap noinf(P({0, 0, 1}), P({2, 0, 1}));  // z^2/(z^2+2)
    CHECK_THROWS_AS(multiplier_at_infinity(noinf, 1), std::invalid_argument);
}

TEST_CASE("2-cycle multipliers agree around the cycle") {
    RationalMap f(P({-1, 0, 1}), P({0, 1}));  // (z^2-1)/z: 2-cycle +-sqrt(1/2)
    auto d2 = fixed_point_data(f, 2);
    REQUIRE(d2.roots.size() == 2);
    auto ca = classify_multiplier(f, d2.roots[0], 2);
    auto cb = classify_multiplier(f, d2.roots[1], 2);
    CHECK(ca.verdict == MultVerdict::Repelling);
    CHECK(cb.verdict == MultVerdict::Repelling);
    // common multiplier 9: both enclosures must contain it
    CHECK(ca.lambda_bounds.first <= 9);
    CHECK(ca.lambda_bounds.second >= 9);
    CHECK(cb.lambda_bounds.first <= 9);
    CHECK(cb.lambda_bounds.second >= 9);
}

TEST_CASE("conjugate: spec examples") {
    RationalMap f = cheb2();
    CHECK(conjugate(f, Rat(1), Rat(0), Rat(0), Rat(1)) == f);

    // phi(z) = z + 1 moves the fixed points {1, -1/2} to {2, 1/2}
    RationalMap g = conjugate(f, Rat(1), Rat(1), Rat(0), Rat(1));
    auto roots = fixed_point_data(g, 1).roots;
    REQUIRE(roots.size() == 2);
    CHECK(compare_point_rat(roots[0], make_rat(Int(1), Int(2))) == 0);
    CHECK(compare_point_rat(roots[1], Rat(2)) == 0);

    // phi(z) = 1/z: finite fixed points {1, -1/2} move to {1, -2} and the
    // one at infinity lands on 0; multiplier 4 preserved at phi(1) = 1
    RationalMap h = conjugate(f, Rat(0), Rat(1), Rat(1), Rat(0));
    auto hroots = fixed_point_data(h, 1).roots;
    REQUIRE(hroots.size() == 3);
    CHECK(compare_point_rat(hroots[0], Rat(-2)) == 0);
    CHECK(compare_point_rat(hroots[1], Rat(0)) == 0);
    CHECK(compare_point_rat(hroots[2], Rat(1)) == 0);
    auto c = classify_multiplier(h, hroots[2], 1);
    CHECK(c.lambda_bounds.first == 4);
    // the image of the superattracting point at infinity stays attracting
    auto c0 = classify_multiplier(h, hroots[1], 1);
    CHECK(c0.verdict == MultVerdict::Attracting);
    CHECK(c0.lambda_bounds.first == 0);

    CHECK_THROWS_AS(conjugate(f, Rat(2), Rat(2), Rat(1), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("iteration consistency: F_1 divides F_2") {
    SplitMix64 rng(29);
    for (int t = 0; t < 20; ++t) {
        RationalMap f = random_map(rng, 2);
        IntPoly f1 = fixed_point_data(f, 1).F;
        IntPoly f2 = fixed_point_data(f, 2).F;
        CHECK(f2.divided_exactly_by(f1).has_value());
    }
}

TEST_CASE("conjugation invariance of realness and multiplier classes") {
    SplitMix64 rng(31);
    for (int t = 0; t < 10; ++t) {
        RationalMap f = random_map(rng, 2);
        Rat a(rng.next_in(-3, 3)), b(rng.next_in(-3, 3)), c(rng.next_in(-3, 3)),
            e(rng.next_in(-3, 3));
        if (a * e - b * c == 0) continue;
        RationalMap g = conjugate(f, a, b, c, e);
        for (int k = 1; k <= 3; ++k) {
            CHECK(fixed_point_data(f, k).all_real ==
                  fixed_point_data(g, k).all_real);
        }
    }
}
