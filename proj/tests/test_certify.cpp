#include <doctest.h>

#include "rpp/certify.hpp"
#include "rpp/families.hpp"

using namespace rpp;

namespace {
IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }
}

TEST_CASE("scan_real_periodic: spec examples") {
    auto c1 = scan_real_periodic(chebyshev(2), 3);
    CHECK(c1.verdict == Verdict::Inconclusive);
    CHECK(c1.k_scanned == 3);
    CHECK(!c1.budget_exhausted);

    RationalMap f(P({1, 0, 1}), P({1}));  // z^2 + 1
    auto c2 = scan_real_periodic(f, 1);
    CHECK(c2.verdict == Verdict::CertifiedNotInRd);
    CHECK(c2.first_nonreal_k == 1);

    auto c3 = scan_real_periodic(perturbed_cheb2(make_rat(Int(1), Int(2))), 6);
    CHECK(c3.verdict == Verdict::CertifiedNotInRd);
    REQUIRE(c3.first_nonreal_k.has_value());
    CHECK(*c3.first_nonreal_k <= 6);
    MESSAGE("eps=1/2 first nonreal k = ", *c3.first_nonreal_k);
}

TEST_CASE("scan reports budget exhaustion in the certificate") {
    RunConfig cfg;
    cfg.max_iterate_degree = 8;
    auto c = scan_real_periodic(chebyshev(2), 10, cfg);
    CHECK(c.verdict == Verdict::Inconclusive);
    CHECK(c.budget_exhausted);
    CHECK(c.k_scanned == 3);
}

TEST_CASE("is_real_fibered: spec examples") {
    CHECK(is_real_fibered(RationalMap(P({-1, 0, 2}), P({0, 1}))));
    CHECK(is_real_fibered(RationalMap(P({-1, 0, 1}), P({0, 1}))));
    CHECK(!is_real_fibered(chebyshev(2)));
    CHECK(!is_real_fibered(RationalMap(P({1, 0, 1}), P({0, 1}))));
    // Moebius maps are real fibered
    CHECK(is_real_fibered(RationalMap(P({1, 2}), P({3}))));
    CHECK(is_real_fibered(RationalMap(P({1}), P({0, 1}))));
}

TEST_CASE("certify_rf: spec examples") {
    RationalMap f(P({-1, 0, 2}), P({0, 1}));  // 2z - 1/z
    auto c1 = certify_rf(f);
    CHECK(c1.verdict == Verdict::CertifiedInRd);
    CHECK(c1.criterion == Criterion::ThmRf);
    REQUIRE(c1.cycle.has_value());
    CHECK(c1.cycle->cls.verdict == MultVerdict::Attracting);

    RationalMap g(P({-1, 0, 1}), P({0, 1}));  // (z^2-1)/z
    auto c2 = certify_rf(g);
    CHECK(c2.verdict == Verdict::BoundaryIndifferent);
    REQUIRE(c2.cycle.has_value());
    CHECK(c2.cycle->points[0].is_infinity());
    CHECK(c2.cycle->cls.verdict == MultVerdict::IndifferentPlus);

    CHECK_THROWS_AS(certify_rf(RationalMap(P({1, 0, 1}), P({0, 1}))),
                    std::invalid_argument);
}

TEST_CASE("find_nonrepelling_short_cycle: spec examples") {
    auto w1 = find_nonrepelling_short_cycle(chebyshev(2));
    REQUIRE(w1.has_value());
    REQUIRE(w1->points.size() == 1);
    CHECK(w1->points[0].is_infinity());
    CHECK(w1->cls.verdict == MultVerdict::Attracting);
    CHECK(w1->cls.lambda_bounds.first == 0);

    auto w2 = find_nonrepelling_short_cycle(RationalMap(P({-1, 0, 2}), P({0, 1})));
    REQUIRE(w2.has_value());
    CHECK(w2->points[0].is_infinity());
    CHECK(w2->cls.lambda_bounds.first == make_rat(Int(1), Int(2)));

    auto w3 = find_nonrepelling_short_cycle(RationalMap(P({1, 1, 1}), P({1})));
    REQUIRE(w3.has_value());
    CHECK(w3->points[0].is_infinity());
}

TEST_CASE("find_nonrepelling_short_cycle: genuine 2-cycle through infinity") {
    // f(z) = 1/z^2: the only fixed point is 1 (repelling, lambda = -2) and
    // {0, inf} is a superattracting 2-cycle.
    RationalMap f(P({1}), P({0, 0, 1}));
    auto w = find_nonrepelling_short_cycle(f);
    REQUIRE(w.has_value());
    REQUIRE(w->points.size() == 2);
    CHECK(w->cls.verdict == MultVerdict::Attracting);
    CHECK(w->cls.lambda_bounds.first == 0);
    CHECK(compare_point_rat(w->points[0], Rat(0)) == 0);
    CHECK(w->points[1].is_infinity());
}

TEST_CASE("check_cor_odd: spec examples") {
    auto h = check_cor_odd(hermite(3));
    CHECK(h.verdict == Verdict::CertifiedInRd);
    CHECK(h.criterion == Criterion::CorOdd);
    REQUIRE(h.x0.has_value());
    // x0 = -sqrt(13/8), x1 = +sqrt(13/8)
    IntPoly w = P({-13, 0, 8});
    CHECK(is_root_of(*h.x0, w));
    CHECK(is_root_of(*h.x1, w));
    CHECK(compare_point_rat(*h.x0, Rat(0)) < 0);
    CHECK(compare_point_rat(*h.x1, Rat(0)) > 0);

    auto t = check_cor_odd(chebyshev(3));
    CHECK(t.verdict == Verdict::CertifiedInRd);
    CHECK(exact_value(*t.x0) == Rat(-1));
    CHECK(exact_value(*t.x1) == Rat(1));

    auto bad = check_cor_odd(RationalMap(P({0, 1, 0, 1}), P({1})));  // z^3+z
    CHECK(bad.verdict == Verdict::Inconclusive);
    CHECK(bad.note == "critical zeros not all real");

    CHECK_THROWS_AS(check_cor_odd(chebyshev(2)), std::invalid_argument);
    CHECK_THROWS_AS(check_cor_odd(RationalMap(P({-1, 0, 1}), P({0, 1}))),
                    std::invalid_argument);
}

TEST_CASE("check_cor_even: spec examples") {
    auto h = check_cor_even(hermite(4));
    CHECK(h.verdict == Verdict::CertifiedInRd);
    CHECK(h.criterion == Criterion::CorEven);
    REQUIRE(h.x0.has_value());
    // x0, x1 are the extreme fixed points near -+1.66327
    IntPoly F = fixed_point_data(hermite(4), 1).F;
    CHECK(is_root_of(*h.x0, F));
    CHECK(is_root_of(*h.x1, F));
    auto x0r = refine_interval(*h.x0, make_rat(Int(1), Int(100000)));
    auto x1r = refine_interval(*h.x1, make_rat(Int(1), Int(100000)));
    CHECK(compare_point_rat(x0r, make_rat(Int(-166328), Int(100000))) > 0);
    CHECK(compare_point_rat(x0r, make_rat(Int(-166326), Int(100000))) < 0);
    CHECK(compare_point_rat(x1r, make_rat(Int(166326), Int(100000))) > 0);
    CHECK(compare_point_rat(x1r, make_rat(Int(166328), Int(100000))) < 0);

    auto t = check_cor_even(chebyshev(2));
    CHECK(t.verdict == Verdict::CertifiedInRd);
    CHECK(exact_value(*t.x0) == Rat(-1));
    CHECK(exact_value(*t.x1) == Rat(1));

    auto bad = check_cor_even(RationalMap(P({1, 0, 1}), P({1})));  // z^2+1
    CHECK(bad.verdict == Verdict::Inconclusive);

    CHECK_THROWS_AS(check_cor_even(chebyshev(3)), std::invalid_argument);
}

TEST_CASE("certify_main: spec examples") {
    auto c1 = certify_main(chebyshev(2), CircleSet::segment(Rat(-1), Rat(1)));
    CHECK(c1.verdict == Verdict::CertifiedInRd);
    CHECK(c1.criterion == Criterion::ThmMain2);
    REQUIRE(c1.cycle.has_value());
    CHECK(c1.cycle->points[0].is_infinity());
    CHECK(c1.cycle->cls.lambda_bounds.first == 0);
    REQUIRE(c1.nonattracting_fixed_point.has_value());
    CHECK(compare_point_rat(c1.nonattracting_fixed_point->point, Rat(1)) == 0);

    auto c3 = certify_main(RationalMap(P({1, 0, 1}), P({1})),
                           CircleSet::segment(Rat(0), Rat(2)));
    CHECK(c3.verdict == Verdict::Inconclusive);
}

TEST_CASE("corollary evidence feeds certify_main") {
    for (auto f : {hermite(3), hermite(4), chebyshev(2), chebyshev(3)}) {
        Certificate cor = f.num().degree() % 2 ? check_cor_odd(f)
                                               : check_cor_even(f);
        REQUIRE(cor.verdict == Verdict::CertifiedInRd);
        auto main = certify_main(f, CircleSet::from_arcs({{*cor.x0, *cor.x1}}));
        CHECK(main.verdict == Verdict::CertifiedInRd);
    }
}

TEST_CASE("boundary witnesses and their perturbations") {
    // (z^2-1)/z sits on the boundary with lambda = +1 at infinity; scaling
    // by 1+eps turns infinity attracting, so the scaled map is certified IN
    // R_d (its F_2 stays real-rooted: the fixed points solve z^2 = c/(c-+1)).
    RationalMap g(P({-1, 0, 1}), P({0, 1}));
    CHECK(certify_rf(g).verdict == Verdict::BoundaryIndifferent);
    for (long den : {8L, 16L}) {
        IntPoly p = P({-1, 0, 1}) * Int(den + 1);
        IntPoly q = P({0, 1}) * Int(den);
        RationalMap fp(std::move(p), std::move(q));
        CHECK(is_real_fibered(fp));
        CHECK(certify_rf(fp).verdict == Verdict::CertifiedInRd);
        CHECK(scan_real_periodic(fp, 4).verdict == Verdict::Inconclusive);
    }

    // z/(z^2-1) sits on the boundary with lambda = -1 at the origin; here
    // scaling by 1+eps does push the map out: F_2 of the scaled map has the
    // factor z^2 + eps, so nonreal 2-periodic points appear at k = 2.
    RationalMap h(P({0, 1}), P({-1, 0, 1}));
    auto ch = certify_rf(h);
    CHECK(ch.verdict == Verdict::BoundaryIndifferent);
    REQUIRE(ch.cycle.has_value());
    // h'(0) = -1, so the reported multiplier of h^2 at 0 is +1
    CHECK(ch.cycle->cls.verdict == MultVerdict::IndifferentPlus);
    auto c0 = classify_multiplier(h, ch.cycle->points[0], 1);
    CHECK(c0.verdict == MultVerdict::IndifferentMinus);
    for (long den : {8L, 16L}) {
        IntPoly p = P({0, 1}) * Int(den + 1);
        IntPoly q = P({-1, 0, 1}) * Int(den);
        RationalMap fp(std::move(p), std::move(q));
        CHECK(is_real_fibered(fp));
        auto cert = certify_rf(fp);
        CHECK(cert.verdict == Verdict::CertifiedNotInRd);
        auto scan = scan_real_periodic(fp, 4);
        CHECK(scan.verdict == Verdict::CertifiedNotInRd);
        CHECK(*scan.first_nonreal_k == 2);
    }
}

TEST_CASE("theorem-1.4 consistency on interlacing maps") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        for (int d = 2; d <= 3; ++d) {
            RationalMap f = interlacing_random(d, seed);
            REQUIRE(is_real_fibered(f));
            auto cert = certify_rf(f);
            CHECK(cert.verdict == Verdict::CertifiedInRd);
            for (int k = 1; k <= 4; ++k)
                CHECK(fixed_point_data(f, k).all_real);
        }
}

TEST_CASE("at most one exactly-indifferent real fixed point (real fibered)") {
    std::vector<RationalMap> maps = {
        RationalMap(P({-1, 0, 2}), P({0, 1})),
        RationalMap(P({-1, 0, 1}), P({0, 1})),
    };
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        maps.push_back(interlacing_random(2, seed));
    for (const auto &f : maps) {
        REQUIRE(is_real_fibered(f));
        int indifferent = 0;
        for (const auto &root : fixed_point_data(f, 1).roots) {
            auto c = classify_multiplier_of_iterate(f, root, global_config());
            if (c.verdict == MultVerdict::IndifferentPlus ||
                c.verdict == MultVerdict::IndifferentMinus)
                ++indifferent;
        }
        if (f.num().degree() > f.den().degree()) {
            auto c = multiplier_at_infinity(f, 1);
            if (c.verdict == MultVerdict::IndifferentPlus ||
                c.verdict == MultVerdict::IndifferentMinus)
                ++indifferent;
        }
        CHECK(indifferent <= 1);
    }
}

TEST_CASE("soundness cross-check at small scale") {
    for (auto f : {chebyshev(2), chebyshev(3), hermite(3), hermite(4)}) {
        int K = global_config().derived_scan_K(f.degree());
        K = std::min(K, f.degree() == 2 ? 6 : 4);
        auto scan = scan_real_periodic(f, K);
        CHECK(scan.verdict == Verdict::Inconclusive);  // never refuted
        CHECK(scan.k_scanned == K);
    }
}
