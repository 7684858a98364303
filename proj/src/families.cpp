#include "rpp/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rpp {

namespace {

// product of (den z - num) over the given rational roots; clearing is the
// product of the denominators, so poly = clearing * prod (z - r_i)
struct ClearedPoly {
    IntPoly poly;
    Int clearing{1};
};

ClearedPoly poly_from_roots(const std::vector<Rat> &roots) {
    ClearedPoly out;
    out.poly = IntPoly::constant(Int(1));
    for (const auto &r : roots) {
        std::vector<Int> lin = {-r.get_num(), r.get_den()};
        out.poly = out.poly * IntPoly(std::move(lin));
        out.clearing *= r.get_den();
    }
    return out;
}

}  // namespace

IntPoly chebyshev_poly(int d) {
    if (d < 0) throw std::invalid_argument("chebyshev: d must be >= 0");
    IntPoly t0({1}), t1({0, 1});
    if (d == 0) return t0;
    for (int i = 1; i < d; ++i) {
        IntPoly t2 = IntPoly({0, 2}) * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

RationalMap chebyshev(int d) {
    if (d < 1) throw std::invalid_argument("chebyshev: d must be >= 1");
    return RationalMap(chebyshev_poly(d), IntPoly({1}));
}

IntPoly hermite_poly(int d) {
    if (d < 0) throw std::invalid_argument("hermite: d must be >= 0");
    IntPoly h0({1}), h1({0, 2});
    if (d == 0) return h0;
    for (int i = 1; i < d; ++i) {
        IntPoly h2 = IntPoly({0, 2}) * h1 - h0 * Int(2 * i);
        h0 = std::move(h1);
        h1 = std::move(h2);
    }
    return h1;
}

RationalMap hermite(int d) {
    if (d < 1) throw std::invalid_argument("hermite: d must be >= 1");
    return RationalMap(hermite_poly(d), IntPoly({1}));
}

RationalMap fatou_form(const Rat &c, const std::vector<Rat> &a,
                       const std::vector<Rat> &b) {
    if (c < 0) throw std::invalid_argument("fatou_form: c must be >= 0");
    if (a.size() != b.size())
        throw std::invalid_argument("fatou_form: a and b sizes differ");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] <= 0) throw std::invalid_argument("fatou_form: a_i must be > 0");
        if (b[i] < 0) throw std::invalid_argument("fatou_form: b_i must be >= 0");
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[i] == b[j])
                throw std::invalid_argument("fatou_form: repeated b_i");
    }
    // common denominator D for c and all a_i, b_i keeps everything integral
    Int D = c.get_den();
    for (const auto &x : a) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto &x : b) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.get_den().get_mpz_t());
    auto as_int = [&D](const Rat &x) { return Int(x.get_num() * (D / x.get_den())); };

    // inner = c prod(z - b_i) - sum_i a_i prod_{j != i} (z - b_j), scaled by D
    const std::size_t m = b.size();
    std::vector<IntPoly> lin(m);
    for (std::size_t i = 0; i < m; ++i) {
        // D z - D b_i, kept over the common denominator
        lin[i] = IntPoly(std::vector<Int>{-as_int(b[i]), D});
    }
    IntPoly prod_all = IntPoly::constant(Int(1));
    for (const auto &l : lin) prod_all = prod_all * l;
    IntPoly inner = prod_all * as_int(c);
    for (std::size_t i = 0; i < m; ++i) {
        IntPoly part = IntPoly::constant(as_int(a[i]) * D);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) part = part * lin[j];
        inner = inner - part;
    }
    // inner / (D * prod_all) is c - sum a_i/(z - b_i) exactly, so
    // f = z inner^2 / (D^2 prod_all^2).
    IntPoly num = (inner * inner).shifted_up(1);
    IntPoly den = prod_all * prod_all * (D * D);
    return RationalMap(std::move(num), std::move(den));
}

RationalMap perturbed_cheb2(const Rat &eps) {
    // (2 - eps) z^2 + (eps - 1) over the denominator of eps
    Int n = eps.get_num(), d = eps.get_den();
    std::vector<Int> pc = {n - d, Int(0), 2 * d - n};
    return RationalMap(IntPoly(std::move(pc)), IntPoly::constant(d));
}

RationalMap interlacing_random(int d, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("interlacing_random: d must be >= 2");
    SplitMix64 rng(seed);
    // 2d-1 distinct rationals with denominator 32 in [-10, 10]
    std::set<long> picked;
    while (static_cast<int>(picked.size()) < 2 * d - 1)
        picked.insert(rng.next_in(-320, 320));
    std::vector<Rat> pts;
    for (long v : picked) pts.push_back(make_rat(Int(v), Int(32)));
    std::vector<Rat> proots, qroots;
    for (std::size_t i = 0; i < pts.size(); ++i)
        (i % 2 == 0 ? proots : qroots).push_back(pts[i]);
    Int lead(rng.next_in(2, 9));
    ClearedPoly p = poly_from_roots(proots);
    ClearedPoly q = poly_from_roots(qroots);
    // cross-multiply the clearing constants: the map is then exactly
    // lead * prod(z - r_odd) / prod(z - r_even), lc ratio = lead > 1
    return RationalMap(p.poly * (lead * q.clearing), q.poly * p.clearing);
}

}  // namespace rpp
