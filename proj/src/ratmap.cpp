#include "rpp/ratmap.hpp"

#include <array>
#include <stdexcept>

#include "rpp/interval.hpp"
#include "rpp/modpoly.hpp"

namespace rpp {

namespace {

// Simultaneous homogeneous composition: with outer = (p, q) of degree d and
// inner = (P, Q), returns (sum p_i P^i Q^(d-i), sum q_i P^i Q^(d-i)).
std::pair<IntPoly, IntPoly> compose_pair(const IntPoly &p, const IntPoly &q,
                                         int d, const IntPoly &P,
                                         const IntPoly &Q) {
    IntPoly a = IntPoly::constant(p.coeff(d));
    IntPoly b = IntPoly::constant(q.coeff(d));
    IntPoly qpow = IntPoly::constant(Int(1));
    for (int i = d - 1; i >= 0; --i) {
        qpow = qpow * Q;
        a = a * P;
        if (p.coeff(i) != 0) a = a + qpow * p.coeff(i);
        b = b * P;
        if (q.coeff(i) != 0) b = b + qpow * q.coeff(i);
    }
    return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// Floating-point guesses for the real fixed points of f^k.
//
// Evaluating the iterate pointwise (k small-map applications in doubles)
// sidesteps the catastrophic cancellation of Horner on the iterate's huge
// monomial coefficients, and the magnitude of g(x) = f^k(x) - x is honest:
// astronomically large off the dynamical core, order-one near the periodic
// points. A value-guided bisection therefore finds the sign-change brackets
// quickly when all of them are real. Pure heuristics; the caller certifies.

struct FpMap {
    std::vector<double> p, q;

    explicit FpMap(const RationalMap &f) {
        for (const auto &c : f.num().coeffs()) p.push_back(c.get_d());
        for (const auto &c : f.den().coeffs()) q.push_back(c.get_d());
    }
    static double horner(const std::vector<double> &c, double x) {
        double v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    }
    // f^k(x) - x; infinities propagate harmlessly
    double g(double x, int k) const {
        double w = x;
        for (int i = 0; i < k; ++i) {
            if (!std::isfinite(w)) return w;
            double num = horner(p, w), den = horner(q, w);
            w = num / den;
        }
        return w - x;
    }
};

std::vector<Rat> fp_periodic_guesses(const RationalMap &f, int k, int m,
                                     const Rat &bound) {
    FpMap fp(f);
    double b = std::min(bound.get_d(), 1e280);
    auto sgn = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    auto mag = [](double v) {  // ~log2 |v|, saturated
        if (v == 0) return -20000;
        if (!std::isfinite(v)) return 20000;
        int e;
        std::frexp(v, &e);
        return e;
    };
    struct Node {
        double lo, hi;
        int slo, shi;
        int mlo, mhi;
        long depth;
        long prio;
        bool operator<(const Node &o) const {
            if (prio != o.prio) return prio > o.prio;
            return lo > o.lo;
        }
    };
    auto mk = [&](double lo, double hi, int slo, int shi, int mlo, int mhi,
                  long depth) {
        Node n{lo, hi, slo, shi, mlo, mhi, depth, 0};
        n.prio = std::min(mlo, mhi) + 2 * depth;
        if (slo != shi) n.prio += 1L << 30;  // already holds a root
        return n;
    };
    double glo = fp.g(-b, k), ghi = fp.g(b, k);
    std::priority_queue<Node> queue;
    queue.push(mk(-b, b, sgn(glo), sgn(ghi), mag(glo), mag(ghi), 0));
    std::vector<std::pair<double, double>> brackets;
    long budget = 50000 + 384L * m;
    long found = sgn(glo) != sgn(ghi) ? 1 : 0;
    while (!queue.empty() && found < m && budget-- > 0) {
        Node n = queue.top();
        queue.pop();
        double mid = n.lo + (n.hi - n.lo) / 2;
        if (!(n.lo < mid && mid < n.hi)) continue;  // double resolution floor
        double gm = fp.g(mid, k);
        int sm = sgn(gm), mm = mag(gm);
        if (n.slo != n.shi) --found;
        if (sm == 0) sm = 1;  // perturb: exact fp zeros are vanishingly rare
        if (n.slo != sm) ++found;
        queue.push(mk(n.lo, mid, n.slo, sm, n.mlo, mm, n.depth + 1));
        if (sm != n.shi) ++found;
        queue.push(mk(mid, n.hi, sm, n.shi, mm, n.mhi, n.depth + 1));
    }
    std::vector<Rat> out;
    if (found < m) return out;
    while (!queue.empty()) {
        const Node &n = queue.top();
        if (n.slo != n.shi) brackets.emplace_back(n.lo, n.hi);
        queue.pop();
    }
    out.reserve(brackets.size());
    for (auto &[lo, hi] : brackets) {
        // polish by fp bisection; doubles are dyadic so Rat(v) is exact
        double a = lo, c = hi;
        int sa = sgn(fp.g(a, k));
        for (int it = 0; it < 40 && c - a > 0; ++it) {
            double mid = a + (c - a) / 2;
            if (!(a < mid && mid < c)) break;
            double gm = fp.g(mid, k);
            if (sgn(gm) == sa)
                a = mid;
            else
                c = mid;
        }
        out.emplace_back(Rat(a) + (Rat(c) - Rat(a)) / 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_budget(const IntPoly &a, const IntPoly &b, const RunConfig &cfg) {
    int deg = std::max(a.degree(), b.degree());
    if (deg > cfg.max_iterate_degree)
        throw BudgetError("iterate: degree " + std::to_string(deg) +
                          " exceeds max_iterate_degree");
    std::size_t bits = std::max(a.max_coeff_bits(), b.max_coeff_bits());
    if (bits > static_cast<std::size_t>(cfg.max_coeff_bits))
        throw BudgetError("iterate: coefficients exceed max_coeff_bits");
}

// Scale (a, b, c, e) to integers with the same ratio.
std::array<Int, 4> clear_moebius(const Rat &a, const Rat &b, const Rat &c,
                                 const Rat &e) {
    Int l = a.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    auto scaled = [&l](const Rat &x) {
        Int r = x.get_num() * (l / x.get_den());
        return r;
    };
    return {scaled(a), scaled(b), scaled(c), scaled(e)};
}

}  // namespace

RationalMap::RationalMap(IntPoly p, IntPoly q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.is_zero() && q_.is_zero())
        throw std::invalid_argument("undefined map: p and q both zero");
    if (!p_.is_zero() && !q_.is_zero() && !certified_coprime(p_, q_)) {
        IntPoly g = poly_gcd(p_, q_);
        if (g.degree() > 0) {
            p_ = *p_.divided_exactly_by(g);
            q_ = *q_.divided_exactly_by(g);
        }
    }
    auto pair = pair_primitive(std::move(p_), std::move(q_));
    p_ = std::move(pair.num);
    q_ = std::move(pair.den);
    const Int &lead = q_.is_zero() ? p_.lead() : q_.lead();
    if (sign(lead) < 0) {
        p_ = -p_;
        q_ = -q_;
    }
    degree_ = std::max(p_.degree(), q_.degree());
    if (degree_ < 0) degree_ = 0;
}

ProjPoint RationalMap::eval(const ProjPoint &x) const {
    if (x.at_infinity) {
        if (p_.degree() > q_.degree()) return ProjPoint::infinity();
        if (p_.degree() < q_.degree()) return ProjPoint::finite(Rat(0));
        return ProjPoint::finite(make_rat(p_.lead(), q_.lead()));
    }
    if (q_.is_zero()) return ProjPoint::infinity();
    Rat qa = q_.eval(x.value);
    if (qa == 0) return ProjPoint::infinity();
    return ProjPoint::finite(Rat(p_.eval(x.value) / qa));
}

RationalMap RationalMap::derivative() const {
    IntPoly num = p_.derivative() * q_ - p_ * q_.derivative();
    IntPoly den = q_ * q_;
    if (den.is_zero()) den = IntPoly::constant(Int(1));  // constant-infinity map
    return RationalMap(std::move(num), std::move(den));
}

RationalMap iterate_map(const RationalMap &f, int k, const RunConfig &cfg) {
    if (k < 1) throw std::invalid_argument("iterate: k must be >= 1");
    // degree budget up front, before any composition work
    long long dk = 1;
    for (int i = 0; i < k && f.degree() >= 2; ++i) {
        dk *= f.degree();
        if (dk > cfg.max_iterate_degree)
            throw BudgetError("iterate: degree budget exceeded at k=" +
                              std::to_string(i + 1));
    }
    RationalMap g = f;
    long long want = f.degree();
    for (int step = 1; step < k; ++step) {
        auto [num, den] =
            compose_pair(f.num(), f.den(), f.degree(), g.num(), g.den());
        check_budget(num, den, cfg);
        RationalMap next(std::move(num), std::move(den));
        want *= f.degree();
        // coprime inputs compose to coprime pairs, so the degree law is exact
        if (f.degree() >= 1 && next.degree() != want)
            throw std::logic_error("iterate: degree law violated");
        g = std::move(next);
    }
    return g;
}

IntPoly fixed_point_poly_raw(const RationalMap &f) {
    return f.num() - f.den().shifted_up(1);
}

FixedPointData fixed_point_data(const RationalMap &f, int k,
                                const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument("fixed_point_data: degree must be >= 2");
    if (k < 1) throw std::invalid_argument("fixed_point_data: k must be >= 1");
    RationalMap g = iterate_map(f, k, cfg);
    IntPoly raw = fixed_point_poly_raw(g);
    if (raw.is_zero()) throw std::domain_error("map is the identity");
    FixedPointData out;
    out.k = k;
    out.F = raw.primitive_normalized();
    long dk = 1;
    for (int i = 0; i < k; ++i) dk *= f.degree();
    out.infinity_multiplicity = static_cast<int>(dk + 1 - out.F.degree());
    out.roots = isolate_real_roots(out.F);
    if (out.F.degree() <= 64)
        for (auto &r : out.roots) r = snap_to_rational(r);
    int distinct_real = static_cast<int>(out.roots.size());
    out.all_real = (distinct_real == squarefree_part_fast(out.F).degree());
    return out;
}

const char *verdict_name(MultVerdict v) {
    switch (v) {
        case MultVerdict::Attracting: return "attracting";
        case MultVerdict::Repelling: return "repelling";
        case MultVerdict::IndifferentPlus: return "indifferent_plus";
        case MultVerdict::IndifferentMinus: return "indifferent_minus";
    }
    return "?";
}

MultiplierClass classify_multiplier_of_iterate(const RationalMap &g,
                                               const IsolatingInterval &root,
                                               const RunConfig &cfg) {
    if (root.kind == IsolatingInterval::Kind::Infinity)
        throw std::invalid_argument(
            "classify_multiplier: use multiplier_at_infinity for the point at "
            "infinity");
    IntPoly F = fixed_point_poly_raw(g);
    if (!is_root_of(root, F))
        throw std::invalid_argument(
            "classify_multiplier: point is not a fixed point of the iterate");

    // lambda = +1  <=>  multiple root of F
    if (is_root_of(root, F.derivative()))
        return {MultVerdict::IndifferentPlus, {Rat(1), Rat(1)}};

    // derivative of g as a rational function; den(z0) != 0 by coprimality
    IntPoly dnum = g.num().derivative() * g.den() - g.num() * g.den().derivative();
    IntPoly dden = g.den() * g.den();

    // lambda = 0 exactly: z0 is a critical point
    if (is_root_of(root, dnum))
        return {MultVerdict::Attracting, {Rat(0), Rat(0)}};

    if (auto v = exact_value(root)) {
        Rat lam = dnum.eval(*v) / dden.eval(*v);
        if (lam == -1) return {MultVerdict::IndifferentMinus, {lam, lam}};
        if (rat_abs(lam) < 1) return {MultVerdict::Attracting, {lam, lam}};
        return {MultVerdict::Repelling, {lam, lam}};
    }

    IsolatingInterval iv = root;
    bool minus_one_ruled_out = false;
    for (int depth = 0; depth < cfg.refine_depth; ++depth) {
        RatInterval x{iv.lo, iv.hi};
        RatInterval den = eval_interval(dden, x);
        if (!den.contains_zero()) {
            RatInterval lam = eval_interval(dnum, x) / den;
            if (lam.hi < -1 || lam.lo > 1)
                return {MultVerdict::Repelling, {lam.lo, lam.hi}};
            if (lam.lo > -1 && lam.hi < 1)
                return {MultVerdict::Attracting, {lam.lo, lam.hi}};
            // enclosure straddles -1 or 1; +1 was excluded exactly, so decide
            // -1 symbolically once, then keep refining
            if (!minus_one_ruled_out && lam.contains(Rat(-1))) {
                RationalMap g2 = iterate_map(g, 2, cfg);
                IntPoly F2 = fixed_point_poly_raw(g2);
                if (is_root_of(iv, F2.derivative()))
                    return {MultVerdict::IndifferentMinus, {Rat(-1), Rat(-1)}};
                minus_one_ruled_out = true;
            }
        }
        iv = refine_interval(iv, iv.width() / 2);
        if (auto v = exact_value(iv)) {
            Rat lam = dnum.eval(*v) / dden.eval(*v);
            if (lam == -1) return {MultVerdict::IndifferentMinus, {lam, lam}};
            if (rat_abs(lam) < 1) return {MultVerdict::Attracting, {lam, lam}};
            return {MultVerdict::Repelling, {lam, lam}};
        }
    }
    throw BudgetError("classify_multiplier: refinement depth exceeded");
}

MultiplierClass classify_multiplier(const RationalMap &f,
                                    const IsolatingInterval &cycle_root, int k,
                                    const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument("classify_multiplier: degree must be >= 2");
    return classify_multiplier_of_iterate(iterate_map(f, k, cfg), cycle_root,
                                          cfg);
}

MultiplierClass multiplier_at_infinity(const RationalMap &f, int k,
                                       const RunConfig &cfg) {
    RationalMap g = iterate_map(f, k, cfg);
    int dp = g.num().degree(), dq = g.den().degree();
    if (dp <= dq)
        throw std::invalid_argument(
            "multiplier_at_infinity: infinity is not a fixed point");
    if (dp >= dq + 2) return {MultVerdict::Attracting, {Rat(0), Rat(0)}};
    Rat lam = make_rat(g.den().lead(), g.num().lead());
    if (lam == 1) return {MultVerdict::IndifferentPlus, {lam, lam}};
    if (lam == -1) return {MultVerdict::IndifferentMinus, {lam, lam}};
    if (rat_abs(lam) < 1) return {MultVerdict::Attracting, {lam, lam}};
    return {MultVerdict::Repelling, {lam, lam}};
}

RationalMap conjugate(const RationalMap &f, const Rat &a, const Rat &b,
                      const Rat &c, const Rat &e) {
    if (a * e - b * c == 0)
        throw std::invalid_argument("conjugate: singular transform");
    auto m = clear_moebius(a, b, c, e);
    // phi^{-1}(w) = (e w - b) / (-c w + a)
    std::vector<Int> uc = {-m[1], m[3]};
    std::vector<Int> vc = {m[0], -m[2]};
    IntPoly U{std::move(uc)}, V{std::move(vc)};
    int d = f.degree();
    auto [A, B] = compose_pair(f.num(), f.den(), d, U, V);
    // phi o (A/B)
    IntPoly num = A * m[0] + B * m[1];
    IntPoly den = A * m[2] + B * m[3];
    RationalMap out(std::move(num), std::move(den));
    if (out.degree() != f.degree())
        throw std::logic_error("conjugate: degree not preserved");
    return out;
}

ProjPoint moebius_apply(const Rat &a, const Rat &b, const Rat &c, const Rat &e,
                        const ProjPoint &x) {
    if (x.at_infinity) {
        if (c == 0) return ProjPoint::infinity();
        return ProjPoint::finite(Rat(a / c));
    }
    Rat den = c * x.value + e;
    if (den == 0) return ProjPoint::infinity();
    return ProjPoint::finite(Rat((a * x.value + b) / den));
}

}  // namespace rpp
