#include "rpp/roots.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "rpp/config.hpp"
#include "rpp/modpoly.hpp"

namespace rpp {

namespace {

constexpr int kSturmMaxDegree = 32;

int sign_at_ext(const IntPoly &p, const ExtRat &x) {
    switch (x.kind) {
        case ExtRat::Kind::NegInf: return p.sign_at_neg_inf();
        case ExtRat::Kind::PosInf: return p.sign_at_pos_inf();
        default: return p.sign_at(x.value);
    }
}

bool ext_less(const ExtRat &a, const ExtRat &b) {
    if (a.kind == ExtRat::Kind::NegInf) return b.kind != ExtRat::Kind::NegInf;
    if (a.kind == ExtRat::Kind::PosInf) return false;
    if (b.kind == ExtRat::Kind::PosInf) return true;
    if (b.kind == ExtRat::Kind::NegInf) return false;
    return a.value < b.value;
}

int variations_at(const std::vector<IntPoly> &chain, const ExtRat &x) {
    int var = 0, prev = 0;
    for (const auto &p : chain) {
        int s = sign_at_ext(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

void require_squarefree(const IntPoly &a, const char *who) {
    if (a.degree() <= 1) return;
    if (certified_squarefree(a)) return;
    if (poly_gcd(a, a.derivative()).degree() > 0)
        throw std::invalid_argument(std::string(who) +
                                    ": input is not squarefree");
}

// ---------------------------------------------------------------------------
// Descartes helpers

int sign_variations(const std::vector<Int> &c) {
    int var = 0, prev = 0;
    for (const auto &v : c) {
        int s = sign(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// In-place Taylor shift z -> z + 1.
void taylor_shift1(std::vector<Int> &c) {
    const std::size_t n = c.size();
    if (n < 2) return;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
}

// Number of sign variations of (z+1)^n p(1/(z+1)): Descartes bound for the
// number of roots of p in the open interval (0, 1).
int descartes_var_01(const std::vector<Int> &c) {
    std::vector<Int> r(c.rbegin(), c.rend());
    taylor_shift1(r);
    return sign_variations(r);
}

// 2^n p(z/2): coefficient i picks up 2^(n-1-i) ... computed as shifts.
std::vector<Int> scale_half(const std::vector<Int> &c) {
    std::vector<Int> r = c;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        unsigned long e = static_cast<unsigned long>(n - 1 - i);
        if (e) mpz_mul_2exp(r[i].get_mpz_t(), r[i].get_mpz_t(), e);
    }
    return r;
}

struct Collector {
    std::vector<IsolatingInterval> out;
    std::shared_ptr<const IntPoly> witness;
    long nodes = 0;
    long node_cap = 0;
    bool any_exact = false;

    void tick() {
        if (++nodes > node_cap)
            throw BudgetError("root isolation: node budget exceeded");
    }
    void exact_root(Rat v) {
        any_exact = true;
        out.push_back(IsolatingInterval::exact(std::move(v), 1, witness));
    }
    void open_root(Rat lo, Rat hi) {
        out.push_back(
            IsolatingInterval::open(std::move(lo), std::move(hi), witness));
    }
};

// An open interval abutting an exact dyadic root has the witness vanishing
// at that endpoint. Shrinks the offending side past the endpoint root while
// keeping the unique interior root inside. May collapse to an exact point
// when a probe hits the interior root.
void fix_root_endpoints(IsolatingInterval &iv) {
    if (iv.kind != IsolatingInterval::Kind::Open) return;
    const IntPoly &w = *iv.witness;
    int slo = w.sign_at(iv.lo), shi = w.sign_at(iv.hi);
    if (slo != 0 && shi != 0) return;
    const IntPoly dw = w.derivative();
    // Signs of w just inside each endpoint.
    int in_lo = slo != 0 ? slo : dw.sign_at(iv.lo);
    int in_hi = shi != 0 ? shi : -dw.sign_at(iv.hi);
    if (slo == 0) {
        Rat step = (iv.hi - iv.lo) / 4;
        while (true) {
            Rat t = iv.lo + step;
            int st = w.sign_at(t);
            if (st == 0) {
                iv = IsolatingInterval::exact(t, iv.multiplicity, iv.witness);
                return;
            }
            if (st == in_lo) {
                iv.lo = t;
                break;
            }
            step /= 2;
        }
    }
    if (shi == 0) {
        Rat step = (iv.hi - iv.lo) / 4;
        while (true) {
            Rat t = iv.hi - step;
            int st = w.sign_at(t);
            if (st == 0) {
                iv = IsolatingInterval::exact(t, iv.multiplicity, iv.witness);
                return;
            }
            if (st == in_hi) {
                iv.hi = t;
                break;
            }
            step /= 2;
        }
    }
}

// Collins-Akritas recursion: roots of p in local (0,1), which maps to the
// global interval (lo, hi). Invariant: p(0) != 0.
void vca_rec(std::vector<Int> p, const Rat &lo, const Rat &hi, Collector &col) {
    col.tick();
    int v = descartes_var_01(p);
    if (v == 0) return;
    if (v == 1) {
        col.open_root(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    std::vector<Int> left = scale_half(p);
    p.clear();
    p.shrink_to_fit();
    std::vector<Int> right = left;
    taylor_shift1(right);
    if (!right.empty() && right.front() == 0) {
        col.exact_root(mid);
        right.erase(right.begin());
        while (!right.empty() && right.front() == 0)
            right.erase(right.begin());  // unreachable for squarefree input
    }
    vca_rec(std::move(left), lo, mid, col);
    vca_rec(std::move(right), mid, hi, col);
}

// Roots of squarefree s in (0, bound) via z -> bound * z; mirror = true
// isolates in (-bound, 0) instead.
void vca_side(const IntPoly &s, const Rat &bound, bool mirror, Collector &col) {
    std::vector<Int> c = s.coeffs();
    if (mirror)
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    // bound is a power of two: multiply coefficient i by bound^i exactly.
    Int num = bound.get_num(), den = bound.get_den();
    for (std::size_t i = 1; i < c.size(); ++i) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(i));
        c[i] *= f;
        if (den != 1) {
            mpz_pow_ui(f.get_mpz_t(), den.get_mpz_t(),
                       static_cast<unsigned long>(c.size() - 1 - i));
            c[i] *= f;  // keeps coefficients integral when bound < 1
        }
    }
    if (den != 1) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), den.get_mpz_t(),
                   static_cast<unsigned long>(c.size() - 1));
        c[0] *= f;
    }
    std::size_t first = col.out.size();
    vca_rec(std::move(c), Rat(0), Rat(1), col);
    for (std::size_t i = first; i < col.out.size(); ++i) {
        auto &iv = col.out[i];
        if (mirror) {
            Rat nlo = -iv.hi * bound, nhi = -iv.lo * bound;
            iv.lo = nlo;
            iv.hi = nhi;
            if (iv.kind == IsolatingInterval::Kind::Exact) iv.hi = iv.lo;
        } else {
            iv.lo *= bound;
            iv.hi *= bound;
        }
    }
}

std::vector<IsolatingInterval> vca_isolate(
    const std::shared_ptr<const IntPoly> &s) {
    Collector col;
    col.witness = s;
    col.node_cap = 4000 + 400L * std::max(1, s->degree());
    Rat bound = root_bound_pow2(*s);
    if (s->coeff(0) == 0) col.exact_root(Rat(0));
    IntPoly base = *s;
    if (base.coeff(0) == 0) {
        // squarefree: exactly one factor of z
        std::vector<Int> c(base.coeffs().begin() + 1, base.coeffs().end());
        base = IntPoly(std::move(c));
    }
    vca_side(base, bound, false, col);
    vca_side(base, bound, true, col);
    if (col.any_exact)
        for (auto &iv : col.out) fix_root_endpoints(iv);
    std::sort(col.out.begin(), col.out.end(),
              [](const IsolatingInterval &a, const IsolatingInterval &b) {
                  return a.lo + a.hi < b.lo + b.hi;
              });
    return col.out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Guess-driven sign-change certification.
//
// Root guesses (from any heuristic source; the iterate machinery supplies
// dynamics-based ones) are certified by exact integer signs at dyadic
// points between consecutive guesses: deg(s) sign changes prove that every
// root is real and isolated. Bad guesses only mean falling back.

std::optional<std::vector<IsolatingInterval>> isolate_from_real_guesses(
    const std::shared_ptr<const IntPoly> &sp, std::vector<Rat> guesses) {
    const IntPoly &s = *sp;
    const int m = s.degree();
    if (static_cast<int>(guesses.size()) != m) return std::nullopt;
    if (m == 0) return std::vector<IsolatingInterval>{};
    std::sort(guesses.begin(), guesses.end());

    Rat bound = root_bound_pow2(s);
    std::vector<Rat> grid;
    grid.reserve(guesses.size() + 1);
    grid.push_back(-bound);
    for (std::size_t i = 0; i + 1 < guesses.size(); ++i) {
        // a coarse dyadic strictly between the guesses keeps the exact
        // evaluations cheap; precision adapts to the local gap
        Rat gap = guesses[i + 1] - guesses[i];
        if (gap <= 0) return std::nullopt;
        long e = 24;
        while (pow2(-e) * 64 > gap) e += 8;
        Rat mid = (guesses[i] + guesses[i + 1]) / 2;
        Int scaled = mid.get_num() * Int(pow2(e).get_num()) / mid.get_den();
        grid.push_back(Rat(scaled) * pow2(-e));
    }
    grid.push_back(bound);

    std::vector<IsolatingInterval> out;
    long count = 0;
    // grid points with their exact signs; a zero hit is itself a root and
    // gets replaced by two nearby off-root points so bracketing continues.
    // The owner tag stops the flanking pair from re-counting its own root.
    struct Pt {
        Rat x;
        int sg;
        long owner;
    };
    std::vector<Pt> pts;
    pts.reserve(grid.size() + 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        int sg = s.sign_at(grid[i]);
        if (sg != 0) {
            pts.push_back({grid[i], sg, -1});
            continue;
        }
        long owner = static_cast<long>(i);
        out.push_back(IsolatingInterval::exact(grid[i], 1, sp));
        ++count;
        Rat gap = (i + 1 < grid.size() ? grid[i + 1] : grid[i - 1]) - grid[i];
        Rat delta = rat_abs(gap) / 1024;
        for (int side = -1; side <= 1; side += 2) {
            Rat d = delta;
            int sg2 = 0;
            for (int t = 0; t < 64 && sg2 == 0; ++t, d /= 2)
                sg2 = s.sign_at(grid[i] + side * d);
            if (sg2 != 0)
                pts.push_back({Rat(grid[i] + side * (d * 2)), sg2, owner});
        }
    }
    std::sort(pts.begin(), pts.end(),
              [](const Pt &a, const Pt &b) { return a.x < b.x; });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i].owner >= 0 && pts[i].owner == pts[i + 1].owner)
            continue;  // the exact root between them is already counted
        if (pts[i].sg != pts[i + 1].sg) {
            out.push_back(IsolatingInterval::open(pts[i].x, pts[i + 1].x, sp));
            ++count;
        }
    }
    if (count != m) return std::nullopt;
    for (auto &iv : out)
        if (iv.kind == IsolatingInterval::Kind::Open) fix_root_endpoints(iv);
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval &a, const IsolatingInterval &b) {
                  return a.lo + a.hi < b.lo + b.hi;
              });
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Sturm-count bisection isolation (the small-degree default).

void sturm_bisect(const std::vector<IntPoly> &chain, const IntPoly &s,
                  const Rat &lo, const Rat &hi, int count, Collector &col) {
    if (count == 0) return;
    col.tick();
    if (count == 1 && s.sign_at(lo) * s.sign_at(hi) < 0) {
        col.open_root(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    int left, right;
    if (s.sign_at(mid) == 0) {
        col.exact_root(mid);
        // half-open Sturm counts include roots sitting at the right end;
        // subtract the midpoint root and, for the right child, a root at hi
        left = variations_at(chain, ExtRat::finite(lo)) -
               variations_at(chain, ExtRat::finite(mid)) - 1;
        right = variations_at(chain, ExtRat::finite(mid)) -
                variations_at(chain, ExtRat::finite(hi)) -
                (s.sign_at(hi) == 0 ? 1 : 0);
    } else {
        left = variations_at(chain, ExtRat::finite(lo)) -
               variations_at(chain, ExtRat::finite(mid));
        right = count - left;
    }
    sturm_bisect(chain, s, lo, mid, left, col);
    sturm_bisect(chain, s, mid, hi, right, col);
}

std::vector<IsolatingInterval> sturm_isolate(
    const std::shared_ptr<const IntPoly> &sp) {
    const IntPoly &s = *sp;
    Collector col;
    col.witness = sp;
    col.node_cap = 4000 + 400L * std::max(1, s.degree());
    auto chain = sturm_chain(s);
    Rat bound = root_bound_pow2(s);
    int total = variations_at(chain, ExtRat::finite(-bound)) -
                variations_at(chain, ExtRat::finite(bound));
    sturm_bisect(chain, s, -bound, bound, total, col);
    std::sort(col.out.begin(), col.out.end(),
              [](const IsolatingInterval &a, const IsolatingInterval &b) {
                  return a.lo + a.hi < b.lo + b.hi;
              });
    return col.out;
}

}  // namespace

// ---------------------------------------------------------------------------

IsolatingInterval IsolatingInterval::exact(Rat v, int mult,
                                           std::shared_ptr<const IntPoly> w) {
    IsolatingInterval iv;
    iv.kind = Kind::Exact;
    iv.lo = v;
    iv.hi = std::move(v);
    iv.witness = std::move(w);
    iv.multiplicity = mult;
    return iv;
}

IsolatingInterval IsolatingInterval::open(Rat lo, Rat hi,
                                          std::shared_ptr<const IntPoly> w,
                                          int mult) {
    IsolatingInterval iv;
    iv.kind = Kind::Open;
    iv.lo = std::move(lo);
    iv.hi = std::move(hi);
    iv.witness = std::move(w);
    iv.multiplicity = mult;
    return iv;
}

IsolatingInterval IsolatingInterval::infinity(int mult) {
    IsolatingInterval iv;
    iv.kind = Kind::Infinity;
    iv.multiplicity = mult;
    return iv;
}

Rat IsolatingInterval::sample() const {
    if (kind == Kind::Infinity)
        throw std::invalid_argument("sample of the point at infinity");
    if (kind == Kind::Exact) return lo;
    return (lo + hi) / 2;
}

std::vector<IntPoly> sturm_chain(const IntPoly &a) {
    std::vector<IntPoly> chain;
    chain.push_back(a.primitive_part());
    if (a.degree() <= 0) return chain;
    chain.push_back(a.derivative().primitive_part());
    while (chain.back().degree() >= 0 && !chain.back().is_zero()) {
        const IntPoly &u = chain[chain.size() - 2];
        const IntPoly &v = chain.back();
        if (v.degree() == 0) break;
        IntPoly r = pseudo_rem_pos(u, v);
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

int sturm_count(const IntPoly &a, const ExtRat &lo, const ExtRat &hi) {
    if (a.is_zero())
        throw std::invalid_argument("sturm_count: zero polynomial");
    if (!ext_less(lo, hi))
        throw std::invalid_argument("sturm_count: empty range");
    require_squarefree(a, "sturm_count");
    auto chain = sturm_chain(a);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

int sturm_count_all(const IntPoly &a) {
    return sturm_count(a, ExtRat::neg_inf(), ExtRat::pos_inf());
}

Rat root_bound_pow2(const IntPoly &a) {
    if (a.degree() < 0)
        throw std::invalid_argument("root bound of zero polynomial");
    if (a.degree() == 0) return Rat(1);
    const long n = a.degree();
    const long lead_bits = static_cast<long>(bit_length(a.lead()));
    // Cauchy: 1 + max |a_i| / |a_n| < 2^(max bits(a_i) - bits(a_n) + 2).
    long max_bits = 0;
    for (int i = 0; i < n; ++i)
        max_bits = std::max(max_bits, static_cast<long>(bit_length(a.coeff(i))));
    long cauchy = max_bits - lead_bits + 2;
    // Fujiwara: 2 max_i |a_{n-i}/a_n|^(1/i) <= 2^(1 + max ceil(db_i / i)).
    long fuji = 1;
    for (int i = 1; i <= n; ++i) {
        long b = static_cast<long>(bit_length(a.coeff(static_cast<int>(n - i))));
        if (b == 0) continue;
        long db = b - lead_bits + 1;
        long e = (db <= 0) ? 0 : (db + i - 1) / i;
        fuji = std::max(fuji, 1 + e);
    }
    long e = std::max(1L, std::min(cauchy, fuji));
    return pow2(e);
}

IntPoly squarefree_part_fast(const IntPoly &a) {
    if (a.is_zero())
        throw std::invalid_argument("squarefree part of zero polynomial");
    if (a.degree() <= 1 || certified_squarefree(a))
        return a.primitive_normalized();
    return squarefree_part(a);
}

std::vector<IsolatingInterval> isolate_squarefree_roots(const IntPoly &s) {
    if (s.is_zero())
        throw std::invalid_argument("isolate: zero polynomial");
    auto sp = std::make_shared<const IntPoly>(s.primitive_normalized());
    if (sp->degree() <= 0) return {};
    if (sp->degree() <= kSturmMaxDegree) return sturm_isolate(sp);
    return vca_isolate(sp);
}

int count_real_roots_squarefree(const IntPoly &s) {
    if (s.degree() <= 0) return 0;
    if (s.degree() == 1) return 1;
    if (s.degree() <= kSturmMaxDegree) return sturm_count_all(s);
    return static_cast<int>(isolate_squarefree_roots(s).size());
}

bool all_roots_real(const IntPoly &a) {
    if (a.is_zero())
        throw std::invalid_argument("all_roots_real: zero polynomial");
    if (a.degree() <= 1) return true;
    IntPoly s = squarefree_part_fast(a);
    const int m = s.degree();
    if (m <= 1) return true;
    // Descartes over the whole line is exact when every root is real, so a
    // deficit certifies a nonreal pair without isolating anything.
    {
        std::vector<Int> c = s.coeffs();
        int zero_root = (c[0] == 0) ? 1 : 0;
        int vpos = sign_variations(c);
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        int vneg = sign_variations(c);
        if (vpos + vneg + zero_root < m) return false;
    }
    return count_real_roots_squarefree(s) == m;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly &a) {
    if (a.is_zero())
        throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (a.degree() == 0) return {};
    std::vector<std::pair<IntPoly, int>> factors;
    if (a.degree() == 1 || certified_squarefree(a))
        factors.emplace_back(a.primitive_normalized(), 1);
    else
        factors = squarefree_decomposition(a);

    std::vector<IsolatingInterval> all;
    for (const auto &[factor, mult] : factors) {
        auto ivs = isolate_squarefree_roots(factor);
        for (auto &iv : ivs) {
            iv.multiplicity = mult;
            all.push_back(std::move(iv));
        }
    }
    if (factors.size() > 1) {
        std::sort(all.begin(), all.end(),
                  [](const IsolatingInterval &x, const IsolatingInterval &y) {
                      return compare_points(x, y) < 0;
                  });
        // intervals across coprime factors isolate distinct roots
        make_pairwise_disjoint(all);
    }
    return all;
}

Rat simplest_rational_in(const Rat &a, const Rat &b) {
    if (sign(a) <= 0 && sign(b) >= 0) return Rat(0);
    if (sign(b) < 0) return -simplest_rational_in(-b, -a);
    // 0 < a <= b: Stern-Brocot descent for the smallest-denominator value
    Rat lo = a, hi = b;
    Rat whole(0);
    std::vector<Rat> cf;
    while (true) {
        Int ca, fb;
        mpz_cdiv_q(ca.get_mpz_t(), lo.get_num().get_mpz_t(),
                   lo.get_den().get_mpz_t());
        mpz_fdiv_q(fb.get_mpz_t(), hi.get_num().get_mpz_t(),
                   hi.get_den().get_mpz_t());
        if (Rat(ca) <= hi) {
            (void)fb;
            cf.push_back(Rat(ca));
            break;
        }
        Int ip;
        mpz_fdiv_q(ip.get_mpz_t(), lo.get_num().get_mpz_t(),
                   lo.get_den().get_mpz_t());
        cf.push_back(Rat(ip));
        Rat nlo = Rat(1) / (hi - Rat(ip));
        Rat nhi = Rat(1) / (lo - Rat(ip));
        lo = nlo;
        hi = nhi;
    }
    Rat v = cf.back();
    for (std::size_t i = cf.size() - 1; i-- > 0;) v = cf[i] + Rat(1) / v;
    whole = v;
    return whole;
}

IsolatingInterval snap_to_rational(const IsolatingInterval &iv) {
    if (iv.kind != IsolatingInterval::Kind::Open || !iv.witness) return iv;
    IsolatingInterval r = iv;
    if (r.width() > make_rat(Int(1), Int(4)))
        r = refine_interval(r, make_rat(Int(1), Int(4)));
    if (r.kind != IsolatingInterval::Kind::Open) return r;
    Rat cand = simplest_rational_in(r.lo, r.hi);
    if (r.witness->sign_at(cand) == 0)
        return IsolatingInterval::exact(cand, r.multiplicity, r.witness);
    return r;
}

void make_pairwise_disjoint(std::vector<IsolatingInterval> &ivs) {
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
        while (!(ivs[i].hi <= ivs[i + 1].lo)) {
            Rat w = ivs[i].width() / 2;
            if (w > 0) ivs[i] = refine_interval(ivs[i], w);
            Rat w2 = ivs[i + 1].width() / 2;
            if (w2 > 0) ivs[i + 1] = refine_interval(ivs[i + 1], w2);
            if (w == 0 && w2 == 0) break;  // two exact points, distinct
        }
    }
}

IsolatingInterval refine_interval(const IsolatingInterval &iv,
                                  const Rat &width_bound) {
    if (width_bound <= 0)
        throw std::invalid_argument("refine_interval: width bound must be > 0");
    if (iv.kind != IsolatingInterval::Kind::Open) return iv;
    if (!iv.witness) throw std::invalid_argument("refine_interval: no witness");
    const IntPoly &w = *iv.witness;
    Rat lo = iv.lo, hi = iv.hi;
    int slo = w.sign_at(lo);
    if (slo == 0 || slo * w.sign_at(hi) >= 0)
        throw std::invalid_argument("refine_interval: invalid interval");
    while (hi - lo > width_bound) {
        Rat mid = (lo + hi) / 2;
        int sm = w.sign_at(mid);
        if (sm == 0) {
            IsolatingInterval r = IsolatingInterval::exact(mid, iv.multiplicity,
                                                           iv.witness);
            return r;
        }
        if (sm == slo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    IsolatingInterval r = iv;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    return r;
}

int eval_sign(const IntPoly &a, const Rat &x) { return a.sign_at(x); }

bool is_root_of(const IsolatingInterval &iv, const IntPoly &g) {
    if (g.is_zero()) return true;
    if (iv.kind == IsolatingInterval::Kind::Infinity)
        throw std::invalid_argument("is_root_of: point at infinity");
    if (iv.kind == IsolatingInterval::Kind::Exact)
        return g.sign_at(iv.lo) == 0;
    if (g.degree() == 0) return false;
    IntPoly d = poly_gcd(*iv.witness, g);
    if (d.degree() == 0) return false;
    // d divides the squarefree witness, so it has at most one root in the
    // interval and that root is simple: a sign change decides.
    return d.sign_at(iv.lo) * d.sign_at(iv.hi) < 0;
}

std::optional<Rat> exact_value(const IsolatingInterval &iv) {
    if (iv.kind == IsolatingInterval::Kind::Exact) return iv.lo;
    return std::nullopt;
}

int compare_point_rat(const IsolatingInterval &a, const Rat &x) {
    switch (a.kind) {
        case IsolatingInterval::Kind::Infinity: return 1;
        case IsolatingInterval::Kind::Exact:
            return a.lo < x ? -1 : (a.lo > x ? 1 : 0);
        default: break;
    }
    if (x <= a.lo) return 1;
    if (x >= a.hi) return -1;
    const IntPoly &w = *a.witness;
    int sx = w.sign_at(x);
    if (sx == 0) return 0;
    return (w.sign_at(a.lo) * sx < 0) ? -1 : 1;
}

int compare_points(const IsolatingInterval &a, const IsolatingInterval &b) {
    using K = IsolatingInterval::Kind;
    if (a.kind == K::Infinity || b.kind == K::Infinity) {
        if (a.kind == b.kind) return 0;
        return a.kind == K::Infinity ? 1 : -1;
    }
    if (a.kind == K::Exact) return -compare_point_rat(b, a.lo);
    if (b.kind == K::Exact) return compare_point_rat(a, b.lo);

    if (a.witness && b.witness) {
        Rat ilo = std::max(a.lo, b.lo), ihi = std::min(a.hi, b.hi);
        if (ilo < ihi) {
            IntPoly g = poly_gcd(*a.witness, *b.witness);
            if (g.degree() > 0 && g.sign_at(ilo) * g.sign_at(ihi) < 0)
                return 0;  // both isolate the shared root
        }
    }
    IsolatingInterval x = a, y = b;
    while (true) {
        if (x.hi <= y.lo) return -1;
        if (y.hi <= x.lo) return 1;
        if (x.is_exact() && y.is_exact())
            return x.lo < y.lo ? -1 : (x.lo > y.lo ? 1 : 0);
        if (x.is_exact()) return -compare_point_rat(y, x.lo);
        if (y.is_exact()) return compare_point_rat(x, y.lo);
        x = refine_interval(x, x.width() / 2);
        y = refine_interval(y, y.width() / 2);
    }
}

}  // namespace rpp
