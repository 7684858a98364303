#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rpp/intpoly.hpp"

namespace rpp {

/// Endpoint for root-counting ranges: finite rational or +-infinity.
struct ExtRat {
    enum class Kind { NegInf, Finite, PosInf } kind = Kind::Finite;
    Rat value;

    static ExtRat neg_inf() { return {Kind::NegInf, Rat(0)}; }
    static ExtRat pos_inf() { return {Kind::PosInf, Rat(0)}; }
    static ExtRat finite(Rat v) { return {Kind::Finite, std::move(v)}; }
};

/// A certified real algebraic point: either an exact rational, an open
/// rational-endpoint interval holding exactly one real root of a squarefree
/// witness polynomial, or the point at infinity.
///
/// Invariants for Kind::Open: lo < hi, witness(lo) != 0 != witness(hi), and
/// witness has exactly one real root in (lo, hi).
struct IsolatingInterval {
    enum class Kind { Open, Exact, Infinity };

    Kind kind = Kind::Exact;
    Rat lo, hi;
    std::shared_ptr<const IntPoly> witness;  // null for Exact-rational and Infinity
    int multiplicity = 1;

    static IsolatingInterval exact(Rat v, int mult = 1,
                                   std::shared_ptr<const IntPoly> w = nullptr);
    static IsolatingInterval open(Rat lo, Rat hi,
                                  std::shared_ptr<const IntPoly> w,
                                  int mult = 1);
    static IsolatingInterval infinity(int mult = 1);

    bool is_infinity() const { return kind == Kind::Infinity; }
    bool is_exact() const { return kind == Kind::Exact; }
    Rat width() const { return kind == Kind::Open ? Rat(hi - lo) : Rat(0); }
    /// Any rational in [lo, hi]; the exact value for Kind::Exact.
    Rat sample() const;
};

/// Sturm chain of a squarefree polynomial (primitive pseudo-remainders).
std::vector<IntPoly> sturm_chain(const IntPoly &a);

/// Number of distinct real roots of squarefree `a` in (lo, hi]. Errors on
/// zero, non-squarefree input, or lo >= hi.
int sturm_count(const IntPoly &a, const ExtRat &lo, const ExtRat &hi);
int sturm_count_all(const IntPoly &a);

/// Power-of-two upper bound on the absolute value of every complex root.
/// Minimum of Cauchy and Fujiwara style bounds, computed from bit lengths.
Rat root_bound_pow2(const IntPoly &a);

/// Isolating intervals for all distinct real roots of `a`, sorted by
/// position, pairwise disjoint, tagged with multiplicities in `a`.
/// Errors on the zero polynomial.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly &a);

/// Same for squarefree `s` only (all multiplicities 1).
std::vector<IsolatingInterval> isolate_squarefree_roots(const IntPoly &s);

/// Number of distinct real roots of squarefree `s` over the whole line.
/// Dispatches between the Sturm count and the isolation engines.
int count_real_roots_squarefree(const IntPoly &s);

/// True iff every complex root of `a` is real. Errors on zero input.
bool all_roots_real(const IntPoly &a);

/// Squarefree part computed through cheap modular certificates when
/// possible, exact gcd otherwise.
IntPoly squarefree_part_fast(const IntPoly &a);

/// Isolating interval for the same root with width <= width_bound;
/// exact points and infinity are returned unchanged. Bisection keeps the
/// endpoints dyadic when the input endpoints are dyadic.
IsolatingInterval refine_interval(const IsolatingInterval &iv,
                                  const Rat &width_bound);

/// Exact sign of a(x).
int eval_sign(const IntPoly &a, const Rat &x);

/// True iff the point isolated by iv is a root of g (exact decision).
bool is_root_of(const IsolatingInterval &iv, const IntPoly &g);

/// Exact three-way comparison of the isolated points. Infinity compares
/// greater than every finite point; two infinities are equal.
int compare_points(const IsolatingInterval &a, const IsolatingInterval &b);
int compare_point_rat(const IsolatingInterval &a, const Rat &x);

/// If the isolated point is rational, returns it.
std::optional<Rat> exact_value(const IsolatingInterval &iv);

/// Shrinks intervals (sorted by position, isolating distinct points) until
/// the stored intervals are pairwise disjoint.
void make_pairwise_disjoint(std::vector<IsolatingInterval> &ivs);

/// Certifies heuristic root guesses for squarefree s: exact signs at dyadic
/// points between consecutive guesses must yield deg(s) sign changes, which
/// proves every root real and isolated. Returns nullopt when the guesses do
/// not check out; never wrong.
std::optional<std::vector<IsolatingInterval>> isolate_from_real_guesses(
    const std::shared_ptr<const IntPoly> &sp, std::vector<Rat> guesses);

/// Smallest-denominator rational in [a, b] (Stern-Brocot descent).
Rat simplest_rational_in(const Rat &a, const Rat &b);

/// Best-effort upgrade of an open interval to an exact point: tests the
/// simplest rational inside a refined enclosure. Never changes the root.
IsolatingInterval snap_to_rational(const IsolatingInterval &iv);

/// Node budget guard for the isolation engines; throws BudgetError beyond.
struct IsolationBudget {
    long max_nodes = 0;  // 0 = default, derived from degree
};

}  // namespace rpp
