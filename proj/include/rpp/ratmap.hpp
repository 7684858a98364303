#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rpp/config.hpp"
#include "rpp/intpoly.hpp"
#include "rpp/roots.hpp"

namespace rpp {

/// Point of the real projective line: a rational number or infinity.
struct ProjPoint {
    bool at_infinity = false;
    Rat value;

    static ProjPoint finite(Rat v) { return {false, std::move(v)}; }
    static ProjPoint infinity() { return {true, Rat(0)}; }
    bool operator==(const ProjPoint &o) const {
        return at_infinity == o.at_infinity &&
               (at_infinity || value == o.value);
    }
};

/// Self-map of the projective line given by a coprime integer pair p/q,
/// pair content removed, q's leading coefficient positive (p's when q = 0).
class RationalMap {
public:
    /// Normalizes: divides out gcd(p, q) and the pair content, fixes signs.
    /// Errors when both polynomials are zero.
    RationalMap(IntPoly p, IntPoly q);

    const IntPoly &num() const { return p_; }
    const IntPoly &den() const { return q_; }
    int degree() const { return degree_; }
    bool is_polynomial() const { return q_.degree() <= 0 && !q_.is_zero(); }

    /// Exact evaluation on the projective line: poles go to infinity and
    /// the value at infinity is the limit of p/q.
    ProjPoint eval(const ProjPoint &x) const;

    /// Derivative (p'q - pq')/q^2 as a normalized map.
    RationalMap derivative() const;

    bool operator==(const RationalMap &o) const {
        return p_ == o.p_ && q_ == o.q_;
    }

private:
    IntPoly p_, q_;
    int degree_ = 0;
};

/// f^k by repeated composition with renormalization at every step; degree
/// and coefficient-size budgets enforced via BudgetError.
RationalMap iterate_map(const RationalMap &f, int k,
                        const RunConfig &cfg = global_config());

/// p(z) - z q(z) exactly as stored (no content removal): the polynomial
/// whose roots are the finite fixed points of the map.
IntPoly fixed_point_poly_raw(const RationalMap &f);

struct FixedPointData {
    int k = 1;
    IntPoly F;  // primitive fixed-point polynomial of f^k
    int infinity_multiplicity = 0;
    std::vector<IsolatingInterval> roots;
    bool all_real = false;
};

/// Fixed points of f^k: requires degree(f) >= 2 and k >= 1.
FixedPointData fixed_point_data(const RationalMap &f, int k,
                                const RunConfig &cfg = global_config());

enum class MultVerdict { Attracting, Repelling, IndifferentPlus, IndifferentMinus };

struct MultiplierClass {
    MultVerdict verdict;
    /// Exact enclosure of the multiplier; a point interval when lambda is
    /// known exactly (0, +-1, or at a rational cycle point / at infinity).
    std::pair<Rat, Rat> lambda_bounds;
};

const char *verdict_name(MultVerdict v);
inline bool nonrepelling(MultVerdict v) { return v != MultVerdict::Repelling; }
inline bool nonattracting(MultVerdict v) { return v != MultVerdict::Attracting; }

/// Verdict for lambda = (f^k)'(z0) at the finite fixed point of f^k isolated
/// by cycle_root. Exact tests decide lambda = +1 (multiple root of F_k) and
/// lambda = -1 (multiple root of F_2k, not of F_k) before any refinement.
MultiplierClass classify_multiplier(const RationalMap &f,
                                    const IsolatingInterval &cycle_root, int k,
                                    const RunConfig &cfg = global_config());

/// Same but with g = f^k already iterated.
MultiplierClass classify_multiplier_of_iterate(
    const RationalMap &g, const IsolatingInterval &cycle_root,
    const RunConfig &cfg = global_config());

/// Multiplier at infinity (reciprocal convention). Requires infinity to be
/// fixed by f^k, i.e. deg num > deg den for the iterate.
MultiplierClass multiplier_at_infinity(const RationalMap &f, int k,
                                       const RunConfig &cfg = global_config());

/// Conjugate phi o f o phi^{-1} by the real Moebius map
/// phi(z) = (a z + b)/(c z + e); requires a e - b c != 0.
RationalMap conjugate(const RationalMap &f, const Rat &a, const Rat &b,
                      const Rat &c, const Rat &e);

/// Image of phi(z) = (a z + b)/(c z + e) at a projective point.
ProjPoint moebius_apply(const Rat &a, const Rat &b, const Rat &c, const Rat &e,
                        const ProjPoint &x);

}  // namespace rpp
