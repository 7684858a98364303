#pragma once

#include <optional>
#include <vector>

#include "rpp/ratmap.hpp"
#include "rpp/roots.hpp"

namespace rpp {

/// Closed arc on the circle R u {inf}, traveling from start to end in the
/// increasing direction and wrapping through infinity when start > end.
/// Endpoints are exact rationals, certified algebraic points, or infinity
/// (IsolatingInterval covers all three). start == end is a single point.
struct Arc {
    IsolatingInterval start, end;
};

/// Finite union of closed arcs in normal form: arcs pairwise disjoint and
/// non-adjacent, sorted by starting endpoint (finite ascending, infinity
/// last). The full circle is a separate flag.
class CircleSet {
public:
    static CircleSet empty_set();
    static CircleSet full_circle();
    /// Normalizes an arbitrary arc soup: splits wraps, merges overlapping
    /// and adjacent pieces, reglues across infinity.
    static CircleSet from_arcs(std::vector<Arc> raw);
    /// [lo, hi] with rational endpoints, lo <= hi.
    static CircleSet segment(const Rat &lo, const Rat &hi);

    bool is_full() const { return full_; }
    bool is_empty() const { return !full_ && arcs_.empty(); }
    const std::vector<Arc> &arcs() const { return arcs_; }

    bool contains_rat(const Rat &x) const;
    bool contains_infinity() const;
    bool contains_point(const IsolatingInterval &x) const;
    bool subset_of(const CircleSet &other) const;

    /// Split view for serialization: pairs (lo, hi) on the extended line,
    /// nullopt = unbounded side; wrap arcs come out as two pairs.
    struct SplitPiece {
        std::optional<IsolatingInterval> lo, hi;  // nullopt = -inf / +inf
        bool infinity_point = false;              // the {inf} singleton
    };
    std::vector<SplitPiece> split_view() const;

private:
    bool full_ = false;
    std::vector<Arc> arcs_;
};

/// Exact f^{-1}(S): cuts the circle at the preimages of S's endpoints, at
/// the poles of f, at infinity, and at the endpoints of S; then decides one
/// exact sample per open piece. Algebraic cut points keep their defining
/// polynomial as the isolating-interval witness.
CircleSet preimage(const RationalMap &f, const CircleSet &s);

/// preimage(f, S) subset of S, decided exactly.
bool is_backward_invariant(const RationalMap &f, const CircleSet &s);

struct NonattractingWitness {
    IsolatingInterval point;  // Kind::Infinity for the fixed point at infinity
    MultiplierClass cls;
};

/// Scans the real fixed points of f (finite roots of F_1 plus infinity when
/// fixed), classifies them, and returns the nonattracting one inside S with
/// the largest multiplier magnitude (ties by position). Deterministic.
std::optional<NonattractingWitness> contains_nonattracting_fixed_point(
    const RationalMap &f, const CircleSet &s,
    const RunConfig &cfg = global_config());

/// Exact sign of f(z) - v at the algebraic point z (z must not be a pole).
int compare_image_to_rat(const RationalMap &f, const IsolatingInterval &z,
                         const Rat &v);

/// Exact three-way comparison of f(z) against the point target; target may
/// be rational, algebraic, or infinity (then the result is -1 unless z is a
/// pole, which compares equal).
int compare_image_to_point(const RationalMap &f, const IsolatingInterval &z,
                           const IsolatingInterval &target);

}  // namespace rpp
