#pragma once

#include <optional>

#include "rpp/intpoly.hpp"

namespace rpp {

/// Closed rational interval [lo, hi]; exact endpoint arithmetic. Widths only
/// ever shrink toward the true value as inputs are refined, which is all the
/// multiplier classification needs.
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static RatInterval point(const Rat &v) { return {v, v}; }

    bool contains(const Rat &v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    Rat width() const { return hi - lo; }

    RatInterval operator+(const RatInterval &o) const;
    RatInterval operator-(const RatInterval &o) const;
    RatInterval operator*(const RatInterval &o) const;
    /// Requires o to exclude zero.
    RatInterval operator/(const RatInterval &o) const;
};

/// Interval extension of a polynomial via Horner; exact endpoints.
RatInterval eval_interval(const IntPoly &p, const RatInterval &x);

}  // namespace rpp
