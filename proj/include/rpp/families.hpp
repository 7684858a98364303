#pragma once

#include <cstdint>
#include <vector>

#include "rpp/ratmap.hpp"

namespace rpp {

/// Chebyshev polynomial of the first kind as a map (q = 1).
RationalMap chebyshev(int d);
IntPoly chebyshev_poly(int d);

/// Physicists' Hermite polynomial as a map (q = 1).
RationalMap hermite(int d);
IntPoly hermite_poly(int d);

/// z * (c - sum_i a_i/(z - b_i))^2 expanded and normalized. The b_i must be
/// pairwise distinct; empty a, b give z -> c^2 z.
RationalMap fatou_form(const Rat &c, const std::vector<Rat> &a,
                       const std::vector<Rat> &b);

/// (2 - eps) z^2 + eps - 1; the point 1 is a fixed point for every eps.
RationalMap perturbed_cheb2(const Rat &eps);

/// Deterministic real fibered map from a seed: p and q with strictly
/// interlacing rational roots in [-10, 10], deg p = d = deg q + 1, and the
/// leading coefficient of p strictly greater than that of q, so infinity is
/// an attracting fixed point.
RationalMap interlacing_random(int d, std::uint64_t seed);

}  // namespace rpp
