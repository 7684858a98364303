#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace rpp {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int &x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat &x) { return mpq_sgn(x.get_mpq_t()); }

/// Reduced fraction n/d with d > 0. Throws on d = 0.
Rat make_rat(const Int &num, const Int &den);

inline Rat rat_abs(const Rat &x) { return x < 0 ? Rat(-x) : x; }

inline bool is_integer(const Rat &x) { return x.get_den() == 1; }

/// 2^e as a rational, e may be negative.
Rat pow2(long e);

/// Number of bits of |x| (0 for x = 0).
inline std::size_t bit_length(const Int &x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// Parses "a" or "a/b" (optional leading '-'/'+'). Rejects empty input and
/// zero denominators.
std::optional<Rat> parse_rational(const std::string &text);

std::string to_string(const Rat &x);
std::string to_string(const Int &x);

/// splitmix64: platform-stable seeded generator used everywhere randomness
/// is part of a contract (same seed => same stream on every platform).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] via rejection; lo <= hi.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

}  // namespace rpp
