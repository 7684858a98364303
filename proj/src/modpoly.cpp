#include "rpp/modpoly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace rpp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 4> kPrimes = {
    2305843009213693951ULL,  // 2^61 - 1
    4611686018427387847ULL,
    4611686018427387817ULL,
    4611686018427387787ULL,
};

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::vector<u64> reduce_mod(const IntPoly &a, u64 p) {
    std::vector<u64> r(a.coeffs().size());
    Int pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int m = a.coeffs()[i] % pz;
        if (m < 0) m += pz;
        r[i] = m.get_ui();
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// deg gcd over Z_p via the Euclidean algorithm; -1 for gcd from a zero pair.
int gcd_degree_mod(std::vector<u64> u, std::vector<u64> v, u64 p) {
    auto deg = [](const std::vector<u64> &w) { return static_cast<int>(w.size()) - 1; };
    if (deg(u) < deg(v)) u.swap(v);
    while (!v.empty()) {
        u64 inv = powmod(v.back(), p - 2, p);
        while (u.size() >= v.size()) {
            u64 c = mulmod(u.back(), inv, p);
            if (c != 0) {
                std::size_t off = u.size() - v.size();
                for (std::size_t j = 0; j < v.size(); ++j) {
                    u64 t = mulmod(c, v[j], p);
                    u[off + j] = (u[off + j] >= t) ? u[off + j] - t : u[off + j] + p - t;
                }
            }
            u.pop_back();
            while (!u.empty() && u.back() == 0) u.pop_back();
            if (u.empty()) break;
        }
        u.swap(v);
    }
    return deg(u);
}

}  // namespace

bool certified_coprime(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.degree() == 0 || b.degree() == 0) return true;
    for (u64 p : kPrimes) {
        Int pz(static_cast<unsigned long>(p));
        if (a.lead() % pz == 0 || b.lead() % pz == 0) continue;
        if (gcd_degree_mod(reduce_mod(a, p), reduce_mod(b, p), p) == 0) return true;
    }
    return false;
}

bool certified_squarefree(const IntPoly &a) {
    if (a.is_zero()) return false;
    if (a.degree() <= 1) return true;
    return certified_coprime(a, a.derivative());
}

}  // namespace rpp
