#pragma once

#include "rpp/intpoly.hpp"

namespace rpp {

/// One-sided modular certificates. deg gcd(a mod p, b mod p) >= deg gcd(a, b)
/// whenever p divides neither leading coefficient, so a trivial modular gcd
/// proves coprimality over Q. A nontrivial one proves nothing; callers fall
/// back to the exact pseudo-remainder gcd.

/// True only when gcd(a, b) = 1 is certified by some prime.
bool certified_coprime(const IntPoly &a, const IntPoly &b);

/// True only when gcd(a, a') = 1 is certified, i.e. a is squarefree.
bool certified_squarefree(const IntPoly &a);

}  // namespace rpp
