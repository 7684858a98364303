#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rpp/rational.hpp"

namespace rpp {

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeff(i) is the coefficient of z^i; no trailing zeros are stored, so
/// degree() is the index of the last entry (-1 for the zero polynomial).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    /// z^k
    static IntPoly monomial(int k, Int c = Int(1));

    bool is_zero() const { return c_.empty(); }
    /// -1 stands in for the "minus infinity" degree of the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int &coeff(int i) const;
    const Int &lead() const;
    const std::vector<Int> &coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly &o) const;
    IntPoly operator-(const IntPoly &o) const;
    IntPoly operator*(const IntPoly &o) const;
    IntPoly operator*(const Int &k) const;
    bool operator==(const IntPoly &o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly &o) const { return c_ != o.c_; }

    /// Multiply by z^k.
    IntPoly shifted_up(int k) const;

    IntPoly derivative() const;

    /// gcd of all coefficients (0 for the zero polynomial), always >= 0.
    Int content() const;
    /// this / content(); sign of the leading coefficient is preserved.
    IntPoly primitive_part() const;
    /// primitive part with positive leading coefficient.
    IntPoly primitive_normalized() const;

    /// Exact value a(x) for integer x.
    Int eval_int(const Int &x) const;
    /// Exact value a(x).
    Rat eval(const Rat &x) const;
    /// den^degree * a(num/den): integer whose sign equals sign(a(num/den))
    /// for den > 0. This is the kernel behind every exact sign test.
    Int eval_scaled(const Int &num, const Int &den) const;
    int sign_at(const Rat &x) const;
    /// Sign of a(x) as x -> +inf (resp. -inf).
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    /// Largest number of bits over all coefficients.
    std::size_t max_coeff_bits() const;

    /// Exact quotient if o divides this in Z[z], otherwise nullopt.
    std::optional<IntPoly> divided_exactly_by(const IntPoly &o) const;

private:
    void trim();
    std::vector<Int> c_;
};

std::ostream &operator<<(std::ostream &os, const IntPoly &p);

/// Primitive gcd with positive leading coefficient. Errors if both are zero.
IntPoly poly_gcd(const IntPoly &a, const IntPoly &b);

/// a / gcd(a, a'), primitive with positive leading coefficient: same distinct
/// roots as a, all simple. Errors on the zero polynomial.
IntPoly squarefree_part(const IntPoly &a);

/// Yun decomposition: returns pairs (factor, multiplicity) with the factors
/// squarefree, pairwise coprime, and a = content * prod factor^mult.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly &a);

/// prem-style remainder: (positive constant) * a mod b, degree < deg(b).
/// Requires deg(a) >= deg(b) >= 0. The positive multiplier keeps the sign
/// pattern usable in Sturm chains.
IntPoly pseudo_rem_pos(const IntPoly &a, const IntPoly &b);

/// Numerator/denominator of outer(inner_num/inner_den), cleared of the
/// common power of inner_den and of the pair's integer content:
///   num = sum outer_i * inner_num^i * inner_den^(n-i),  den = inner_den^n.
struct PolyPair {
    IntPoly num;
    IntPoly den;
};
PolyPair poly_compose(const IntPoly &outer, const IntPoly &inner_num,
                      const IntPoly &inner_den);

/// Divides out the integer content common to the pair (ratio preserved).
PolyPair pair_primitive(IntPoly num, IntPoly den);

}  // namespace rpp
