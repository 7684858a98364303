#include "rpp/intpoly.hpp"

#include <ostream>
#include <stdexcept>

namespace rpp {

namespace {
const Int kZero(0);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int k, Int c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(k) + 1, Int(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int &IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const Int &IntPoly::lead() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto &v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly &o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly &o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly &o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    Int tmp;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(),
                       o.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int &k) const {
    if (k == 0) return IntPoly();
    IntPoly r = *this;
    for (auto &v : r.c_) v *= k;
    return r;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
    std::vector<Int> r(c_.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto &v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (g == 1) return *this;
    IntPoly r = *this;
    for (auto &v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::primitive_normalized() const {
    IntPoly r = primitive_part();
    if (!r.is_zero() && sign(r.lead()) < 0) r = -r;
    return r;
}

Int IntPoly::eval_int(const Int &x) const {
    Int v(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        v *= x;
        v += c_[i];
    }
    return v;
}

Rat IntPoly::eval(const Rat &x) const {
    if (is_zero()) return Rat(0);
    Int num = x.get_num(), den = x.get_den();
    Int scaled = eval_scaled(num, den);
    Int dn;
    mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(degree()));
    return make_rat(scaled, dn);
}

Int IntPoly::eval_scaled(const Int &num, const Int &den) const {
    // Horner on v = sum c_i num^i den^(n-i); exact, integer throughout.
    if (is_zero()) return Int(0);
    Int v = c_.back();
    Int dpow(1);
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
        dpow *= den;
        v *= num;
        mpz_addmul(v.get_mpz_t(), c_[i].get_mpz_t(), dpow.get_mpz_t());
    }
    return v;
}

int IntPoly::sign_at(const Rat &x) const {
    if (is_zero()) return 0;
    Int v = eval_scaled(x.get_num(), x.get_den());
    return sign(v);
}

int IntPoly::sign_at_pos_inf() const { return sign(lead()); }

int IntPoly::sign_at_neg_inf() const {
    int s = sign(lead());
    return (degree() % 2 != 0) ? -s : s;
}

std::size_t IntPoly::max_coeff_bits() const {
    std::size_t m = 0;
    for (const auto &v : c_) m = std::max(m, bit_length(v));
    return m;
}

std::optional<IntPoly> IntPoly::divided_exactly_by(const IntPoly &o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < o.degree()) return std::nullopt;
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - o.c_.size() + 1, Int(0));
    const Int &lb = o.lead();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int &top = rem[k + o.c_.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(),
                       o.c_[j].get_mpz_t());
        quot[k] = std::move(q);
    }
    for (const auto &v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

std::ostream &operator<<(std::ostream &os, const IntPoly &p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int &c = p.coeff(i);
        if (c == 0) continue;
        if (!first) os << (sign(c) > 0 ? " + " : " - ");
        else if (sign(c) < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "z";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

IntPoly pseudo_rem_pos(const IntPoly &a, const IntPoly &b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem_pos: zero divisor");
    std::vector<Int> r = a.coeffs();
    const auto &bc = b.coeffs();
    const std::size_t nb = bc.size();
    Int m = abs(b.lead());
    int lb_sign = sign(b.lead());
    auto deg = [&r]() {
        std::size_t n = r.size();
        while (n > 0 && r[n - 1] == 0) --n;
        return static_cast<int>(n) - 1;
    };
    int dr = deg();
    const int db = b.degree();
    while (dr >= db) {
        // r <- |lc(b)| * r - sgn(lc(b)) * lc(r) * z^(dr-db) * b
        Int lr = r[static_cast<std::size_t>(dr)];
        if (lb_sign < 0) lr = -lr;
        for (auto &v : r) v *= m;
        std::size_t off = static_cast<std::size_t>(dr - db);
        for (std::size_t j = 0; j < nb; ++j)
            mpz_submul(r[off + j].get_mpz_t(), lr.get_mpz_t(),
                       bc[j].get_mpz_t());
        r.resize(static_cast<std::size_t>(dr));  // leading term cancelled
        dr = deg();
    }
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of zero polynomials");
    if (a.is_zero()) return b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();
    // Primitive pseudo-remainder sequence: coefficient growth stays tame and
    // every element is an exact scalar multiple of the true remainder.
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem_pos(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    IntPoly res = u.primitive_normalized();
    if (res.degree() == 0) return IntPoly::constant(Int(1));
    return res;
}

IntPoly squarefree_part(const IntPoly &a) {
    if (a.is_zero())
        throw std::invalid_argument("squarefree_part of zero polynomial");
    if (a.degree() == 0) return IntPoly::constant(Int(1));
    IntPoly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) return a.primitive_normalized();
    auto q = a.primitive_part().divided_exactly_by(g);
    if (!q) throw std::logic_error("squarefree_part: inexact division");
    return q->primitive_normalized();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly &a) {
    if (a.is_zero())
        throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    if (a.degree() == 0) return out;
    // Yun's algorithm on the primitive part.
    IntPoly p = a.primitive_normalized();
    IntPoly dp = p.derivative();
    IntPoly g = poly_gcd(p, dp);
    if (g.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    IntPoly w = *p.divided_exactly_by(g);
    IntPoly y = *dp.divided_exactly_by(g);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly z = y - w.derivative();
        if (z.is_zero()) {
            out.emplace_back(w.primitive_normalized(), i);
            break;
        }
        IntPoly f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f.primitive_normalized(), i);
        w = *w.divided_exactly_by(f);
        y = *z.divided_exactly_by(f);
        ++i;
    }
    return out;
}

PolyPair pair_primitive(IntPoly num, IntPoly den) {
    Int cn = num.content(), cd = den.content();
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        std::vector<Int> nc = num.coeffs(), dc = den.coeffs();
        for (auto &v : nc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        for (auto &v : dc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        return {IntPoly(std::move(nc)), IntPoly(std::move(dc))};
    }
    return {std::move(num), std::move(den)};
}

PolyPair poly_compose(const IntPoly &outer, const IntPoly &inner_num,
                      const IntPoly &inner_den) {
    if (inner_den.is_zero())
        throw std::invalid_argument("poly_compose: zero inner denominator");
    const int n = outer.degree();
    if (n < 0) return {IntPoly(), IntPoly::constant(Int(1))};
    std::vector<IntPoly> den_pow(static_cast<std::size_t>(n) + 1);
    den_pow[0] = IntPoly::constant(Int(1));
    for (int j = 1; j <= n; ++j) den_pow[j] = den_pow[j - 1] * inner_den;
    // Horner in inner_num/inner_den with the denominator cleared as we go:
    // v after step i equals sum_{j>=i} outer_j num^(j-i) den^(n-j).
    IntPoly v = IntPoly::constant(outer.coeff(n));
    for (int i = n - 1; i >= 0; --i) {
        v = v * inner_num;
        if (outer.coeff(i) != 0)
            v = v + den_pow[static_cast<std::size_t>(n - i)] * outer.coeff(i);
    }
    return pair_primitive(std::move(v), IntPoly(den_pow[static_cast<std::size_t>(n)]));
}

}  // namespace rpp
