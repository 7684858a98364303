#include "rpp/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpp {

RatInterval RatInterval::operator+(const RatInterval &o) const {
    return {lo + o.lo, hi + o.hi};
}

RatInterval RatInterval::operator-(const RatInterval &o) const {
    return {lo - o.hi, hi - o.lo};
}

RatInterval RatInterval::operator*(const RatInterval &o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
}

RatInterval RatInterval::operator/(const RatInterval &o) const {
    if (o.contains_zero())
        throw std::domain_error("interval division through zero");
    RatInterval inv{Rat(1) / o.hi, Rat(1) / o.lo};
    return *this * inv;
}

RatInterval eval_interval(const IntPoly &p, const RatInterval &x) {
    if (p.is_zero()) return RatInterval::point(Rat(0));
    RatInterval acc = RatInterval::point(Rat(p.lead()));
    for (int i = p.degree() - 1; i >= 0; --i) {
        acc = acc * x;
        const Int &c = p.coeff(i);
        if (c != 0) acc = acc + RatInterval::point(Rat(c));
    }
    return acc;
}

}  // namespace rpp
