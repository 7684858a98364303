#include "rpp/circleset.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpp/interval.hpp"

namespace rpp {

namespace {

using IV = IsolatingInterval;

int cmp(const IV &a, const IV &b) { return compare_points(a, b); }

/// Exact sign of g at the point; the point must be finite.
int sign_at_point(const IntPoly &g, const IV &z) {
    if (z.is_infinity())
        throw std::invalid_argument("sign_at_point: infinite point");
    if (g.is_zero()) return 0;
    if (z.is_exact()) return g.sign_at(z.lo);
    if (is_root_of(z, g)) return 0;
    IV zz = z;
    while (true) {
        RatInterval j = eval_interval(g, {zz.lo, zz.hi});
        if (!j.contains_zero()) return sign(j.lo);
        zz = refine_interval(zz, zz.width() / 2);
        if (zz.is_exact()) return g.sign_at(zz.lo);
    }
}

/// q on the closed increasing walk from p to r.
bool on_walk(const IV &p, const IV &q, const IV &r) {
    int c_pr = cmp(p, r);
    if (c_pr == 0) return cmp(q, p) == 0;
    if (c_pr < 0) return cmp(p, q) <= 0 && cmp(q, r) <= 0;
    return cmp(q, p) >= 0 || cmp(q, r) <= 0;
}

bool in_arc(const IV &x, const Arc &a) { return on_walk(a.start, x, a.end); }

bool arc_contained(const Arc &a, const Arc &b) {
    int b_point = cmp(b.start, b.end);
    if (b_point == 0)
        return cmp(a.start, b.start) == 0 && cmp(a.end, b.start) == 0;
    if (!in_arc(a.start, b)) return false;
    if (cmp(a.start, a.end) == 0) return true;
    return on_walk(a.start, a.end, b.end);
}

struct Piece {
    std::optional<IV> lo, hi;  // nullopt = unbounded toward -inf / +inf
};

}  // namespace

CircleSet CircleSet::empty_set() { return CircleSet(); }

CircleSet CircleSet::full_circle() {
    CircleSet s;
    s.full_ = true;
    return s;
}

CircleSet CircleSet::segment(const Rat &lo, const Rat &hi) {
    if (lo > hi) throw std::invalid_argument("segment: lo > hi");
    Arc a{IV::exact(lo), IV::exact(hi)};
    return from_arcs({a});
}

CircleSet CircleSet::from_arcs(std::vector<Arc> raw) {
    bool has_inf = false;
    std::vector<Piece> pieces;
    for (auto &a : raw) {
        bool si = a.start.is_infinity(), ei = a.end.is_infinity();
        if (si && ei) {
            has_inf = true;
            continue;
        }
        if (si) {
            has_inf = true;
            pieces.push_back({std::nullopt, a.end});
            continue;
        }
        if (ei) {
            has_inf = true;
            pieces.push_back({a.start, std::nullopt});
            continue;
        }
        int c = cmp(a.start, a.end);
        if (c == 0) {
            pieces.push_back({a.start, a.start});
        } else if (c < 0) {
            pieces.push_back({a.start, a.end});
        } else {
            has_inf = true;  // wrap passes through infinity
            pieces.push_back({a.start, std::nullopt});
            pieces.push_back({std::nullopt, a.end});
        }
    }

    std::sort(pieces.begin(), pieces.end(), [](const Piece &x, const Piece &y) {
        if (!x.lo || !y.lo) {
            if (x.lo) return false;
            if (y.lo) return true;
            // both unbounded below: order by upper end for determinism
            if (!x.hi) return false;
            if (!y.hi) return true;
            return cmp(*x.hi, *y.hi) < 0;
        }
        int c = cmp(*x.lo, *y.lo);
        if (c != 0) return c < 0;
        if (!x.hi) return false;
        if (!y.hi) return true;
        return cmp(*x.hi, *y.hi) < 0;
    });

    std::vector<Piece> merged;
    for (auto &p : pieces) {
        if (merged.empty()) {
            merged.push_back(std::move(p));
            continue;
        }
        Piece &cur = merged.back();
        bool joins = !p.lo || !cur.hi || cmp(*p.lo, *cur.hi) <= 0;
        if (joins) {
            if (!cur.hi || !p.hi) {
                cur.hi = std::nullopt;
            } else if (cmp(*p.hi, *cur.hi) > 0) {
                cur.hi = std::move(p.hi);
            }
        } else {
            merged.push_back(std::move(p));
        }
    }

    CircleSet out;
    if (merged.size() == 1 && !merged[0].lo && !merged[0].hi) {
        out.full_ = true;
        return out;
    }
    const Piece *below = nullptr, *above = nullptr;
    for (auto &p : merged) {
        if (!p.lo) below = &p;
        if (!p.hi) above = &p;
    }
    if (!has_inf && (below || above))
        throw std::logic_error("circleset: unbounded piece without infinity");
    for (auto &p : merged) {
        if (!p.lo || !p.hi) continue;
        out.arcs_.push_back({*p.lo, *p.hi});
    }
    if (has_inf) {
        if (above && below)
            out.arcs_.push_back({*above->lo, *below->hi});
        else if (above)
            out.arcs_.push_back({*above->lo, IV::infinity()});
        else if (below)
            out.arcs_.push_back({IV::infinity(), *below->hi});
        else
            out.arcs_.push_back({IV::infinity(), IV::infinity()});
    }
    std::sort(out.arcs_.begin(), out.arcs_.end(),
              [](const Arc &x, const Arc &y) { return cmp(x.start, y.start) < 0; });
    return out;
}

bool CircleSet::contains_point(const IV &x) const {
    if (full_) return true;
    for (const auto &a : arcs_)
        if (in_arc(x, a)) return true;
    return false;
}

bool CircleSet::contains_rat(const Rat &x) const {
    return contains_point(IV::exact(x));
}

bool CircleSet::contains_infinity() const {
    return contains_point(IV::infinity());
}

bool CircleSet::subset_of(const CircleSet &other) const {
    if (other.full_) return true;
    if (full_) return other.full_;
    for (const auto &a : arcs_) {
        bool ok = false;
        for (const auto &b : other.arcs_)
            if (arc_contained(a, b)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::vector<CircleSet::SplitPiece> CircleSet::split_view() const {
    std::vector<SplitPiece> out;
    if (full_) {
        out.push_back({std::nullopt, std::nullopt, false});
        return out;
    }
    for (const auto &a : arcs_) {
        bool si = a.start.is_infinity(), ei = a.end.is_infinity();
        if (si && ei) {
            out.push_back({std::nullopt, std::nullopt, true});
        } else if (si) {
            out.push_back({std::nullopt, a.end, false});
        } else if (ei) {
            out.push_back({a.start, std::nullopt, false});
        } else if (cmp(a.start, a.end) <= 0) {
            out.push_back({a.start, a.end, false});
        } else {
            out.push_back({a.start, std::nullopt, false});
            out.push_back({std::nullopt, a.end, false});
        }
    }
    return out;
}

int compare_image_to_rat(const RationalMap &f, const IV &z, const Rat &v) {
    if (z.is_exact()) {
        ProjPoint y = f.eval(ProjPoint::finite(z.lo));
        if (y.at_infinity) return 1;
        return y.value < v ? -1 : (y.value > v ? 1 : 0);
    }
    if (is_root_of(z, f.den())) return 1;  // pole: f(z) = inf > v
    IntPoly b = f.num() * v.get_den() - f.den() * v.get_num();
    int sb = sign_at_point(b, z);
    if (sb == 0) return 0;
    return sb * sign_at_point(f.den(), z);
}

int compare_image_to_point(const RationalMap &f, const IV &z,
                           const IV &target) {
    bool z_pole = !z.is_exact() ? is_root_of(z, f.den())
                                : f.den().sign_at(z.lo) == 0;
    if (target.is_infinity()) return z_pole ? 0 : -1;
    if (z_pole) return 1;
    if (auto tv = exact_value(target)) return compare_image_to_rat(f, z, *tv);
    if (z.is_exact()) {
        ProjPoint y = f.eval(ProjPoint::finite(z.lo));
        return -compare_point_rat(target, y.value);
    }
    // both algebraic: equality means z is a preimage of a root of the
    // target's witness, confirmed when the image enclosure settles strictly
    // inside the target's isolating interval. The target interval stays
    // fixed in that case; only a genuinely different value escapes it.
    IntPoly h = poly_compose(*target.witness, f.num(), f.den()).num;
    bool equal_candidate = !h.is_zero() && is_root_of(z, h);
    IV zz = z, uu = target;
    while (true) {
        RatInterval den = eval_interval(f.den(), {zz.lo, zz.hi});
        if (!den.contains_zero()) {
            RatInterval img = eval_interval(f.num(), {zz.lo, zz.hi}) / den;
            if (img.hi < uu.lo) return -1;
            if (img.lo > uu.hi) return 1;
            if (equal_candidate && uu.lo < img.lo && img.hi < uu.hi) return 0;
        }
        zz = refine_interval(zz, zz.width() / 2);
        if (auto vz = exact_value(zz)) {
            ProjPoint y = f.eval(ProjPoint::finite(*vz));
            if (y.at_infinity) return 1;
            return -compare_point_rat(uu, y.value);
        }
        if (!equal_candidate) {
            uu = refine_interval(uu, uu.width() / 2);
            if (auto vu = exact_value(uu))
                return compare_image_to_rat(f, zz, *vu);
        }
    }
}

namespace {

bool image_in_set(const RationalMap &f, const IV &z, const CircleSet &s) {
    if (s.is_full()) return true;
    if (z.is_exact()) {
        ProjPoint y = f.eval(ProjPoint::finite(z.lo));
        return y.at_infinity ? s.contains_infinity() : s.contains_rat(y.value);
    }
    if (is_root_of(z, f.den())) return s.contains_infinity();
    for (const auto &a : s.arcs()) {
        int c_se = cmp(a.start, a.end);
        int cs = compare_image_to_point(f, z, a.start);
        if (c_se == 0) {
            if (cs == 0) return true;
            continue;
        }
        int ce = compare_image_to_point(f, z, a.end);
        bool inside = c_se < 0 ? (cs >= 0 && ce <= 0) : (cs >= 0 || ce <= 0);
        if (inside) return true;
    }
    return false;
}

}  // namespace

CircleSet preimage(const RationalMap &f, const CircleSet &s) {
    if (f.degree() < 1)
        throw std::invalid_argument("preimage: degree must be >= 1");
    if (s.is_full()) return CircleSet::full_circle();
    if (s.is_empty()) return CircleSet::empty_set();

    std::vector<IV> cuts;
    auto add_roots = [&cuts](const IntPoly &g) {
        if (g.degree() < 1) return;
        for (auto &iv : isolate_real_roots(g)) cuts.push_back(std::move(iv));
    };
    add_roots(f.den());  // poles
    for (const auto &a : s.arcs()) {
        for (const IV *ep : {&a.start, &a.end}) {
            if (ep->is_infinity()) continue;  // poles already cut there
            cuts.push_back(*ep);
            if (auto v = exact_value(*ep)) {
                add_roots(f.num() * v->get_den() - f.den() * v->get_num());
            } else {
                IntPoly h = poly_compose(*ep->witness, f.num(), f.den()).num;
                add_roots(h);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const IV &a, const IV &b) { return cmp(a, b) < 0; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const IV &a, const IV &b) { return cmp(a, b) == 0; }),
               cuts.end());
    make_pairwise_disjoint(cuts);

    auto sample_in = [&f, &s](const Rat &x) {
        ProjPoint y = f.eval(ProjPoint::finite(x));
        return y.at_infinity ? s.contains_infinity() : s.contains_rat(y.value);
    };

    std::vector<Arc> raw;
    if (cuts.empty()) {
        // no boundary crossings anywhere: membership is constant
        return sample_in(Rat(0)) ? CircleSet::full_circle()
                                 : CircleSet::empty_set();
    }
    if (sample_in(cuts.front().lo - 1))
        raw.push_back({IV::infinity(), cuts.front()});
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rat mid = (cuts[i].hi + cuts[i + 1].lo) / 2;
        if (sample_in(mid)) raw.push_back({cuts[i], cuts[i + 1]});
    }
    if (sample_in(cuts.back().hi + 1))
        raw.push_back({cuts.back(), IV::infinity()});
    for (const auto &c : cuts)
        if (image_in_set(f, c, s)) raw.push_back({c, c});
    {
        ProjPoint y = f.eval(ProjPoint::infinity());
        bool inf_in = y.at_infinity ? s.contains_infinity() : s.contains_rat(y.value);
        if (inf_in) raw.push_back({IV::infinity(), IV::infinity()});
    }
    return CircleSet::from_arcs(std::move(raw));
}

bool is_backward_invariant(const RationalMap &f, const CircleSet &s) {
    return preimage(f, s).subset_of(s);
}

std::optional<NonattractingWitness> contains_nonattracting_fixed_point(
    const RationalMap &f, const CircleSet &s, const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument(
            "contains_nonattracting_fixed_point: degree must be >= 2");
    struct Cand {
        IV point;
        MultiplierClass cls;
        Rat key;  // |lambda| midpoint, exact
    };
    std::vector<Cand> cands;
    IntPoly f1 = fixed_point_poly_raw(f).primitive_normalized();
    if (!f1.is_zero() && f1.degree() >= 1) {
        for (auto &root : isolate_real_roots(f1)) {
            MultiplierClass c = classify_multiplier_of_iterate(f, root, cfg);
            if (!nonattracting(c.verdict)) continue;
            if (!s.contains_point(root)) continue;
            Rat key = rat_abs((c.lambda_bounds.first + c.lambda_bounds.second) / 2);
            cands.push_back({std::move(root), std::move(c), std::move(key)});
        }
    }
    if (f.num().degree() > f.den().degree() && s.contains_infinity()) {
        MultiplierClass c = multiplier_at_infinity(f, 1, cfg);
        if (nonattracting(c.verdict)) {
            Rat key = rat_abs((c.lambda_bounds.first + c.lambda_bounds.second) / 2);
            cands.push_back({IV::infinity(), std::move(c), std::move(key)});
        }
    }
    if (cands.empty()) return std::nullopt;
    std::stable_sort(cands.begin(), cands.end(), [](const Cand &a, const Cand &b) {
        if (a.key != b.key) return a.key > b.key;
        return compare_points(a.point, b.point) < 0;
    });
    return NonattractingWitness{cands.front().point, cands.front().cls};
}

}  // namespace rpp
