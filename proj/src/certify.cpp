#include "rpp/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpp/modpoly.hpp"

namespace rpp {

namespace {

using IV = IsolatingInterval;

bool squarefree_exact(const IntPoly &a) {
    if (a.degree() <= 1) return true;
    if (certified_squarefree(a)) return true;
    return poly_gcd(a, a.derivative()).degree() == 0;
}

Certificate base_cert(const RationalMap &f, Criterion c) {
    Certificate out(f);
    out.criterion = c;
    return out;
}

}  // namespace

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedInRd: return "certified_in_Rd";
        case Verdict::CertifiedNotInRd: return "certified_not_in_Rd";
        case Verdict::BoundaryIndifferent: return "boundary_indifferent";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char *criterion_name(Criterion c) {
    switch (c) {
        case Criterion::ThmMain2: return "thm_main_2";
        case Criterion::ThmRf: return "thm_rf";
        case Criterion::CorOdd: return "cor_odd";
        case Criterion::CorEven: return "cor_even";
        case Criterion::Scan: return "scan";
    }
    return "?";
}

Certificate scan_real_periodic(const RationalMap &f, int K,
                               const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument("scan_real_periodic: degree must be >= 2");
    if (K < 1) throw std::invalid_argument("scan_real_periodic: K must be >= 1");
    Certificate out = base_cert(f, Criterion::Scan);
    for (int k = 1; k <= K; ++k) {
        bool real;
        try {
            real = fixed_point_data(f, k, cfg).all_real;
        } catch (const BudgetError &e) {
            out.verdict = Verdict::Inconclusive;
            out.k_scanned = k - 1;
            out.budget_exhausted = true;
            out.note = e.what();
            return out;
        }
        if (!real) {
            out.verdict = Verdict::CertifiedNotInRd;
            out.first_nonreal_k = k;
            out.k_scanned = k;
            return out;
        }
    }
    out.verdict = Verdict::Inconclusive;
    out.k_scanned = K;
    return out;
}

bool is_real_fibered(const RationalMap &f) {
    if (f.degree() < 1)
        throw std::invalid_argument("is_real_fibered: degree must be >= 1");
    const IntPoly &p = f.num(), &q = f.den();
    if (q.is_zero()) return false;  // constant infinity
    if (std::abs(p.degree() - q.degree()) > 1) return false;
    if (p.degree() >= 2 && (!squarefree_exact(p) || !all_roots_real(p)))
        return false;
    if (q.degree() >= 2 && (!squarefree_exact(q) || !all_roots_real(q)))
        return false;
    std::vector<std::pair<IV, int>> merged;  // tag 0 = root of p, 1 = of q
    if (p.degree() >= 1)
        for (auto &iv : isolate_real_roots(p)) merged.emplace_back(std::move(iv), 0);
    if (q.degree() >= 1)
        for (auto &iv : isolate_real_roots(q)) merged.emplace_back(std::move(iv), 1);
    if (static_cast<int>(merged.size()) != std::max(p.degree(), 0) +
                                               std::max(q.degree(), 0))
        return false;  // some roots are nonreal
    std::sort(merged.begin(), merged.end(),
              [](const auto &a, const auto &b) {
                  return compare_points(a.first, b.first) < 0;
              });
    // roots of p and q are distinct (coprime), so strict interlacing is
    // exactly alternation of the tags in the merged order
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].second == merged[i + 1].second) return false;
    return true;
}

Certificate certify_rf(const RationalMap &f, const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument("certify_rf: degree must be >= 2");
    if (!is_real_fibered(f))
        throw std::invalid_argument("certify_rf: not real fibered");
    Certificate out = base_cert(f, Criterion::ThmRf);
    FixedPointData d2 = fixed_point_data(f, 2, cfg);
    out.k_scanned = 2;
    if (!d2.all_real) {
        out.verdict = Verdict::CertifiedNotInRd;
        out.first_nonreal_k = fixed_point_data(f, 1, cfg).all_real ? 2 : 1;
        return out;
    }
    // locate the nonrepelling fixed point of f^2; an exact indifferent one
    // puts f on the boundary
    RationalMap g2 = iterate_map(f, 2, cfg);
    std::optional<CycleWitness> attracting, indifferent;
    for (const auto &root : d2.roots) {
        MultiplierClass c = classify_multiplier_of_iterate(g2, root, cfg);
        if (c.verdict == MultVerdict::Repelling) continue;
        CycleWitness w{{root}, c};
        if (c.verdict == MultVerdict::Attracting) {
            if (!attracting) attracting = std::move(w);
        } else if (!indifferent) {
            indifferent = std::move(w);
        }
    }
    if (g2.num().degree() > g2.den().degree()) {
        MultiplierClass c = multiplier_at_infinity(f, 2, cfg);
        if (c.verdict != MultVerdict::Repelling) {
            CycleWitness w{{IV::infinity()}, c};
            if (c.verdict == MultVerdict::Attracting) {
                if (!attracting) attracting = std::move(w);
            } else if (!indifferent) {
                indifferent = std::move(w);
            }
        }
    }
    if (indifferent) {
        out.verdict = Verdict::BoundaryIndifferent;
        out.cycle = std::move(indifferent);
        return out;
    }
    if (attracting) {
        out.verdict = Verdict::CertifiedInRd;
        out.cycle = std::move(attracting);
        return out;
    }
    out.verdict = Verdict::Inconclusive;
    out.note = "no nonrepelling fixed point of f^2 found";
    return out;
}

std::optional<CycleWitness> find_nonrepelling_short_cycle(const RationalMap &f,
                                                          const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument(
            "find_nonrepelling_short_cycle: degree must be >= 2");
    FixedPointData d1 = fixed_point_data(f, 1, cfg);
    for (const auto &root : d1.roots) {
        MultiplierClass c = classify_multiplier_of_iterate(f, root, cfg);
        if (nonrepelling(c.verdict)) return CycleWitness{{root}, c};
    }
    if (f.num().degree() > f.den().degree()) {
        MultiplierClass c = multiplier_at_infinity(f, 1, cfg);
        if (nonrepelling(c.verdict))
            return CycleWitness{{IV::infinity()}, c};
    }
    // genuine 2-cycles: real roots of F_2 / F_1 that are not fixed points
    RationalMap g2 = iterate_map(f, 2, cfg);
    IntPoly f2 = fixed_point_poly_raw(g2).primitive_normalized();
    auto quot = f2.divided_exactly_by(d1.F);
    IntPoly phi = quot ? quot->primitive_normalized() : f2;
    if (phi.degree() < 1) return std::nullopt;
    std::vector<IV> used;
    for (const auto &alpha : isolate_real_roots(phi)) {
        if (is_root_of(alpha, d1.F)) continue;  // fixed point remnants
        bool seen = false;
        for (const auto &u : used)
            if (compare_points(alpha, u) == 0) seen = true;
        if (seen) continue;
        // partner f(alpha): infinity or another root of phi
        IV partner = IV::infinity();
        if (!is_root_of(alpha, f.den())) {
            bool found = false;
            for (const auto &beta : isolate_real_roots(phi)) {
                if (compare_image_to_point(f, alpha, beta) == 0) {
                    partner = beta;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::logic_error("2-cycle partner not found");
        }
        used.push_back(partner);
        MultiplierClass c = classify_multiplier_of_iterate(g2, alpha, cfg);
        if (nonrepelling(c.verdict)) return CycleWitness{{alpha, partner}, c};
    }
    return std::nullopt;
}

namespace {

struct CorSetup {
    std::vector<IV> crit;     // critical points, ascending
    std::vector<IV> fixed;    // real fixed points, ascending
    std::optional<std::string> fail;
};

CorSetup cor_setup(const RationalMap &f, const RunConfig &cfg) {
    CorSetup s;
    IntPoly dp = f.num().derivative();
    if (!squarefree_exact(dp)) {
        s.fail = "critical zeros not simple";
        return s;
    }
    if (!all_roots_real(dp)) {
        s.fail = "critical zeros not all real";
        return s;
    }
    s.crit = isolate_real_roots(dp);
    s.fixed = fixed_point_data(f, 1, cfg).roots;
    if (s.fixed.empty()) s.fail = "no real fixed points";
    return s;
}

Certificate finish_with_invariance(Certificate out, const RationalMap &f,
                                   const IV &x0, const IV &x1) {
    CircleSet S = CircleSet::from_arcs({{x0, x1}});
    if (!is_backward_invariant(f, S)) {
        out.verdict = Verdict::Inconclusive;
        out.note = "interval not backward invariant";
        return out;
    }
    out.verdict = Verdict::CertifiedInRd;
    out.S = std::move(S);
    out.x0 = x0;
    out.x1 = x1;
    return out;
}

}  // namespace

Certificate check_cor_odd(const RationalMap &f, const RunConfig &cfg) {
    if (!f.is_polynomial())
        throw std::invalid_argument("check_cor_odd: not a polynomial map");
    int n = f.num().degree();
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("check_cor_odd: degree must be odd >= 3");
    if (sign(f.num().lead()) <= 0)
        throw std::invalid_argument("check_cor_odd: leading coefficient not positive");
    Certificate out = base_cert(f, Criterion::CorOdd);
    CorSetup s = cor_setup(f, cfg);
    if (s.fail) {
        out.note = s.fail;
        return out;
    }
    const int m2 = n - 1;  // number of critical points z_1 < ... < z_{2m}
    if (static_cast<int>(s.crit.size()) != m2) {
        out.note = "critical zeros not all real";
        return out;
    }
    IV x0 = s.fixed.front(), x1 = s.fixed.back();
    if (compare_points(x0, s.crit.front()) >= 0) {
        out.note = "no fixed point below the critical points";
        return out;
    }
    if (compare_points(x1, s.crit.back()) <= 0) {
        out.note = "no fixed point above the critical points";
        return out;
    }
    // f(z_{2i}) <= x0 (1-based even indices), f(z_{2i-1}) >= x1 (odd)
    for (int j = 0; j < m2; ++j) {
        if (j % 2 == 1 && compare_image_to_point(f, s.crit[j], x0) > 0) {
            out.note = "critical value above x0";
            return out;
        }
        if (j % 2 == 0 && compare_image_to_point(f, s.crit[j], x1) < 0) {
            out.note = "critical value below x1";
            return out;
        }
    }
    return finish_with_invariance(std::move(out), f, x0, x1);
}

Certificate check_cor_even(const RationalMap &f, const RunConfig &cfg) {
    if (!f.is_polynomial())
        throw std::invalid_argument("check_cor_even: not a polynomial map");
    int n = f.num().degree();
    if (n < 2 || n % 2 == 1)
        throw std::invalid_argument("check_cor_even: degree must be even >= 2");
    if (sign(f.num().lead()) <= 0)
        throw std::invalid_argument("check_cor_even: leading coefficient not positive");
    Certificate out = base_cert(f, Criterion::CorEven);
    CorSetup s = cor_setup(f, cfg);
    if (s.fail) {
        out.note = s.fail;
        return out;
    }
    if (static_cast<int>(s.crit.size()) != n - 1) {
        out.note = "critical zeros not all real";
        return out;
    }
    IV x1 = s.fixed.back();
    if (compare_points(x1, s.crit.back()) <= 0) {
        out.note = "no fixed point above the critical points";
        return out;
    }
    // maxima (1-based even indices) must map at or above x1
    for (std::size_t j = 1; j < s.crit.size(); j += 2) {
        if (compare_image_to_point(f, s.crit[j], x1) < 0) {
            out.note = "critical value below x1";
            return out;
        }
    }
    // x0 < z_1 with every minimum value at or below x0, then the direct
    // preimage check; the hypotheses do not pin x0, so search candidates
    auto x0_admissible = [&](const IV &x0) {
        if (compare_points(x0, s.crit.front()) >= 0) return false;
        for (std::size_t j = 0; j < s.crit.size(); j += 2)
            if (compare_image_to_point(f, s.crit[j], x0) > 0) return false;
        return true;
    };
    std::vector<IV> candidates;
    candidates.push_back(s.fixed.front());
    // leftmost preimage of x1: the natural left edge of a backward-invariant
    // interval ending at the fixed point x1 (for H4 this is -x1, which the
    // hypotheses never name but the invariance check demands)
    {
        IntPoly h;
        if (auto v = exact_value(x1))
            h = f.num() * v->get_den() - f.den() * v->get_num();
        else
            h = poly_compose(*x1.witness, f.num(), f.den()).num;
        if (h.degree() >= 1) {
            for (const auto &r : isolate_real_roots(h)) {
                if (compare_image_to_point(f, r, x1) == 0) {
                    candidates.push_back(snap_to_rational(r));
                    break;
                }
            }
        }
    }
    // exact extreme critical value, when it is rational: either the critical
    // point is rational, or f is constant on the whole witness factor
    // (p mod witness constant over Q)
    {
        auto rational_value_at = [&f](const IV &z) -> std::optional<Rat> {
            if (auto ex = exact_value(z))
                return f.num().eval(*ex) / f.den().eval(*ex);
            const IntPoly &w = *z.witness;
            std::vector<Rat> rem(f.num().coeffs().begin(),
                                 f.num().coeffs().end());
            while (static_cast<int>(rem.size()) - 1 >= w.degree()) {
                Rat top = rem.back() / Rat(w.lead());
                std::size_t off = rem.size() - 1 - w.degree();
                for (int i = 0; i < w.degree(); ++i)
                    rem[off + i] -= top * Rat(w.coeff(i));
                rem.pop_back();
                while (!rem.empty() && rem.back() == 0) rem.pop_back();
            }
            if (rem.size() > 1) return std::nullopt;
            Rat r0 = rem.empty() ? Rat(0) : rem[0];
            return r0 / Rat(f.den().coeff(0));
        };
        std::optional<Rat> best;
        for (std::size_t j = 0; j < s.crit.size(); j += 2) {
            auto v = rational_value_at(s.crit[j]);
            if (v && (!best || *v > *best)) best = *v;  // x0 >= all minima
        }
        if (best) candidates.push_back(IV::exact(*best));
    }
    for (const auto &x0 : candidates)
        if (x0_admissible(x0)) {
            Certificate attempt =
                finish_with_invariance(out, f, x0, x1);
            if (attempt.verdict == Verdict::CertifiedInRd) return attempt;
        }
    // dyadic sweep between the largest minimum value and z_1
    {
        IV zl = refine_interval(s.crit.front(), make_rat(Int(1), Int(1024)));
        Rat top = zl.lo;
        Rat bound = -root_bound_pow2(f.num());
        Rat step(1);
        for (int it = 0; it < cfg.refine_depth && top - step >= bound; ++it) {
            IV x0 = IV::exact(top - step);
            if (x0_admissible(x0)) {
                Certificate attempt = finish_with_invariance(out, f, x0, x1);
                if (attempt.verdict == Verdict::CertifiedInRd) return attempt;
            }
            step *= 2;
        }
    }
    out.note = "no admissible x0 found";
    return out;
}

Certificate certify_main(const RationalMap &f, const CircleSet &S,
                         const RunConfig &cfg) {
    if (f.degree() < 2)
        throw std::invalid_argument("certify_main: degree must be >= 2");
    if (S.is_empty())
        throw std::invalid_argument("certify_main: S must be nonempty");
    Certificate out = base_cert(f, Criterion::ThmMain2);
    auto cyc = find_nonrepelling_short_cycle(f, cfg);
    if (!cyc) {
        out.note = "no nonrepelling cycle of length at most 2";
        return out;
    }
    auto w = contains_nonattracting_fixed_point(f, S, cfg);
    if (!w) {
        out.note = "no nonattracting fixed point in S";
        return out;
    }
    if (!is_backward_invariant(f, S)) {
        out.note = "S not backward invariant";
        return out;
    }
    out.verdict = Verdict::CertifiedInRd;
    out.S = S;
    out.cycle = std::move(cyc);
    out.nonattracting_fixed_point = std::move(w);
    return out;
}

}  // namespace rpp
