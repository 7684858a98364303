#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpp/circleset.hpp"
#include "rpp/ratmap.hpp"

namespace rpp {

enum class Verdict {
    CertifiedInRd,        // all periodic points are real, certified
    CertifiedNotInRd,     // a concrete k with nonreal solutions of f^k(z)=z
    BoundaryIndifferent,  // real fibered with an indifferent fixed point
    Inconclusive
};

enum class Criterion { ThmMain2, ThmRf, CorOdd, CorEven, Scan };

const char *verdict_name(Verdict v);
const char *criterion_name(Criterion c);

struct CycleWitness {
    std::vector<IsolatingInterval> points;  // length 1 or 2; may contain inf
    MultiplierClass cls;
};

struct Certificate {
    explicit Certificate(RationalMap s) : subject(std::move(s)) {}

    RationalMap subject;
    Verdict verdict = Verdict::Inconclusive;
    Criterion criterion = Criterion::Scan;
    int k_scanned = 0;

    std::optional<CircleSet> S;
    std::optional<CycleWitness> cycle;
    std::optional<NonattractingWitness> nonattracting_fixed_point;
    std::optional<IsolatingInterval> x0, x1;
    std::optional<int> first_nonreal_k;
    std::optional<std::string> note;  // failed hypothesis clause or budget info
    bool budget_exhausted = false;
};

/// Scans k = 1..K; certified_not_in_Rd at the minimal k with a nonreal
/// solution of f^k(z) = z, otherwise inconclusive with k_scanned = K.
/// Budget exhaustion is reported inside the certificate.
Certificate scan_real_periodic(const RationalMap &f, int K,
                               const RunConfig &cfg = global_config());

/// p and q with all-real, simple, strictly interlacing zeros and
/// |deg p - deg q| <= 1.
bool is_real_fibered(const RationalMap &f);

/// Membership test for real fibered maps: decided entirely by whether f^2
/// has only real fixed points; an exactly indifferent fixed point of f^2
/// puts f on the boundary.
Certificate certify_rf(const RationalMap &f,
                       const RunConfig &cfg = global_config());

/// First nonrepelling real cycle of length at most 2, in deterministic
/// order: fixed points by position (infinity last), then 2-cycles by their
/// smaller element.
std::optional<CycleWitness> find_nonrepelling_short_cycle(
    const RationalMap &f, const RunConfig &cfg = global_config());

/// Odd-degree polynomial criterion: critical points all real and simple,
/// extreme fixed points x0, x1 outside them, critical values beyond x0/x1,
/// plus the direct check that [x0, x1] is backward invariant.
Certificate check_cor_odd(const RationalMap &f,
                          const RunConfig &cfg = global_config());

/// Even-degree polynomial criterion; x0 is searched (least fixed point,
/// then the exact extreme critical value, then a dyadic sweep), and every
/// candidate is validated by the direct preimage check.
Certificate check_cor_even(const RationalMap &f,
                           const RunConfig &cfg = global_config());

/// Full certificate from a candidate backward-invariant set: a nonrepelling
/// short cycle exists, S holds a nonattracting fixed point, and
/// f^{-1}(S) is contained in S.
Certificate certify_main(const RationalMap &f, const CircleSet &S,
                         const RunConfig &cfg = global_config());

}  // namespace rpp
