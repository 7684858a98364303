#pragma once

#include <stdexcept>
#include <string>

namespace rpp {

/// Raised whenever a configured resource bound would be exceeded. The tool
/// fails loudly instead of returning a truncated or unverified answer.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string &what) : std::runtime_error(what) {}
};

struct RunConfig {
    long max_iterate_degree = 4096;
    long max_coeff_bits = 1000000;
    int refine_depth = 64;
    int scan_K = 0;  // 0 = derive from max_iterate_degree and the map degree
    int threads = 1;
    std::string output_format = "json";
    bool timings = true;

    /// Largest k with degree^k <= max_iterate_degree (at least 1).
    int derived_scan_K(int degree) const;
    void validate() const;
};

/// Process-wide configuration used by the layers that cannot thread a
/// RunConfig through every call (isolation budgets, refinement depth).
RunConfig &global_config();

}  // namespace rpp
