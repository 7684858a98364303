#include "rpp/config.hpp"

namespace rpp {

int RunConfig::derived_scan_K(int degree) const {
    if (degree < 2) return 1;
    int k = 0;
    long long cap = max_iterate_degree;
    long long d = 1;
    while (d <= cap / degree) {
        d *= degree;
        ++k;
    }
    return k > 0 ? k : 1;
}

void RunConfig::validate() const {
    if (max_iterate_degree <= 0 || max_coeff_bits <= 0 || refine_depth <= 0 ||
        threads <= 0 || scan_K < 0)
        throw std::invalid_argument("RunConfig: all bounds must be positive");
}

RunConfig &global_config() {
    static RunConfig cfg;
    return cfg;
}

}  // namespace rpp
