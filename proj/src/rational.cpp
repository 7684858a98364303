#include "rpp/rational.hpp"

#include <stdexcept>

namespace rpp {

Rat make_rat(const Int &num, const Int &den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat pow2(long e) {
    Rat r;
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    return r;
}

std::optional<Rat> parse_rational(const std::string &text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) return std::nullopt;
    std::string s = text.substr(begin, end - begin + 1);
    if (s.empty()) return std::nullopt;

    std::string num_s = s, den_s;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num_s = s.substr(0, slash);
        den_s = s.substr(slash + 1);
        if (num_s.empty() || den_s.empty()) return std::nullopt;
    }

    auto valid = [](const std::string &t) {
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!valid(num_s)) return std::nullopt;

    Int num(num_s);
    Int den(1);
    if (!den_s.empty()) {
        if (!valid(den_s)) return std::nullopt;
        den = Int(den_s);
        if (den == 0) return std::nullopt;
    }
    return make_rat(num, den);
}

std::string to_string(const Rat &x) { return x.get_str(); }
std::string to_string(const Int &x) { return x.get_str(); }

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit && span != 0);
    return lo + static_cast<std::int64_t>(v % span);
}

}  // namespace rpp
