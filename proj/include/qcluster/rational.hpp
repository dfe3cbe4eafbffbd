#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>

#include "qcluster/errors.hpp"

namespace qcluster {

using Rat = boost::rational<std::int64_t>;

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "a", "-a", "a/b".
inline Rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InputError("bad rational '" + s + "'");
    }
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw BudgetError("integer overflow: value exceeds the 64-bit range");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("integer overflow: value exceeds the 64-bit range");
    return r;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

}  // namespace qcluster
