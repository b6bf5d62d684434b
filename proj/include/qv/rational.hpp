#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qv {

using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& m) : std::runtime_error(m) {}
};

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// 64-bit FNV-1a, used for cache keys.
inline unsigned long long fnv1a(const std::string& s, unsigned long long h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace qv
