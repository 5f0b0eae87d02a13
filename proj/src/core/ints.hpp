#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace esch {

using i64 = std::int64_t;
using i128 = __int128;

// Entries of all user-supplied integer vectors must satisfy |x| < 2^31 so
// that any 2x2 minor fits comfortably in 128-bit intermediates.
inline constexpr i64 kEntryBound = i64{1} << 31;

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }

inline i64 checked_i64(i128 x, const char* what) {
    if (x > INT64_MAX || x < INT64_MIN)
        throw std::overflow_error(std::string(what) + ": value exceeds 64 bits");
    return static_cast<i64>(x);
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

inline i128 gcd_i128(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

// Solves x*a + y*b = gcd(a,b) for nonnegative gcd. Iterative extended Euclid.
struct XgcdResult {
    i64 g;
    i64 x;
    i64 y;
};

inline XgcdResult xgcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_x = 1, x = 0;
    i64 old_y = 0, y = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) { s.push_back(char('0' + int(u % 10))); u /= 10; }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

}  // namespace esch
