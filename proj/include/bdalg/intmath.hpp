#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace bdalg {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit integer overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit integer overflow");
    return r;
}

// mathematical mod, result in [0, m)
inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    return checked_mul(a / std::gcd(a, b), b);
}

struct Bezout {
    std::int64_t gcd, x, y; // x·a + y·b = gcd
};

inline Bezout extended_gcd(std::int64_t a, std::int64_t b)
{
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r, r = tmp;
        tmp = old_s - q * s;
        old_s = s, s = tmp;
        tmp = old_t - q * t;
        old_t = t, t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

} // namespace bdalg
