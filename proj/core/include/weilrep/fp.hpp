#pragma once

#include <cstdint>

#include "weilrep/error.hpp"

namespace weilrep {

// Arithmetic in the prime field F_p for a small runtime prime p.
// Values are kept reduced to [0, p).

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t fp_pow(uint32_t a, uint64_t n, uint32_t p) {
    uint32_t r = 1 % p;
    while (n) {
        if (n & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        n >>= 1;
    }
    return r;
}

inline uint32_t fp_inv(uint32_t a, uint32_t p) {
    require(a % p != 0, "DivisionByZero", "inverse of 0 in F_p");
    // extended Euclid on (a, p)
    int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace weilrep
