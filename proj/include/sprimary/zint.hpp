#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "sprimary/util.hpp"

namespace sprimary {

/// Integer payload type. 64-bit with overflow-checked products; every
/// workload here (moduli up to a few thousand, witnesses a few digits
/// larger) fits with ample headroom, and an overflow raises instead of
/// wrapping.
using Int = long long;

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ValidationError("integer overflow in product");
    return r;
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ValidationError("integer overflow in sum");
    return r;
}

inline Int checked_pow(Int a, long long e) {
    if (e < 0) throw ValidationError("negative exponent");
    Int r = 1;
    while (e > 0) {
        if (e & 1) r = checked_mul(r, a);
        e >>= 1;
        if (e) a = checked_mul(a, a);
    }
    return r;
}

inline Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm_int(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int g = std::gcd(a, b);
    return checked_mul(std::abs(a) / g, std::abs(b));
}

/// (prime, exponent) pairs, primes ascending. factorize(1) = {}.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 0) n = -n;
    if (n == 0) throw ValidationError("cannot factor 0");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime_int(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Product of the distinct primes of n; kernel(0) = 0, kernel(1) = 1.
inline Int squarefree_kernel(Int n) {
    if (n == 0) return 0;
    Int r = 1;
    for (auto& [p, e] : factorize(n)) r *= p;
    return r;
}

inline bool is_prime_power(Int n) {
    if (n < 2) return false;
    return factorize(n).size() == 1;
}

inline Int mod_nonneg(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace sprimary
