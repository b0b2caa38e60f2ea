#ifndef TORICGB_INTS_HPP
#define TORICGB_INTS_HPP

#include <cstdint>
#include <stdexcept>

namespace toricgb {

// All lattice and polynomial arithmetic runs on 64-bit integers; overflow
// is a hard error, never wrap-around.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("toricgb: 64-bit overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("toricgb: 64-bit overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("toricgb: 64-bit overflow in multiplication");
    return r;
}

// Exact binomial coefficient C(n, k).
inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) * i! / i! at each step
    }
    return r;
}

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Thrown when a Groebner computation exceeds its S-pair or wall-clock budget.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace toricgb

#endif
