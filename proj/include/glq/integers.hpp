#pragma once

// Exact integer helpers shared by every module: the big-integer alias,
// small-prime arithmetic and prime-power decomposition.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A mathematical identity the library relies on failed to hold; always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline BigInt pow_big(const BigInt& base, std::uint64_t exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

inline BigInt factorial_big(std::int64_t n) {
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

constexpr bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

constexpr std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const std::int64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Distinct prime divisors of n > 0, ascending, each paired with its exponent.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// q = p^e with p prime.
struct PrimePower {
    std::int64_t p = 0;
    int e = 0;
};

inline std::optional<PrimePower> as_prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    const auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return PrimePower{f.front().first, f.front().second};
}

inline PrimePower require_prime_power(std::int64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return *pp;
}

inline bool is_prime_power(std::int64_t q) { return as_prime_power(q).has_value(); }

}  // namespace glq
