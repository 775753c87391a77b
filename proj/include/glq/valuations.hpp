#pragma once

// Exact l-adic valuations: Legendre's formula, multiplicative orders and the
// lifting-the-exponent identities for v(q^n - 1) and products of such terms.
// l = 2 and odd l take separate paths; the closed forms differ.

#include "glq/integers.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace glq {

/// An l-adic valuation: an integer, or +infinity for the valuation of 0.
/// Valuations of integers are nonnegative; differences (valuations of
/// rationals) may be negative. Infinity absorbs addition; subtracting an
/// infinite valuation is a domain error.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::int64_t v) : value_(v) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr std::int64_t value() const {
        if (infinite_) throw std::domain_error("value() of infinite valuation");
        return value_;
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }
    friend constexpr Valuation operator-(Valuation a, Valuation b) {
        if (b.infinite_) throw std::domain_error("subtracting an infinite valuation");
        if (a.infinite_) return infinity();
        return Valuation(a.value_ - b.value_);
    }
    Valuation& operator+=(Valuation o) { return *this = *this + o; }
    Valuation& operator-=(Valuation o) { return *this = *this - o; }

    friend constexpr bool operator==(Valuation a, Valuation b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
    friend std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

namespace detail {
inline void require_prime(std::int64_t ell) {
    if (!is_prime(ell)) throw std::invalid_argument(std::to_string(ell) + " is not prime");
}
}  // namespace detail

inline Valuation v_int(std::int64_t x, std::int64_t ell) {
    detail::require_prime(ell);
    if (x == 0) throw std::domain_error("v_int: valuation of zero");
    std::int64_t r = 0;
    while (x % ell == 0) {
        x /= ell;
        ++r;
    }
    return Valuation(r);
}

inline Valuation v_int(BigInt x, std::int64_t ell) {
    detail::require_prime(ell);
    if (x == 0) throw std::domain_error("v_int: valuation of zero");
    std::int64_t r = 0;
    while (true) {
        BigInt quot;
        BigInt rem;
        boost::multiprecision::divide_qr(x, BigInt(ell), quot, rem);
        if (rem != 0) break;
        x = std::move(quot);
        ++r;
    }
    return Valuation(r);
}

/// Legendre: sum_{i>=1} floor(n / ell^i).
inline Valuation v_factorial(std::int64_t n, std::int64_t ell) {
    detail::require_prime(ell);
    if (n < 0) throw std::invalid_argument("v_factorial: n must be nonnegative");
    std::int64_t r = 0;
    while (n > 0) {
        n /= ell;
        r += n;
    }
    return Valuation(r);
}

/// Least t >= 1 with q^t = 1 mod ell.
inline std::int64_t mult_order(std::int64_t q, std::int64_t ell) {
    detail::require_prime(ell);
    const std::int64_t base = ((q % ell) + ell) % ell;
    if (base == 0) throw std::invalid_argument("mult_order: ell divides q");
    std::int64_t acc = base;
    std::int64_t t = 1;
    while (acc != 1) {
        acc = acc * base % ell;
        ++t;
    }
    return t;
}

/// v_2(a^n - 1) for odd a >= 3.
inline Valuation v2_pow_minus_one(std::int64_t a, std::int64_t n) {
    if (a % 2 == 0) throw std::invalid_argument("v2_pow_minus_one: a must be odd");
    if (a < 3) throw std::invalid_argument("v2_pow_minus_one: a must be at least 3");
    if (n < 1) throw std::invalid_argument("v2_pow_minus_one: n must be positive");
    if (n % 2 != 0) return v_int(a - 1, 2);
    return v_int(a - 1, 2) + v_int(a + 1, 2) + v_int(n, 2) - Valuation(1);
}

/// (ell, q, t = ord_ell(q), tau = v_ell(q^t - 1)) for a prime ell not dividing q.
class ValuationContext {
public:
    ValuationContext(std::int64_t ell, std::int64_t q) : ell_(ell), q_(q) {
        detail::require_prime(ell);
        if (q < 2) throw std::invalid_argument("ValuationContext: q must be at least 2");
        if (q % ell == 0) throw std::invalid_argument("ValuationContext: ell divides q");
        t_ = mult_order(q, ell);
        tau_ = v_int(pow_big(BigInt(q), static_cast<std::uint64_t>(t_)) - 1, ell).value();
    }

    std::int64_t ell() const noexcept { return ell_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t t() const noexcept { return t_; }
    std::int64_t tau() const noexcept { return tau_; }
    bool odd() const noexcept { return ell_ != 2; }

private:
    std::int64_t ell_;
    std::int64_t q_;
    std::int64_t t_ = 1;
    std::int64_t tau_ = 1;
};

/// v_ell(q^n - 1) for odd ell: v(n/t) + tau when t | n, else 0.
inline Valuation vl_pow_minus_one(const ValuationContext& ctx, std::int64_t n) {
    if (!ctx.odd()) throw std::invalid_argument("vl_pow_minus_one: ell = 2 goes through v2_pow_minus_one");
    if (n < 1) throw std::invalid_argument("vl_pow_minus_one: n must be positive");
    if (n % ctx.t() != 0) return Valuation(0);
    return v_int(n / ctx.t(), ctx.ell()) + Valuation(ctx.tau());
}

/// v_ell(q^n - 1) for any ell coprime to q.
inline Valuation v_pow_minus_one(const ValuationContext& ctx, std::int64_t n) {
    return ctx.odd() ? vl_pow_minus_one(ctx, n) : v2_pow_minus_one(ctx.q(), n);
}

/// v_ell(prod_{i=1}^{A} (q^{B i} - 1)) for odd ell, with h = gcd(B, t):
/// floor(A h / t) * (v(B/h) + tau) + v(floor(A h / t)!).
inline Valuation v_product_geom(const ValuationContext& ctx, std::int64_t A, std::int64_t B) {
    if (!ctx.odd()) throw std::invalid_argument("v_product_geom: requires odd ell");
    if (A < 1 || B < 1) throw std::invalid_argument("v_product_geom: A and B must be positive");
    const std::int64_t h = gcd_i64(B, ctx.t());
    const std::int64_t m = A * h / ctx.t();
    if (m == 0) return Valuation(0);
    return Valuation(m * (v_int(B / h, ctx.ell()).value() + ctx.tau())) + v_factorial(m, ctx.ell());
}

/// v_ell(psi_n(q)) = v_ell(prod_{i=1}^n (q^i - 1)) by LTE, either parity of ell.
inline Valuation v_psi(const ValuationContext& ctx, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("v_psi: n must be nonnegative");
    if (n == 0) return Valuation(0);
    if (ctx.odd()) return v_product_geom(ctx, n, 1);
    // n v(q-1) + floor(n/2) v((q+1)/2) + sum_{i even <= n} v(i)
    const std::int64_t q = ctx.q();
    const std::int64_t half = n / 2;
    return Valuation(n * v_int(q - 1, 2).value() + half * v_int((q + 1) / 2, 2).value() + half) +
           v_factorial(half, 2);
}

/// floor(s)! / floor(s - r)! for rationals 0 < r < s.
struct FallingFactorialValuation {
    Valuation value;
    bool within_bound = false;  // value <= ceil(r) + log_ell(s), decided exactly
};

inline FallingFactorialValuation v_falling_factorial(const BigRational& s, const BigRational& r, std::int64_t ell) {
    detail::require_prime(ell);
    if (!(r > 0) || !(r < s)) throw std::invalid_argument("v_falling_factorial: requires 0 < r < s");
    auto floor_of = [](const BigRational& x) {
        // x > 0 here, so truncation toward zero is the floor.
        return static_cast<std::int64_t>(BigInt(numerator(x) / denominator(x)));
    };
    const std::int64_t top = floor_of(s);
    const std::int64_t bottom = floor_of(s - r);
    const Valuation v = v_factorial(top, ell) - v_factorial(bottom, ell);

    std::int64_t ceil_r = floor_of(r);
    if (BigRational(ceil_r) != r) ++ceil_r;
    // v <= ceil(r) + log_ell(s)  <=>  ell^(v - ceil(r)) <= s
    const std::int64_t k = v.value() - ceil_r;
    bool ok = false;
    if (k >= 0) {
        ok = BigRational(pow_big(BigInt(ell), static_cast<std::uint64_t>(k))) <= s;
    } else {
        ok = s * BigRational(pow_big(BigInt(ell), static_cast<std::uint64_t>(-k))) >= 1;
    }
    return {v, ok};
}

}  // namespace glq
