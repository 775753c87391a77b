#pragma once

// Degrees of irreducible characters of GL(n, q).
//
// Exact route (big integers):
//   d_mu = psi_n(q) * prod_f H(mu(f), q^{d(f)}),
//   H(lambda, x) = x^{alpha(lambda)} / prod_{hooks h} (x^{|h|} - 1),
// factored as d_mu = a_mu * b_mu with
//   a_mu = psi_n(q) / prod_f psi_{|mu(f)|}(q^{d(f)})   (index factor)
//   b_mu = prod_f d_{mu(f)}(q^{d(f)})                  (unipotent factor).
// Valuation route: the same quotient taken through LTE, no big integers.
// Lower bounds and the divisibility certificate sit on top of the valuation route.

#include "glq/integers.hpp"
#include "glq/labels.hpp"
#include "glq/partitions.hpp"
#include "glq/valuations.hpp"

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace glq {

/// Raised when an exact quotient that must be integral is not.
class IntegralityError : public InternalError {
public:
    using InternalError::InternalError;
};

template <class L>
concept LabelLike = requires(const L& label) {
    { label.components() } -> std::same_as<std::vector<Component>>;
    { label.n() } -> std::convertible_to<int>;
};

struct DegreeFactorization {
    BigInt a_mu;
    BigInt b_mu;
    BigInt d_mu;
};

namespace detail {

inline BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
    BigInt quot;
    BigInt rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0) throw IntegralityError(std::string(what) + " is not integral");
    return quot;
}

}  // namespace detail

/// (q^n - 1)(q^{n-1} - 1)...(q - 1); psi_0 = 1.
inline BigInt psi(std::int64_t n, const BigInt& q) {
    if (n < 0) throw std::invalid_argument("psi: n must be nonnegative");
    BigInt out = 1;
    BigInt qi = 1;
    for (std::int64_t i = 1; i <= n; ++i) {
        qi *= q;
        out *= qi - 1;
    }
    return out;
}

/// Unipotent degree d_lambda(Q) = Q^alpha * psi_{|lambda|}(Q) / prod_h (Q^|h| - 1), for any Q >= 2.
inline BigInt unipotent_degree(const Partition& lambda, const BigInt& Q) {
    if (Q < 2) throw std::invalid_argument("unipotent_degree: Q must be at least 2");
    BigInt den = 1;
    for (int h : hook_lengths(lambda).lengths) den *= pow_big(Q, static_cast<std::uint64_t>(h)) - 1;
    const BigInt num = pow_big(Q, static_cast<std::uint64_t>(alpha(lambda))) * psi(lambda.size(), Q);
    return detail::exact_quotient(num, den, ("unipotent degree of " + lambda.to_string()).c_str());
}

template <LabelLike L>
DegreeFactorization degree(const L& label, std::int64_t q) {
    const BigInt qb = q;
    BigInt index_den = 1;
    BigInt b = 1;
    for (const auto& c : label.components()) {
        const BigInt Q = pow_big(qb, static_cast<std::uint64_t>(c.degree));
        index_den *= psi(c.partition.size(), Q);
        b *= unipotent_degree(c.partition, Q);
    }
    DegreeFactorization f;
    f.a_mu = detail::exact_quotient(psi(label.n(), qb), index_den, "index factor a_mu");
    f.b_mu = std::move(b);
    f.d_mu = f.a_mu * f.b_mu;
    return f;
}

/// v_ell of the symmetric-group degree: v(|lambda|!) - sum_h v(|h|).
inline Valuation v_sym_degree(const Partition& lambda, std::int64_t ell) {
    Valuation v = v_factorial(lambda.size(), ell);
    for (int h : hook_lengths(lambda).lengths) v -= v_int(h, ell);
    return v;
}

/// v_ell(d_mu) by LTE alone. The q-power factor contributes nothing since ell does not divide q.
template <LabelLike L>
Valuation v_degree(const L& label, const ValuationContext& ctx) {
    Valuation v = v_psi(ctx, label.n());
    for (const auto& c : label.components())
        for (int h : hook_lengths(c.partition).lengths)
            v -= v_pow_minus_one(ctx, static_cast<std::int64_t>(c.degree) * h);
    return v;
}

/// 2-adic bound for odd q: v(n! / prod_f |mu(f)|!) + sum_f v(f_{mu(f)}).
template <LabelLike L>
Valuation v2_lower_bound(const L& label, std::int64_t q) {
    if (q % 2 == 0) throw std::invalid_argument("v2_lower_bound: q must be odd");
    Valuation v = v_factorial(label.n(), 2);
    for (const auto& c : label.components()) {
        v -= v_factorial(c.partition.size(), 2);
        v += v_sym_degree(c.partition, 2);
    }
    return v;
}

namespace detail {

inline Valuation core_bound_at_order(const Partition& lambda, int t, std::int64_t ell) {
    const CoreQuotient cq = core_quotient(lambda, t);
    Valuation v(cq.core.size() / t);
    for (const auto& part : cq.quotient) v += v_sym_degree(part, ell);
    return v;
}

}  // namespace detail

/// floor(|core_t(lambda)| / t) + sum_i v(f_{lambda^i}), the odd-ell bound for the unipotent degree at Q = q.
inline Valuation unipotent_core_bound(const Partition& lambda, const ValuationContext& ctx) {
    if (!ctx.odd()) throw std::invalid_argument("unipotent_core_bound: requires odd ell");
    return detail::core_bound_at_order(lambda, static_cast<int>(ctx.t()), ctx.ell());
}

/// Odd-ell bound:
/// v(floor(n/t)! / prod_f floor(|mu(f)| h_f / t)!) + sum_f (floor(|core_{t_f} mu(f)|/t_f) + v(f_{quo_{t_f} mu(f)})),
/// h_f = gcd(d(f), t) and t_f = t / h_f, the order of q^{d(f)} mod ell. The unipotent factor at
/// Q = q^{d(f)} is bounded with its own order t_f; using t there overshoots (e.g. 2:(2,1), q = 2, ell = 3).
template <LabelLike L>
Valuation vl_lower_bound(const L& label, const ValuationContext& ctx) {
    if (!ctx.odd()) throw std::invalid_argument("vl_lower_bound: requires odd ell");
    const std::int64_t t = ctx.t();
    Valuation v = v_factorial(label.n() / t, ctx.ell());
    for (const auto& c : label.components()) {
        const std::int64_t h = gcd_i64(c.degree, t);
        v -= v_factorial(c.partition.size() * h / t, ctx.ell());
        v += detail::core_bound_at_order(c.partition, static_cast<int>(t / h), ctx.ell());
    }
    return v;
}

/// Defining characteristic: v_p(d_mu) = e * sum_f d(f) alpha(mu(f)) for q = p^e.
template <LabelLike L>
Valuation v_p_degree(const L& label, std::int64_t q) {
    const PrimePower pp = require_prime_power(q);
    std::int64_t s = 0;
    for (const auto& c : label.components()) s += static_cast<std::int64_t>(c.degree) * alpha(c.partition);
    return Valuation(pp.e * s);
}

/// v_ell(prod_{i=0}^{n0-1} (q^{n-i} - 1)), evaluated term by term.
inline Valuation v_top_block(const ValuationContext& ctx, std::int64_t n, std::int64_t n0) {
    Valuation v(0);
    for (std::int64_t i = 0; i < n0; ++i) v += v_pow_minus_one(ctx, n - i);
    return v;
}

/// One-sided certificate that d divides chi_mu(g) for every g in GL(n0, q) embedded
/// in the top-left block: for each prime ell | d,
///   v_ell(d_mu) - v_ell(prod_{i<n0} (q^{n-i} - 1)) >= v_ell(d).
/// false does not mean d fails to divide the value.
template <LabelLike L>
bool helmet_certificate(const L& label, std::int64_t q, std::int64_t d, std::int64_t n0) {
    require_prime_power(q);
    if (d < 1) throw std::invalid_argument("helmet_certificate: d must be positive");
    if (gcd_i64(d, q) != 1) throw std::invalid_argument("helmet_certificate: d and q must be coprime");
    const int n = label.n();
    if (n0 < 1 || n0 > n) throw std::invalid_argument("helmet_certificate: need 1 <= n0 <= n");
    for (const auto& [ell, exponent] : factorize(d)) {
        const ValuationContext ctx(ell, q);
        if (v_degree(label, ctx) - v_top_block(ctx, n, n0) < Valuation(exponent)) return false;
    }
    return true;
}

}  // namespace glq
