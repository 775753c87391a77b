#pragma once

// Self-check suites behind `glq verify`. Each suite compares a production
// path against a slower independent computation and stops at the first
// disagreement.

#include "glq/chardeg.hpp"
#include "glq/integers.hpp"
#include "glq/labels.hpp"
#include "glq/partitions.hpp"
#include "glq/statistics.hpp"
#include "glq/valuations.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace glq {

struct VerifyOutcome {
    bool ok = true;
    long long checks = 0;
    std::string first_failure;
};

namespace detail {

class Checker {
public:
    bool check(bool cond, const std::function<std::string()>& describe) {
        ++out_.checks;
        if (!cond && out_.ok) {
            out_.ok = false;
            out_.first_failure = describe();
        }
        return cond;
    }
    bool failed() const { return !out_.ok; }
    VerifyOutcome outcome() const { return out_; }

private:
    VerifyOutcome out_;
};

// p(n) by Euler's pentagonal recurrence.
inline std::vector<long long> partition_numbers(int max_n) {
    std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        long long s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = s;
    }
    return p;
}

}  // namespace detail

inline VerifyOutcome verify_partitions(int max_n = 12, int max_t = 5) {
    detail::Checker c;
    const auto pn = detail::partition_numbers(max_n);
    for (int n = 0; n <= max_n && !c.failed(); ++n) {
        const auto parts = gen_partitions(n);
        c.check(static_cast<long long>(parts.size()) == pn[static_cast<std::size_t>(n)],
                [&] { return "p(" + std::to_string(n) + ") mismatch"; });
        BigInt sum_sq = 0;
        for (const auto& lam : parts) {
            const auto hooks = hook_lengths(lam);
            c.check(static_cast<int>(hooks.size()) == n, [&] { return "hook count of " + lam.to_string(); });
            const BigInt f = sym_degree(lam);
            sum_sq += f * f;
            c.check(f == sym_degree(lam.conjugate()), [&] { return "conjugate degree of " + lam.to_string(); });
            for (int t = 1; t <= max_t; ++t) {
                const CoreQuotient cq = core_quotient(lam, t);
                c.check(from_core_quotient(cq) == lam,
                        [&] { return "round trip " + lam.to_string() + " t=" + std::to_string(t); });
                c.check(is_t_core(cq.core, t), [&] { return "core not a t-core for " + lam.to_string(); });
                c.check(lam.size() == cq.core.size() + t * cq.quotient_size(),
                        [&] { return "size identity for " + lam.to_string(); });
                c.check(count_t_hooks(lam, t) == static_cast<std::size_t>(cq.quotient_size()),
                        [&] { return "t-hook count for " + lam.to_string(); });
                std::vector<int> scaled;
                for (int h : hooks.lengths)
                    if (h % t == 0) scaled.push_back(h / t);
                std::vector<int> joined;
                for (const auto& part : cq.quotient)
                    for (int h : hook_lengths(part).lengths) joined.push_back(h);
                std::sort(joined.begin(), joined.end());
                c.check(scaled == joined, [&] { return "hook correspondence for " + lam.to_string(); });
                int qsum = 0;
                for (int x : qoppa(lam, t)) qsum += x;
                c.check(qsum == n, [&] { return "qoppa sum for " + lam.to_string(); });
            }
        }
        c.check(sum_sq == factorial_big(n), [&] { return "sum of squared degrees != n! at n=" + std::to_string(n); });
    }
    return c.outcome();
}

inline VerifyOutcome verify_valuations() {
    detail::Checker c;
    for (std::int64_t a = 3; a <= 21 && !c.failed(); a += 2) {
        BigInt power = 1;
        for (std::int64_t n = 1; n <= 200; ++n) {
            power *= a;
            c.check(v2_pow_minus_one(a, n) == v_int(power - 1, 2),
                    [&] { return "v2(" + std::to_string(a) + "^" + std::to_string(n) + "-1)"; });
        }
    }
    for (std::int64_t ell : {3, 5, 7, 11, 13}) {
        for (std::int64_t q = 2; q <= 25 && !c.failed(); ++q) {
            if (!is_prime_power(q) || q % ell == 0) continue;
            const ValuationContext ctx(ell, q);
            BigInt power = 1;
            for (std::int64_t n = 1; n <= 200; ++n) {
                power *= q;
                c.check(vl_pow_minus_one(ctx, n) == v_int(power - 1, ell), [&] {
                    return "v" + std::to_string(ell) + "(" + std::to_string(q) + "^" + std::to_string(n) + "-1)";
                });
            }
            for (std::int64_t B = 1; B <= 6; ++B) {
                BigInt prod = 1;
                const BigInt qb = pow_big(BigInt(q), static_cast<std::uint64_t>(B));
                BigInt qbi = 1;
                for (std::int64_t A = 1; A <= 10; ++A) {
                    qbi *= qb;
                    prod *= qbi - 1;
                    c.check(v_product_geom(ctx, A, B) == v_int(prod, ell), [&] {
                        return "product formula ell=" + std::to_string(ell) + " q=" + std::to_string(q) +
                               " A=" + std::to_string(A) + " B=" + std::to_string(B);
                    });
                }
            }
        }
    }
    for (std::int64_t ell : {2, 3, 5, 7}) {
        BigInt fact = 1;
        for (std::int64_t n = 1; n <= 300; ++n) {
            fact *= n;
            c.check(v_factorial(n, ell) == v_int(fact, ell), [&] { return "Legendre at n=" + std::to_string(n); });
        }
    }
    return c.outcome();
}

inline VerifyOutcome verify_degrees(int max_n = 4) {
    detail::Checker c;
    for (std::int64_t q : {2, 3, 4, 5}) {
        const PrimePower pp = require_prime_power(q);
        for (int n = 1; n <= max_n && !c.failed(); ++n) {
            const LabelSpace space(n, q);
            BigInt sum_sq = 0;
            for (std::size_t i = 0; i < space.profiles.size(); ++i) {
                const auto& prof = space.profiles[i];
                const auto f = degree(prof, q);
                sum_sq += space.multiplicity[i] * f.d_mu * f.d_mu;
                for (std::int64_t ell : {2, 3, 5, 7}) {
                    if (ell == pp.p) {
                        c.check(v_p_degree(prof, q) == v_int(f.d_mu, ell),
                                [&] { return "defining-characteristic valuation at " + prof.descriptor(); });
                        continue;
                    }
                    const ValuationContext ctx(ell, q);
                    const Valuation exact = v_int(f.d_mu, ell);
                    c.check(v_degree(prof, ctx) == exact, [&] {
                        return "v" + std::to_string(ell) + " of degree at " + prof.descriptor() +
                               " q=" + std::to_string(q);
                    });
                    if (ell == 2)
                        c.check(v2_lower_bound(prof, q) <= exact, [&] { return "2-adic bound at " + prof.descriptor(); });
                    else
                        c.check(vl_lower_bound(prof, ctx) <= exact,
                                [&] { return "odd-ell bound at " + prof.descriptor(); });
                }
            }
            const BigInt order = pow_big(BigInt(q), static_cast<std::uint64_t>(n * (n - 1) / 2)) * psi(n, q);
            c.check(sum_sq == order,
                    [&] { return "sum of squares != |GL(" + std::to_string(n) + "," + std::to_string(q) + ")|"; });
        }
    }
    return c.outcome();
}

inline VerifyOutcome verify_voltas(int max_n = 6) {
    detail::Checker c;
    for (std::int64_t q : {2, 3, 4, 5}) {
        const PrimePower pp = require_prime_power(q);
        for (int n = 1; n <= max_n && !c.failed(); ++n) {
            try {
                voltas_exact_count(n, q);
                c.check(true, [] { return std::string(); });
            } catch (const InternalError& e) {
                c.check(false, [&] { return std::string(e.what()); });
            }
            c.check(voltas_bound_check(n, q, pp.p), [&] {
                return "p-divisible proportion exceeds 1/q at n=" + std::to_string(n) + " q=" + std::to_string(q);
            });
        }
    }
    return c.outcome();
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"partitions", "valuations", "degrees", "voltas", "all"};
    return names;
}

/// Runs one named suite, or every suite for "all". Throws std::invalid_argument on an unknown name.
inline VerifyOutcome run_verify_suite(const std::string& name) {
    if (name == "partitions") return verify_partitions();
    if (name == "valuations") return verify_valuations();
    if (name == "degrees") return verify_degrees();
    if (name == "voltas") return verify_voltas();
    if (name == "all") {
        VerifyOutcome total;
        for (const auto& suite : {"partitions", "valuations", "degrees", "voltas"}) {
            const VerifyOutcome o = run_verify_suite(suite);
            total.checks += o.checks;
            if (!o.ok) {
                total.ok = false;
                total.first_failure = std::string(suite) + ": " + o.first_failure;
                break;
            }
        }
        return total;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace glq
