#pragma once

// Exact divisibility statistics over the irreducible characters of GL(n, q).
//
// Everything is an exact rational numerator/denominator with denominator
// |X_n|. Labels are traversed by DegreeProfile and weighted by
// profile_multiplicity, since every predicate here sees a label only
// through its profile.

#include "glq/chardeg.hpp"
#include "glq/integers.hpp"
#include "glq/labels.hpp"
#include "glq/valuations.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace glq {

enum class ReportKind { DegreeDivisible, HelmetCertified, PDivisible };

inline std::string to_string(ReportKind kind) {
    switch (kind) {
        case ReportKind::DegreeDivisible: return "degree-divisible";
        case ReportKind::HelmetCertified: return "helmet-certified";
        case ReportKind::PDivisible: return "p-divisible";
    }
    return "?";
}

inline std::optional<ReportKind> parse_report_kind(const std::string& s) {
    if (s == "degree-divisible") return ReportKind::DegreeDivisible;
    if (s == "helmet-certified") return ReportKind::HelmetCertified;
    if (s == "p-divisible") return ReportKind::PDivisible;
    return std::nullopt;
}

/// Renders num/den (0 <= num, den > 0) with `places` decimals, rounding half to even.
inline std::string render_decimal(const BigInt& num, const BigInt& den, int places = 6) {
    if (den <= 0 || num < 0 || places < 0)
        throw std::invalid_argument("render_decimal: need num >= 0, den > 0, places >= 0");
    const BigInt scale = pow_big(BigInt(10), static_cast<std::uint64_t>(places));
    BigInt quot;
    BigInt rem;
    boost::multiprecision::divide_qr(num * scale, den, quot, rem);
    const BigInt twice = 2 * rem;
    if (twice > den || (twice == den && quot % 2 != 0)) quot += 1;
    const BigInt whole = quot / scale;
    if (places == 0) return whole.str();
    std::string frac = BigInt(quot % scale).str();
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    return whole.str() + "." + frac;
}

struct ProportionReport {
    ReportKind kind = ReportKind::DegreeDivisible;
    int n = 0;
    std::int64_t q = 0;
    std::int64_t d = 1;
    std::int64_t n0 = 0;  // 0 for kinds that do not depend on n0
    BigInt numerator = 0;
    BigInt denominator = 1;

    std::string decimal(int places = 6) const { return render_decimal(numerator, denominator, places); }

    /// numerator/denominator <= num/den as exact rationals.
    bool at_most(const BigInt& num, const BigInt& den) const { return numerator * den <= num * denominator; }

    friend bool operator==(const ProportionReport&, const ProportionReport&) = default;
};

/// Profiles of X_n with their multiplicities, built once per (n, q).
struct LabelSpace {
    int n = 0;
    std::int64_t q = 0;
    std::vector<DegreeProfile> profiles;
    std::vector<BigInt> multiplicity;
    BigInt total = 0;

    LabelSpace(int n_, std::int64_t q_) : n(n_), q(q_), profiles(enumerate_profiles(n_, q_)) {
        multiplicity.reserve(profiles.size());
        for (const auto& p : profiles) {
            multiplicity.push_back(profile_multiplicity(p, q));
            total += multiplicity.back();
        }
    }

    /// Weighted count of labels whose profile satisfies pred.
    BigInt count_if(const std::function<bool(const DegreeProfile&)>& pred) const {
        BigInt c = 0;
        for (std::size_t i = 0; i < profiles.size(); ++i)
            if (pred(profiles[i])) c += multiplicity[i];
        return c;
    }
};

namespace detail {

inline void require_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
}

/// True iff d | d_mu, decided prime by prime through valuations.
inline bool degree_divisible(const DegreeProfile& profile, std::int64_t q,
                             const std::vector<std::pair<ValuationContext, int>>& coprime_parts,
                             int p_exponent) {
    if (p_exponent > 0 && v_p_degree(profile, q) < Valuation(p_exponent)) return false;
    for (const auto& [ctx, e] : coprime_parts)
        if (v_degree(profile, ctx) < Valuation(e)) return false;
    return true;
}

}  // namespace detail

inline ProportionReport proportion_degree_divisible(const LabelSpace& space, std::int64_t d) {
    detail::require_n(space.n);
    if (d < 1) throw std::invalid_argument("d must be positive");
    const PrimePower pp = require_prime_power(space.q);
    std::vector<std::pair<ValuationContext, int>> coprime_parts;
    int p_exponent = 0;
    for (const auto& [ell, e] : factorize(d)) {
        if (ell == pp.p)
            p_exponent = e;
        else
            coprime_parts.emplace_back(ValuationContext(ell, space.q), e);
    }
    ProportionReport r;
    r.kind = ReportKind::DegreeDivisible;
    r.n = space.n;
    r.q = space.q;
    r.d = d;
    r.denominator = space.total;
    r.numerator = space.count_if([&](const DegreeProfile& prof) {
        return detail::degree_divisible(prof, space.q, coprime_parts, p_exponent);
    });
    return r;
}

inline ProportionReport proportion_degree_divisible(int n, std::int64_t q, std::int64_t d) {
    detail::require_n(n);
    return proportion_degree_divisible(LabelSpace(n, q), d);
}

/// Proportion of labels with p | d_mu, q = p^e.
inline ProportionReport proportion_p_divisible(const LabelSpace& space) {
    const PrimePower pp = require_prime_power(space.q);
    ProportionReport r = proportion_degree_divisible(space, pp.p);
    r.kind = ReportKind::PDivisible;
    return r;
}

/// Lower bound on #{mu : d | chi_mu(g)} / |X_n| valid for every g in GL(n0, q).
inline ProportionReport proportion_helmet_certified(const LabelSpace& space, std::int64_t d, std::int64_t n0) {
    detail::require_n(space.n);
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (gcd_i64(d, space.q) != 1) throw std::invalid_argument("helmet certificate needs gcd(d, q) = 1");
    if (n0 < 1 || n0 > space.n) throw std::invalid_argument("helmet certificate needs 1 <= n0 <= n");
    ProportionReport r;
    r.kind = ReportKind::HelmetCertified;
    r.n = space.n;
    r.q = space.q;
    r.d = d;
    r.n0 = n0;
    r.denominator = space.total;
    r.numerator =
        space.count_if([&](const DegreeProfile& prof) { return helmet_certificate(prof, space.q, d, n0); });
    return r;
}

inline ProportionReport proportion_helmet_certified(int n, std::int64_t q, std::int64_t d, std::int64_t n0) {
    detail::require_n(n);
    return proportion_helmet_certified(LabelSpace(n, q), d, n0);
}

struct VoltasCount {
    BigInt count_not_p_divisible;
    BigInt expected;  // q^n - q^{n-1}
};

/// Counts mu with p not dividing d_mu; throws InternalError unless it equals q^n - q^{n-1}.
inline VoltasCount voltas_exact_count(int n, std::int64_t q) {
    detail::require_n(n);
    const LabelSpace space(n, q);
    VoltasCount out;
    out.count_not_p_divisible =
        space.count_if([&](const DegreeProfile& prof) { return v_p_degree(prof, q) == Valuation(0); });
    out.expected = pow_big(BigInt(q), static_cast<std::uint64_t>(n)) - pow_big(BigInt(q), static_cast<std::uint64_t>(n - 1));
    if (out.count_not_p_divisible != out.expected)
        throw InternalError("voltas count mismatch at n=" + std::to_string(n) + " q=" + std::to_string(q));
    return out;
}

/// True iff #{mu : d | d_mu} / |X_n| <= 1/q. Requires gcd(d, q) > 1.
inline bool voltas_bound_check(int n, std::int64_t q, std::int64_t d) {
    if (gcd_i64(d, q) == 1) throw std::invalid_argument("voltas_bound_check needs gcd(d, q) > 1");
    const ProportionReport r = proportion_degree_divisible(n, q, d);
    return r.at_most(1, q);
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepGrid {
    std::vector<std::int64_t> q_list;
    std::vector<std::int64_t> d_list;
    std::vector<int> n_list;
    std::vector<std::int64_t> n0_list;
    /// Empty: helmet-certified when gcd(d, q) = 1, degree-divisible otherwise.
    std::vector<ReportKind> kinds;
};

struct SweepError {
    ReportKind kind;
    int n;
    std::int64_t q;
    std::int64_t d;
    std::int64_t n0;
    std::string message;
    friend bool operator==(const SweepError&, const SweepError&) = default;
};

struct SweepTable {
    std::vector<ProportionReport> rows;
    std::vector<SweepError> errors;
    friend bool operator==(const SweepTable&, const SweepTable&) = default;
};

namespace detail {

// (q, d, n0, n, kind): the row order of a sweep table.
using CellKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, int, ReportKind>;

inline std::vector<CellKey> sweep_cells(const SweepGrid& grid) {
    std::set<CellKey> cells;
    for (std::int64_t q : grid.q_list) {
        const auto pp = as_prime_power(q);
        for (std::int64_t d : grid.d_list) {
            std::vector<ReportKind> kinds = grid.kinds;
            if (kinds.empty())
                kinds.push_back(gcd_i64(d, q) == 1 ? ReportKind::HelmetCertified : ReportKind::DegreeDivisible);
            for (ReportKind kind : kinds) {
                for (int n : grid.n_list) {
                    if (kind == ReportKind::HelmetCertified) {
                        for (std::int64_t n0 : grid.n0_list) cells.emplace(q, d, n0, n, kind);
                    } else if (kind == ReportKind::PDivisible) {
                        cells.emplace(q, pp ? pp->p : d, 0, n, kind);
                    } else {
                        cells.emplace(q, d, 0, n, kind);
                    }
                }
            }
        }
    }
    return {cells.begin(), cells.end()};
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex failure_lock;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                const std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Evaluates every cell of the grid. Rows are ordered by (q, d, n0, n, kind);
/// a failing cell is recorded in `errors` and the sweep continues.
inline SweepTable sweep(const SweepGrid& grid, unsigned threads = 1) {
    const std::vector<detail::CellKey> cells = detail::sweep_cells(grid);

    std::vector<std::pair<int, std::int64_t>> space_keys;
    for (const auto& [q, d, n0, n, kind] : cells) space_keys.emplace_back(n, q);
    std::sort(space_keys.begin(), space_keys.end());
    space_keys.erase(std::unique(space_keys.begin(), space_keys.end()), space_keys.end());

    std::vector<std::optional<LabelSpace>> spaces(space_keys.size());
    std::vector<std::string> space_errors(space_keys.size());
    detail::parallel_for(space_keys.size(), threads, [&](std::size_t i) {
        try {
            detail::require_n(space_keys[i].first);
            spaces[i].emplace(space_keys[i].first, space_keys[i].second);
        } catch (const std::invalid_argument& e) {
            space_errors[i] = e.what();
        }
    });

    std::vector<std::optional<ProportionReport>> results(cells.size());
    std::vector<std::string> messages(cells.size());
    detail::parallel_for(cells.size(), threads, [&](std::size_t i) {
        const auto& [q, d, n0, n, kind] = cells[i];
        const auto at = std::lower_bound(space_keys.begin(), space_keys.end(), std::make_pair(n, q));
        const auto idx = static_cast<std::size_t>(at - space_keys.begin());
        if (!spaces[idx]) {
            messages[i] = space_errors[idx];
            return;
        }
        try {
            switch (kind) {
                case ReportKind::DegreeDivisible: results[i] = proportion_degree_divisible(*spaces[idx], d); break;
                case ReportKind::PDivisible: results[i] = proportion_p_divisible(*spaces[idx]); break;
                case ReportKind::HelmetCertified:
                    results[i] = proportion_helmet_certified(*spaces[idx], d, n0);
                    break;
            }
        } catch (const std::invalid_argument& e) {
            messages[i] = e.what();
        }
    });

    SweepTable table;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (results[i]) {
            table.rows.push_back(std::move(*results[i]));
        } else {
            const auto& [q, d, n0, n, kind] = cells[i];
            table.errors.push_back({kind, n, q, d, n0, messages[i]});
        }
    }
    return table;
}

}  // namespace glq
