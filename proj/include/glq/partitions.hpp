#pragma once

// Integer partitions: enumeration, hooks, the alpha statistic, symmetric
// group degrees, and the t-core / t-quotient correspondence.
//
// Abacus convention used by core_quotient / from_core_quotient:
//   pad lambda to L parts, L the smallest multiple of t with L >= length;
//   beta_i = lambda_i + (L - i) for i = 1..L;
//   runner r holds the beta numbers congruent to r mod t, and quotient[r]
//   is read off runner r. Because L is always a multiple of t, adding t
//   more zero parts leaves both core and quotient unchanged.

#include "glq/integers.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace glq {

class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            size_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition single_row(int n) { return n == 0 ? Partition{} : Partition(std::vector<int>{n}); }
    static Partition single_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 0-based; returns 0 past the last part.
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
        return Partition(std::move(out));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    // Lexicographic on the part list.
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct HookMultiset {
    std::vector<int> lengths;  // ascending

    std::size_t size() const noexcept { return lengths.size(); }
    int max() const noexcept { return lengths.empty() ? 0 : lengths.back(); }
    std::size_t count_divisible_by(int t) const {
        return static_cast<std::size_t>(
            std::count_if(lengths.begin(), lengths.end(), [t](int h) { return h % t == 0; }));
    }
    friend bool operator==(const HookMultiset&, const HookMultiset&) = default;
};

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // quotient[r] comes from abacus runner r
    int t = 1;

    int quotient_size() const {
        int s = 0;
        for (const auto& p : quotient) s += p.size();
        return s;
    }
};

namespace detail {

inline void gen_partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

inline void require_t(int t) {
    if (t < 1) throw std::invalid_argument("t must be a positive integer");
}

// Converts a set of distinct nonnegative beta numbers to the partition it encodes.
inline Partition partition_from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<>());
    const int count = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < count; ++i) {
        const int part = betas[static_cast<std::size_t>(i)] - (count - 1 - i);
        if (part < 0) throw std::logic_error("beta numbers are not distinct");
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

inline int padded_length(int length, int t) { return (length + t - 1) / t * t; }

}  // namespace detail

/// All partitions of n, reverse-lexicographic: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> gen_partitions(int n) {
    if (n < 0) throw std::invalid_argument("gen_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::gen_partitions_rec(n, n, cur, out);
    return out;
}

inline HookMultiset hook_lengths(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    HookMultiset hooks;
    hooks.lengths.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 0; i < lambda.length(); ++i) {
        const int row = lambda.part(static_cast<std::size_t>(i));
        for (int j = 0; j < row; ++j) {
            const int arm = row - j - 1;
            const int leg = conj.part(static_cast<std::size_t>(j)) - i - 1;
            hooks.lengths.push_back(arm + leg + 1);
        }
    }
    std::sort(hooks.lengths.begin(), hooks.lengths.end());
    return hooks;
}

/// sum_i (i-1) * lambda_i with 1-based i.
inline long long alpha(const Partition& lambda) {
    long long a = 0;
    for (int i = 0; i < lambda.length(); ++i) a += static_cast<long long>(i) * lambda.part(static_cast<std::size_t>(i));
    return a;
}

/// Degree of the irreducible symmetric-group character indexed by lambda (hook length formula).
inline BigInt sym_degree(const Partition& lambda) {
    BigInt denom = 1;
    for (int h : hook_lengths(lambda).lengths) denom *= h;
    const BigInt num = factorial_big(lambda.size());
    if (num % denom != 0) throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
    return num / denom;
}

inline std::size_t count_t_hooks(const Partition& lambda, int t) {
    detail::require_t(t);
    return hook_lengths(lambda).count_divisible_by(t);
}

inline bool is_t_core(const Partition& lambda, int t) { return count_t_hooks(lambda, t) == 0; }

inline CoreQuotient core_quotient(const Partition& lambda, int t) {
    detail::require_t(t);
    const int len = detail::padded_length(lambda.length(), t);

    // runner r: positions k with beta = r + t*k, collected in decreasing beta order
    std::vector<std::vector<int>> runners(static_cast<std::size_t>(t));
    for (int i = 0; i < len; ++i) {
        const int beta = lambda.part(static_cast<std::size_t>(i)) + (len - 1 - i);
        runners[static_cast<std::size_t>(beta % t)].push_back(beta / t);
    }

    CoreQuotient cq;
    cq.t = t;
    std::vector<int> core_betas;
    for (int r = 0; r < t; ++r) {
        const auto& pos = runners[static_cast<std::size_t>(r)];
        const int m = static_cast<int>(pos.size());
        std::vector<int> parts;
        for (int j = 0; j < m; ++j) {
            const int part = pos[static_cast<std::size_t>(j)] - (m - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        cq.quotient.emplace_back(std::move(parts));
        for (int k = 0; k < m; ++k) core_betas.push_back(r + t * k);
    }
    cq.core = detail::partition_from_betas(std::move(core_betas));
    return cq;
}

/// Inverse of core_quotient. Throws std::invalid_argument if cq.core has a t-hook
/// or the quotient does not have exactly t components.
inline Partition from_core_quotient(const CoreQuotient& cq) {
    const int t = cq.t;
    detail::require_t(t);
    if (static_cast<int>(cq.quotient.size()) != t)
        throw std::invalid_argument("quotient must have exactly t components");
    if (!is_t_core(cq.core, t)) throw std::invalid_argument("core " + cq.core.to_string() + " is not a t-core");

    int longest = 0;
    for (const auto& p : cq.quotient) longest = std::max(longest, p.length());
    // Enough padding that every runner carries at least `longest` beads.
    const int len = detail::padded_length(cq.core.length(), t) + t * longest;

    std::vector<int> bead_count(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < len; ++i) {
        const int beta = cq.core.part(static_cast<std::size_t>(i)) + (len - 1 - i);
        ++bead_count[static_cast<std::size_t>(beta % t)];
    }

    std::vector<int> betas;
    betas.reserve(static_cast<std::size_t>(len));
    for (int r = 0; r < t; ++r) {
        const int m = bead_count[static_cast<std::size_t>(r)];
        const Partition& lam = cq.quotient[static_cast<std::size_t>(r)];
        for (int j = 0; j < m; ++j) {
            const int k = lam.part(static_cast<std::size_t>(j)) + (m - 1 - j);
            betas.push_back(r + t * k);
        }
    }
    return detail::partition_from_betas(std::move(betas));
}

inline std::vector<Partition> gen_t_cores(int n, int t) {
    detail::require_t(t);
    std::vector<Partition> out;
    for (auto& p : gen_partitions(n))
        if (is_t_core(p, t)) out.push_back(std::move(p));
    return out;
}

/// (t|lambda^0|, ..., t|lambda^{t-1}|, |core_t(lambda)|); components sum to |lambda|.
inline std::vector<int> qoppa(const Partition& lambda, int t) {
    const CoreQuotient cq = core_quotient(lambda, t);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(t) + 1);
    for (const auto& p : cq.quotient) out.push_back(t * p.size());
    out.push_back(cq.core.size());
    return out;
}

}  // namespace glq
