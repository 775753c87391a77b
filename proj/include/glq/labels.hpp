#pragma once

// Index set of irreducible characters of GL(n, q).
//
// Characters are labelled by partition-valued functions on the monic
// irreducible polynomials over F_q other than x. Every quantity computed in
// this library depends on a polynomial only through its degree, so a
// polynomial is represented by a slot (degree, index) with
// 0 <= index < count_irreducibles(q, degree) and never materialized.
// A DegreeProfile forgets the slot indices and keeps, per degree, the
// multiset of partitions; profile_multiplicity counts the labels with that
// profile.

#include "glq/integers.hpp"
#include "glq/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glq {

/// Mobius function of n >= 1.
inline int mobius(std::int64_t n) {
    int mu = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

/// Number of monic irreducible polynomials of degree d over F_q, excluding x.
inline BigInt count_irreducibles(std::int64_t q, std::int64_t d) {
    require_prime_power(q);
    if (d < 1) throw std::invalid_argument("count_irreducibles: degree must be positive");
    BigInt sum = 0;
    for (std::int64_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = mobius(e);
        if (mu != 0) sum += mu * pow_big(BigInt(q), static_cast<std::uint64_t>(d / e));
    }
    BigInt count = sum / d;
    if (d == 1) count -= 1;
    return count;
}

/// One (degree, partition) factor of a label.
struct Component {
    int degree = 1;
    Partition partition;
};

/// Canonical order of partitions inside one degree: descending lexicographic.
inline bool canonical_before(const Partition& a, const Partition& b) { return b < a; }

class DegreeProfile {
public:
    DegreeProfile() = default;

    /// Throws std::invalid_argument on a nonpositive degree or an empty partition.
    explicit DegreeProfile(std::map<int, std::vector<Partition>> assignments) {
        for (auto& [d, parts] : assignments) {
            if (d < 1) throw std::invalid_argument("DegreeProfile: degree must be positive");
            for (const auto& p : parts) {
                if (p.empty()) throw std::invalid_argument("DegreeProfile: partitions must be nonempty");
                n_ += d * p.size();
            }
            if (parts.empty()) continue;
            std::sort(parts.begin(), parts.end(), canonical_before);
            assignments_.emplace(d, std::move(parts));
        }
    }

    const std::map<int, std::vector<Partition>>& assignments() const noexcept { return assignments_; }
    int n() const noexcept { return n_; }

    std::vector<Component> components() const {
        std::vector<Component> out;
        for (const auto& [d, parts] : assignments_)
            for (const auto& p : parts) out.push_back({d, p});
        return out;
    }

    /// e.g. "1:(2,1)(1) 3:(1)"; the empty profile renders as "-".
    std::string descriptor() const {
        if (assignments_.empty()) return "-";
        std::string s;
        for (const auto& [d, parts] : assignments_) {
            if (!s.empty()) s += ' ';
            s += std::to_string(d) + ':';
            for (const auto& p : parts) s += p.to_string();
        }
        return s;
    }

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
    friend auto operator<=>(const DegreeProfile& a, const DegreeProfile& b) {
        return a.assignments_ <=> b.assignments_;
    }

private:
    std::map<int, std::vector<Partition>> assignments_;
    int n_ = 0;
};

/// Polynomial slot: (degree, index among the irreducibles of that degree).
struct Slot {
    int degree = 1;
    std::int64_t index = 0;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

class CharLabel {
public:
    CharLabel() = default;

    /// Empty partitions are dropped (they are outside the support).
    explicit CharLabel(std::map<Slot, Partition> entries) {
        for (auto& [slot, p] : entries) {
            if (slot.degree < 1 || slot.index < 0) throw std::invalid_argument("CharLabel: malformed slot");
            if (p.empty()) continue;
            n_ += slot.degree * p.size();
            entries_.emplace(slot, std::move(p));
        }
    }

    /// The unipotent label: lambda sitting on the polynomial x - 1 (slot (1, 0)).
    static CharLabel unipotent(const Partition& lambda) { return CharLabel({{Slot{1, 0}, lambda}}); }

    const std::map<Slot, Partition>& entries() const noexcept { return entries_; }
    int n() const noexcept { return n_; }

    std::vector<Component> components() const {
        std::vector<Component> out;
        for (const auto& [slot, p] : entries_) out.push_back({slot.degree, p});
        return out;
    }

    DegreeProfile profile() const {
        std::map<int, std::vector<Partition>> a;
        for (const auto& [slot, p] : entries_) a[slot.degree].push_back(p);
        return DegreeProfile(std::move(a));
    }

    /// Throws std::invalid_argument if a slot index exceeds the irreducible count over F_q.
    void validate(std::int64_t q) const {
        std::map<int, BigInt> counts;
        for (const auto& [slot, p] : entries_) {
            auto it = counts.find(slot.degree);
            if (it == counts.end()) it = counts.emplace(slot.degree, count_irreducibles(q, slot.degree)).first;
            if (BigInt(slot.index) >= it->second)
                throw std::invalid_argument("CharLabel: slot index out of range for degree " +
                                            std::to_string(slot.degree));
        }
    }

    friend bool operator==(const CharLabel&, const CharLabel&) = default;

private:
    std::map<Slot, Partition> entries_;
    int n_ = 0;
};

/// A label realizing the profile, filling slot indices 0, 1, ... per degree.
inline CharLabel representative_label(const DegreeProfile& profile) {
    std::map<Slot, Partition> entries;
    for (const auto& [d, parts] : profile.assignments())
        for (std::size_t j = 0; j < parts.size(); ++j) entries.emplace(Slot{d, static_cast<std::int64_t>(j)}, parts[j]);
    return CharLabel(std::move(entries));
}

namespace detail {

inline std::int64_t capped(const BigInt& x, std::int64_t cap) {
    return x > cap ? cap : static_cast<std::int64_t>(x);
}

// Every partition of size 1..max_size, in canonical (descending lexicographic) order.
inline std::vector<Partition> partition_pool(int max_size) {
    std::vector<Partition> pool;
    for (int s = 1; s <= max_size; ++s)
        for (auto& p : gen_partitions(s)) pool.push_back(std::move(p));
    std::sort(pool.begin(), pool.end(), canonical_before);
    return pool;
}

// Multisets drawn from pool (non-decreasing indices) with total size `size`
// and at most `max_count` elements.
inline void partition_multisets(const std::vector<Partition>& pool, std::size_t start, int size,
                                std::int64_t max_count, std::vector<Partition>& cur,
                                const std::function<void(const std::vector<Partition>&)>& emit) {
    if (size == 0) {
        emit(cur);
        return;
    }
    if (static_cast<std::int64_t>(cur.size()) >= max_count) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].size() > size) continue;
        cur.push_back(pool[i]);
        partition_multisets(pool, i, size - pool[i].size(), max_count, cur, emit);
        cur.pop_back();
    }
}

}  // namespace detail

/// Every DegreeProfile of total n realizable over F_q, each once. Order:
/// degrees are filled from 1 upward; at each degree the total size placed
/// there ascends, then multisets follow canonical pool order.
inline std::vector<DegreeProfile> enumerate_profiles(int n, std::int64_t q) {
    if (n < 0) throw std::invalid_argument("enumerate_profiles: n must be nonnegative");
    require_prime_power(q);
    std::vector<std::int64_t> caps(static_cast<std::size_t>(n) + 1, 0);
    for (int d = 1; d <= n; ++d) caps[static_cast<std::size_t>(d)] = detail::capped(count_irreducibles(q, d), n);
    const std::vector<Partition> pool = detail::partition_pool(n);

    std::vector<DegreeProfile> out;
    std::map<int, std::vector<Partition>> current;
    std::function<void(int, int)> rec = [&](int d, int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (d > remaining) return;
        for (int s = 0; s * d <= remaining; ++s) {
            if (s == 0) {
                rec(d + 1, remaining);
                continue;
            }
            std::vector<Partition> cur;
            detail::partition_multisets(pool, 0, s, caps[static_cast<std::size_t>(d)], cur,
                                        [&](const std::vector<Partition>& ms) {
                                            current[d] = ms;
                                            rec(d + 1, remaining - s * d);
                                            current.erase(d);
                                        });
        }
    };
    rec(1, n);
    return out;
}

/// Number of labels with the given profile:
/// prod_d N_q(d)(N_q(d)-1)...(N_q(d)-k_d+1) / prod_pi m_{d,pi}!.
inline BigInt profile_multiplicity(const DegreeProfile& profile, std::int64_t q) {
    BigInt total = 1;
    for (const auto& [d, parts] : profile.assignments()) {
        const BigInt available = count_irreducibles(q, d);
        const auto k = static_cast<std::int64_t>(parts.size());
        if (BigInt(k) > available)
            throw std::invalid_argument("profile uses " + std::to_string(k) + " polynomials of degree " +
                                        std::to_string(d) + " but only " + available.str() + " exist");
        BigInt falling = 1;
        for (std::int64_t i = 0; i < k; ++i) falling *= available - i;
        BigInt repeats = 1;
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            repeats *= factorial_big(static_cast<std::int64_t>(j - i));
            i = j;
        }
        total *= falling / repeats;
    }
    return total;
}

/// |X_n|, the number of irreducible characters of GL(n, q).
inline BigInt count_X(int n, std::int64_t q) {
    BigInt total = 0;
    for (const auto& p : enumerate_profiles(n, q)) total += profile_multiplicity(p, q);
    return total;
}

/// Every label of total n with explicit slots. Exponential; for cross-checks at small n.
inline std::vector<CharLabel> enumerate_labels(int n, std::int64_t q) {
    if (n < 0) throw std::invalid_argument("enumerate_labels: n must be nonnegative");
    require_prime_power(q);
    std::vector<Slot> slots;
    for (int d = 1; d <= n; ++d) {
        const BigInt count = count_irreducibles(q, d);
        for (std::int64_t j = 0; BigInt(j) < count; ++j) slots.push_back({d, j});
    }
    std::vector<std::vector<Partition>> by_size;
    for (int s = 0; s <= n; ++s) by_size.push_back(gen_partitions(s));

    std::vector<CharLabel> out;
    std::map<Slot, Partition> current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = start; i < slots.size(); ++i) {
            const Slot slot = slots[i];
            if (slot.degree > remaining) break;
            for (int s = 1; s * slot.degree <= remaining; ++s) {
                for (const auto& p : by_size[static_cast<std::size_t>(s)]) {
                    current[slot] = p;
                    rec(i + 1, remaining - s * slot.degree);
                    current.erase(slot);
                }
            }
        }
    };
    rec(0, n);
    return out;
}

}  // namespace glq
