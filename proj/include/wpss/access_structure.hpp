#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wpss {

// Sorted participant indices, 1-based.
using Subset = std::vector<std::size_t>;

inline constexpr std::uint64_t kDefaultRelatorCap = 1'000'000;

// Exact binomial coefficient; returns UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

// (n, t) with the derived relator count m = C(n, t-1).
class SchemeParams {
public:
    // Throws ValidationError unless 2 <= t <= n and m <= relator_cap.
    SchemeParams(std::size_t n, std::size_t t, std::uint64_t relator_cap = kDefaultRelatorCap);

    std::size_t n() const noexcept { return n_; }
    std::size_t t() const noexcept { return t_; }
    std::size_t m() const noexcept { return m_; }

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;

private:
    std::size_t n_;
    std::size_t t_;
    std::size_t m_;
};

// All `size`-subsets of {1..n}, lexicographic on sorted tuples.
std::vector<Subset> enumerate_subsets(std::size_t n, std::size_t size);

// Relator j (1-based) belongs to share i iff i is not in A_j.
struct AccessStructure {
    SchemeParams params;
    std::vector<Subset> subsets;                         // A_1..A_m
    std::vector<std::vector<std::size_t>> share_indices;  // R_1..R_n (sorted relator indices)

    const std::vector<std::size_t>& share(std::size_t participant) const {
        return share_indices.at(participant - 1);
    }
};

AccessStructure build_access_structure(std::size_t n, std::size_t t,
                                       std::uint64_t relator_cap = kDefaultRelatorCap);

struct ThresholdReport {
    bool membership_rule_holds = true;   // j in R_i iff i not in A_j
    bool authorized_cover = true;        // every t-coalition holds all m relators
    bool unauthorized_miss = true;       // every (t-1)-coalition misses >= 1
    bool unauthorized_miss_exactly_one = true;
    std::size_t coalitions_checked = 0;
    std::vector<std::string> failures;   // witnesses, human readable

    bool passed() const noexcept { return membership_rule_holds && authorized_cover && unauthorized_miss; }
};

// Exhaustive over every t-subset and every (t-1)-subset of participants.
ThresholdReport check_threshold_property(const AccessStructure& a);

// Sorted union of the relator indices held by `coalition`.
std::vector<std::size_t> coalition_union(const AccessStructure& a, const Subset& coalition);

std::string format_subset(const Subset& s);

}  // namespace wpss
