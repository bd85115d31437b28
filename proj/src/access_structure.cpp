#include "wpss/access_structure.hpp"

#include <algorithm>
#include <numeric>

#include "wpss/error.hpp"

namespace wpss {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step.
        const std::uint64_t factor = n - k + i;
        const std::uint64_t g = std::gcd(result, i);
        const std::uint64_t reduced = result / g;
        const std::uint64_t divisor = i / g;
        if (factor / divisor > UINT64_MAX / reduced) return UINT64_MAX;
        result = reduced * (factor / divisor);
    }
    return result;
}

SchemeParams::SchemeParams(std::size_t n, std::size_t t, std::uint64_t relator_cap) : n_(n), t_(t), m_(0) {
    if (n < 2) throw ValidationError("n must be at least 2");
    if (t < 2 || t > n)
        throw ValidationError("threshold t = " + std::to_string(t) + " out of range [2, " + std::to_string(n) + "]");
    const auto m = binomial(n, t - 1);
    if (m > relator_cap)
        throw ValidationError("relator count C(" + std::to_string(n) + ", " + std::to_string(t - 1) +
                              ") exceeds the cap of " + std::to_string(relator_cap));
    m_ = static_cast<std::size_t>(m);
}

std::vector<Subset> enumerate_subsets(std::size_t n, std::size_t size) {
    if (size > n) throw ValidationError("subset size exceeds n");
    std::vector<Subset> out;
    Subset current(size);
    for (std::size_t i = 0; i < size; ++i) current[i] = i + 1;
    while (true) {
        out.push_back(current);
        // Advance the rightmost position that still has room.
        std::size_t pos = size;
        while (pos > 0 && current[pos - 1] == n - size + pos) --pos;
        if (pos == 0) break;
        ++current[pos - 1];
        for (std::size_t i = pos; i < size; ++i) current[i] = current[i - 1] + 1;
    }
    return out;
}

AccessStructure build_access_structure(std::size_t n, std::size_t t, std::uint64_t relator_cap) {
    SchemeParams params(n, t, relator_cap);
    auto subsets = enumerate_subsets(n, t - 1);
    std::vector<std::vector<std::size_t>> shares(n);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const auto& a = subsets[j];
        for (std::size_t i = 1; i <= n; ++i)
            if (!std::binary_search(a.begin(), a.end(), i)) shares[i - 1].push_back(j + 1);
    }
    return AccessStructure{params, std::move(subsets), std::move(shares)};
}

std::vector<std::size_t> coalition_union(const AccessStructure& a, const Subset& coalition) {
    std::vector<std::size_t> out;
    for (auto i : coalition) {
        const auto& r = a.share(i);
        out.insert(out.end(), r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string format_subset(const Subset& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

ThresholdReport check_threshold_property(const AccessStructure& a) {
    ThresholdReport report;
    const auto n = a.params.n();
    const auto t = a.params.t();
    const auto m = a.params.m();

    for (std::size_t j = 1; j <= m; ++j) {
        const auto& subset = a.subsets.at(j - 1);
        for (std::size_t i = 1; i <= n; ++i) {
            const bool held = std::binary_search(a.share(i).begin(), a.share(i).end(), j);
            const bool excluded = std::binary_search(subset.begin(), subset.end(), i);
            if (held == excluded) {
                report.membership_rule_holds = false;
                report.failures.push_back("membership: relator " + std::to_string(j) + " vs participant " +
                                          std::to_string(i));
            }
        }
    }

    for (const auto& coalition : enumerate_subsets(n, t)) {
        ++report.coalitions_checked;
        const auto held = coalition_union(a, coalition);
        if (held.size() != m) {
            report.authorized_cover = false;
            report.failures.push_back("authorized coalition " + format_subset(coalition) + " holds " +
                                      std::to_string(held.size()) + " of " + std::to_string(m));
        }
    }
    for (const auto& coalition : enumerate_subsets(n, t - 1)) {
        ++report.coalitions_checked;
        const auto missing = m - coalition_union(a, coalition).size();
        if (missing == 0) {
            report.unauthorized_miss = false;
            report.failures.push_back("unauthorized coalition " + format_subset(coalition) + " holds every relator");
        }
        if (missing != 1) report.unauthorized_miss_exactly_one = false;
    }
    return report;
}

}  // namespace wpss
