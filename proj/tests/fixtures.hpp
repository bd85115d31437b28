#pragma once

#include <vector>

#include "wpss/dealer.hpp"

namespace wpss::fixture {

struct Dealt {
    Scheme scheme;
    std::vector<Share> shares;
};

inline Dealt deal(PlatformFamily family, std::size_t n, std::size_t t, std::uint64_t seed) {
    Dealt d;
    d.scheme = setup_scheme(family, SchemeParams(n, t), seed);
    d.shares = make_shares(d.scheme.presentation, build_access_structure(n, t), d.scheme.scheme_id);
    return d;
}

inline std::vector<Share> pick(const std::vector<Share>& shares, const Subset& who) {
    std::vector<Share> out;
    for (auto i : who) out.push_back(shares.at(i - 1));
    return out;
}

inline Bits random_bits(Rng& rng, std::size_t len) {
    Bits b;
    for (std::size_t i = 0; i < len; ++i) b.push_back(static_cast<std::uint8_t>(uniform_below(rng, 2)));
    return b;
}

}  // namespace wpss::fixture
