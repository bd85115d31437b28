#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "wpss/analysis.hpp"
#include "wpss/error.hpp"

using namespace wpss;
using fixture::deal;
using fixture::pick;

namespace {

const Budget kAttackBudget = Budget::uniform(20000);

}  // namespace

TEST_CASE("(4,3) coalition {1,2} misses relator 1 and stays sound") {
    const auto d = deal(PlatformFamily::coxeter, 4, 3, 17);
    EncodingConfig cfg;
    cfg.seed = 3;
    Rng rng(3);
    const auto bits = fixture::random_bits(rng, 32);
    const auto msg = encode_message(d.scheme, bits, cfg).message;

    const auto r = coalition_attack(pick(d.shares, {1, 2}), msg, kAttackBudget);
    CHECK(r.missing == std::vector<std::size_t>{1});
    CHECK_FALSE(r.complete);
    CHECK(r.family == Family::coxeter);
    REQUIRE(r.words.size() == bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (r.words[i].verdict == AttackVerdict::proved_identity) CHECK(bits[i] == 1);
        CHECK(r.words[i].verdict != AttackVerdict::proved_non_identity);
    }
    const auto text = format_report(r);
    CHECK(text.starts_with("coalition: participants 1,2; missing relators 1; family coxeter; partial\n"));
    CHECK(std::count(text.begin(), text.end(), '\n') == 34);
}

TEST_CASE("a full coalition behaves as a decode") {
    const auto d = deal(PlatformFamily::coxeter, 4, 3, 18);
    EncodingConfig cfg;
    const auto bits = parse_bits("10110");
    const auto msg = encode_message(d.scheme, bits, cfg).message;
    const auto r = coalition_attack(pick(d.shares, {1, 2, 4}), msg, Budget{});
    CHECK(r.complete);
    for (std::size_t i = 0; i < bits.size(); ++i)
        CHECK(r.words[i].verdict == (bits[i] ? AttackVerdict::proved_identity : AttackVerdict::proved_non_identity));
}

TEST_CASE("quotient soundness over every sub-threshold coalition") {
    Rng rng(77);
    for (auto family : {PlatformFamily::coxeter, PlatformFamily::polycyclic_builtin}) {
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t t = 2; t <= n; ++t) {
                const auto d = deal(family, n, t, 7 * n + t);
                const auto bits = fixture::random_bits(rng, 16);
                EncodingConfig cfg;
                cfg.seed = rng();
                const auto msg = encode_message(d.scheme, bits, cfg).message;
                for (std::size_t size = 1; size < t; ++size)
                    for (const auto& who : enumerate_subsets(n, size)) {
                        const auto r = coalition_attack(pick(d.shares, who), msg, kAttackBudget);
                        if (size == t - 1) CHECK(r.missing.size() == 1);
                        for (std::size_t i = 0; i < bits.size(); ++i) {
                            if (r.words[i].verdict == AttackVerdict::proved_identity) CHECK(bits[i] == 1);
                            CHECK(r.words[i].verdict != AttackVerdict::proved_non_identity);
                        }
                    }
            }
    }
}

TEST_CASE("pool attack ranks the true presentation among the matches") {
    const auto d = deal(PlatformFamily::coxeter, 4, 3, 123);
    Rng rng(5);
    const auto signature = fixture::random_bits(rng, 8);
    const auto payload = fixture::random_bits(rng, 16);
    const auto bits = embed_signature(payload, signature, rng);
    EncodingConfig cfg;
    const auto msg = encode_message(d.scheme, bits, cfg).message;

    std::vector<GroupPresentation> pool;
    std::vector<std::string> labels;
    const std::size_t true_index = 37;
    for (std::size_t c = 0; c < 100; ++c) {
        pool.push_back(c == true_index ? d.scheme.presentation
                                       : generate_platform(PlatformFamily::coxeter, SchemeParams(4, 3), 5000 + c));
        labels.push_back(c == true_index ? "true" : "decoy-" + std::to_string(c));
    }
    const auto ranked = pool_attack(pool, labels, msg, signature, Budget::uniform(2000));
    REQUIRE(ranked.size() == 100);
    const auto it = std::find_if(ranked.begin(), ranked.end(), [](const PoolCandidate& c) { return c.label == "true"; });
    REQUIRE(it != ranked.end());
    CHECK(it->matched);
    CHECK(it->undecided == 0);
    CHECK(it->decoded == format_bits(bits));
    CHECK(ranked.front().matched);
    const auto rate = decoy_match_rate(ranked, true_index);
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);
    MESSAGE("decoy match rate " << rate);

    CHECK(pool_attack(std::span<const GroupPresentation>{}, {}, msg, signature, Budget{}).empty());
}

TEST_CASE("pool candidates that cannot read the message are reported, not fatal") {
    const auto d = deal(PlatformFamily::coxeter, 5, 3, 9);  // k = 5
    EncodingConfig cfg;
    const auto msg = encode_message(d.scheme, parse_bits("11"), cfg).message;
    std::vector<GroupPresentation> pool{generate_platform(PlatformFamily::coxeter, SchemeParams(3, 2), 1)};  // k = 3
    GroupPresentation raw = pool[0];
    raw.family = Family::raw;
    pool.push_back(raw);
    const auto ranked = pool_attack(pool, {}, msg, parse_bits("11"), Budget{});
    REQUIRE(ranked.size() == 2);
    for (const auto& c : ranked) {
        CHECK_FALSE(c.matched);
        CHECK_FALSE(c.error.empty());
    }
    CHECK(format_report(ranked).find("summary: candidates=2 matches=0") != std::string::npos);
}
