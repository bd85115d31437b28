// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wpss/analysis.hpp"
#include "wpss/combiner.hpp"
#include "wpss/coxeter.hpp"
#include "wpss/message.hpp"
#include "wpss/polycyclic.hpp"

using namespace wpss;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        o.pass = false;
        o.detail += "; over time limit " + std::to_string(static_cast<int>(limit_seconds)) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d %s: %s (%s; %.2f s)\n", number, title, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::vector<Letter> positive_alphabet(std::uint32_t k) {
    std::vector<Letter> a;
    for (std::uint32_t g = 0; g < k; ++g) a.push_back(Letter{g, 1});
    return a;
}

std::vector<Letter> signed_alphabet(std::uint32_t k) {
    std::vector<Letter> a;
    for (std::uint32_t g = 0; g < k; ++g) {
        a.push_back(Letter{g, 1});
        a.push_back(Letter{g, -1});
    }
    return a;
}

Word random_word(Rng& rng, const std::vector<Letter>& alphabet, std::size_t max_len) {
    const auto len = uniform_below(rng, max_len + 1);
    std::vector<Letter> letters;
    for (std::uint64_t i = 0; i < len; ++i) letters.push_back(alphabet[uniform_below(rng, alphabet.size())]);
    return Word(std::move(letters));
}

// Criterion 2 data, reused by 4 and 6.
struct Fixture {
    fixture::Dealt dealt;
    std::vector<Bits> messages;
    std::vector<EncodedMessage> encoded;
};

std::vector<Fixture> g_fixtures;
constexpr std::size_t kMessagesPerScheme = 20;
constexpr std::size_t kMessageBits = 32;

std::string plural(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
    std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));

    run(1, "threshold exhaustiveness", 10.0, [] {
        std::size_t schemes = 0, coalitions = 0;
        std::string bad;
        for (std::size_t n = 2; n <= 8; ++n)
            for (std::size_t t = 2; t <= n; ++t) {
                const auto report = check_threshold_property(build_access_structure(n, t));
                ++schemes;
                coalitions += report.coalitions_checked;
                if (!report.passed() || !report.unauthorized_miss_exactly_one)
                    bad += " (" + std::to_string(n) + "," + std::to_string(t) + ")";
            }
        return Outcome{bad.empty(), plural(schemes, "schemes, ") + plural(coalitions, "coalitions") +
                                        (bad.empty() ? "" : ", failing:" + bad)};
    });

    run(2, "coxeter round trip", 300.0, [&] {
        std::size_t decodes = 0, bit_errors = 0;
        Rng rng = derive_rng(seed, 2);
        for (std::size_t n = 2; n <= 5; ++n)
            for (std::size_t t = 2; t <= n; ++t) {
                Fixture f;
                f.dealt = fixture::deal(PlatformFamily::coxeter, n, t, seed + 100 * n + t);
                const auto coalitions = enumerate_subsets(n, t);
                for (std::size_t i = 0; i < kMessagesPerScheme; ++i) {
                    EncodingConfig cfg;
                    cfg.seed = seed ^ (n << 16) ^ (t << 8) ^ i;
                    f.messages.push_back(fixture::random_bits(rng, kMessageBits));
                    f.encoded.push_back(encode_message(f.dealt.scheme, f.messages.back(), cfg).message);
                    for (const auto& c : coalitions) {
                        const auto shares = fixture::pick(f.dealt.shares, c);
                        const auto got = decode_message(shares, f.encoded.back()).bits;
                        ++decodes;
                        for (std::size_t b = 0; b < kMessageBits; ++b)
                            if (b >= got.size() || got[b] != f.messages.back()[b]) ++bit_errors;
                        if (got.size() != kMessageBits) ++bit_errors;
                    }
                }
                g_fixtures.push_back(std::move(f));
            }
        return Outcome{bit_errors == 0, plural(g_fixtures.size(), "schemes, ") + plural(decodes, "coalition decodes, ") +
                                            plural(bit_errors, "bit errors")};
    });

    run(3, "engine/oracle equivalence", 0, [&] {
        std::size_t checked = 0, disagreements = 0;
        Rng rng = derive_rng(seed, 3);
        // (a) Tits vs permutations of S_{k+1}.
        for (std::uint32_t k = 1; k <= 4; ++k) {
            const auto mat = CoxeterMatrix::type_a(k);
            const auto alphabet = positive_alphabet(k);
            const auto check = [&](const Word& w) {
                const auto d = is_identity_tits(mat, w);
                ++checked;
                if (d.verdict == Verdict::undecided || (d.verdict == Verdict::identity) != perm_oracle_type_a(k, w))
                    ++disagreements;
            };
            for (std::size_t len = 0; len <= 10; ++len) oracle::for_each_word(alphabet, len, check);
            for (int i = 0; i < 1000; ++i) check(random_word(rng, alphabet, 16));
        }
        const std::size_t coxeter_checked = checked;
        // (b) collection vs matrices / permutations.
        std::vector<BuiltinPolycyclic> groups{builtin_heisenberg(), builtin_dihedral(3), builtin_dihedral(4),
                                              builtin_dihedral(6)};
        for (const auto& g : groups) {
            const auto alphabet = signed_alphabet(static_cast<std::uint32_t>(g.presentation.rank()));
            const auto check = [&](const Word& w) {
                const auto d = is_identity_pc(g.presentation, w);
                ++checked;
                if (d.verdict == Verdict::undecided || (d.verdict == Verdict::identity) != g.oracle(w))
                    ++disagreements;
            };
            for (std::size_t len = 0; len <= 8; ++len) oracle::for_each_word(alphabet, len, check);
            for (int i = 0; i < 1000; ++i) check(random_word(rng, alphabet, 20));
        }
        return Outcome{disagreements == 0, plural(coxeter_checked, "coxeter words, ") +
                                               plural(checked - coxeter_checked, "polycyclic words, ") +
                                               plural(disagreements, "disagreements")};
    });

    run(4, "quotient soundness", 0, [&] {
        std::size_t attacks = 0, proved = 0, violations = 0, non_identity_claims = 0;
        for (const auto& f : g_fixtures) {
            const auto& params = f.dealt.scheme.params;
            for (std::size_t size = 1; size < params.t(); ++size)
                for (const auto& c : enumerate_subsets(params.n(), size)) {
                    const auto shares = fixture::pick(f.dealt.shares, c);
                    for (std::size_t i = 0; i < f.encoded.size(); ++i) {
                        const auto report = coalition_attack(shares, f.encoded[i], Budget{});
                        ++attacks;
                        for (std::size_t b = 0; b < report.words.size(); ++b) {
                            const auto v = report.words[b].verdict;
                            if (v == AttackVerdict::proved_identity) {
                                ++proved;
                                if (f.messages[i][b] != 1) ++violations;
                            } else if (v == AttackVerdict::proved_non_identity) {
                                ++non_identity_claims;
                            }
                        }
                    }
                }
        }
        return Outcome{violations == 0 && non_identity_claims == 0,
                       plural(attacks, "sub-threshold attacks, ") + plural(proved, "proved-identity verdicts, ") +
                           plural(violations, "violations, ") +
                           plural(non_identity_claims, "non-identity claims from partial unions")};
    });

    run(5, "targeted decoding", 0, [&] {
        const auto dealt = fixture::deal(PlatformFamily::coxeter, 4, 3, seed + 5);
        Rng rng = derive_rng(seed, 5);
        std::size_t words = 0, errors = 0;
        for (const auto& share : dealt.shares) {
            EncodingConfig cfg;
            cfg.seed = seed + share.participant;
            const auto bits = fixture::random_bits(rng, 100);
            const auto msg = encode_for_recipient(dealt.scheme, share, bits, cfg).message;
            const auto got = decode_single(share, msg);
            words += bits.size();
            for (std::size_t b = 0; b < bits.size(); ++b)
                if (b >= got.bits.size() || got.bits[b] != bits[b]) ++errors;
        }
        return Outcome{errors == 0, plural(dealt.shares.size(), "recipients, ") + plural(words, "words, ") +
                                        plural(errors, "errors")};
    });

    run(6, "signature validation", 0, [&] {
        Rng rng = derive_rng(seed, 6);
        std::size_t fixtures = 0, found = 0, decoys = 0, decoy_matches = 0, true_ranked_first = 0;
        constexpr std::size_t kDecoys = 20;
        std::size_t scheme_no = 0;
        for (const auto& f : g_fixtures) {
            const auto& params = f.dealt.scheme.params;
            const auto coalitions = enumerate_subsets(params.n(), params.t());
            std::vector<GroupPresentation> pool{f.dealt.scheme.presentation};
            std::vector<std::string> labels{"true"};
            for (std::size_t d = 0; d < kDecoys; ++d) {
                pool.push_back(generate_platform(PlatformFamily::coxeter, params, seed + 7919 * (d + 1) + scheme_no));
                labels.push_back("decoy-" + std::to_string(d));
            }
            ++scheme_no;
            for (std::size_t i = 0; i < f.messages.size(); ++i) {
                const auto signature = fixture::random_bits(rng, 16);
                const auto offset = uniform_below(rng, f.messages[i].size() + 1);
                const auto signed_bits = insert_at(f.messages[i], signature, offset);
                EncodingConfig cfg;
                cfg.seed = seed ^ 0x5157 ^ (scheme_no << 8) ^ i;
                const auto msg = encode_message(f.dealt.scheme, signed_bits, cfg).message;
                const auto& c = coalitions[i % coalitions.size()];
                const auto decoded = decode_message(fixture::pick(f.dealt.shares, c), msg).bits;
                const auto report = verify_signature(decoded, signature);
                ++fixtures;
                if (report.authentic && std::find(report.offsets.begin(), report.offsets.end(), offset) != report.offsets.end())
                    ++found;
                if (i % 5 == 0) {
                    const auto ranked = pool_attack(pool, labels, msg, signature, Budget::uniform(20000));
                    for (const auto& cand : ranked)
                        if (cand.index != 0) {
                            ++decoys;
                            if (cand.matched) ++decoy_matches;
                        }
                    if (!ranked.empty() && ranked.front().index == 0 && ranked.front().matched) ++true_ranked_first;
                }
            }
        }
        char rate[64];
        std::snprintf(rate, sizeof rate, "%.4f", decoys ? static_cast<double>(decoy_matches) / decoys : 0.0);
        return Outcome{found == fixtures, std::to_string(found) + "/" + std::to_string(fixtures) +
                                              " signatures found; decoy false-positive rate " + rate + " (" +
                                              std::to_string(decoy_matches) + "/" + std::to_string(decoys) +
                                              "); true scheme ranked first in " + std::to_string(true_ranked_first) +
                                              " pools"};
    });

    run(7, "determinism", 0, [&] {
        std::size_t files = 0, mismatches = 0;
        const auto render = [](PlatformFamily family, std::size_t n, std::size_t t, std::uint64_t s) {
            std::vector<std::string> out;
            const auto d = fixture::deal(family, n, t, s);
            out.push_back(serialize_scheme(d.scheme));
            for (const auto& sh : d.shares) out.push_back(serialize_share(sh));
            Rng bits_rng = derive_rng(s, 7);
            EncodingConfig cfg;
            cfg.seed = s;
            out.push_back(serialize_message(encode_message(d.scheme, fixture::random_bits(bits_rng, 24), cfg).message,
                                            d.scheme.presentation.generators));
            if (family == PlatformFamily::coxeter)
                out.push_back(serialize_message(
                    encode_for_recipient(d.scheme, d.shares.front(), fixture::random_bits(bits_rng, 8), cfg).message,
                    d.scheme.presentation.generators));
            return out;
        };
        for (auto family : {PlatformFamily::coxeter, PlatformFamily::polycyclic_builtin})
            for (auto [n, t] : {std::pair<std::size_t, std::size_t>{3, 2}, {4, 3}, {5, 3}, {6, 4}}) {
                const auto a = render(family, n, t, seed + n * 10 + t);
                const auto b = render(family, n, t, seed + n * 10 + t);
                files += a.size();
                if (a != b) ++mismatches;
            }
        return Outcome{mismatches == 0, plural(files, "files compared, ") + plural(mismatches, "mismatching runs")};
    });

    std::printf("acceptance: %s (%d failing)\n", failures == 0 ? "PASS" : "FAIL", failures);
    return failures == 0 ? 0 : 1;
}
