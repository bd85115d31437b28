#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "wpss/error.hpp"
#include "wpss/word.hpp"

using namespace wpss;

namespace {

const Alphabet ab({"a", "b"});
const Alphabet s12({"s1", "s2"});

Word W(std::string_view text, const Alphabet& gens = ab) { return parse_word(text, gens); }

// Random word over k generators with no reduction guarantee; every third
// letter is followed by its inverse to force cancellations.
Word noisy_word(Rng& rng, std::uint32_t k, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        const Letter l{static_cast<std::uint32_t>(uniform_below(rng, k)),
                       static_cast<std::int8_t>(uniform_below(rng, 2) ? 1 : -1)};
        w.push_back(l);
        if (i % 3 == 0) w.push_back(l.inverse());
    }
    return w;
}

}  // namespace

TEST_CASE("free_reduce examples") {
    CHECK(free_reduce(W("a a^-1")).empty());
    CHECK(free_reduce(Word{}).empty());
    const auto cascading = W("a b b^-1 b a^-1 a");
    CHECK(free_reduce(cascading) == W("a b"));
    CHECK(oracle::naive_free_reduce(cascading) == W("a b"));
}

TEST_CASE("free_reduce agrees with the repeated-scan oracle and is idempotent") {
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = noisy_word(rng, 3, uniform_below(rng, 24));
        const auto r = free_reduce(w);
        CHECK(r == oracle::naive_free_reduce(w));
        CHECK(r.is_freely_reduced());
        CHECK(free_reduce(r) == r);
        CHECK(r.size() <= w.size());
        CHECK(free_reduce(concat(w, invert(w))).empty());
    }
}

TEST_CASE("invert") {
    CHECK(invert(W("a b")) == W("b^-1 a^-1"));
    CHECK(invert(Word{}).empty());
    const auto w = W("a^-1 b a");
    CHECK(invert(w) == W("a^-1 b^-1 a"));
    CHECK(free_reduce(concat(w, invert(w))).empty());
}

TEST_CASE("commutator and conjugate") {
    CHECK(commutator(W("a"), W("a")).empty());
    CHECK(commutator(W("a"), Word{}).empty());
    CHECK(commutator(W("a"), W("b")) == W("a b a^-1 b^-1"));
    CHECK(conjugate(W("a"), Word{}) == W("a"));
    CHECK(conjugate(W("a"), W("a")) == W("a"));
    CHECK(conjugate(W("b"), W("a")) == W("a^-1 b a"));

    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = free_reduce(noisy_word(rng, 2, uniform_below(rng, 8)));
        const auto y = free_reduce(noisy_word(rng, 2, uniform_below(rng, 8)));
        CHECK(free_reduce(concat(commutator(x, y), commutator(y, x))).empty());
    }
}

TEST_CASE("parse_word expands exponents") {
    const auto w = W("s1 s2^-1 s1^3", s12);
    CHECK(w == Word{pos(0), neg(1), pos(0), pos(0), pos(0)});
    CHECK(serialize_word(w, s12) == "s1 s2^-1 s1^3");
    CHECK(W("", s12).empty());
}

TEST_CASE("parse_word errors report the first bad position") {
    auto position_of = [](std::string_view text) -> std::size_t {
        try {
            parse_word(text, s12);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected a parse error for '" << std::string(text) << "'");
        return 0;
    };
    CHECK(position_of("s9") == 0);
    CHECK(position_of("s1 s9") == 3);
    CHECK(position_of("s1^") == 3);
    CHECK(position_of("s1^0") == 3);
    CHECK(position_of("s1^x") == 3);
    CHECK(position_of("s1^2x") == 4);
    CHECK(position_of("S1") == 0);
    CHECK_THROWS_AS(parse_word("s3", s12), ParseError);
}

TEST_CASE("serialize_word canonical form") {
    CHECK(serialize_word(Word{pos(0), pos(0), neg(1)}, s12) == "s1^2 s2^-1");
    CHECK(serialize_word(Word{}, s12).empty());
    CHECK(serialize_word(Word{pos(0), pos(1), neg(0)}, ab) == "a b a^-1");
    CHECK(serialize_word(Word{neg(0), neg(0), neg(0)}, ab) == "a^-3");
}

TEST_CASE("parse/serialize round trip on random reduced words") {
    Rng rng(99);
    const auto gens = Alphabet::numbered("g", 12);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto w = random_word(12, 1 + uniform_below(rng, 30), rng);
        CHECK(parse_word(serialize_word(w, gens), gens) == w);
    }
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"A"}), ValidationError);
    CHECK_THROWS_AS(Alphabet({"1a"}), ValidationError);
    CHECK(Alphabet::numbered("s", 30).name(29) == "s30");
}

TEST_CASE("random_word post-conditions") {
    Rng rng(3);
    CHECK_THROWS_AS(random_word(2, 0, rng), ValidationError);
    for (int trial = 0; trial < 500; ++trial) {
        const auto len = 1 + uniform_below(rng, 40);
        const auto w = random_word(1 + static_cast<std::uint32_t>(uniform_below(rng, 4)), len, rng);
        CHECK(w.size() == len);
        CHECK(free_reduce(w) == w);
    }
}

TEST_CASE("random_word single letter is a fair coin over a, a^-1") {
    Rng rng(2024);
    int plus = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) plus += random_word(1, 1, rng)[0].sign > 0;
    const double expected = draws / 2.0;
    const double chi2 = (plus - expected) * (plus - expected) / expected * 2.0;
    // 1 degree of freedom, p = 0.001
    CHECK(chi2 < 10.83);
}

TEST_CASE("random_word is uniform over reduced words of length 2") {
    Rng rng(77);
    std::map<std::pair<int, int>, int> counts;
    const int draws = 12000;
    for (int i = 0; i < draws; ++i) {
        const auto w = random_word(2, 2, rng);
        auto code = [](Letter l) { return static_cast<int>(l.generator) * 2 + (l.sign < 0); };
        ++counts[{code(w[0]), code(w[1])}];
    }
    CHECK(counts.size() == 12);  // 2k * (2k - 1)
    double chi2 = 0;
    const double expected = draws / 12.0;
    for (const auto& [key, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
    // 11 degrees of freedom, p = 0.001
    CHECK(chi2 < 31.26);
}
