#include <array>

#include "doctest.h"
#include "oracles.hpp"
#include "wpss/coxeter.hpp"
#include "wpss/error.hpp"

using namespace wpss;

namespace {

Word letters(std::initializer_list<std::uint32_t> gens) {
    Word w;
    for (auto g : gens) w.push_back(pos(g));
    return w;
}

std::vector<Letter> positive_alphabet(std::uint32_t k) {
    std::vector<Letter> out;
    for (std::uint32_t g = 0; g < k; ++g) out.push_back(pos(g));
    return out;
}

Word random_positive(Rng& rng, std::uint32_t k, std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(pos(static_cast<std::uint32_t>(uniform_below(rng, k))));
    return w;
}

CoxeterMatrix type_b(std::size_t rank) {
    auto mat = CoxeterMatrix::type_a(rank);
    if (rank >= 2) mat.set(0, 1, 4);
    return mat;
}

CoxeterMatrix random_matrix(Rng& rng, std::size_t k) {
    CoxeterMatrix mat(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const auto v = uniform_below(rng, 6);  // 0 -> infinity, else 2..6
            mat.set(i, j, v == 0 ? CoxeterMatrix::kInfinity : static_cast<std::uint32_t>(v + 1));
        }
    return mat;
}

Verdict decide(const CoxeterMatrix& mat, const Word& w) { return is_identity_tits(mat, w).verdict; }

}  // namespace

TEST_CASE("examples") {
    CoxeterMatrix a2(2);
    a2.set(0, 1, 3);
    CHECK(decide(a2, letters({0, 1, 0, 1, 0, 1})) == Verdict::identity);
    CHECK(decide(a2, letters({0, 1})) == Verdict::non_identity);
    CHECK(decide(a2, Word{}) == Verdict::identity);
    CHECK(decide(a2, letters({0, 1, 0})) == Verdict::non_identity);
    CHECK(decide(a2, letters({0, 1, 0, 1, 0})) == Verdict::non_identity);
    // Inverses are the generators themselves.
    CHECK(decide(a2, Word{neg(0), neg(0)}) == Verdict::identity);
    CHECK(decide(a2, Word{neg(0), pos(1), pos(0), neg(1), pos(0), pos(1)}) == Verdict::identity);

    CoxeterMatrix free2(2);  // m = infinity: free product of two Z/2
    CHECK(decide(free2, letters({0, 1, 0, 1, 0, 1})) == Verdict::non_identity);
    CHECK(decide(free2, letters({0, 1, 1, 0})) == Verdict::identity);

    // Needs a braid move before anything cancels: s2 s1 s2 s1 s2 s1 in A_2
    // rearranged as s1 s2 s3 s2 s1 s2 s3 s2 ... is covered by the oracle tests;
    // here a classic A_3 identity of length 12 that avoids squares.
    const auto a3 = CoxeterMatrix::type_a(3);
    const auto w = letters({0, 2, 0, 2});
    CHECK(decide(a3, w) == Verdict::identity);
    CHECK(decide(a3, letters({0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2})) == Verdict::identity);  // (s1 s2 s3)^4
    CHECK(decide(a3, letters({0, 1, 2, 0, 1, 2, 0, 1, 2})) == Verdict::non_identity);
}

TEST_CASE("validate_coxeter") {
    GroupPresentation p;
    p.generators = Alphabet::numbered("s", 3);
    p.family = Family::coxeter;
    p.public_facts = PublicFacts::coxeter_involutions;
    p.relators = {{1, braid_relator(0, 1, 3)}, {2, braid_relator(2, 1, 2)}};
    const auto mat = validate_coxeter(p);
    CHECK(mat.at(0, 1) == 3);
    CHECK(mat.at(1, 2) == 2);
    CHECK(mat.at(0, 2) == CoxeterMatrix::kInfinity);

    auto bad = p;
    bad.relators.push_back({3, braid_relator(1, 0, 4)});
    CHECK_THROWS_AS(validate_coxeter(bad), ValidationError);  // duplicate pair

    bad = p;
    bad.relators[0].word = Word{pos(0), pos(1), pos(0)};
    CHECK_THROWS_AS(validate_coxeter(bad), ValidationError);

    bad = p;
    bad.relators[0].word = Word{pos(0), neg(1), pos(0), neg(1)};
    CHECK_THROWS_AS(validate_coxeter(bad), ValidationError);

    bad = p;
    bad.relators[0].word = Word{pos(0), pos(1), pos(0), pos(2)};
    CHECK_THROWS_AS(validate_coxeter(bad), ValidationError);

    bad = p;
    bad.relators[0].word = Word{pos(0), pos(1)};
    CHECK_THROWS_AS(validate_coxeter(bad), ValidationError);  // m = 1

    bad = p;
    bad.public_facts = PublicFacts::none;
    CHECK_THROWS_AS(validate_coxeter(bad), ValidationError);

    CoxeterMatrix m(2);
    CHECK_THROWS_AS(m.set(0, 0, 2), ValidationError);
    CHECK_THROWS_AS(m.set(0, 1, 1), ValidationError);
    CHECK_THROWS_AS(is_identity_tits(m, letters({0, 2})), ValidationError);
}

TEST_CASE("type A agrees with the permutation oracle exhaustively (k <= 3, |w| <= 8)") {
    for (std::uint32_t k = 1; k <= 3; ++k) {
        const auto mat = CoxeterMatrix::type_a(k);
        for (std::size_t len = 0; len <= 8; ++len)
            oracle::for_each_word(positive_alphabet(k), len, [&](const Word& w) {
                const auto v = decide(mat, w);
                REQUIRE(v != Verdict::undecided);
                CHECK((v == Verdict::identity) == perm_oracle_type_a(k, w));
            });
    }
}

TEST_CASE("type A agrees with the permutation oracle on random words (k = 4, |w| <= 16)") {
    Rng rng(404);
    const auto mat = CoxeterMatrix::type_a(4);
    int identities = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto w = random_positive(rng, 4, uniform_below(rng, 17));
        // Splice in w' w'^-1 half the time so identities are not rare.
        if (trial % 2 == 0) {
            const auto half = random_positive(rng, 4, 8);
            w = concat(half, invert(half));
        }
        const auto v = decide(mat, w);
        REQUIRE(v != Verdict::undecided);
        const bool truth = perm_oracle_type_a(4, w);
        identities += truth;
        CHECK((v == Verdict::identity) == truth);
    }
    CHECK(identities >= 500);
}

TEST_CASE("type B and dihedral groups agree with their oracles") {
    for (std::uint32_t k = 2; k <= 3; ++k) {
        const auto mat = type_b(k);
        for (std::size_t len = 0; len <= 8; ++len)
            oracle::for_each_word(positive_alphabet(k), len, [&](const Word& w) {
                CHECK((decide(mat, w) == Verdict::identity) == oracle::signed_perm_oracle_type_b(k, w));
            });
    }
    for (std::uint32_t q = 3; q <= 7; ++q) {  // the q-gon action is faithful from q = 3
        CoxeterMatrix mat(2);
        mat.set(0, 1, q);
        for (std::size_t len = 0; len <= 12; ++len)
            oracle::for_each_word(positive_alphabet(2), len, [&](const Word& w) {
                CHECK((decide(mat, w) == Verdict::identity) == oracle::dihedral_reflection_oracle(q, w));
            });
    }
}

TEST_CASE("dropping relators never creates identities") {
    // G' = <S | subset of relators> surjects onto G, so w =_{G'} 1 implies w =_G 1.
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + uniform_below(rng, 3);
        const auto full = random_matrix(rng, k);
        auto partial = full;
        const auto i = uniform_below(rng, k);
        auto j = uniform_below(rng, k - 1);
        if (j >= i) ++j;
        partial.set(i, j, CoxeterMatrix::kInfinity);

        // A product of conjugated relators of G' is trivial in both groups.
        Word w;
        for (int f = 0; f < 3; ++f) {
            const auto a = static_cast<std::uint32_t>(uniform_below(rng, k));
            auto b = static_cast<std::uint32_t>(uniform_below(rng, k - 1));
            if (b >= a) ++b;
            if (!partial.is_finite(a, b)) continue;
            const auto g = random_positive(rng, static_cast<std::uint32_t>(k), 2);
            w = concat(w, concat(invert(g), concat(braid_relator(a, b, partial.at(a, b)), g)));
        }
        CHECK(decide(partial, w) == Verdict::identity);
        CHECK(decide(full, w) == Verdict::identity);

        const auto r = random_positive(rng, static_cast<std::uint32_t>(k), uniform_below(rng, 12));
        if (decide(partial, r) == Verdict::identity) CHECK(decide(full, r) == Verdict::identity);
    }
}

TEST_CASE("terminates with a verdict on short words without a budget") {
    Rng rng(55);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t k = 2 + uniform_below(rng, 4);
        const auto mat = random_matrix(rng, k);
        const auto w = random_positive(rng, static_cast<std::uint32_t>(k), uniform_below(rng, 13));
        CHECK(is_identity_tits(mat, w, UINT64_MAX).verdict != Verdict::undecided);
    }
}

TEST_CASE("a tiny budget yields undecided, not a wrong answer") {
    const auto mat = CoxeterMatrix::type_a(3);
    const auto w = letters({0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2});
    const auto d = is_identity_tits(mat, w, 1);
    CHECK(d.verdict == Verdict::undecided);
    CHECK(d.stats.work >= 1);
}

TEST_CASE("solver from a presentation") {
    GroupPresentation p;
    p.generators = Alphabet::numbered("s", 2);
    p.family = Family::coxeter;
    p.public_facts = PublicFacts::coxeter_involutions;
    p.relators = {{1, braid_relator(0, 1, 3)}};
    const auto solver = make_solver(p, SolverOptions{});
    CHECK(solver->generator_count() == 2);
    CHECK(solver->decide(parse_word("s1 s2 s1 s2 s1 s2", p.generators)).verdict == Verdict::identity);
    CHECK(solver->decide(parse_word("s1 s2", p.generators)).verdict == Verdict::non_identity);
}
