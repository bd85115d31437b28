#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wpss/presentation.hpp"
#include "wpss/solver.hpp"

namespace wpss {

// Symmetric Coxeter matrix with m_ii = 1. Off-diagonal entries are >= 2,
// or kInfinity when the pair carries no relator.
class CoxeterMatrix {
public:
    static constexpr std::uint32_t kInfinity = 0;

    explicit CoxeterMatrix(std::size_t rank);
    // m_{i,i+1} = 3, every other pair 2: the symmetric group S_{k+1}.
    static CoxeterMatrix type_a(std::size_t rank);

    std::size_t rank() const noexcept { return rank_; }
    std::uint32_t at(std::size_t i, std::size_t j) const noexcept { return entries_[i * rank_ + j]; }
    bool is_finite(std::size_t i, std::size_t j) const noexcept { return at(i, j) != kInfinity; }
    // Throws ValidationError for i == j or a finite value below 2.
    void set(std::size_t i, std::size_t j, std::uint32_t value);

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    std::size_t rank_;
    std::vector<std::uint32_t> entries_;
};

// (s_i s_j)^m as a word of positive letters.
Word braid_relator(std::uint32_t i, std::uint32_t j, std::uint32_t m);

// Reads the matrix off a Coxeter-shaped presentation. Every relator must be
// (s_i s_j)^m or (s_j s_i)^m with m >= 2 and positive letters, at most one per
// pair, and the public facts must declare involutive generators. Missing
// pairs are infinite, so partial presentations validate too.
CoxeterMatrix validate_coxeter(const GroupPresentation& p);

struct CoxeterDecision {
    Verdict verdict = Verdict::undecided;
    EngineStats stats;
};

// Exact decision by length-non-increasing rewriting: square deletion,
// shortening of alternating runs longer than m_ij, and breadth-first braid
// move exploration whenever the cheap moves are exhausted. Inverse letters
// are read as their (involutive) positive generator. Exceeding
// `explored_word_cap` gives Verdict::undecided.
CoxeterDecision is_identity_tits(const CoxeterMatrix& mat, const Word& w,
                                 std::uint64_t explored_word_cap = kDefaultExploredWordCap);

// Type-A reference: the product of transpositions (g+1 g+2) for the letters
// of w is the identity permutation of {1..k+1}.
bool perm_oracle_type_a(std::size_t rank, const Word& w);

class CoxeterSolver final : public WordProblemSolver {
public:
    CoxeterSolver(CoxeterMatrix mat, std::uint64_t explored_word_cap)
        : mat_(std::move(mat)), cap_(explored_word_cap) {}

    Decision decide(const Word& w) const override;
    std::uint32_t generator_count() const noexcept override { return static_cast<std::uint32_t>(mat_.rank()); }
    const CoxeterMatrix& matrix() const noexcept { return mat_; }

private:
    CoxeterMatrix mat_;
    std::uint64_t cap_;
};

}  // namespace wpss
