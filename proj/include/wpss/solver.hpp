#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "wpss/presentation.hpp"
#include "wpss/word.hpp"

namespace wpss {

// Three-valued word-problem outcome. `undecided` means the engine ran out
// of budget (or, for partial presentations, lacked a rewriting rule); it is
// never a negative answer.
enum class Verdict { identity, non_identity, undecided };

std::string_view to_string(Verdict v) noexcept;

struct EngineStats {
    std::uint64_t work = 0;           // explored words (Coxeter) or rewrite steps (polycyclic)
    std::uint64_t peak_frontier = 0;  // largest BFS queue / collection stack
};

struct Decision {
    Verdict verdict = Verdict::undecided;
    EngineStats stats;
    std::string note;  // why a decision is undecided, empty otherwise
};

inline constexpr std::uint64_t kDefaultExploredWordCap = 5'000'000;
inline constexpr std::uint64_t kDefaultRewriteStepCap = 10'000'000;

struct Budget {
    std::uint64_t explored_words = kDefaultExploredWordCap;  // Coxeter engine
    std::uint64_t rewrite_steps = kDefaultRewriteStepCap;    // polycyclic engine

    static Budget uniform(std::uint64_t cap) { return Budget{cap, cap}; }
    // Defaults, or both caps set from WPSS_BUDGET when it holds a positive integer.
    static Budget from_environment();

    friend bool operator==(const Budget&, const Budget&) = default;
};

class WordProblemSolver {
public:
    virtual ~WordProblemSolver() = default;
    virtual Decision decide(const Word& w) const = 0;
    virtual std::uint32_t generator_count() const noexcept = 0;
};

// Builds the engine matching `p.family`. Coxeter presentations must pass
// validate_coxeter. Polycyclic presentations are trusted to be consistent
// only when `assume_consistent` is set (dealer-issued builtins or an
// explicit user assertion); with `allow_partial`, missing rewriting rules
// turn into undecided verdicts instead of a ValidationError. Raw
// presentations are rejected.
struct SolverOptions {
    Budget budget;
    bool assume_consistent = false;
    bool allow_partial = false;
};

std::unique_ptr<WordProblemSolver> make_solver(const GroupPresentation& p, const SolverOptions& options);

}  // namespace wpss
