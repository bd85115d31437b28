#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpss/presentation.hpp"
#include "wpss/solver.hpp"

namespace wpss {

// x_l^{exponent} = tail, tail a word in x_{l+1}..x_k.
struct PowerRule {
    std::uint32_t exponent = 0;
    Word tail;

    friend bool operator==(const PowerRule&, const PowerRule&) = default;
};

// Polycyclic presentation on x_1..x_k (0-based here):
//   x_j^{x_i}      = conjugate(i, j)          for i < j
//   x_j^{x_i^{-1}} = inverse_conjugate(i, j)  for i < j
//   x_l^{r_l}      = power(l)->tail           for l in I
// with x^y = y^-1 x y. Every right-hand side is a word in x_{i+1}..x_k
// (x_{l+1}..x_k for power tails). Absent entries are allowed; collection
// reports a missing rule only when it actually needs one.
class PolycyclicPresentation {
public:
    explicit PolycyclicPresentation(std::size_t rank);

    std::size_t rank() const noexcept { return rank_; }

    void set_conjugate(std::uint32_t i, std::uint32_t j, Word w);
    void set_inverse_conjugate(std::uint32_t i, std::uint32_t j, Word v);
    void set_power(std::uint32_t l, std::uint32_t exponent, Word tail);
    void clear_conjugate(std::uint32_t i, std::uint32_t j);
    void clear_inverse_conjugate(std::uint32_t i, std::uint32_t j);
    void clear_power(std::uint32_t l);

    const std::optional<Word>& conjugate(std::uint32_t i, std::uint32_t j) const { return conj_.at(i * rank_ + j); }
    const std::optional<Word>& inverse_conjugate(std::uint32_t i, std::uint32_t j) const {
        return inv_conj_.at(i * rank_ + j);
    }
    const std::optional<PowerRule>& power(std::uint32_t l) const { return power_.at(l); }

    friend bool operator==(const PolycyclicPresentation&, const PolycyclicPresentation&) = default;

private:
    void check_pair(std::uint32_t i, std::uint32_t j) const;
    void check_later(const Word& w, std::uint32_t after) const;

    std::size_t rank_;
    std::vector<std::optional<Word>> conj_;
    std::vector<std::optional<Word>> inv_conj_;
    std::vector<std::optional<PowerRule>> power_;
};

// Collected form x_1^{e_1} ... x_k^{e_k}; 0 <= e_l < r_l for l in I.
struct NormalForm {
    std::vector<std::int64_t> exponents;

    bool is_trivial() const noexcept;
    Word to_word() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct CollectionResult {
    enum class Status { ok, budget, missing_rule };
    Status status = Status::ok;
    NormalForm form;  // meaningful only when status == ok
    EngineStats stats;
    std::string note;
};

// From-the-left collection. Never throws for missing rules or budget
// exhaustion; see CollectionResult::status.
CollectionResult try_collect(const PolycyclicPresentation& p, const Word& w,
                             std::uint64_t step_cap = kDefaultRewriteStepCap);
// Throws BudgetError or ValidationError (missing rule) instead.
NormalForm collect(const PolycyclicPresentation& p, const Word& w, std::uint64_t step_cap = kDefaultRewriteStepCap);

Decision is_identity_pc(const PolycyclicPresentation& p, const Word& w,
                        std::uint64_t step_cap = kDefaultRewriteStepCap);

// Fills absent inverse-conjugation rules x_j^{x_i^{-1}} for generators
// without a power rule, from the conjugation rules. Needs w_ij to collect
// to x_j^{+-1} times a word in x_{j+1}..x_k. Returns the pairs it could not
// derive (empty on full success).
std::vector<std::pair<std::uint32_t, std::uint32_t>> derive_inverse_conjugates(
    PolycyclicPresentation& p, std::uint64_t step_cap = kDefaultRewriteStepCap);

// Number of relators the presentation contributes to a sharing scheme:
// conjugation rules plus power rules. Inverse-conjugation rules are
// consequences of those and are never distributed.
std::size_t distributable_relator_count(const PolycyclicPresentation& p);

// Relator words: x_i^-1 x_j x_i w_ij^-1, x_l^{r_l} u_l^-1, and with
// `include_inverse_rules` also x_i x_j x_i^-1 v_ij^-1. Indices run 1..count
// in the order conjugates (i, j lexicographic), inverse rules, powers.
GroupPresentation to_group_presentation(const PolycyclicPresentation& p, const Alphabet& names,
                                        bool include_inverse_rules = false);

// Recognizes the three relator shapes above. Without `allow_partial`, every
// pair i < j needs a conjugation rule and every generator without a power
// rule needs derivable inverse rules; otherwise ValidationError.
PolycyclicPresentation polycyclic_from_presentation(const GroupPresentation& p, bool allow_partial = false);

struct BuiltinPolycyclic {
    std::string name;
    std::string parameters;  // human readable, e.g. "q=4"
    PolycyclicPresentation presentation;
    // Independent identity test (permutations, integer matrices, exponent sums).
    std::function<bool(const Word&)> oracle;
};

// D_q: x1 reflection, x2 rotation; x2^{x1} = x2^-1, x1^2 = 1, x2^q = 1.
BuiltinPolycyclic builtin_dihedral(std::uint32_t q);
// Upper unitriangular 3x3 integer matrices; x2^{x1} = x2 x3^-1, x3 central.
BuiltinPolycyclic builtin_heisenberg();
// Direct product of cyclic groups; order 0 means infinite cyclic.
BuiltinPolycyclic builtin_abelian(const std::vector<std::uint32_t>& orders);

// Representative catalog: dihedral q=4, heisenberg, abelian (2,3).
std::vector<BuiltinPolycyclic> builtin_presentations();

class PolycyclicSolver final : public WordProblemSolver {
public:
    PolycyclicSolver(PolycyclicPresentation p, std::uint64_t step_cap) : p_(std::move(p)), cap_(step_cap) {}

    Decision decide(const Word& w) const override { return is_identity_pc(p_, w, cap_); }
    std::uint32_t generator_count() const noexcept override { return static_cast<std::uint32_t>(p_.rank()); }
    const PolycyclicPresentation& presentation() const noexcept { return p_; }

private:
    PolycyclicPresentation p_;
    std::uint64_t cap_;
};

}  // namespace wpss
