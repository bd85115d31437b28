#pragma once

#include <span>
#include <string>
#include <vector>

#include "wpss/combiner.hpp"
#include "wpss/message.hpp"
#include "wpss/share.hpp"
#include "wpss/solver.hpp"

namespace wpss {

enum class AttackVerdict { proved_identity, proved_non_identity, undecided };

std::string_view to_string(AttackVerdict v) noexcept;

struct AttackWord {
    AttackVerdict verdict = AttackVerdict::undecided;
    Verdict in_partial = Verdict::undecided;  // exact verdict in G' where the engine gives one
    EngineStats stats;
    std::string note;
};

struct CoalitionReport {
    std::vector<std::size_t> participants;
    std::vector<std::size_t> missing;  // relator indices absent from the coalition's union
    bool complete = false;
    Family family = Family::raw;
    std::vector<AttackWord> words;

    std::size_t count(AttackVerdict v) const noexcept;
};

// Decides the message in G' = <gens | union of the coalition's relators>.
// Identity in G' is identity in G (G is a quotient of G'), so it is reported
// as proved. Non-identity in G' proves nothing about G unless the coalition
// is complete; the G' verdict is attached instead. For polycyclic partial
// presentations only collection to the trivial form counts.
CoalitionReport coalition_attack(std::span<const Share> shares, const EncodedMessage& msg, const Budget& budget);

struct PoolCandidate {
    std::size_t index = 0;  // position in the pool
    std::string label;
    std::string decoded;    // 0/1 per word, '?' undecided
    std::vector<std::size_t> offsets;
    bool matched = false;
    std::size_t undecided = 0;
    std::string error;      // set when the candidate could not be used at all
};

// Decodes under every candidate, then ranks: signature matches first (more
// offsets first), then fewer undecided words, then pool order.
std::vector<PoolCandidate> pool_attack(std::span<const GroupPresentation> pool, const std::vector<std::string>& labels,
                                       const EncodedMessage& msg, const Bits& known_signature, const Budget& budget);

// Fraction of candidates other than `true_index` that matched.
double decoy_match_rate(const std::vector<PoolCandidate>& ranked, std::size_t true_index);

std::string format_report(const CoalitionReport& r);
std::string format_report(const std::vector<PoolCandidate>& ranked);

}  // namespace wpss
