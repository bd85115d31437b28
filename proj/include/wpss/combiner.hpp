#pragma once

#include <span>
#include <string>
#include <vector>

#include "wpss/message.hpp"
#include "wpss/share.hpp"
#include "wpss/solver.hpp"

namespace wpss {

struct DecodeResult {
    Bits bits;                       // meaningful where decisions are not undecided
    std::vector<Decision> per_word;
    bool complete = false;           // the reconstruction held all m relators
    std::vector<std::size_t> participants;

    std::size_t undecided() const noexcept;
    // 0/1 per word, '?' for undecided words.
    std::string render() const;
};

// Full decode. Throws ThresholdError below t distinct participants,
// IntegrityError on mismatched scheme ids, inconsistent shares, or any word
// the engine cannot decide within `budget` (dealer words are pre-verified
// under the same budget), ValidationError if the family shape is wrong.
DecodeResult decode_message(std::span<const Share> shares, const EncodedMessage& msg,
                            const Budget& budget = Budget{});

// Decides every word in <gens | R_j> only. Undecided words are reported,
// not fatal; their bit is left at 0 and marked in per_word.
DecodeResult decode_single(const Share& share, const EncodedMessage& msg, const Budget& budget = Budget{});

struct SignatureReport {
    std::vector<std::size_t> offsets;  // every start of a contiguous match
    bool authentic = false;            // at least one offset
    bool degenerate = false;           // empty signature matches trivially
};

SignatureReport verify_signature(const Bits& bits, const Bits& signature);

}  // namespace wpss
