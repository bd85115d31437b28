#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpss/access_structure.hpp"
#include "wpss/message.hpp"
#include "wpss/presentation.hpp"
#include "wpss/share.hpp"
#include "wpss/solver.hpp"

namespace wpss {

enum class PlatformFamily { coxeter, polycyclic_builtin };

std::string_view to_string(PlatformFamily f) noexcept;
std::optional<PlatformFamily> parse_platform_family(std::string_view s) noexcept;

struct EncodingConfig {
    double coverage_fraction = 0.8;
    std::size_t commutator_count = 0;  // 0: max(m, 8)
    std::size_t conjugator_length = 3;
    // The identity products alone run to a few hundred letters for m around
    // ten, so this is a sanity cap rather than a tight bound.
    std::size_t max_word_length = 4096;
    std::size_t max_message_bits = 4096;
    Budget decode_budget;
    std::uint64_t seed = 0;
    bool conjugate_whole_word = true;

    std::size_t factors_for(std::size_t m) const noexcept {
        return commutator_count ? commutator_count : (m > 8 ? m : 8);
    }
    // Throws ValidationError on out-of-range fields.
    void validate() const;
};

// The dealer's secret: the full presentation plus scheme metadata.
struct Scheme {
    SchemeId scheme_id;
    SchemeParams params{2, 2};
    std::string platform;  // e.g. "coxeter", "dihedral q=5"
    GroupPresentation presentation;

    friend bool operator==(const Scheme&, const Scheme&) = default;
};

// Scheme file (bit-exact):
//   WPSS-SCHEME v1
//   scheme-id: <hex64>
//   n: <int> / t: <int> / m: <int>
//   platform: <text>
//   <presentation block, family and public-facts lines included>
std::string serialize_scheme(const Scheme& s);
Scheme parse_scheme(std::string_view text);

// Coxeter: smallest k with C(k,2) >= m, m distinct pairs chosen uniformly,
// m_ij uniform in {2..6}, relators in random order. Polycyclic: a builtin
// with exactly m distributable relators, optionally restricted by name
// ("dihedral", "heisenberg", "abelian"); ValidationError when none fits.
GroupPresentation generate_platform(PlatformFamily family, const SchemeParams& params, std::uint64_t seed,
                                    const std::string& builtin = {}, std::string* platform_label = nullptr);

// generate_platform + a scheme id drawn from the same seed.
Scheme setup_scheme(PlatformFamily family, const SchemeParams& params, std::uint64_t seed,
                    const std::string& builtin = {});

// Decision engine the dealer verifies against; the combiner builds the same.
std::unique_ptr<WordProblemSolver> dealer_solver(const GroupPresentation& p, const Budget& budget);

// Product of l commutators [r_c(j), w_j] over `relator_subset` (global
// indices, cycled in order), optionally conjugated by a random word. Retries
// up to 100 times until the engine confirms the identity within the decode
// budget and the length fits; BudgetError/ValidationError otherwise.
Word encode_identity_word(const GroupPresentation& p, const WordProblemSolver& solver,
                          const std::vector<std::size_t>& relator_subset, const EncodingConfig& cfg, Rng& rng);

// Random core inserted into an identity-style product; released only after
// the engine proves it is not the identity.
Word encode_nonidentity_word(const GroupPresentation& p, const WordProblemSolver& solver,
                             const std::vector<std::size_t>& relator_subset, const EncodingConfig& cfg, Rng& rng);

struct EncodeReport {
    EncodedMessage message;
    std::vector<std::vector<std::size_t>> relators_used;  // per word, sorted distinct
    std::size_t relators_covered = 0;                      // over identity words
    std::vector<std::string> warnings;
};

EncodeReport encode_message(const Scheme& scheme, const Bits& bits, const EncodingConfig& cfg);

// Words built only from R_j so that participant j alone decides them. Bit 0
// words are proved non-identity in <gens | R_j> and in G. Coxeter only.
EncodeReport encode_for_recipient(const Scheme& scheme, const Share& recipient, const Bits& bits,
                                  const EncodingConfig& cfg);

// RNG stream for signature offsets chosen by front ends.
inline constexpr std::uint64_t kSignatureStream = 0xfffffffffffff101ULL;

// Inserts `signature` contiguously at a uniform offset in [0, |payload|].
Bits embed_signature(const Bits& payload, const Bits& signature, Rng& rng,
                     std::size_t max_message_bits = EncodingConfig{}.max_message_bits);
Bits insert_at(const Bits& payload, const Bits& signature, std::size_t offset);

}  // namespace wpss
