#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpss/access_structure.hpp"
#include "wpss/presentation.hpp"
#include "wpss/rng.hpp"

namespace wpss {

// 64 lowercase hex digits identifying one dealt scheme.
class SchemeId {
public:
    SchemeId() = default;
    // Throws ValidationError on anything but 64 hex digits.
    explicit SchemeId(std::string hex);
    static SchemeId random(Rng& rng);

    const std::string& hex() const noexcept { return hex_; }
    friend bool operator==(const SchemeId&, const SchemeId&) = default;

private:
    std::string hex_;
};

// One participant's relator subset R_i plus the public metadata.
struct Share {
    SchemeId scheme_id;
    std::size_t participant = 0;  // 1-based
    SchemeParams params{2, 2};
    Alphabet generators;
    PublicFacts public_facts = PublicFacts::none;
    std::vector<Relator> relators;  // sorted by global index

    friend bool operator==(const Share&, const Share&) = default;
};

// Share file (bit-exact):
//   WPSS-SHARE v1
//   scheme-id: <hex64>
//   n: <int> / t: <int> / m: <int> / participant: <int>
//   generators: <name>...
//   public-facts: coxeter-involutions|none
//   relator <j>: <word>      (one per held relator)
std::string serialize_share(const Share& s);
Share parse_share(std::string_view text);

// Share i receives exactly {(j, r_j) : j in R_i}. Throws ValidationError if
// the presentation does not carry exactly m relators indexed 1..m.
std::vector<Share> make_shares(const GroupPresentation& p, const AccessStructure& a, const SchemeId& scheme_id);

struct Reconstruction {
    GroupPresentation presentation;         // union of held relators, global indices
    bool complete = false;                  // all m relators present
    std::vector<std::size_t> participants;  // sorted distinct participant indices
    std::vector<std::size_t> missing;       // relator indices absent from the union
    SchemeParams params{2, 2};
    SchemeId scheme_id;
};

// Family recorded for a reconstructed presentation: shares only carry the
// public facts, and the dealer issues coxeter-involution facts for Coxeter
// platforms and none for polycyclic ones.
Family family_from_facts(PublicFacts facts) noexcept;

// Union of the shares' relator sets. Throws ValidationError on an empty
// list, IntegrityError on mismatched scheme metadata, a repeated
// participant, or two different words under one global index.
Reconstruction reconstruct(std::span<const Share> shares);

}  // namespace wpss
