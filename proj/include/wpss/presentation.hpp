#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpss/word.hpp"

namespace wpss {

enum class Family { coxeter, polycyclic, raw };
enum class PublicFacts { none, coxeter_involutions };

std::string_view to_string(Family f) noexcept;
std::string_view to_string(PublicFacts f) noexcept;
std::optional<Family> parse_family(std::string_view s) noexcept;
std::optional<PublicFacts> parse_public_facts(std::string_view s) noexcept;

// A relator r_j with its 1-based global index j.
struct Relator {
    std::size_t index = 0;
    Word word;

    friend bool operator==(const Relator&, const Relator&) = default;
};

// <generators | relators>. Relators are kept sorted by global index. A full
// presentation carries indices 1..m without gaps; partial reconstructions
// keep the global indices of the relators they hold.
struct GroupPresentation {
    Alphabet generators;
    std::vector<Relator> relators;
    Family family = Family::raw;
    PublicFacts public_facts = PublicFacts::none;

    // Throws ValidationError unless: k >= 1, every relator is nonempty,
    // freely reduced and over the listed generators, indices strictly
    // increase. With `require_contiguous`, indices must be exactly 1..m.
    void validate(bool require_contiguous = true) const;

    const Relator* find(std::size_t index) const;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Presentation text block:
//   generators: a b c
//   relator 1: <word>
//   ...
//   family: coxeter|polycyclic|raw          (optional, default raw)
//   public-facts: coxeter-involutions|none  (optional)
// A coxeter block without a public-facts line is read as asserting
// involutive generators, which is what the family tag means.
GroupPresentation parse_presentation(std::string_view text);
std::string serialize_presentation(const GroupPresentation& p);

// Line-oriented helpers shared by the share, scheme and message formats.
namespace text {

std::vector<std::string_view> split_lines(std::string_view text);
// Returns the value after "key: " (or after "key:" when the value is empty).
// Throws ParseError naming `line_no` (1-based) when the key does not match.
std::string_view expect_field(std::string_view line, std::string_view key, std::size_t line_no);
std::size_t parse_count(std::string_view value, std::size_t line_no);
std::vector<std::string> split_names(std::string_view value, std::size_t line_no);
// "relator j: word" -> (j, word text)
std::pair<std::size_t, std::string_view> split_relator_line(std::string_view line, std::size_t line_no);

}  // namespace text

}  // namespace wpss
