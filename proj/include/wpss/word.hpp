#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wpss/rng.hpp"

namespace wpss {

// A signed generator letter g^{+1} or g^{-1}. `generator` is the 0-based
// index into the owning presentation's generator list.
struct Letter {
    std::uint32_t generator = 0;
    std::int8_t sign = 1;

    constexpr Letter inverse() const noexcept {
        return Letter{generator, static_cast<std::int8_t>(-sign)};
    }
    constexpr bool cancels(Letter other) const noexcept {
        return generator == other.generator && sign == -other.sign;
    }
    friend constexpr bool operator==(Letter, Letter) = default;
};

constexpr Letter pos(std::uint32_t g) noexcept { return Letter{g, 1}; }
constexpr Letter neg(std::uint32_t g) noexcept { return Letter{g, -1}; }

// A word in the free group on the generators. Words are plain letter
// sequences; exponent notation exists only in the text format.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    void push_back(Letter l) { letters_.push_back(l); }
    void append(const Word& w) { letters_.insert(letters_.end(), w.begin(), w.end()); }

    bool is_freely_reduced() const noexcept;
    // Largest generator index used plus one (0 for the empty word).
    std::uint32_t generator_bound() const noexcept;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

// Ordered, uniquely named generator list shared by every word of a
// presentation. Names follow [a-z][a-z0-9]*.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    // Names prefix1 .. prefixk, e.g. s1 s2 s3.
    static Alphabet numbered(std::string_view prefix, std::size_t k);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::uint32_t g) const { return names_.at(g); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    // Index of `name`, or -1 if absent.
    std::int64_t find(std::string_view name) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

bool is_valid_generator_name(std::string_view name) noexcept;

Word free_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, std::int64_t exponent);
// free_reduce(a b a^-1 b^-1)
Word commutator(const Word& a, const Word& b);
// free_reduce(g^-1 w g)
Word conjugate(const Word& w, const Word& g);

// Word grammar: terms separated by single or repeated spaces; a term is a
// generator name optionally followed by ^integer (nonzero). Throws
// ParseError with the byte offset of the first offending character.
Word parse_word(std::string_view text, const Alphabet& gens);
// Canonical text: maximal equal-letter runs in exponent notation, single
// spaces, no trailing whitespace.
std::string serialize_word(const Word& w, const Alphabet& gens);

// Uniformly random freely reduced word of exactly `length` letters over the
// first `generator_count` generators. Throws ValidationError if length == 0.
Word random_word(std::uint32_t generator_count, std::size_t length, Rng& rng);

}  // namespace wpss
