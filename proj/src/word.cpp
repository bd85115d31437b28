#include "wpss/word.hpp"

#include <algorithm>
#include <charconv>

#include "wpss/error.hpp"

namespace wpss {

bool Word::is_freely_reduced() const noexcept {
    for (std::size_t i = 1; i < letters_.size(); ++i)
        if (letters_[i - 1].cancels(letters_[i])) return false;
    return true;
}

std::uint32_t Word::generator_bound() const noexcept {
    std::uint32_t bound = 0;
    for (const auto& l : letters_) bound = std::max(bound, l.generator + 1);
    return bound;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
        if (!is_valid_generator_name(names_[i]))
            throw ValidationError("invalid generator name '" + names_[i] + "'");
        if (!index_.emplace(names_[i], i).second)
            throw ValidationError("duplicate generator name '" + names_[i] + "'");
    }
}

Alphabet Alphabet::numbered(std::string_view prefix, std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return Alphabet(std::move(names));
}

std::int64_t Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool is_valid_generator_name(std::string_view name) noexcept {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const auto& l : w) {
        if (!stack.empty() && stack.back().cancels(l))
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return Word(std::move(stack));
}

Word invert(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
    return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

Word power(const Word& w, std::int64_t exponent) {
    const Word base = exponent < 0 ? invert(w) : w;
    Word out;
    for (std::int64_t i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out.append(base);
    return out;
}

Word commutator(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    out.append(invert(a));
    out.append(invert(b));
    return free_reduce(out);
}

Word conjugate(const Word& w, const Word& g) {
    Word out = invert(g);
    out.append(w);
    out.append(g);
    return free_reduce(out);
}

Word parse_word(std::string_view text, const Alphabet& gens) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (text[i] < 'a' || text[i] > 'z') throw ParseError("expected generator name", i);
        while (i < n && ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= '0' && text[i] <= '9'))) ++i;
        const auto name = text.substr(start, i - start);
        const auto g = gens.find(name);
        if (g < 0) throw ParseError("unknown generator '" + std::string(name) + "'", start);

        long long exponent = 1;
        if (i < n && text[i] == '^') {
            const std::size_t exp_start = ++i;
            std::size_t j = i;
            if (j < n && text[j] == '-') ++j;
            while (j < n && text[j] >= '0' && text[j] <= '9') ++j;
            const auto* first = text.data() + exp_start;
            const auto* last = text.data() + j;
            auto [ptr, ec] = std::from_chars(first, last, exponent);
            if (ec != std::errc() || ptr != last || j == exp_start)
                throw ParseError("malformed exponent", exp_start);
            if (exponent == 0) throw ParseError("zero exponent", exp_start);
            if (exponent > 1'000'000 || exponent < -1'000'000)
                throw ParseError("exponent out of range", exp_start);
            i = j;
        }
        if (i < n && text[i] != ' ') throw ParseError("unexpected character", i);

        const Letter l{static_cast<std::uint32_t>(g), static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
        for (long long r = 0; r < (exponent < 0 ? -exponent : exponent); ++r) letters.push_back(l);
    }
    return Word(std::move(letters));
}

std::string serialize_word(const Word& w, const Alphabet& gens) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const auto run = static_cast<long long>(j - i);
        if (!out.empty()) out += ' ';
        out += gens.name(w[i].generator);
        const long long exponent = w[i].sign > 0 ? run : -run;
        if (exponent != 1) {
            out += '^';
            out += std::to_string(exponent);
        }
        i = j;
    }
    return out;
}

Word random_word(std::uint32_t generator_count, std::size_t length, Rng& rng) {
    if (length == 0) throw ValidationError("random_word: target length must be positive");
    if (generator_count == 0) throw ValidationError("random_word: no generators");
    const std::uint64_t signed_letters = 2ULL * generator_count;
    auto letter_of = [](std::uint64_t code) {
        return Letter{static_cast<std::uint32_t>(code / 2), static_cast<std::int8_t>(code % 2 ? -1 : 1)};
    };
    std::vector<Letter> letters;
    letters.reserve(length);
    std::uint64_t prev = uniform_below(rng, signed_letters);
    letters.push_back(letter_of(prev));
    while (letters.size() < length) {
        // Skip the inverse of the previous letter: draw from 2k-1 codes and
        // step over the forbidden one.
        const std::uint64_t forbidden = prev ^ 1ULL;
        std::uint64_t code = uniform_below(rng, signed_letters - 1);
        if (code >= forbidden) ++code;
        letters.push_back(letter_of(code));
        prev = code;
    }
    return Word(std::move(letters));
}

}  // namespace wpss
