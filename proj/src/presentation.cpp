#include "wpss/presentation.hpp"

#include <charconv>

#include "wpss/error.hpp"

namespace wpss {

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::coxeter: return "coxeter";
        case Family::polycyclic: return "polycyclic";
        case Family::raw: return "raw";
    }
    return "raw";
}

std::string_view to_string(PublicFacts f) noexcept {
    return f == PublicFacts::coxeter_involutions ? "coxeter-involutions" : "none";
}

std::optional<Family> parse_family(std::string_view s) noexcept {
    if (s == "coxeter") return Family::coxeter;
    if (s == "polycyclic") return Family::polycyclic;
    if (s == "raw") return Family::raw;
    return std::nullopt;
}

std::optional<PublicFacts> parse_public_facts(std::string_view s) noexcept {
    if (s == "coxeter-involutions") return PublicFacts::coxeter_involutions;
    if (s == "none") return PublicFacts::none;
    return std::nullopt;
}

void GroupPresentation::validate(bool require_contiguous) const {
    if (generators.size() == 0) throw ValidationError("presentation has no generators");
    std::size_t previous = 0;
    for (std::size_t pos = 0; pos < relators.size(); ++pos) {
        const auto& r = relators[pos];
        if (r.index <= previous)
            throw ValidationError("relator indices must be unique and increasing (index " +
                                  std::to_string(r.index) + ")");
        if (require_contiguous && r.index != pos + 1)
            throw ValidationError("relator indices must be exactly 1..m (gap before " +
                                  std::to_string(r.index) + ")");
        if (r.word.empty()) throw ValidationError("relator " + std::to_string(r.index) + " is empty");
        if (!r.word.is_freely_reduced())
            throw ValidationError("relator " + std::to_string(r.index) + " is not freely reduced");
        if (r.word.generator_bound() > generators.size())
            throw ValidationError("relator " + std::to_string(r.index) + " uses an unlisted generator");
        previous = r.index;
    }
}

const Relator* GroupPresentation::find(std::size_t index) const {
    for (const auto& r : relators)
        if (r.index == index) return &r;
    return nullptr;
}

namespace text {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::string_view expect_field(std::string_view line, std::string_view key, std::size_t line_no) {
    if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key || line[key.size()] != ':')
        throw ParseError("line " + std::to_string(line_no) + ": expected '" + std::string(key) + ":'", line_no);
    auto rest = line.substr(key.size() + 1);
    if (rest.empty()) return rest;
    if (rest[0] != ' ')
        throw ParseError("line " + std::to_string(line_no) + ": expected a space after '" + std::string(key) + ":'",
                         line_no);
    return rest.substr(1);
}

std::size_t parse_count(std::string_view value, std::size_t line_no) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer", line_no);
    return out;
}

std::vector<std::string> split_names(std::string_view value, std::size_t line_no) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < value.size()) {
        auto end = value.find(' ', i);
        if (end == std::string_view::npos) end = value.size();
        if (end == i)
            throw ParseError("line " + std::to_string(line_no) + ": repeated space in generator list", line_no);
        names.emplace_back(value.substr(i, end - i));
        i = end + 1;
    }
    if (names.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty generator list", line_no);
    return names;
}

std::pair<std::size_t, std::string_view> split_relator_line(std::string_view line, std::size_t line_no) {
    constexpr std::string_view prefix = "relator ";
    if (line.substr(0, prefix.size()) != prefix)
        throw ParseError("line " + std::to_string(line_no) + ": expected 'relator <j>:'", line_no);
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("line " + std::to_string(line_no) + ": missing ':' after relator index", line_no);
    const auto index = parse_count(line.substr(prefix.size(), colon - prefix.size()), line_no);
    if (index == 0) throw ParseError("line " + std::to_string(line_no) + ": relator indices start at 1", line_no);
    auto word = line.substr(colon + 1);
    if (!word.empty()) {
        if (word[0] != ' ')
            throw ParseError("line " + std::to_string(line_no) + ": expected a space after ':'", line_no);
        word = word.substr(1);
    }
    return {index, word};
}

}  // namespace text

namespace {

Word parse_word_on_line(std::string_view word, const Alphabet& gens, std::size_t line_no) {
    try {
        return parse_word(word, gens);
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
}

}  // namespace

GroupPresentation parse_presentation(std::string_view input) {
    const auto lines = text::split_lines(input);
    if (lines.empty()) throw ParseError("empty presentation", 0);

    GroupPresentation p;
    try {
        p.generators = Alphabet(text::split_names(text::expect_field(lines[0], "generators", 1), 1));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("line 1: ") + e.what(), 1);
    }

    std::size_t i = 1;
    for (; i < lines.size() && lines[i].starts_with("relator "); ++i) {
        auto [index, word] = text::split_relator_line(lines[i], i + 1);
        p.relators.push_back(Relator{index, parse_word_on_line(word, p.generators, i + 1)});
    }
    bool facts_given = false;
    if (i < lines.size() && lines[i].starts_with("family:")) {
        const auto value = text::expect_field(lines[i], "family", i + 1);
        const auto family = parse_family(value);
        if (!family) throw ParseError("line " + std::to_string(i + 1) + ": unknown family", i + 1);
        p.family = *family;
        ++i;
    }
    if (i < lines.size() && lines[i].starts_with("public-facts:")) {
        const auto facts = parse_public_facts(text::expect_field(lines[i], "public-facts", i + 1));
        if (!facts) throw ParseError("line " + std::to_string(i + 1) + ": unknown public facts", i + 1);
        p.public_facts = *facts;
        facts_given = true;
        ++i;
    }
    for (; i < lines.size(); ++i)
        if (!lines[i].empty()) throw ParseError("line " + std::to_string(i + 1) + ": unexpected content", i + 1);

    if (!facts_given && p.family == Family::coxeter) p.public_facts = PublicFacts::coxeter_involutions;
    p.validate(false);
    return p;
}

std::string serialize_presentation(const GroupPresentation& p) {
    std::string out = "generators:";
    for (const auto& name : p.generators.names()) out += " " + name;
    out += '\n';
    for (const auto& r : p.relators) {
        out += "relator " + std::to_string(r.index) + ":";
        if (!r.word.empty()) out += " " + serialize_word(r.word, p.generators);
        out += '\n';
    }
    out += "family: " + std::string(to_string(p.family)) + '\n';
    out += "public-facts: " + std::string(to_string(p.public_facts)) + '\n';
    return out;
}

}  // namespace wpss
