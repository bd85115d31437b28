#include "wpss/share.hpp"

#include <algorithm>
#include <map>

#include "wpss/error.hpp"

namespace wpss {

SchemeId::SchemeId(std::string hex) : hex_(std::move(hex)) {
    const bool ok = hex_.size() == 64 && std::all_of(hex_.begin(), hex_.end(), [](char c) {
                        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
                    });
    if (!ok) throw ValidationError("scheme id must be 64 lowercase hex digits");
}

SchemeId SchemeId::random(Rng& rng) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex;
    for (int word = 0; word < 4; ++word) {
        std::uint64_t x = rng();
        for (int nibble = 0; nibble < 16; ++nibble) {
            hex += digits[x >> 60];
            x <<= 4;
        }
    }
    return SchemeId(std::move(hex));
}

std::string serialize_share(const Share& s) {
    std::string out = "WPSS-SHARE v1\n";
    out += "scheme-id: " + s.scheme_id.hex() + '\n';
    out += "n: " + std::to_string(s.params.n()) + '\n';
    out += "t: " + std::to_string(s.params.t()) + '\n';
    out += "m: " + std::to_string(s.params.m()) + '\n';
    out += "participant: " + std::to_string(s.participant) + '\n';
    out += "generators:";
    for (const auto& name : s.generators.names()) out += " " + name;
    out += '\n';
    out += "public-facts: " + std::string(to_string(s.public_facts)) + '\n';
    for (const auto& r : s.relators)
        out += "relator " + std::to_string(r.index) + ": " + serialize_word(r.word, s.generators) + '\n';
    return out;
}

Share parse_share(std::string_view input) {
    const auto lines = text::split_lines(input);
    if (lines.size() < 8) throw ParseError("share file truncated", lines.size());
    if (lines[0] != "WPSS-SHARE v1") throw ParseError("line 1: expected 'WPSS-SHARE v1'", 1);

    Share s;
    try {
        s.scheme_id = SchemeId(std::string(text::expect_field(lines[1], "scheme-id", 2)));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("line 2: ") + e.what(), 2);
    }
    const auto n = text::parse_count(text::expect_field(lines[2], "n", 3), 3);
    const auto t = text::parse_count(text::expect_field(lines[3], "t", 4), 4);
    const auto m = text::parse_count(text::expect_field(lines[4], "m", 5), 5);
    s.participant = text::parse_count(text::expect_field(lines[5], "participant", 6), 6);
    try {
        s.params = SchemeParams(n, t);
        s.generators = Alphabet(text::split_names(text::expect_field(lines[6], "generators", 7), 7));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("share header: ") + e.what(), 3);
    }
    if (s.params.m() != m) throw ParseError("line 5: m does not equal C(n, t-1)", 5);
    if (s.participant < 1 || s.participant > n) throw ParseError("line 6: participant out of range", 6);
    const auto facts = parse_public_facts(text::expect_field(lines[7], "public-facts", 8));
    if (!facts) throw ParseError("line 8: unknown public facts", 8);
    s.public_facts = *facts;

    for (std::size_t i = 8; i < lines.size(); ++i) {
        if (lines[i].empty() && i + 1 == lines.size()) break;
        auto [index, word_text] = text::split_relator_line(lines[i], i + 1);
        if (index > m) throw ParseError("line " + std::to_string(i + 1) + ": relator index exceeds m", i + 1);
        Word word;
        try {
            word = parse_word(word_text, s.generators);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(i + 1) + ": " + e.what(), i + 1);
        }
        if (word.empty() || !word.is_freely_reduced())
            throw ParseError("line " + std::to_string(i + 1) + ": relator must be nonempty and freely reduced", i + 1);
        if (!s.relators.empty() && s.relators.back().index >= index)
            throw ParseError("line " + std::to_string(i + 1) + ": relator indices must increase", i + 1);
        s.relators.push_back(Relator{index, std::move(word)});
    }
    return s;
}

std::vector<Share> make_shares(const GroupPresentation& p, const AccessStructure& a, const SchemeId& scheme_id) {
    if (p.relators.size() != a.params.m())
        throw ValidationError("presentation has " + std::to_string(p.relators.size()) + " relators, scheme needs m = " +
                              std::to_string(a.params.m()));
    p.validate(true);

    std::vector<Share> shares;
    shares.reserve(a.params.n());
    for (std::size_t i = 1; i <= a.params.n(); ++i) {
        Share s;
        s.scheme_id = scheme_id;
        s.participant = i;
        s.params = a.params;
        s.generators = p.generators;
        s.public_facts = p.public_facts;
        for (auto j : a.share(i)) s.relators.push_back(p.relators[j - 1]);
        shares.push_back(std::move(s));
    }
    return shares;
}

Family family_from_facts(PublicFacts facts) noexcept {
    return facts == PublicFacts::coxeter_involutions ? Family::coxeter : Family::polycyclic;
}

Reconstruction reconstruct(std::span<const Share> shares) {
    if (shares.empty()) throw ValidationError("reconstruct: no shares supplied");
    const Share& first = shares.front();

    Reconstruction out;
    out.params = first.params;
    out.scheme_id = first.scheme_id;
    std::map<std::size_t, const Word*> held;
    for (const auto& s : shares) {
        if (!(s.scheme_id == first.scheme_id)) throw IntegrityError("shares belong to different schemes");
        if (!(s.params == first.params)) throw IntegrityError("shares disagree on (n, t)");
        if (!(s.generators == first.generators)) throw IntegrityError("shares disagree on the generator list");
        if (s.public_facts != first.public_facts) throw IntegrityError("shares disagree on public facts");
        if (std::find(out.participants.begin(), out.participants.end(), s.participant) != out.participants.end())
            throw IntegrityError("duplicate share for participant " + std::to_string(s.participant));
        out.participants.push_back(s.participant);
        for (const auto& r : s.relators) {
            auto [it, inserted] = held.emplace(r.index, &r.word);
            if (!inserted && !(*it->second == r.word))
                throw IntegrityError("relator " + std::to_string(r.index) + " differs between shares (tampering?)");
        }
    }
    std::sort(out.participants.begin(), out.participants.end());

    out.presentation.generators = first.generators;
    out.presentation.public_facts = first.public_facts;
    out.presentation.family = family_from_facts(first.public_facts);
    for (const auto& [index, word] : held) out.presentation.relators.push_back(Relator{index, *word});
    for (std::size_t j = 1; j <= out.params.m(); ++j)
        if (!held.contains(j)) out.missing.push_back(j);
    out.complete = out.missing.empty();
    return out;
}

}  // namespace wpss
