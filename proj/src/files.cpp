#include <fstream>
#include <sstream>

#include "wpss/dealer.hpp"
#include "wpss/error.hpp"
#include "wpss/message.hpp"

namespace wpss {

Bits parse_bits(std::string_view text) {
    Bits out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') throw ParseError("bits must be '0' or '1'", i);
        out.push_back(text[i] == '1');
    }
    return out;
}

std::string format_bits(const Bits& bits) {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

std::string serialize_message(const EncodedMessage& msg, const Alphabet& gens) {
    std::string out = "WPSS-MSG v1\n";
    out += "scheme-id: " + msg.scheme_id.hex() + "\n";
    out += "count: " + std::to_string(msg.words.size()) + "\n";
    for (const auto& w : msg.words) {
        const auto s = serialize_word(w, gens);
        out += s.empty() ? "word:\n" : "word: " + s + "\n";
    }
    return out;
}

namespace {

SchemeId parse_id_line(std::string_view line, std::size_t line_no) {
    try {
        return SchemeId(std::string(text::expect_field(line, "scheme-id", line_no)));
    } catch (const ValidationError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
}

}  // namespace

SchemeId peek_message_scheme(std::string_view input) {
    const auto lines = text::split_lines(input);
    if (lines.size() < 3) throw ParseError("message file truncated", lines.size());
    if (lines[0] != "WPSS-MSG v1") throw ParseError("line 1: expected 'WPSS-MSG v1'", 1);
    return parse_id_line(lines[1], 2);
}

EncodedMessage parse_message(std::string_view input, const Alphabet& gens) {
    const auto lines = text::split_lines(input);
    EncodedMessage msg;
    msg.scheme_id = peek_message_scheme(input);
    const auto count = text::parse_count(text::expect_field(lines[2], "count", 3), 3);
    if (lines.size() != 3 + count)
        throw ParseError("count says " + std::to_string(count) + " words, file has " + std::to_string(lines.size() - 3),
                         3);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto body = text::expect_field(lines[i], "word", i + 1);
        try {
            msg.words.push_back(parse_word(body, gens));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(i + 1) + ": " + e.what(), i + 1);
        }
    }
    return msg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write to '" + path + "' failed");
}

std::string serialize_scheme(const Scheme& s) {
    std::string out = "WPSS-SCHEME v1\n";
    out += "scheme-id: " + s.scheme_id.hex() + "\n";
    out += "n: " + std::to_string(s.params.n()) + "\n";
    out += "t: " + std::to_string(s.params.t()) + "\n";
    out += "m: " + std::to_string(s.params.m()) + "\n";
    out += "platform: " + s.platform + "\n";
    out += serialize_presentation(s.presentation);
    return out;
}

Scheme parse_scheme(std::string_view input) {
    const auto lines = text::split_lines(input);
    if (lines.size() < 7) throw ParseError("scheme file truncated", lines.size());
    if (lines[0] != "WPSS-SCHEME v1") throw ParseError("line 1: expected 'WPSS-SCHEME v1'", 1);
    Scheme s;
    s.scheme_id = parse_id_line(lines[1], 2);
    const auto n = text::parse_count(text::expect_field(lines[2], "n", 3), 3);
    const auto t = text::parse_count(text::expect_field(lines[3], "t", 4), 4);
    const auto m = text::parse_count(text::expect_field(lines[4], "m", 5), 5);
    try {
        s.params = SchemeParams(n, t);
    } catch (const ValidationError& e) {
        throw ParseError(std::string("scheme header: ") + e.what(), 3);
    }
    if (s.params.m() != m) throw ParseError("line 5: m does not equal C(n, t-1)", 5);
    s.platform = std::string(text::expect_field(lines[5], "platform", 6));

    // The presentation block starts at line 7.
    std::size_t offset = 0;
    for (int i = 0; i < 6; ++i) offset = input.find('\n', offset) + 1;
    s.presentation = parse_presentation(input.substr(offset));
    try {
        s.presentation.validate(true);
    } catch (const ValidationError& e) {
        throw ParseError(std::string("scheme presentation: ") + e.what(), 7);
    }
    if (s.presentation.relators.size() != m)
        throw ParseError("scheme presentation has " + std::to_string(s.presentation.relators.size()) +
                             " relators, expected m = " + std::to_string(m),
                         7);
    return s;
}

}  // namespace wpss
