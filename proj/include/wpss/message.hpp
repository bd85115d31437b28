#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wpss/share.hpp"
#include "wpss/word.hpp"

namespace wpss {

// One entry per bit, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

// Accepts only '0' and '1'; ParseError carries the offending offset.
Bits parse_bits(std::string_view text);
std::string format_bits(const Bits& bits);

struct EncodedMessage {
    SchemeId scheme_id;
    std::vector<Word> words;

    friend bool operator==(const EncodedMessage&, const EncodedMessage&) = default;
};

// Message file (bit-exact):
//   WPSS-MSG v1
//   scheme-id: <hex64>
//   count: <l>
//   word: <word>       (l lines)
std::string serialize_message(const EncodedMessage& msg, const Alphabet& gens);
EncodedMessage parse_message(std::string_view text, const Alphabet& gens);
// Scheme id of a message file without parsing its words (they need an alphabet).
SchemeId peek_message_scheme(std::string_view text);

// Whole-file helpers; throw Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace wpss
