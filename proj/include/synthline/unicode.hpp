#pragma once

#include <string>
#include <string_view>

namespace synthline {

// UTF-8 decode; invalid byte sequences become U+FFFD (one per bad byte run).
std::u32string utf8_decode(std::string_view text);

std::string utf8_encode(const std::u32string& cps);

// Canonical composition (NFC) per UAX #15: full canonical decomposition,
// canonical reordering, then primary composition. Hangul is algorithmic.
std::u32string nfc(std::u32string_view cps);

std::string nfc_utf8(std::string_view text);

// Per-codepoint full lowercase mapping (context-free; a mapping may expand
// to multiple codepoints).
std::u32string to_lower(std::u32string_view cps);

// Letter or digit (general category L* or N*).
bool is_word_char(char32_t cp);

}  // namespace synthline
