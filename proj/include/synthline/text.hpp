#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace synthline {

// NFC then per-codepoint lowercase. All content comparisons in the pipeline
// run on this form; stored text keeps its original bytes.
std::string normalize_for_match(std::string_view text);

// As above but without lowercasing.
std::string normalize_nfc(std::string_view text);

// Maximal alphanumeric runs of normalize_for_match(text).
std::vector<std::string> word_tokens(std::string_view text);

// Word runs without lowercasing (NFC only).
std::vector<std::string> word_tokens_cased(std::string_view text);

// Trim plus collapse of whitespace runs (ASCII + Unicode spaces) to ' '.
std::string collapse_whitespace(std::string_view text);

std::string trim(std::string_view text);

bool is_blank(std::string_view text);

}  // namespace synthline
