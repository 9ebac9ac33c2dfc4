#include "synthline/text.hpp"

#include "synthline/unicode.hpp"

namespace synthline {
namespace {

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case 0x85:    // NEL
    case 0xA0:    // NBSP
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::vector<std::string> split_word_runs(const std::u32string& cps) {
  std::vector<std::string> tokens;
  std::u32string run;
  for (char32_t cp : cps) {
    if (is_word_char(cp)) {
      run.push_back(cp);
    } else if (!run.empty()) {
      tokens.push_back(utf8_encode(run));
      run.clear();
    }
  }
  if (!run.empty()) {
    tokens.push_back(utf8_encode(run));
  }
  return tokens;
}

}  // namespace

std::string normalize_for_match(std::string_view text) {
  return utf8_encode(to_lower(nfc(utf8_decode(text))));
}

std::string normalize_nfc(std::string_view text) { return nfc_utf8(text); }

std::vector<std::string> word_tokens(std::string_view text) {
  return split_word_runs(to_lower(nfc(utf8_decode(text))));
}

std::vector<std::string> word_tokens_cased(std::string_view text) {
  return split_word_runs(nfc(utf8_decode(text)));
}

std::string collapse_whitespace(std::string_view text) {
  std::u32string cps = utf8_decode(text);
  std::u32string out;
  out.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_space_cp(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) {
        out.push_back(U' ');
        pending_space = false;
      }
      out.push_back(cp);
    }
  }
  return utf8_encode(out);
}

std::string trim(std::string_view text) {
  std::u32string cps = utf8_decode(text);
  std::size_t b = 0;
  std::size_t e = cps.size();
  while (b < e && is_space_cp(cps[b])) {
    ++b;
  }
  while (e > b && is_space_cp(cps[e - 1])) {
    --e;
  }
  return utf8_encode(cps.substr(b, e - b));
}

bool is_blank(std::string_view text) {
  for (char32_t cp : utf8_decode(text)) {
    if (!is_space_cp(cp)) {
      return false;
    }
  }
  return true;
}

}  // namespace synthline
