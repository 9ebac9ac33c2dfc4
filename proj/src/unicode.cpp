#include "synthline/unicode.hpp"

#include <algorithm>
#include <cstdint>

#include "synthline/unicode_tables.hpp"

namespace synthline {
namespace {

using unitab::CccEntry;
using unitab::MapEntry;
using unitab::PairEntry;
using unitab::Range;

constexpr char32_t kReplacement = 0xFFFD;

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

const MapEntry* find_map(const MapEntry* table, std::size_t count, char32_t cp) {
  auto it = std::lower_bound(table, table + count, cp,
                             [](const MapEntry& e, char32_t c) { return e.cp < c; });
  if (it != table + count && it->cp == cp) {
    return it;
  }
  return nullptr;
}

std::uint8_t ccc(char32_t cp) {
  auto it = std::lower_bound(unitab::kCcc, unitab::kCcc + unitab::kCccCount, cp,
                             [](const CccEntry& e, char32_t c) { return e.cp < c; });
  if (it != unitab::kCcc + unitab::kCccCount && it->cp == cp) {
    return it->ccc;
  }
  return 0;
}

char32_t compose_pair(char32_t a, char32_t b) {
  // Hangul LV and LVT composition.
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
      b < kHangulVBase + kHangulVCount) {
    int l = static_cast<int>(a - kHangulLBase);
    int v = static_cast<int>(b - kHangulVBase);
    return kHangulSBase + static_cast<char32_t>((l * kHangulVCount + v) * kHangulTCount);
  }
  if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    return a + (b - kHangulTBase);
  }
  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  auto it = std::lower_bound(unitab::kComp, unitab::kComp + unitab::kCompCount, key,
                             [](const PairEntry& e, std::uint64_t k) { return e.key < k; });
  if (it != unitab::kComp + unitab::kCompCount && it->key == key) {
    return it->composed;
  }
  return 0;
}

void decompose_into(char32_t cp, std::u32string& out) {
  if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
    int index = static_cast<int>(cp - kHangulSBase);
    out.push_back(kHangulLBase + static_cast<char32_t>(index / kHangulNCount));
    out.push_back(kHangulVBase + static_cast<char32_t>((index % kHangulNCount) / kHangulTCount));
    int t = index % kHangulTCount;
    if (t != 0) {
      out.push_back(kHangulTBase + static_cast<char32_t>(t));
    }
    return;
  }
  if (const MapEntry* e = find_map(unitab::kDecomp, unitab::kDecompCount, cp)) {
    for (std::uint32_t i = 0; i < e->len; ++i) {
      out.push_back(unitab::kExpansion[e->offset + i]);
    }
    return;
  }
  out.push_back(cp);
}

void canonical_order(std::u32string& cps) {
  // Bubble adjacent marks into nondecreasing combining-class order; the sort
  // must be stable for equal classes.
  for (std::size_t i = 1; i < cps.size(); ++i) {
    std::uint8_t cc = ccc(cps[i]);
    if (cc == 0) {
      continue;
    }
    std::size_t j = i;
    while (j > 0) {
      std::uint8_t prev = ccc(cps[j - 1]);
      if (prev == 0 || prev <= cc) {
        break;
      }
      std::swap(cps[j - 1], cps[j]);
      --j;
    }
  }
}

}  // namespace

std::u32string utf8_decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = s[i];
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(len) > n) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    // Reject overlong encodings, surrogates, and out-of-range values.
    if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp < 0xE000) ||
        (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

std::string utf8_encode(const std::u32string& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::u32string nfc(std::u32string_view cps) {
  std::u32string nfd;
  nfd.reserve(cps.size() + 8);
  for (char32_t cp : cps) {
    decompose_into(cp, nfd);
  }
  canonical_order(nfd);

  std::u32string out;
  out.reserve(nfd.size());
  std::size_t starter = std::u32string::npos;
  std::uint8_t prev_cc = 0;
  for (char32_t cp : nfd) {
    std::uint8_t cc = ccc(cp);
    if (starter != std::u32string::npos) {
      const bool adjacent = out.size() == starter + 1;
      // Blocked unless the mark is adjacent to the starter or every
      // intervening mark has a strictly lower combining class.
      if (adjacent || prev_cc < cc) {
        if (char32_t composed = compose_pair(out[starter], cp)) {
          out[starter] = composed;
          continue;
        }
      }
    }
    if (cc == 0) {
      starter = out.size();
      prev_cc = 0;
    } else {
      prev_cc = cc;
    }
    out.push_back(cp);
  }
  return out;
}

std::string nfc_utf8(std::string_view text) { return utf8_encode(nfc(utf8_decode(text))); }

std::u32string to_lower(std::u32string_view cps) {
  std::u32string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (const MapEntry* e = find_map(unitab::kLower, unitab::kLowerCount, cp)) {
      for (std::uint32_t i = 0; i < e->len; ++i) {
        out.push_back(unitab::kExpansion[e->offset + i]);
      }
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

bool is_word_char(char32_t cp) {
  auto it = std::upper_bound(unitab::kWord, unitab::kWord + unitab::kWordCount, cp,
                             [](char32_t c, const Range& r) { return c < r.lo; });
  if (it == unitab::kWord) {
    return false;
  }
  --it;
  return cp >= it->lo && cp <= it->hi;
}

}  // namespace synthline
