#pragma once

#include <cstddef>
#include <cstdint>

namespace synthline::unitab {

// Codepoint -> expansion slice (full canonical decomposition or lowercase).
struct MapEntry {
  char32_t cp;
  std::uint32_t offset;
  std::uint32_t len;
};

struct CccEntry {
  char32_t cp;
  std::uint8_t ccc;
};

// key = (starter << 32) | combining, sorted ascending.
struct PairEntry {
  std::uint64_t key;
  char32_t composed;
};

struct Range {
  char32_t lo;
  char32_t hi;  // inclusive
};

extern const MapEntry kDecomp[];
extern const std::size_t kDecompCount;
extern const MapEntry kLower[];
extern const std::size_t kLowerCount;
extern const char32_t kExpansion[];
extern const CccEntry kCcc[];
extern const std::size_t kCccCount;
extern const PairEntry kComp[];
extern const std::size_t kCompCount;
extern const Range kWord[];
extern const std::size_t kWordCount;

}  // namespace synthline::unitab
