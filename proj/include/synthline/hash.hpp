#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace synthline {

// Lowercase 64-hex-char SHA-256 digest. Used for record ids, dataset digests,
// cache keys, and manifest entries.
std::string sha256_hex(std::string_view bytes);

// FNV-1a over bytes. Not cryptographic; used only as a platform-stable mixer.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull);

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Keyed 64-bit hash, stable across platforms and runs. Seeded selection and
// feature hashing must not depend on any library RNG stream.
std::uint64_t keyed_hash64(std::uint64_t key, std::string_view bytes);

// Minimal deterministic RNG (splitmix64 stream). std::shuffle and the
// standard distributions are implementation-defined, so anything that must
// reproduce byte-identical output across platforms goes through this.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  // Double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace synthline
