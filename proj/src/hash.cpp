#include "synthline/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace synthline {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: EVP_Digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.resize(static_cast<std::size_t>(len) * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out[2 * i] = hex[md[i] >> 4];
    out[2 * i + 1] = hex[md[i] & 0xf];
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::uint64_t keyed_hash64(std::uint64_t key, std::string_view bytes) {
  return mix64(fnv1a64(bytes) ^ mix64(key));
}

std::uint64_t DeterministicRng::below(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("DeterministicRng::below(0)");
  }
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t v = next();
  while (v >= limit) {
    v = next();
  }
  return v % n;
}

}  // namespace synthline
