#include "lhs/rng.hpp"

#include "lhs/errors.hpp"

namespace lhs {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

int hex_val(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint64_t hash_seed(std::string_view hex) {
  // FNV-1a over the seed nibbles.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : hex) {
    int v = hex_val(c);
    if (v < 0) throw ParamError("seed is not a hex string");
    h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ull;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::string_view hex_seed, std::uint64_t counter)
    : key_(hash_seed(hex_seed)), counter_(counter), seed_hex_(hex_seed) {}

RandomStream::RandomStream(std::uint64_t key, std::string seed_hex)
    : key_(key), seed_hex_(std::move(seed_hex)) {}

std::uint64_t RandomStream::next_u64() {
  return mix64(key_ + kGolden * ++counter_);
}

std::uint64_t RandomStream::below(std::uint64_t bound) {
  if (bound == 0) throw ParamError("below(): bound must be positive");
  std::uint64_t limit = ~0ull - (~0ull % bound + 1) % bound;  // largest multiple - 1
  for (;;) {
    std::uint64_t v = next_u64();
    if (v <= limit) return v % bound;
  }
}

mpz_class RandomStream::below(const mpz_class& bound) {
  if (bound <= 0) throw ParamError("below(): bound must be positive");
  if (bound.fits_ulong_p()) return mpz_class(below(bound.get_ui()));
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  for (;;) {
    mpz_class v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      v <<= 64;
      v += mpz_class(next_u64());
    }
    v >>= (words * 64 - bits);
    if (v < bound) return v;
  }
}

double RandomStream::unit_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomStream RandomStream::derive(std::uint64_t label) const {
  return RandomStream(mix64(key_ ^ mix64(label ^ 0xA5A5A5A5A5A5A5A5ull)),
                      seed_hex_ + "/" + std::to_string(label));
}

std::string random_tag(std::size_t n, RandomStream& rng) {
  std::string t(n, '0');
  for (std::size_t i = 0; i < n; ++i) t[i] = rng.bit() ? '1' : '0';
  return t;
}

}  // namespace lhs
