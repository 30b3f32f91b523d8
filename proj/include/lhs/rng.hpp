#pragma once

// Counter-mode deterministic random stream. Identical (seed, counter)
// always yields identical draws, on any platform; that contract is what
// every reproducibility test in the repo leans on.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lhs {

class RandomStream {
 public:
  explicit RandomStream(std::string_view hex_seed, std::uint64_t counter = 0);

  std::uint64_t next_u64();

  // Unbiased uniform integer in [0, bound), bound > 0. Rejection sampled.
  std::uint64_t below(std::uint64_t bound);
  mpz_class below(const mpz_class& bound);

  // Uniform in [0, 1), 53 random bits.
  double unit_double();

  bool bit() { return next_u64() >> 63; }

  // Independent child stream (for sharded probes and sub-protocols).
  RandomStream derive(std::uint64_t label) const;

  std::uint64_t counter() const { return counter_; }
  const std::string& seed_hex() const { return seed_hex_; }

 private:
  RandomStream(std::uint64_t key, std::string seed_hex);

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  std::string seed_hex_;
};

// Uniform tag in {0,1}^n as a string of '0'/'1'.
std::string random_tag(std::size_t n, RandomStream& rng);

}  // namespace lhs
