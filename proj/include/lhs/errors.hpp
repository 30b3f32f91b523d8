#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lhs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameters (primes, powers, dimensions out of contract).
struct ParamError : Error {
  using Error::Error;
};

// Linearly dependent columns where independence is required.
struct RankError : Error {
  std::int64_t column = -1;
  RankError(const std::string& msg, std::int64_t col) : Error(msg), column(col) {}
};

// Vector claimed to lie in a lattice does not.
struct MembershipError : Error {
  using Error::Error;
};

// Inconsistent linear system mod q.
struct SolveError : Error {
  using Error::Error;
};

// Malformed file or serialization header.
struct FormatError : Error {
  using Error::Error;
};

// A checked postcondition failed (exact-arithmetic contract violation).
struct ContractError : Error {
  using Error::Error;
};

// Game-level adversary protocol violation.
struct ProtocolError : Error {
  using Error::Error;
};

}  // namespace lhs
