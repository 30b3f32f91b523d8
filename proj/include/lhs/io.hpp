#pragma once

// Shared LHS1 text format: header line "LHS1 <kind> <rows> <cols> [modulus]",
// then row-major whitespace-separated decimal integers. The writer is
// canonical so round-trips are bit-exact.

#include <iosfwd>
#include <string>

#include "lhs/zq.hpp"

namespace lhs {

struct MatrixBlock {
  std::string kind;
  IntMat m;
  mpz_class modulus = 0;  // nonzero only for modular kinds
};

void write_matrix(std::ostream& os, const IntMat& m,
                  const std::string& kind = "int");
void write_matrix(std::ostream& os, const ZqMatrix& m);

// Reads one LHS1 block (header + entries). Throws FormatError with a
// distinct message for a bad magic, bad header fields, or bad entries.
MatrixBlock read_block(std::istream& is);

IntMat read_int_matrix(std::istream& is);
ZqMatrix read_zq_matrix(std::istream& is);

}  // namespace lhs
