#include "lhs/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace lhs {

namespace {

void write_entries(std::ostream& os, const IntMat& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j).get_str();
    }
    os << '\n';
  }
}

}  // namespace

void write_matrix(std::ostream& os, const IntMat& m, const std::string& kind) {
  os << "LHS1 " << kind << ' ' << m.rows() << ' ' << m.cols() << '\n';
  write_entries(os, m);
}

void write_matrix(std::ostream& os, const ZqMatrix& m) {
  os << "LHS1 zq " << m.rows() << ' ' << m.cols() << ' ' << m.q().get_str()
     << '\n';
  write_entries(os, m.entries());
}

MatrixBlock read_block(std::istream& is) {
  std::string line;
  // Skip blank lines between blocks.
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    line.clear();
  }
  if (line.empty()) throw FormatError("LHS1: missing header line");
  std::istringstream hs(line);
  std::string magic;
  MatrixBlock b;
  long long rows = -1, cols = -1;
  hs >> magic >> b.kind >> rows >> cols;
  if (magic != "LHS1") throw FormatError("LHS1: bad magic '" + magic + "'");
  if (!hs || b.kind.empty() || rows < 0 || cols < 0)
    throw FormatError("LHS1: malformed header '" + line + "'");
  if (b.kind == "zq") {
    std::string mod;
    hs >> mod;
    if (mod.empty()) throw FormatError("LHS1: zq block missing modulus");
    b.modulus = mpz_class(mod);
  }
  b.m.resize(rows, cols);
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok))
        throw FormatError("LHS1: expected " + std::to_string(rows * cols) +
                          " entries, ran out at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      try {
        b.m(i, j) = mpz_class(tok);
      } catch (const std::invalid_argument&) {
        throw FormatError("LHS1: bad integer entry '" + tok + "'");
      }
    }
  is.ignore();  // trailing newline of the last entry row
  return b;
}

IntMat read_int_matrix(std::istream& is) {
  MatrixBlock b = read_block(is);
  if (b.kind != "int")
    throw FormatError("LHS1: expected kind 'int', got '" + b.kind + "'");
  return std::move(b.m);
}

ZqMatrix read_zq_matrix(std::istream& is) {
  MatrixBlock b = read_block(is);
  if (b.kind != "zq")
    throw FormatError("LHS1: expected kind 'zq', got '" + b.kind + "'");
  return ZqMatrix(std::move(b.m), b.modulus);
}

}  // namespace lhs
