#include <doctest.h>

#include <sstream>

#include "lhs/io.hpp"
#include "lhs/rng.hpp"

using namespace lhs;

TEST_CASE("LHS1 round-trip is bit-exact") {
  RandomStream rng("10");
  for (int t = 0; t < 25; ++t) {
    Index rows = 1 + static_cast<Index>(rng.below(6));
    Index cols = 1 + static_cast<Index>(rng.below(6));
    IntMat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i)
        m(i, j) = mpz_class(static_cast<long>(rng.below(2000)) - 1000);
    std::ostringstream first;
    write_matrix(first, m);
    std::istringstream in(first.str());
    IntMat back = read_int_matrix(in);
    CHECK(back == m);
    std::ostringstream second;
    write_matrix(second, back);
    CHECK(second.str() == first.str());
  }
}

TEST_CASE("LHS1 zq blocks carry their modulus") {
  IntMat m(2, 2);
  m << 1, 99, -3, 7;
  ZqMatrix z(m, 97);
  std::ostringstream os;
  write_matrix(os, z);
  CHECK(os.str().rfind("LHS1 zq 2 2 97\n", 0) == 0);
  std::istringstream in(os.str());
  ZqMatrix back = read_zq_matrix(in);
  CHECK(back == z);
}

TEST_CASE("LHS1 sequential blocks in one stream") {
  std::ostringstream os;
  write_matrix(os, IntMat(IntMat::Identity(2, 2)));
  write_matrix(os, ZqMatrix(IntMat(IntMat::Identity(3, 3)), 5));
  std::istringstream in(os.str());
  CHECK(read_int_matrix(in) == IntMat::Identity(2, 2));
  CHECK(read_zq_matrix(in).entries() == IntMat::Identity(3, 3));
}

TEST_CASE("LHS1 distinct errors") {
  SUBCASE("bad magic") {
    std::istringstream in("NOPE int 1 1\n3\n");
    CHECK_THROWS_WITH_AS(read_block(in), doctest::Contains("bad magic"),
                         FormatError);
  }
  SUBCASE("malformed header") {
    std::istringstream in("LHS1 int 2\n");
    CHECK_THROWS_WITH_AS(read_block(in), doctest::Contains("malformed header"),
                         FormatError);
  }
  SUBCASE("short entry list") {
    std::istringstream in("LHS1 int 2 2\n1 2 3\n");
    CHECK_THROWS_WITH_AS(read_block(in), doctest::Contains("ran out"),
                         FormatError);
  }
  SUBCASE("bad entry") {
    std::istringstream in("LHS1 int 1 2\n1 zebra\n");
    CHECK_THROWS_WITH_AS(read_block(in), doctest::Contains("bad integer"),
                         FormatError);
  }
  SUBCASE("kind mismatch") {
    std::istringstream in("LHS1 zq 1 1 7\n3\n");
    CHECK_THROWS_AS(read_int_matrix(in), FormatError);
  }
}
