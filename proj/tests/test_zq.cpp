#include <doctest.h>

#include "lhs/rng.hpp"
#include "lhs/zq.hpp"
#include "oracles.hpp"

using namespace lhs;

namespace {

ZqMatrix random_zq(Index rows, Index cols, const mpz_class& q,
                   RandomStream& rng) {
  IntMat m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.below(q);
  return ZqMatrix(std::move(m), q);
}

}  // namespace

TEST_CASE("residues and centered view") {
  IntMat m(1, 3);
  m << -1, 5, 12;
  ZqMatrix z(m, 5);
  CHECK(z(0, 0) == 4);
  CHECK(z(0, 1) == 0);
  CHECK(z(0, 2) == 2);
  IntMat c = z.centered();
  CHECK(c(0, 0) == -1);
  CHECK(c(0, 1) == 0);
  CHECK(c(0, 2) == 2);
}

TEST_CASE("kernel_basis_mod_q single-row example") {
  IntMat b(1, 2);
  b << 1, 0;
  LatticeBasis k = kernel_basis_mod_q(ZqMatrix(b, 5));
  CHECK(k.det_abs() == 5);
  // Brute-force: the kernel lattice has exactly 5 points in [0,5)^2.
  CHECK(oracle::count_points_in_box(k.basis(), 5) == 5);
  // Explicit form: columns (5,0),(0,1).
  IntMat expect(2, 2);
  expect << 5, 0, 0, 1;
  CHECK(k.basis() == expect);
}

TEST_CASE("kernel_basis_mod_q of zero map is Z^n") {
  LatticeBasis k = kernel_basis_mod_q(ZqMatrix::zero(2, 3, 7));
  CHECK(k.basis() == IntMat::Identity(3, 3));
}

TEST_CASE("kernel_basis_mod_q membership and index") {
  RandomStream rng("5eed");
  const mpz_class q = 7;
  for (int trial = 0; trial < 100; ++trial) {
    Index h = 1 + static_cast<Index>(rng.below(2));
    Index n = h + 1 + static_cast<Index>(rng.below(3));
    ZqMatrix b = random_zq(h, n, q, rng);
    LatticeBasis k = kernel_basis_mod_q(b);
    // Membership: every basis column maps to 0 mod q.
    IntMat img = mul_mod(b, k.basis());
    CHECK(img == IntMat::Zero(h, n));
    // Index: |det| = q^rank, against the Smith oracle on the generators.
    mpz_class expect;
    mpz_pow_ui(expect.get_mpz_t(), q.get_mpz_t(),
               static_cast<unsigned long>(rank_mod_q(b)));
    CHECK(k.det_abs() == expect);
    IntMat gen(n, kernel_mod_q(b).cols() + n);
    gen.leftCols(kernel_mod_q(b).cols()) = kernel_mod_q(b);
    gen.rightCols(n) = IntMat(IntMat::Identity(n, n) * q);
    CHECK(oracle::lattice_det_via_smith(gen) == expect);
  }
}

TEST_CASE("solve_mod_q") {
  const mpz_class q = 11;

  SUBCASE("zero target") {
    RandomStream rng("00ff");
    ZqMatrix b = random_zq(2, 5, q, rng);
    IntVec alpha = IntVec::Zero(2);
    CHECK(solve_mod_q(b, alpha) == IntVec::Zero(5));
  }

  SUBCASE("identity with zero padding") {
    IntMat m(2, 4);
    m << 1, 0, 0, 0,
         0, 1, 0, 0;
    IntVec alpha(2);
    alpha << 7, 3;
    IntVec x = solve_mod_q(ZqMatrix(m, q), alpha);
    CHECK(x(0) == 7);
    CHECK(x(1) == 3);
    CHECK(x(2) == 0);
    CHECK(x(3) == 0);
  }

  SUBCASE("random systems, residual re-check") {
    RandomStream rng("c0de");
    for (int t = 0; t < 50; ++t) {
      ZqMatrix b = random_zq(2, 6, q, rng);
      if (rank_mod_q(b) != 2) continue;
      IntVec alpha(2);
      alpha << mpz_class(rng.below(q)), mpz_class(rng.below(q));
      IntVec x = solve_mod_q(b, alpha);
      for (Index i = 0; i < x.size(); ++i) {
        CHECK(x(i) >= 0);
        CHECK(x(i) < q);
      }
      CHECK(mul_mod(b, x) == alpha);
    }
  }

  SUBCASE("inconsistent system") {
    IntVec alpha(2);
    alpha << 1, 0;
    CHECK_THROWS_AS(solve_mod_q(ZqMatrix::zero(2, 3, q), alpha), SolveError);
  }
}

TEST_CASE("prime utilities") {
  CHECK(is_prime(mpz_class(97)));
  CHECK(!is_prime(mpz_class(91)));
  CHECK(next_prime(mpz_class(90)) == 97);
  CHECK(next_prime(mpz_class(97)) == 97);
  CHECK(inv_mod(mpz_class(3), mpz_class(7)) == 5);
  CHECK_THROWS_AS(inv_mod(mpz_class(7), mpz_class(7)), ParamError);
}
