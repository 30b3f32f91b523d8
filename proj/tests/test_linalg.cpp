#include <doctest.h>

#include "lhs/linalg.hpp"
#include "lhs/rng.hpp"
#include "oracles.hpp"

using namespace lhs;

namespace {

IntMat cols2(long a1, long a2, long b1, long b2) {
  IntMat m(2, 2);
  m << a1, b1, a2, b2;
  return m;
}

IntMat random_int_matrix(Index rows, Index cols, long lo, long hi,
                         RandomStream& rng) {
  IntMat m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      m(i, j) = mpz_class(
          lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))));
  return m;
}

const IntMat kH4 = [] {
  IntMat b(4, 4);
  b << 1, 1, 1, 1,
       1, 1, -1, -1,
       1, -1, 1, -1,
       1, -1, -1, 1;
  return b;
}();

const IntMat kH8 = [] {
  IntMat c(8, 8);
  c << 1, 1, 1, 1, 1, 1, 1, 1,
       1, 1, -1, -1, 1, 1, -1, -1,
       1, -1, 1, -1, 1, -1, 1, -1,
       1, -1, -1, 1, 1, -1, -1, 1,
       1, 1, 1, 1, -1, -1, -1, -1,
       1, 1, -1, -1, -1, -1, 1, 1,
       1, -1, 1, -1, -1, 1, -1, 1,
       1, -1, -1, 1, -1, 1, 1, -1;
  return c;
}();

}  // namespace

TEST_CASE("gram_schmidt identity is fixed") {
  IntMat i2 = IntMat::Identity(2, 2);
  RatMat g = gram_schmidt(i2);
  CHECK(g == to_rational(i2));
}

TEST_CASE("gram_schmidt on (1,0),(1,1)") {
  // Hand application of the projection formula: b~_2 = (1,1) - 1*(1,0).
  RatMat g = gram_schmidt(cols2(1, 0, 1, 1));
  CHECK(g(0, 0) == 1);
  CHECK(g(1, 0) == 0);
  CHECK(g(0, 1) == 0);
  CHECK(g(1, 1) == 1);
}

TEST_CASE("gram_schmidt leaves orthogonal columns unchanged") {
  RatMat g = gram_schmidt(kH4);
  CHECK(g == to_rational(kH4));
}

TEST_CASE("gram_schmidt names the dependent column") {
  IntMat m(2, 2);
  m << 1, 2, 2, 4;
  CHECK_THROWS_AS(gram_schmidt(m), RankError);
  try {
    gram_schmidt(m);
  } catch (const RankError& e) {
    CHECK(e.column == 1);
  }
}

TEST_CASE("gram_schmidt output is pairwise orthogonal, exactly") {
  RandomStream rng("11aa");
  for (Index n : {3, 8, 17, 32}) {
    IntMat m = random_int_matrix(n, n, -9, 9, rng);
    RatMat g;
    try {
      g = gram_schmidt(m);
    } catch (const RankError&) {
      continue;  // rare singular draw
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b)
        CHECK(dot(RatVec(g.col(a)), RatVec(g.col(b))) == 0);
  }
}

TEST_CASE("gs_norm examples") {
  CHECK(gs_norm_sq(IntMat(IntMat::Identity(3, 3))) == 1);
  CHECK(gs_norm_sq(cols2(1, 0, 1, 1)) == 1);
  CHECK(gs_norm_sq(IntMat(2 * IntMat::Identity(2, 2))) == 4);
}

TEST_CASE("matrix_norm examples") {
  CHECK(matrix_norm_sq(cols2(3, 0, 0, 4)) == 16);
  CHECK(matrix_norm_sq(IntMat(IntMat::Zero(3, 3))) == 0);
  CHECK(matrix_norm_sq(cols2(3, 4, 1, 0)) == 25);  // 3-4-5 triple
}

TEST_CASE("orthogonal transforms preserve both norms") {
  // Signed permutations are exactly representable real orthogonal maps.
  RandomStream rng("beef");
  for (int trial = 0; trial < 10; ++trial) {
    Index n = 6;
    IntMat a = random_int_matrix(n, n, -9, 9, rng);
    IntMat h = IntMat::Zero(n, n);
    std::vector<Index> perm{0, 1, 2, 3, 4, 5};
    for (Index i = n - 1; i > 0; --i)
      std::swap(perm[static_cast<std::size_t>(i)],
                perm[static_cast<std::size_t>(rng.below(
                    static_cast<std::uint64_t>(i + 1)))]);
    for (Index i = 0; i < n; ++i)
      h(perm[static_cast<std::size_t>(i)], i) = rng.bit() ? 1 : -1;
    IntMat ha = h * a;
    CHECK(matrix_norm_sq(ha) == matrix_norm_sq(a));
    bool a_fullrank = true;
    try {
      CHECK(gs_norm_sq(ha) == gs_norm_sq(a));
    } catch (const RankError&) {
      a_fullrank = false;  // both must then be singular
      CHECK_THROWS_AS(gs_norm_sq(a), RankError);
    }
    (void)a_fullrank;
  }
}

TEST_CASE("kronecker block structure") {
  IntMat h2(2, 2);
  h2 << 1, 1, 1, -1;
  SUBCASE("H2 (x) H2 per the block formula") {
    IntMat expect(4, 4);
    expect << 1, 1, 1, 1,
              1, -1, 1, -1,
              1, 1, -1, -1,
              1, -1, -1, 1;
    CHECK(kronecker(h2, h2) == expect);
  }
  SUBCASE("identity is neutral on the left") {
    RandomStream rng("0c");
    IntMat x = random_int_matrix(3, 3, -5, 5, rng);
    CHECK(kronecker(IntMat(IntMat::Identity(1, 1)), x) == x);
  }
  SUBCASE("product of Hadamard matrices is Hadamard") {
    IntMat k = kronecker(h2, kH4);
    CHECK(k * k.transpose() == IntMat(IntMat::Identity(8, 8) * mpz_class(8)));
  }
}

TEST_CASE("hadamard fixed low orders") {
  CHECK(hadamard(4) == kH4);
  CHECK(hadamard(8) == kH8);
  IntMat h16 = hadamard(16);
  CHECK(h16 * h16.transpose() ==
        IntMat(IntMat::Identity(16, 16) * mpz_class(16)));
}

TEST_CASE("hadamard H H^T = n I for scheme orders") {
  for (Index n : {4, 16, 64}) {
    IntMat h = hadamard(n);
    CHECK(h * h.transpose() == IntMat(IntMat::Identity(n, n) * mpz_class(n)));
  }
}

TEST_CASE("hadamard rejects non-powers of two") {
  CHECK_THROWS_AS(hadamard(5), ParamError);
  CHECK_THROWS_AS(hadamard(12), ParamError);
  CHECK_THROWS_AS(hadamard(0), ParamError);
}

TEST_CASE("hnf canonical examples") {
  CHECK(hnf(IntMat(IntMat::Identity(4, 4))) == IntMat::Identity(4, 4));

  SUBCASE("generating set, determinant preserved") {
    IntMat gen(2, 3);
    gen << 2, 1, 0,
           0, 1, 2;
    IntMat h = hnf(gen);
    CHECK(h.cols() == 2);
    CHECK(det_abs(h) == oracle::lattice_det_via_smith(gen));
  }

  SUBCASE("unimodular input collapses to identity") {
    IntMat u(3, 3);
    u << 1, 4, 2,
         0, 1, 7,
         0, 0, 1;
    CHECK(det_abs(u) == 1);
    CHECK(hnf(u) == IntMat::Identity(3, 3));
  }

  SUBCASE("idempotent on random lattices") {
    RandomStream rng("77");
    for (int t = 0; t < 20; ++t) {
      IntMat m = random_int_matrix(4, 5, -20, 20, rng);
      IntMat h1;
      try {
        h1 = hnf(m);
      } catch (const ParamError&) {
        continue;
      }
      if (h1.cols() < 4) continue;
      CHECK(hnf(h1) == h1);
    }
  }

  SUBCASE("zero lattice rejected") {
    CHECK_THROWS_AS(hnf(IntMat(IntMat::Zero(3, 2))), ParamError);
  }
}

TEST_CASE("det_abs matches the Smith-form oracle") {
  RandomStream rng("d5");
  for (int t = 0; t < 15; ++t) {
    IntMat m = random_int_matrix(4, 4, -15, 15, rng);
    CHECK(det_abs(m) == oracle::lattice_det_via_smith(m));
  }
}

TEST_CASE("LatticeBasis membership and solve") {
  IntMat b(2, 2);
  b << 2, 1, 0, 3;
  LatticeBasis basis(std::move(b));
  CHECK(basis.det_abs() == 6);
  IntVec in(2);
  in << 3, 3;  // = b_1 + b_2
  CHECK(basis.contains(in));
  IntVec out(2);
  out << 1, 0;
  CHECK(!basis.contains(out));
  RatVec x = basis.solve(in);
  CHECK(x(0) == 1);
  CHECK(x(1) == 1);
}
