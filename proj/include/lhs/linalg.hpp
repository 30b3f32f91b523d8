#pragma once

// Exact integer/rational matrix kernels: Gram-Schmidt, norms, Kronecker
// products, Hadamard matrices, Hermite normal form, determinants, and
// exact linear solves. No floating point on any path used for a bound.

#include <memory>

#include "lhs/errors.hpp"
#include "lhs/mat.hpp"

namespace lhs {

// Gram-Schmidt orthogonalization of the columns, exact rationals.
// Throws RankError naming the first dependent column.
RatMat gram_schmidt(const RatMat& b);
RatMat gram_schmidt(const IntMat& b);

// max_j ||b~_j||^2, exact.
mpq_class gs_norm_sq(const IntMat& b);
// Rounded root of the exact squared value (nearest double).
double gs_norm(const IntMat& b);

// max_j ||b_j||^2, exact.
mpz_class matrix_norm_sq(const IntMat& b);
mpq_class matrix_norm_sq(const RatMat& b);
double matrix_norm(const IntMat& b);

IntMat kronecker(const IntMat& a, const IntMat& b);

// Deterministic Hadamard matrix of order n (n a power of two; the scheme
// uses powers of four). H * H^T = n * I exactly.
IntMat hadamard(Index n);

// Column-style Hermite normal form of the lattice generated by the
// columns of m: canonical echelon form, positive pivots, entries left of
// each pivot reduced into [0, pivot). Throws on the zero lattice.
IntMat hnf(const IntMat& m);

// |det| of a square matrix, fraction-free (Bareiss).
mpz_class det_abs(const IntMat& m);

// Solve a*x = rhs exactly; a square nonsingular. Throws RankError.
RatMat solve_exact(const IntMat& a, const RatMat& rhs);
RatVec solve_exact(const IntMat& a, const RatVec& rhs);

// Square full-rank integer basis with lazily cached Gram-Schmidt data.
// The cache is computed once; distinct values are safe to use from
// distinct threads concurrently.
class LatticeBasis {
 public:
  LatticeBasis() = default;
  explicit LatticeBasis(IntMat basis);

  Index dim() const { return basis_.rows(); }
  const IntMat& basis() const { return basis_; }

  const RatMat& gso() const;
  const mpq_class& gs_norm_sq() const;
  double gs_norm() const;
  mpz_class det_abs() const;

  // Coordinates of t in this basis, exact.
  RatVec solve(const IntVec& t) const;
  // Exact lattice membership.
  bool contains(const IntVec& t) const;

 private:
  IntMat basis_;
  mutable std::shared_ptr<const RatMat> gso_;
  mutable std::shared_ptr<const mpq_class> gs_norm_sq_;
};

}  // namespace lhs
