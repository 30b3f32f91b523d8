#pragma once

// Residue matrices mod an odd prime q, with the q-ary lattice machinery:
// rank, kernels, particular solutions, and Lambda_q^perp bases.

#include "lhs/linalg.hpp"
#include "lhs/mat.hpp"

namespace lhs {

inline mpz_class mod_reduce(const mpz_class& x, const mpz_class& q) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
  return r;
}

// Centered representative in [-(q-1)/2, (q-1)/2].
inline mpz_class mod_centered(const mpz_class& x, const mpz_class& q) {
  mpz_class r = mod_reduce(x, q);
  if (2 * r > q - 1) r -= q;
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& q);

bool is_prime(const mpz_class& n);
mpz_class next_prime(const mpz_class& n);  // smallest prime >= n

// Matrix over Z_q; every entry stored reduced into [0, q), q odd prime > 2.
class ZqMatrix {
 public:
  ZqMatrix() = default;
  ZqMatrix(IntMat m, mpz_class q);

  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }
  const mpz_class& q() const { return q_; }
  const IntMat& entries() const { return m_; }
  const mpz_class& operator()(Index i, Index j) const { return m_(i, j); }

  static ZqMatrix zero(Index rows, Index cols, const mpz_class& q);
  static ZqMatrix identity(Index n, const mpz_class& q);

  ZqMatrix transpose() const;
  // Centered-representative integer lift.
  IntMat centered() const;

  friend bool operator==(const ZqMatrix& a, const ZqMatrix& b) {
    return a.q_ == b.q_ && a.m_.rows() == b.m_.rows() &&
           a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  mpz_class q_ = 0;
  IntMat m_;
};

ZqMatrix mul_mod(const ZqMatrix& a, const ZqMatrix& b);
// a * v mod q, entries in [0, q).
IntVec mul_mod(const ZqMatrix& a, const IntVec& v);
IntMat mul_mod(const ZqMatrix& a, const IntMat& m);

Index rank_mod_q(const ZqMatrix& b);

// Particular solution of b * x = alpha (mod q), entries in [0, q); free
// variables pinned to zero. Throws SolveError when inconsistent.
IntVec solve_mod_q(const ZqMatrix& b, const IntVec& alpha);

// Basis of the kernel of b over the field Z_q, lifted to [0, q); one
// column per free variable. Empty matrix when b has full column rank.
IntMat kernel_mod_q(const ZqMatrix& b);

// Basis of Lambda_q^perp(b) = { x in Z^n : b x = 0 (mod q) }:
// kernel lift + q I, HNF-reduced. |det| = q^rank(b).
LatticeBasis kernel_basis_mod_q(const ZqMatrix& b);

}  // namespace lhs
