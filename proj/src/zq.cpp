#include "lhs/zq.hpp"

#include <string>
#include <vector>

namespace lhs {

mpz_class inv_mod(const mpz_class& a, const mpz_class& q) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
    throw ParamError("inv_mod: " + a.get_str() + " not invertible mod " +
                     q.get_str());
  return r;
}

bool is_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

mpz_class next_prime(const mpz_class& n) {
  mpz_class p = n;
  if (p <= 2) return 2;
  if (is_prime(p)) return p;
  mpz_nextprime(p.get_mpz_t(), mpz_class(p - 1).get_mpz_t());
  return p;
}

ZqMatrix::ZqMatrix(IntMat m, mpz_class q) : q_(std::move(q)), m_(std::move(m)) {
  if (q_ <= 2) throw ParamError("ZqMatrix: modulus must exceed 2");
  for (Index j = 0; j < m_.cols(); ++j)
    for (Index i = 0; i < m_.rows(); ++i) m_(i, j) = mod_reduce(m_(i, j), q_);
}

ZqMatrix ZqMatrix::zero(Index rows, Index cols, const mpz_class& q) {
  return ZqMatrix(IntMat::Zero(rows, cols), q);
}

ZqMatrix ZqMatrix::identity(Index n, const mpz_class& q) {
  return ZqMatrix(IntMat::Identity(n, n), q);
}

ZqMatrix ZqMatrix::transpose() const { return ZqMatrix(m_.transpose(), q_); }

IntMat ZqMatrix::centered() const {
  IntMat c = m_;
  for (Index j = 0; j < c.cols(); ++j)
    for (Index i = 0; i < c.rows(); ++i)
      if (2 * c(i, j) > q_ - 1) c(i, j) -= q_;
  return c;
}

ZqMatrix mul_mod(const ZqMatrix& a, const ZqMatrix& b) {
  if (a.q() != b.q()) throw ParamError("mul_mod: modulus mismatch");
  return ZqMatrix(a.entries() * b.entries(), a.q());
}

IntMat mul_mod(const ZqMatrix& a, const IntMat& m) {
  IntMat r = a.entries() * m;
  for (Index j = 0; j < r.cols(); ++j)
    for (Index i = 0; i < r.rows(); ++i) r(i, j) = mod_reduce(r(i, j), a.q());
  return r;
}

IntVec mul_mod(const ZqMatrix& a, const IntVec& v) {
  return IntVec(mul_mod(a, IntMat(v)));
}

namespace {

struct Rref {
  IntMat m;                    // reduced form, entries in [0, q)
  std::vector<Index> pivots;   // pivot column per pivot row
};

// Row-reduced echelon form over the field Z_q.
Rref rref_mod_q(const ZqMatrix& b) {
  Rref out;
  out.m = b.entries();
  const mpz_class& q = b.q();
  const Index rows = out.m.rows(), cols = out.m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (out.m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) out.m.row(r).swap(out.m.row(p));
    mpz_class inv = inv_mod(out.m(r, c), q);
    for (Index j = c; j < cols; ++j)
      out.m(r, j) = mod_reduce(out.m(r, j) * inv, q);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || out.m(i, c) == 0) continue;
      mpz_class f = out.m(i, c);
      for (Index j = c; j < cols; ++j)
        out.m(i, j) = mod_reduce(out.m(i, j) - f * out.m(r, j), q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

Index rank_mod_q(const ZqMatrix& b) {
  return static_cast<Index>(rref_mod_q(b).pivots.size());
}

IntVec solve_mod_q(const ZqMatrix& b, const IntVec& alpha) {
  if (alpha.size() != b.rows())
    throw ParamError("solve_mod_q: rhs dimension mismatch");
  const mpz_class& q = b.q();
  IntMat aug(b.rows(), b.cols() + 1);
  aug.leftCols(b.cols()) = b.entries();
  for (Index i = 0; i < alpha.size(); ++i)
    aug(i, b.cols()) = mod_reduce(alpha(i), q);
  Rref rr = rref_mod_q(ZqMatrix(std::move(aug), q));
  IntVec x = IntVec::Zero(b.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] == b.cols())
      throw SolveError("solve_mod_q: inconsistent system");
    x(rr.pivots[r]) = rr.m(static_cast<Index>(r), b.cols());
  }
  return x;
}

IntMat kernel_mod_q(const ZqMatrix& b) {
  Rref rr = rref_mod_q(b);
  const mpz_class& q = b.q();
  const Index n = b.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  IntMat k(n, n - static_cast<Index>(rr.pivots.size()));
  Index out = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    IntVec v = IntVec::Zero(n);
    v(f) = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      v(rr.pivots[r]) = mod_reduce(-rr.m(static_cast<Index>(r), f), q);
    k.col(out++) = v;
  }
  return k;
}

LatticeBasis kernel_basis_mod_q(const ZqMatrix& b) {
  const Index n = b.cols();
  IntMat ker = kernel_mod_q(b);
  IntMat gen(n, ker.cols() + n);
  gen.leftCols(ker.cols()) = ker;
  gen.rightCols(n) = IntMat::Identity(n, n) * b.q();
  return LatticeBasis(hnf(gen));
}

}  // namespace lhs
