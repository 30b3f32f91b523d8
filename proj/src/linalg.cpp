#include "lhs/linalg.hpp"

#include <cmath>
#include <string>

namespace lhs {

RatMat gram_schmidt(const RatMat& b) {
  const Index n = b.cols();
  RatMat g = b;
  std::vector<mpq_class> self(n);  // <g_j, g_j>, cached
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < j; ++i) {
      mpq_class mu = dot(RatVec(b.col(j)), RatVec(g.col(i))) / self[i];
      if (mu != 0) g.col(j) -= (mu * g.col(i).array()).matrix();
    }
    self[j] = norm_sq(RatVec(g.col(j)));
    if (self[j] == 0)
      throw RankError("gram_schmidt: column " + std::to_string(j) +
                          " is linearly dependent on earlier columns",
                      j);
  }
  return g;
}

RatMat gram_schmidt(const IntMat& b) { return gram_schmidt(to_rational(b)); }

mpq_class gs_norm_sq(const IntMat& b) {
  RatMat g = gram_schmidt(b);
  mpq_class best = 0;
  for (Index j = 0; j < g.cols(); ++j) {
    mpq_class s = norm_sq(RatVec(g.col(j)));
    if (s > best) best = s;
  }
  return best;
}

double gs_norm(const IntMat& b) { return std::sqrt(to_double(gs_norm_sq(b))); }

mpz_class matrix_norm_sq(const IntMat& b) {
  mpz_class best = 0;
  for (Index j = 0; j < b.cols(); ++j) {
    mpz_class s = norm_sq(IntVec(b.col(j)));
    if (s > best) best = s;
  }
  return best;
}

mpq_class matrix_norm_sq(const RatMat& b) {
  mpq_class best = 0;
  for (Index j = 0; j < b.cols(); ++j) {
    mpq_class s = norm_sq(RatVec(b.col(j)));
    if (s > best) best = s;
  }
  return best;
}

double matrix_norm(const IntMat& b) {
  return std::sqrt(to_double(matrix_norm_sq(b)));
}

IntMat kronecker(const IntMat& a, const IntMat& b) {
  IntMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index r = 0; r < b.rows(); ++r)
        for (Index c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return k;
}

IntMat hadamard(Index n) {
  if (n < 1 || (n & (n - 1)) != 0)
    throw ParamError("hadamard: order " + std::to_string(n) +
                     " is not a power of two");
  if (n == 1) {
    IntMat h(1, 1);
    h(0, 0) = 1;
    return h;
  }
  IntMat h2(2, 2);
  h2 << 1, 1, 1, -1;
  if (n == 2) return h2;
  // Fixed order-4 base (sequency-ordered), then doubling by H_2 (x) H.
  IntMat h(4, 4);
  h << 1, 1, 1, 1,
       1, 1, -1, -1,
       1, -1, 1, -1,
       1, -1, -1, 1;
  while (h.rows() < n) h = kronecker(h2, h);
  return h;
}

IntMat hnf(const IntMat& m_in) {
  IntMat m = m_in;
  const Index rows = m.rows(), cols = m.cols();
  Index c = 0;  // next pivot column slot
  for (Index r = 0; r < rows && c < cols; ++r) {
    // Euclidean reduction across columns c.. on row r until one survivor.
    for (;;) {
      Index jmin = -1;
      for (Index j = c; j < cols; ++j) {
        if (m(r, j) == 0) continue;
        if (jmin < 0 || cmp(abs(m(r, j)), abs(m(r, jmin))) < 0) jmin = j;
      }
      if (jmin < 0) break;  // row r already clear; no pivot here
      m.col(jmin).swap(m.col(c));
      bool again = false;
      for (Index j = c + 1; j < cols; ++j) {
        if (m(r, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, c).get_mpz_t());
        m.col(j) -= (q * m.col(c).array()).matrix();
        if (m(r, j) != 0) again = true;
      }
      if (!again) break;
    }
    if (m(r, c) == 0) continue;  // no pivot in this row
    if (m(r, c) < 0) m.col(c) = -m.col(c);
    // Canonical reduction of the columns left of the pivot.
    for (Index j = 0; j < c; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, c).get_mpz_t());
      if (q != 0) m.col(j) -= (q * m.col(c).array()).matrix();
    }
    ++c;
  }
  if (c == 0) throw ParamError("hnf: zero lattice");
  return m.leftCols(c);
}

mpz_class det_abs(const IntMat& m_in) {
  if (m_in.rows() != m_in.cols()) throw ParamError("det_abs: matrix not square");
  IntMat m = m_in;
  const Index n = m.rows();
  mpz_class prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));  // sign irrelevant for |det|
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return abs(m(n - 1, n - 1));
}

namespace {

// Gauss-Jordan with first-nonzero pivoting, exact.
RatMat solve_rational(const IntMat& a, RatMat rhs) {
  if (a.rows() != a.cols()) throw ParamError("solve_exact: matrix not square");
  if (a.rows() != rhs.rows())
    throw ParamError("solve_exact: dimension mismatch");
  const Index n = a.rows();
  RatMat w = to_rational(a);
  for (Index k = 0; k < n; ++k) {
    Index p = -1;
    for (Index i = k; i < n; ++i)
      if (w(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw RankError("solve_exact: singular matrix at column " +
                                   std::to_string(k),
                               k);
    if (p != k) {
      w.row(k).swap(w.row(p));
      rhs.row(k).swap(rhs.row(p));
    }
    mpq_class inv = 1 / w(k, k);
    w.row(k) *= inv;
    rhs.row(k) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      mpq_class f = w(i, k);
      w.row(i) -= (f * w.row(k).array()).matrix();
      rhs.row(i) -= (f * rhs.row(k).array()).matrix();
    }
  }
  return rhs;
}

}  // namespace

RatMat solve_exact(const IntMat& a, const RatMat& rhs) {
  return solve_rational(a, rhs);
}

RatVec solve_exact(const IntMat& a, const RatVec& rhs) {
  return RatVec(solve_rational(a, RatMat(rhs)));
}

LatticeBasis::LatticeBasis(IntMat basis) : basis_(std::move(basis)) {
  if (basis_.rows() == 0 || basis_.rows() != basis_.cols())
    throw ParamError("LatticeBasis: basis must be square and non-empty");
}

const RatMat& LatticeBasis::gso() const {
  if (!gso_) gso_ = std::make_shared<const RatMat>(gram_schmidt(basis_));
  return *gso_;
}

const mpq_class& LatticeBasis::gs_norm_sq() const {
  if (!gs_norm_sq_) {
    const RatMat& g = gso();
    mpq_class best = 0;
    for (Index j = 0; j < g.cols(); ++j) {
      mpq_class s = norm_sq(RatVec(g.col(j)));
      if (s > best) best = s;
    }
    gs_norm_sq_ = std::make_shared<const mpq_class>(best);
  }
  return *gs_norm_sq_;
}

double LatticeBasis::gs_norm() const {
  return std::sqrt(to_double(gs_norm_sq()));
}

mpz_class LatticeBasis::det_abs() const { return lhs::det_abs(basis_); }

RatVec LatticeBasis::solve(const IntVec& t) const {
  return solve_exact(basis_, to_rational(t));
}

bool LatticeBasis::contains(const IntVec& t) const {
  RatVec x = solve(t);
  for (Index i = 0; i < x.size(); ++i)
    if (x(i).get_den() != 1) return false;
  return true;
}

}  // namespace lhs
