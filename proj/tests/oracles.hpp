#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: Smith normal form for lattice determinants, and brute-force
// lattice point enumeration for small index computations.

#include <vector>

#include "lhs/mat.hpp"

namespace oracle {

using lhs::Index;
using lhs::IntMat;
using lhs::IntVec;

// Invariant factors of an integer matrix (Smith normal form diagonal).
inline std::vector<mpz_class> smith_invariants(IntMat m) {
  std::vector<mpz_class> inv;
  Index top = 0;
  while (top < m.rows() && top < m.cols()) {
    // Find a nonzero entry of minimal magnitude in the working block.
    Index pi = -1, pj = -1;
    for (Index i = top; i < m.rows(); ++i)
      for (Index j = top; j < m.cols(); ++j)
        if (m(i, j) != 0 &&
            (pi < 0 || cmp(abs(m(i, j)), abs(m(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;  // all zero
    m.row(top).swap(m.row(pi));
    m.col(top).swap(m.col(pj));
    bool clean = true;
    for (Index i = top + 1; i < m.rows(); ++i)
      if (m(i, top) != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(i, top).get_mpz_t(),
                   m(top, top).get_mpz_t());
        m.row(i) -= (q * m.row(top).array()).matrix();
        if (m(i, top) != 0) clean = false;
      }
    for (Index j = top + 1; j < m.cols(); ++j)
      if (m(top, j) != 0) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(top, j).get_mpz_t(),
                   m(top, top).get_mpz_t());
        m.col(j) -= (q * m.col(top).array()).matrix();
        if (m(top, j) != 0) clean = false;
      }
    if (!clean) continue;  // pivot shrank; repeat with the same corner
    // Divisibility fix-up so invariant factors come out in order.
    bool divides_all = true;
    for (Index i = top + 1; i < m.rows() && divides_all; ++i)
      for (Index j = top + 1; j < m.cols(); ++j)
        if (m(i, j) % m(top, top) != 0) {
          m.row(top) += m.row(i);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    inv.push_back(abs(m(top, top)));
    ++top;
  }
  return inv;
}

// |det| of the lattice generated by the columns (0 if rank-deficient for
// square-rank inputs).
inline mpz_class lattice_det_via_smith(const IntMat& generators) {
  auto inv = smith_invariants(generators);
  if (static_cast<Index>(inv.size()) < generators.rows()) return 0;
  mpz_class d = 1;
  for (const auto& x : inv) d *= x;
  return d;
}

// Count lattice points of L(basis) inside [0, bound)^n by brute force.
// Only usable for tiny n and bound.
inline long count_points_in_box(const IntMat& basis, long bound) {
  const Index n = basis.rows();
  // Enumerate coefficient vectors in a generous window.
  long window = 4 * bound;
  std::vector<long> coef(static_cast<std::size_t>(n), -window);
  long count = 0;
  for (;;) {
    IntVec pt = IntVec::Zero(n);
    for (Index i = 0; i < n; ++i)
      pt += (mpz_class(coef[static_cast<std::size_t>(i)]) *
             basis.col(i).array())
                .matrix();
    bool inside = true;
    for (Index i = 0; i < n && inside; ++i)
      if (pt(i) < 0 || pt(i) >= bound) inside = false;
    if (inside) ++count;
    Index pos = 0;
    while (pos < n) {
      if (++coef[static_cast<std::size_t>(pos)] <= window) break;
      coef[static_cast<std::size_t>(pos)] = -window;
      ++pos;
    }
    if (pos == n) break;
  }
  return count;
}

}  // namespace oracle
