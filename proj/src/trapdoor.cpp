#include "lhs/trapdoor.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace lhs {

namespace {

// Base-b digits of x, exactly w of them (requires 0 <= x < b^w).
std::vector<mpz_class> digits(mpz_class x, const mpz_class& b, Index w) {
  std::vector<mpz_class> d(static_cast<std::size_t>(w));
  for (Index l = 0; l < w; ++l) {
    d[static_cast<std::size_t>(l)] = x % b;
    x /= b;
  }
  if (x != 0) throw ParamError("digits: value does not fit w digits");
  return d;
}

// Short basis of { v : g^T v = 0 (mod q) } for the gadget g = (1, b, ..., b^(w-1)).
IntMat gadget_block_basis(const mpz_class& q, const mpz_class& b, Index w) {
  IntMat s = IntMat::Zero(w, w);
  for (Index l = 0; l + 1 < w; ++l) {
    s(l, l) = b;
    s(l + 1, l) = -1;
  }
  auto qd = digits(q, b, w);
  for (Index l = 0; l < w; ++l) s(l, w - 1) = qd[static_cast<std::size_t>(l)];
  return s;
}

}  // namespace

TrapdoorPair trap_gen(const mpz_class& q, Index h, Index n, RandomStream& rng) {
  if (q < 3 || q % 2 == 0 || !is_prime(q))
    throw ParamError("trap_gen: q must be an odd prime");
  if (h < 1) throw ParamError("trap_gen: h must be positive");
  if (n < 2 * h)
    throw ParamError("trap_gen: need n >= 2h to fit a gadget trapdoor");

  // Gadget geometry: w digit slots per row block, base b = ceil(q^(1/w)).
  const Index w_cap = static_cast<Index>(mpz_sizeinbase(q.get_mpz_t(), 2));
  const Index w = std::min(w_cap, (n - h) / h);
  mpz_class b;
  mpz_root(b.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(w));
  mpz_class bw;
  mpz_pow_ui(bw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(w));
  while (bw < q) {
    ++b;
    mpz_pow_ui(bw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(w));
  }
  if (b < 2) b = 2;
  const Index hw = h * w;
  const Index mbar = n - hw;

  IntMat abar(h, mbar);
  for (Index j = 0; j < mbar; ++j)
    for (Index i = 0; i < h; ++i) abar(i, j) = rng.below(q);

  // Ternary R; all-zero columns resampled so A stays entrywise uniform.
  IntMat r(mbar, hw);
  for (Index j = 0; j < hw; ++j) {
    for (;;) {
      bool nonzero = false;
      for (Index i = 0; i < mbar; ++i) {
        r(i, j) = mpz_class(static_cast<long>(rng.below(3)) - 1);
        if (r(i, j) != 0) nonzero = true;
      }
      if (nonzero) break;
    }
  }

  // Gadget G = I_h (x) g^T and the right block G - Abar R (mod q).
  IntMat g = IntMat::Zero(h, hw);
  {
    mpz_class pw = 1;
    for (Index l = 0; l < w; ++l) {
      for (Index i = 0; i < h; ++i) g(i, i * w + l) = mod_reduce(pw, q);
      pw = mod_reduce(pw * b, q);
    }
  }
  IntMat a(h, n);
  a.leftCols(mbar) = abar;
  a.rightCols(hw) = g - abar * r;  // ZqMatrix construction reduces mod q

  // Digit preimages: G d_j = -abar_j (mod q), entries in [0, b).
  IntMat d(hw, mbar);
  for (Index j = 0; j < mbar; ++j)
    for (Index i = 0; i < h; ++i) {
      auto dij = digits(mod_reduce(-abar(i, j), q), b, w);
      for (Index l = 0; l < w; ++l) d(i * w + l, j) = dij[static_cast<std::size_t>(l)];
    }

  IntMat s_g = IntMat::Zero(hw, hw);
  IntMat block = gadget_block_basis(q, b, w);
  for (Index i = 0; i < h; ++i)
    s_g.block(i * w, i * w, w, w) = block;

  // T_A = [[I, R],[0, I]] * [[I, 0],[D, S_G]]; det = q^h by construction.
  IntMat t_a(n, n);
  t_a.topLeftCorner(mbar, mbar) = IntMat::Identity(mbar, mbar) + r * d;
  t_a.topRightCorner(mbar, hw) = r * s_g;
  t_a.bottomLeftCorner(hw, mbar) = d;
  t_a.bottomRightCorner(hw, hw) = s_g;

  TrapdoorPair out{ZqMatrix(std::move(a), q), LatticeBasis(std::move(t_a))};
  if (!(mul_mod(out.A, out.T_A.basis()) == IntMat::Zero(h, n)))
    throw ContractError("trap_gen: A T_A != 0 (mod q)");
  if (rank_mod_q(out.A) != h)
    throw ContractError("trap_gen: A is rank deficient");
  return out;
}

LatticeBasis to_basis(const IntMat& s, const LatticeBasis& b0) {
  const Index n = b0.dim();
  if (s.rows() != n || s.cols() != n)
    throw ParamError("to_basis: S must be a square full-rank set");

  // Coordinates of S in the B0 basis; integrality is lattice membership.
  RatMat qr = solve_exact(b0.basis(), to_rational(s));
  IntMat q(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      if (qr(i, j).get_den() != 1)
        throw MembershipError("to_basis: column " + std::to_string(j) +
                              " of S is not in the lattice");
      q(i, j) = qr(i, j).get_num();
    }

  mpz_class d = det_abs(q);
  if (d == 0) throw RankError("to_basis: S is rank deficient", -1);

  // The lattice in S-coordinates is L(Q^{-1}) which contains Z^n; take its
  // upper-triangular HNF basis W (diagonal entries 1/m_i <= 1) so that
  // T = S W is a basis of the full lattice with t~_i = w_ii s~_i.
  RatMat qinv_r = solve_exact(q, RatMat(to_rational(IntMat(IntMat::Identity(n, n) * d))));
  IntMat dm(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      if (qinv_r(i, j).get_den() != 1)
        throw ContractError("to_basis: adjugate not integral");
      dm(i, j) = qinv_r(i, j).get_num();
    }
  IntMat flipped = dm.reverse();  // reverse rows and columns
  IntMat w_low = hnf(flipped);
  IntMat w_up = w_low.reverse();

  // T = S (W/d); entries are exact integers.
  IntMat sw = s * w_up;
  IntMat t(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      mpz_class quo, rem;
      mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), sw(i, j).get_mpz_t(),
                  d.get_mpz_t());
      if (rem != 0) throw ContractError("to_basis: S W not divisible by d");
      t(i, j) = quo;
    }

  // Exact size reduction; the Gram-Schmidt vectors of T are unchanged.
  RatMat gso = gram_schmidt(t);
  std::vector<mpq_class> self(n);
  for (Index i = 0; i < n; ++i) self[i] = norm_sq(RatVec(gso.col(i)));
  for (Index i = 1; i < n; ++i) {
    for (Index j = i - 1; j >= 0; --j) {
      mpq_class mu = 0;
      for (Index row = 0; row < n; ++row) mu += t(row, i) * gso(row, j);
      mu /= self[j];
      mpz_class r = round_nearest(mu);
      if (r != 0) t.col(i) -= (r * t.col(j).array()).matrix();
    }
  }

  // The Lemma contract, checked exactly.
  mpq_class gs_t = 0, gs_s = 0;
  {
    RatMat gs = gram_schmidt(s);
    for (Index j = 0; j < n; ++j) {
      mpq_class a = norm_sq(RatVec(gso.col(j)));
      mpq_class b = norm_sq(RatVec(gs.col(j)));
      if (a > gs_t) gs_t = a;
      if (b > gs_s) gs_s = b;
    }
  }
  if (gs_t > gs_s)
    throw ContractError("to_basis: gs_norm(T) > gs_norm(S)");
  if (4 * matrix_norm_sq(t) > n * matrix_norm_sq(s))
    throw ContractError("to_basis: ||T|| > ||S|| sqrt(n)/2");

  return LatticeBasis(std::move(t));
}

mpz_class sqrt_unit(Index n, const mpz_class& q) {
  if (q % 2 == 0) throw ParamError("sqrt_unit: q must be odd");
  Index l = 0;
  Index m = n;
  while (m > 1 && m % 4 == 0) {
    m /= 4;
    ++l;
  }
  if (m != 1 || l < 1)
    throw ParamError("sqrt_unit: n must be a power of four");
  mpz_class two_l = 1;
  two_l <<= static_cast<unsigned>(l);
  mpz_class t = inv_mod(mod_reduce(two_l, q), q);
  if (mod_reduce(t * t * n, q) != 1)
    throw ContractError("sqrt_unit: t^2 n != 1 (mod q)");
  return t;
}

ZqMatrix otr_gen(const mpz_class& q, Index n, const std::string& tau,
                 const IntMat& h_n) {
  if (static_cast<Index>(tau.size()) != n)
    throw ParamError("otr_gen: tag length must equal n");
  if (h_n.rows() != n || h_n.cols() != n)
    throw ParamError("otr_gen: Hadamard matrix dimension mismatch");
  if (h_n * h_n.transpose() != IntMat(IntMat::Identity(n, n) * mpz_class(n)))
    throw ParamError("otr_gen: H_n H_n^T != n I, not a Hadamard matrix");
  mpz_class t = sqrt_unit(n, q);
  IntMat h = h_n;
  for (Index j = 0; j < n; ++j) {
    if (tau[static_cast<std::size_t>(j)] == '0')
      h.col(j) = -h.col(j);
    else if (tau[static_cast<std::size_t>(j)] != '1')
      throw ParamError("otr_gen: tag must be a 0/1 string");
  }
  return ZqMatrix(IntMat(h * t), q);
}

LatticeBasis new_basis(const ZqMatrix& a, const ZqMatrix& h,
                       const LatticeBasis& t_a) {
  const Index n = a.cols();
  if (h.rows() != n || h.cols() != n || t_a.dim() != n)
    throw ParamError("new_basis: dimension mismatch");
  if (!(mul_mod(h, h.transpose()) == ZqMatrix::identity(n, a.q())))
    throw ParamError("new_basis: H is not orthogonal mod q");

  ZqMatrix b = mul_mod(a, h.transpose());
  IntMat s = ZqMatrix(mul_mod(h, t_a.basis()), a.q()).centered();
  if (det_abs(s) == 0) {
    // Deterministic re-lift; adding q I stays inside Lambda_q^perp(B).
    s += IntMat::Identity(n, n) * a.q();
    if (det_abs(s) == 0)
      throw RankError("new_basis: delegated set is rank deficient", -1);
  }
  return to_basis(s, kernel_basis_mod_q(b));
}

TagContext derive_tag_context(const ZqMatrix& a, const IntMat& h_n,
                              const std::string& tau) {
  TagContext ctx;
  ctx.tau = tau;
  ctx.H_tau = otr_gen(a.q(), a.cols(), tau, h_n);
  ctx.B_tau = mul_mod(a, ctx.H_tau.transpose());
  ctx.t_unit = sqrt_unit(a.cols(), a.q());
  return ctx;
}

}  // namespace lhs
