#pragma once

// Trapdoor lattice machinery: (A, T_A) generation, full-rank-set-to-basis
// conversion, orthogonal tag matrices from Hadamard embeddings, and
// dimension-preserving basis delegation to tagged lattices.

#include <string>

#include "lhs/rng.hpp"
#include "lhs/sampler.hpp"
#include "lhs/zq.hpp"

namespace lhs {

struct TrapdoorPair {
  ZqMatrix A;        // h x n, rank h over Z_q
  LatticeBasis T_A;  // basis of Lambda_q^perp(A), |det| = q^h
};

// Gadget-style trapdoor generation. A = [Abar | G - Abar R] with ternary
// R (no zero columns) and a base-b gadget sized to fit n; T_A comes out
// of the closed-form basis for the gadget lattice, so |det T_A| = q^h and
// A T_A = 0 (mod q) hold structurally. A is entrywise uniform.
TrapdoorPair trap_gen(const mpz_class& q, Index h, Index n, RandomStream& rng);

// Convert a full-rank set S in L(B0) into a basis T of the *full* lattice
// L(B0) with gs_norm(T) <= gs_norm(S) and ||T|| <= ||S|| sqrt(n)/2, both
// verified exactly in rationals. T is triangular in S's column order and
// size-reduced; deterministic.
LatticeBasis to_basis(const IntMat& s, const LatticeBasis& b0);

// t with t^2 * n = 1 (mod q); n must be a power of four, q odd.
mpz_class sqrt_unit(Index n, const mpz_class& q);

// Orthogonal tag matrix H = t * H_n * D (mod q), D = diag(2 tau_i - 1).
// H H^T = I (mod q); deterministic in (q, n, tau, H_n).
ZqMatrix otr_gen(const mpz_class& q, Index n, const std::string& tau,
                 const IntMat& h_n);

// Basis of Lambda_q^perp(B), B = A H^T (mod q), with unchanged dimension:
// S = centered(H T_A mod q) as the full-rank set, arbitrary basis from
// kernel_basis_mod_q(B), combined via to_basis.
LatticeBasis new_basis(const ZqMatrix& a, const ZqMatrix& h,
                       const LatticeBasis& t_a);

// Everything Sign and Verify must agree on for one tag.
struct TagContext {
  std::string tau;
  ZqMatrix H_tau;     // n x n, orthogonal mod q
  ZqMatrix B_tau;     // h x n: A H_tau^T mod q
  mpz_class t_unit;   // t with t^2 n = 1 (mod q)
};

TagContext derive_tag_context(const ZqMatrix& a, const IntMat& h_n,
                              const std::string& tau);

}  // namespace lhs
