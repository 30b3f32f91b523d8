#pragma once

// The linearly homomorphic signature scheme: Setup / KeyGen / Sign /
// Verify / Evaluate over the intersection lattice p Z^n  ∩  Λ_q^⊥(B^τ),
// with CRT targets binding messages mod p and key vectors mod q.

#include <iosfwd>
#include <string>
#include <vector>

#include "lhs/trapdoor.hpp"

namespace lhs {

enum class Profile { paper_faithful, toy };

struct PublicParams {
  Profile profile = Profile::toy;
  Index n = 0;  // dimension, power of four
  Index k = 0;  // maximum data-set size
  mpz_class p;  // small prime (message modulus); Lambda_1 = p Z^n
  mpz_class q;  // odd prime (lattice modulus)
  Index h = 0;  // rank of A
  double v = 0.0;      // sampling parameter from the Setup formula
  double v_eff = 0.0;  // effective sampling parameter, >= v
  std::vector<std::string> deviations;  // stamped into every report
};

// Paper-faithful profile: q = smallest prime >= (nkp)^2,
// h = floor(n / (6 log2 q)), V = p sqrt(2 n log2 q) log2 n.
PublicParams setup(Index n, Index k, const mpz_class& p);

// Toy profile: explicit parameters, relaxed constraints, deviations
// recorded. V keeps the Setup formula; V_eff is raised by key_gen.
PublicParams setup_toy(Index n, Index k, const mpz_class& p,
                       const mpz_class& q, Index h);

struct PublicKey {
  ZqMatrix A;      // h x n, rank h
  IntMat h_n;      // Hadamard matrix of order n
  ZqMatrix alpha;  // h x k; column i is alpha_i
};

struct SecretKey {
  LatticeBasis T_A;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

// In the toy profile this measures gs_norm(p T_B) over a probe tag and
// raises pp.v_eff to keep the sampler's quality contract honest.
KeyPair key_gen(PublicParams& pp, RandomStream& rng);

// Linear function <f> = (c_1, ..., c_k), c_i integers in (-p/2, p/2].
struct LinearFunc {
  IntVec c;
};

LinearFunc make_linear_func(const PublicParams& pp, IntVec c);
LinearFunc projection(const PublicParams& pp, Index i);  // pi_i, 1-based
LinearFunc zero_func(const PublicParams& pp);

// f applied to a data set (messages are the columns), reduced into [0, p).
IntVec apply_mod_p(const LinearFunc& f, const IntMat& data,
                   const mpz_class& p);

void check_message(const PublicParams& pp, const IntVec& m);

struct Signature {
  IntVec sigma;
  enum class Provenance { fresh, evaluated } prov = Provenance::fresh;
  Index index = 0;  // 1-based message index when fresh
  IntVec func;      // coefficient vector when evaluated
};

// t in [0, pq)^n with t = m (mod p) and B_tau t = alpha_i (mod q).
IntVec crt_target(const IntVec& m, const IntVec& alpha_i,
                  const ZqMatrix& b_tau, const mpz_class& p,
                  const mpz_class& q);

// Per-tag precomputation shared by every signature under one tag.
struct SignContext {
  TagContext tag;
  LatticeBasis lattice;  // p * T_{B^tau}, basis of Lambda_1 ∩ Lambda_2
  double gs_measured = 0.0;
  bool quality_ok = true;  // v_eff met the sampler threshold for this tag
};

SignContext make_sign_context(const PublicParams& pp, const PublicKey& pk,
                              const SecretKey& sk, const std::string& tau);

Signature sign_with_context(const PublicParams& pp, const PublicKey& pk,
                            const SignContext& ctx, const IntVec& m, Index i,
                            RandomStream& rng);

Signature sign(const PublicParams& pp, const PublicKey& pk,
               const SecretKey& sk, const std::string& tau, const IntVec& m,
               Index i, RandomStream& rng);

// Short sigma with sigma = m (mod p) and B_tau sigma = target (mod q),
// for an arbitrary mod-q target. Honest signing uses target = alpha_i;
// the game harness's white-box forgers use combined targets.
IntVec sign_to_target(const PublicParams& pp, const SignContext& ctx,
                      const IntVec& m, const IntVec& target,
                      RandomStream& rng);

struct VerifyResult {
  bool accepted = false;
  int failed_condition = 0;  // 1, 2 or 3; 0 when accepted
  std::string reason;
};

VerifyResult verify(const PublicParams& pp, const PublicKey& pk,
                    const std::string& tau, const IntVec& m,
                    const Signature& sig, const LinearFunc& f);

Signature evaluate(const PublicParams& pp, const PublicKey& pk,
                   const std::string& tau, const LinearFunc& f,
                   const std::vector<Signature>& sigs);

// Deterministic tag derivation; Sign and Verify agree bit-exactly.
TagContext derive_matrix(const PublicKey& pk, const std::string& tau);

// --- serialization (LHS1 text formats) ---

void write_params(std::ostream& os, const PublicParams& pp);
PublicParams read_params(std::istream& is);
void write_public_key(std::ostream& os, const PublicKey& pk);
PublicKey read_public_key(std::istream& is);
void write_secret_key(std::ostream& os, const SecretKey& sk);
SecretKey read_secret_key(std::istream& is);
void write_signature(std::ostream& os, const Signature& sig,
                     const std::string& tau);
struct SignatureFile {
  Signature sig;
  std::string tau;
};
SignatureFile read_signature(std::istream& is);

}  // namespace lhs
