#pragma once

// Executable security and privacy games: EUF-CMA and U-ST-SCMA with
// scripted adversaries, the simulator with forgery-to-SIS extraction,
// and the statistical probes backing the "statistically close" claims.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lhs/scheme.hpp"
#include "lhs/stats.hpp"

namespace lhs {

struct QueryRecord {
  std::string tau;
  IntMat data;  // n x k, messages are columns
  std::vector<Signature> sigs;
};

struct SimulatorState {
  PublicParams pp;
  PublicKey pk;
  SecretKey sk;
  IntMat x;  // n x k short vectors with alpha_i = A x_i (mod q); empty when keys are real
  std::vector<QueryRecord> issued;
};

// alpha_i = A x_i with x_i <- SampleDom(n, sqrt(n)); the public view is
// statistically close to real key_gen (exercised by uniformity_probe).
SimulatorState simulate_keygen(PublicParams& pp, RandomStream& rng);

struct Forgery {
  std::string tau;
  IntVec m;
  LinearFunc f;
  Signature sig;
};

enum class ForgeryClass { none, type1, type2 };

struct Extraction {
  IntVec z;
  mpz_class norm_sq = 0;
  double beta = 0.0;  // k p V_eff sqrt(n)
  bool sis_ok = false;
  bool collision = false;  // z = 0: the SampleDom collision event
};

struct GameResult {
  enum class Winner { challenger, adversary } winner = Winner::challenger;
  ForgeryClass cls = ForgeryClass::none;
  std::optional<Extraction> extraction;
  Index queries = 0;
  bool white_box = false;  // reduction exercise, not an attack
  bool aborted = false;
  std::string abort_reason;
  double elapsed_sec = 0.0;
};

std::string to_text(const GameResult& r);

// Scripted adversary contract. White-box adversaries additionally receive
// the simulator state (secret key included); the harness labels those
// runs as reduction exercises.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual bool white_box() const { return false; }
  virtual void receive_secret(const SimulatorState&) {}

  // Adaptive queries (EUF-CMA); nullopt ends the query phase.
  virtual std::optional<IntMat> next_data_set(const SimulatorState& view) = 0;
  virtual std::optional<Forgery> forge(const SimulatorState& view) = 0;

  // Static commitment (U-ST-SCMA): data sets and a target tag index,
  // chosen after seeing the tags but before any key exists.
  struct Commit {
    std::vector<IntMat> data_sets;
    Index target = 0;  // 0-based index into the tag list
  };
  virtual Commit commit(const std::vector<std::string>& tags,
                        const PublicParams& pp);
};

std::unique_ptr<Adversary> make_adversary(const std::string& name,
                                          RandomStream rng);

GameResult run_euf_cma(Adversary& adv, PublicParams pp, RandomStream& rng,
                       Index max_queries = 16);

GameResult run_ust_scma(Adversary& adv, PublicParams pp, Index n_s,
                        RandomStream& rng);

// z = centered(H_tau^T sigma* mod q) - sum c_i x_i, a SIS witness for A
// unless the SampleDom collision event z = 0 occurs. The forgery must
// already verify.
Extraction extract_sis(const SimulatorState& state, const Forgery& forgery);

// z != 0, A z = 0 (mod q), ||z|| <= beta.
bool sis_check(const ZqMatrix& a, const IntVec& z, double beta);

struct ProbeReport {
  double p_value = 0.0;
  bool pass = false;
  std::vector<double> per_coordinate_p;
  std::vector<long long> joint_counts;  // only in joint-bucket mode
  std::string mode;
  Index trials = 0;
};

enum class AlphaMode { simulated, real };

// Chi-square of alpha = A x (mod q) against uniform over Z_q^h. Joint
// q^h buckets when trials >= 5 q^h, per-coordinate + Fisher otherwise.
ProbeReport uniformity_probe(const PublicParams& pp, Index trials,
                             RandomStream& rng,
                             AlphaMode mode = AlphaMode::simulated);
// Same probe against a caller-supplied matrix (negative controls).
ProbeReport uniformity_probe_on(const ZqMatrix& a, const PublicParams& pp,
                                Index trials, RandomStream& rng);

struct CollisionReport {
  Index hits = 0;
  Index trials = 0;
  double rate = 0.0;
  double lemma_bound = 0.0;  // e^(1/2) / ((4/3) n^3 - 2 n^2 + (8/3) n)
  bool pass = false;         // rate <= 10 x lemma_bound
};

CollisionReport collision_probe(Index n, double s, Index trials,
                                const IntVec& target, RandomStream& rng);

struct ContextHidingReport {
  double aggregate_p = 0.0;  // Bonferroni over per-coordinate KS p-values
  double min_p = 0.0;
  std::vector<double> per_coordinate_p;
  bool threshold_ok = false;  // V_eff > p (pk)^s 1.5 sqrt(1 + ln n)
  bool pass = false;          // aggregate_p > kKsAlpha
  Index trials = 0;
};

// Definition-style challenge: sign both data sets under fresh tags,
// evaluate f_1..f_s, and KS-compare the derived-signature matrices
// D^(0), D^(1) per coordinate. Requires f_i(m0) = f_i(m1) in Z_p^n.
ContextHidingReport context_hiding_test(const PublicParams& pp,
                                        const KeyPair& keys, const IntMat& m0,
                                        const IntMat& m1,
                                        const std::vector<LinearFunc>& fs,
                                        Index trials, RandomStream& rng);

}  // namespace lhs
