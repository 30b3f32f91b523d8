#include "lhs/games.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace lhs {

namespace {

IntMat random_data_set(const PublicParams& pp, RandomStream& rng) {
  IntMat data(pp.n, pp.k);
  for (Index j = 0; j < pp.k; ++j)
    for (Index i = 0; i < pp.n; ++i) data(i, j) = rng.below(pp.p);
  return data;
}

LinearFunc random_func(const PublicParams& pp, RandomStream& rng) {
  // Uniform over the admissible coefficients (-p/2, p/2].
  IntVec c(pp.k);
  mpz_class lo = -(pp.p - 1) / 2;  // p odd: (-p/2, p/2] = [-(p-1)/2, (p-1)/2]
  mpz_class width = pp.p;
  for (Index i = 0; i < pp.k; ++i) c(i) = lo + rng.below(width);
  return make_linear_func(pp, std::move(c));
}

bool tag_issued(const SimulatorState& st, const std::string& tau) {
  for (const auto& rec : st.issued)
    if (rec.tau == tau) return true;
  return false;
}

ForgeryClass classify(const SimulatorState& st, const Forgery& f,
                      const mpz_class& p) {
  if (!tag_issued(st, f.tau)) return ForgeryClass::type1;
  // II-type only when m* differs from f(data_i) for every matching tag;
  // otherwise the message is legitimately derivable.
  for (const auto& rec : st.issued) {
    if (rec.tau != f.tau) continue;
    if (f.m.size() == rec.data.rows() &&
        apply_mod_p(f.f, rec.data, p) == f.m)
      return ForgeryClass::none;
  }
  return ForgeryClass::type2;
}

void run_query(SimulatorState& st, const IntMat& data, const std::string& tau,
               RandomStream& rng) {
  QueryRecord rec;
  rec.tau = tau;
  rec.data = data;
  SignContext ctx = make_sign_context(st.pp, st.pk, st.sk, tau);
  for (Index j = 1; j <= st.pp.k; ++j)
    rec.sigs.push_back(
        sign_with_context(st.pp, st.pk, ctx, IntVec(data.col(j - 1)), j, rng));
  st.issued.push_back(std::move(rec));
}

GameResult finish_game(const SimulatorState& st,
                       const std::optional<Forgery>& forgery,
                       ForgeryClass cls_hint, bool white_box,
                       std::chrono::steady_clock::time_point t0) {
  GameResult r;
  r.white_box = white_box;
  r.queries = static_cast<Index>(st.issued.size());
  if (forgery) {
    const Forgery& f = *forgery;
    try {
      VerifyResult vr = verify(st.pp, st.pk, f.tau, f.m, f.sig, f.f);
      if (vr.accepted && cls_hint != ForgeryClass::none) {
        r.cls = cls_hint;
        r.winner = GameResult::Winner::adversary;
        r.extraction = extract_sis(st, f);
      }
    } catch (const FormatError& e) {
      // Malformed forgery = protocol violation, not a win.
      r.aborted = true;
      r.abort_reason = e.what();
    }
  }
  r.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

}  // namespace

SimulatorState simulate_keygen(PublicParams& pp, RandomStream& rng) {
  SimulatorState st;
  KeyPair kp = key_gen(pp, rng);  // TrapGen + H_n, alpha overwritten below
  st.pk = std::move(kp.pk);
  st.sk = std::move(kp.sk);
  double s = std::sqrt(static_cast<double>(pp.n));
  st.x.resize(pp.n, pp.k);
  for (Index i = 0; i < pp.k; ++i) st.x.col(i) = sample_dom(pp.n, s, rng);
  st.pk.alpha = ZqMatrix(mul_mod(st.pk.A, st.x), pp.q);
  st.pp = pp;
  return st;
}

Adversary::Commit Adversary::commit(const std::vector<std::string>&,
                                    const PublicParams&) {
  throw ProtocolError("adversary does not support static commitment");
}

namespace {

class NullAdversary : public Adversary {
 public:
  explicit NullAdversary(RandomStream) {}
  std::optional<IntMat> next_data_set(const SimulatorState&) override {
    return std::nullopt;
  }
  std::optional<Forgery> forge(const SimulatorState&) override {
    return std::nullopt;
  }
  Commit commit(const std::vector<std::string>& tags,
                const PublicParams&) override {
    return Commit{{}, 0};
  }
};

// Replays an Evaluate output of a queried data set; verifies but is not a
// forgery (m* equals f applied to the queried data).
class ReplayAdversary : public Adversary {
 public:
  explicit ReplayAdversary(RandomStream rng) : rng_(std::move(rng)) {}
  std::optional<IntMat> next_data_set(const SimulatorState& view) override {
    if (queried_) return std::nullopt;
    queried_ = true;
    return random_data_set(view.pp, rng_);
  }
  std::optional<Forgery> forge(const SimulatorState& view) override {
    if (view.issued.empty()) return std::nullopt;
    const QueryRecord& rec = view.issued.front();
    Forgery f;
    f.f = random_func(view.pp, rng_);
    f.tau = rec.tau;
    f.m = apply_mod_p(f.f, rec.data, view.pp.p);
    f.sig = evaluate(view.pp, view.pk, rec.tau, f.f, rec.sigs);
    return f;
  }
  Commit commit(const std::vector<std::string>& tags,
                const PublicParams& pp) override {
    Commit c;
    c.data_sets.push_back(random_data_set(pp, rng_));
    c.target = 0;
    return c;
  }

 private:
  RandomStream rng_;
  bool queried_ = false;
};

// White-box forgers: exercise the reduction's extraction path honestly
// by signing with the secret key the game never hands to a real attacker.
class WhiteBoxAdversary : public Adversary {
 public:
  WhiteBoxAdversary(RandomStream rng, bool reuse_tag)
      : rng_(std::move(rng)), reuse_tag_(reuse_tag) {}
  bool white_box() const override { return true; }
  void receive_secret(const SimulatorState& st) override { state_ = &st; }

  std::optional<IntMat> next_data_set(const SimulatorState& view) override {
    if (queries_++ >= 1) return std::nullopt;
    return random_data_set(view.pp, rng_);
  }

  std::optional<Forgery> forge(const SimulatorState& view) override {
    if (!state_) throw ProtocolError("white-box adversary has no secret");
    const PublicParams& pp = view.pp;
    Forgery f;
    f.f = random_func(pp, rng_);
    if (reuse_tag_) {
      if (view.issued.empty()) return std::nullopt;
      const QueryRecord& rec = view.issued[target_];
      f.tau = rec.tau;
      // Any message other than f(data) under the reused tag.
      f.m = apply_mod_p(f.f, rec.data, pp.p);
      f.m(0) = mod_reduce(f.m(0) + 1, pp.p);
    } else {
      do {
        f.tau = random_tag(static_cast<std::size_t>(pp.n), rng_);
      } while (tag_issued(view, f.tau));
      f.m.resize(pp.n);
      for (Index i = 0; i < pp.n; ++i) f.m(i) = rng_.below(pp.p);
    }
    // sigma* <- short preimage for the combined target sum c_i alpha_i.
    IntVec target = view.pk.alpha.entries() * f.f.c;
    for (Index i = 0; i < target.size(); ++i)
      target(i) = mod_reduce(target(i), pp.q);
    SignContext ctx = make_sign_context(pp, view.pk, state_->sk, f.tau);
    f.sig.sigma = sign_to_target(pp, ctx, f.m, target, rng_);
    f.sig.prov = Signature::Provenance::evaluated;
    f.sig.func = f.f.c;
    return f;
  }

  Commit commit(const std::vector<std::string>& tags,
                const PublicParams& pp) override {
    Commit c;
    for (std::size_t i = 0; i < tags.size(); ++i)
      c.data_sets.push_back(random_data_set(pp, rng_));
    c.target = reuse_tag_ && !tags.empty()
                   ? static_cast<Index>(rng_.below(tags.size()))
                   : 0;
    target_ = static_cast<std::size_t>(c.target);
    return c;
  }

 private:
  RandomStream rng_;
  bool reuse_tag_;
  const SimulatorState* state_ = nullptr;
  int queries_ = 0;
  std::size_t target_ = 0;
};

}  // namespace

std::unique_ptr<Adversary> make_adversary(const std::string& name,
                                          RandomStream rng) {
  if (name == "null") return std::make_unique<NullAdversary>(std::move(rng));
  if (name == "replay")
    return std::make_unique<ReplayAdversary>(std::move(rng));
  if (name == "whitebox-1")
    return std::make_unique<WhiteBoxAdversary>(std::move(rng), false);
  if (name == "whitebox-2")
    return std::make_unique<WhiteBoxAdversary>(std::move(rng), true);
  throw ParamError("unknown adversary '" + name + "'");
}

GameResult run_euf_cma(Adversary& adv, PublicParams pp, RandomStream& rng,
                       Index max_queries) {
  auto t0 = std::chrono::steady_clock::now();
  SimulatorState st = simulate_keygen(pp, rng);
  st.pp = pp;  // carries the keygen-raised v_eff
  if (adv.white_box()) adv.receive_secret(st);
  for (Index qn = 0; qn < max_queries; ++qn) {
    std::optional<IntMat> ds;
    try {
      ds = adv.next_data_set(st);
    } catch (const ProtocolError& e) {
      GameResult r;
      r.aborted = true;
      r.abort_reason = e.what();
      return r;
    }
    if (!ds) break;
    run_query(st, *ds, random_tag(static_cast<std::size_t>(pp.n), rng), rng);
  }
  std::optional<Forgery> forgery = adv.forge(st);
  ForgeryClass cls = ForgeryClass::none;
  if (forgery) cls = classify(st, *forgery, pp.p);
  return finish_game(st, forgery, cls, adv.white_box(), t0);
}

GameResult run_ust_scma(Adversary& adv, PublicParams pp, Index n_s,
                        RandomStream& rng) {
  auto t0 = std::chrono::steady_clock::now();
  // Initialization: tags first, then the adversary commits data + target.
  std::vector<std::string> tags;
  for (Index i = 0; i < n_s; ++i)
    tags.push_back(random_tag(static_cast<std::size_t>(pp.n), rng));
  Adversary::Commit commit;
  try {
    commit = adv.commit(tags, pp);
    if (!commit.data_sets.empty() &&
        (commit.target < 0 ||
         commit.target >= static_cast<Index>(tags.size())))
      throw ProtocolError("target tag outside the issued tag list");
    if (static_cast<Index>(commit.data_sets.size()) > n_s)
      throw ProtocolError("more data sets than tags");
  } catch (const ProtocolError& e) {
    GameResult r;
    r.aborted = true;
    r.abort_reason = e.what();
    r.white_box = adv.white_box();
    return r;
  }

  SimulatorState st = simulate_keygen(pp, rng);
  st.pp = pp;
  if (adv.white_box()) adv.receive_secret(st);
  for (std::size_t i = 0; i < commit.data_sets.size(); ++i)
    run_query(st, commit.data_sets[i], tags[i], rng);

  std::optional<Forgery> forgery = adv.forge(st);
  ForgeryClass cls = ForgeryClass::none;
  if (forgery) {
    if (!tag_issued(st, forgery->tau)) {
      cls = ForgeryClass::type1;
    } else if (!commit.data_sets.empty() &&
               forgery->tau == tags[static_cast<std::size_t>(commit.target)]) {
      const IntMat& data =
          commit.data_sets[static_cast<std::size_t>(commit.target)];
      if (apply_mod_p(forgery->f, data, pp.p) != forgery->m)
        cls = ForgeryClass::type2;
    }
  }
  return finish_game(st, forgery, cls, adv.white_box(), t0);
}

Extraction extract_sis(const SimulatorState& state, const Forgery& forgery) {
  VerifyResult vr = verify(state.pp, state.pk, forgery.tau, forgery.m,
                           forgery.sig, forgery.f);
  if (!vr.accepted)
    throw ParamError("extract_sis: forgery does not verify (condition " +
                     std::to_string(vr.failed_condition) + ")");
  if (state.x.size() == 0)
    throw ParamError("extract_sis: simulator state has no SampleDom vectors");

  const PublicParams& pp = state.pp;
  TagContext ctx = derive_matrix(state.pk, forgery.tau);
  // y = centered(H_tau^T sigma* mod q); any lift differs by q Z^n, which
  // A annihilates mod q, so the short vector-centered lift is the witness.
  IntVec y = mul_mod(ctx.H_tau.transpose(), forgery.sig.sigma);
  for (Index i = 0; i < y.size(); ++i) y(i) = mod_centered(y(i), pp.q);
  IntVec xprime = state.x * forgery.f.c;

  Extraction ex;
  ex.z = y - xprime;
  ex.beta = static_cast<double>(pp.k) * to_double(pp.p) * pp.v_eff *
            std::sqrt(static_cast<double>(pp.n));
  ex.norm_sq = norm_sq(ex.z);
  if (ex.norm_sq == 0) {
    ex.collision = true;  // Lemma-scale event: counted, never a witness
    return ex;
  }
  IntVec az = mul_mod(state.pk.A, ex.z);
  for (Index i = 0; i < az.size(); ++i)
    if (az(i) != 0) throw ContractError("extract_sis: A z != 0 (mod q)");
  ex.sis_ok = sis_check(state.pk.A, ex.z, ex.beta);
  return ex;
}

bool sis_check(const ZqMatrix& a, const IntVec& z, double beta) {
  if (z.size() != a.cols()) return false;
  bool nonzero = false;
  for (Index i = 0; i < z.size(); ++i)
    if (z(i) != 0) {
      nonzero = true;
      break;
    }
  if (!nonzero) return false;
  IntVec az = mul_mod(a, z);
  for (Index i = 0; i < az.size(); ++i)
    if (az(i) != 0) return false;
  return std::sqrt(to_double(norm_sq(z))) <= beta;
}

std::string to_text(const GameResult& r) {
  std::ostringstream os;
  os << "winner="
     << (r.winner == GameResult::Winner::adversary ? "adversary"
                                                   : "challenger")
     << '\n';
  os << "forgery_class="
     << (r.cls == ForgeryClass::type1   ? "I-type"
         : r.cls == ForgeryClass::type2 ? "II-type"
                                        : "none")
     << '\n';
  os << "queries=" << r.queries << '\n';
  os << "white_box=" << (r.white_box ? 1 : 0) << '\n';
  os << "aborted=" << (r.aborted ? 1 : 0) << '\n';
  if (r.aborted) os << "abort_reason=" << r.abort_reason << '\n';
  if (r.extraction) {
    os << "extraction.collision=" << (r.extraction->collision ? 1 : 0) << '\n';
    os << "extraction.sis_ok=" << (r.extraction->sis_ok ? 1 : 0) << '\n';
    os << "extraction.norm_sq=" << r.extraction->norm_sq.get_str() << '\n';
    os << "extraction.beta=" << r.extraction->beta << '\n';
    os << "extraction.z=";
    for (Index i = 0; i < r.extraction->z.size(); ++i) {
      if (i) os << ',';
      os << r.extraction->z(i).get_str();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

ProbeReport uniformity_report(const PublicParams& pp,
                              const std::vector<IntVec>& alphas) {
  ProbeReport rep;
  rep.trials = static_cast<Index>(alphas.size());
  const Index h = pp.h;
  double qd = to_double(pp.q);
  double cells = std::pow(qd, static_cast<double>(h));
  const auto trials = static_cast<double>(alphas.size());
  if (cells <= 1u << 20 && trials >= 5.0 * cells) {
    rep.mode = "joint";
    auto ncells = static_cast<std::size_t>(cells);
    std::vector<long long> counts(ncells, 0);
    for (const IntVec& a : alphas) {
      std::size_t idx = 0;
      for (Index i = 0; i < h; ++i)
        idx = idx * static_cast<std::size_t>(pp.q.get_ui()) +
              static_cast<std::size_t>(a(i).get_ui());
      ++counts[idx];
    }
    rep.joint_counts = counts;
    std::vector<double> expected(ncells, trials / cells);
    rep.p_value = chi_square_gof(expected, counts);
  } else {
    rep.mode = "per-coordinate+fisher";
    auto qn = static_cast<std::size_t>(pp.q.get_ui());
    for (Index i = 0; i < h; ++i) {
      std::vector<long long> counts(qn, 0);
      for (const IntVec& a : alphas)
        ++counts[static_cast<std::size_t>(a(i).get_ui())];
      std::vector<double> expected(qn, trials / static_cast<double>(qn));
      rep.per_coordinate_p.push_back(chi_square_gof(expected, counts));
    }
    rep.p_value = fisher_combine(rep.per_coordinate_p);
  }
  rep.pass = rep.p_value > kChiSquareAlpha;
  return rep;
}

}  // namespace

ProbeReport uniformity_probe_on(const ZqMatrix& a, const PublicParams& pp,
                                Index trials, RandomStream& rng) {
  double s = std::sqrt(static_cast<double>(pp.n));
  std::vector<IntVec> alphas;
  alphas.reserve(static_cast<std::size_t>(trials));
  for (Index t = 0; t < trials; ++t)
    alphas.push_back(mul_mod(a, sample_dom(pp.n, s, rng)));
  return uniformity_report(pp, alphas);
}

ProbeReport uniformity_probe(const PublicParams& pp, Index trials,
                             RandomStream& rng, AlphaMode mode) {
  if (mode == AlphaMode::real) {
    std::vector<IntVec> alphas;
    alphas.reserve(static_cast<std::size_t>(trials));
    for (Index t = 0; t < trials; ++t) {
      IntVec a(pp.h);
      for (Index i = 0; i < pp.h; ++i) a(i) = rng.below(pp.q);
      alphas.push_back(std::move(a));
    }
    return uniformity_report(pp, alphas);
  }
  TrapdoorPair td = trap_gen(pp.q, pp.h, pp.n, rng);
  return uniformity_probe_on(td.A, pp, trials, rng);
}

CollisionReport collision_probe(Index n, double s, Index trials,
                                const IntVec& target, RandomStream& rng) {
  if (target.size() != n)
    throw ParamError("collision_probe: target dimension mismatch");
  CollisionReport rep;
  rep.trials = trials;
  for (Index t = 0; t < trials; ++t) {
    IntVec x = sample_dom(n, s, rng);
    if (x == target) ++rep.hits;
  }
  rep.rate = static_cast<double>(rep.hits) / static_cast<double>(trials);
  double nd = static_cast<double>(n);
  rep.lemma_bound = std::exp(0.5) / ((4.0 / 3.0) * nd * nd * nd -
                                     2.0 * nd * nd + (8.0 / 3.0) * nd);
  rep.pass = rep.rate <= 10.0 * rep.lemma_bound;
  return rep;
}

ContextHidingReport context_hiding_test(const PublicParams& pp,
                                        const KeyPair& keys, const IntMat& m0,
                                        const IntMat& m1,
                                        const std::vector<LinearFunc>& fs,
                                        Index trials, RandomStream& rng) {
  if (m0.rows() != pp.n || m0.cols() != pp.k || m1.rows() != pp.n ||
      m1.cols() != pp.k)
    throw ParamError("context_hiding_test: data set dimensions");
  for (const LinearFunc& f : fs)
    if (apply_mod_p(f, m0, pp.p) != apply_mod_p(f, m1, pp.p))
      throw ParamError("context_hiding_test: f_i(m0) != f_i(m1) in Z_p^n");

  ContextHidingReport rep;
  rep.trials = trials;
  const auto s = static_cast<double>(fs.size());
  double threshold = to_double(pp.p) *
                     std::pow(to_double(pp.p) * static_cast<double>(pp.k), s) *
                     1.5 * std::sqrt(1.0 + std::log(static_cast<double>(pp.n)));
  rep.threshold_ok = pp.v_eff > threshold;

  // samples[b][coord] over trials; coord = (i * n + row) for d_i.
  const std::size_t ncoord = fs.size() * static_cast<std::size_t>(pp.n);
  std::vector<std::vector<double>> samples[2];
  samples[0].assign(ncoord, {});
  samples[1].assign(ncoord, {});
  for (Index t = 0; t < trials; ++t) {
    for (int b = 0; b < 2; ++b) {
      const IntMat& data = b ? m1 : m0;
      std::string tau = random_tag(static_cast<std::size_t>(pp.n), rng);
      SignContext ctx = make_sign_context(pp, keys.pk, keys.sk, tau);
      std::vector<Signature> sigs;
      for (Index j = 1; j <= pp.k; ++j)
        sigs.push_back(sign_with_context(pp, keys.pk, ctx,
                                         IntVec(data.col(j - 1)), j, rng));
      for (std::size_t i = 0; i < fs.size(); ++i) {
        Signature d = evaluate(pp, keys.pk, tau, fs[i], sigs);
        for (Index row = 0; row < pp.n; ++row)
          samples[b][i * static_cast<std::size_t>(pp.n) +
                     static_cast<std::size_t>(row)]
              .push_back(to_double(d.sigma(row)));
      }
    }
  }

  rep.min_p = 1.0;
  for (std::size_t c = 0; c < ncoord; ++c) {
    double p = ks_two_sample_pvalue(samples[0][c], samples[1][c]);
    rep.per_coordinate_p.push_back(p);
    if (p < rep.min_p) rep.min_p = p;
  }
  rep.aggregate_p =
      std::min(1.0, rep.min_p * static_cast<double>(ncoord));
  rep.pass = rep.aggregate_p > kKsAlpha;
  return rep;
}

}  // namespace lhs
