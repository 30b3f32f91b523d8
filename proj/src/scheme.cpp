#include "lhs/scheme.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "lhs/io.hpp"

namespace lhs {

namespace {

bool power_of_four(Index n) {
  if (n < 4) return false;
  while (n > 1) {
    if (n % 4 != 0) return false;
    n /= 4;
  }
  return true;
}

double log2_mpz(const mpz_class& x) {
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

double setup_v(Index n, const mpz_class& p, const mpz_class& q) {
  double lq = log2_mpz(q);
  return to_double(p) * std::sqrt(2.0 * static_cast<double>(n) * lq) *
         std::log2(static_cast<double>(n));
}

void validate_common(Index n, Index k, const mpz_class& p) {
  if (!power_of_four(n)) throw ParamError("setup: n must be a power of four");
  if (k < 1) throw ParamError("setup: k must be positive");
  if (p < 2 || !is_prime(p)) throw ParamError("setup: p must be a small prime");
}

std::string probe_tag(Index n) {
  std::string t(static_cast<std::size_t>(n), '0');
  for (Index i = 1; i < n; i += 2) t[static_cast<std::size_t>(i)] = '1';
  return t;
}

}  // namespace

PublicParams setup(Index n, Index k, const mpz_class& p) {
  validate_common(n, k, p);
  PublicParams pp;
  pp.profile = Profile::paper_faithful;
  pp.n = n;
  pp.k = k;
  pp.p = p;
  mpz_class bound = n * k * p;
  pp.q = next_prime(bound * bound);
  double lq = log2_mpz(pp.q);
  pp.h = static_cast<Index>(std::floor(static_cast<double>(n) / (6.0 * lq)));
  if (pp.h < 1)
    throw ParamError(
        "setup: infeasible parameters, h = floor(n / (6 log2 q)) = 0 for q >= "
        "(nkp)^2 = " +
        pp.q.get_str() + "; increase n");
  pp.v = setup_v(n, p, pp.q);
  pp.v_eff = pp.v;
  return pp;
}

PublicParams setup_toy(Index n, Index k, const mpz_class& p,
                       const mpz_class& q, Index h) {
  validate_common(n, k, p);
  if (q <= 2 || q % 2 == 0 || !is_prime(q))
    throw ParamError("setup_toy: q must be an odd prime");
  if (gcd(p, q) != 1) throw ParamError("setup_toy: gcd(p, q) must be 1");
  if (h < 1) throw ParamError("setup_toy: h must be positive");
  PublicParams pp;
  pp.profile = Profile::toy;
  pp.n = n;
  pp.k = k;
  pp.p = p;
  pp.q = q;
  pp.h = h;
  pp.v = setup_v(n, p, q);
  pp.v_eff = pp.v;
  mpz_class bound = n * k * p;
  if (q < bound * bound)
    pp.deviations.push_back("toy profile: q < (nkp)^2");
  pp.deviations.push_back(
      "toy profile: h decoupled from floor(n / (6 log2 q))");
  pp.deviations.push_back(
      "toy profile: V_eff raised from the key_gen probe measurement");
  return pp;
}

KeyPair key_gen(PublicParams& pp, RandomStream& rng) {
  KeyPair kp;
  TrapdoorPair td = trap_gen(pp.q, pp.h, pp.n, rng);
  kp.pk.A = std::move(td.A);
  kp.sk.T_A = std::move(td.T_A);
  kp.pk.h_n = hadamard(pp.n);
  IntMat alpha(pp.h, pp.k);
  for (Index j = 0; j < pp.k; ++j)
    for (Index i = 0; i < pp.h; ++i) alpha(i, j) = rng.below(pp.q);
  kp.pk.alpha = ZqMatrix(std::move(alpha), pp.q);

  if (pp.profile == Profile::toy) {
    TagContext probe = derive_tag_context(kp.pk.A, kp.pk.h_n, probe_tag(pp.n));
    LatticeBasis t_b = new_basis(kp.pk.A, probe.H_tau, kp.sk.T_A);
    double measured = to_double(pp.p) * t_b.gs_norm();
    double needed =
        1.5 * std::sqrt(std::log(static_cast<double>(pp.n))) * measured;
    if (needed > pp.v_eff) pp.v_eff = needed;
  }
  return kp;
}

LinearFunc make_linear_func(const PublicParams& pp, IntVec c) {
  if (c.size() != pp.k)
    throw ParamError("linear function must have k coefficients");
  for (Index i = 0; i < c.size(); ++i) {
    // c_i in (-p/2, p/2], i.e. -p < 2 c_i <= p.
    if (!(2 * c(i) > -pp.p && 2 * c(i) <= pp.p))
      throw ParamError("linear function coefficient " + c(i).get_str() +
                       " outside (-p/2, p/2]");
  }
  return LinearFunc{std::move(c)};
}

LinearFunc projection(const PublicParams& pp, Index i) {
  if (i < 1 || i > pp.k) throw ParamError("projection index out of range");
  IntVec c = IntVec::Zero(pp.k);
  c(i - 1) = 1;
  return LinearFunc{std::move(c)};
}

LinearFunc zero_func(const PublicParams& pp) {
  return LinearFunc{IntVec::Zero(pp.k)};
}

IntVec apply_mod_p(const LinearFunc& f, const IntMat& data,
                   const mpz_class& p) {
  if (data.cols() != f.c.size())
    throw ParamError("apply_mod_p: data set size mismatch");
  IntVec out = data * f.c;
  for (Index i = 0; i < out.size(); ++i) out(i) = mod_reduce(out(i), p);
  return out;
}

void check_message(const PublicParams& pp, const IntVec& m) {
  if (m.size() != pp.n) throw FormatError("message dimension != n");
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) < 0 || m(i) >= pp.p)
      throw FormatError("message entry outside [0, p)");
}

IntVec crt_target(const IntVec& m, const IntVec& alpha_i,
                  const ZqMatrix& b_tau, const mpz_class& p,
                  const mpz_class& q) {
  if (gcd(p, q) != 1) throw ParamError("crt_target: gcd(p, q) must be 1");
  IntVec t_q = solve_mod_q(b_tau, alpha_i);
  mpz_class qinv_p = inv_mod(mod_reduce(q, p), p);
  IntVec t(m.size());
  for (Index j = 0; j < m.size(); ++j) {
    // t_j = t_qj + q * ((m_j - t_qj) q^{-1} mod p)  in [0, pq)
    mpz_class delta = mod_reduce((m(j) - t_q(j)) * qinv_p, p);
    t(j) = t_q(j) + q * delta;
  }
  return t;
}

SignContext make_sign_context(const PublicParams& pp, const PublicKey& pk,
                              const SecretKey& sk, const std::string& tau) {
  SignContext ctx;
  ctx.tag = derive_tag_context(pk.A, pk.h_n, tau);
  LatticeBasis t_b = new_basis(pk.A, ctx.tag.H_tau, sk.T_A);
  ctx.lattice = LatticeBasis(IntMat(t_b.basis() * pp.p));
  ctx.gs_measured = ctx.lattice.gs_norm();
  ctx.quality_ok = pp.v_eff >= quality_threshold(ctx.lattice);
  return ctx;
}

IntVec sign_to_target(const PublicParams& pp, const SignContext& ctx,
                      const IntVec& m, const IntVec& target,
                      RandomStream& rng) {
  check_message(pp, m);
  IntVec t = crt_target(m, target, ctx.tag.B_tau, pp.p, pp.q);
  Sample s = sample_pre(ctx.lattice, t, pp.v_eff, rng, Quality::allow_degraded);
  // The coset congruences are exact; re-check them.
  for (Index j = 0; j < s.value.size(); ++j)
    if (mod_reduce(s.value(j), pp.p) != m(j))
      throw ContractError("sign: sigma != m (mod p)");
  IntVec bs = mul_mod(ctx.tag.B_tau, s.value);
  for (Index j = 0; j < bs.size(); ++j)
    if (bs(j) != mod_reduce(target(j), pp.q))
      throw ContractError("sign: B_tau sigma != target (mod q)");
  return std::move(s.value);
}

Signature sign_with_context(const PublicParams& pp, const PublicKey& pk,
                            const SignContext& ctx, const IntVec& m, Index i,
                            RandomStream& rng) {
  if (i < 1 || i > pp.k) throw ParamError("sign: index out of range");
  IntVec alpha_i = pk.alpha.entries().col(i - 1);
  Signature sig;
  sig.sigma = sign_to_target(pp, ctx, m, alpha_i, rng);
  sig.prov = Signature::Provenance::fresh;
  sig.index = i;
  return sig;
}

Signature sign(const PublicParams& pp, const PublicKey& pk,
               const SecretKey& sk, const std::string& tau, const IntVec& m,
               Index i, RandomStream& rng) {
  SignContext ctx = make_sign_context(pp, pk, sk, tau);
  return sign_with_context(pp, pk, ctx, m, i, rng);
}

VerifyResult verify(const PublicParams& pp, const PublicKey& pk,
                    const std::string& tau, const IntVec& m,
                    const Signature& sig, const LinearFunc& f) {
  if (static_cast<Index>(tau.size()) != pp.n)
    throw FormatError("verify: tag length != n");
  if (m.size() != pp.n) throw FormatError("verify: message dimension != n");
  if (sig.sigma.size() != pp.n)
    throw FormatError("verify: signature dimension != n");
  if (f.c.size() != pp.k)
    throw FormatError("verify: function arity != k");

  TagContext ctx = derive_matrix(pk, tau);

  // (1) ||sigma|| <= k (p/2) V_eff sqrt(n)
  double bound = static_cast<double>(pp.k) * to_double(pp.p) / 2.0 *
                 pp.v_eff * std::sqrt(static_cast<double>(pp.n));
  if (std::sqrt(to_double(norm_sq(sig.sigma))) > bound)
    return {false, 1, "norm bound exceeded"};

  // (2) sigma = m (mod p)
  for (Index j = 0; j < pp.n; ++j)
    if (mod_reduce(sig.sigma(j), pp.p) != m(j))
      return {false, 2, "sigma != m (mod p)"};

  // (3) B_tau sigma = sum c_i alpha_i (mod q)
  IntVec lhs_v = mul_mod(ctx.B_tau, sig.sigma);
  IntVec target = pk.alpha.entries() * f.c;
  for (Index j = 0; j < pp.h; ++j)
    if (lhs_v(j) != mod_reduce(target(j), pp.q))
      return {false, 3, "B_tau sigma != f(alpha) (mod q)"};

  return {true, 0, ""};
}

Signature evaluate(const PublicParams& pp, const PublicKey& pk,
                   const std::string& tau, const LinearFunc& f,
                   const std::vector<Signature>& sigs) {
  (void)pk;
  (void)tau;
  if (static_cast<Index>(sigs.size()) != pp.k)
    throw ParamError("evaluate: need exactly k signatures");
  IntVec acc = IntVec::Zero(pp.n);
  for (Index i = 0; i < pp.k; ++i) {
    if (sigs[static_cast<std::size_t>(i)].sigma.size() != pp.n)
      throw FormatError("evaluate: signature dimension != n");
    acc += (f.c(i) * sigs[static_cast<std::size_t>(i)].sigma.array()).matrix();
  }
  Signature out;
  out.sigma = std::move(acc);
  out.prov = Signature::Provenance::evaluated;
  out.func = f.c;
  return out;
}

TagContext derive_matrix(const PublicKey& pk, const std::string& tau) {
  return derive_tag_context(pk.A, pk.h_n, tau);
}

// --- serialization ---

void write_params(std::ostream& os, const PublicParams& pp) {
  os << "LHS1 params 0 0\n";
  os << "profile="
     << (pp.profile == Profile::toy ? "toy" : "paper-faithful") << '\n';
  os << "n=" << pp.n << '\n';
  os << "k=" << pp.k << '\n';
  os << "p=" << pp.p.get_str() << '\n';
  os << "q=" << pp.q.get_str() << '\n';
  os << "h=" << pp.h << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", pp.v);
  os << "v=" << buf << '\n';
  std::snprintf(buf, sizeof buf, "%a", pp.v_eff);
  os << "v_eff=" << buf << '\n';
}

PublicParams read_params(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("LHS1 params", 0) != 0)
    throw FormatError("params: missing 'LHS1 params' header");
  PublicParams pp;
  bool have_n = false, have_q = false;
  while (std::getline(is, line)) {
    if (line.empty()) break;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw FormatError("params: malformed line '" + line + "'");
    std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "profile") {
      if (val == "toy")
        pp.profile = Profile::toy;
      else if (val == "paper-faithful")
        pp.profile = Profile::paper_faithful;
      else
        throw FormatError("params: unknown profile '" + val + "'");
    } else if (key == "n") {
      pp.n = std::stoll(val);
      have_n = true;
    } else if (key == "k") {
      pp.k = std::stoll(val);
    } else if (key == "p") {
      pp.p = mpz_class(val);
    } else if (key == "q") {
      pp.q = mpz_class(val);
      have_q = true;
    } else if (key == "h") {
      pp.h = std::stoll(val);
    } else if (key == "v") {
      pp.v = std::strtod(val.c_str(), nullptr);
    } else if (key == "v_eff") {
      pp.v_eff = std::strtod(val.c_str(), nullptr);
    } else {
      throw FormatError("params: unknown key '" + key + "'");
    }
  }
  if (!have_n || !have_q) throw FormatError("params: incomplete file");
  if (pp.profile == Profile::toy) {
    PublicParams fresh = setup_toy(pp.n, pp.k, pp.p, pp.q, pp.h);
    fresh.v = pp.v;
    fresh.v_eff = pp.v_eff;
    return fresh;
  }
  return pp;
}

void write_public_key(std::ostream& os, const PublicKey& pk) {
  write_matrix(os, pk.A);
  write_matrix(os, pk.h_n, "int");
  write_matrix(os, pk.alpha);
}

PublicKey read_public_key(std::istream& is) {
  PublicKey pk;
  pk.A = read_zq_matrix(is);
  pk.h_n = read_int_matrix(is);
  pk.alpha = read_zq_matrix(is);
  return pk;
}

void write_secret_key(std::ostream& os, const SecretKey& sk) {
  write_matrix(os, sk.T_A.basis(), "int");
}

SecretKey read_secret_key(std::istream& is) {
  return SecretKey{LatticeBasis(read_int_matrix(is))};
}

void write_signature(std::ostream& os, const Signature& sig,
                     const std::string& tau) {
  os << "LHS1 sig " << sig.sigma.size() << " 1\n";
  os << "tag " << tau << '\n';
  if (sig.prov == Signature::Provenance::fresh) {
    os << "provenance fresh " << sig.index << '\n';
  } else {
    os << "provenance evaluated";
    for (Index i = 0; i < sig.func.size(); ++i)
      os << ' ' << sig.func(i).get_str();
    os << '\n';
  }
  for (Index i = 0; i < sig.sigma.size(); ++i)
    os << sig.sigma(i).get_str() << '\n';
}

SignatureFile read_signature(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("sig: empty file");
  std::istringstream hs(line);
  std::string magic, kind;
  long long n = -1, one = -1;
  hs >> magic >> kind >> n >> one;
  if (magic != "LHS1" || kind != "sig" || n < 0 || one != 1)
    throw FormatError("sig: malformed header '" + line + "'");
  SignatureFile sf;
  if (!std::getline(is, line) || line.rfind("tag ", 0) != 0)
    throw FormatError("sig: missing tag line");
  sf.tau = line.substr(4);
  if (!std::getline(is, line) || line.rfind("provenance ", 0) != 0)
    throw FormatError("sig: missing provenance line");
  {
    std::istringstream ps(line.substr(11));
    std::string kindp;
    ps >> kindp;
    if (kindp == "fresh") {
      sf.sig.prov = Signature::Provenance::fresh;
      ps >> sf.sig.index;
      if (!ps) throw FormatError("sig: fresh provenance missing index");
    } else if (kindp == "evaluated") {
      sf.sig.prov = Signature::Provenance::evaluated;
      std::vector<mpz_class> cs;
      std::string tok;
      while (ps >> tok) cs.emplace_back(tok);
      sf.sig.func.resize(static_cast<Index>(cs.size()));
      for (std::size_t i = 0; i < cs.size(); ++i)
        sf.sig.func(static_cast<Index>(i)) = cs[i];
    } else {
      throw FormatError("sig: unknown provenance '" + kindp + "'");
    }
  }
  sf.sig.sigma.resize(n);
  for (long long i = 0; i < n; ++i) {
    std::string tok;
    if (!(is >> tok)) throw FormatError("sig: ran out of entries");
    sf.sig.sigma(i) = mpz_class(tok);
  }
  return sf;
}

}  // namespace lhs
