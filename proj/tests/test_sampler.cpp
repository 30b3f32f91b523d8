#include <doctest.h>

#include <cmath>
#include <map>

#include "lhs/sampler.hpp"
#include "lhs/stats.hpp"

using namespace lhs;

TEST_CASE("RandomStream determinism and unbiased range") {
  RandomStream a("deadbeef"), b("deadbeef");
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  RandomStream c("deadbeef", 50);
  RandomStream d("deadbeef");
  for (int i = 0; i < 50; ++i) d.next_u64();
  CHECK(c.next_u64() == d.next_u64());
  CHECK_THROWS_AS(RandomStream("xyz"), ParamError);
}

TEST_CASE("sample_z moments, tail cut, determinism") {
  RandomStream rng("01");
  const double s = 4.0;
  const int trials = 100000;
  double sum = 0;
  long long max_abs = 0;
  std::map<long long, long long> hist;
  for (int i = 0; i < trials; ++i) {
    long long x = sample_z(s, 0.0, rng);
    sum += static_cast<double>(x);
    max_abs = std::max(max_abs, std::abs(x));
    ++hist[x];
  }
  CHECK(std::fabs(sum / trials) < 0.1);
  CHECK(max_abs <= 48);  // 12 s

  SUBCASE("chi-square against the normalized rho mass") {
    std::vector<double> expected;
    std::vector<long long> observed;
    double total = 0;
    for (long long x = -48; x <= 48; ++x)
      total += std::exp(-M_PI * x * x / (s * s));
    for (long long x = -48; x <= 48; ++x) {
      expected.push_back(trials * std::exp(-M_PI * x * x / (s * s)) / total);
      auto it = hist.find(x);
      observed.push_back(it == hist.end() ? 0 : it->second);
    }
    double p = chi_square_gof(expected, observed);
    CHECK(p > kChiSquareAlpha);
  }

  SUBCASE("same seed, same sequence") {
    RandomStream r1("aa55"), r2("aa55");
    for (int i = 0; i < 200; ++i)
      CHECK(sample_z(s, 0.25, r1) == sample_z(s, 0.25, r2));
  }
}

TEST_CASE("sample_dom tail bound and collision rate") {
  RandomStream rng("02");
  const Index n = 16;
  const double s = 4.0;  // sqrt(n)
  int within = 0;
  const int trials = 10000;
  IntVec target0 = IntVec::Zero(n);
  IntVec target1 = IntVec::Zero(n);
  target1(0) = 1;
  int hit0 = 0, hit1 = 0;
  for (int i = 0; i < trials; ++i) {
    IntVec x = sample_dom(n, s, rng);
    if (to_double(norm_sq(x)) <= s * s * n) ++within;
    if (x == target0) ++hit0;
    if (x == target1) ++hit1;
  }
  CHECK(within >= trials * 99 / 100);
  CHECK(hit0 <= trials / 100);
  CHECK(hit1 <= trials / 100);
}

TEST_CASE("sample_dom with n=1 matches sample_z draws") {
  RandomStream r1("0303"), r2("0303");
  for (int i = 0; i < 100; ++i) {
    IntVec v = sample_dom(1, 3.0, r1);
    CHECK(v(0) == mpz_class(static_cast<long>(sample_z(3.0, 0.0, r2))));
  }
}

TEST_CASE("sample_gaussian membership and identity-basis marginals") {
  RandomStream rng("04");

  SUBCASE("2Z lattice: outputs stay even") {
    IntMat b(1, 1);
    b << 2;
    LatticeBasis lat(b);
    RatVec c(1);
    c(0) = 0;
    for (int i = 0; i < 200; ++i) {
      Sample s = sample_gaussian(lat, 10.0, c, rng);
      CHECK(s.value(0) % 2 == 0);
      CHECK(!s.degraded);
    }
  }

  SUBCASE("identity basis agrees with sample_dom distribution") {
    const Index n = 4;
    LatticeBasis lat(IntMat(IntMat::Identity(n, n)));
    RatVec c = RatVec::Zero(n);
    const int trials = 4000;
    // Pool coordinates from both samplers; two-sample chi-square.
    std::map<long, long long> ha, hb;
    for (int i = 0; i < trials; ++i) {
      Sample s = sample_gaussian(lat, 4.0, c, rng);
      for (Index j = 0; j < n; ++j) ++ha[static_cast<long>(s.value(j).get_si())];
      IntVec d = sample_dom(n, 4.0, rng);
      for (Index j = 0; j < n; ++j) ++hb[static_cast<long>(d(j).get_si())];
    }
    double stat = 0;
    int cells = 0;
    long long pa = 0, pb = 0;
    for (long v = -48; v <= 48; ++v) {
      pa += ha.count(v) ? ha[v] : 0;
      pb += hb.count(v) ? hb[v] : 0;
      if (pa + pb < 10) continue;  // pool sparse cells
      double d2 = static_cast<double>(pa - pb);
      stat += d2 * d2 / static_cast<double>(pa + pb);
      pa = pb = 0;
      ++cells;
    }
    if (pa + pb > 0) {
      double d2 = static_cast<double>(pa - pb);
      stat += d2 * d2 / static_cast<double>(pa + pb);
      ++cells;
    }
    CHECK(chi_square_pvalue(stat, cells - 1) > kChiSquareAlpha);
  }

  SUBCASE("random 8-dim basis: tail bound at the sampled center") {
    RandomStream rng2("05");
    IntMat b(8, 8);
    for (Index j = 0; j < 8; ++j)
      for (Index i = 0; i < 8; ++i)
        b(i, j) = mpz_class(static_cast<long>(rng2.below(9)) - 4);
    b += IntMat::Identity(8, 8) * 5;  // keep it comfortably full rank
    LatticeBasis lat(std::move(b));
    double s = std::max(60.0, quality_threshold(lat));
    RatVec c(8);
    for (Index i = 0; i < 8; ++i) c(i) = mpq_class(static_cast<long>(rng2.below(21)) - 10);
    int ok = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
      Sample smp = sample_gaussian(lat, s, c, rng2);
      RatVec diff(8);
      for (Index i = 0; i < 8; ++i) diff(i) = mpq_class(smp.value(i)) - c(i);
      CHECK(lat.contains(smp.value));
      if (to_double(norm_sq(diff)) <= s * s * 8) ++ok;
    }
    CHECK(ok >= trials * 99 / 100);
  }
}

TEST_CASE("sample_pre coset congruences") {
  RandomStream rng("06");

  SUBCASE("2Z with odd target stays odd") {
    IntMat b(1, 1);
    b << 2;
    LatticeBasis lat(b);
    IntVec t(1);
    t << 1;
    for (int i = 0; i < 100; ++i) {
      Sample s = sample_pre(lat, t, 10.0, rng);
      CHECK(s.value(0) % 2 != 0);
    }
  }

  SUBCASE("lattice targets stay in the lattice") {
    IntMat b(2, 2);
    b << 3, 1, 0, 4;
    LatticeBasis lat(std::move(b));
    IntVec t(2);
    t << 3, 4;  // in the lattice
    double s = std::max(40.0, quality_threshold(lat));
    for (int i = 0; i < 100; ++i) {
      Sample smp = sample_pre(lat, t, s, rng);
      CHECK(lat.contains(smp.value));
    }
  }

  SUBCASE("coset preservation: basis-solve of sigma - t is integral") {
    RandomStream rng2("07");
    IntMat b(4, 4);
    for (Index j = 0; j < 4; ++j)
      for (Index i = 0; i < 4; ++i)
        b(i, j) = mpz_class(static_cast<long>(rng2.below(7)) - 3);
    b += IntMat::Identity(4, 4) * 4;
    LatticeBasis lat(std::move(b));
    double s = std::max(50.0, quality_threshold(lat));
    for (int trial = 0; trial < 100; ++trial) {
      IntVec t(4);
      for (Index i = 0; i < 4; ++i)
        t(i) = mpz_class(static_cast<long>(rng2.below(41)) - 20);
      Sample smp = sample_pre(lat, t, s, rng2);
      CHECK(lat.contains(IntVec(smp.value - t)));
    }
  }
}

TEST_CASE("quality threshold enforcement and override") {
  IntMat b(2, 2);
  b << 40, 0, 0, 40;
  LatticeBasis lat(std::move(b));
  RatVec c = RatVec::Zero(2);
  RandomStream rng("08");
  // threshold = 1.5 sqrt(ln 2) * 40 = 49.9...; s = 5 is far below.
  CHECK_THROWS_AS(sample_gaussian(lat, 5.0, c, rng), ParamError);
  Sample s = sample_gaussian(lat, 5.0, c, rng, Quality::allow_degraded);
  CHECK(s.degraded);
  CHECK(s.value(0) % 40 == 0);
}
