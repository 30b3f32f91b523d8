#include "lhs/sampler.hpp"

#include <cmath>

namespace lhs {

namespace {
constexpr double kTailCut = 12.0;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

long long sample_z(double s, double c, RandomStream& rng) {
  if (!(s > 1.0 / 24.0))
    throw ParamError("sample_z: parameter s too small for an integer window");
  const double lo_r = c - kTailCut * s, hi_r = c + kTailCut * s;
  const long long lo = static_cast<long long>(std::ceil(lo_r));
  const long long hi = static_cast<long long>(std::floor(hi_r));
  const auto width = static_cast<std::uint64_t>(hi - lo + 1);
  for (;;) {
    long long x = lo + static_cast<long long>(rng.below(width));
    double d = (static_cast<double>(x) - c) / s;
    if (rng.unit_double() < std::exp(-kPi * d * d)) return x;
  }
}

IntVec sample_dom(Index n, double s, RandomStream& rng) {
  IntVec v(n);
  for (Index i = 0; i < n; ++i) v(i) = mpz_class(static_cast<long>(sample_z(s, 0.0, rng)));
  return v;
}

double quality_threshold(const LatticeBasis& basis) {
  return 1.5 * std::sqrt(std::log(static_cast<double>(basis.dim()))) *
         basis.gs_norm();
}

Sample sample_gaussian(const LatticeBasis& basis, double s, const RatVec& c,
                       RandomStream& rng, Quality quality) {
  const Index n = basis.dim();
  if (c.size() != n) throw ParamError("sample_gaussian: center dimension");
  if (!(s > 0)) throw ParamError("sample_gaussian: s must be positive");
  const double threshold = quality_threshold(basis);
  const bool degraded = s < threshold;
  if (degraded && quality == Quality::enforce)
    throw ParamError("sample_gaussian: s below quality threshold " +
                     std::to_string(threshold) + " (pass allow_degraded to override)");

  const RatMat& g = basis.gso();
  std::vector<mpq_class> self(n);
  for (Index i = 0; i < n; ++i) self[i] = norm_sq(RatVec(g.col(i)));

  RatVec rem = c;
  IntVec v = IntVec::Zero(n);
  for (Index i = n - 1; i >= 0; --i) {
    mpq_class a = dot(rem, RatVec(g.col(i))) / self[i];
    double level_s = s / std::sqrt(to_double(self[i]));
    long long z = sample_z(level_s, to_double(a), rng);
    if (z != 0) {
      mpz_class zz(static_cast<long>(z));
      for (Index r = 0; r < n; ++r) {
        rem(r) -= zz * basis.basis()(r, i);
        v(r) += zz * basis.basis()(r, i);
      }
    }
  }
  return {std::move(v), degraded};
}

Sample sample_gaussian(const LatticeBasis& basis, const GaussParam& g,
                       RandomStream& rng, Quality quality) {
  return sample_gaussian(basis, g.s, g.center, rng, quality);
}

Sample sample_pre(const LatticeBasis& basis, const IntVec& t, double s,
                  RandomStream& rng, Quality quality) {
  if (t.size() != basis.dim()) throw ParamError("sample_pre: target dimension");
  RatVec c(t.size());
  for (Index i = 0; i < t.size(); ++i) c(i) = mpq_class(-t(i));
  Sample y = sample_gaussian(basis, s, c, rng, quality);
  y.value += t;
  return y;
}

}  // namespace lhs
