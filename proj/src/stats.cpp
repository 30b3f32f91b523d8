#include "lhs/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lhs {

namespace {

// Series expansion of P(a, x), valid for x < a + 1.
double gser(double a, double x) {
  double ap = a, sum = 1.0 / a, del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), valid for x >= a + 1 (modified Lentz).
double gcf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gammq(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gammq domain");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gser(a, x);
  return gcf(a, x);
}

double chi_square_pvalue(double stat, double df) {
  if (stat <= 0) return 1.0;
  return gammq(df / 2.0, stat / 2.0);
}

double chi_square_gof(const std::vector<double>& expected,
                      const std::vector<long long>& observed,
                      double min_expected) {
  if (expected.size() != observed.size() || expected.empty())
    throw std::invalid_argument("chi_square_gof: size mismatch");
  // Pool under-populated cells left to right.
  std::vector<double> e;
  std::vector<double> o;
  double pe = 0.0, po = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    pe += expected[i];
    po += static_cast<double>(observed[i]);
    if (pe >= min_expected) {
      e.push_back(pe);
      o.push_back(po);
      pe = po = 0.0;
    }
  }
  if (pe > 0.0 || po > 0.0) {
    if (e.empty()) {
      e.push_back(pe);
      o.push_back(po);
    } else {
      e.back() += pe;
      o.back() += po;
    }
  }
  if (e.size() < 2) return 1.0;
  double stat = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    double d = o[i] - e[i];
    stat += d * d / e[i];
  }
  return chi_square_pvalue(stat, static_cast<double>(e.size() - 1));
}

double fisher_combine(const std::vector<double>& pvalues) {
  if (pvalues.empty()) return 1.0;
  double stat = 0.0;
  for (double p : pvalues) stat += -2.0 * std::log(std::max(p, 1e-300));
  return chi_square_pvalue(stat, 2.0 * static_cast<double>(pvalues.size()));
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0) return 1.0;
  double sum = 0.0, sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0, fa = 0.0, fb = 0.0;
  while (i < a.size() && j < b.size()) {
    double va = a[i], vb = b[j];
    if (va <= vb) fa = ++i / na;
    if (vb <= va) fb = ++j / nb;
    d = std::max(d, std::fabs(fa - fb));
  }
  double ne = std::sqrt(na * nb / (na + nb));
  return kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
}

}  // namespace lhs
