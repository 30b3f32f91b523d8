#pragma once

// Chi-square and Kolmogorov-Smirnov machinery used by the sampler tests
// and the game-harness probes. Repo-wide significance thresholds live
// here so every surrogate for "statistically close" uses the same bar.

#include <cstddef>
#include <vector>

namespace lhs {

inline constexpr double kChiSquareAlpha = 0.001;
inline constexpr double kKsAlpha = 0.01;

// Regularized upper incomplete gamma Q(a, x).
double gammq(double a, double x);

// P[X >= stat] for X ~ chi-square with df degrees of freedom.
double chi_square_pvalue(double stat, double df);

// Goodness-of-fit p-value of observed counts against expected counts.
// Cells with expected mass below min_expected are pooled into their
// neighbor so the chi-square approximation stays sound.
double chi_square_gof(const std::vector<double>& expected,
                      const std::vector<long long>& observed,
                      double min_expected = 5.0);

// Fisher's method: combine independent p-values into one.
double fisher_combine(const std::vector<double>& pvalues);

// Asymptotic Kolmogorov distribution tail Q_KS(lambda).
double kolmogorov_q(double lambda);

// Two-sample two-sided KS test p-value (asymptotic).
double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b);

}  // namespace lhs
