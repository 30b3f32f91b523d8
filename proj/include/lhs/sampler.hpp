#pragma once

// Discrete Gaussian sampling: scalar rejection sampler, product sampler
// over Z^n, and randomized nearest-plane over arbitrary full-rank integer
// lattices and their cosets.

#include "lhs/linalg.hpp"
#include "lhs/rng.hpp"

namespace lhs {

struct GaussParam {
  double s = 1.0;   // Gaussian parameter
  RatVec center;    // target center c
};

// D_{Z,s,c} by rejection against rho_{s,c}; the support is cut at
// |x - c| <= 12 s (mass beyond is < 2^-200).
long long sample_z(double s, double c, RandomStream& rng);

// n independent draws of D_{Z,s} (centered at zero).
IntVec sample_dom(Index n, double s, RandomStream& rng);

enum class Quality {
  enforce,         // reject s below the quality threshold
  allow_degraded,  // sample anyway, annotate the output
};

struct Sample {
  IntVec value;
  bool degraded = false;  // s was below the quality threshold
};

// Statistical quality threshold for sampling against this basis:
// 1.5 * sqrt(ln n) * ||B~||.
double quality_threshold(const LatticeBasis& basis);

// Randomized nearest-plane sampler for D_{L(basis), s, c}.
Sample sample_gaussian(const LatticeBasis& basis, double s, const RatVec& c,
                       RandomStream& rng, Quality quality = Quality::enforce);
Sample sample_gaussian(const LatticeBasis& basis, const GaussParam& g,
                       RandomStream& rng, Quality quality = Quality::enforce);

// Coset sampler: returns t + y with y <- D_{L(basis), s, -t}, so the
// output is congruent to t modulo the lattice, exactly.
Sample sample_pre(const LatticeBasis& basis, const IntVec& t, double s,
                  RandomStream& rng, Quality quality = Quality::enforce);

}  // namespace lhs
