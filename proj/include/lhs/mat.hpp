#pragma once

// Dense exact-arithmetic matrix types: Eigen storage over GMP scalars.
// Columns are the vectors throughout; a basis is a square column matrix.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace lhs {

using Index = Eigen::Index;

using IntMat = Eigen::Matrix<mpz_class, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<mpz_class, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<mpq_class, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<mpq_class, Eigen::Dynamic, 1>;

inline RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) r(i, j) = mpq_class(m(i, j));
  return r;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r(i) = mpq_class(v(i));
  return r;
}

// Exact squared l2 norm of one column.
inline mpz_class norm_sq(const IntVec& v) {
  mpz_class s = 0;
  for (Index i = 0; i < v.size(); ++i) s += v(i) * v(i);
  return s;
}

inline mpq_class norm_sq(const RatVec& v) {
  mpq_class s = 0;
  for (Index i = 0; i < v.size(); ++i) s += v(i) * v(i);
  return s;
}

inline mpq_class dot(const RatVec& a, const RatVec& b) {
  mpq_class s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline double to_double(const mpq_class& q) { return q.get_d(); }
inline double to_double(const mpz_class& z) { return z.get_d(); }

// Nearest integer to a rational; ties round up. Deterministic.
inline mpz_class round_nearest(const mpq_class& q) {
  mpz_class num = q.get_num(), den = q.get_den();  // den > 0, canonical
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), mpz_class(2 * num + den).get_mpz_t(),
             mpz_class(2 * den).get_mpz_t());
  return r;
}

inline std::string to_string(const mpz_class& z) { return z.get_str(); }
inline std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace lhs
