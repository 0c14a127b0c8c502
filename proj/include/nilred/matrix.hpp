#pragma once

#include <Eigen/Core>

#include "nilred/polynomial.hpp"

// Exact scalars plugged into Eigen's dense Matrix. Only coefficient-wise
// structure is used from Eigen; every elimination-style algorithm is an exact
// free function in linalg.hpp (no epsilon thresholds, no floating point).
namespace Eigen {

template <>
struct NumTraits<nilred::Rational> : GenericNumTraits<nilred::Rational> {
  using Real = nilred::Rational;
  using NonInteger = nilred::Rational;
  using Nested = nilred::Rational;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<nilred::Fp> : GenericNumTraits<nilred::Fp> {
  using Real = nilred::Fp;
  using NonInteger = nilred::Fp;
  using Nested = nilred::Fp;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <class K>
struct NumTraits<nilred::Polynomial<K>> : GenericNumTraits<nilred::Polynomial<K>> {
  using Real = nilred::Polynomial<K>;
  using NonInteger = nilred::Polynomial<K>;
  using Nested = nilred::Polynomial<K>;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 128,
    MulCost = 256
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nilred {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class K>
using PolyMat = Mat<Polynomial<K>>;

template <class S>
bool mats_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class S>
bool mat_is_zero(const Mat<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

/// n x n identity over a field, with materialized entries.
template <class K>
Mat<K> identity_mat(int n, const FieldSpec& spec) {
  Mat<K> m = Mat<K>::Constant(n, n, field_from_int<K>(0, spec));
  for (int i = 0; i < n; ++i) m(i, i) = field_from_int<K>(1, spec);
  return m;
}

template <class K>
Mat<K> zero_mat(int r, int c, const FieldSpec& spec) {
  return Mat<K>::Constant(r, c, field_from_int<K>(0, spec));
}

template <class K>
PolyMat<K> identity_poly_mat(int n, const RingPtr& ring) {
  PolyMat<K> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = i == j ? Polynomial<K>::one(ring) : Polynomial<K>::zero(ring);
  return m;
}

/// Matrix whose (i,j) entry is the ring variable <prefix>_<i+1>_<j+1>.
template <class K>
PolyMat<K> generic_matrix(const RingPtr& ring, const std::string& prefix, int rows, int cols) {
  PolyMat<K> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Polynomial<K>::variable(
          ring, prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return m;
}

/// Lifts a field matrix into a polynomial ring (entries become constants).
template <class K>
PolyMat<K> lift_to_poly(const Mat<K>& a, const RingPtr& ring) {
  PolyMat<K> m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m(i, j) = Polynomial<K>::constant(ring, a(i, j));
  return m;
}

/// Entry-wise evaluation of a constant polynomial matrix back to the field.
template <class K>
Mat<K> constant_part(const PolyMat<K>& a) {
  Mat<K> m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j).constant_value();
  return m;
}

template <class K>
Mat<K> mat_pow(Mat<K> a, unsigned e, const FieldSpec& spec) {
  Mat<K> acc = identity_mat<K>(static_cast<int>(a.rows()), spec);
  while (e) {
    if (e & 1) acc = acc * a;
    if (e >>= 1) a = a * a;
  }
  return acc;
}

}  // namespace nilred
