#pragma once

#include <stdexcept>
#include <vector>

#include "nilred/matrix.hpp"

namespace nilred {

/// Row echelon form over a field, in place. Pivoting picks the first nonzero
/// entry (exact arithmetic needs no magnitude pivoting). Returns pivot columns.
template <class K>
std::vector<int> row_echelon(Mat<K>& m) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    K inv = K(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
int rank_of(Mat<K> m) {
  return static_cast<int>(row_echelon(m).size());
}

/// Basis of the right kernel, one column per basis vector.
template <class K>
Mat<K> kernel_basis(Mat<K> m, const FieldSpec& spec) {
  int cols = static_cast<int>(m.cols());
  std::vector<int> pivots = row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_count = cols - static_cast<int>(pivots.size());
  Mat<K> basis = zero_mat<K>(cols, free_count, spec);
  int bc = 0;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    basis(fc, bc) = field_from_int<K>(1, spec);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      basis(pivots[pi], bc) = -m(static_cast<int>(pi), fc);
    ++bc;
  }
  return basis;
}

/// Solves a X = b; throws if inconsistent or underdetermined columns are hit.
/// a is r x c with rank c expected (unique solution).
template <class K>
Mat<K> solve_unique(const Mat<K>& a, const Mat<K>& b, const FieldSpec& spec) {
  int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  Mat<K> aug(rows, cols + b.cols());
  aug << a, b;
  std::vector<int> pivots = row_echelon(aug);
  for (int p : pivots)
    if (p >= cols) throw std::domain_error("solve_unique: inconsistent system");
  if (static_cast<int>(pivots.size()) != cols)
    throw std::domain_error("solve_unique: solution not unique");
  Mat<K> x = zero_mat<K>(cols, static_cast<int>(b.cols()), spec);
  for (int pi = 0; pi < cols; ++pi)
    for (int j = 0; j < b.cols(); ++j) x(pivots[pi], j) = aug(pi, cols + j);
  return x;
}

template <class K>
Mat<K> inverse_mat(const Mat<K>& a, const FieldSpec& spec) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse_mat: non-square");
  return solve_unique(a, identity_mat<K>(static_cast<int>(a.rows()), spec), spec);
}

template <class K>
K det_field(Mat<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_field: non-square");
  int n = static_cast<int>(m.rows());
  K det(1);
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return K(0);
    if (pr != c) {
      m.row(pr).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    K inv = K(1) / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      K f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Determinant over a polynomial ring by fraction-free (Bareiss) elimination;
/// all divisions are exact in the ring.
template <class K>
Polynomial<K> bareiss_det(PolyMat<K> m, const RingPtr& ring) {
  if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: non-square");
  int n = static_cast<int>(m.rows());
  if (n == 0) return Polynomial<K>::one(ring);
  Polynomial<K> prev = Polynomial<K>::one(ring);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int pr = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) return Polynomial<K>::zero(ring);
      m.row(pr).swap(m.row(k));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial<K> num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = Polynomial<K>::exact_div(num, prev);
      }
      m(i, k) = Polynomial<K>::zero(ring);
    }
    prev = m(k, k);
  }
  Polynomial<K> d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

/// Minor on the given row/column index lists (0-based).
template <class K>
Polynomial<K> minor_det(const PolyMat<K>& m, const std::vector<int>& rows,
                        const std::vector<int>& cols, const RingPtr& ring) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor_det: rectangular minor");
  int k = static_cast<int>(rows.size());
  PolyMat<K> sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
  return bareiss_det(sub, ring);
}

/// det(lambda*I - M) for a polynomial matrix; lam_var indexes the ring variable
/// playing lambda. Monic of degree n in lambda.
template <class K>
Polynomial<K> char_poly(const PolyMat<K>& m, const RingPtr& ring, size_t lam_var) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square");
  int n = static_cast<int>(m.rows());
  Polynomial<K> lam = Polynomial<K>::variable(ring, lam_var);
  PolyMat<K> a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = (i == j ? lam : Polynomial<K>::zero(ring)) - m(i, j);
  return bareiss_det(std::move(a), ring);
}

/// char poly of a field matrix, returned in the given univariate ring.
template <class K>
Polynomial<K> char_poly_field(const Mat<K>& m, const RingPtr& lam_ring, size_t lam_var = 0) {
  return char_poly(lift_to_poly(m, lam_ring), lam_ring, lam_var);
}

/// True iff det(lambda*I - M) == lambda^n, i.e. the matrix is nilpotent with
/// full Jordan-theoretic degree n char poly.
template <class K>
bool has_nilpotent_char_poly(const Mat<K>& m, const FieldSpec& spec) {
  RingPtr r = make_ring({"lam"}, spec);
  Polynomial<K> cp = char_poly_field(m, r);
  Polynomial<K> lam_n = Polynomial<K>::variable(r, size_t{0}).pow(static_cast<unsigned>(m.rows()));
  return cp == lam_n;
}

}  // namespace nilred
