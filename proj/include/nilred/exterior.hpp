#pragma once

#include <set>
#include <string>
#include <vector>

#include "nilred/linalg.hpp"

namespace nilred {

/// Sorted index set J in {1..N}; the label of the wedge basis vector e_J and
/// of the Pluecker variable p_J.
using IndexSet = std::vector<int>;

/// All n-subsets of {1..N} in lexicographic order; this ranking fixes the
/// wedge basis and the Pluecker variable order.
inline std::vector<IndexSet> index_subsets(int N, int n) {
  if (n < 0 || n > N) throw std::invalid_argument("index_subsets: need 0 <= n <= N");
  std::vector<IndexSet> out;
  IndexSet cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    int need = n - static_cast<int>(cur.size());
    for (int v = next; v + need - 1 <= N; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// "p_135" for N <= 9, "p_1_3_5" with separators beyond.
inline std::string plucker_var_name(const IndexSet& J, int N) {
  std::string s = "p_";
  for (size_t i = 0; i < J.size(); ++i) {
    if (N > 9 && i) s += "_";
    s += std::to_string(J[i]);
  }
  return s;
}

inline RingPtr plucker_ring(int N, int n, const FieldSpec& field) {
  std::vector<std::string> vars;
  for (auto& J : index_subsets(N, n)) vars.push_back(plucker_var_name(J, N));
  return make_ring(std::move(vars), field);
}

/// Sign of the permutation sorting the list, or 0 on a repeated index.
/// sorted receives the ascending index set.
inline int sort_sign(IndexSet list, IndexSet& sorted) {
  int sign = 1;
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j) {
      if (list[i] == list[j]) return 0;
      if (list[i] > list[j]) {
        std::swap(list[i], list[j]);
        sign = -sign;
      }
    }
  sorted = std::move(list);
  return sign;
}

/// Matrix of the n-th wedge power in the e_J basis: entry (J,K) is the minor
/// of M on rows J, columns K (the n-th compound matrix).
template <class K>
PolyMat<K> wedge_matrix(const PolyMat<K>& m, int n, const RingPtr& ring) {
  int N = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw std::invalid_argument("wedge_matrix: non-square");
  if (n < 1 || n > N) throw std::invalid_argument("wedge_matrix: wedge degree out of range");
  auto subsets = index_subsets(N, n);
  int D = static_cast<int>(subsets.size());
  PolyMat<K> w(D, D);
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      std::vector<int> rows, cols;
      for (int v : subsets[a]) rows.push_back(v - 1);
      for (int v : subsets[b]) cols.push_back(v - 1);
      w(a, b) = minor_det(m, rows, cols, ring);
    }
  return w;
}

/// Wedge power of a field matrix (minors over the field).
template <class K>
Mat<K> wedge_matrix_field(const Mat<K>& m, int n, const FieldSpec& spec) {
  int N = static_cast<int>(m.rows());
  if (m.rows() != m.cols()) throw std::invalid_argument("wedge_matrix_field: non-square");
  if (n < 1 || n > N) throw std::invalid_argument("wedge_matrix_field: wedge degree out of range");
  auto subsets = index_subsets(N, n);
  int D = static_cast<int>(subsets.size());
  Mat<K> w = zero_mat<K>(D, D, spec);
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b) {
      Mat<K> sub = zero_mat<K>(n, n, spec);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub(i, j) = m(subsets[a][i] - 1, subsets[b][j] - 1);
      w(a, b) = det_field(sub);
    }
  return w;
}

namespace exdetail {

template <class K>
void require_nilpotent(const Mat<K>& t, const FieldSpec& spec) {
  int N = static_cast<int>(t.rows());
  if (!mat_is_zero<K>(mat_pow(t, static_cast<unsigned>(N), spec)))
    throw std::invalid_argument("shuffle operator: T is not nilpotent (T^N != 0)");
}

}  // namespace exdetail

/// Coefficient of z^d in wedge^n(I + zT): the degree-d shuffle operator of T
/// on the wedge basis. Zero for d > n.
template <class K>
Mat<K> shuffle_operator(const Mat<K>& t, int n, int d, const FieldSpec& spec) {
  int N = static_cast<int>(t.rows());
  if (d < 1) throw std::invalid_argument("shuffle_operator: need d >= 1");
  exdetail::require_nilpotent(t, spec);
  auto subsets = index_subsets(N, n);
  int D = static_cast<int>(subsets.size());
  if (d > n) return zero_mat<K>(D, D, spec);
  RingPtr zring = make_ring({"z"}, spec);
  Polynomial<K> z = Polynomial<K>::variable(zring, size_t{0});
  PolyMat<K> m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      m(i, j) = Polynomial<K>::constant(zring, t(i, j)) * z;
      if (i == j) m(i, j) += Polynomial<K>::one(zring);
    }
  PolyMat<K> w = wedge_matrix(m, n, zring);
  Mat<K> out = zero_mat<K>(D, D, spec);
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      out(a, b) = w(a, b).coeff_of(0, static_cast<Exp>(d)).constant_value();
  return out;
}

/// The shuffle ideal's linear forms: for each degree d >= 1 and each wedge
/// basis row J, the functional sum_K sh_d(J,K) p_K. Only nonzero forms are
/// returned, ordered by (d, row).
template <class K>
std::vector<Polynomial<K>> shuffle_linear_forms(const Mat<K>& t, int n, const RingPtr& pring,
                                                const FieldSpec& spec) {
  int N = static_cast<int>(t.rows());
  exdetail::require_nilpotent(t, spec);
  auto subsets = index_subsets(N, n);
  int D = static_cast<int>(subsets.size());
  if (pring->nvars() != static_cast<size_t>(D))
    throw std::invalid_argument("shuffle_linear_forms: ring does not match Gr(n,N)");
  std::vector<Polynomial<K>> forms;
  for (int d = 1; d <= n; ++d) {
    Mat<K> sh = shuffle_operator(t, n, d, spec);
    for (int row = 0; row < D; ++row) {
      Polynomial<K> f = Polynomial<K>::zero(pring);
      for (int col = 0; col < D; ++col) {
        if (sh(row, col).is_zero()) continue;
        f += Polynomial<K>::variable(pring, static_cast<size_t>(col)) *
             Polynomial<K>::constant(pring, sh(row, col));
      }
      if (!f.is_zero()) forms.push_back(std::move(f));
    }
  }
  return forms;
}

/// Grassmann-Pluecker exchange relations for Gr(n,N), a generating set of the
/// Pluecker ideal. Quadratic; empty for n = 1 or n = N.
template <class K>
std::vector<Polynomial<K>> plucker_relations(int N, int n, const RingPtr& pring) {
  auto subsets = index_subsets(N, n);
  std::map<IndexSet, size_t> rank;
  for (size_t i = 0; i < subsets.size(); ++i) rank[subsets[i]] = i;
  auto var_of = [&](const IndexSet& sorted) {
    return Polynomial<K>::variable(pring, rank.at(sorted));
  };
  std::vector<Polynomial<K>> out;
  std::set<std::string> seen;
  if (n < 1 || n > N) throw std::invalid_argument("plucker_relations: bad n");
  auto lambdas = index_subsets(N, n - 1);
  auto mus = index_subsets(N, n + 1);
  for (auto& lam : lambdas)
    for (auto& mu : mus) {
      Polynomial<K> rel = Polynomial<K>::zero(pring);
      for (size_t i = 0; i < mu.size(); ++i) {
        IndexSet left = lam;
        left.push_back(mu[i]);
        IndexSet left_sorted;
        int s1 = sort_sign(std::move(left), left_sorted);
        if (s1 == 0) continue;
        IndexSet right;
        for (size_t j = 0; j < mu.size(); ++j)
          if (j != i) right.push_back(mu[j]);
        int sign = (i % 2 == 0 ? 1 : -1) * s1;
        Polynomial<K> term = var_of(left_sorted) * var_of(right);
        rel = sign > 0 ? rel + term : rel - term;
      }
      if (rel.is_zero()) continue;
      rel = rel.monic();
      if (seen.insert(rel.to_string()).second) out.push_back(std::move(rel));
    }
  return out;
}

}  // namespace nilred
