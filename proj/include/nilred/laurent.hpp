#pragma once

#include "nilred/linalg.hpp"
#include "nilred/orbits.hpp"

namespace nilred {

/// Matrix-valued polynomial in t^{-1}: coeff[i] is the matrix at t^{-i}.
/// Big-cell elements satisfy coeff[0] == identity.
template <class K>
struct MatrixPolynomial {
  int n = 0;
  FieldSpec field;
  std::vector<Mat<K>> coeff;

  static MatrixPolynomial identity(int n, const FieldSpec& spec) {
    return {n, spec, {identity_mat<K>(n, spec)}};
  }

  /// Highest index with a nonzero coefficient; 0 for constants.
  int degree() const {
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
      if (!mat_is_zero<K>(coeff[i])) return i;
    return 0;
  }

  const Mat<K> at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff.size())) return zero_mat<K>(n, n, field);
    return coeff[i];
  }

  bool leading_is_identity() const {
    return !coeff.empty() && mats_equal<K>(coeff[0], identity_mat<K>(n, field));
  }

  MatrixPolynomial truncated(int order) const {
    MatrixPolynomial r{n, field, {}};
    for (int i = 0; i <= order; ++i) r.coeff.push_back(at(i));
    return r;
  }

  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    MatrixPolynomial r{a.n, a.field, {}};
    int da = static_cast<int>(a.coeff.size()) - 1, db = static_cast<int>(b.coeff.size()) - 1;
    for (int k = 0; k <= da + db; ++k) {
      Mat<K> acc = zero_mat<K>(a.n, a.n, a.field);
      for (int i = std::max(0, k - db); i <= std::min(k, da); ++i) acc = acc + a.coeff[i] * b.coeff[k - i];
      r.coeff.push_back(std::move(acc));
    }
    return r;
  }

  friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    if (a.n != b.n) return false;
    int d = std::max(a.coeff.size(), b.coeff.size());
    for (int i = 0; i < d; ++i)
      if (!mats_equal<K>(a.at(i), b.at(i))) return false;
    return true;
  }

  /// "1 + [[0,1],[0,0]]*t^-1 + ..." with the identity printed as 1.
  std::string to_string() const {
    std::string s;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      Mat<K> c = at(i);
      if (mat_is_zero<K>(c) && degree() > 0) continue;
      if (!first) s += " + ";
      first = false;
      std::string lit;
      if (i == 0 && mats_equal<K>(c, identity_mat<K>(n, field))) {
        lit = "1";
      } else {
        lit = "[";
        for (int r = 0; r < n; ++r) {
          if (r) lit += ",";
          lit += "[";
          for (int cc = 0; cc < n; ++cc) {
            if (cc) lit += ",";
            lit += c(r, cc).to_string();
          }
          lit += "]";
        }
        lit += "]";
      }
      s += lit;
      if (i > 0) s += "*t^-" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }
};

namespace laudetail {

template <class K>
void require_big_cell(const MatrixPolynomial<K>& a, const char* who) {
  if (!a.leading_is_identity())
    throw std::invalid_argument(std::string(who) + ": constant coefficient must be the identity");
}

/// det as a univariate polynomial in u = t^{-1}.
template <class K>
Polynomial<K> det_poly(const MatrixPolynomial<K>& a, const RingPtr& uring) {
  Polynomial<K> u = Polynomial<K>::variable(uring, size_t{0});
  PolyMat<K> m(a.n, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) m(i, j) = Polynomial<K>::zero(uring);
  for (int d = 0; d < static_cast<int>(a.coeff.size()); ++d) {
    Polynomial<K> ud = u.pow(static_cast<unsigned>(d));
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j)
        if (!a.coeff[d](i, j).is_zero())
          m(i, j) += Polynomial<K>::constant(uring, a.coeff[d](i, j)) * ud;
  }
  return bareiss_det(std::move(m), uring);
}

}  // namespace laudetail

/// Truncated series inverse of a big-cell element.
template <class K>
MatrixPolynomial<K> series_inverse(const MatrixPolynomial<K>& a, int order) {
  laudetail::require_big_cell(a, "series_inverse");
  MatrixPolynomial<K> r{a.n, a.field, {identity_mat<K>(a.n, a.field)}};
  for (int k = 1; k <= order; ++k) {
    Mat<K> acc = zero_mat<K>(a.n, a.n, a.field);
    for (int i = 1; i <= k; ++i) acc = acc + a.at(i) * r.coeff[k - i];
    r.coeff.push_back(-acc);
  }
  return r;
}

/// Membership in Z_p: degree at most p and identically unimodular determinant.
template <class K>
bool z_membership(const MatrixPolynomial<K>& a, int p) {
  laudetail::require_big_cell(a, "z_membership");
  if (a.degree() > p) return false;
  RingPtr uring = make_ring({"u"}, a.field);
  return laudetail::det_poly(a, uring) == Polynomial<K>::one(uring);
}

/// Membership in X: degree <= n-1, every coefficient a power of the first,
/// and char poly of the first equal to lambda^n.
template <class K>
bool x_membership(const MatrixPolynomial<K>& a) {
  laudetail::require_big_cell(a, "x_membership");
  int n = a.n;
  if (a.degree() > n - 1) return false;
  Mat<K> c1 = a.at(1);
  if (!has_nilpotent_char_poly(c1, a.field)) return false;
  Mat<K> pow = c1;
  for (int i = 2; i <= n - 1; ++i) {
    pow = pow * c1;
    if (!mats_equal<K>(a.at(i), pow)) return false;
  }
  return true;
}

/// 1 + C t^-1 + ... + C^{n-1} t^-(n-1), the inverse of 1 - C t^-1 for a
/// matrix with char poly lambda^n (Cayley-Hamilton kills C^n). The product
/// identity is verified exactly before returning.
template <class K>
MatrixPolynomial<K> ch_inverse(const Mat<K>& c, const FieldSpec& spec) {
  int n = static_cast<int>(c.rows());
  if (!has_nilpotent_char_poly(c, spec))
    throw std::invalid_argument("ch_inverse: char poly of C is not lambda^n");
  MatrixPolynomial<K> r{n, spec, {identity_mat<K>(n, spec)}};
  Mat<K> pow = identity_mat<K>(n, spec);
  for (int i = 1; i <= n - 1; ++i) {
    pow = pow * c;
    r.coeff.push_back(pow);
  }
  MatrixPolynomial<K> lin{n, spec, {identity_mat<K>(n, spec), -c}};
  if (!(lin * r == MatrixPolynomial<K>::identity(n, spec)))
    throw std::logic_error("ch_inverse: product check failed");
  return r;
}

/// Antidiagonal J with entry (-1)^j in column j (1-based), row n+1-j.
template <class K>
Mat<K> omega_antidiagonal(int n, const FieldSpec& spec) {
  Mat<K> j = zero_mat<K>(n, n, spec);
  for (int col = 1; col <= n; ++col)
    j(n - col, col - 1) = field_from_int<K>(col % 2 == 0 ? 1 : -1, spec);
  return j;
}

/// The big-cell involution: A(t^-1) -> J * A((-1)^n t^-1)^{-T} * J^{-1},
/// computed as a series truncated at out_order (default n*deg(A) + 1).
/// For inputs in X the answer is a polynomial of degree <= 1; that exactness
/// is asserted, and an out_order too small to carry it is rejected.
template <class K>
MatrixPolynomial<K> omega(const MatrixPolynomial<K>& a, int out_order = -1) {
  laudetail::require_big_cell(a, "omega");
  int n = a.n;
  if (out_order < 0) out_order = n * a.degree() + 1;
  bool exact_claim = x_membership(a);
  if (exact_claim && out_order < 1)
    throw std::invalid_argument("omega: truncation order below the degree of the exact answer");
  // substitute t^-1 -> (-1)^n t^-1 and transpose coefficient-wise
  MatrixPolynomial<K> b{n, a.field, {}};
  for (int i = 0; i < static_cast<int>(a.coeff.size()); ++i) {
    Mat<K> m = a.coeff[i].transpose();
    if ((n % 2 == 1) && (i % 2 == 1)) m = -m;
    b.coeff.push_back(std::move(m));
  }
  MatrixPolynomial<K> inv = series_inverse(b, out_order);
  Mat<K> j = omega_antidiagonal<K>(n, a.field);
  Mat<K> jinv = inverse_mat(j, a.field);
  MatrixPolynomial<K> r{n, a.field, {}};
  for (auto& c : inv.coeff) r.coeff.push_back(j * c * jinv);
  if (exact_claim && r.degree() > 1)
    throw std::logic_error("omega: image of an X point escaped degree 1");
  return r;
}

/// Block companion matrix of the monic matrix polynomial
/// t^p A(t^-1) = t^p + A_1 t^{p-1} + ... + A_p, together with its char poly
/// (asserted equal to lambda^{pn} det A(lambda^-1)).
template <class K>
std::pair<Mat<K>, Polynomial<K>> companion_model(const MatrixPolynomial<K>& a, int p) {
  if (!z_membership(a, p)) throw std::invalid_argument("companion_model: input is not in Z_p");
  int n = a.n;
  int D = p * n;
  Mat<K> c = zero_mat<K>(D, D, a.field);
  for (int blk = 1; blk < p; ++blk)
    for (int i = 0; i < n; ++i) c(blk * n + i, (blk - 1) * n + i) = field_from_int<K>(1, a.field);
  for (int blk = 0; blk < p; ++blk) {
    Mat<K> top = a.at(p - blk);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(blk * n + i, (p - 1) * n + j) = -top(i, j);
  }
  RingPtr lamring = make_ring({"lam"}, a.field);
  Polynomial<K> cp = char_poly_field(c, lamring);
  // the reversal lambda^{pn} det(A)(lambda^-1) of the determinant
  RingPtr uring = make_ring({"u"}, a.field);
  Polynomial<K> det = laudetail::det_poly(a, uring);
  Polynomial<K> expect = Polynomial<K>::zero(lamring);
  for (long k = 0; k <= det.degree_in(0); ++k) {
    K dk = det.coeff_of(0, static_cast<Exp>(k)).constant_value();
    if (dk.is_zero()) continue;
    std::vector<Exp> e{static_cast<Exp>(D - k)};
    expect += Polynomial<K>::term(lamring, e, dk);
  }
  if (!(cp == expect)) throw std::logic_error("companion_model: char poly mismatch");
  return {std::move(c), std::move(cp)};
}

/// Multiplication by t on t^{-b} L_0 / t^a L_0.
struct LatticeOperatorSpec {
  int n, a, b;

  LatticeOperatorSpec(int n_, int a_, int b_) : n(n_), a(a_), b(b_) {
    if (n < 1 || a < 0 || b < 0 || a + b < 1)
      throw std::invalid_argument("LatticeOperatorSpec: need n >= 1 and a + b >= 1");
  }
};

/// The operator T_{a,b} in the monomial basis t^k e_i ordered by (i ascending,
/// k descending from a-1 down to -b); one Jordan block per coordinate, so the
/// type is ((a+b)^n).
template <class K>
JordanOperator<K> lattice_nilpotent(const LatticeOperatorSpec& spec, const FieldSpec& field) {
  int blocksize = spec.a + spec.b;
  int N = spec.n * blocksize;
  Mat<K> t = zero_mat<K>(N, N, field);
  for (int i = 0; i < spec.n; ++i) {
    int base = i * blocksize;
    // local index l holds t^{a-1-l}; multiplication by t sends l to l-1 and
    // kills l = 0 (t^a = 0 in the quotient)
    for (int l = 1; l < blocksize; ++l) t(base + l - 1, base + l) = field_from_int<K>(1, field);
  }
  Partition type = Partition::rectangle(blocksize, spec.n);
  JordanOperator<K> op{type, field, std::move(t)};
  if (!mats_equal<K>(op.matrix, jordan_matrix<K>(type, field)))
    throw std::logic_error("lattice_nilpotent: basis convention drifted from the standard form");
  return op;
}

}  // namespace nilred
