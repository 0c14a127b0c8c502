#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilred/linalg.hpp"
#include "nilred/parse.hpp"
#include "nilred/sampling.hpp"
#include "test_util.hpp"

using namespace nilred;

namespace {

template <class S>
Mat<S> manual_mul(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      S acc = a(i, 0) * b(0, j);
      for (Eigen::Index k = 1; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

/// Evaluates a char poly (univariate in lam) at a field matrix.
template <class K>
Mat<K> eval_at_matrix(const Polynomial<K>& cp, size_t lam_var, const Mat<K>& m, const FieldSpec& spec) {
  int n = static_cast<int>(m.rows());
  Mat<K> acc = zero_mat<K>(n, n, spec);
  for (long k = 0; k <= cp.degree_in(lam_var); ++k) {
    K c = cp.coeff_of(lam_var, static_cast<Exp>(k)).constant_value();
    if (c.is_zero()) continue;
    acc = acc + mat_pow(m, static_cast<unsigned>(k), spec) * c;
  }
  return acc;
}

}  // namespace

TEST_CASE("Eigen products agree with manual loops for exact scalars") {
  Rng rng(31);
  FieldSpec f7 = FieldSpec::fp(7);
  Mat<Fp> a = random_matrix<Fp>(rng, 4, 3, f7);
  Mat<Fp> b = random_matrix<Fp>(rng, 3, 5, f7);
  CHECK(mats_equal<Fp>(a * b, manual_mul(a, b)));

  Mat<Rational> c = random_matrix<Rational>(rng, 4, 4, FieldSpec::Q());
  Mat<Rational> d = random_matrix<Rational>(rng, 4, 4, FieldSpec::Q());
  CHECK(mats_equal<Rational>(c * d, manual_mul(c, d)));
  CHECK(mats_equal<Rational>(c + d, (d + c).eval()));

  auto ring = make_ring({"x", "y"}, FieldSpec::Q());
  PolyMat<Rational> p(2, 2), q(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      p(i, j) = testutil::random_poly<Rational>(rng, ring, 3, 2);
      q(i, j) = testutil::random_poly<Rational>(rng, ring, 3, 2);
    }
  CHECK(mats_equal<Polynomial<Rational>>(p * q, manual_mul(p, q)));
}

TEST_CASE("rank, kernel, inverse over a prime field") {
  FieldSpec f5 = FieldSpec::fp(5);
  Rng rng(17);
  for (int it = 0; it < 50; ++it) {
    Mat<Fp> m = random_matrix<Fp>(rng, 4, 6, f5);
    int r = rank_of(m);
    Mat<Fp> ker = kernel_basis(m, f5);
    CHECK(r + ker.cols() == 6);
    if (ker.cols() > 0) CHECK(mat_is_zero<Fp>(m * ker));
    CHECK(rank_of(ker) == static_cast<int>(ker.cols()));
  }
  Mat<Fp> g = random_invertible<Fp>(rng, 4, f5);
  CHECK(mats_equal<Fp>(g * inverse_mat(g, f5), identity_mat<Fp>(4, f5)));
}

TEST_CASE("field determinant and Bareiss agree") {
  Rng rng(23);
  FieldSpec f7 = FieldSpec::fp(7);
  auto ring = make_ring({"t"}, FieldSpec::fp(7));
  for (int it = 0; it < 50; ++it) {
    Mat<Fp> m = random_matrix<Fp>(rng, 4, 4, f7);
    Fp d1 = det_field(m);
    Polynomial<Fp> d2 = bareiss_det(lift_to_poly(m, ring), ring);
    CHECK(d2.constant_value() == d1);
  }
}

TEST_CASE("char poly of a symbolic 2x2 matches the cofactor expansion") {
  auto ring = make_ring({"a", "b", "c", "d", "lam"}, FieldSpec::Q());
  PolyMat<Rational> m = generic_matrix<Rational>(ring, "", 0, 0);
  m.resize(2, 2);
  m(0, 0) = parse_poly<Rational>("a", ring);
  m(0, 1) = parse_poly<Rational>("b", ring);
  m(1, 0) = parse_poly<Rational>("c", ring);
  m(1, 1) = parse_poly<Rational>("d", ring);
  auto cp = char_poly(m, ring, ring->var_index("lam"));
  CHECK(cp == parse_poly<Rational>("lam^2 - (a+d)*lam + (a*d - b*c)", ring));
}

TEST_CASE("char poly of Jordan blocks and the zero matrix") {
  FieldSpec q = FieldSpec::Q();
  auto lamring = make_ring({"lam"}, q);
  Mat<Rational> j2 = zero_mat<Rational>(2, 2, q);
  j2(0, 1) = Rational(1);
  CHECK(char_poly_field(j2, lamring) == parse_poly<Rational>("lam^2", lamring));
  Mat<Rational> z = zero_mat<Rational>(3, 3, q);
  CHECK(char_poly_field(z, lamring) == parse_poly<Rational>("lam^3", lamring));
  CHECK(has_nilpotent_char_poly(j2, q));
  Mat<Rational> e11 = zero_mat<Rational>(2, 2, q);
  e11(0, 0) = Rational(1);
  CHECK(!has_nilpotent_char_poly(e11, q));
}

TEST_CASE("Cayley-Hamilton on random matrices") {
  Rng rng(41);
  FieldSpec f5 = FieldSpec::fp(5);
  auto lam5 = make_ring({"lam"}, f5);
  for (int it = 0; it < 30; ++it) {
    int n = 2 + static_cast<int>(rng.below(3));
    Mat<Fp> m = random_matrix<Fp>(rng, n, n, f5);
    auto cp = char_poly_field(m, lam5);
    CHECK(mat_is_zero<Fp>(eval_at_matrix(cp, 0, m, f5)));
  }
  FieldSpec q = FieldSpec::Q();
  auto lamq = make_ring({"lam"}, q);
  for (int it = 0; it < 10; ++it) {
    Mat<Rational> m = random_matrix<Rational>(rng, 3, 3, q, 4);
    auto cp = char_poly_field(m, lamq);
    CHECK(mat_is_zero<Rational>(eval_at_matrix(cp, 0, m, q)));
  }
}

TEST_CASE("char poly is a similarity invariant") {
  Rng rng(43);
  FieldSpec f7 = FieldSpec::fp(7);
  auto lam7 = make_ring({"lam"}, f7);
  for (int it = 0; it < 30; ++it) {
    int n = 2 + static_cast<int>(rng.below(3));
    Mat<Fp> m = random_matrix<Fp>(rng, n, n, f7);
    Mat<Fp> g = random_invertible<Fp>(rng, n, f7);
    Mat<Fp> conj = g * m * inverse_mat(g, f7);
    CHECK(char_poly_field(conj, lam7) == char_poly_field(m, lam7));
  }
}

TEST_CASE("solve_unique") {
  FieldSpec f5 = FieldSpec::fp(5);
  Rng rng(47);
  Mat<Fp> a = random_invertible<Fp>(rng, 3, f5);
  Mat<Fp> x = random_matrix<Fp>(rng, 3, 2, f5);
  Mat<Fp> b = a * x;
  CHECK(mats_equal<Fp>(solve_unique(a, b, f5), x));
}
