#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilred/orbits.hpp"
#include "nilred/sampling.hpp"

using namespace nilred;

namespace {

/// Independent centralizer oracle: nullity of X -> X J_sigma - J_sigma X.
int commutant_nullity(const Partition& sigma) {
  FieldSpec q = FieldSpec::Q();
  int n = sigma.size_n();
  Mat<Rational> J = jordan_matrix<Rational>(sigma, q);
  Mat<Rational> L = zero_mat<Rational>(n * n, n * n, q);
  // column (p,q) of L is the flattening of E_pq J - J E_pq
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < n; ++c) {
      int col = p * n + c;
      for (int j = 0; j < n; ++j) L(p * n + j, col) += J(c, j);
      for (int i = 0; i < n; ++i) L(i * n + c, col) -= J(i, p);
    }
  return n * n - rank_of(L);
}

}  // namespace

TEST_CASE("max_partition") {
  CHECK(max_partition(7, 3) == Partition({3, 3, 1}));
  CHECK(max_partition(4, 2) == Partition({2, 2}));
  CHECK(max_partition(5, 5) == Partition({5}));
  CHECK(max_partition(6, 1) == Partition({1, 1, 1, 1, 1, 1}));
  CHECK_THROWS(max_partition(3, 4));
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({2, 2, 1}), Partition({3, 2})));
  CHECK(!dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK(dominance_leq(Partition({3, 1}), Partition({3, 1})));
  CHECK_THROWS(dominance_leq(Partition({2}), Partition({3})));
}

TEST_CASE("partitions below max_partition are exactly those with bounded parts") {
  for (int n = 1; n <= 8; ++n)
    for (int e = 1; e <= n; ++e) {
      Partition tau = max_partition(n, e);
      for (auto& sigma : all_partitions(n))
        CHECK(dominance_leq(sigma, tau) == (sigma.max_part() <= e));
    }
}

TEST_CASE("conjugate and enumeration") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  auto ps = all_partitions(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps.front() == Partition({4}));
  CHECK(ps.back() == Partition({1, 1, 1, 1}));
  CHECK(Partition::parse("3,2,1") == Partition({3, 2, 1}));
  CHECK(Partition({3, 2, 1}).to_string() == "[3,2,1]");
}

TEST_CASE("jordan_type recovers the type") {
  FieldSpec q = FieldSpec::Q();
  CHECK(jordan_type(jordan_matrix<Rational>(Partition({2, 1}), q), q) == Partition({2, 1}));
  CHECK(jordan_type(zero_mat<Rational>(4, 4, q), q) == Partition({1, 1, 1, 1}));
  for (int n = 1; n <= 8; ++n)
    for (auto& sigma : all_partitions(n))
      CHECK(jordan_type(jordan_matrix<Rational>(sigma, q), q) == sigma);
  // non-nilpotent input is rejected
  CHECK_THROWS(jordan_type(identity_mat<Rational>(2, q), q));
}

TEST_CASE("jordan_type is conjugation invariant") {
  FieldSpec f5 = FieldSpec::fp(5);
  Rng rng(19);
  for (int it = 0; it < 40; ++it) {
    int n = 2 + static_cast<int>(rng.below(4));
    auto parts = all_partitions(n);
    const Partition& sigma = parts[rng.below(parts.size())];
    Mat<Fp> g = random_invertible<Fp>(rng, n, f5);
    Mat<Fp> a = g * jordan_matrix<Fp>(sigma, f5) * inverse_mat(g, f5);
    CHECK(jordan_type(a, f5) == sigma);
  }
}

TEST_CASE("orbit dimension formula matches the centralizer oracle") {
  CHECK(orbit_dim(Partition({1, 1, 1})) == 0);
  CHECK(orbit_dim(Partition({2, 1})) == 4);
  for (int n = 1; n <= 6; ++n) {
    CHECK(orbit_dim(Partition({n})) == n * n - n);
    for (auto& sigma : all_partitions(n))
      CHECK(orbit_dim(sigma) == sigma.size_n() * sigma.size_n() - commutant_nullity(sigma));
  }
}

TEST_CASE("orbit dimension is strictly monotone in dominance") {
  for (int n = 2; n <= 6; ++n) {
    auto ps = all_partitions(n);
    for (auto& s : ps)
      for (auto& t : ps) {
        if (s == t) continue;
        if (dominance_leq(s, t)) CHECK(orbit_dim(s) < orbit_dim(t));
      }
  }
}

TEST_CASE("surjectivity witness intertwines") {
  FieldSpec q = FieldSpec::Q();
  for (int n = 1; n <= 6; ++n)
    for (int e = 1; e <= n; ++e) {
      Mat<Rational> T = jordan_matrix<Rational>(Partition::rectangle(e, n), q);
      for (auto& sigma : partitions_with_max_part(n, e)) {
        Mat<Rational> psi = surjectivity_witness<Rational>(n, e, sigma, q);
        Mat<Rational> J = jordan_matrix<Rational>(sigma, q);
        CHECK(mats_equal<Rational>(T * psi, psi * J));
        CHECK(rank_of(psi) == n);
      }
    }
  CHECK_THROWS(surjectivity_witness<Rational>(2, 1, Partition({2}), q));
}

TEST_CASE("jordan operator carries its standard matrix") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2, 2}), q);
  CHECK(T.dim() == 4);
  CHECK(T.matrix(0, 1) == Rational(1));
  CHECK(T.matrix(2, 3) == Rational(1));
  CHECK(T.matrix(1, 2) == Rational(0));
  CHECK(mat_is_zero<Rational>(mat_pow(T.matrix, 2, q)));
}
