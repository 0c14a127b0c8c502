#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilred/parse.hpp"
#include "nilred/sampling.hpp"
#include "nilred/schemes.hpp"

using namespace nilred;

namespace {

using PQ = Polynomial<Rational>;

Ideal<Rational> qideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<PQ> ps;
  for (auto& s : gens) ps.push_back(parse_poly<Rational>(s, r));
  return make_ideal(r, std::move(ps));
}

std::vector<Fp> flatten_point(const Mat<Fp>& a, const Mat<Fp>& psi) {
  std::vector<Fp> pt;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) pt.push_back(a(i, j));
  for (Eigen::Index i = 0; i < psi.rows(); ++i)
    for (Eigen::Index j = 0; j < psi.cols(); ++j) pt.push_back(psi(i, j));
  return pt;
}

}  // namespace

TEST_CASE("nilpotent scheme ideal, smallest case") {
  auto I = nilpotent_scheme_ideal<Rational>(NilpotentSchemeSpec(1, 1), FieldSpec::Q());
  REQUIRE(I.gens.size() == 2);  // the entry of A^1 and the char coefficient, both a_1_1
  auto gb = groebner_basis(I);
  REQUIRE(gb.polys.size() == 1);
  CHECK(gb.polys[0] == parse_poly<Rational>("a_1_1", I.ring));
}

TEST_CASE("nilpotent scheme ideal for (2,2)") {
  auto I = nilpotent_scheme_ideal<Rational>(NilpotentSchemeSpec(2, 2), FieldSpec::Q());
  const RingPtr& r = I.ring;
  // generators: the four entries of A^2, then det and trace from the char poly
  REQUIRE(I.gens.size() == 6);
  CHECK(I.gens[0] == parse_poly<Rational>("a_1_1^2 + a_1_2*a_2_1", r));
  CHECK(I.gens[5] == parse_poly<Rational>("a_1_1 + a_2_2", r));
  CHECK(ideal_equal(I, qideal(r, {"a_1_1 + a_2_2", "a_1_1*a_2_2 - a_1_2*a_2_1"})));
}

TEST_CASE("for e = n the char coefficients alone define the scheme") {
  for (int n = 2; n <= 3; ++n) {
    auto I = nilpotent_scheme_ideal<Rational>(NilpotentSchemeSpec(n, n), FieldSpec::Q());
    // drop the A^n entries, keep the n char coefficients (the last n gens)
    std::vector<PQ> cs(I.gens.end() - n, I.gens.end());
    CHECK(ideal_equal(I, make_ideal(I.ring, std::move(cs))));
  }
}

TEST_CASE("chart matrices") {
  FieldSpec q = FieldSpec::Q();
  Chart c12(2, 1, {1});
  RingPtr r = chart_ring(c12, q);
  auto M = chart_matrix<Rational>(c12, r);
  CHECK(M(0, 0) == PQ::one(r));
  CHECK(M(1, 0) == parse_poly<Rational>("x_2_1", r));

  Chart c13(4, 2, {1, 3});
  RingPtr r2 = chart_ring(c13, q);
  auto M2 = chart_matrix<Rational>(c13, r2);
  CHECK(M2(0, 0) == PQ::one(r2));
  CHECK(M2(0, 1) == PQ::zero(r2));
  CHECK(M2(2, 0) == PQ::zero(r2));
  CHECK(M2(2, 1) == PQ::one(r2));
  CHECK(M2(1, 0) == parse_poly<Rational>("x_2_1", r2));
  CHECK(M2(3, 1) == parse_poly<Rational>("x_4_2", r2));
  // the minor on the pivot rows is 1
  CHECK(minor_det(M2, {0, 2}, {0, 1}, r2) == PQ::one(r2));
  CHECK_THROWS(Chart(4, 2, {3, 1}));
  CHECK_THROWS(Chart(4, 2, {1, 5}));
}

TEST_CASE("invariant chart ideal for the line chart of J_2") {
  // on the chart (1, x): invariance alone gives (x^2), the full ideal is (x)
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2}), q);
  Chart chart(2, 1, {1});
  RingPtr r = chart_ring(chart, q);
  auto inv_only = invariance_equations(T, chart, r);
  REQUIRE(inv_only.size() == 1);
  CHECK(inv_only[0] == parse_poly<Rational>("x_2_1^2", r));
  auto full = invariant_chart_ideal(T, chart);
  REQUIRE(full.gens.size() == 2);
  CHECK(ideal_equal(full, qideal(full.ring, {"x_2_1"})));
  CHECK(!ideal_equal(make_ideal(full.ring, std::vector<PQ>{inv_only[0]}), qideal(full.ring, {"x_2_1"})));
  // the opposite chart contains no invariant line: the ideal is (1)
  Chart chart2(2, 1, {2});
  auto empty = invariant_chart_ideal(T, chart2);
  CHECK(groebner_basis(empty).is_unit_ideal());
}

TEST_CASE("zero operator leaves every chart unconstrained") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({1, 1, 1}), q);  // T = 0 on k^3
  for (auto& chart : all_charts(3, 2)) {
    CHECK(invariant_chart_ideal(T, chart).gens.empty());
    CHECK(shuffle_chart_ideal(T, chart).gens.empty());
  }
}

TEST_CASE("chart at a T-stable coordinate plane passes through the origin") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2, 2}), q);
  Chart chart(4, 2, {1, 3});  // span{e1, e3} is T-invariant
  auto I = invariant_chart_ideal(T, chart);
  std::vector<Rational> origin(I.ring->nvars(), Rational(0));
  for (auto& g : I.gens) CHECK(g.evaluate(origin).is_zero());
}

TEST_CASE("shuffle chart ideal for the line chart of J_2") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2}), q);
  auto I = shuffle_chart_ideal(T, Chart(2, 1, {1}));
  REQUIRE(I.gens.size() == 1);
  CHECK(I.gens[0] == parse_poly<Rational>("x_2_1", I.ring));
}

TEST_CASE("plucker relations vanish identically under chart minors") {
  FieldSpec q = FieldSpec::Q();
  Chart chart(4, 2, {1, 2});
  RingPtr xr = chart_ring(chart, q);
  auto M = chart_matrix<Rational>(chart, xr);
  RingPtr pr = plucker_ring(4, 2, q);
  auto rels = plucker_relations<Rational>(4, 2, pr);
  auto subsets = index_subsets(4, 2);
  std::vector<std::optional<PQ>> values(subsets.size());
  for (size_t s = 0; s < subsets.size(); ++s)
    values[s] = minor_det(M, {subsets[s][0] - 1, subsets[s][1] - 1}, {0, 1}, xr);
  for (auto& rel : rels) CHECK(rel.substitute(values).is_zero());
}

TEST_CASE("both chart presentations agree for Gr(2,k^4), type (2,2)") {
  for (FieldSpec f : {FieldSpec::Q(), FieldSpec::fp(2)}) {
    with_field(f, [&]<class K>() {
      auto T = JordanOperator<K>::standard(Partition({2, 2}), f);
      for (auto& chart : all_charts(4, 2))
        CHECK(ideal_equal(invariant_chart_ideal(T, chart), shuffle_chart_ideal(T, chart)));
    });
  }
}

TEST_CASE("vee scheme ideal for n=1, e=2, one block") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2}), q);
  auto V = vee_scheme_ideal<Rational>(NilpotentSchemeSpec(1, 2), T);
  // a-part: a^2 and a; intertwining: T psi = a psi
  CHECK(ideal_equal(V, qideal(V.ring, {"a_1_1", "psi_2_1*a_1_1", "psi_1_1*a_1_1 - psi_2_1"})));
  CHECK_THROWS(vee_scheme_ideal<Rational>(NilpotentSchemeSpec(2, 2), JordanOperator<Rational>::standard(Partition({2, 1}), q)));
}

TEST_CASE("vee generators vanish on an honest intertwiner") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2, 2}), q);
  auto V = vee_scheme_ideal<Rational>(NilpotentSchemeSpec(2, 2), T);
  Mat<Rational> A = jordan_matrix<Rational>(Partition({2}), q);
  Mat<Rational> psi = zero_mat<Rational>(4, 2, q);
  psi(0, 0) = Rational(1);  // first chain of T
  psi(1, 1) = Rational(1);
  std::vector<Rational> pt = [&] {
    std::vector<Rational> v;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v.push_back(A(i, j));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) v.push_back(psi(i, j));
    return v;
  }();
  for (auto& g : V.gens) CHECK(g.evaluate(pt).is_zero());
  // setting A = 0 reduces the intertwining equations to T psi = 0
  Mat<Rational> zero2 = zero_mat<Rational>(2, 2, q);
  Mat<Rational> ker = zero_mat<Rational>(4, 2, q);
  ker(0, 0) = Rational(1);
  ker(2, 1) = Rational(1);  // kernel vectors of both blocks
  std::vector<Rational> pt0 = [&] {
    std::vector<Rational> v;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v.push_back(zero2(i, j));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) v.push_back(ker(i, j));
    return v;
  }();
  for (auto& g : V.gens) CHECK(g.evaluate(pt0).is_zero());
}

TEST_CASE("phi recovers the matrix of T on an invariant frame") {
  FieldSpec q = FieldSpec::Q();
  auto T = JordanOperator<Rational>::standard(Partition({2, 2}), q);
  // first Jordan chain of length 2
  Mat<Rational> psi = zero_mat<Rational>(4, 2, q);
  psi(0, 0) = Rational(1);
  psi(1, 1) = Rational(1);
  CHECK(mats_equal<Rational>(phi(T, psi), jordan_matrix<Rational>(Partition({2}), q)));
  // a single kernel vector maps to the 1x1 zero matrix
  Mat<Rational> kv = zero_mat<Rational>(4, 1, q);
  kv(0, 0) = Rational(1);
  Mat<Rational> B = phi(T, kv);
  CHECK(B.rows() == 1);
  CHECK(B(0, 0).is_zero());
  // non-invariant span is rejected
  Mat<Rational> bad = zero_mat<Rational>(4, 1, q);
  bad(1, 0) = Rational(1);  // T e_2 = e_1 leaves the span
  CHECK_THROWS(phi(T, bad));
  // rank-deficient frame is rejected
  Mat<Rational> rd = zero_mat<Rational>(4, 2, q);
  rd(0, 0) = Rational(1);
  rd(0, 1) = Rational(2);
  CHECK_THROWS(phi(T, rd));
}

TEST_CASE("phi of a surjectivity witness lands on the expected orbit") {
  FieldSpec q = FieldSpec::Q();
  int n = 5, e = 2;
  Partition sigma({2, 2, 1});
  auto T = JordanOperator<Rational>::standard(Partition::rectangle(e, n), q);
  Mat<Rational> psi = surjectivity_witness<Rational>(n, e, sigma, q);
  Mat<Rational> B = phi(T, psi);
  CHECK(jordan_type(B, q) == sigma);
  CHECK(sigma == max_partition(5, 2));
}

TEST_CASE("phi is conjugation equivariant") {
  FieldSpec f5 = FieldSpec::fp(5);
  Rng rng(67);
  auto T = JordanOperator<Fp>::standard(Partition::rectangle(2, 3), f5);
  Mat<Fp> psi = surjectivity_witness<Fp>(3, 2, Partition({2, 1}), f5);
  for (int it = 0; it < 20; ++it) {
    Mat<Fp> g = random_invertible<Fp>(rng, 3, f5);
    Mat<Fp> lhs = phi(T, Mat<Fp>(psi * g));
    Mat<Fp> rhs = inverse_mat(g, f5) * phi(T, psi) * g;
    CHECK(mats_equal<Fp>(lhs, rhs));
  }
}

TEST_CASE("tangent dimensions of N_{2,2}") {
  FieldSpec q = FieldSpec::Q();
  auto I = nilpotent_scheme_ideal<Rational>(NilpotentSchemeSpec(2, 2), q);
  // at J_2: the Jacobian spans the trace and the (1,0)-entry directions
  std::vector<Rational> j2{Rational(0), Rational(1), Rational(0), Rational(0)};
  CHECK(tangent_dim(I, j2) == 2);
  std::vector<Rational> origin(4, Rational(0));
  CHECK(tangent_dim(I, origin) == 3);
  auto zero_ideal = make_ideal<Rational>(I.ring, {});
  CHECK(tangent_dim(zero_ideal, j2) == 4);
  std::vector<Rational> off{Rational(1), Rational(0), Rational(0), Rational(0)};
  CHECK_THROWS(tangent_dim(I, off));
}

TEST_CASE("intertwiner nullity and tangent additivity at sampled points") {
  FieldSpec f5 = FieldSpec::fp(5);
  Rng rng(73);
  int n = 2, e = 2, blocks = 2;
  auto T = JordanOperator<Fp>::standard(Partition::rectangle(e, blocks), f5);
  int N = T.dim();
  auto nil = nilpotent_scheme_ideal<Fp>(NilpotentSchemeSpec(n, e), f5);
  auto vee = vee_scheme_ideal<Fp>(NilpotentSchemeSpec(n, e), T);
  for (int it = 0; it < 10; ++it) {
    auto parts = partitions_with_max_part(n, e);
    const Partition& sigma = parts[rng.below(parts.size())];
    Mat<Fp> g = random_invertible<Fp>(rng, n, f5);
    Mat<Fp> A = g * jordan_matrix<Fp>(sigma, f5) * inverse_mat(g, f5);
    // solution space of T psi = psi A
    Mat<Fp> L = zero_mat<Fp>(N * n, N * n, f5);
    for (int p = 0; p < N; ++p)
      for (int c = 0; c < n; ++c) {
        int col = p * n + c;
        for (int i = 0; i < N; ++i) L(i * n + c, col) += T.matrix(i, p);
        for (int j = 0; j < n; ++j) L(p * n + j, col) -= A(c, j);
      }
    Mat<Fp> ker = kernel_basis(L, f5);
    CHECK(ker.cols() == n * blocks);
    // a random point of the solution space gives a vee point
    Mat<Fp> coeffs = random_matrix<Fp>(rng, static_cast<int>(ker.cols()), 1, f5);
    Mat<Fp> flat = ker * coeffs;
    Mat<Fp> psi = zero_mat<Fp>(N, n, f5);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < n; ++j) psi(i, j) = flat(i * n + j, 0);
    CHECK(tangent_dim(vee, flatten_point(A, psi)) == tangent_dim(nil, [&] {
            std::vector<Fp> v;
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) v.push_back(A(i, j));
            return v;
          }()) + n * blocks);
  }
}
