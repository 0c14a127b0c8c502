#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "nilred/laurent.hpp"
#include "nilred/report.hpp"
#include "nilred/sampling.hpp"
#include "nilred/schemes.hpp"

namespace nilred {

/// Parameters a check may consume. `provided` lists the keys the caller set;
/// run_check validates it against the check's signature.
struct CheckParams {
  std::optional<int> n, e, a, b, trials, order, deg;
  std::optional<Partition> type;
  std::optional<FieldSpec> field;
  uint64_t seed = 0;
  double timeout_secs = 600;
  std::set<std::string> provided;

  int need_n() const { return req(n, "n"); }
  int need_e() const { return req(e, "e"); }
  int get(const std::optional<int>& v, int dflt) const { return v ? *v : dflt; }
  FieldSpec field_or(const FieldSpec& dflt) const { return field ? *field : dflt; }
  GroebnerOptions gopts() const { return GroebnerOptions{timeout_secs}; }

private:
  static int req(const std::optional<int>& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("missing required parameter --") + name);
    return *v;
  }
};

struct CheckDef {
  std::string name;
  std::string description;
  std::set<std::string> allowed;
  std::function<Report(const CheckParams&)> fn;
};

namespace checks_detail {

inline nlohmann::ordered_json params_json(const CheckParams& p,
                                          std::initializer_list<std::string> keys) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& k : keys) {
    if (k == "n" && p.n) j["n"] = *p.n;
    if (k == "e" && p.e) j["e"] = *p.e;
    if (k == "a" && p.a) j["a"] = *p.a;
    if (k == "b" && p.b) j["b"] = *p.b;
    if (k == "trials" && p.trials) j["trials"] = *p.trials;
    if (k == "order" && p.order) j["order"] = *p.order;
    if (k == "deg" && p.deg) j["deg"] = *p.deg;
    if (k == "type" && p.type) j["type"] = p.type->to_string();
  }
  return j;
}

template <class K>
Mat<K> random_conjugate(Rng& rng, const Partition& sigma, const FieldSpec& spec) {
  int n = sigma.size_n();
  Mat<K> g = random_invertible<K>(rng, n, spec);
  return g * jordan_matrix<K>(sigma, spec) * inverse_mat(g, spec);
}

/// Independent centralizer oracle for orbit_dim: nullity of X -> [X, J_sigma].
inline int commutant_nullity(const Partition& sigma) {
  FieldSpec q = FieldSpec::Q();
  int n = sigma.size_n();
  Mat<Rational> J = jordan_matrix<Rational>(sigma, q);
  Mat<Rational> L = zero_mat<Rational>(n * n, n * n, q);
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < n; ++c) {
      int col = p * n + c;
      for (int j = 0; j < n; ++j) L(p * n + j, col) += J(c, j);
      for (int i = 0; i < n; ++i) L(i * n + c, col) -= J(i, p);
    }
  return n * n - rank_of(L);
}

/// wedge^n(I + zT) == I + sum_d z^d sh_d for every 1 <= n <= N (or one n).
template <class K>
bool wedge_identity_holds(const Partition& type, const FieldSpec& spec, std::optional<int> only_n,
                          std::string& witness) {
  int N = type.size_n();
  Mat<K> t = jordan_matrix<K>(type, spec);
  RingPtr zring = make_ring({"z"}, spec);
  Polynomial<K> z = Polynomial<K>::variable(zring, size_t{0});
  PolyMat<K> m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      m(i, j) = Polynomial<K>::constant(zring, t(i, j)) * z;
      if (i == j) m(i, j) += Polynomial<K>::one(zring);
    }
  for (int n = only_n ? *only_n : 1; n <= (only_n ? *only_n : N); ++n) {
    PolyMat<K> w = wedge_matrix(m, n, zring);
    int D = static_cast<int>(w.rows());
    PolyMat<K> rhs = identity_poly_mat<K>(D, zring);
    for (int d = 1; d <= n; ++d) {
      Mat<K> sh = shuffle_operator(t, n, d, spec);
      Polynomial<K> zd = z.pow(static_cast<unsigned>(d));
      for (int aa = 0; aa < D; ++aa)
        for (int bb = 0; bb < D; ++bb)
          if (!sh(aa, bb).is_zero()) rhs(aa, bb) += Polynomial<K>::constant(zring, sh(aa, bb)) * zd;
    }
    if (!mats_equal<Polynomial<K>>(w, rhs)) {
      witness = "identity fails for type " + type.to_string() + ", wedge degree " + std::to_string(n);
      return false;
    }
  }
  witness = "identity holds for type " + type.to_string();
  return true;
}

/// Random element of N_{n,e}(F_p) together with a random intertwiner for T.
template <class K>
std::pair<Mat<K>, Mat<K>> random_vee_point(Rng& rng, int n, int e, const JordanOperator<K>& T,
                                           const FieldSpec& spec, bool want_full_rank) {
  auto parts = partitions_with_max_part(n, e);
  const Partition& sigma = parts[rng.below(parts.size())];
  Mat<K> A = random_conjugate<K>(rng, sigma, spec);
  int N = T.dim();
  Mat<K> L = zero_mat<K>(N * n, N * n, spec);
  for (int p = 0; p < N; ++p)
    for (int c = 0; c < n; ++c) {
      int col = p * n + c;
      for (int i = 0; i < N; ++i) L(i * n + c, col) += T.matrix(i, p);
      for (int j = 0; j < n; ++j) L(p * n + j, col) -= A(c, j);
    }
  Mat<K> ker = kernel_basis(L, spec);
  for (int tries = 0; tries < 200; ++tries) {
    Mat<K> coeffs = random_matrix<K>(rng, static_cast<int>(ker.cols()), 1, spec);
    Mat<K> flat = ker * coeffs;
    Mat<K> psi = zero_mat<K>(N, n, spec);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < n; ++j) psi(i, j) = flat(i * n + j, 0);
    if (!want_full_rank || rank_of(psi) == n) return {A, psi};
  }
  throw std::runtime_error("random_vee_point: no full-rank intertwiner found");
}

template <class K>
std::vector<K> flatten2(const Mat<K>& a, const Mat<K>& b) {
  std::vector<K> v;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v.push_back(a(i, j));
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) v.push_back(b(i, j));
  return v;
}

/// All n x n matrices over F_p with char poly lambda^n.
inline std::vector<Mat<Fp>> enumerate_nilpotent_charpoly(int n, uint64_t p) {
  FieldSpec f = FieldSpec::fp(p);
  std::vector<Mat<Fp>> out;
  uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= p;
  RingPtr lamring = make_ring({"lam"}, f);
  Polynomial<Fp> lam_n = Polynomial<Fp>::variable(lamring, size_t{0}).pow(static_cast<unsigned>(n));
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    Mat<Fp> m = zero_mat<Fp>(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        m(i, j) = Fp::make(static_cast<long long>(c % p), p);
        c /= p;
      }
    if (char_poly_field(m, lamring) == lam_n) out.push_back(std::move(m));
  }
  return out;
}

using Clock = std::chrono::steady_clock;

inline Report finish(Report r, Clock::time_point t0) {
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return r;
}

}  // namespace checks_detail

// ---------------------------------------------------------------------------
// check implementations
// ---------------------------------------------------------------------------

/// Criterion: I(N_{n,e}) equals the prime ideal of the maximal orbit closure.
inline Report check_nilpotent_reduced(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n(), e = p.need_e();
  FieldSpec f = p.field_or(FieldSpec::Q());
  Report r{"nilpotent_reduced", checks_detail::params_json(p, {"n", "e"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  try {
    with_field(f, [&]<class K>() {
      auto nil = nilpotent_scheme_ideal<K>(NilpotentSchemeSpec(n, e), f);
      auto orbit = orbit_closure_ideal<K>(max_partition(n, e), f, p.gopts());
      auto gn = groebner_basis(nil, p.gopts());
      auto go = groebner_basis(make_ideal(gn.ring, [&] {
        std::vector<Polynomial<K>> gs;
        for (auto& g : orbit.gens) gs.push_back(g.with_ring(gn.ring));
        return gs;
      }()), p.gopts());
      if (gn.polys == go.polys) {
        r.witness = "GB(I) = GB(oracle), " + std::to_string(gn.polys.size()) + " elements";
      } else {
        r.status = CheckStatus::fail;
        r.witness = "reduced bases differ: scheme ideal has " + std::to_string(gn.polys.size()) +
                    " elements, prime oracle " + std::to_string(go.polys.size());
      }
    });
  } catch (const TimeoutError&) {
    r.status = CheckStatus::timeout;
    r.witness = "groebner budget exhausted";
  }
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: the wedge/shuffle identity for one ambient Jordan type.
inline Report check_shuffle_identity(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  if (!p.type) throw std::invalid_argument("missing required parameter --type");
  FieldSpec f = p.field_or(FieldSpec::Q());
  Report r{"shuffle_identity", checks_detail::params_json(p, {"type", "n"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  std::string witness;
  bool ok = with_field(f, [&]<class K>() {
    return checks_detail::wedge_identity_holds<K>(*p.type, f, p.n, witness);
  });
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.witness = witness;
  return checks_detail::finish(std::move(r), t0);
}

/// Compound matrices are multiplicative: wedge^k(AB) = wedge^k(A) wedge^k(B).
inline Report check_wedge_multiplicativity(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.get(p.n, 4);
  int trials = p.get(p.trials, 10);
  FieldSpec f = p.field_or(FieldSpec::fp(5));
  Report r{"wedge_multiplicativity", checks_detail::params_json(p, {"n", "trials"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  Rng rng(p.seed);
  with_field(f, [&]<class K>() {
    for (int it = 0; it < trials && r.status == CheckStatus::pass; ++it) {
      Mat<K> A = random_matrix<K>(rng, n, n, f);
      Mat<K> B = random_matrix<K>(rng, n, n, f);
      for (int k = 1; k <= n; ++k) {
        Mat<K> lhs = wedge_matrix_field<K>(A * B, k, f);
        Mat<K> rhs = wedge_matrix_field(A, k, f) * wedge_matrix_field(B, k, f);
        if (!mats_equal<K>(lhs, rhs)) {
          r.status = CheckStatus::fail;
          r.witness = "trial " + std::to_string(it) + ", wedge degree " + std::to_string(k);
          break;
        }
      }
    }
  });
  if (r.status == CheckStatus::pass)
    r.witness = std::to_string(trials) + " random pairs, all wedge degrees";
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: invariant_chart_ideal == shuffle_chart_ideal on every chart.
inline Report check_chart_equality(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  if (!p.type) throw std::invalid_argument("missing required parameter --type");
  int n = p.need_n();
  FieldSpec f = p.field_or(FieldSpec::Q());
  Report r{"chart_equality", checks_detail::params_json(p, {"type", "n"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  try {
    with_field(f, [&]<class K>() {
      auto T = JordanOperator<K>::standard(*p.type, f);
      int count = 0;
      for (auto& chart : all_charts(T.dim(), n)) {
        if (!ideal_equal(invariant_chart_ideal(T, chart), shuffle_chart_ideal(T, chart), p.gopts())) {
          r.status = CheckStatus::fail;
          std::string s;
          for (int v : chart.pivot_rows) s += (s.empty() ? "" : ",") + std::to_string(v);
          r.witness = "ideals differ on chart {" + s + "}";
          return;
        }
        ++count;
      }
      r.witness = "ideal equality on all " + std::to_string(count) + " charts";
    });
  } catch (const TimeoutError&) {
    r.status = CheckStatus::timeout;
    r.witness = "groebner budget exhausted";
  }
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: on the line chart of J_2 the invariance equations alone give the
/// non-reduced (x^2) while the full chart ideal is (x).
inline Report check_nonreduced_contrast(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  FieldSpec f = p.field_or(FieldSpec::Q());
  Report r{"nonreduced_contrast", nlohmann::ordered_json::object(), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  with_field(f, [&]<class K>() {
    auto T = JordanOperator<K>::standard(Partition({2}), f);
    Chart chart(2, 1, {1});
    RingPtr ring = chart_ring(chart, f);
    auto inv_only = invariance_equations(T, chart, ring);
    Polynomial<K> x = Polynomial<K>::variable(ring, size_t{0});
    Ideal<K> expected_sq = make_ideal(ring, std::vector<Polynomial<K>>{x * x});
    Ideal<K> expected_lin = make_ideal(ring, std::vector<Polynomial<K>>{x});
    auto full = invariant_chart_ideal(T, chart);
    bool sq = ideal_equal(make_ideal(ring, inv_only), expected_sq, p.gopts());
    bool lin = ideal_equal(full, expected_lin, p.gopts());
    bool distinct = !ideal_equal(make_ideal(ring, inv_only), full, p.gopts());
    if (sq && lin && distinct) {
      r.witness = "invariance ideal = (x^2), full ideal = (x), not equal";
    } else {
      r.status = CheckStatus::fail;
      r.witness = std::string("unexpected chart ideals: invariance=(x^2) is ") +
                  (sq ? "true" : "false") + ", full=(x) is " + (lin ? "true" : "false");
    }
  });
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: for every sigma with sigma_1 <= e the witness intertwines,
/// has full rank, and phi maps it onto the sigma-orbit.
inline Report check_surjectivity(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  FieldSpec f = p.field_or(FieldSpec::Q());
  Report r{"surjectivity", checks_detail::params_json(p, {"n", "e"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  int checked = 0;
  with_field(f, [&]<class K>() {
    for (int e = p.e ? *p.e : 1; e <= (p.e ? *p.e : n); ++e) {
      auto T = JordanOperator<K>::standard(Partition::rectangle(e, n), f);
      for (auto& sigma : partitions_with_max_part(n, e)) {
        Mat<K> psi = surjectivity_witness<K>(n, e, sigma, f);
        Mat<K> J = jordan_matrix<K>(sigma, f);
        bool intertwines = mats_equal<K>(Mat<K>(T.matrix * psi), Mat<K>(psi * J));
        bool full_rank = rank_of(psi) == n;
        bool image_ok = intertwines && full_rank && jordan_type(phi(T, psi), f) == sigma;
        if (!(intertwines && full_rank && image_ok)) {
          r.status = CheckStatus::fail;
          r.witness = "witness fails for e=" + std::to_string(e) + ", sigma=" + sigma.to_string();
          return;
        }
        ++checked;
      }
    }
  });
  if (r.status == CheckStatus::pass)
    r.witness = std::to_string(checked) + " (e, sigma) cases, image type matches sigma";
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: the intertwiner space has dimension n*blocks at every sampled
/// point of N_{n,e}, and the vee tangent space splits off exactly n*blocks.
inline Report check_relative_dimension(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n(), e = p.need_e();
  int trials = p.get(p.trials, 100);
  FieldSpec f = p.field ? *p.field : FieldSpec::fp(5);
  Report r{"relative_dimension", checks_detail::params_json(p, {"n", "e", "trials"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  Rng rng(p.seed);
  int blocks = n;
  with_field(f, [&]<class K>() {
    auto T = JordanOperator<K>::standard(Partition::rectangle(e, blocks), f);
    int N = T.dim();
    TangentMachine<K> nil(nilpotent_scheme_ideal<K>(NilpotentSchemeSpec(n, e), f));
    TangentMachine<K> vee(vee_scheme_ideal<K>(NilpotentSchemeSpec(n, e), T));
    for (int it = 0; it < trials; ++it) {
      auto [A, psi] = checks_detail::random_vee_point<K>(rng, n, e, T, f, false);
      // nullity of dPsi -> T dPsi - dPsi A
      Mat<K> L = zero_mat<K>(N * n, N * n, f);
      for (int pp = 0; pp < N; ++pp)
        for (int c = 0; c < n; ++c) {
          int col = pp * n + c;
          for (int i = 0; i < N; ++i) L(i * n + c, col) += T.matrix(i, pp);
          for (int j = 0; j < n; ++j) L(pp * n + j, col) -= A(c, j);
        }
      int nullity = N * n - rank_of(L);
      if (nullity != n * blocks) {
        r.status = CheckStatus::fail;
        r.witness = "trial " + std::to_string(it) + ": intertwiner nullity " +
                    std::to_string(nullity) + " != " + std::to_string(n * blocks);
        return;
      }
      std::vector<K> apoint;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) apoint.push_back(A(i, j));
      int tn = nil.nullity_at(apoint);
      int tv = vee.nullity_at(checks_detail::flatten2(A, psi));
      if (tv != tn + n * blocks) {
        r.status = CheckStatus::fail;
        r.witness = "trial " + std::to_string(it) + ": vee tangent " + std::to_string(tv) +
                    " != " + std::to_string(tn) + " + " + std::to_string(n * blocks);
        return;
      }
    }
  });
  if (r.status == CheckStatus::pass)
    r.witness = std::to_string(trials) + " sampled points, nullity and tangent split exact";
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: (1 - C t^-1) * (1 + C t^-1 + ... + C^{n-1} t^-(n-1)) = 1.
inline Report check_ch_inverse_product(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  int trials = p.get(p.trials, 40);
  FieldSpec f = p.field ? *p.field : FieldSpec::fp(5);
  Report r{"ch_inverse_product", checks_detail::params_json(p, {"n", "trials"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  Rng rng(p.seed);
  with_field(f, [&]<class K>() {
    auto parts = all_partitions(n);
    for (int it = 0; it < trials; ++it) {
      const Partition& sigma = parts[rng.below(parts.size())];
      Mat<K> c = checks_detail::random_conjugate<K>(rng, sigma, f);
      auto inv = ch_inverse(c, f);  // throws if the product identity fails
      MatrixPolynomial<K> lin{n, f, {identity_mat<K>(n, f), -c}};
      if (!(lin * inv == MatrixPolynomial<K>::identity(n, f))) {
        r.status = CheckStatus::fail;
        r.witness = "product not identity at trial " + std::to_string(it) + ", sigma=" + sigma.to_string();
        return;
      }
    }
  });
  if (r.status == CheckStatus::pass)
    r.witness = std::to_string(trials) + " nilpotent conjugates, product exact";
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: omega(omega(A)) = A to the requested order.
inline Report check_omega_involution(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  int trials = p.get(p.trials, 50);
  int order = p.get(p.order, 6);
  int deg = p.get(p.deg, 3);
  FieldSpec f = p.field ? *p.field : FieldSpec::fp(7);
  Report r{"omega_involution", checks_detail::params_json(p, {"n", "trials", "order", "deg"}),
           f.to_string(), CheckStatus::pass, "", 0, p.seed};
  Rng rng(p.seed);
  with_field(f, [&]<class K>() {
    for (int it = 0; it < trials; ++it) {
      std::vector<Mat<K>> cs{identity_mat<K>(n, f)};
      for (int d = 1; d <= deg; ++d) cs.push_back(random_matrix<K>(rng, n, n, f));
      MatrixPolynomial<K> a{n, f, std::move(cs)};
      auto back = omega(omega(a, order), order);
      if (!(back.truncated(order) == a.truncated(order))) {
        r.status = CheckStatus::fail;
        r.witness = "omega^2 != id at trial " + std::to_string(it);
        return;
      }
    }
  });
  if (r.status == CheckStatus::pass)
    r.witness = std::to_string(trials) + " series, involution exact to order " + std::to_string(order);
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: omega restricted to the full X(F_p) lands in Z_1 bijectively.
inline Report check_omega_bijection(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  FieldSpec f = p.field ? *p.field : FieldSpec::fp(2);
  if (f.kind != FieldSpec::Kind::prime_field)
    throw std::invalid_argument("omega_bijection: needs a prime field");
  Report r{"omega_bijection", checks_detail::params_json(p, {"n"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  auto cone = checks_detail::enumerate_nilpotent_charpoly(n, f.p);
  std::set<std::string> images;
  for (auto& c : cone) {
    auto a = ch_inverse(c, f);
    auto w = omega(a, 2 * n + 2);
    if (w.degree() > 1) {
      r.status = CheckStatus::fail;
      r.witness = "omega image has degree " + std::to_string(w.degree()) + " > 1";
      return checks_detail::finish(std::move(r), t0);
    }
    auto z1 = w.truncated(1);
    if (!z_membership(z1, 1)) {
      r.status = CheckStatus::fail;
      r.witness = "omega image not in Z_1";
      return checks_detail::finish(std::move(r), t0);
    }
    images.insert(z1.to_string());
  }
  // Z_1(F_p) is exactly {1 + B t^-1 : char_poly(B) = lambda^n}; same count
  if (images.size() != cone.size()) {
    r.status = CheckStatus::fail;
    r.witness = "not injective: " + std::to_string(images.size()) + " images from " +
                std::to_string(cone.size()) + " points";
  } else {
    r.witness = "bijection onto Z_1 on " + std::to_string(cone.size()) + " points";
  }
  return checks_detail::finish(std::move(r), t0);
}

/// Criterion: char poly of the block companion is lambda^{pn} det A(lambda^-1).
inline Report check_companion_charpoly(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  int deg = p.get(p.deg, 1);
  int trials = p.get(p.trials, 25);
  FieldSpec f = p.field ? *p.field : FieldSpec::fp(5);
  Report r{"companion_charpoly", checks_detail::params_json(p, {"n", "deg", "trials"}),
           f.to_string(), CheckStatus::pass, "", 0, p.seed};
  Rng rng(p.seed);
  with_field(f, [&]<class K>() {
    auto parts = all_partitions(n);
    for (int it = 0; it < trials; ++it) {
      // a product of deg unimodular degree-1 factors lies in Z_deg
      MatrixPolynomial<K> a = MatrixPolynomial<K>::identity(n, f);
      for (int d = 0; d < deg; ++d) {
        const Partition& sigma = parts[rng.below(parts.size())];
        Mat<K> c = checks_detail::random_conjugate<K>(rng, sigma, f);
        a = a * MatrixPolynomial<K>{n, f, {identity_mat<K>(n, f), c}};
      }
      if (!z_membership(a, deg)) {
        r.status = CheckStatus::fail;
        r.witness = "sampler produced a non-Z element at trial " + std::to_string(it);
        return;
      }
      companion_model(a, deg);  // throws unless char poly matches the reversal
    }
  });
  if (r.status == CheckStatus::pass)
    r.witness = std::to_string(trials) + " elements of Z_" + std::to_string(deg) + ", char poly matches";
  return checks_detail::finish(std::move(r), t0);
}

/// T_{a,b} is the standard nilpotent of type ((a+b)^n).
inline Report check_lattice_type(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  int a = p.get(p.a, 1), b = p.get(p.b, 1);
  FieldSpec f = p.field_or(FieldSpec::Q());
  Report r{"lattice_type", checks_detail::params_json(p, {"n", "a", "b"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  with_field(f, [&]<class K>() {
    auto T = lattice_nilpotent<K>(LatticeOperatorSpec(n, a, b), f);
    Partition expect = Partition::rectangle(a + b, n);
    if (T.type != expect || jordan_type(T.matrix, f) != expect || T.dim() != n * (a + b)) {
      r.status = CheckStatus::fail;
      r.witness = "T_{" + std::to_string(a) + "," + std::to_string(b) + "} has type " +
                  jordan_type(T.matrix, f).to_string() + ", expected " + expect.to_string();
    } else {
      r.witness = "type " + expect.to_string() + " on " + std::to_string(T.dim()) + " dimensions";
    }
  });
  return checks_detail::finish(std::move(r), t0);
}

/// Point-level content of the big cell identification: x and z membership of
/// the Cayley-Hamilton inverse characterize N_{n,e} exactly.
inline Report check_x_z_membership(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  FieldSpec f = p.field ? *p.field : FieldSpec::fp(2);
  if (f.kind != FieldSpec::Kind::prime_field)
    throw std::invalid_argument("x_z_membership: needs a prime field");
  Report r{"x_z_membership", checks_detail::params_json(p, {"n"}), f.to_string(),
           CheckStatus::pass, "", 0, p.seed};
  auto cone = checks_detail::enumerate_nilpotent_charpoly(n, f.p);
  for (auto& c : cone) {
    auto a = ch_inverse(c, f);
    if (!x_membership(a)) {
      r.status = CheckStatus::fail;
      r.witness = "ch_inverse image not in X";
      return checks_detail::finish(std::move(r), t0);
    }
    for (int e = 1; e <= n; ++e) {
      bool in_ne = mat_is_zero<Fp>(mat_pow(c, static_cast<unsigned>(e), f));
      if (z_membership(a, e - 1) != in_ne) {
        r.status = CheckStatus::fail;
        r.witness = "x/z membership disagrees with C^" + std::to_string(e) + " = 0";
        return checks_detail::finish(std::move(r), t0);
      }
    }
  }
  r.witness = "characterization exact on all " + std::to_string(cone.size()) + " points of X";
  return checks_detail::finish(std::move(r), t0);
}

/// orbit_dim against the independent commutant-nullity oracle.
inline Report check_orbit_dim_oracle(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  Report r{"orbit_dim_oracle", checks_detail::params_json(p, {"n"}), "Q", CheckStatus::pass, "", 0,
           p.seed};
  for (auto& sigma : all_partitions(n)) {
    int expect = n * n - checks_detail::commutant_nullity(sigma);
    if (orbit_dim(sigma) != expect) {
      r.status = CheckStatus::fail;
      r.witness = "orbit_dim(" + sigma.to_string() + ") = " + std::to_string(orbit_dim(sigma)) +
                  ", oracle " + std::to_string(expect);
      return checks_detail::finish(std::move(r), t0);
    }
  }
  r.witness = "all partitions of " + std::to_string(n) + " match the centralizer oracle";
  return checks_detail::finish(std::move(r), t0);
}

/// Dominance below (e^c, f) coincides with the first-part bound.
inline Report check_dominance_grid(const CheckParams& p) {
  auto t0 = checks_detail::Clock::now();
  int n = p.need_n();
  Report r{"dominance_grid", checks_detail::params_json(p, {"n"}), "Q", CheckStatus::pass, "", 0,
           p.seed};
  for (int e = 1; e <= n; ++e) {
    Partition tau = max_partition(n, e);
    for (auto& sigma : all_partitions(n)) {
      if (dominance_leq(sigma, tau) != (sigma.max_part() <= e)) {
        r.status = CheckStatus::fail;
        r.witness = "mismatch at e=" + std::to_string(e) + ", sigma=" + sigma.to_string();
        return checks_detail::finish(std::move(r), t0);
      }
    }
  }
  r.witness = "dominance grid matches the part bound for all e <= " + std::to_string(n);
  return checks_detail::finish(std::move(r), t0);
}

// ---------------------------------------------------------------------------
// registry and suites
// ---------------------------------------------------------------------------

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&](std::string name, std::string desc, std::set<std::string> allowed,
                   Report (*fn)(const CheckParams&)) {
      v.push_back(CheckDef{std::move(name), std::move(desc), std::move(allowed), fn});
    };
    add("nilpotent_reduced", "scheme ideal of N_{n,e} equals the orbit-closure prime ideal",
        {"n", "e", "field", "seed", "timeout_secs"}, &check_nilpotent_reduced);
    add("shuffle_identity", "wedge^n(I+zT) = I + sum z^d sh_d for one ambient type",
        {"type", "n", "field", "seed"}, &check_shuffle_identity);
    add("wedge_multiplicativity", "compound matrices respect products",
        {"n", "trials", "field", "seed"}, &check_wedge_multiplicativity);
    add("chart_equality", "invariant and shuffle chart ideals agree on every chart",
        {"type", "n", "field", "seed", "timeout_secs"}, &check_chart_equality);
    add("nonreduced_contrast", "invariance equations alone give (x^2), the full ideal (x)",
        {"field", "seed"}, &check_nonreduced_contrast);
    add("surjectivity", "witnesses cover every orbit with parts bounded by e",
        {"n", "e", "field", "seed"}, &check_surjectivity);
    add("relative_dimension", "intertwiner nullity and tangent split are exactly n*blocks",
        {"n", "e", "trials", "field", "seed"}, &check_relative_dimension);
    add("ch_inverse_product", "(1 - Ct^-1)(1 + Ct^-1 + ...) = 1 exactly",
        {"n", "trials", "field", "seed"}, &check_ch_inverse_product);
    add("omega_involution", "omega is an involution to the computed order",
        {"n", "trials", "order", "deg", "field", "seed"}, &check_omega_involution);
    add("omega_bijection", "omega maps X(F_p) bijectively onto Z_1(F_p)",
        {"n", "field", "seed"}, &check_omega_bijection);
    add("companion_charpoly", "block companion char poly is the det reversal",
        {"n", "deg", "trials", "field", "seed"}, &check_companion_charpoly);
    add("lattice_type", "T_{a,b} is standard of type ((a+b)^n)",
        {"n", "a", "b", "field", "seed"}, &check_lattice_type);
    add("x_z_membership", "x/z membership characterizes N_{n,e} points",
        {"n", "field", "seed"}, &check_x_z_membership);
    add("orbit_dim_oracle", "orbit_dim matches the centralizer nullity oracle",
        {"n", "seed"}, &check_orbit_dim_oracle);
    add("dominance_grid", "dominance below (e^c,f) equals the part bound",
        {"n", "seed"}, &check_dominance_grid);
    return v;
  }();
  return defs;
}

inline const CheckDef& find_check(const std::string& name) {
  for (auto& d : check_registry())
    if (d.name == name) return d;
  throw std::invalid_argument("unknown check '" + name + "'");
}

/// Validates parameters against the check signature, then runs it.
inline Report run_check(const std::string& name, const CheckParams& params) {
  const CheckDef& def = find_check(name);
  for (auto& k : params.provided)
    if (!def.allowed.count(k))
      throw std::invalid_argument("check '" + name + "' does not take parameter --" + k);
  return def.fn(params);
}

namespace checks_detail {

inline CheckParams base_params(uint64_t seed, double timeout_secs) {
  CheckParams p;
  p.seed = seed;
  p.timeout_secs = timeout_secs;
  return p;
}

}  // namespace checks_detail

/// Named suites; each returns the list of (check, params) pairs it runs.
inline std::vector<std::pair<std::string, CheckParams>> suite_plan(const std::string& name,
                                                                   uint64_t seed,
                                                                   double timeout_secs) {
  using checks_detail::base_params;
  std::vector<std::pair<std::string, CheckParams>> plan;
  auto add = [&](const std::string& check, auto&&... mods) {
    CheckParams p = base_params(seed, timeout_secs);
    (mods(p), ...);
    plan.emplace_back(check, std::move(p));
  };
  auto with_n = [](int v) { return [v](CheckParams& p) { p.n = v; }; };
  auto with_e = [](int v) { return [v](CheckParams& p) { p.e = v; }; };
  auto with_type = [](Partition t) { return [t](CheckParams& p) { p.type = t; }; };
  auto with_field = [](FieldSpec f) { return [f](CheckParams& p) { p.field = f; }; };
  auto with_trials = [](int v) { return [v](CheckParams& p) { p.trials = v; }; };
  auto with_deg = [](int v) { return [v](CheckParams& p) { p.deg = v; }; };

  bool all = name == "all";
  if (name == "core" || all) {
    for (int N = 1; N <= 6; ++N)
      for (auto& type : all_partitions(N)) add("shuffle_identity", with_type(type));
    add("wedge_multiplicativity", with_n(4), with_trials(10));
    for (FieldSpec f : {FieldSpec::Q(), FieldSpec::fp(2)}) {
      add("chart_equality", with_type(Partition({2})), with_n(1), with_field(f));
      add("chart_equality", with_type(Partition({2, 2})), with_n(2), with_field(f));
      add("chart_equality", with_type(Partition({3, 1})), with_n(2), with_field(f));
      add("chart_equality", with_type(Partition({2, 2, 2})), with_n(3), with_field(f));
    }
    add("nonreduced_contrast");
  }
  if (name == "reducedness" || all) {
    for (auto [n, e] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}})
      for (FieldSpec f : {FieldSpec::Q(), FieldSpec::fp(2), FieldSpec::fp(3)})
        add("nilpotent_reduced", with_n(n), with_e(e), with_field(f));
  }
  if (name == "surjectivity" || all) {
    for (int n = 1; n <= 6; ++n) add("surjectivity", with_n(n));
    for (int n = 1; n <= 4; ++n)
      for (int e = 1; e <= n; ++e)
        add("relative_dimension", with_n(n), with_e(e), with_trials(100));
    for (int n = 1; n <= 6; ++n) add("orbit_dim_oracle", with_n(n));
    add("dominance_grid", with_n(8));
  }
  if (name == "laurent" || all) {
    for (int n = 1; n <= 5; ++n) add("ch_inverse_product", with_n(n), with_trials(40));
    for (int n = 1; n <= 4; ++n) add("omega_involution", with_n(n), with_trials(50));
    for (int n : {2, 3})
      for (uint64_t pr : {2ULL, 3ULL}) add("omega_bijection", with_n(n), with_field(FieldSpec::fp(pr)));
    for (int n : {2, 3})
      for (int d : {1, 2}) add("companion_charpoly", with_n(n), with_deg(d), with_trials(25));
    for (int n : {2, 3})
      for (uint64_t pr : {2ULL, 3ULL}) add("x_z_membership", with_n(n), with_field(FieldSpec::fp(pr)));
    add("lattice_type", with_n(1), [](CheckParams& p) { p.a = 1; p.b = 1; });
    add("lattice_type", with_n(2), [](CheckParams& p) { p.a = 1; p.b = 1; });
    add("lattice_type", with_n(3), [](CheckParams& p) { p.a = 2; p.b = 1; });
  }
  if (plan.empty() && !all)
    throw std::invalid_argument("unknown suite '" + name + "' (core|reducedness|surjectivity|laurent|all)");
  return plan;
}

/// Runs a suite; per-check outcomes are isolated (an exception becomes a fail
/// report, never an abort). Reports are ordered by check name and parameters.
inline std::vector<Report> run_suite(const std::string& name, uint64_t seed = 0,
                                     double timeout_secs = 600) {
  std::vector<Report> reports;
  for (auto& [check, params] : suite_plan(name, seed, timeout_secs)) {
    try {
      reports.push_back(run_check(check, params));
    } catch (const std::exception& e) {
      Report r{check, nlohmann::ordered_json::object(), "", CheckStatus::fail,
               std::string("exception: ") + e.what(), 0, seed};
      reports.push_back(std::move(r));
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params.dump() + a.field < b.params.dump() + b.field;
  });
  return reports;
}

}  // namespace nilred
