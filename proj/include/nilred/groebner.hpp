#pragma once

#include <chrono>
#include <set>
#include <stdexcept>
#include <vector>

#include "nilred/linalg.hpp"
#include "nilred/orbits.hpp"
#include "nilred/polynomial.hpp"
#include "nilred/univariate.hpp"

namespace nilred {

/// A Groebner computation that exceeds its budget throws this; callers report
/// it as a first-class `timeout` outcome, never as an answer.
struct TimeoutError : std::runtime_error {
  TimeoutError() : std::runtime_error("groebner: computation timed out") {}
};

struct GroebnerOptions {
  double timeout_secs = 600;
};

template <class K>
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial<K>> gens;
};

template <class K>
Ideal<K> make_ideal(RingPtr ring, std::vector<Polynomial<K>> gens) {
  std::vector<Polynomial<K>> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("make_ideal: generator from another ring");
    kept.push_back(std::move(g));
  }
  return Ideal<K>{std::move(ring), std::move(kept)};
}

/// Reduced Groebner basis: unit leading coefficients over F_p, primitive
/// integer generators with positive leading coefficient over Q; no term of any
/// element divisible by another element's leading term; sorted ascending by
/// leading monomial.
template <class K>
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial<K>> polys;

  bool is_unit_ideal() const {
    return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring, b.ring) && a.polys == b.polys;
  }
};

namespace gbdetail {

inline BigInt rational_content(const std::vector<Rational>& cs) {
  BigInt g(0);
  for (const auto& c : cs) {
    g = BigInt::gcd(g, c.num());
    if (g.is_one()) break;
  }
  return g;
}

/// Scaling that makes a polynomial canonical as a basis element:
/// monic over F_p; integer, content-free, positive leading coefficient over Q.
template <class K>
Polynomial<K> normalize_basis_poly(const Polynomial<K>& f) {
  if (f.is_zero()) return f;
  if constexpr (std::is_same_v<K, Rational>) {
    BigInt den(1);
    std::vector<Rational> cs;
    cs.reserve(f.nterms());
    for (size_t t = 0; t < f.nterms(); ++t) {
      cs.push_back(f.coeff(t));
      const BigInt& d = cs.back().den();
      den = den / BigInt::gcd(den, d) * d;  // lcm
    }
    for (auto& c : cs) c = c * Rational(den);
    BigInt content = rational_content(cs);
    Rational scale = Rational(den) / Rational(content);
    if (f.lead_coeff().sign() < 0) scale = -scale;
    return f * scale;
  } else {
    return f.monic();
  }
}

template <class K>
struct ReduceResult {
  Polynomial<K> poly;  // scaled normal form
  K scale;             // poly == scale * NF(f); scale == 1 over F_p
};

struct Deadline {
  std::chrono::steady_clock::time_point at;
  bool enabled;

  explicit Deadline(const GroebnerOptions& opts) {
    enabled = opts.timeout_secs > 0;
    if (enabled)
      at = std::chrono::steady_clock::now() +
           std::chrono::microseconds(static_cast<long long>(opts.timeout_secs * 1e6));
  }

  void check() const {
    if (enabled && std::chrono::steady_clock::now() > at) throw TimeoutError();
  }
};

inline uint64_t support_mask(ExpSpan e) {
  uint64_t m = 0;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i]) m |= 1ULL << (i & 63);
  return m;
}

/// Full normal form of f against the reducers; cancels the highest reducible
/// term each step. Over Q the reduction cross-multiplies to stay integral and
/// the cumulative scale is tracked so callers can recover the exact remainder.
template <class K>
ReduceResult<K> reduce_full(Polynomial<K> f, const std::vector<Polynomial<K>>& basis,
                            const std::vector<char>& alive, const Deadline& deadline) {
  const size_t nb = basis.size();
  std::vector<uint64_t> masks(nb);
  std::vector<long> degs(nb);
  for (size_t b = 0; b < nb; ++b)
    if (alive[b] && !basis[b].is_zero()) {
      masks[b] = support_mask(basis[b].lead_exps());
      degs[b] = mono_degree(basis[b].lead_exps());
    }
  K scale(1);
  size_t from = 0;  // terms before this index are known irreducible
  std::vector<Exp> quot(f.nvars());
  int steps = 0;
  while (true) {
    if (((++steps) & 63) == 0) deadline.check();
    size_t t = from;
    size_t hit = static_cast<size_t>(-1);
    for (; t < f.nterms(); ++t) {
      ExpSpan te = f.exps(t);
      uint64_t tm = support_mask(te);
      long td = mono_degree(te);
      for (size_t b = 0; b < nb; ++b) {
        if (!alive[b]) continue;
        if ((masks[b] & ~tm) != 0 || degs[b] > td) continue;
        if (mono_divides(basis[b].lead_exps(), te)) {
          hit = b;
          break;
        }
      }
      if (hit != static_cast<size_t>(-1)) break;
    }
    if (hit == static_cast<size_t>(-1)) break;
    from = t;
    const Polynomial<K>& g = basis[hit];
    mono_div(f.exps(t), g.lead_exps(), quot.data());
    if constexpr (std::is_same_v<K, Rational>) {
      K lg = g.lead_coeff();
      K lf = f.coeff(t);
      f = Polynomial<K>::combine(lg, f, -lf, quot, g);
      scale = scale * lg;
    } else {
      // reducers are monic
      f = Polynomial<K>::combine(K(1), f, -f.coeff(t), quot, g);
    }
  }
  if constexpr (std::is_same_v<K, Rational>) {
    // keep the remainder integral and small; fold the factor into scale
    if (!f.is_zero()) {
      Polynomial<K> norm = normalize_basis_poly(f);
      // norm == c*f for the (positive or negative) scalar c = lead(norm)/lead(f)
      K c = norm.lead_coeff() / f.lead_coeff();
      f = std::move(norm);
      scale = scale * c;
    }
  }
  return {std::move(f), std::move(scale)};
}

}  // namespace gbdetail

/// Buchberger with the coprimality and chain criteria and a (degree, pair
/// index)-ordered queue. Deterministic for fixed input and order.
template <class K>
GroebnerBasis<K> groebner_basis(const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  using P = Polynomial<K>;
  const RingPtr& ring = ideal.ring;
  gbdetail::Deadline deadline(opts);

  std::vector<P> basis;
  std::vector<char> alive;
  auto unit_basis = [&] {
    return GroebnerBasis<K>{ring, {P::one(ring)}};
  };
  for (const auto& g : ideal.gens) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return unit_basis();
    basis.push_back(gbdetail::normalize_basis_poly(g));
    alive.push_back(1);
  }
  if (basis.empty()) return GroebnerBasis<K>{ring, {}};

  struct PairKey {
    long deg;
    int i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> pending;
  auto push_pair = [&](int i, int j) {
    std::vector<Exp> l(ring->nvars());
    mono_lcm(basis[i].lead_exps(), basis[j].lead_exps(), l.data());
    queue.insert(PairKey{mono_degree(l), i, j});
    pending.insert({i, j});
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < j; ++i) push_pair(i, j);

  std::vector<Exp> lcm(ring->nvars()), mi(ring->nvars()), mj(ring->nvars());
  while (!queue.empty()) {
    deadline.check();
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    const P& fi = basis[pk.i];
    const P& fj = basis[pk.j];
    if (mono_coprime(fi.lead_exps(), fj.lead_exps())) continue;  // product criterion
    mono_lcm(fi.lead_exps(), fj.lead_exps(), lcm.data());
    // chain criterion: some other leading term divides the lcm and both
    // associated pairs were already treated
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
      if (k == pk.i || k == pk.j || !alive[k]) continue;
      if (!mono_divides(basis[k].lead_exps(), lcm)) continue;
      auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(pk.i, k)) && !pending.count(key(pk.j, k))) skip = true;
    }
    if (skip) continue;
    mono_div(lcm, fi.lead_exps(), mi.data());
    mono_div(lcm, fj.lead_exps(), mj.data());
    // S-polynomial lc_j * x^mi * f_i - lc_i * x^mj * f_j
    P shifted_i = P::combine(K(0), P::zero(ring), fj.lead_coeff(), mi, fi);
    P s = P::combine(K(1), shifted_i, -fi.lead_coeff(), mj, fj);
    auto red = gbdetail::reduce_full(std::move(s), basis, alive, deadline);
    if (red.poly.is_zero()) continue;
    if (red.poly.is_constant()) return unit_basis();
    P nf = gbdetail::normalize_basis_poly(red.poly);
    int t = static_cast<int>(basis.size());
    basis.push_back(std::move(nf));
    alive.push_back(1);
    for (int b = 0; b < t; ++b) push_pair(b, t);
  }

  // minimal basis: drop a if some other element's leading term divides LT(a);
  // on equal leading terms the earlier index survives
  std::vector<char> keep(basis.size(), 1);
  auto lt_equal = [&](size_t a, size_t b) {
    return ring->order.cmp(basis[a].lead_exps(), basis[b].lead_exps()) == 0;
  };
  for (size_t a = 0; a < basis.size(); ++a) {
    for (size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      if (mono_divides(basis[b].lead_exps(), basis[a].lead_exps()) && (!lt_equal(a, b) || b < a)) {
        keep[a] = 0;
        break;
      }
    }
  }
  // tail-reduce every survivor against the others
  std::vector<P> final_polys;
  std::vector<size_t> kept_idx;
  for (size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) kept_idx.push_back(a);
  for (size_t a : kept_idx) {
    std::vector<P> others;
    std::vector<char> oalive;
    for (size_t b : kept_idx)
      if (b != a) {
        others.push_back(basis[b]);
        oalive.push_back(1);
      }
    auto red = gbdetail::reduce_full(basis[a], others, oalive, deadline);
    final_polys.push_back(gbdetail::normalize_basis_poly(red.poly));
  }
  std::sort(final_polys.begin(), final_polys.end(), [&](const P& x, const P& y) {
    return ring->order.cmp(x.lead_exps(), y.lead_exps()) < 0;
  });
  return GroebnerBasis<K>{ring, std::move(final_polys)};
}

/// Exact normal form against a Groebner basis (remainder of full reduction).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb,
                          const GroebnerOptions& opts = {}) {
  gbdetail::Deadline deadline(opts);
  std::vector<char> alive(gb.polys.size(), 1);
  auto red = gbdetail::reduce_full(f, gb.polys, alive, deadline);
  if (red.poly.is_zero()) return red.poly;
  return red.poly * (K(1) / red.scale);
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb,
                  const GroebnerOptions& opts = {}) {
  return normal_form(f, gb, opts).is_zero();
}

/// True iff the reduced bases under the ring's order coincide.
template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& opts = {}) {
  if (!same_ring(a.ring, b.ring)) throw std::invalid_argument("ideal_equal: different rings");
  GroebnerBasis<K> ga = groebner_basis(a, opts);
  GroebnerBasis<K> gb = groebner_basis(b, opts);
  return ga.polys == gb.polys;
}

/// I intersected with the subring excluding drop_vars, via a block order.
/// The result lives in the same ring; its generators avoid the dropped
/// variables.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<size_t>& drop_vars,
                   const GroebnerOptions& opts = {}) {
  const RingPtr& ring = ideal.ring;
  std::vector<uint8_t> mask(ring->nvars(), 0);
  for (size_t v : drop_vars) {
    if (v >= ring->nvars()) throw std::invalid_argument("eliminate: variable index out of range");
    mask[v] = 1;
  }
  if (drop_vars.empty()) return ideal;
  RingPtr block_ring = make_ring(ring->vars, ring->field, MonomialOrder::block_elim(mask));
  std::vector<Polynomial<K>> lifted;
  for (auto& g : ideal.gens) lifted.push_back(g.with_ring(block_ring));
  GroebnerBasis<K> gb = groebner_basis(make_ideal(block_ring, std::move(lifted)), opts);
  std::vector<Polynomial<K>> kept;
  for (auto& p : gb.polys) {
    bool uses_dropped = false;
    for (size_t t = 0; t < p.nterms() && !uses_dropped; ++t) {
      auto e = p.exps(t);
      for (size_t v : drop_vars)
        if (e[v]) {
          uses_dropped = true;
          break;
        }
    }
    if (!uses_dropped) kept.push_back(p.with_ring(ring));
  }
  return make_ideal(ring, std::move(kept));
}

/// Saturation I : h^inf by the extra-variable trick: add y*h - 1, eliminate y.
template <class K>
Ideal<K> saturation(const Ideal<K>& ideal, const Polynomial<K>& h,
                    const GroebnerOptions& opts = {}) {
  const RingPtr& ring = ideal.ring;
  std::string aux = "sat_aux";
  while (ring->var_index(aux) != Ring::npos) aux += "_";
  std::vector<std::string> vars = ring->vars;
  vars.push_back(aux);
  RingPtr ext = make_ring(vars, ring->field);
  std::vector<size_t> var_map(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) var_map[i] = i;
  std::vector<Polynomial<K>> gens;
  for (auto& g : ideal.gens) gens.push_back(g.map_to_ring(ext, var_map));
  size_t yv = ext->nvars() - 1;
  gens.push_back(Polynomial<K>::variable(ext, yv) * h.map_to_ring(ext, var_map) -
                 Polynomial<K>::one(ext));
  Ideal<K> big = make_ideal(ext, std::move(gens));
  Ideal<K> elim = eliminate(big, {yv}, opts);
  std::vector<size_t> back(ext->nvars(), Ring::npos);
  for (size_t i = 0; i < ring->nvars(); ++i) back[i] = i;
  std::vector<Polynomial<K>> out;
  for (auto& g : elim.gens) out.push_back(g.map_to_ring(ring, back));
  return make_ideal(ring, std::move(out));
}

/// Krull dimension from the staircase: the size of a maximal variable set
/// containing the support of no leading term. Returns -1 for the unit ideal.
template <class K>
int dimension(const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  // always measure the staircase under grevlex
  RingPtr ring = ideal.ring;
  Ideal<K> work = ideal;
  if (!(ring->order == MonomialOrder::grevlex())) {
    RingPtr g = make_ring(ring->vars, ring->field);
    std::vector<Polynomial<K>> gens;
    for (auto& p : ideal.gens) gens.push_back(p.with_ring(g));
    work = make_ideal(g, std::move(gens));
  }
  GroebnerBasis<K> gb = groebner_basis(work, opts);
  if (gb.is_unit_ideal()) return -1;
  size_t nv = ideal.ring->nvars();
  if (nv > 63) throw std::invalid_argument("dimension: too many variables");
  std::set<uint64_t> mask_set;
  for (auto& p : gb.polys) mask_set.insert(gbdetail::support_mask(p.lead_exps()));
  // keep only inclusion-minimal supports (hitting one hits its supersets)
  std::vector<uint64_t> masks;
  for (uint64_t m : mask_set) {
    bool redundant = false;
    for (uint64_t o : mask_set)
      if (o != m && (o & ~m) == 0) {
        redundant = true;
        break;
      }
    if (!redundant) masks.push_back(m);
  }
  // minimal hitting set of the supports; dim = nvars - |hitting set|
  int best = static_cast<int>(nv) + 1;
  auto dfs = [&](auto&& self, uint64_t chosen, int count) -> void {
    if (count >= best) return;
    uint64_t unhit = 0;
    for (uint64_t m : masks)
      if ((m & chosen) == 0) {
        unhit = m;
        break;
      }
    if (unhit == 0) {
      best = count;
      return;
    }
    for (size_t v = 0; v < nv; ++v)
      if (unhit & (1ULL << v)) self(self, chosen | (1ULL << v), count + 1);
  };
  dfs(dfs, 0, 0);
  return static_cast<int>(nv) - best;
}

enum class RadicalVerdict { radical, not_radical, inconclusive };

/// Seidenberg test for a zero-dimensional ideal: radical iff the univariate
/// eliminant of every variable is squarefree. Returns inconclusive when a
/// derivative vanishes (possible over F_p only).
template <class K>
RadicalVerdict zero_dim_radical_test(const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  GroebnerBasis<K> gb = groebner_basis(ideal, opts);
  if (dimension(ideal, opts) != 0)
    throw std::invalid_argument("zero_dim_radical_test: ideal is not zero-dimensional");
  const RingPtr& ring = ideal.ring;
  size_t nv = ring->nvars();
  const FieldSpec& spec = ring->field;

  // standard monomial basis of the quotient
  std::set<std::vector<Exp>> std_monos;
  std::vector<std::vector<Exp>> frontier{std::vector<Exp>(nv, 0)};
  auto reducible = [&](const std::vector<Exp>& e) {
    for (auto& p : gb.polys)
      if (mono_divides(p.lead_exps(), ExpSpan(e.data(), e.size()))) return true;
    return false;
  };
  while (!frontier.empty()) {
    auto e = frontier.back();
    frontier.pop_back();
    if (std_monos.count(e) || reducible(e)) continue;
    std_monos.insert(e);
    if (std_monos.size() > 100000) throw std::runtime_error("zero_dim_radical_test: quotient too large");
    for (size_t v = 0; v < nv; ++v) {
      auto e2 = e;
      ++e2[v];
      frontier.push_back(std::move(e2));
    }
  }
  std::map<std::vector<Exp>, int> mono_index;
  for (auto& e : std_monos) mono_index.emplace(e, static_cast<int>(mono_index.size()));
  int dim = static_cast<int>(mono_index.size());

  auto to_vec = [&](const Polynomial<K>& f) {
    Mat<K> v = zero_mat<K>(dim, 1, spec);
    for (size_t t = 0; t < f.nterms(); ++t) {
      std::vector<Exp> e(f.exps(t).begin(), f.exps(t).end());
      auto it = mono_index.find(e);
      if (it == mono_index.end()) throw std::logic_error("zero_dim_radical_test: non-standard monomial in NF");
      v(it->second, 0) = f.coeff(t);
    }
    return v;
  };

  bool saw_inconclusive = false;
  for (size_t v = 0; v < nv; ++v) {
    // minimal polynomial of x_v on the quotient: first linear dependence
    // among NF(x_v^k)
    Polynomial<K> xv = Polynomial<K>::variable(ring, v);
    std::vector<Polynomial<K>> nfs{normal_form(Polynomial<K>::one(ring), gb, opts)};
    UniPoly<K> minpoly;
    for (int k = 1; k <= dim + 1; ++k) {
      nfs.push_back(normal_form(nfs.back() * xv, gb, opts));
      Mat<K> m = zero_mat<K>(dim, k + 1, spec);
      for (int c = 0; c <= k; ++c) m.col(c) = to_vec(nfs[c]);
      Mat<K> ker = kernel_basis(m, spec);
      if (ker.cols() > 0) {
        // a dependence exists; take any kernel vector with its top nonzero
        // entry highest => minimal degree relation
        minpoly.c.clear();
        for (int i = 0; i <= k; ++i) minpoly.c.push_back(ker(i, 0));
        minpoly.trim();
        break;
      }
    }
    if (minpoly.is_zero()) throw std::logic_error("zero_dim_radical_test: no minimal polynomial found");
    UniPoly<K> dmin = minpoly.derivative(spec);
    if (dmin.is_zero()) {
      saw_inconclusive = true;
      continue;
    }
    UniPoly<K> g = UniPoly<K>::gcd(minpoly, dmin);
    if (g.degree() > 0) return RadicalVerdict::not_radical;
  }
  return saw_inconclusive ? RadicalVerdict::inconclusive : RadicalVerdict::radical;
}

/// Prime ideal of the conjugation-orbit closure of the Jordan matrix J_sigma:
/// eliminate the g and y variables from {X g - g J_sigma, y det(g) - 1}. The
/// result lives in the n^2-variable matrix-entry ring a_i_j.
template <class K>
Ideal<K> orbit_closure_ideal(const Partition& sigma, const FieldSpec& field,
                             const GroebnerOptions& opts = {}) {
  int n = sigma.size_n();
  std::vector<std::string> vars = matrix_var_names("g", n, n);
  vars.push_back("y");
  auto avars = matrix_var_names("a", n, n);
  vars.insert(vars.end(), avars.begin(), avars.end());
  size_t ng = static_cast<size_t>(n) * n;
  std::vector<uint8_t> mask(vars.size(), 0);
  for (size_t i = 0; i <= ng; ++i) mask[i] = 1;  // g block and y
  RingPtr big = make_ring(vars, field, MonomialOrder::block_elim(mask));

  PolyMat<K> X = generic_matrix<K>(big, "a", n, n);
  PolyMat<K> g = generic_matrix<K>(big, "g", n, n);
  PolyMat<K> J = lift_to_poly(jordan_matrix<K>(sigma, field), big);
  PolyMat<K> rel = X * g - g * J;
  std::vector<Polynomial<K>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gens.push_back(rel(i, j));
  Polynomial<K> y = Polynomial<K>::variable(big, std::string("y"));
  gens.push_back(y * bareiss_det(g, big) - Polynomial<K>::one(big));

  GroebnerBasis<K> gb = groebner_basis(make_ideal(big, std::move(gens)), opts);

  RingPtr aring = make_ring(avars, field);
  std::vector<size_t> var_map(big->nvars(), Ring::npos);
  for (size_t i = 0; i < avars.size(); ++i) var_map[ng + 1 + i] = i;
  std::vector<Polynomial<K>> out;
  for (auto& p : gb.polys) {
    bool pure = true;
    for (size_t t = 0; t < p.nterms() && pure; ++t) {
      auto e = p.exps(t);
      for (size_t v = 0; v <= ng; ++v)
        if (e[v]) {
          pure = false;
          break;
        }
    }
    if (pure) out.push_back(p.map_to_ring(aring, var_map));
  }
  return make_ideal(aring, std::move(out));
}

}  // namespace nilred
