#pragma once

#include <optional>
#include <vector>

#include "nilred/polynomial.hpp"

namespace nilred {

/// Dense univariate view: coefficients ascending by degree, no trailing zeros.
template <class K>
struct UniPoly {
  std::vector<K> c;

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const K& lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  UniPoly monic() const {
    UniPoly r = *this;
    if (r.is_zero()) return r;
    K inv = K(1) / r.lead();
    for (auto& x : r.c) x = x * inv;
    return r;
  }

  UniPoly derivative(const FieldSpec& spec) const {
    UniPoly r;
    for (size_t k = 1; k < c.size(); ++k)
      r.c.push_back(c[k] * field_from_int<K>(static_cast<long long>(k), spec));
    r.trim();
    return r;
  }

  static UniPoly rem(UniPoly a, const UniPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
      K f = a.lead() / b.lead();
      size_t shift = static_cast<size_t>(a.degree() - b.degree());
      for (size_t i = 0; i < b.c.size(); ++i)
        a.c[i + shift] = a.c[i + shift] - f * b.c[i];
      a.trim();
    }
    return a;
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      UniPoly r = rem(std::move(a), b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Exact quotient; remainder must be zero.
  static UniPoly quo_exact(UniPoly a, const UniPoly& b) {
    UniPoly q;
    q.c.assign(a.is_zero() ? 0 : static_cast<size_t>(std::max<long>(0, a.degree() - b.degree() + 1)), K(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
      K f = a.lead() / b.lead();
      size_t shift = static_cast<size_t>(a.degree() - b.degree());
      q.c[shift] = f;
      for (size_t i = 0; i < b.c.size(); ++i)
        a.c[i + shift] = a.c[i + shift] - f * b.c[i];
      a.trim();
    }
    if (!a.is_zero()) throw std::domain_error("UniPoly: not exactly divisible");
    q.trim();
    return q;
  }
};

/// Extracts the dense view of a polynomial univariate in ring variable var.
template <class K>
UniPoly<K> to_univariate(const Polynomial<K>& f, size_t var) {
  UniPoly<K> u;
  for (size_t t = 0; t < f.nterms(); ++t) {
    auto e = f.exps(t);
    for (size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("to_univariate: polynomial is not univariate");
    size_t k = e[var];
    if (u.c.size() <= k) u.c.resize(k + 1, K(0));
    u.c[k] = f.coeff(t);
  }
  u.trim();
  return u;
}

template <class K>
Polynomial<K> from_univariate(const UniPoly<K>& u, const RingPtr& ring, size_t var) {
  Polynomial<K> acc = Polynomial<K>::zero(ring);
  std::vector<Exp> e(ring->nvars(), 0);
  for (size_t k = 0; k < u.c.size(); ++k) {
    if (u.c[k].is_zero()) continue;
    e[var] = static_cast<Exp>(k);
    acc = acc + Polynomial<K>::term(ring, e, u.c[k]);
  }
  return acc;
}

/// f / gcd(f, f') for a nonzero univariate polynomial. Returns nullopt
/// (inconclusive) when f' vanishes, which can happen over F_p.
template <class K>
std::optional<Polynomial<K>> squarefree_part(const Polynomial<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  size_t var = 0;
  bool found = false;
  for (size_t t = 0; t < f.nterms() && !found; ++t) {
    auto e = f.exps(t);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        var = i;
        found = true;
        break;
      }
  }
  UniPoly<K> u = to_univariate(f, var);
  UniPoly<K> du = u.derivative(f.ring()->field);
  if (du.is_zero()) return std::nullopt;
  UniPoly<K> g = UniPoly<K>::gcd(u, du);
  UniPoly<K> sf = UniPoly<K>::quo_exact(std::move(u), g);
  return from_univariate(sf, f.ring(), var);
}

}  // namespace nilred
