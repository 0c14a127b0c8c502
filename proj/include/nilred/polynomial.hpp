#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilred/ring.hpp"

namespace nilred {

namespace detail {

template <class K>
inline K materialize_coeff(const K& c, const FieldSpec&) {
  return c;
}
template <>
inline Fp materialize_coeff<Fp>(const Fp& c, const FieldSpec& spec) {
  if (!c.deferred()) return c;
  return Fp::make(0, spec.p) + c;
}

template <class K>
inline bool coeff_is_negative(const K&) {
  return false;
}
template <>
inline bool coeff_is_negative<Rational>(const Rational& c) {
  return c.sign() < 0;
}

template <class K>
inline K coeff_abs(const K& c) {
  return c;
}
template <>
inline Rational coeff_abs<Rational>(const Rational& c) {
  return c.sign() < 0 ? -c : c;
}

}  // namespace detail

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// one flat exponent array (nterms x nvars), sorted strictly descending by the
/// ring's monomial order; canonical form is unique per (ring, order).
///
/// A polynomial with a null ring is a "universal" constant (the 0 or 1 that
/// generic code conjures before a ring is known); it adopts the ring of the
/// first ringed operand it meets.
template <class K>
class Polynomial {
public:
  Polynomial() = default;

  /// Universal constant; adopts a ring on first contact.
  explicit Polynomial(long long c) {
    if (c != 0) {
      coeffs_.push_back(K(c));
    }
  }

  static Polynomial zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
  }

  static Polynomial constant(RingPtr ring, K c) {
    Polynomial p;
    c = detail::materialize_coeff(c, ring->field);
    p.ring_ = std::move(ring);
    if (!c.is_zero()) {
      p.coeffs_.push_back(std::move(c));
      p.exps_.assign(p.ring_->nvars(), 0);
    }
    return p;
  }

  static Polynomial one(RingPtr ring) {
    return constant(std::move(ring), K(1));
  }

  static Polynomial variable(RingPtr ring, size_t idx) {
    if (idx >= ring->nvars()) throw std::invalid_argument("Polynomial::variable: index out of range");
    Polynomial p;
    p.ring_ = std::move(ring);
    p.coeffs_.push_back(field_from_int<K>(1, p.ring_->field));
    p.exps_.assign(p.ring_->nvars(), 0);
    p.exps_[idx] = 1;
    return p;
  }

  static Polynomial variable(const RingPtr& ring, const std::string& name) {
    size_t idx = ring->var_index(name);
    if (idx == Ring::npos) throw std::invalid_argument("Polynomial::variable: unknown variable '" + name + "'");
    return variable(ring, idx);
  }

  /// Single term c * x^exps.
  static Polynomial term(RingPtr ring, ExpSpan exps, K c) {
    Polynomial p;
    c = detail::materialize_coeff(c, ring->field);
    p.ring_ = std::move(ring);
    if (exps.size() != p.ring_->nvars()) throw std::invalid_argument("Polynomial::term: exponent size mismatch");
    if (!c.is_zero()) {
      p.coeffs_.push_back(std::move(c));
      p.exps_.assign(exps.begin(), exps.end());
    }
    return p;
  }

  /// Builds from an unordered term buffer (flat exps, parallel coeffs).
  static Polynomial from_terms(RingPtr ring, std::vector<Exp> exps, std::vector<K> coeffs) {
    Polynomial p;
    p.ring_ = std::move(ring);
    p.exps_ = std::move(exps);
    p.coeffs_ = std::move(coeffs);
    p.canonicalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  bool universal() const { return ring_ == nullptr; }
  size_t nvars() const { return ring_ ? ring_->nvars() : 0; }
  size_t nterms() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && mono_is_one(exps(0)));
  }

  /// Constant value of a constant polynomial (0 for the zero polynomial).
  K constant_value() const {
    if (coeffs_.empty()) return K(0);
    if (!is_constant()) throw std::logic_error("Polynomial: not a constant");
    return coeffs_[0];
  }

  ExpSpan exps(size_t t) const { return ExpSpan(exps_.data() + t * nvars(), nvars()); }
  const K& coeff(size_t t) const { return coeffs_[t]; }

  ExpSpan lead_exps() const {
    if (is_zero()) throw std::logic_error("Polynomial: leading term of zero");
    return exps(0);
  }
  const K& lead_coeff() const {
    if (is_zero()) throw std::logic_error("Polynomial: leading coefficient of zero");
    return coeffs_[0];
  }

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (size_t t = 0; t < nterms(); ++t) d = std::max(d, mono_degree(exps(t)));
    return d;
  }

  long degree_in(size_t var) const {
    long d = -1;
    for (size_t t = 0; t < nterms(); ++t) d = std::max(d, static_cast<long>(exps(t)[var]));
    return d;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combined(K(1), a, K(1), b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combined(K(1), a, K(-1), b);
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    auto [x, y] = align(a, b);
    if (x.is_zero() || y.is_zero()) return zero_like(x, y);
    Polynomial r;
    r.ring_ = x.ring_ ? x.ring_ : y.ring_;
    size_t nv = x.nvars();
    r.exps_.resize(x.nterms() * y.nterms() * nv);
    r.coeffs_.reserve(x.nterms() * y.nterms());
    size_t t = 0;
    for (size_t i = 0; i < x.nterms(); ++i)
      for (size_t j = 0; j < y.nterms(); ++j) {
        mono_mul(x.exps(i), y.exps(j), r.exps_.data() + t * nv);
        r.coeffs_.push_back(x.coeff(i) * y.coeff(j));
        ++t;
      }
    r.canonicalize();
    return r;
  }

  /// alpha*f + beta*x^mono*g; the reduction workhorse. mono may be empty (no shift).
  static Polynomial combine(const K& alpha, const Polynomial& f, const K& beta, ExpSpan mono,
                            const Polynomial& g) {
    auto [x, y] = align(f, g);
    Polynomial r;
    r.ring_ = x.ring_ ? x.ring_ : y.ring_;
    size_t nv = x.nvars();
    std::vector<Exp> shifted;
    const Exp* gep = y.exps_.data();
    if (!mono.empty() && !mono_is_one(mono)) {
      shifted.resize(y.nterms() * nv);
      for (size_t j = 0; j < y.nterms(); ++j) mono_mul(y.exps(j), mono, shifted.data() + j * nv);
      gep = shifted.data();
    }
    const MonomialOrder& ord = order_of(x, y);
    size_t i = 0, j = 0;
    r.exps_.reserve((x.nterms() + y.nterms()) * nv);
    r.coeffs_.reserve(x.nterms() + y.nterms());
    auto push = [&](ExpSpan e, K c) {
      if (c.is_zero()) return;
      r.exps_.insert(r.exps_.end(), e.begin(), e.end());
      r.coeffs_.push_back(std::move(c));
    };
    while (i < x.nterms() || j < y.nterms()) {
      if (j == y.nterms()) {
        push(x.exps(i), alpha * x.coeff(i));
        ++i;
      } else if (i == x.nterms()) {
        push(ExpSpan(gep + j * nv, nv), beta * y.coeff(j));
        ++j;
      } else {
        ExpSpan ge(gep + j * nv, nv);
        int c = ord.cmp(x.exps(i), ge);
        if (c > 0) {
          push(x.exps(i), alpha * x.coeff(i));
          ++i;
        } else if (c < 0) {
          push(ge, beta * y.coeff(j));
          ++j;
        } else {
          push(ge, alpha * x.coeff(i) + beta * y.coeff(j));
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const K& s) {
    Polynomial r;
    r.ring_ = a.ring_;
    size_t nv = a.nvars();
    for (size_t t = 0; t < a.nterms(); ++t) {
      K c = a.coeff(t) * s;
      if (c.is_zero()) continue;
      auto e = a.exps(t);
      r.exps_.insert(r.exps_.end(), e.begin(), e.end());
      r.coeffs_.push_back(std::move(c));
    }
    (void)nv;
    return r;
  }
  friend Polynomial operator*(const K& s, const Polynomial& a) { return a * s; }

  Polynomial pow(unsigned e) const {
    Polynomial base = *this;
    Polynomial acc = ring_ ? one(ring_) : Polynomial(1);
    while (e) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    auto [x, y] = align(a, b);
    if (x.ring_ && y.ring_ && !same_ring(x.ring_, y.ring_)) return false;
    return x.exps_ == y.exps_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial derivative(size_t var) const {
    Polynomial r;
    r.ring_ = ring_;
    size_t nv = nvars();
    for (size_t t = 0; t < nterms(); ++t) {
      Exp e = exps(t)[var];
      if (e == 0) continue;
      K c = coeff(t) * field_from_int<K>(static_cast<long long>(e), ring_->field);
      if (c.is_zero()) continue;  // characteristic divides the exponent
      size_t base = r.exps_.size();
      auto src = exps(t);
      r.exps_.insert(r.exps_.end(), src.begin(), src.end());
      r.exps_[base + var] = static_cast<Exp>(e - 1);
      r.coeffs_.push_back(std::move(c));
    }
    (void)nv;
    return r;  // term order is preserved by dividing each term by the same variable
  }

  /// Coefficient of var^k, as a polynomial with that variable cleared.
  Polynomial coeff_of(size_t var, Exp k) const {
    Polynomial r;
    r.ring_ = ring_;
    for (size_t t = 0; t < nterms(); ++t) {
      if (exps(t)[var] != k) continue;
      size_t base = r.exps_.size();
      auto src = exps(t);
      r.exps_.insert(r.exps_.end(), src.begin(), src.end());
      r.exps_[base + var] = 0;
      r.coeffs_.push_back(coeff(t));
    }
    return r;
  }

  /// Full evaluation at a point, one value per ring variable.
  K evaluate(const std::vector<K>& point) const {
    if (ring_ && point.size() != nvars()) throw std::invalid_argument("Polynomial::evaluate: point size mismatch");
    K acc(0);
    for (size_t t = 0; t < nterms(); ++t) {
      K v = coeff(t);
      auto e = exps(t);
      for (size_t i = 0; i < e.size(); ++i)
        for (Exp k = 0; k < e[i]; ++k) v = v * point[i];
      acc = acc + v;
    }
    return ring_ ? detail::materialize_coeff(acc, ring_->field) : acc;
  }

  /// Substitutes polynomials for selected variables (nullopt keeps the variable).
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& values) const {
    if (!ring_) return *this;
    if (values.size() != nvars()) throw std::invalid_argument("Polynomial::substitute: size mismatch");
    RingPtr target;
    for (auto& v : values)
      if (v) {
        if (target && !same_ring(target, v->ring())) throw std::invalid_argument("Polynomial::substitute: mixed target rings");
        if (v->ring()) target = v->ring();
      }
    if (!target) target = ring_;
    bool same = same_ring(target, ring_);
    std::map<std::pair<size_t, Exp>, Polynomial> pow_cache;
    auto power = [&](size_t var, Exp e) -> const Polynomial& {
      auto key = std::make_pair(var, e);
      auto it = pow_cache.find(key);
      if (it == pow_cache.end()) it = pow_cache.emplace(key, values[var]->pow(e)).first;
      return it->second;
    };
    Polynomial acc = zero(target);
    for (size_t t = 0; t < nterms(); ++t) {
      Polynomial term_val = constant(target, coeff(t));
      auto e = exps(t);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (values[i]) {
          term_val = term_val * power(i, e[i]);
        } else {
          if (!same) throw std::invalid_argument("Polynomial::substitute: unsubstituted variable with new ring");
          std::vector<Exp> m(nvars(), 0);
          m[i] = e[i];
          term_val = term_val * term(target, m, field_from_int<K>(1, target->field));
        }
      }
      acc = acc + term_val;
    }
    return acc;
  }

  /// Exact division by g; throws if g does not divide exactly.
  static Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::domain_error("Polynomial: division by zero");
    auto [x, y] = align(f, g);
    RingPtr ring = x.ring_ ? x.ring_ : y.ring_;
    Polynomial q = ring ? zero(ring) : Polynomial();
    Polynomial r = x;
    size_t nv = x.nvars();
    std::vector<Exp> m(nv);
    while (!r.is_zero()) {
      if (!mono_divides(y.lead_exps(), r.lead_exps()))
        throw std::domain_error("Polynomial: not exactly divisible");
      mono_div(r.lead_exps(), y.lead_exps(), m.data());
      K c = r.lead_coeff() / y.lead_coeff();
      q = combine(K(1), q, c, m, one_term_like(ring, nv));
      r = combine(K(1), r, -c, m, y);
    }
    return q;
  }

  /// Leading coefficient made 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    K inv = K(1) / lead_coeff();
    return *this * inv;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t t = 0; t < nterms(); ++t) {
      const K& c = coeff(t);
      bool neg = detail::coeff_is_negative(c);
      K a = detail::coeff_abs(c);
      if (t == 0) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      std::string mono = mono_string(exps(t));
      if (mono.empty()) {
        s += a.to_string();
      } else if (a.is_one()) {
        s += mono;
      } else {
        s += a.to_string() + "*" + mono;
      }
    }
    return s;
  }

  /// Remaps into another ring: var_map[i] is the target index of source var i.
  Polynomial map_to_ring(RingPtr target, const std::vector<size_t>& var_map) const {
    if (!ring_) {
      Polynomial r = *this;
      if (!r.coeffs_.empty()) return constant(std::move(target), r.coeffs_[0]);
      return zero(std::move(target));
    }
    if (var_map.size() != nvars()) throw std::invalid_argument("map_to_ring: var_map size mismatch");
    size_t tn = target->nvars();
    std::vector<Exp> exps;
    std::vector<K> coeffs;
    exps.reserve(nterms() * tn);
    coeffs.reserve(nterms());
    for (size_t t = 0; t < nterms(); ++t) {
      std::vector<Exp> e(tn, 0);
      auto src = exps_span(t);
      for (size_t i = 0; i < src.size(); ++i) {
        if (src[i] == 0) continue;
        if (var_map[i] == Ring::npos)
          throw std::invalid_argument("map_to_ring: variable '" + ring_->vars[i] + "' has no image");
        e[var_map[i]] = src[i];
      }
      exps.insert(exps.end(), e.begin(), e.end());
      coeffs.push_back(coeff(t));
    }
    return from_terms(std::move(target), std::move(exps), std::move(coeffs));
  }

  /// Same variables, different order/ring object (resorts the terms).
  Polynomial with_ring(RingPtr target) const {
    if (!ring_) {
      if (coeffs_.empty()) return zero(std::move(target));
      return constant(std::move(target), coeffs_[0]);
    }
    if (target->vars != ring_->vars) throw std::invalid_argument("with_ring: variable lists differ");
    return from_terms(std::move(target), exps_, coeffs_);
  }

private:
  RingPtr ring_;
  std::vector<K> coeffs_;
  std::vector<Exp> exps_;

  ExpSpan exps_span(size_t t) const { return ExpSpan(exps_.data() + t * nvars(), nvars()); }

  static Polynomial one_term_like(const RingPtr& ring, size_t nv) {
    // the polynomial "1" used as a merge operand for q += c*x^m
    Polynomial p;
    p.ring_ = ring;
    p.coeffs_.push_back(ring ? field_from_int<K>(1, ring->field) : K(1));
    p.exps_.assign(nv, 0);
    return p;
  }

  static Polynomial zero_like(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.ring_ = a.ring_ ? a.ring_ : b.ring_;
    return r;
  }

  static const MonomialOrder& order_of(const Polynomial& a, const Polynomial& b) {
    static const MonomialOrder fallback = MonomialOrder::grevlex();
    if (a.ring_) return a.ring_->order;
    if (b.ring_) return b.ring_->order;
    return fallback;
  }

  /// Lifts universal constants so both operands share a ring (when one exists).
  static std::pair<Polynomial, Polynomial> align(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_) {
      if (!same_ring(a.ring_, b.ring_)) throw std::logic_error("Polynomial: operands from different rings");
      return {a, b};
    }
    if (a.ring_ && !b.ring_) {
      K c = b.coeffs_.empty() ? K(0) : b.coeffs_[0];
      return {a, constant(a.ring_, c)};
    }
    if (!a.ring_ && b.ring_) {
      K c = a.coeffs_.empty() ? K(0) : a.coeffs_[0];
      return {constant(b.ring_, c), b};
    }
    return {a, b};
  }

  static Polynomial combined(const K& alpha, const Polynomial& a, const K& beta, const Polynomial& b) {
    auto [x, y] = align(a, b);
    if (!x.ring_ && !y.ring_) {
      K c = (x.coeffs_.empty() ? K(0) : alpha * x.coeffs_[0]) +
            (y.coeffs_.empty() ? K(0) : beta * y.coeffs_[0]);
      Polynomial r;
      if (!c.is_zero()) r.coeffs_.push_back(std::move(c));
      return r;
    }
    return combine(alpha, x, beta, ExpSpan(), y);
  }

  std::string mono_string(ExpSpan e) const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->vars[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  void canonicalize() {
    size_t nv = nvars();
    size_t nt = coeffs_.size();
    if (nv == 0) {
      // constant: fold everything together
      K c(0);
      for (auto& x : coeffs_) c = c + x;
      coeffs_.clear();
      exps_.clear();
      if (ring_) c = detail::materialize_coeff(c, ring_->field);
      if (!c.is_zero()) coeffs_.push_back(std::move(c));
      return;
    }
    if (exps_.size() != nt * nv) throw std::logic_error("Polynomial: ragged term buffer");
    std::vector<uint32_t> idx(nt);
    std::iota(idx.begin(), idx.end(), 0);
    const MonomialOrder& ord = ring_->order;
    auto span_at = [&](uint32_t t) { return ExpSpan(exps_.data() + static_cast<size_t>(t) * nv, nv); };
    std::stable_sort(idx.begin(), idx.end(),
                     [&](uint32_t a, uint32_t b) { return ord.cmp(span_at(a), span_at(b)) > 0; });
    std::vector<Exp> out_e;
    std::vector<K> out_c;
    out_e.reserve(exps_.size());
    out_c.reserve(nt);
    size_t i = 0;
    while (i < nt) {
      auto e = span_at(idx[i]);
      K c = coeffs_[idx[i]];
      size_t j = i + 1;
      while (j < nt && ord.cmp(span_at(idx[j]), e) == 0) {
        c = c + coeffs_[idx[j]];
        ++j;
      }
      c = detail::materialize_coeff(c, ring_->field);
      if (!c.is_zero()) {
        out_e.insert(out_e.end(), e.begin(), e.end());
        out_c.push_back(std::move(c));
      }
      i = j;
    }
    exps_ = std::move(out_e);
    coeffs_ = std::move(out_c);
  }
};

}  // namespace nilred
