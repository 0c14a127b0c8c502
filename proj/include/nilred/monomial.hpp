#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nilred {

using Exp = uint16_t;
using ExpSpan = std::span<const Exp>;

/// Total degree of an exponent vector.
inline long mono_degree(ExpSpan a) {
  long d = 0;
  for (Exp e : a) d += e;
  return d;
}

inline bool mono_is_one(ExpSpan a) {
  for (Exp e : a)
    if (e) return false;
  return true;
}

inline bool mono_divides(ExpSpan a, ExpSpan b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline void mono_mul(ExpSpan a, ExpSpan b, Exp* out) {
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned s = static_cast<unsigned>(a[i]) + b[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    out[i] = static_cast<Exp>(s);
  }
}

inline void mono_div(ExpSpan a, ExpSpan b, Exp* out) {  // a / b, requires b | a
  for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Exp>(a[i] - b[i]);
}

inline void mono_lcm(ExpSpan a, ExpSpan b, Exp* out) {
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

inline bool mono_coprime(ExpSpan a, ExpSpan b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// Monomial order: lex, grevlex, or a two-block elimination order (each block
/// compared by grevlex, first block dominates). Block membership is a per-
/// variable mask, so non-contiguous elimination blocks are allowed.
struct MonomialOrder {
  enum class Kind { lex, grevlex, block };

  Kind kind = Kind::grevlex;
  std::vector<uint8_t> first_block;  // size nvars when kind == block

  static MonomialOrder lex() { return {Kind::lex, {}}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }

  static MonomialOrder block_elim(std::vector<uint8_t> mask) {
    return {Kind::block, std::move(mask)};
  }

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(ExpSpan a, ExpSpan b) const {
    switch (kind) {
      case Kind::lex:
        return cmp_lex(a, b);
      case Kind::grevlex:
        return cmp_grevlex(a, b);
      case Kind::block: {
        int c = cmp_grevlex_masked(a, b, true);
        if (c) return c;
        return cmp_grevlex_masked(a, b, false);
      }
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder& x, const MonomialOrder& y) {
    return x.kind == y.kind && x.first_block == y.first_block;
  }

private:
  static int cmp_lex(ExpSpan a, ExpSpan b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  static int cmp_grevlex(ExpSpan a, ExpSpan b) {
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int cmp_grevlex_masked(ExpSpan a, ExpSpan b, bool first) const {
    long da = 0, db = 0;
    for (size_t i = 0; i < a.size(); ++i)
      if (static_cast<bool>(first_block[i]) == first) {
        da += a[i];
        db += b[i];
      }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;)
      if (static_cast<bool>(first_block[i]) == first && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace nilred
