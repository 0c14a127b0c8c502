#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nilred/bigint.hpp"
#include "nilred/fp.hpp"
#include "nilred/rational.hpp"

namespace nilred {

/// Coefficient field of a computation: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  uint64_t p = 0;  // set iff prime_field

  static FieldSpec Q() { return FieldSpec{}; }

  static FieldSpec fp(uint64_t p) {
    if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
      throw std::invalid_argument("FieldSpec: modulus must be a prime in [2, 2^31)");
    FieldSpec s;
    s.kind = Kind::prime_field;
    s.p = p;
    return s;
  }

  /// "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view s) {
    if (s == "Q" || s == "q") return Q();
    if (s.size() > 3 && (s.substr(0, 3) == "Fp:" || s.substr(0, 3) == "fp:" || s.substr(0, 3) == "FP:")) {
      uint64_t p = 0;
      for (char c : s.substr(3)) {
        if (c < '0' || c > '9') throw std::invalid_argument("FieldSpec: bad modulus in '" + std::string(s) + "'");
        p = p * 10 + static_cast<uint64_t>(c - '0');
        if (p >= (1ULL << 32)) throw std::invalid_argument("FieldSpec: modulus out of range");
      }
      return fp(p);
    }
    throw std::invalid_argument("FieldSpec: expected Q or Fp:<p>, got '" + std::string(s) + "'");
  }

  std::string to_string() const {
    return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(p);
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

  static bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::rationals;
  static Rational from_int(long long v, const FieldSpec&) { return Rational(v); }
  static Rational from_bigint(const BigInt& v, const FieldSpec&) { return Rational(v); }
  static bool has_char_p() { return false; }
};

template <>
struct FieldTraits<Fp> {
  static constexpr FieldSpec::Kind kind = FieldSpec::Kind::prime_field;
  static Fp from_int(long long v, const FieldSpec& s) { return Fp::make(v, s.p); }
  static Fp from_bigint(const BigInt& v, const FieldSpec& s) {
    BigInt q, r;
    BigInt::divmod(v, BigInt(static_cast<long long>(s.p)), q, r);
    long long m = r.to_int64();
    return Fp::make(m, s.p);
  }
  static bool has_char_p() { return true; }
};

template <class K>
K field_from_int(long long v, const FieldSpec& spec) {
  if (FieldTraits<K>::kind != spec.kind)
    throw std::logic_error("field_from_int: scalar type does not match FieldSpec");
  return FieldTraits<K>::from_int(v, spec);
}

/// Runs fn with the scalar type matching spec: fn.template operator()<Rational>() or <Fp>().
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::rationals) return fn.template operator()<Rational>();
  return fn.template operator()<Fp>();
}

}  // namespace nilred
