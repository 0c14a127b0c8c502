#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilred {

/// Prime-field element. Carries its modulus so values are self-contained.
///
/// Elements with p == 0 are deferred integers (small literals such as the 0/1
/// that generic matrix code produces before any field value is in reach); they
/// reduce against the first modulus they meet. Arithmetic between two deferred
/// values stays in int64.
class Fp {
public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v) : v_(static_cast<uint64_t>(v)), p_(0) {}
  Fp(int v) : Fp(static_cast<long long>(v)) {}

  static Fp make(long long v, uint64_t p) {
    if (p == 0) return Fp(v);
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    Fp r;
    r.v_ = static_cast<uint64_t>(m);
    r.p_ = p;
    return r;
  }

  uint64_t modulus() const { return p_; }
  bool deferred() const { return p_ == 0; }

  /// Canonical residue in [0, p); requires a known modulus.
  uint64_t residue() const {
    if (p_ == 0) throw std::logic_error("Fp: residue of deferred value");
    return v_;
  }

  bool is_zero() const { return p_ ? v_ == 0 : as_int() == 0; }
  bool is_one() const { return p_ ? v_ == 1 % p_ : as_int() == 1; }

  friend Fp operator-(const Fp& a) {
    if (a.p_ == 0) return Fp(-a.as_int());
    Fp r;
    r.p_ = a.p_;
    r.v_ = a.v_ == 0 ? 0 : a.p_ - a.v_;
    return r;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    uint64_t p = common_modulus(a, b);
    if (p == 0) return Fp(checked(a.as_int() + b.as_int()));
    uint64_t x = a.reduced(p), y = b.reduced(p);
    Fp r;
    r.p_ = p;
    r.v_ = x + y >= p ? x + y - p : x + y;
    return r;
  }

  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

  friend Fp operator*(const Fp& a, const Fp& b) {
    uint64_t p = common_modulus(a, b);
    if (p == 0) {
      long long x = a.as_int(), y = b.as_int();
      if (x != 0 && (checked(x * y) / x) != y) throw std::overflow_error("Fp: deferred overflow");
      return Fp(x * y);
    }
    Fp r;
    r.p_ = p;
    r.v_ = static_cast<uint64_t>((static_cast<__uint128_t>(a.reduced(p)) * b.reduced(p)) % p);
    return r;
  }

  Fp inverse() const {
    if (p_ == 0) {
      long long x = as_int();
      if (x == 1 || x == -1) return *this;
      throw std::logic_error("Fp: inverse of deferred value needs a modulus");
    }
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p_), newr = static_cast<long long>(v_);
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw std::domain_error("Fp: modulus not prime");
    if (t < 0) t += static_cast<long long>(p_);
    Fp out;
    out.p_ = p_;
    out.v_ = static_cast<uint64_t>(t);
    return out;
  }

  friend Fp operator/(const Fp& a, const Fp& b) {
    if (b.p_ == 0 && a.p_ != 0) {
      Fp bb = Fp::make(b.as_int(), a.p_);
      return a * bb.inverse();
    }
    return a * b.inverse();
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    uint64_t p = common_modulus(a, b);
    if (p == 0) return a.as_int() == b.as_int();
    return a.reduced(p) == b.reduced(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string to_string() const {
    if (p_ == 0) return std::to_string(as_int());
    return std::to_string(v_);
  }

private:
  uint64_t v_;
  uint64_t p_;

  long long as_int() const { return static_cast<long long>(v_); }

  static long long checked(long long v) { return v; }

  uint64_t reduced(uint64_t p) const {
    if (p_ != 0) return v_;
    long long m = as_int() % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
  }

  static uint64_t common_modulus(const Fp& a, const Fp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw std::logic_error("Fp: mixed moduli " + std::to_string(a.p_) + " and " +
                             std::to_string(b.p_));
    return a.p_ ? a.p_ : b.p_;
  }
};

}  // namespace nilred
