#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilred {

/// Arbitrary-precision signed integer on 32-bit limbs (little-endian).
/// Canonical form: no trailing zero limbs, zero has empty limb vector and sign 0.
class BigInt {
public:
  BigInt() = default;

  BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (m != 0) {
      limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
      m >>= 32;
    }
  }

  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_decimal(std::string_view s) {
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt r;
    // consume 9-digit chunks: r = r*10^k + chunk
    while (i < s.size()) {
      uint32_t chunk = 0, scale = 1;
      int k = 0;
      for (; k < 9 && i < s.size(); ++k, ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in decimal string");
        chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
        scale *= 10;
      }
      r.mul_small_add(scale, chunk);
    }
    if (neg && !r.is_zero()) r.sign_ = -1;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_neg_one() const { return sign_ == -1 && limbs_.size() == 1 && limbs_[0] == 1; }

  bool fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = mag_u64();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }

  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long m = mag_u64();
    if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
    return static_cast<long long>(m);
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.limbs_ = sub_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
      } else {
        r.limbs_ = sub_mag(b.limbs_, a.limbs_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
      uint64_t carry = 0;
      uint64_t ai = a.limbs_[i];
      for (size_t j = 0; j < b.limbs_.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(r.limbs_[i + j]) + ai * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.limbs_.size();
      while (carry) {
        uint64_t cur = static_cast<uint64_t>(r.limbs_[k]) + carry;
        r.limbs_[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  /// Truncated division: a = q*b + r with |r| < |b| and sign(r) == sign(a) (or r == 0).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.trim();
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.limbs_ = std::move(rm);
    r.trim();
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

  /// -1, 0, +1 as a < b, a == b, a > b.
  static int compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c : -c;
  }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  /// Non-negative gcd; gcd(0,0) == 0.
  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  BigInt pow(uint32_t e) const {
    BigInt base = *this, acc(1);
    while (e) {
      if (e & 1) acc *= base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> chunks;  // base 1e9, little-endian
    std::vector<uint32_t> cur = limbs_;
    while (!cur.empty()) {
      uint64_t rem = 0;
      for (size_t i = cur.size(); i-- > 0;) {
        uint64_t x = (rem << 32) | cur[i];
        cur[i] = static_cast<uint32_t>(x / 1000000000ULL);
        rem = x % 1000000000ULL;
      }
      while (!cur.empty() && cur.back() == 0) cur.pop_back();
      chunks.push_back(static_cast<uint32_t>(rem));
    }
    std::string s;
    if (sign_ < 0) s.push_back('-');
    s += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
      std::string part = std::to_string(chunks[i]);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }

  size_t limb_count() const { return limbs_.size(); }

private:
  std::vector<uint32_t> limbs_;
  int sign_ = 0;

  unsigned long long mag_u64() const {
    unsigned long long m = 0;
    if (limbs_.size() > 1) m = static_cast<unsigned long long>(limbs_[1]) << 32;
    if (!limbs_.empty()) m |= limbs_[0];
    return m;
  }

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  // *this = *this * m + add, magnitude only (sign untouched; used by from_decimal)
  void mul_small_add(uint32_t m, uint32_t add) {
    uint64_t carry = add;
    for (auto& l : limbs_) {
      uint64_t cur = static_cast<uint64_t>(l) * m + carry;
      l = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<uint32_t>(carry));
      carry >>= 32;
    }
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
    trim();
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
      uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    r[big.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
      if (cur < 0) {
        cur += (1LL << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      uint64_t rem = 0;
      uint64_t d = b[0];
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t x = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(x / d);
        rem = x % d;
      }
      r.clear();
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    const size_t n = b.size(), m = a.size() - n;
    int shift = 0;
    {
      uint32_t top = b.back();
      while (!(top & 0x80000000u)) {
        top <<= 1;
        ++shift;
      }
    }
    std::vector<uint32_t> u = shl_bits(a, shift);
    u.resize(a.size() + 1, 0);
    std::vector<uint32_t> v = shl_bits(b, shift);
    q.assign(m + 1, 0);
    const uint64_t B = 1ULL << 32;
    for (size_t j = m + 1; j-- > 0;) {
      uint64_t top2 = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      uint64_t qhat = top2 / v[n - 1];
      uint64_t rhat = top2 % v[n - 1];
      while (qhat >= B ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= B) break;
      }
      // multiply and subtract
      int64_t borrow = 0;
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
        if (t < 0) {
          t += static_cast<int64_t>(B);
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<uint32_t>(t);
      }
      int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large: add back
        t += static_cast<int64_t>(B);
        --qhat;
        uint64_t c2 = 0;
        for (size_t i = 0; i < n; ++i) {
          uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<uint32_t>(cur);
          c2 = cur >> 32;
        }
        t += static_cast<int64_t>(c2);
        t &= static_cast<int64_t>(B) - 1;
      }
      u[j + n] = static_cast<uint32_t>(t);
      q[j] = static_cast<uint32_t>(qhat);
    }
    u.resize(n);
    r = shr_bits(u, shift);
  }

  static std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<uint32_t> r(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] = a[i] >> (32 - s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, int s) {
    if (s == 0) {
      auto r = a;
      while (!r.empty() && r.back() == 0) r.pop_back();
      return r;
    }
    std::vector<uint32_t> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

}  // namespace nilred
