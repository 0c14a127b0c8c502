#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilred/linalg.hpp"

namespace nilred {

/// Weakly decreasing positive integers; the Jordan types sigma, tau.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  static Partition rectangle(int part, int count) {
    return Partition(std::vector<int>(static_cast<size_t>(count), part));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size_n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  int max_part() const { return parts_.empty() ? 0 : parts_[0]; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= max_part(); ++j) {
      int count = 0;
      for (int p : parts_)
        if (p >= j) ++count;
      c.push_back(count);
    }
    return Partition(std::move(c));
  }

  bool all_parts_equal() const {
    for (int p : parts_)
      if (p != parts_[0]) return false;
    return true;
  }

  /// "[3,2,1]"
  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  /// Parses "3,2,1" or "[3,2,1]".
  static Partition parse(std::string_view s) {
    if (!s.empty() && s.front() == '[') s.remove_prefix(1);
    if (!s.empty() && s.back() == ']') s.remove_suffix(1);
    std::vector<int> parts;
    int cur = 0;
    bool have = false;
    for (char c : s) {
      if (c >= '0' && c <= '9') {
        cur = cur * 10 + (c - '0');
        have = true;
      } else if (c == ',' || c == ' ') {
        if (have) parts.push_back(cur);
        cur = 0;
        have = false;
      } else {
        throw std::invalid_argument("Partition: bad character in input");
      }
    }
    if (have) parts.push_back(cur);
    return Partition(std::move(parts));
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
  std::vector<int> parts_;
};

/// tau = (e^c, f) with n = c*e + f, 0 <= f < e; the maximal Jordan type with
/// parts bounded by e.
inline Partition max_partition(int n, int e) {
  if (e < 1 || e > n) throw std::invalid_argument("max_partition: need 1 <= e <= n");
  std::vector<int> parts(static_cast<size_t>(n / e), e);
  if (n % e) parts.push_back(n % e);
  return Partition(std::move(parts));
}

/// Dominance: every partial sum of sigma at most the matching one of tau.
inline bool dominance_leq(const Partition& sigma, const Partition& tau) {
  if (sigma.size_n() != tau.size_n())
    throw std::invalid_argument("dominance_leq: partitions of different sizes");
  int ps = 0, pt = 0;
  int len = std::max(sigma.length(), tau.length());
  for (int i = 0; i < len; ++i) {
    ps += i < sigma.length() ? sigma.part(i) : 0;
    pt += i < tau.length() ? tau.part(i) : 0;
    if (ps > pt) return false;
  }
  return true;
}

/// All partitions of n, largest-first (reverse-lexicographic), (n) down to (1^n).
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline std::vector<Partition> partitions_with_max_part(int n, int e) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(n))
    if (p.max_part() <= e) out.push_back(p);
  return out;
}

/// Standard upper Jordan matrix of the given type: within each block,
/// T e_1 = 0 and T e_k = e_{k-1}.
template <class K>
Mat<K> jordan_matrix(const Partition& type, const FieldSpec& spec) {
  int n = type.size_n();
  Mat<K> m = zero_mat<K>(n, n, spec);
  int base = 0;
  for (int p : type.parts()) {
    for (int k = 1; k < p; ++k) m(base + k - 1, base + k) = field_from_int<K>(1, spec);
    base += p;
  }
  return m;
}

/// A nilpotent operator together with its Jordan type.
template <class K>
struct JordanOperator {
  Partition type;
  FieldSpec field;
  Mat<K> matrix;

  int dim() const { return type.size_n(); }

  static JordanOperator standard(const Partition& type, const FieldSpec& spec) {
    return JordanOperator{type, spec, jordan_matrix<K>(type, spec)};
  }
};

/// Jordan type from ranks of powers: conjugate part k is
/// rank(A^{k-1}) - rank(A^k). Throws on non-nilpotent input.
template <class K>
Partition jordan_type(const Mat<K>& a, const FieldSpec& spec) {
  int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw std::invalid_argument("jordan_type: non-square");
  std::vector<int> conj;
  Mat<K> power = identity_mat<K>(n, spec);
  int prev_rank = n;
  for (int k = 1; k <= n && prev_rank > 0; ++k) {
    power = power * a;
    int r = rank_of(power);
    conj.push_back(prev_rank - r);
    prev_rank = r;
  }
  if (prev_rank != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  return Partition(std::move(conj)).conjugate();
}

/// dim O_sigma = n^2 - sum of squared conjugate parts.
inline int orbit_dim(const Partition& sigma) {
  int n = sigma.size_n();
  Partition conj = sigma.conjugate();
  int s = 0;
  for (int p : conj.parts()) s += p * p;
  return n * n - s;
}

/// The intertwiner Psi placing, in block i of T = J_{(e^n)}, the top sigma_i
/// vectors of the i-th Jordan chain. Then T Psi = Psi J_sigma, rank Psi = n.
template <class K>
Mat<K> surjectivity_witness(int n, int e, const Partition& sigma, const FieldSpec& spec) {
  if (sigma.size_n() != n) throw std::invalid_argument("surjectivity_witness: |sigma| != n");
  if (sigma.max_part() > e)
    throw std::invalid_argument("surjectivity_witness: sigma_1 > e, no witness exists");
  int N = n * e;
  Mat<K> psi = zero_mat<K>(N, n, spec);
  int col = 0;
  for (int i = 0; i < sigma.length(); ++i) {
    int base = i * e;  // block i of T
    for (int k = 0; k < sigma.part(i); ++k) {
      psi(base + k, col) = field_from_int<K>(1, spec);
      ++col;
    }
  }
  return psi;
}

}  // namespace nilred
