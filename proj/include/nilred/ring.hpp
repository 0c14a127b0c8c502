#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilred/field.hpp"
#include "nilred/monomial.hpp"

namespace nilred {

/// A polynomial ring: ordered variable list, coefficient field, active
/// monomial order. Immutable; shared by the polynomials living in it.
struct Ring {
  std::vector<std::string> vars;
  FieldSpec field;
  MonomialOrder order;
  std::map<std::string, size_t> index;

  size_t nvars() const { return vars.size(); }

  /// Index of a variable, or npos if unknown.
  static constexpr size_t npos = static_cast<size_t>(-1);
  size_t var_index(const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? npos : it->second;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alnum(c)) return false;
  return true;
}

inline RingPtr make_ring(std::vector<std::string> vars, FieldSpec field,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  auto r = std::make_shared<Ring>();
  for (auto& v : vars) {
    if (!valid_identifier(v)) throw std::invalid_argument("make_ring: bad variable name '" + v + "'");
    if (r->index.count(v)) throw std::invalid_argument("make_ring: duplicate variable '" + v + "'");
    r->index[v] = r->vars.size();
    r->vars.push_back(v);
  }
  if (order.kind == MonomialOrder::Kind::block && order.first_block.size() != r->vars.size())
    throw std::invalid_argument("make_ring: block mask size mismatch");
  r->field = field;
  r->order = std::move(order);
  return r;
}

/// Same ring: identical pointer, or identical content (vars, field, order).
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->field == b->field && a->order == b->order;
}

/// Variables named <prefix>_<i>_<j> for an n x m matrix, row-major, 1-based.
inline std::vector<std::string> matrix_var_names(const std::string& prefix, int n, int m) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n) * m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      out.push_back(prefix + "_" + std::to_string(i) + "_" + std::to_string(j));
  return out;
}

}  // namespace nilred
