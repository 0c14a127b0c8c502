#pragma once

#include <string>
#include <vector>

#include "nilred/parse.hpp"
#include "nilred/polynomial.hpp"
#include "nilred/rng.hpp"

namespace nilred::testutil {

/// Random polynomial with up to max_terms terms of degree <= max_deg per variable.
template <class K>
Polynomial<K> random_poly(Rng& rng, const RingPtr& ring, int max_terms, int max_deg,
                          int coeff_bound = 9) {
  std::vector<Exp> exps;
  std::vector<K> coeffs;
  int nt = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_terms)));
  for (int t = 0; t < nt; ++t) {
    for (size_t i = 0; i < ring->nvars(); ++i)
      exps.push_back(static_cast<Exp>(rng.below(static_cast<uint64_t>(max_deg + 1))));
    coeffs.push_back(field_from_int<K>(rng.range(-coeff_bound, coeff_bound), ring->field));
  }
  return Polynomial<K>::from_terms(ring, std::move(exps), std::move(coeffs));
}

}  // namespace nilred::testutil
