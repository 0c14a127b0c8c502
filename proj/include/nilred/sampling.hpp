#pragma once

#include "nilred/linalg.hpp"
#include "nilred/rng.hpp"

namespace nilred {

template <class K>
Mat<K> random_matrix(Rng& rng, int rows, int cols, const FieldSpec& spec, int bound = 9) {
  Mat<K> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = field_from_int<K>(rng.range(-bound, bound), spec);
  return m;
}

/// Rejection-sampled invertible matrix (nonzero determinant, checked exactly).
template <class K>
Mat<K> random_invertible(Rng& rng, int n, const FieldSpec& spec, int bound = 9) {
  for (int tries = 0; tries < 10000; ++tries) {
    Mat<K> m = random_matrix<K>(rng, n, n, spec, bound);
    if (!det_field(m).is_zero()) return m;
  }
  throw std::runtime_error("random_invertible: rejection sampling failed");
}

}  // namespace nilred
