#pragma once

#include "nilred/exterior.hpp"
#include "nilred/groebner.hpp"
#include "nilred/orbits.hpp"

namespace nilred {

/// The matrix scheme with A^e = 0 and char poly lambda^n.
struct NilpotentSchemeSpec {
  int n;
  int e;

  NilpotentSchemeSpec(int n_, int e_) : n(n_), e(e_) {
    // e > n is allowed (the power condition is then implied by the char poly
    // condition); the intertwining scheme uses such specs
    if (n < 1 || e < 1) throw std::invalid_argument("NilpotentSchemeSpec: need n, e >= 1");
  }
};

namespace schdetail {

/// Non-leading char poly coefficients of a square polynomial matrix, mapped
/// back into the matrix's own ring. Generators are monic-normalized.
template <class K>
std::vector<Polynomial<K>> char_coefficients(const PolyMat<K>& m, const RingPtr& ring) {
  int n = static_cast<int>(m.rows());
  std::vector<std::string> vars = ring->vars;
  std::string lam = "lam";
  while (ring->var_index(lam) != Ring::npos) lam += "_";
  vars.push_back(lam);
  RingPtr ext = make_ring(vars, ring->field);
  std::vector<size_t> up(ring->nvars());
  for (size_t i = 0; i < ring->nvars(); ++i) up[i] = i;
  PolyMat<K> lifted(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lifted(i, j) = m(i, j).map_to_ring(ext, up);
  Polynomial<K> cp = char_poly(lifted, ext, ext->nvars() - 1);
  std::vector<size_t> down(ext->nvars(), Ring::npos);
  for (size_t i = 0; i < ring->nvars(); ++i) down[i] = i;
  std::vector<Polynomial<K>> out;
  for (int k = 0; k < n; ++k) {
    Polynomial<K> c = cp.coeff_of(ext->nvars() - 1, static_cast<Exp>(k)).map_to_ring(ring, down);
    if (!c.is_zero()) out.push_back(c.monic());
  }
  return out;
}

}  // namespace schdetail

/// Defining ideal of N_{n,e} in the n^2 matrix entries a_i_j: all entries of
/// A^e together with the non-leading char poly coefficients of A.
template <class K>
Ideal<K> nilpotent_scheme_ideal(const NilpotentSchemeSpec& spec, const FieldSpec& field) {
  int n = spec.n;
  RingPtr ring = make_ring(matrix_var_names("a", n, n), field);
  PolyMat<K> A = generic_matrix<K>(ring, "a", n, n);
  PolyMat<K> Ae = A;
  for (int k = 1; k < spec.e; ++k) Ae = Ae * A;
  std::vector<Polynomial<K>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!Ae(i, j).is_zero()) gens.push_back(Ae(i, j).monic());
  for (auto& c : schdetail::char_coefficients(A, ring)) gens.push_back(c);
  return make_ideal(ring, std::move(gens));
}

/// Affine chart of Gr(n, k^N): the pivot rows S carry an identity block.
struct Chart {
  int N;
  int n;
  IndexSet pivot_rows;  // 1-based, sorted, |S| = n

  Chart(int N_, int n_, IndexSet s) : N(N_), n(n_), pivot_rows(std::move(s)) {
    if (static_cast<int>(pivot_rows.size()) != n || n < 1 || n > N)
      throw std::invalid_argument("Chart: need |S| = n <= N");
    for (size_t i = 0; i < pivot_rows.size(); ++i) {
      if (pivot_rows[i] < 1 || pivot_rows[i] > N || (i && pivot_rows[i] <= pivot_rows[i - 1]))
        throw std::invalid_argument("Chart: pivot rows must be strictly increasing in 1..N");
    }
  }

  bool is_pivot(int row1based) const {
    return std::find(pivot_rows.begin(), pivot_rows.end(), row1based) != pivot_rows.end();
  }
};

inline std::vector<Chart> all_charts(int N, int n) {
  std::vector<Chart> out;
  for (auto& s : index_subsets(N, n)) out.emplace_back(N, n, s);
  return out;
}

/// Ring of the chart parameters x_<ambient row>_<column> for rows outside S.
inline RingPtr chart_ring(const Chart& chart, const FieldSpec& field) {
  std::vector<std::string> vars;
  for (int i = 1; i <= chart.N; ++i) {
    if (chart.is_pivot(i)) continue;
    for (int j = 1; j <= chart.n; ++j)
      vars.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
  }
  return make_ring(std::move(vars), field);
}

/// N x n matrix whose columns span the universal n-plane on the chart:
/// identity block on the pivot rows, fresh variables elsewhere.
template <class K>
PolyMat<K> chart_matrix(const Chart& chart, const RingPtr& ring) {
  PolyMat<K> m(chart.N, chart.n);
  int pivot_seen = 0;
  for (int i = 1; i <= chart.N; ++i) {
    bool pivot = chart.is_pivot(i);
    for (int j = 1; j <= chart.n; ++j) {
      if (pivot) {
        m(i - 1, j - 1) = (j - 1 == pivot_seen) ? Polynomial<K>::one(ring) : Polynomial<K>::zero(ring);
      } else {
        m(i - 1, j - 1) =
            Polynomial<K>::variable(ring, "x_" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
    if (pivot) ++pivot_seen;
  }
  return m;
}

/// T restricted to the chart's universal plane: B = (T M)_S, the matrix of
/// T|_U in the chart frame (forced because M_S is the identity).
template <class K>
PolyMat<K> chart_restriction(const JordanOperator<K>& T, const Chart& chart, const RingPtr& ring) {
  PolyMat<K> M = chart_matrix<K>(chart, ring);
  PolyMat<K> TM = lift_to_poly(T.matrix, ring) * M;
  PolyMat<K> B(chart.n, chart.n);
  int r = 0;
  for (int i = 1; i <= chart.N; ++i) {
    if (!chart.is_pivot(i)) continue;
    for (int j = 0; j < chart.n; ++j) B(r, j) = TM(i - 1, j);
    ++r;
  }
  return B;
}

/// The T-invariance equations on the chart: entries of T M - M B on the
/// non-pivot rows (the pivot rows vanish identically).
template <class K>
std::vector<Polynomial<K>> invariance_equations(const JordanOperator<K>& T, const Chart& chart,
                                                const RingPtr& ring) {
  if (T.dim() != chart.N) throw std::invalid_argument("invariance_equations: dimension mismatch");
  PolyMat<K> M = chart_matrix<K>(chart, ring);
  PolyMat<K> B = chart_restriction(T, chart, ring);
  PolyMat<K> R = lift_to_poly(T.matrix, ring) * M - M * B;
  std::vector<Polynomial<K>> gens;
  for (int i = 1; i <= chart.N; ++i) {
    bool pivot = chart.is_pivot(i);
    for (int j = 0; j < chart.n; ++j) {
      if (pivot) {
        if (!R(i - 1, j).is_zero()) throw std::logic_error("invariance_equations: pivot rows should vanish");
        continue;
      }
      if (!R(i - 1, j).is_zero()) gens.push_back(R(i - 1, j).monic());
    }
  }
  return gens;
}

/// Chart ideal of 'S^T: invariance equations plus the condition
/// char_poly(T|_U) = lambda^n.
template <class K>
Ideal<K> invariant_chart_ideal(const JordanOperator<K>& T, const Chart& chart) {
  RingPtr ring = chart_ring(chart, T.field);
  std::vector<Polynomial<K>> gens = invariance_equations(T, chart, ring);
  PolyMat<K> B = chart_restriction(T, chart, ring);
  for (auto& c : schdetail::char_coefficients(B, ring)) gens.push_back(c);
  return make_ideal(ring, std::move(gens));
}

/// Chart ideal of S^T: the shuffle linear forms with p_J evaluated at the
/// chart minors. (The Pluecker relations vanish identically under this
/// substitution, so the substituted forms generate the chart ideal.)
template <class K>
Ideal<K> shuffle_chart_ideal(const JordanOperator<K>& T, const Chart& chart) {
  if (T.dim() != chart.N) throw std::invalid_argument("shuffle_chart_ideal: dimension mismatch");
  RingPtr xring = chart_ring(chart, T.field);
  RingPtr pring = plucker_ring(chart.N, chart.n, T.field);
  auto forms = shuffle_linear_forms(T.matrix, chart.n, pring, T.field);
  PolyMat<K> M = chart_matrix<K>(chart, xring);
  auto subsets = index_subsets(chart.N, chart.n);
  std::vector<std::optional<Polynomial<K>>> values(subsets.size());
  std::vector<int> cols(chart.n);
  for (int j = 0; j < chart.n; ++j) cols[j] = j;
  for (size_t s = 0; s < subsets.size(); ++s) {
    std::vector<int> rows;
    for (int v : subsets[s]) rows.push_back(v - 1);
    values[s] = minor_det(M, rows, cols, xring);
  }
  std::vector<Polynomial<K>> gens;
  for (auto& f : forms) {
    Polynomial<K> g = f.substitute(values);
    if (!g.is_zero()) gens.push_back(g.monic());
  }
  return make_ideal(xring, std::move(gens));
}

/// Ideal of the intertwining scheme V in the a- and psi-variables: the
/// N_{n,e} equations on A plus all entries of T Psi - Psi A.
template <class K>
Ideal<K> vee_scheme_ideal(const NilpotentSchemeSpec& spec, const JordanOperator<K>& T) {
  if (!T.type.all_parts_equal() || T.type.max_part() != spec.e)
    throw std::invalid_argument("vee_scheme_ideal: T must have type (e^blocks)");
  int n = spec.n, N = T.dim();
  Ideal<K> nil = nilpotent_scheme_ideal<K>(spec, T.field);
  std::vector<std::string> vars = nil.ring->vars;
  auto psi_vars = matrix_var_names("psi", N, n);
  vars.insert(vars.end(), psi_vars.begin(), psi_vars.end());
  RingPtr ring = make_ring(vars, T.field);
  std::vector<size_t> up(nil.ring->nvars());
  for (size_t i = 0; i < up.size(); ++i) up[i] = i;
  std::vector<Polynomial<K>> gens;
  for (auto& g : nil.gens) gens.push_back(g.map_to_ring(ring, up));
  PolyMat<K> A = generic_matrix<K>(ring, "a", n, n);
  PolyMat<K> Psi = generic_matrix<K>(ring, "psi", N, n);
  PolyMat<K> R = lift_to_poly(T.matrix, ring) * Psi - Psi * A;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < n; ++j)
      if (!R(i, j).is_zero()) gens.push_back(R(i, j).monic());
  return make_ideal(ring, std::move(gens));
}

/// phi(T, psi): the unique B with psi B = T psi, i.e. the matrix of T on the
/// column span pulled back through psi. Requires full column rank and a
/// T-invariant span. When T has rectangular type (e^blocks) the image lies in
/// N_{n,e}; that containment is asserted.
template <class K>
Mat<K> phi(const JordanOperator<K>& T, const Mat<K>& psi) {
  if (psi.rows() != T.dim()) throw std::invalid_argument("phi: psi has wrong height");
  int n = static_cast<int>(psi.cols());
  if (rank_of(psi) != n) throw std::invalid_argument("phi: psi is rank deficient");
  Mat<K> B;
  try {
    B = solve_unique(psi, Mat<K>(T.matrix * psi), T.field);
  } catch (const std::domain_error&) {
    throw std::invalid_argument("phi: column span is not T-invariant");
  }
  if (T.type.all_parts_equal()) {
    int e = T.type.max_part();
    if (!mat_is_zero<K>(mat_pow(B, static_cast<unsigned>(e), T.field)) ||
        !has_nilpotent_char_poly(B, T.field))
      throw std::logic_error("phi: image escaped N_{n,e}");
  }
  return B;
}

/// Jacobian evaluator with the generator derivatives precomputed once; use
/// this when probing many points of the same scheme.
template <class K>
class TangentMachine {
public:
  explicit TangentMachine(Ideal<K> ideal) : ideal_(std::move(ideal)) {
    size_t nv = ideal_.ring->nvars();
    derivs_.reserve(ideal_.gens.size());
    for (auto& g : ideal_.gens) {
      std::vector<Polynomial<K>> row;
      row.reserve(nv);
      for (size_t v = 0; v < nv; ++v) row.push_back(g.derivative(v));
      derivs_.push_back(std::move(row));
    }
  }

  /// Nullity of the Jacobian at a point of the scheme.
  int nullity_at(const std::vector<K>& point) const {
    size_t nv = ideal_.ring->nvars();
    if (point.size() != nv) throw std::invalid_argument("tangent_dim: point size mismatch");
    for (auto& g : ideal_.gens)
      if (!g.evaluate(point).is_zero())
        throw std::invalid_argument("tangent_dim: point does not satisfy the generators");
    Mat<K> jac = zero_mat<K>(static_cast<int>(ideal_.gens.size()), static_cast<int>(nv),
                             ideal_.ring->field);
    for (size_t gi = 0; gi < derivs_.size(); ++gi)
      for (size_t v = 0; v < nv; ++v)
        jac(static_cast<int>(gi), static_cast<int>(v)) = derivs_[gi][v].evaluate(point);
    return static_cast<int>(nv) - rank_of(jac);
  }

private:
  Ideal<K> ideal_;
  std::vector<std::vector<Polynomial<K>>> derivs_;
};

/// Nullity of the Jacobian of the generators at a point of the scheme.
template <class K>
int tangent_dim(const Ideal<K>& ideal, const std::vector<K>& point) {
  return TangentMachine<K>(ideal).nullity_at(point);
}

}  // namespace nilred
