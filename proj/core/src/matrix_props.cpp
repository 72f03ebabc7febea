#include "orthorep/matrix_props.hpp"

#include "orthorep/error.hpp"

namespace orthorep {

PatternVerdict pattern_check(const RationalMatrix& t, const Graph& g) {
  const int n = g.order();
  if (t.rows() != n || t.cols() != n) throw InvalidArgument("matrix size does not match graph order");
  if (!t.is_symmetric()) throw InvalidArgument("pattern_check requires a symmetric matrix");
  PatternVerdict v;
  v.is_orthogonal_rep = true;
  v.is_faithful = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool zero = sgn(t(i - 1, j - 1)) == 0;
      const bool adj = g.adjacent(i, j);
      if (!adj && !zero) {
        v.is_orthogonal_rep = false;
        v.offending.emplace_back(i, j);
      } else if (adj && zero) {
        v.is_faithful = false;
        v.offending.emplace_back(i, j);
      }
    }
  }
  v.is_faithful = v.is_faithful && v.is_orthogonal_rep;
  return v;
}

UpperZeroVerdict is_upper_zero_generic(const RationalMatrix& a, const Ordering& ord) {
  if (!a.is_symmetric()) throw InvalidArgument("is_upper_zero_generic requires a symmetric matrix");
  const RationalMatrix p = a.permuted(ord);
  const int n = p.rows();
  UpperZeroVerdict v;
  for (int i = 0; i < n; ++i) {
    if (sgn(p(i, i)) == 0) {
      v.zero_diagonal_at = i + 1;
      return v;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> zero_rows;
    for (int i = 0; i < j; ++i)
      if (sgn(p(i, j)) == 0) zero_rows.push_back(i);
    if (zero_rows.empty()) continue;
    if (rank(p.select_rows(zero_rows)) != static_cast<int>(zero_rows.size())) {
      v.failing_column = j + 1;
      return v;
    }
  }
  v.generic = true;
  return v;
}

SapVerdict has_sap(const RationalMatrix& a) {
  if (!a.is_symmetric()) throw InvalidArgument("has_sap requires a symmetric matrix");
  const int n = a.rows();
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sgn(a(i, j)) == 0) unknowns.emplace_back(i, j);

  SapVerdict v;
  if (unknowns.empty()) {
    v.has_sap = true;
    return v;
  }
  // Row (r, c) of the system is entry (AX)_{rc}. Unknown X_ij = X_ji touches
  // column j through row i and column i through row j.
  RationalMatrix sys(n * n, static_cast<int>(unknowns.size()));
  for (int u = 0; u < static_cast<int>(unknowns.size()); ++u) {
    const auto [i, j] = unknowns[u];
    for (int r = 0; r < n; ++r) {
      sys(r * n + j, u) += a(r, i);
      sys(r * n + i, u) += a(r, j);
    }
  }
  v.x_nullity = static_cast<int>(unknowns.size()) - rank(sys);
  v.has_sap = v.x_nullity == 0;
  if (!v.has_sap) {
    const auto basis = nullspace_basis(sys);
    RationalMatrix x(n, n);
    for (int u = 0; u < static_cast<int>(unknowns.size()); ++u) {
      const auto [i, j] = unknowns[u];
      x(i, j) = basis.front()[u];
      x(j, i) = basis.front()[u];
    }
    v.witness = std::move(x);
  }
  return v;
}

MpuVerdict mpu_witness_check(const RationalMatrix& a, const Graph& g, const Ordering& ord) {
  MpuVerdict v;
  const int n = g.order();
  if (a.rows() != n || a.cols() != n || ord.size() != n || !a.is_symmetric()) return v;
  v.symmetric_psd = psd_check(a).psd;
  v.upper_zero_generic = is_upper_zero_generic(a, ord).generic;
  v.zeros_on_nonedges = true;
  v.nonzeros_on_edges = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool zero = sgn(a(i - 1, j - 1)) == 0;
      if (g.adjacent(i, j) && zero) v.nonzeros_on_edges = false;
      if (!g.adjacent(i, j) && !zero) v.zeros_on_nonedges = false;
    }
  }
  v.passed = v.symmetric_psd && v.upper_zero_generic && v.zeros_on_nonedges && v.nonzeros_on_edges;
  if (v.passed) v.nullity = nullity(a);
  return v;
}

int predicted_sign(const Graph& g, const Ordering& ord, int i, int j) {
  const int n = g.order();
  if (i < 1 || j > n || i >= j) throw InvalidArgument("predicted_sign requires 1 <= i < j <= n");
  if (!g.adjacent(ord.at(i), ord.at(j))) throw InvalidArgument("predicted_sign requires an adjacent pair");
  if (!is_greedy(g, ord)) throw InvalidArgument("predicted_sign requires a greedy ordering");
  int z = 0;
  for (int h = i + 1; h < j; ++h)
    if (!g.adjacent(ord.at(h), ord.at(j))) ++z;
  return z % 2 == 0 ? 1 : -1;
}

}  // namespace orthorep
