#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orthorep/graph.hpp"
#include "orthorep/linalg.hpp"

namespace orthorep {

struct PatternVerdict {
  /// t_ij = 0 for every nonadjacent pair i != j.
  bool is_orthogonal_rep = false;
  /// Additionally t_ij != 0 for every adjacent pair.
  bool is_faithful = false;
  /// Pairs (i, j), i < j, 1-based, that break either direction.
  std::vector<std::pair<int, int>> offending;
};

/// Compares the off-diagonal zero pattern of symmetric t with non-adjacency in g.
PatternVerdict pattern_check(const RationalMatrix& t, const Graph& g);

struct UpperZeroVerdict {
  bool generic = false;
  /// Position of the first column that fails (0 when a diagonal entry is zero
  /// and `zero_diagonal_at` is set instead).
  std::optional<int> failing_column;
  std::optional<int> zero_diagonal_at;
};

/// Permutes a by ord (row/column p of the result is vertex ord.at(p)) and tests
/// the nonzero diagonal and the independence of the above-diagonal zero rows.
UpperZeroVerdict is_upper_zero_generic(const RationalMatrix& a, const Ordering& ord);

struct SapVerdict {
  bool has_sap = false;
  /// Dimension of the solution space {X symmetric : A o X = 0, I o X = 0, AX = 0}.
  int x_nullity = 0;
  /// A nonzero solution when SAP fails.
  std::optional<RationalMatrix> witness;
};

/// Strong Arnold Property by exact rank of the assembled linear system.
SapVerdict has_sap(const RationalMatrix& a);

struct MpuVerdict {
  bool symmetric_psd = false;
  bool upper_zero_generic = false;
  bool zeros_on_nonedges = false;
  bool nonzeros_on_edges = false;
  bool passed = false;
  /// Certified lower bound on the maximum PSD upper nullity (set when passed).
  int nullity = 0;
};

/// Checks the four defining clauses of a maximum PSD upper nullity witness
/// for the supplied ordering.
MpuVerdict mpu_witness_check(const RationalMatrix& a, const Graph& g, const Ordering& ord);

/// (-1)^z with z the number of positions h, i < h < j, whose vertex is not
/// adjacent to the vertex at position j. Requires i < j, adjacency and a greedy ord.
int predicted_sign(const Graph& g, const Ordering& ord, int i, int j);

}  // namespace orthorep
