#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"
#include "orthorep/polynomial.hpp"

namespace orthorep {

/// Result of evaluating a node variable on an index tuple: zero, or a sign
/// times an independent variable.
struct SignedVariable {
  int sign = 0;  // 0, +1 or -1
  NodeVariable variable;
};

/// Applies the alternating rules: a repeated index gives zero, otherwise the
/// increasing-form variable carries the sign of the sorting permutation.
/// The last index is the one on the upper conduit.
SignedVariable eval_node_variable(int vertex, const std::vector<int>& indices, int d);

enum class GardenType { I, II };

struct GardenNode {
  enum class Kind { family, input };
  Kind kind = Kind::family;
  /// Family label (vertex id) for family nodes.
  int vertex = 0;
  /// Input slot (1-based) for input boxes.
  int slot = 0;
  /// Ordered child node ids; empty for input boxes.
  std::vector<int> children;
};

/// A hanging garden stored as a forest of one (Type I) or two (Type II) trees.
/// Every node owns the conduit above it; in a Type II garden the two tops
/// share one conduit whose id is the first top's.
struct Garden {
  GardenType type = GardenType::I;
  std::vector<GardenNode> nodes;
  std::vector<int> tops;
  /// Dimension the garden was built for (0 when unspecified).
  int dimension = 0;

  int input_count() const;
  int family_node_count() const;
  /// Number of distinct conduits p.
  int conduit_count() const;
  /// Conduit above node `id`.
  int conduit_of(int id) const;
  /// Checks structural invariants; throws InvalidArgument when violated.
  void validate() const;
};

/// One vector per input box, entries indexed 0..d-1.
using GardenInputs = std::vector<std::vector<GardenPolynomial>>;

/// Indexing: conduit id -> label in 1..d (entries for unused ids ignored).
using Indexing = std::vector<int>;

/// Value of a Type I garden under one indexing: the external label and the
/// product (the standard basis factor e_label is implied).
struct Valuation {
  int external_label = 0;  // Type I only
  GardenPolynomial value;
};

Valuation valuate(const Garden& garden, const GardenInputs& inputs, const Indexing& indexing, int d);

struct GardenValue {
  GardenType type = GardenType::I;
  /// Type I: d entries. Type II: a single entry.
  std::vector<GardenPolynomial> entries;
  std::uint64_t indexings_visited = 0;
};

constexpr std::uint64_t kDefaultIndexingBudget = 10'000'000;

/// Sum over all d^p indexings. Throws BudgetExceeded when d^p exceeds the guard.
GardenValue garden_function_bruteforce(const Garden& garden, const GardenInputs& inputs, int d,
                                       std::uint64_t guard = kDefaultIndexingBudget);

/// Every indexing with nonzero valuation for a zero-input garden, in
/// lexicographic order of the conduit labels.
std::vector<std::pair<Indexing, Valuation>> nonzero_valuations(const Garden& garden, int d,
                                                                 std::uint64_t guard = kDefaultIndexingBudget);

/// Substitutes the Type I garden `inner` for input box `slot` of `outer`.
/// Outer slots before `slot` keep their numbers, inner inputs follow from
/// `slot`, and later outer slots shift up by inner's input count minus one.
Garden compose(const Garden& outer, int slot, const Garden& inner);

/// Type II garden with two input boxes joined by one conduit.
Garden inner_product_garden();
/// Type I garden consisting of one input box.
Garden identity_garden();
/// Type I garden: one node of family `vertex` whose k children are input boxes 1..k.
Garden phi_alpha_garden(int vertex, int k);
/// Scalar garden g_alpha(w_1..w_k, x) = <phi_alpha(w_1..w_k), x>.
Garden g_alpha_garden(int vertex, int k);

/// LSS garden of the vertex at position j: node labels are positions, children follow W lists.
Garden build_lss_garden_I(const Graph& g, const Ordering& ord, int j, int d);
/// Type II LSS garden for positions (i, j), i <= j: tops[0] is the tree for j,
/// tops[1] the tree for i.
Garden build_lss_garden_II(const Graph& g, const Ordering& ord, int i, int j, int d);

/// Number of nodes in the LSS Type I garden of position j.
std::uint64_t lss_garden_size(const Graph& g, const Ordering& ord, int j);

}  // namespace orthorep
