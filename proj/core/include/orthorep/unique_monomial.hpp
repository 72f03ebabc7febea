#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthorep/garden.hpp"
#include "orthorep/graph.hpp"
#include "orthorep/polynomial.hpp"

namespace orthorep {

using SymbolicVector = std::vector<GardenPolynomial>;

/// Symbolic LSS columns in position order, built bottom-up with the
/// alternating multilinear rule. Throws BudgetExceeded past `budget` terms.
std::vector<SymbolicVector> symbolic_columns(const Graph& g, const Ordering& ord, int d,
                                             std::size_t budget = kDefaultMonomialBudget);

/// Symbolic Gram entry t_ij = <col_i, col_j> for positions i, j.
GardenPolynomial symbolic_gram_entry(const std::vector<SymbolicVector>& columns, int i, int j,
                                     std::size_t budget = kDefaultMonomialBudget);

struct DominantTerm {
  Monomial monomial;
  int sign = 1;
  /// Label of the shared top conduit.
  int cross_label = 0;
};

/// The forced indexing of the Unique Monomial Lemma for positions i <= j with
/// i == j or v_i ~ v_j, under a greedy ordering and d >= k(v_n) + 1.
DominantTerm predicted_dominant(const Graph& g, const Ordering& ord, int i, int j, int d);

struct LeadingTermSearch {
  /// True when some labeling has a nonzero valuation.
  bool found = false;
  Monomial monomial;
  /// Signed number of labelings attaining `monomial`; when nonzero it is the
  /// coefficient of the leading term of the garden polynomial.
  std::int64_t signed_count = 0;
  std::uint64_t labelings_attaining = 0;
  std::uint64_t search_nodes = 0;
};

constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Exact branch-and-bound search for the highest monomial over all nonzero
/// labelings of a zero-input garden whose children always carry smaller
/// family labels than their parents (true of every LSS garden).
LeadingTermSearch leading_term_search(const Garden& garden, int d, std::uint64_t node_budget = kDefaultSearchBudget);

struct UniqueMonomialReport {
  int i = 0;
  int j = 0;
  int d = 0;
  bool greedy = false;
  bool pair_valid = false;  // i == j or v_i ~ v_j
  /// "expansion" or "labeling-search".
  std::string method;
  bool identically_zero = false;
  std::optional<Monomial> leading;
  std::int64_t leading_coefficient = 0;
  std::optional<DominantTerm> predicted;
  bool matches = false;
  /// Lemma conclusion holds: nonzero polynomial whose leading term is the
  /// predicted monomial with coefficient equal to the predicted sign.
  bool verified = false;
  std::size_t term_count = 0;  // expansion only
  std::uint64_t search_nodes = 0;
};

struct VerifyOptions {
  /// Terms allowed during full expansion before falling back to the search.
  std::size_t expansion_budget = 200'000;
  std::uint64_t search_budget = kDefaultSearchBudget;
  /// Skip expansion and use the labeling search directly.
  bool search_only = false;
};

/// Extracts the leading term of the Type II LSS polynomial for (i, j) and
/// compares it with the lemma's prediction. Expansion is used when it fits the
/// budget; otherwise the exact labeling search supplies the leading term.
UniqueMonomialReport verify_unique_monomial(const Graph& g, const Ordering& ord, int i, int j, int d,
                                            const VerifyOptions& options = {});

}  // namespace orthorep
