#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"
#include "orthorep/linalg.hpp"

namespace orthorep {

/// A literal in DIMACS convention: +v for x_v, -v for the negation of x_v.
using Literal = int;

struct CnfFormula {
  int t = 0;  // atom count
  std::vector<std::vector<Literal>> clauses;

  int k() const { return static_cast<int>(clauses.size()); }
  std::vector<int> widths() const;
  /// Number of clauses containing the literal.
  int prevalence(Literal lit) const;
  /// max of widths and doubled prevalences.
  int m() const;
};

/// Parses DIMACS CNF. Duplicate literals within a clause are dropped;
/// tautological clauses, atom 0 and out-of-range atoms are rejected.
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& phi);

/// Requested approximation: fraction epsilon in (0, 1/2] or factor F >= 1.
struct ReductionMode {
  enum class Kind { fraction, factor } kind = Kind::factor;
  Rational value = 1;

  static ReductionMode fraction(const Rational& eps) { return {Kind::fraction, eps}; }
  static ReductionMode factor(const Rational& f) { return {Kind::factor, f}; }
  /// epsilon, converting a factor by 1/(F+1).
  Rational epsilon() const;
};

struct FormulaGraphBundle {
  CnfFormula formula;
  Graph g{1};
  Graph h{1};
  int a = 1;
  int b = 2;
  /// literal_vertex[2*(v-1)] is x_v, literal_vertex[2*(v-1)+1] is not x_v.
  std::vector<int> literal_vertices;
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<int> fillers;
  int f = 0;
  int m = 0;
  int n = 0;
  int delta = 0;
  int Delta = 0;
  Rational epsilon;
  std::optional<Rational> factor;

  int literal_vertex(Literal lit) const;
};

/// Formula graph of the SAT reduction. Vertex ids: a = 1, b = 2, then x_1, not x_1, x_2, ...,
/// then alpha_1, beta_1, alpha_2, beta_2, ..., then the fillers.
FormulaGraphBundle build_formula_graph(const CnfFormula& phi, const ReductionMode& mode);

/// Smallest f with f >= m, n(f) >= (2t + k)/eps and n(f) >= (m + 3)/eps.
int minimal_filler_count(int t, int k, int m, const Rational& eps);

struct DichotomyReport {
  bool delta_bound = false;  // delta <= eps n
  bool Delta_bound = false;  // Delta >= (1 - eps) n
  bool factor_bound = true;  // Delta >= F delta (factor mode only)
  bool degrees_split = false;
  bool passed = false;
};

DichotomyReport verify_dichotomy(const FormulaGraphBundle& bundle);

/// Exhaustive SAT; returns a satisfying assignment (index v-1 true for x_v) if any.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi);

struct EquivalenceReport {
  bool satisfiable = false;
  bool pair_avoidable = false;
  bool agree = false;
  /// When satisfiable: the ordering starting (a, l_1, ..., l_t, b) that avoids the pair.
  std::optional<Ordering> constructed;
  bool constructed_ok = true;
  std::uint64_t explored = 0;
};

/// Compares SAT(phi) with pair avoidance of (a, b) in the formula graph.
/// Throws BudgetExceeded if the search exceeds `state_budget` or n > 64.
EquivalenceReport reduction_equivalence_check(const CnfFormula& phi, const FormulaGraphBundle& bundle,
                                              std::uint64_t state_budget = 50'000'000);

}  // namespace orthorep
