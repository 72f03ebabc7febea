#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orthorep/linalg.hpp"

namespace orthorep {

/// An independent node variable: a family (identified by its vertex) and a
/// strictly increasing index tuple stored as a bitmask (bit i-1 for index i).
struct NodeVariable {
  int vertex = 0;
  std::uint32_t mask = 0;

  std::vector<int> indices() const;
  int arity() const;
  bool operator==(const NodeVariable&) const = default;
};

/// Packs a variable into a key whose ascending order is descending priority:
/// smaller vertex first, then lexicographically smaller index tuple.
std::uint64_t variable_key(const NodeVariable& v);
NodeVariable key_variable(std::uint64_t key);

/// Multiset of variables as keys sorted ascending (highest priority first).
using Monomial = std::vector<std::uint64_t>;

Monomial make_monomial(std::vector<NodeVariable> vars);
Monomial multiply(const Monomial& a, const Monomial& b);
std::vector<NodeVariable> monomial_variables(const Monomial& m);

/// Three-way comparison in the lexicographic term order: -1 when a ranks
/// below b, 0 when equal, +1 when a ranks above b. Exponents of variables are
/// compared in decreasing priority and the larger exponent wins.
int compare_monomials(const Monomial& a, const Monomial& b);

std::string monomial_to_string(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

constexpr std::size_t kDefaultMonomialBudget = 1'000'000;

/// Sparse integer polynomial over independent node variables. Zero
/// coefficients are never stored; coefficient overflow throws.
class GardenPolynomial {
 public:
  GardenPolynomial() = default;
  static GardenPolynomial constant(std::int64_t c);
  static GardenPolynomial variable(const NodeVariable& v, std::int64_t coeff = 1);
  static GardenPolynomial term(const Monomial& m, std::int64_t coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, std::int64_t coeff);
  std::int64_t coefficient(const Monomial& m) const;

  GardenPolynomial& operator+=(const GardenPolynomial& o);
  GardenPolynomial& operator-=(const GardenPolynomial& o);
  GardenPolynomial operator-() const;
  GardenPolynomial scaled(std::int64_t c) const;

  /// Product; throws BudgetExceeded when the result exceeds `budget` terms, or
  /// up front when the raw pair count exceeds 16 times the budget.
  GardenPolynomial multiply(const GardenPolynomial& o, std::size_t budget = kDefaultMonomialBudget) const;

  /// Terms sorted from highest to lowest in the term order.
  std::vector<std::pair<Monomial, std::int64_t>> sorted_terms() const;
  /// Highest term; requires a nonzero polynomial.
  std::pair<Monomial, std::int64_t> leading_term() const;

  /// Exact value at the given variable assignment.
  Rational evaluate(const std::function<Rational(const NodeVariable&)>& value) const;

  bool operator==(const GardenPolynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  std::unordered_map<Monomial, std::int64_t, MonomialHash> terms_;
};

GardenPolynomial operator+(GardenPolynomial a, const GardenPolynomial& b);
GardenPolynomial operator-(GardenPolynomial a, const GardenPolynomial& b);

/// Number of occurrences of each vertex's family in m.
std::unordered_map<int, int> family_degrees(const Monomial& m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace orthorep
