#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"

namespace orthorep {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, int rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // 0-based element access.
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  RationalVector row(int r) const;
  RationalVector column(int c) const;
  void set_column(int c, const RationalVector& v);

  RationalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  /// Symmetric permutation: result(p, q) = this(ord[p]-1, ord[q]-1).
  RationalMatrix permuted(const Ordering& ord) const;
  RationalMatrix select_rows(const std::vector<int>& rows) const;

  bool operator==(const RationalMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

bool is_zero(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Exact rank via fraction-free (Bareiss) elimination on the row-scaled integer matrix.
int rank(const RationalMatrix& m);

/// Basis of the right nullspace. Each basis vector is a primitive integer
/// vector (entries coprime), ordered by free column.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

/// Basis of { x in Q^d : x . v = 0 for every v }.
std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors, int d);

/// True when the vectors are linearly independent (the empty list is independent).
bool linearly_independent(const std::vector<RationalVector>& vectors);

/// T = R^T R.
RationalMatrix gram(const RationalMatrix& r);

struct PsdCertificate {
  bool psd = false;
  /// Pivots in elimination order, each paired with its (0-based) index.
  std::vector<std::pair<int, Rational>> pivots;
  /// When not PSD: 0-based indices of a principal submatrix that is not PSD.
  std::vector<int> failing_minor;
};

/// Exact PSD decision by symmetric-pivoted LDL^T. Throws on non-symmetric input.
PsdCertificate psd_check(const RationalMatrix& a);

/// Edge-by-vertex incidence matrix: the row for edge (u, v), u < v, holds -1
/// at u and +1 at v. Rows follow Graph::edges().
RationalMatrix laplacian_representation(const Graph& g);

/// Nullity n - rank for a square matrix.
int nullity(const RationalMatrix& a);

// Text form: one row per line, entries "p/q" (or "p") separated by spaces.
std::string to_text(const RationalMatrix& m);
RationalMatrix matrix_from_text(const std::string& text);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace orthorep
