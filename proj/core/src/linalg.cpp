#include "orthorep/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "orthorep/error.hpp"

namespace orthorep {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InvalidArgument("matrix dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, int rows) {
  RationalMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) m.set_column(c, columns[c]);
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InvalidArgument("row length mismatch");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(int r) const {
  RationalVector v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::column(int c) const {
  RationalVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void RationalMatrix::set_column(int c, const RationalVector& v) {
  if (static_cast<int>(v.size()) != rows_) throw InvalidArgument("column length mismatch");
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix RationalMatrix::permuted(const Ordering& ord) const {
  if (rows_ != cols_ || ord.size() != rows_) throw InvalidArgument("permutation size mismatch");
  RationalMatrix p(rows_, cols_);
  for (int a = 0; a < rows_; ++a)
    for (int b = 0; b < cols_; ++b) p(a, b) = (*this)(ord.at(a + 1) - 1, ord.at(b + 1) - 1);
  return p;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<int>& rows) const {
  RationalMatrix s(static_cast<int>(rows.size()), cols_);
  for (int i = 0; i < s.rows(); ++i)
    for (int c = 0; c < cols_; ++c) s(i, c) = (*this)(rows[i], c);
  return s;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
  RationalMatrix p(a.rows(), b.cols());
  Rational acc;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      acc = 0;
      for (int m = 0; m < a.cols(); ++m) {
        if (sgn(a(r, m)) != 0 && sgn(b(m, c)) != 0) acc += a(r, m) * b(m, c);
      }
      p(r, c) = acc;
    }
  }
  return p;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  if (a.cols() != static_cast<int>(x.size())) throw InvalidArgument("matrix-vector shape mismatch");
  RationalVector y(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    Rational acc = 0;
    for (int c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot product length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

namespace {

// Scales each row by the lcm of its denominators so every entry is an integer.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (int c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (sgn(a(r, col)) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    Rational inv = 1 / a(row, col);
    for (int c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      Rational f = a(r, col);
      for (int c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalVector primitive(RationalVector v) {
  Integer l = 1;
  for (auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / g);
  return v;
}

}  // namespace

int rank(const RationalMatrix& m) {
  auto a = integer_rows(m);
  const int rows = m.rows();
  const int cols = m.cols();
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(a[i][c]) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[sel], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  auto pivots = rref(a);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<RationalVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), free);
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors, int d) {
  if (d < 0) throw InvalidArgument("ambient dimension must be non-negative");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != d) throw InvalidArgument("vector dimension does not match ambient dimension");
  return nullspace_basis(RationalMatrix::from_rows(vectors, d));
}

bool linearly_independent(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return true;
  const int d = static_cast<int>(vectors.front().size());
  return rank(RationalMatrix::from_rows(vectors, d)) == static_cast<int>(vectors.size());
}

RationalMatrix gram(const RationalMatrix& r) { return r.transpose() * r; }

int nullity(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("nullity expects a square matrix");
  return a.cols() - rank(a);
}

PsdCertificate psd_check(const RationalMatrix& a) {
  if (!a.is_symmetric()) throw InvalidArgument("psd_check requires a symmetric matrix");
  const int n = a.rows();
  RationalMatrix s = a;  // running Schur complement on the unused indices
  std::vector<char> used(n, 0);
  PsdCertificate cert;
  std::vector<int> order;

  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      int sg = sgn(s(i, i));
      if (sg < 0) {
        cert.psd = false;
        cert.failing_minor = order;
        cert.failing_minor.push_back(i);
        std::sort(cert.failing_minor.begin(), cert.failing_minor.end());
        return cert;
      }
      if (sg > 0 && piv < 0) piv = i;
    }
    if (piv < 0) {
      // Every remaining diagonal entry is zero, so the remaining block must vanish.
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (used[j]) continue;
          if (sgn(s(i, j)) != 0) {
            cert.psd = false;
            cert.failing_minor = order;
            cert.failing_minor.push_back(i);
            cert.failing_minor.push_back(j);
            std::sort(cert.failing_minor.begin(), cert.failing_minor.end());
            return cert;
          }
        }
      }
      for (int i = 0; i < n; ++i)
        if (!used[i]) cert.pivots.emplace_back(i, Rational(0));
      cert.psd = true;
      return cert;
    }
    used[piv] = 1;
    order.push_back(piv);
    const Rational p = s(piv, piv);
    cert.pivots.emplace_back(piv, p);
    for (int i = 0; i < n; ++i) {
      if (used[i] || sgn(s(i, piv)) == 0) continue;
      const Rational f = s(i, piv) / p;
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        s(i, j) -= f * s(piv, j);
      }
    }
  }
  cert.psd = true;
  return cert;
}

RationalMatrix laplacian_representation(const Graph& g) {
  auto edges = g.edges();
  RationalMatrix r(static_cast<int>(edges.size()), g.order());
  for (int e = 0; e < r.rows(); ++e) {
    r(e, edges[e].first - 1) = -1;
    r(e, edges[e].second - 1) = 1;
  }
  return r;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_text(const RationalMatrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << rational_to_string(m(r, c));
    }
    os << '\n';
  }
  return os.str();
}

RationalMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<RationalVector> rows;
  int cols = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    RationalVector row;
    while (ls >> tok) row.push_back(rational_from_string(tok));
    if (row.empty()) continue;
    if (cols >= 0 && static_cast<int>(row.size()) != cols) throw ParseError("ragged matrix rows");
    cols = static_cast<int>(row.size());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return RationalMatrix::from_rows(rows, cols);
}

}  // namespace orthorep
