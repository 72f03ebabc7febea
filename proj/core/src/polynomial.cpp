#include "orthorep/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "orthorep/error.hpp"

namespace orthorep {

namespace {

std::uint32_t reverse_bits(std::uint32_t x) {
  x = ((x >> 1) & 0x55555555u) | ((x & 0x55555555u) << 1);
  x = ((x >> 2) & 0x33333333u) | ((x & 0x33333333u) << 2);
  x = ((x >> 4) & 0x0f0f0f0fu) | ((x & 0x0f0f0f0fu) << 4);
  x = ((x >> 8) & 0x00ff00ffu) | ((x & 0x00ff00ffu) << 8);
  return (x >> 16) | (x << 16);
}

}  // namespace

std::vector<int> NodeVariable::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

int NodeVariable::arity() const { return std::popcount(mask); }

std::uint64_t variable_key(const NodeVariable& v) {
  if (v.vertex < 0 || v.mask == 0) throw InvalidArgument("node variable needs a vertex and at least one index");
  return (static_cast<std::uint64_t>(v.vertex) << 32) | (~reverse_bits(v.mask) & 0xffffffffu);
}

NodeVariable key_variable(std::uint64_t key) {
  NodeVariable v;
  v.vertex = static_cast<int>(key >> 32);
  v.mask = reverse_bits(~static_cast<std::uint32_t>(key & 0xffffffffu));
  return v;
}

Monomial make_monomial(std::vector<NodeVariable> vars) {
  Monomial m;
  m.reserve(vars.size());
  for (const auto& v : vars) m.push_back(variable_key(v));
  std::sort(m.begin(), m.end());
  return m;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

std::vector<NodeVariable> monomial_variables(const Monomial& m) {
  std::vector<NodeVariable> out;
  out.reserve(m.size());
  for (auto k : m) out.push_back(key_variable(k));
  return out;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p] != b[p]) return a[p] < b[p] ? 1 : -1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? 1 : -1;
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : monomial_variables(m)) {
    if (!first) os << '*';
    first = false;
    os << "a" << v.vertex << "[";
    const auto idx = v.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) os << (i + 1 == idx.size() ? ";" : ",");
      os << idx[i];
    }
    os << "]";
  }
  return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ m.size();
  for (auto k : m) {
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetExceeded("polynomial coefficient exceeds the 64-bit range");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetExceeded("polynomial coefficient exceeds the 64-bit range");
  return r;
}

GardenPolynomial GardenPolynomial::constant(std::int64_t c) { return term({}, c); }

GardenPolynomial GardenPolynomial::variable(const NodeVariable& v, std::int64_t coeff) {
  return term(Monomial{variable_key(v)}, coeff);
}

GardenPolynomial GardenPolynomial::term(const Monomial& m, std::int64_t coeff) {
  GardenPolynomial p;
  p.add_term(m, coeff);
  return p;
}

void GardenPolynomial::add_term(const Monomial& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

std::int64_t GardenPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

GardenPolynomial& GardenPolynomial::operator+=(const GardenPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GardenPolynomial& GardenPolynomial::operator-=(const GardenPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

GardenPolynomial GardenPolynomial::operator-() const { return scaled(-1); }

GardenPolynomial GardenPolynomial::scaled(std::int64_t c) const {
  GardenPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, checked_mul(coeff, c));
  return out;
}

GardenPolynomial GardenPolynomial::multiply(const GardenPolynomial& o, std::size_t budget) const {
  GardenPolynomial out;
  if (is_zero() || o.is_zero()) return out;
  const long double pairs = static_cast<long double>(terms_.size()) * static_cast<long double>(o.terms_.size());
  if (pairs > 16.0L * static_cast<long double>(budget))
    throw BudgetExceeded("polynomial product would exceed the monomial budget");
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.add_term(orthorep::multiply(ma, mb), checked_mul(ca, cb));
      if (out.terms_.size() > budget) throw BudgetExceeded("polynomial exceeded the monomial budget");
    }
  }
  return out;
}

std::vector<std::pair<Monomial, std::int64_t>> GardenPolynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, std::int64_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return compare_monomials(x.first, y.first) > 0; });
  return out;
}

std::pair<Monomial, std::int64_t> GardenPolynomial::leading_term() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (compare_monomials(it->first, best->first) > 0) best = it;
  return *best;
}

Rational GardenPolynomial::evaluate(const std::function<Rational(const NodeVariable&)>& value) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t(Integer(static_cast<long>(c)));
    for (auto k : m) t *= value(key_variable(k));
    total += t;
  }
  return total;
}

std::string GardenPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted_terms()) {
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (m.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << monomial_to_string(m);
    }
    first = false;
  }
  return os.str();
}

GardenPolynomial operator+(GardenPolynomial a, const GardenPolynomial& b) { return a += b; }
GardenPolynomial operator-(GardenPolynomial a, const GardenPolynomial& b) { return a -= b; }

std::unordered_map<int, int> family_degrees(const Monomial& m) {
  std::unordered_map<int, int> out;
  for (auto k : m) ++out[static_cast<int>(k >> 32)];
  return out;
}

}  // namespace orthorep
