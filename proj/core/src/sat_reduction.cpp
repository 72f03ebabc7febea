#include "orthorep/sat_reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "orthorep/error.hpp"

namespace orthorep {

std::vector<int> CnfFormula::widths() const {
  std::vector<int> w;
  for (const auto& c : clauses) w.push_back(static_cast<int>(c.size()));
  return w;
}

int CnfFormula::prevalence(Literal lit) const {
  int p = 0;
  for (const auto& c : clauses)
    if (std::find(c.begin(), c.end(), lit) != c.end()) ++p;
  return p;
}

int CnfFormula::m() const {
  int best = 0;
  for (int w : widths()) best = std::max(best, w);
  for (int v = 1; v <= t; ++v) best = std::max({best, 2 * prevalence(v), 2 * prevalence(-v)});
  return best;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  CnfFormula phi;
  bool header = false;
  int declared_clauses = 0;
  std::vector<Literal> current;
  auto finish_clause = [&]() {
    std::vector<Literal> clause;
    for (Literal l : current)
      if (std::find(clause.begin(), clause.end(), l) == clause.end()) clause.push_back(l);
    for (Literal l : clause)
      if (std::find(clause.begin(), clause.end(), -l) != clause.end())
        throw ParseError("tautological clause (contains a literal and its negation)");
    if (clause.empty()) throw ParseError("empty clause");
    phi.clauses.push_back(std::move(clause));
    current.clear();
  };
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> phi.t >> declared_clauses) || fmt != "cnf" || phi.t < 0 || declared_clauses < 0)
        throw ParseError("malformed DIMACS header");
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before DIMACS header");
    do {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError("malformed literal '" + tok + "'");
      if (v == 0) {
        finish_clause();
        continue;
      }
      if (std::labs(v) > phi.t) throw ParseError("atom id exceeds declared atom count");
      current.push_back(static_cast<Literal>(v));
    } while (ls >> tok);
  }
  if (!header) throw ParseError("missing DIMACS header");
  if (!current.empty()) finish_clause();
  if (static_cast<int>(phi.clauses.size()) != declared_clauses)
    throw ParseError("clause count does not match DIMACS header");
  return phi;
}

std::string to_dimacs(const CnfFormula& phi) {
  std::ostringstream os;
  os << "p cnf " << phi.t << ' ' << phi.k() << '\n';
  for (const auto& c : phi.clauses) {
    for (Literal l : c) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

Rational ReductionMode::epsilon() const {
  if (kind == Kind::factor) {
    if (value < 1) throw InvalidArgument("approximation factor must be at least 1");
    return Rational(1) / (value + 1);
  }
  if (sgn(value) <= 0 || value > Rational(1, 2)) throw InvalidArgument("approximation fraction must lie in (0, 1/2]");
  return value;
}

int FormulaGraphBundle::literal_vertex(Literal lit) const {
  const int v = std::abs(lit);
  if (v < 1 || v > formula.t) throw InvalidArgument("literal out of range");
  return literal_vertices[2 * (v - 1) + (lit < 0 ? 1 : 0)];
}

namespace {

// Least integer x with x >= q.
Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

int minimal_filler_count(int t, int k, int m, const Rational& eps) {
  const int base = 2 + 2 * t + 2 * k;
  Integer f = m;
  const Integer need_low = ceil_of(Rational(2 * t + k) / eps) - base;
  const Integer need_high = ceil_of(Rational(m + 3) / eps) - base;
  if (need_low > f) f = need_low;
  if (need_high > f) f = need_high;
  if (!f.fits_sint_p()) throw InvalidArgument("filler count does not fit in an int");
  return static_cast<int>(f.get_si());
}

FormulaGraphBundle build_formula_graph(const CnfFormula& phi, const ReductionMode& mode) {
  if (phi.t < 1 || phi.k() < 1) throw InvalidArgument("the formula must have at least one atom and one clause");
  FormulaGraphBundle out;
  out.formula = phi;
  out.epsilon = mode.epsilon();
  if (mode.kind == ReductionMode::Kind::factor) out.factor = mode.value;
  out.m = phi.m();
  out.f = minimal_filler_count(phi.t, phi.k(), out.m, out.epsilon);
  out.n = 2 + 2 * phi.t + 2 * phi.k() + out.f;
  out.delta = 2 * phi.t + phi.k();
  out.Delta = out.n - out.m - 3;

  int next = 3;
  std::vector<std::string> names = {"a", "b"};
  for (int v = 1; v <= phi.t; ++v) {
    out.literal_vertices.push_back(next++);
    out.literal_vertices.push_back(next++);
    names.push_back("x" + std::to_string(v));
    names.push_back("~x" + std::to_string(v));
  }
  for (int i = 1; i <= phi.k(); ++i) {
    out.alpha.push_back(next++);
    out.beta.push_back(next++);
    names.push_back("alpha" + std::to_string(i));
    names.push_back("beta" + std::to_string(i));
  }
  for (int y = 1; y <= out.f; ++y) {
    out.fillers.push_back(next++);
    names.push_back("y" + std::to_string(y));
  }

  Graph h(out.n);
  h.add_edge(out.a, out.b);
  for (int v = 1; v <= phi.t; ++v) h.add_edge(out.literal_vertex(v), out.literal_vertex(-v));
  for (int i = 0; i < phi.k(); ++i) {
    h.add_edge(out.alpha[i], out.a);
    h.add_edge(out.beta[i], out.b);
    for (Literal l : phi.clauses[i]) {
      h.add_edge(out.alpha[i], out.literal_vertex(l));
      h.add_edge(out.beta[i], out.literal_vertex(l));
    }
  }
  for (int y : out.fillers) {
    h.add_edge(y, out.a);
    h.add_edge(y, out.b);
  }
  h.set_names(names);
  out.g = complement(h);
  out.g.set_names(names);
  out.h = std::move(h);
  return out;
}

DichotomyReport verify_dichotomy(const FormulaGraphBundle& bundle) {
  DichotomyReport r;
  const Rational n(bundle.n);
  r.delta_bound = Rational(bundle.delta) <= bundle.epsilon * n;
  r.Delta_bound = Rational(bundle.Delta) >= (1 - bundle.epsilon) * n;
  if (bundle.factor) r.factor_bound = Rational(bundle.Delta) >= *bundle.factor * Rational(bundle.delta);
  r.degrees_split = bundle.g.order() == bundle.n;
  for (int v = 1; v <= bundle.g.order() && r.degrees_split; ++v) {
    const int deg = bundle.g.degree(v);
    if (deg > bundle.delta && deg <= bundle.Delta) r.degrees_split = false;
  }
  r.passed = r.delta_bound && r.Delta_bound && r.factor_bound && r.degrees_split;
  return r;
}

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& phi) {
  if (phi.t > 30) throw BudgetExceeded("brute-force SAT supports at most 30 atoms");
  const std::uint64_t total = 1ULL << phi.t;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    bool all = true;
    for (const auto& c : phi.clauses) {
      bool sat = false;
      for (Literal l : c) {
        const bool value = (bits >> (std::abs(l) - 1)) & 1ULL;
        if ((l > 0) == value) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) {
      std::vector<bool> assignment(phi.t);
      for (int v = 0; v < phi.t; ++v) assignment[v] = (bits >> v) & 1ULL;
      return assignment;
    }
  }
  return std::nullopt;
}

EquivalenceReport reduction_equivalence_check(const CnfFormula& phi, const FormulaGraphBundle& bundle,
                                              std::uint64_t state_budget) {
  if (bundle.n > 64) throw BudgetExceeded("pair avoidance search supports at most 64 vertices");
  EquivalenceReport rep;
  const auto assignment = sat_bruteforce(phi);
  rep.satisfiable = assignment.has_value();
  const auto pa = pair_avoid(bundle.g, bundle.a, bundle.b, state_budget);
  rep.pair_avoidable = pa.avoidable;
  rep.explored = pa.explored;
  rep.agree = rep.satisfiable == rep.pair_avoidable;
  if (assignment) {
    std::vector<int> prefix = {bundle.a};
    for (int v = 1; v <= phi.t; ++v) prefix.push_back(bundle.literal_vertex((*assignment)[v - 1] ? v : -v));
    prefix.push_back(bundle.b);
    std::uint64_t allowed = 0;
    for (int v = 1; v <= bundle.n; ++v)
      if (v != bundle.a && v != bundle.b) allowed |= 1ULL << (v - 1);
    try {
      rep.constructed = find_greedy_ordering(bundle.g, allowed, prefix, state_budget);
      rep.constructed_ok = rep.constructed.has_value();
    } catch (const InvalidArgument&) {
      rep.constructed_ok = false;
    }
  }
  return rep;
}

}  // namespace orthorep
