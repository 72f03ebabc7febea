#include "orthorep/unique_monomial.hpp"

#include <algorithm>
#include <functional>

#include "orthorep/error.hpp"

namespace orthorep {

namespace {

std::vector<SymbolicVector> columns_upto(const Graph& g, const Ordering& ord, int d, int last, std::size_t budget) {
  if (ord.size() != g.order()) throw InvalidArgument("ordering size does not match graph order");
  if (d < 1 || d > 31) throw InvalidArgument("symbolic columns support 1 <= d <= 31");
  std::vector<SymbolicVector> cols;
  for (int j = 1; j <= last; ++j) {
    const auto w = earlier_non_neighbours(g, ord, j);
    const int k = static_cast<int>(w.size());
    SymbolicVector col(d);
    if (k < d) {
      std::vector<int> seq(k + 1);
      std::vector<GardenPolynomial> partial(k + 1);
      partial[0] = GardenPolynomial::constant(1);
      for (int r = 1; r <= d; ++r) {
        seq[k] = r;
        std::uint32_t used = 1u << (r - 1);
        GardenPolynomial& entry = col[r - 1];
        std::function<void(int)> rec = [&](int depth) {
          if (depth == k) {
            const auto sv = eval_node_variable(j, seq, d);
            entry += GardenPolynomial::variable(sv.variable, sv.sign).multiply(partial[k], budget);
            if (entry.size() > budget) throw BudgetExceeded("symbolic column exceeded the monomial budget");
            return;
          }
          for (int s = 1; s <= d; ++s) {
            if (used & (1u << (s - 1))) continue;
            const auto& factor = cols[w[depth] - 1][s - 1];
            if (factor.is_zero()) continue;
            seq[depth] = s;
            used |= 1u << (s - 1);
            partial[depth + 1] = partial[depth].multiply(factor, budget);
            rec(depth + 1);
            used &= ~(1u << (s - 1));
          }
        };
        rec(0);
      }
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

void check_pair(const Graph& g, const Ordering& ord, int i, int j) {
  if (ord.size() != g.order()) throw InvalidArgument("ordering size does not match graph order");
  if (i < 1 || j > g.order() || i > j) throw InvalidArgument("positions must satisfy 1 <= i <= j <= n");
}

}  // namespace

std::vector<SymbolicVector> symbolic_columns(const Graph& g, const Ordering& ord, int d, std::size_t budget) {
  return columns_upto(g, ord, d, g.order(), budget);
}

GardenPolynomial symbolic_gram_entry(const std::vector<SymbolicVector>& columns, int i, int j, std::size_t budget) {
  if (i < 1 || j < 1 || i > static_cast<int>(columns.size()) || j > static_cast<int>(columns.size()))
    throw InvalidArgument("column index out of range");
  GardenPolynomial out;
  const auto& a = columns[i - 1];
  const auto& b = columns[j - 1];
  for (std::size_t r = 0; r < a.size(); ++r) {
    out += a[r].multiply(b[r], budget);
    if (out.size() > budget) throw BudgetExceeded("Gram entry exceeded the monomial budget");
  }
  return out;
}

DominantTerm predicted_dominant(const Graph& g, const Ordering& ord, int i, int j, int d) {
  check_pair(g, ord, i, j);
  if (i != j && !g.adjacent(ord.at(i), ord.at(j)))
    throw InvalidArgument("predicted_dominant needs i == j or adjacent positions");
  if (!is_greedy(g, ord)) throw InvalidArgument("predicted_dominant requires a greedy ordering");
  // The garden only involves positions up to j, and a greedy prefix is a
  // greedy ordering of the induced subgraph, so k(v_j) + 1 suffices.
  const auto counts = constraint_counts(g, ord);
  const int kmax = *std::max_element(counts.begin() + 1, counts.begin() + j + 1);
  if (d < kmax + 1) throw InvalidArgument("dimension must be at least k(v_j) + 1");

  const Garden garden = build_lss_garden_II(g, ord, i, j, d);
  const int top_a = garden.tops[0];
  const int kj = counts[j];
  int t = kj + 1;
  if (i < j) {
    const auto wj = earlier_non_neighbours(g, ord, j);
    t = static_cast<int>(std::upper_bound(wj.begin(), wj.end(), i) - wj.begin()) + 1;
  }

  Indexing labels(garden.nodes.size(), 0);
  labels[garden.conduit_of(top_a)] = t;
  for (int x = 0; x < static_cast<int>(garden.nodes.size()); ++x) {
    const auto& children = garden.nodes[x].children;
    for (int m = 1; m <= static_cast<int>(children.size()); ++m) {
      int label = m;
      if (x == top_a && m >= t) label = m + 1;
      labels[garden.conduit_of(children[m - 1])] = label;
    }
  }
  const auto val = valuate(garden, {}, labels, d);
  if (val.value.is_zero() || val.value.size() != 1)
    throw Error("forced indexing has zero valuation; the greedy structure was violated");
  const auto [mono, coeff] = val.value.leading_term();
  return DominantTerm{mono, static_cast<int>(coeff), t};
}

LeadingTermSearch leading_term_search(const Garden& garden, int d, std::uint64_t node_budget) {
  garden.validate();
  if (garden.input_count() != 0) throw InvalidArgument("leading_term_search expects a garden without inputs");
  if (d < 1 || d > 31) throw InvalidArgument("dimension must satisfy 1 <= d <= 31");
  const int n = static_cast<int>(garden.nodes.size());
  for (int x = 0; x < n; ++x)
    for (int c : garden.nodes[x].children)
      if (garden.nodes[c].vertex >= garden.nodes[x].vertex)
        throw InvalidArgument("leading_term_search needs children with smaller family labels");

  // Conduits, the family nodes touching each, and each node's conduits
  // (children in order, upper last).
  std::vector<std::vector<int>> node_conduits(n), touching(n);
  for (int x = 0; x < n; ++x) {
    for (int c : garden.nodes[x].children) node_conduits[x].push_back(garden.conduit_of(c));
    node_conduits[x].push_back(garden.conduit_of(x));
    for (int c : node_conduits[x]) touching[c].push_back(x);
  }
  // A conduit is decided with the lowest class among the nodes it sits above.
  std::vector<std::pair<int, int>> decisions;  // (class, conduit)
  for (int c = 0; c < n; ++c) {
    if (garden.conduit_of(c) != c) continue;
    int cls = garden.nodes[c].vertex;
    for (int t : garden.tops)
      if (garden.conduit_of(t) == c) cls = std::min(cls, garden.nodes[t].vertex);
    decisions.emplace_back(cls, c);
  }
  std::sort(decisions.begin(), decisions.end());

  // Nodes grouped by class in ascending class order.
  std::vector<int> classes;
  for (const auto& node : garden.nodes) classes.push_back(node.vertex);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<std::vector<int>> members(classes.size());
  for (int x = 0; x < n; ++x) {
    const auto pos = std::lower_bound(classes.begin(), classes.end(), garden.nodes[x].vertex) - classes.begin();
    members[pos].push_back(x);
  }

  Indexing labels(n, 0);
  LeadingTermSearch result;

  auto allowed = [&](int c, int label) {
    for (int x : touching[c])
      for (int other : node_conduits[x])
        if (other != c && labels[other] == label) return false;
    return true;
  };
  auto node_key = [&](int x, int upper_label) {
    std::uint32_t mask = 0;
    for (int c : garden.nodes[x].children) mask |= 1u << (labels[garden.conduit_of(c)] - 1);
    mask |= 1u << (upper_label - 1);
    return variable_key(NodeVariable{garden.nodes[x].vertex, mask});
  };

  // Exact blocks for classes below `cls` followed by an optimistic block for
  // `cls`. Returns false when some node of that class has no legal label.
  auto bound_prefix = [&](int cls_index, Monomial& out) {
    out.clear();
    for (int b = 0; b <= cls_index; ++b) {
      const std::size_t start = out.size();
      for (int x : members[b]) {
        const int c = garden.conduit_of(x);
        int label = labels[c];
        if (label == 0) {
          for (int l = 1; l <= d && label == 0; ++l)
            if (allowed(c, l)) label = l;
          if (label == 0) return false;
        }
        out.push_back(node_key(x, label));
      }
      std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
    }
    return true;
  };
  auto prefix_below_best = [&](const Monomial& prefix) {
    if (!result.found) return false;
    for (std::size_t p = 0; p < prefix.size(); ++p)
      if (prefix[p] != result.monomial[p]) return prefix[p] > result.monomial[p];
    return false;
  };

  Monomial scratch;
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (++result.search_nodes > node_budget) throw BudgetExceeded("leading-term search exceeded its node budget");
    if (at == decisions.size()) {
      Monomial mono;
      int sign = 1;
      for (int x = 0; x < n; ++x) {
        std::vector<int> idx;
        for (int c : node_conduits[x]) idx.push_back(labels[c]);
        const auto sv = eval_node_variable(garden.nodes[x].vertex, idx, d);
        sign *= sv.sign;
        mono.push_back(variable_key(sv.variable));
      }
      std::sort(mono.begin(), mono.end());
      const int cmp = result.found ? compare_monomials(mono, result.monomial) : 1;
      if (cmp > 0) {
        result.found = true;
        result.monomial = std::move(mono);
        result.signed_count = sign;
        result.labelings_attaining = 1;
      } else if (cmp == 0) {
        result.signed_count += sign;
        ++result.labelings_attaining;
      }
      return;
    }
    const auto [cls, c] = decisions[at];
    const int cls_index = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), cls) - classes.begin());
    for (int label = 1; label <= d; ++label) {
      if (!allowed(c, label)) continue;
      labels[c] = label;
      if (bound_prefix(cls_index, scratch) && !prefix_below_best(scratch)) rec(at + 1);
      labels[c] = 0;
    }
  };
  rec(0);
  return result;
}

UniqueMonomialReport verify_unique_monomial(const Graph& g, const Ordering& ord, int i, int j, int d,
                                            const VerifyOptions& options) {
  check_pair(g, ord, i, j);
  if (d < 1) throw InvalidArgument("dimension must be positive");
  UniqueMonomialReport rep;
  rep.i = i;
  rep.j = j;
  rep.d = d;
  rep.greedy = is_greedy(g, ord);
  rep.pair_valid = i == j || g.adjacent(ord.at(i), ord.at(j));
  if (rep.greedy && rep.pair_valid) {
    const auto counts = constraint_counts(g, ord);
    if (d >= *std::max_element(counts.begin() + 1, counts.begin() + j + 1) + 1)
      rep.predicted = predicted_dominant(g, ord, i, j, d);
  }

  bool have_leading = false;
  if (!options.search_only) {
    try {
      const auto cols = columns_upto(g, ord, d, j, options.expansion_budget);
      const auto poly = symbolic_gram_entry(cols, i, j, options.expansion_budget);
      rep.method = "expansion";
      rep.term_count = poly.size();
      rep.identically_zero = poly.is_zero();
      if (!poly.is_zero()) {
        const auto [m, c] = poly.leading_term();
        rep.leading = m;
        rep.leading_coefficient = c;
      }
      have_leading = true;
    } catch (const BudgetExceeded&) {
      if (!rep.pair_valid) throw;
    }
  }
  if (!have_leading) {
    const auto s = leading_term_search(build_lss_garden_II(g, ord, i, j, d), d, options.search_budget);
    rep.method = "labeling-search";
    rep.search_nodes = s.search_nodes;
    rep.identically_zero = !s.found;
    if (s.found && s.signed_count != 0) {
      rep.leading = s.monomial;
      rep.leading_coefficient = s.signed_count;
    }
  }
  rep.matches = rep.predicted && rep.leading && *rep.leading == rep.predicted->monomial &&
                rep.leading_coefficient == rep.predicted->sign;
  rep.verified = rep.matches;
  return rep;
}

}  // namespace orthorep
