#include "orthorep/graph_catalog.hpp"

#include <algorithm>
#include <set>

#include "orthorep/error.hpp"
#include "orthorep/graph_io.hpp"

namespace orthorep {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i + 1, (i + 1) % 5 + 1);          // outer cycle
    g.add_edge(i + 6, (i + 2) % 5 + 6);          // inner pentagram
    g.add_edge(i + 1, i + 6);                    // spokes
  }
  return g;
}

namespace {

// Adjacency code of g read through `perm` (position -> vertex), row-major over
// the upper triangle, most significant bit first.
std::uint64_t code_of(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
  return code;
}

std::vector<int> canonical_permutation(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw InvalidArgument("canonical form supports at most 11 vertices");
  std::vector<int> base(n);
  for (int v = 1; v <= n; ++v) base[v - 1] = v;
  std::stable_sort(base.begin(), base.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal-degree runs
  for (int s = 0; s < n;) {
    int e = s;
    while (e < n && g.degree(base[e]) == g.degree(base[s])) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::vector<int> perm = base;
  std::vector<int> best = base;
  std::uint64_t best_code = code_of(g, base);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      const auto c = code_of(g, perm);
      if (c < best_code) {
        best_code = c;
        best = perm;
      }
      return;
    }
    auto first = perm.begin() + blocks[b].first;
    auto last = perm.begin() + blocks[b].second;
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const auto perm = canonical_permutation(g);
  return to_graph6(relabel(g, Ordering(perm)));
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 9) throw InvalidArgument("nonisomorphic enumeration supports 1 <= n <= 9");
  std::vector<Graph> level = {Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const auto& base : level) {
      for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        Graph g(size);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 1; u < size; ++u)
          if (nb & (1u << (u - 1))) g.add_edge(u, size);
        auto key = canonical_form(g);
        if (seen.insert(key).second) next.push_back(from_graph6(key));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
  return level;
}

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > 8) throw InvalidArgument("labelled enumeration supports 1 <= n <= 8");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = 1ULL << pairs.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (bits & (1ULL << e)) g.add_edge(pairs[e].first, pairs[e].second);
    visit(g);
  }
}

Graph named_graph(const std::string& spec) {
  if (spec == "petersen") return petersen_graph();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("unknown graph family '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw InvalidArgument("bad size");
  } catch (const std::exception&) {
    throw InvalidArgument("bad size in graph family '" + spec + "'");
  }
  if (value < 1) throw InvalidArgument("graph family size must be positive");
  if (family == "path") return path_graph(value);
  if (family == "cycle") return cycle_graph(value);
  if (family == "complete") return complete_graph(value);
  if (family == "empty") return empty_graph(value);
  if (family == "star") return star_graph(value);
  throw InvalidArgument("unknown graph family '" + family + "'");
}

}  // namespace orthorep
