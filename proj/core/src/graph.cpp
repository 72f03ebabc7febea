#include "orthorep/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "orthorep/error.hpp"

namespace orthorep {

namespace {

constexpr int kMaxSearchOrder = 64;

void require_search_size(const Graph& g) {
  if (g.order() > kMaxSearchOrder) {
    throw InvalidArgument("search operations support at most 64 vertices, got " + std::to_string(g.order()));
  }
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

std::vector<std::uint64_t> neighbour_masks(const Graph& g) {
  std::vector<std::uint64_t> nb(g.order());
  for (int v = 1; v <= g.order(); ++v) nb[v - 1] = g.neighbour_mask(v);
  return nb;
}

// Unvisited vertices whose number of visited neighbours is maximal.
std::uint64_t greedy_candidates(const std::vector<std::uint64_t>& nb, std::uint64_t visited, std::uint64_t all) {
  std::uint64_t rest = all & ~visited;
  int best = -1;
  std::uint64_t cands = 0;
  for (std::uint64_t m = rest; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    int c = std::popcount(nb[v] & visited);
    if (c > best) {
      best = c;
      cands = std::uint64_t{1} << v;
    } else if (c == best) {
      cands |= std::uint64_t{1} << v;
    }
  }
  return cands;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw InvalidArgument("graph must have at least one vertex");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw InvalidArgument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[word_index(u, v)] >> ((v - 1) % 64)) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loops are not allowed");
  bits_[word_index(u, v)] |= std::uint64_t{1} << ((v - 1) % 64);
  bits_[word_index(v, u)] |= std::uint64_t{1} << ((u - 1) % 64);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[word_index(u, v)] &= ~(std::uint64_t{1} << ((v - 1) % 64));
  bits_[word_index(v, u)] &= ~(std::uint64_t{1} << ((u - 1) % 64));
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(bits_[static_cast<std::size_t>(v - 1) * words_ + w]);
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (int v = 1; v <= n_; ++v) out[v - 1] = degree(v);
  return out;
}

int Graph::min_degree() const {
  auto d = degrees();
  return *std::min_element(d.begin(), d.end());
}

int Graph::max_degree() const {
  auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

int Graph::edge_count() const {
  auto d = degrees();
  return std::accumulate(d.begin(), d.end(), 0) / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v = u + 1; v <= n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::neighbour_mask(int v) const {
  check_vertex(v);
  if (n_ > kMaxSearchOrder) throw InvalidArgument("neighbour_mask requires n <= 64");
  return bits_[static_cast<std::size_t>(v - 1) * words_];
}

void Graph::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != n_) {
    throw InvalidArgument("vertex name list must have one entry per vertex");
  }
  names_ = std::move(names);
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 1; u <= g.order(); ++u)
    for (int v = u + 1; v <= g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  h.set_names(g.names());
  return h;
}

int connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n + 1, 0);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 1; v <= n; ++v) {
        if (!seen[v] && g.adjacent(u, v)) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return comps;
}

Ordering::Ordering(std::vector<int> vertices) : perm_(std::move(vertices)), pos_(perm_.size() + 1, 0) {
  const int n = static_cast<int>(perm_.size());
  if (n < 1) throw InvalidArgument("ordering must contain at least one vertex");
  for (int j = 0; j < n; ++j) {
    int v = perm_[j];
    if (v < 1 || v > n || pos_[v] != 0) throw InvalidArgument("ordering is not a permutation of 1..n");
    pos_[v] = j + 1;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return Ordering(std::move(p));
}

int Ordering::at(int position) const {
  if (position < 1 || position > size()) throw InvalidArgument("position out of range");
  return perm_[position - 1];
}

int Ordering::position_of(int v) const {
  if (v < 1 || v > size()) throw InvalidArgument("vertex out of range");
  return pos_[v];
}

namespace {
void check_same_size(const Graph& g, const Ordering& ord) {
  if (g.order() != ord.size()) throw InvalidArgument("ordering size does not match graph order");
}
}  // namespace

Graph relabel(const Graph& g, const Ordering& ord) {
  check_same_size(g, ord);
  const int n = g.order();
  Graph h(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.adjacent(ord.at(i), ord.at(j))) h.add_edge(i, j);
  if (!g.names().empty()) {
    std::vector<std::string> names(n);
    for (int j = 1; j <= n; ++j) names[j - 1] = g.names()[ord.at(j) - 1];
    h.set_names(std::move(names));
  }
  return h;
}

std::vector<int> earlier_non_neighbours(const Graph& g, const Ordering& ord, int j) {
  check_same_size(g, ord);
  if (j < 1 || j > g.order()) throw InvalidArgument("position out of range");
  std::vector<int> w;
  for (int i = 1; i < j; ++i)
    if (!g.adjacent(ord.at(i), ord.at(j))) w.push_back(i);
  return w;
}

std::vector<int> constraint_counts(const Graph& g, const Ordering& ord) {
  check_same_size(g, ord);
  std::vector<int> k(g.order() + 1, 0);
  for (int j = 1; j <= g.order(); ++j) k[j] = static_cast<int>(earlier_non_neighbours(g, ord, j).size());
  return k;
}

int local_degree(const Graph& g, const Ordering& ord, int i, int j) {
  check_same_size(g, ord);
  if (i < 1 || i > j || j > g.order()) throw InvalidArgument("local_degree requires 1 <= i <= j <= n");
  int c = 0;
  for (int h = 1; h < i; ++h)
    if (g.adjacent(ord.at(h), ord.at(j))) ++c;
  return c;
}

bool is_greedy(const Graph& g, const Ordering& ord) {
  check_same_size(g, ord);
  const int n = g.order();
  for (int i = 1; i <= n; ++i) {
    const int own = local_degree(g, ord, i, i);
    for (int j = i + 1; j <= n; ++j)
      if (local_degree(g, ord, i, j) > own) return false;
  }
  return true;
}

bool is_anti_greedy(const Graph& h, const Ordering& ord) {
  check_same_size(h, ord);
  const int n = h.order();
  for (int i = 1; i <= n; ++i) {
    const int own = local_degree(h, ord, i, i);  // k(v_i)
    for (int j = i + 1; j <= n; ++j) {
      if (own > local_degree(h, ord, i, j)) return false;
    }
  }
  return true;
}

std::size_t for_each_greedy_ordering(const Graph& g, const std::function<bool(const Ordering&)>& visit,
                                     std::optional<std::size_t> limit) {
  require_search_size(g);
  const int n = g.order();
  const auto nb = neighbour_masks(g);
  const std::uint64_t all = full_mask(n);
  std::vector<int> prefix;
  prefix.reserve(n);
  std::size_t emitted = 0;
  bool stop = false;

  std::function<void(std::uint64_t)> dfs = [&](std::uint64_t visited) {
    if (stop) return;
    if (static_cast<int>(prefix.size()) == n) {
      ++emitted;
      if (!visit(Ordering(prefix)) || (limit && emitted >= *limit)) stop = true;
      return;
    }
    for (std::uint64_t c = greedy_candidates(nb, visited, all); c != 0 && !stop; c &= c - 1) {
      int v = std::countr_zero(c);
      prefix.push_back(v + 1);
      dfs(visited | (std::uint64_t{1} << v));
      prefix.pop_back();
    }
  };
  if (!limit || *limit > 0) dfs(0);
  return emitted;
}

std::vector<Ordering> enumerate_greedy_orderings(const Graph& g, std::optional<std::size_t> limit) {
  std::vector<Ordering> out;
  for_each_greedy_ordering(
      g,
      [&](const Ordering& o) {
        out.push_back(o);
        return true;
      },
      limit);
  return out;
}

std::optional<Ordering> find_greedy_ordering(const Graph& g, std::uint64_t allowed_final, const std::vector<int>& prefix,
                                             std::uint64_t state_budget, std::uint64_t* explored) {
  require_search_size(g);
  const int n = g.order();
  const auto nb = neighbour_masks(g);
  const std::uint64_t all = full_mask(n);
  allowed_final &= all;

  std::vector<int> path;
  path.reserve(n);
  std::uint64_t visited = 0;
  for (int v : prefix) {
    if (v < 1 || v > n) throw InvalidArgument("prefix vertex out of range");
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if ((greedy_candidates(nb, visited, all) & bit) == 0) {
      throw InvalidArgument("prefix is not a valid greedy start");
    }
    visited |= bit;
    path.push_back(v);
  }

  // Sets from which no allowed completion exists; whether a completion exists
  // depends only on the visited set.
  std::unordered_set<std::uint64_t> dead;
  std::uint64_t touched = 0;

  std::function<bool(std::uint64_t)> dfs = [&](std::uint64_t vis) -> bool {
    if (++touched > state_budget) throw BudgetExceeded("greedy-ordering search exceeded its state budget");
    std::uint64_t rest = all & ~vis;
    if (std::popcount(rest) == 1) {
      if ((rest & allowed_final) == 0) return false;
      path.push_back(std::countr_zero(rest) + 1);
      return true;
    }
    if ((rest & allowed_final) == 0) return false;
    if (dead.contains(vis)) return false;
    for (std::uint64_t c = greedy_candidates(nb, vis, all); c != 0; c &= c - 1) {
      int v = std::countr_zero(c);
      path.push_back(v + 1);
      if (dfs(vis | (std::uint64_t{1} << v))) return true;
      path.pop_back();
    }
    dead.insert(vis);
    return false;
  };

  bool found;
  if (visited == all) {
    found = (std::uint64_t{1} << (path.back() - 1) & allowed_final) != 0;
  } else {
    found = dfs(visited);
  }
  if (explored) *explored += touched;
  if (!found) return std::nullopt;
  return Ordering(path);
}

GreedegreeResult greedegree(const Graph& g, std::uint64_t state_budget) {
  require_search_size(g);
  const int n = g.order();
  GreedegreeResult result;
  if (n == 1) {
    result.value = 0;
    result.witness = Ordering::identity(1);
    return result;
  }
  auto deg = g.degrees();
  std::vector<int> levels(deg.begin(), deg.end());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::uint64_t explored = 0;
  for (int level : levels) {
    std::uint64_t allowed = 0;
    for (int v = 1; v <= n; ++v)
      if (deg[v - 1] >= level) allowed |= std::uint64_t{1} << (v - 1);
    auto found = find_greedy_ordering(g, allowed, {}, state_budget, &explored);
    if (found) {
      result.value = deg[found->at(n) - 1];
      result.witness = *found;
      result.explored = explored;
      return result;
    }
  }
  // The lowest level admits every vertex, and greedy orderings always exist.
  throw Error("greedegree search found no greedy ordering");
}

PairAvoidResult pair_avoid(const Graph& g, int a, int b, std::uint64_t state_budget) {
  require_search_size(g);
  if (a == b) throw InvalidArgument("pair_avoid needs two distinct vertices");
  if (a < 1 || a > g.order() || b < 1 || b > g.order()) throw InvalidArgument("vertex out of range");
  std::uint64_t allowed = full_mask(g.order()) & ~(std::uint64_t{1} << (a - 1)) & ~(std::uint64_t{1} << (b - 1));
  PairAvoidResult r;
  r.witness = find_greedy_ordering(g, allowed, {}, state_budget, &r.explored);
  r.avoidable = r.witness.has_value();
  return r;
}

}  // namespace orthorep
