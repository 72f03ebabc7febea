#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orthorep {

/// Simple undirected graph on vertices 1..n, stored as dense bitset rows.
///
/// All vertex arguments are 1-based. Search routines (greedy orderings,
/// greedegree, pair avoidance) additionally require n <= 64 so that vertex
/// sets fit in a single machine word; construction, complement and I/O work
/// for any size.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  int edge_count() const;
  std::vector<int> degrees() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Neighbourhood of v as a word, bit (u-1) set when u ~ v. Requires n <= 64.
  std::uint64_t neighbour_mask(int v) const;

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

 private:
  void check_vertex(int v) const;
  std::size_t word_index(int u, int v) const { return static_cast<std::size_t>(u - 1) * words_ + (v - 1) / 64; }

  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> names_;
};

/// Graph on the same vertices with exactly the complementary set of edges.
Graph complement(const Graph& g);

/// Number of connected components (isolated vertices count as components).
int connected_components(const Graph& g);

/// A vertex ordering: a bijection from positions 1..n onto the vertices 1..n.
class Ordering {
 public:
  explicit Ordering(std::vector<int> vertices);
  static Ordering identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  /// Vertex at position j (1-based).
  int at(int position) const;
  /// Position (1-based) of vertex v.
  int position_of(int v) const;
  const std::vector<int>& vertices() const { return perm_; }

  bool operator==(const Ordering& other) const { return perm_ == other.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

/// The graph relabelled so that vertex j is the vertex at position j of `ord`.
/// Names travel with their vertices.
Graph relabel(const Graph& g, const Ordering& ord);

/// W_j as positions: the positions i < j whose vertex is not adjacent to the
/// vertex at position j, in increasing order.
std::vector<int> earlier_non_neighbours(const Graph& g, const Ordering& ord, int j);

/// k(v_j) = |W_j| for every position j (index 0 unused).
std::vector<int> constraint_counts(const Graph& g, const Ordering& ord);

/// Number of h < i with v_h ~ v_j, positions taken in `ord`. Requires 1 <= i <= j <= n.
int local_degree(const Graph& g, const Ordering& ord, int i, int j);

bool is_greedy(const Graph& g, const Ordering& ord);

/// k(v_i) <= k_i(v_j) for all i <= j, all counts taken in h.
bool is_anti_greedy(const Graph& h, const Ordering& ord);

/// Visits every greedy ordering in lexicographic order of the chosen vertex
/// ids. The visitor returns false to stop early. Returns the number emitted.
std::size_t for_each_greedy_ordering(const Graph& g, const std::function<bool(const Ordering&)>& visit,
                                     std::optional<std::size_t> limit = std::nullopt);

std::vector<Ordering> enumerate_greedy_orderings(const Graph& g, std::optional<std::size_t> limit = std::nullopt);

struct GreedegreeResult {
  int value = 0;
  Ordering witness = Ordering::identity(1);
  std::uint64_t explored = 0;
};

/// Exact greedegree with the lexicographically first greedy ordering attaining it.
/// `state_budget` bounds the number of distinct search states touched.
GreedegreeResult greedegree(const Graph& g, std::uint64_t state_budget = 50'000'000);

struct PairAvoidResult {
  bool avoidable = false;
  std::optional<Ordering> witness;
  std::uint64_t explored = 0;
};

/// Decides whether some greedy ordering ends at a vertex other than a or b.
PairAvoidResult pair_avoid(const Graph& g, int a, int b, std::uint64_t state_budget = 50'000'000);

/// Lexicographically first greedy ordering whose final vertex lies in
/// `allowed_final` (bit v-1 for vertex v), starting from a fixed greedy prefix.
/// Returns nullopt when none exists. Throws InvalidArgument if the prefix is
/// not a valid greedy start.
std::optional<Ordering> find_greedy_ordering(const Graph& g, std::uint64_t allowed_final,
                                             const std::vector<int>& prefix = {},
                                             std::uint64_t state_budget = 50'000'000,
                                             std::uint64_t* explored = nullptr);

}  // namespace orthorep
