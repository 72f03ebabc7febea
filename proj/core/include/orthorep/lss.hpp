#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "orthorep/graph.hpp"
#include "orthorep/linalg.hpp"

namespace orthorep {

/// Values for the free parameters of the node-variable families. Called with
/// a position j and an index set (bit i-1 for index i) of size k(v_j)+1.
using NodeValueFn = std::function<Rational(int position, std::uint32_t index_mask)>;

/// Deterministic pseudo-random node values p/q with |p| <= bound, 1 <= q <= bound,
/// derived from (seed, position, mask) alone.
NodeValueFn random_node_values(std::uint64_t seed, std::int64_t bound = 1000);

/// Draws uniformly from [-bound, bound] with rejection so the stream is the
/// same on every standard library.
std::int64_t uniform_signed(std::mt19937_64& rng, std::int64_t bound);

struct LssStep {
  int position = 0;
  /// W_j as positions.
  std::vector<int> wlist;
  bool w_independent = true;
  /// Dimension of S_j (0 when W_j is dependent and the rule forces zero).
  int complement_dim = 0;
  bool zero = false;
  /// Grid coefficients used for the combination of the S_j basis (grid mode only).
  std::vector<std::int64_t> coefficients;
};

enum class LssSampler { grid, node_variables };

/// One run of uniform LSS. Columns of R and rows/columns of T are indexed by
/// position: column j is the vector of the vertex at position j.
struct LssRun {
  Graph graph{1};
  Ordering ordering = Ordering::identity(1);
  int d = 1;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  LssSampler sampler = LssSampler::grid;
  RationalMatrix R;
  RationalMatrix T;
  std::vector<LssStep> steps;  // steps[j-1] for position j

  /// R with column v holding the vector of vertex v.
  RationalMatrix r_vertex_order() const;
  /// T with row/column v belonging to vertex v.
  RationalMatrix t_vertex_order() const;
};

constexpr std::int64_t kDefaultCoefficientBound = 1'000'000;

/// Uniform LSS with grid sampling: column j is a uniform integer combination,
/// coefficients in [-bound, bound], of an exact basis of S_j (redrawn if zero),
/// or the zero vector when W_j is dependent or spans the whole space.
LssRun uniform_lss(const Graph& g, const Ordering& ord, int d, std::uint64_t seed,
                   std::int64_t bound = kDefaultCoefficientBound);

/// Uniform LSS where column j is the alternating multilinear combination
/// phi(v_j) = phi_alpha(W_j) with the node-variable values supplied.
LssRun uniform_lss_parametrized(const Graph& g, const Ordering& ord, int d, const NodeValueFn& values);

struct SuccessReport {
  bool weak = false;
  bool strong = false;
  /// First (j, i) in (j, i) order with W_{j;i} dependent.
  std::optional<std::pair<int, int>> failing_pair;
  int codimension = 0;
};

SuccessReport detect_success(const LssRun& run);

/// W_j with the earlier neighbour at position i merged in position order.
std::vector<int> expanded_wlist(const Graph& g, const Ordering& ord, int j, int i);

struct MainTheoremWitness {
  Ordering ordering = Ordering::identity(1);
  LssRun run;
  SuccessReport report;
  /// Number of reseeds used (0 when the first seed worked).
  int reseeds = 0;
  /// Degree of the final vertex, equal to the greedegree.
  int final_degree = 0;
};

constexpr int kMaxReseeds = 8;

/// Greedegree-optimal greedy ordering, uniform LSS at d = n - deg(v_n), and
/// a strong, faithful result. Throws DegeneracyError after kMaxReseeds failures.
MainTheoremWitness main_theorem_witness(const Graph& g, std::uint64_t seed,
                                        std::int64_t bound = kDefaultCoefficientBound);

/// Seed used for reseed attempt `attempt` (attempt 0 returns seed itself).
std::uint64_t reseed(std::uint64_t seed, int attempt);

}  // namespace orthorep
