#include "orthorep/lss.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>

#include "orthorep/error.hpp"
#include "orthorep/matrix_props.hpp"

namespace orthorep {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_inputs(const Graph& g, const Ordering& ord, int d) {
  if (d < 1) throw InvalidArgument("ambient dimension must be at least 1");
  if (ord.size() != g.order()) throw InvalidArgument("ordering size does not match graph order");
}

int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// Sum over injective tuples (s_1..s_k) avoiding r of
// sign(s_1..s_k, r) * value(mask) * prod_m w_m[s_m].
Rational alternating_entry(const std::vector<const RationalVector*>& w, int r, int d, int position,
                           const NodeValueFn& values) {
  const int k = static_cast<int>(w.size());
  Rational total = 0;
  std::vector<int> seq(k + 1);
  seq[k] = r;
  std::uint32_t used = 1u << (r - 1);
  // partial[depth] is the product of the entries chosen so far.
  std::vector<Rational> partial(k + 1);
  partial[0] = 1;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == k) {
      total += permutation_sign(seq) * values(position, used) * partial[k];
      return;
    }
    for (int s = 1; s <= d; ++s) {
      if (used & (1u << (s - 1))) continue;
      const Rational& entry = (*w[depth])[s - 1];
      if (sgn(entry) == 0) continue;
      seq[depth] = s;
      used |= 1u << (s - 1);
      partial[depth + 1] = partial[depth] * entry;
      rec(depth + 1);
      used &= ~(1u << (s - 1));
    }
  };
  rec(0);
  return total;
}

LssRun start_run(const Graph& g, const Ordering& ord, int d) {
  LssRun run;
  run.graph = g;
  run.ordering = ord;
  run.d = d;
  run.R = RationalMatrix(d, g.order());
  return run;
}

void finish_run(LssRun& run) { run.T = gram(run.R); }

}  // namespace

std::int64_t uniform_signed(std::mt19937_64& rng, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("coefficient bound must be positive");
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % span) - bound;
}

NodeValueFn random_node_values(std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("node value bound must be positive");
  return [seed, bound](int position, std::uint32_t mask) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(position) << 32) | mask)));
    std::int64_t p = 0;
    while (p == 0) p = uniform_signed(rng, bound);
    const std::int64_t q = std::abs(uniform_signed(rng, bound - 1)) + 1;
    Rational value(Integer(static_cast<long>(p)), Integer(static_cast<long>(q)));
    value.canonicalize();
    return value;
  };
}

std::uint64_t reseed(std::uint64_t seed, int attempt) {
  return attempt == 0 ? seed : splitmix64(seed + static_cast<std::uint64_t>(attempt));
}

RationalMatrix LssRun::r_vertex_order() const {
  RationalMatrix out(R.rows(), R.cols());
  for (int p = 1; p <= R.cols(); ++p) out.set_column(ordering.at(p) - 1, R.column(p - 1));
  return out;
}

RationalMatrix LssRun::t_vertex_order() const {
  const int n = T.rows();
  RationalMatrix out(n, n);
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) out(ordering.at(p) - 1, ordering.at(q) - 1) = T(p - 1, q - 1);
  return out;
}

LssRun uniform_lss(const Graph& g, const Ordering& ord, int d, std::uint64_t seed, std::int64_t bound) {
  check_inputs(g, ord, d);
  if (bound < 1) throw InvalidArgument("coefficient bound must be positive");
  LssRun run = start_run(g, ord, d);
  run.seed = seed;
  run.bound = bound;
  run.sampler = LssSampler::grid;
  std::mt19937_64 rng(seed);

  for (int j = 1; j <= g.order(); ++j) {
    LssStep step;
    step.position = j;
    step.wlist = earlier_non_neighbours(g, ord, j);
    std::vector<RationalVector> w;
    for (int p : step.wlist) w.push_back(run.R.column(p - 1));
    step.w_independent = linearly_independent(w);
    if (step.w_independent) {
      const auto basis = orthogonal_complement(w, d);
      step.complement_dim = static_cast<int>(basis.size());
      if (!basis.empty()) {
        RationalVector col(d, Rational(0));
        while (is_zero(col)) {
          step.coefficients.assign(basis.size(), 0);
          std::fill(col.begin(), col.end(), Rational(0));
          for (std::size_t b = 0; b < basis.size(); ++b) {
            step.coefficients[b] = uniform_signed(rng, bound);
            if (step.coefficients[b] == 0) continue;
            const Rational c(Integer(static_cast<long>(step.coefficients[b])));
            for (int r = 0; r < d; ++r) col[r] += c * basis[b][r];
          }
        }
        run.R.set_column(j - 1, col);
      }
    }
    step.zero = is_zero(run.R.column(j - 1));
    run.steps.push_back(std::move(step));
  }
  finish_run(run);
  return run;
}

LssRun uniform_lss_parametrized(const Graph& g, const Ordering& ord, int d, const NodeValueFn& values) {
  check_inputs(g, ord, d);
  if (d > 31) throw InvalidArgument("parametrized sampling supports d <= 31");
  LssRun run = start_run(g, ord, d);
  run.sampler = LssSampler::node_variables;
  std::vector<RationalVector> cols;
  for (int j = 1; j <= g.order(); ++j) {
    LssStep step;
    step.position = j;
    step.wlist = earlier_non_neighbours(g, ord, j);
    std::vector<const RationalVector*> w;
    std::vector<RationalVector> wv;
    for (int p : step.wlist) {
      w.push_back(&cols[p - 1]);
      wv.push_back(cols[p - 1]);
    }
    step.w_independent = linearly_independent(wv);
    step.complement_dim = step.w_independent ? d - static_cast<int>(wv.size()) : 0;
    RationalVector col(d, Rational(0));
    if (static_cast<int>(w.size()) < d) {
      for (int r = 1; r <= d; ++r) col[r - 1] = alternating_entry(w, r, d, j, values);
    }
    run.R.set_column(j - 1, col);
    step.zero = is_zero(col);
    cols.push_back(std::move(col));
    run.steps.push_back(std::move(step));
  }
  finish_run(run);
  return run;
}

std::vector<int> expanded_wlist(const Graph& g, const Ordering& ord, int j, int i) {
  auto w = earlier_non_neighbours(g, ord, j);
  w.insert(std::upper_bound(w.begin(), w.end(), i), i);
  return w;
}

SuccessReport detect_success(const LssRun& run) {
  SuccessReport rep;
  const int n = run.graph.order();
  const auto& g = run.graph;
  const auto& ord = run.ordering;
  auto vectors = [&](const std::vector<int>& positions) {
    std::vector<RationalVector> out;
    for (int p : positions) out.push_back(run.R.column(p - 1));
    return out;
  };

  rep.weak = true;
  for (int j = 1; j <= n && rep.weak; ++j) {
    const auto w = earlier_non_neighbours(g, ord, j);
    if (is_zero(run.R.column(j - 1)) || static_cast<int>(w.size()) >= run.d || !linearly_independent(vectors(w)))
      rep.weak = false;
  }
  for (int j = 1; j <= n && !rep.failing_pair; ++j) {
    for (int i = 1; i < j; ++i) {
      if (!g.adjacent(ord.at(i), ord.at(j))) continue;
      if (!linearly_independent(vectors(expanded_wlist(g, ord, j, i)))) {
        rep.failing_pair = std::make_pair(j, i);
        break;
      }
    }
  }
  rep.strong = rep.weak && !rep.failing_pair;
  rep.codimension = nullity(run.T);
  return rep;
}

MainTheoremWitness main_theorem_witness(const Graph& g, std::uint64_t seed, std::int64_t bound) {
  const auto gd = greedegree(g);
  const int n = g.order();
  const int final_degree = g.degree(gd.witness.at(n));
  const int d = n - final_degree;
  const Graph relabelled = relabel(g, gd.witness);
  for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
    MainTheoremWitness out;
    out.ordering = gd.witness;
    out.final_degree = final_degree;
    out.reseeds = attempt;
    out.run = uniform_lss(g, gd.witness, d, reseed(seed, attempt), bound);
    out.report = detect_success(out.run);
    if (out.report.strong && pattern_check(out.run.T, relabelled).is_faithful) return out;
  }
  throw DegeneracyError("uniform LSS did not succeed strongly after " + std::to_string(kMaxReseeds) + " reseeds");
}

}  // namespace orthorep
