// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; the only tolerances are the pinned sample sizes and budgets below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "orthorep/error.hpp"
#include "orthorep/garden.hpp"
#include "orthorep/graph_catalog.hpp"
#include "orthorep/graph_io.hpp"
#include "orthorep/lss.hpp"
#include "orthorep/matrix_props.hpp"
#include "orthorep/sat_reduction.hpp"
#include "orthorep/unique_monomial.hpp"

using namespace orthorep;

namespace {

// Pinned parameters.
constexpr int kSweepMaxN = 7;
constexpr std::uint64_t kSweepSeeds[] = {1, 2};
constexpr int kSapMatrices = 500;
constexpr int kSapMaxDraws = 200'000;
constexpr std::uint64_t kP4Seeds = 100;
constexpr int kLemmaMaxN = 5;
constexpr std::size_t kLemmaOrderCap = 50;
constexpr int kAgreementMaxN = 4;
constexpr int kAgreementMaxD = 3;
// 3^15: the empty graph on four vertices has 15 conduits in its largest Type II garden.
constexpr std::uint64_t kAgreementGuard = 14'348'907;
constexpr int kLawCases = 100;
constexpr int kRandomCnfs = 50;
constexpr int kCnfMaxAtoms = 3;
constexpr int kCnfMaxClauses = 4;
constexpr int kGreedegreeMaxN = 7;
constexpr int kLaplacianMaxN = 6;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message and a running summary.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      failure_ = what;
    }
  }
  bool pass() const { return pass_; }
  Outcome done(const std::string& summary) const { return {pass_, pass_ ? summary : failure_ + " (" + summary + ")"}; }

 private:
  bool pass_ = true;
  std::string failure_;
};

Graph co_p4() { return complement(path_graph(4)); }

std::string order_str(const Ordering& o) {
  std::string s;
  for (int p = 1; p <= o.size(); ++p) s += (p > 1 ? "," : "") + std::to_string(o.at(p));
  return s;
}

Outcome main_theorem_sweep() {
  Check c;
  int runs = 0, reseeded = 0;
  for (int n = 2; n <= kSweepMaxN; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      if (connected_components(g) != 1) continue;
      const auto gd = greedegree(g);
      for (std::uint64_t seed : kSweepSeeds) {
        const auto w = main_theorem_witness(g, seed);
        const std::string tag = to_graph6(g) + " seed " + std::to_string(seed);
        const int deg_last = g.degree(w.ordering.at(n));
        const auto t = w.run.t_vertex_order();
        c.expect(w.ordering == gd.witness, tag + ": ordering is not the greedegree witness");
        c.expect(is_greedy(g, w.ordering), tag + ": ordering not greedy");
        c.expect(w.run.d == n - deg_last, tag + ": d != n - deg(v_n)");
        c.expect(w.reseeds <= kMaxReseeds, tag + ": too many reseeds");
        c.expect(w.report.strong, tag + ": not strong");
        c.expect(pattern_check(t, g).is_faithful, tag + ": not faithful");
        c.expect(psd_check(t).psd, tag + ": not PSD");
        c.expect(nullity(t) == deg_last, tag + ": nullity != deg(v_n)");
        c.expect(is_upper_zero_generic(t, w.ordering).generic, tag + ": not upper-zero generic");
        c.expect(has_sap(t).has_sap, tag + ": no SAP");
        reseeded += w.reseeds > 0 ? 1 : 0;
        ++runs;
      }
    }
  }
  return c.done(std::to_string(runs) + " runs over connected graphs n<=7, " + std::to_string(reseeded) +
                " needed a reseed");
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Outcome upper_zero_implies_sap() {
  Check c;
  std::mt19937_64 rng(2024);
  int passing = 0, draws = 0, agreements = 0;
  while (passing < kSapMatrices && draws < kSapMaxDraws) {
    ++draws;
    const int n = 2 + static_cast<int>(rng() % 5);
    RationalMatrix a(n, n);
    if (draws % 3 == 0) {
      // Gram matrices of LSS runs carry structured zero patterns.
      const Graph g = oracle::random_graph(rng, n, 0.5);
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 1);
      std::shuffle(p.begin(), p.end(), rng);
      a = uniform_lss(g, Ordering(p), 1 + static_cast<int>(rng() % n), rng(), 5).T;
    } else {
      std::bernoulli_distribution zero(0.5);
      for (int i = 0; i < n; ++i) {
        do a(i, i) = random_rational(rng);
        while (a(i, i) == 0);
        for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = zero(rng) ? Rational(0) : random_rational(rng);
      }
    }
    const auto sap = has_sap(a);
    const int brute = oracle::sap_nullity_by_products(a);
    c.expect(sap.x_nullity == brute, "assembled and brute-force SAP nullities differ on\n" + to_text(a));
    agreements += sap.x_nullity == brute ? 1 : 0;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    if (!is_upper_zero_generic(a, Ordering(p)).generic) continue;
    ++passing;
    c.expect(sap.has_sap, "upper-zero generic matrix without SAP:\n" + to_text(a));
  }
  c.expect(passing == kSapMatrices, "only " + std::to_string(passing) + " upper-zero generic matrices found");
  return c.done(std::to_string(passing) + " upper-zero generic matrices have SAP; SAP paths agree on " +
                std::to_string(agreements) + "/" + std::to_string(draws) + " matrices");
}

Outcome p4_cancellation() {
  Check c;
  const Graph g = co_p4();
  const auto ord = Ordering::identity(4);
  const Garden garden = build_lss_garden_II(g, ord, 1, 4, 2);
  const auto nz = nonzero_valuations(garden, 2);
  c.expect(nz.size() == 2, "expected 2 nonzero valuations, got " + std::to_string(nz.size()));
  if (nz.size() == 2) {
    const auto [m0, c0] = nz[0].second.value.leading_term();
    const auto [m1, c1] = nz[1].second.value.leading_term();
    c.expect(nz[0].second.value.size() == 1 && nz[1].second.value.size() == 1, "valuations are not monomials");
    c.expect(m0 == m1 && c0 == -c1, "the two valuations do not cancel");
  }
  c.expect(garden_function_bruteforce(garden, {}, 2).entries[0].is_zero(), "garden polynomial is not zero");
  const auto cols = symbolic_columns(g, ord, 2);
  c.expect(symbolic_gram_entry(cols, 1, 4).is_zero(), "symbolic t14 is not zero");
  for (std::uint64_t seed = 1; seed <= kP4Seeds; ++seed)
    c.expect(uniform_lss(g, ord, 2, seed).T(0, 3) == 0, "numeric t14 != 0 at seed " + std::to_string(seed));
  return c.done("2 cancelling valuations, zero polynomial, t14 = 0 for seeds 1.." + std::to_string(kP4Seeds));
}

Outcome unique_monomial_lemma() {
  Check c;
  int pairs = 0, orderings = 0, searched = 0;
  for (int n = 1; n <= kLemmaMaxN; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      for (const auto& ord : enumerate_greedy_orderings(g, kLemmaOrderCap)) {
        ++orderings;
        const auto k = constraint_counts(g, ord);
        const int d = k[n] + 1;
        for (int j = 1; j <= n; ++j)
          for (int i = 1; i <= j; ++i) {
            if (i != j && !g.adjacent(ord.at(i), ord.at(j))) continue;
            const auto r = verify_unique_monomial(g, ord, i, j, d);
            const std::string tag = to_graph6(g) + " order " + order_str(ord) + " pair " + std::to_string(i) + "," +
                                    std::to_string(j);
            const auto predicted = predicted_dominant(g, ord, i, j, d);
            c.expect(r.leading.has_value(), tag + ": no leading monomial");
            c.expect(r.leading_coefficient == 1 || r.leading_coefficient == -1, tag + ": coefficient not +-1");
            c.expect(r.leading && *r.leading == predicted.monomial, tag + ": leading monomial differs from prediction");
            c.expect(r.leading_coefficient == predicted.sign, tag + ": sign differs from predicted_dominant");
            if (i < j) c.expect(r.leading_coefficient == predicted_sign(g, ord, i, j), tag + ": sign differs from predicted_sign");
            searched += r.method == "labeling-search" ? 1 : 0;
            ++pairs;
          }
      }
    }
  }
  return c.done(std::to_string(pairs) + " pairs over " + std::to_string(orderings) + " greedy orderings (n<=5), " +
                std::to_string(searched) + " via labeling search");
}

Outcome symbolic_numeric_agreement() {
  // Every labelled graph under the identity ordering covers every
  // (graph, ordering) pair up to relabeling.
  Check c;
  int instances = 0;
  std::uint64_t seed = 500;
  for (int n = 1; n <= kAgreementMaxN; ++n) {
    for_each_labelled_graph(n, [&](const Graph& g) {
      const auto ord = Ordering::identity(n);
      for (int d = 1; d <= kAgreementMaxD; ++d) {
        const std::string tag = to_graph6(g) + " d " + std::to_string(d);
        const auto values = random_node_values(++seed);
        const auto run = uniform_lss_parametrized(g, ord, d, values);
        const auto cols = symbolic_columns(g, ord, d);
        const auto subst = [&](const NodeVariable& v) { return values(v.vertex, v.mask); };
        for (int j = 1; j <= n; ++j) {
          const auto brute = garden_function_bruteforce(build_lss_garden_I(g, ord, j, d), {}, d, kAgreementGuard);
          for (int r = 1; r <= d; ++r) {
            c.expect(cols[j - 1][r - 1].evaluate(subst) == run.R(r - 1, j - 1), tag + ": substitution mismatch");
            c.expect(cols[j - 1][r - 1] == brute.entries[r - 1], tag + ": column differs from garden brute force");
          }
          for (int i = 1; i <= j; ++i) {
            const auto garden = build_lss_garden_II(g, ord, i, j, d);
            const auto t = garden_function_bruteforce(garden, {}, d, kAgreementGuard).entries[0];
            c.expect(symbolic_gram_entry(cols, i, j) == t, tag + ": Gram entry differs from Type II garden");
            c.expect(t.evaluate(subst) == run.T(i - 1, j - 1), tag + ": Gram entry substitution mismatch");
          }
        }
        ++instances;
      }
    });
  }
  return c.done(std::to_string(instances) + " (labelled graph, d) instances with n<=4, d<=3");
}

std::vector<GardenPolynomial> int_vec(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<GardenPolynomial> v;
  for (int r = 0; r < d; ++r) v.push_back(GardenPolynomial::constant(dist(rng)));
  return v;
}

std::vector<GardenPolynomial> sym_vec(int family, int d) {
  std::vector<GardenPolynomial> v;
  for (int r = 1; r <= d; ++r) v.push_back(GardenPolynomial::variable({family, 1u << (r - 1)}));
  return v;
}

GardenPolynomial scalar(const Garden& g, const GardenInputs& in, int d) {
  return garden_function_bruteforce(g, in, d).entries.at(0);
}

Outcome garden_laws() {
  Check c;
  std::mt19937_64 rng(77);
  int inner = 0, ortho = 0, alt = 0, lin = 0, homog = 0;
  for (int t = 0; t < kLawCases; ++t) {
    const int d = 1 + t % 4;
    const auto x = t % 2 ? sym_vec(50, d) : int_vec(rng, d);
    const auto y = sym_vec(51, d);
    GardenPolynomial want;
    for (int r = 0; r < d; ++r) want += x[r].multiply(y[r]);
    c.expect(scalar(inner_product_garden(), {x, y}, d) == want, "inner product law");
    ++inner;
  }
  for (int t = 0; t < kLawCases; ++t) {
    const int d = 2 + t % 2, k = 1 + t % d;
    GardenInputs w;
    for (int s = 0; s < k; ++s) w.push_back(t % 3 ? int_vec(rng, d) : sym_vec(60 + s, d));
    const auto phi = garden_function_bruteforce(phi_alpha_garden(1, k), w, d).entries;
    for (int s = 0; s < k; ++s) {
      GardenPolynomial dot_ws;
      for (int r = 0; r < d; ++r) dot_ws += phi[r].multiply(w[s][r]);
      c.expect(dot_ws.is_zero(), "phi orthogonality law");
    }
    ++ortho;
  }
  for (int t = 0; t < kLawCases; ++t) {
    const int d = 2 + t % 2, k = 1 + t % d;
    GardenInputs in;
    for (int s = 0; s <= k; ++s) in.push_back(t % 2 ? int_vec(rng, d) : sym_vec(70 + s, d));
    const int a = static_cast<int>(rng() % (k + 1));
    const int b = (a + 1 + static_cast<int>(rng() % k)) % (k + 1);
    GardenInputs swapped = in;
    std::swap(swapped[a], swapped[b]);
    const Garden g = g_alpha_garden(1, k);
    c.expect(scalar(g, swapped, d) == -scalar(g, in, d), "alternating law");
    ++alt;
  }
  for (int t = 0; t < kLawCases; ++t) {
    const int d = 2 + t % 2, k = 1 + t % d;
    GardenInputs in;
    for (int s = 0; s <= k; ++s) in.push_back(int_vec(rng, d));
    const int slot = static_cast<int>(rng() % (k + 1));
    const auto x = int_vec(rng, d), y = sym_vec(80, d);
    const std::int64_t ca = 1 + static_cast<std::int64_t>(rng() % 5), cb = -2 + static_cast<std::int64_t>(rng() % 5);
    std::vector<GardenPolynomial> mix;
    for (int r = 0; r < d; ++r) mix.push_back(x[r].scaled(ca) + y[r].scaled(cb));
    GardenInputs ix = in, iy = in, im = in;
    ix[slot] = x;
    iy[slot] = y;
    im[slot] = mix;
    const Garden g = g_alpha_garden(2, k);
    c.expect(scalar(g, im, d) == scalar(g, ix, d).scaled(ca) + scalar(g, iy, d).scaled(cb), "multilinearity law");
    ++lin;
  }
  for (int t = 0; homog < kLawCases && t < 100 * kLawCases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    const int d = 2 + static_cast<int>(rng() % 2);
    const int j = 1 + static_cast<int>(rng() % n);
    const Garden gi = build_lss_garden_I(g, Ordering(p), j, d);
    if (gi.conduit_count() > 8) continue;
    std::map<int, int> labels;
    for (const auto& node : gi.nodes) ++labels[node.vertex];
    for (const auto& e : garden_function_bruteforce(gi, {}, d).entries)
      for (const auto& [m, coeff] : e.sorted_terms()) {
        const auto deg = family_degrees(m);
        bool ok = deg.size() == labels.size();
        for (const auto& [fam, cnt] : labels) ok = ok && deg.count(fam) && deg.at(fam) == cnt;
        c.expect(ok, "multihomogeneity law");
      }
    ++homog;
  }
  c.expect(homog >= kLawCases, "too few multihomogeneity cases");
  std::ostringstream s;
  s << "cases: inner " << inner << ", orthogonality " << ortho << ", alternating " << alt << ", multilinear " << lin
    << ", multihomogeneous " << homog;
  return c.done(s.str());
}

CnfFormula random_cnf(std::mt19937_64& rng) {
  CnfFormula phi;
  phi.t = 1 + static_cast<int>(rng() % kCnfMaxAtoms);
  const int k = 1 + static_cast<int>(rng() % kCnfMaxClauses);
  while (phi.k() < k) {
    std::vector<int> atoms(phi.t);
    std::iota(atoms.begin(), atoms.end(), 1);
    std::shuffle(atoms.begin(), atoms.end(), rng);
    std::vector<Literal> clause;
    const int width = 1 + static_cast<int>(rng() % phi.t);
    for (int w = 0; w < width; ++w) clause.push_back(rng() % 2 ? atoms[w] : -atoms[w]);
    phi.clauses.push_back(clause);
  }
  return phi;
}

Outcome reduction() {
  Check c;
  const auto phi = parse_dimacs("p cnf 3 5\n1 2 3 0\n-1 2 0\n1 -3 0\n-2 3 0\n-1 -2 -3 0\n");
  const auto b = build_formula_graph(phi, ReductionMode::factor(1));
  c.expect(b.n == 22 && b.delta == 11 && b.Delta == 15 && b.f == 4 && b.m == 4, "worked-example numbers differ");
  c.expect(verify_dichotomy(b).passed, "dichotomy fails on the worked formula");
  const auto eq = reduction_equivalence_check(phi, b);
  c.expect(!eq.satisfiable && !eq.pair_avoidable && eq.agree, "worked formula: SAT/pair_avoid not both false");
  std::mt19937_64 rng(99);
  int disagreements = 0, sat = 0;
  for (int t = 0; t < kRandomCnfs; ++t) {
    const auto f = random_cnf(rng);
    const auto fb = build_formula_graph(f, ReductionMode::factor(1));
    c.expect(verify_dichotomy(fb).passed, "dichotomy fails on\n" + to_dimacs(f));
    const auto r = reduction_equivalence_check(f, fb);
    disagreements += r.agree && r.constructed_ok ? 0 : 1;
    sat += r.satisfiable ? 1 : 0;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
  return c.done("n=22 delta=11 Delta=15 f=4 m=4; " + std::to_string(kRandomCnfs) + " random CNFs (" +
                std::to_string(sat) + " satisfiable), 0 disagreements");
}

Outcome greedegree_truths() {
  Check c;
  int graphs = 0, trees = 0, regular = 0;
  for (int n = 1; n <= kGreedegreeMaxN; ++n) {
    for (const auto& g : nonisomorphic_graphs(n)) {
      const auto r = greedegree(g);
      const auto degs = g.degrees();
      const int lo = *std::min_element(degs.begin(), degs.end()), hi = *std::max_element(degs.begin(), degs.end());
      const std::string tag = to_graph6(g);
      c.expect(r.value == oracle::greedegree_bruteforce(g), tag + ": differs from exhaustive oracle");
      c.expect(lo <= r.value && r.value <= hi, tag + ": outside [min degree, max degree]");
      c.expect(is_greedy(g, r.witness) && g.degree(r.witness.at(n)) == r.value, tag + ": bad witness");
      if (n >= 2 && g.edge_count() == n - 1 && connected_components(g) == 1) {
        c.expect(r.value == 1, tag + ": tree with greedegree != 1");
        ++trees;
      }
      if (lo == hi) {
        c.expect(r.value == lo, tag + ": regular graph with greedegree != k");
        ++regular;
      }
      ++graphs;
    }
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int n = 8 + t % 12;
    Graph tree(n);
    for (int v = 2; v <= n; ++v) tree.add_edge(v, 1 + static_cast<int>(rng() % (v - 1)));
    c.expect(greedegree(tree).value == 1, "random tree with greedegree != 1");
    ++trees;
  }
  for (int n = 8; n <= 12; ++n) {
    c.expect(greedegree(cycle_graph(n)).value == 2, "cycle");
    c.expect(greedegree(complete_graph(n)).value == n - 1, "complete graph");
    regular += 2;
  }
  c.expect(greedegree(petersen_graph()).value == 3, "Petersen graph");
  ++regular;
  return c.done(std::to_string(graphs) + " graphs n<=7 match the oracle; " + std::to_string(trees) + " trees, " +
                std::to_string(regular) + " regular graphs");
}

Outcome laplacian_baseline() {
  Check c;
  int graphs = 0;
  for (int n = 1; n <= kLaplacianMaxN; ++n) {
    for_each_labelled_graph(n, [&](const Graph& g) {
      const auto t = gram(laplacian_representation(g));
      c.expect(pattern_check(t, g).is_faithful, to_graph6(g) + ": Laplacian Gram not faithful");
      c.expect(nullity(t) == oracle::components_union_find(g), to_graph6(g) + ": nullity != components");
      ++graphs;
    });
  }
  return c.done(std::to_string(graphs) + " labelled graphs n<=6");
}

}  // namespace

// Optional arguments select criteria by number; none runs all.
int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Main Theorem sweep", main_theorem_sweep},
      {"upper-zero generic implies SAP", upper_zero_implies_sap},
      {"P4 cancellation", p4_cancellation},
      {"Unique Monomial Lemma", unique_monomial_lemma},
      {"symbolic/numeric agreement", symbolic_numeric_agreement},
      {"garden algebra laws", garden_laws},
      {"SAT reduction", reduction},
      {"greedegree ground truths", greedegree_truths},
      {"Laplacian baseline", laplacian_baseline},
  };
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int a = 1; a < argc; ++a) {
    const std::size_t k = std::strtoul(argv[a], nullptr, 10);
    if (k < 1 || k > criteria.size()) {
      std::fprintf(stderr, "unknown criterion %s\n", argv[a]);
      return 2;
    }
    selected[k - 1] = true;
  }
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
