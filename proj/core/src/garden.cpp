#include "orthorep/garden.hpp"

#include <algorithm>
#include <functional>

#include "orthorep/error.hpp"

namespace orthorep {

SignedVariable eval_node_variable(int vertex, const std::vector<int>& indices, int d) {
  if (indices.empty()) throw InvalidArgument("a node variable needs at least one index");
  if (d < 1 || d > 32) throw InvalidArgument("index universe must satisfy 1 <= d <= 32");
  std::uint32_t mask = 0;
  SignedVariable out;
  for (int x : indices) {
    if (x < 1 || x > d) throw InvalidArgument("node variable index out of range");
    if (mask & (1u << (x - 1))) return out;  // repeated index: zero
    mask |= 1u << (x - 1);
  }
  int inversions = 0;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (indices[a] > indices[b]) ++inversions;
  out.sign = inversions % 2 == 0 ? 1 : -1;
  out.variable = NodeVariable{vertex, mask};
  return out;
}

int Garden::input_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                        [](const GardenNode& n) { return n.kind == GardenNode::Kind::input; }));
}

int Garden::family_node_count() const { return static_cast<int>(nodes.size()) - input_count(); }

int Garden::conduit_count() const {
  return static_cast<int>(nodes.size()) - (type == GardenType::II ? 1 : 0);
}

int Garden::conduit_of(int id) const {
  if (type == GardenType::II && id == tops[1]) return tops[0];
  return id;
}

void Garden::validate() const {
  const int n = static_cast<int>(nodes.size());
  const std::size_t want_tops = type == GardenType::I ? 1 : 2;
  if (tops.size() != want_tops) throw InvalidArgument("garden has the wrong number of top nodes");
  std::vector<int> parents(n, 0);
  for (int t : tops) {
    if (t < 0 || t >= n) throw InvalidArgument("top node id out of range");
    ++parents[t];
  }
  std::vector<int> slots;
  for (const auto& node : nodes) {
    if (node.kind == GardenNode::Kind::input) {
      if (!node.children.empty()) throw InvalidArgument("input boxes cannot have children");
      slots.push_back(node.slot);
    } else if (node.vertex < 0) {
      throw InvalidArgument("family label must be non-negative");
    }
    for (int c : node.children) {
      if (c < 0 || c >= n) throw InvalidArgument("child id out of range");
      ++parents[c];
    }
  }
  for (int p : parents)
    if (p != 1) throw InvalidArgument("every node needs exactly one upper conduit");
  std::sort(slots.begin(), slots.end());
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s] != static_cast<int>(s) + 1) throw InvalidArgument("input slots must be numbered 1..q");
  // Reachability from the tops rules out cycles given the parent counts.
  std::vector<char> seen(n, 0);
  std::vector<int> stack(tops.begin(), tops.end());
  int reached = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (seen[x]) throw InvalidArgument("garden is not a forest");
    seen[x] = 1;
    ++reached;
    for (int c : nodes[x].children) stack.push_back(c);
  }
  if (reached != n) throw InvalidArgument("garden has unreachable nodes");
}

namespace {

struct ConduitPlan {
  std::vector<int> conduits;                  // distinct conduit ids in assignment order
  std::vector<std::vector<int>> touching;     // conduit id -> family nodes using it
  std::vector<std::vector<int>> node_conduits;  // family node -> its conduits
};

ConduitPlan plan_conduits(const Garden& garden) {
  const int n = static_cast<int>(garden.nodes.size());
  ConduitPlan plan;
  plan.touching.assign(n, {});
  plan.node_conduits.assign(n, {});
  for (int x = 0; x < n; ++x)
    if (garden.conduit_of(x) == x) plan.conduits.push_back(x);
  for (int x = 0; x < n; ++x) {
    const auto& node = garden.nodes[x];
    if (node.kind != GardenNode::Kind::family) continue;
    for (int c : node.children) plan.node_conduits[x].push_back(garden.conduit_of(c));
    plan.node_conduits[x].push_back(garden.conduit_of(x));
    for (int c : plan.node_conduits[x]) plan.touching[c].push_back(x);
  }
  return plan;
}

std::uint64_t checked_power(int d, int p, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (int i = 0; i < p; ++i) {
    total *= static_cast<std::uint64_t>(d);
    if (total > guard) throw BudgetExceeded("garden indexing count d^p exceeds the guard");
  }
  return total;
}

// Visits every indexing that gives no family node a repeated label.
void for_each_distinct_indexing(const Garden& garden, int d, const std::function<void(const Indexing&)>& visit) {
  const auto plan = plan_conduits(garden);
  Indexing labels(garden.nodes.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == plan.conduits.size()) {
      visit(labels);
      return;
    }
    const int c = plan.conduits[at];
    for (int label = 1; label <= d; ++label) {
      bool ok = true;
      for (int x : plan.touching[c]) {
        for (int other : plan.node_conduits[x]) {
          if (other != c && labels[other] == label) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      labels[c] = label;
      rec(at + 1);
      labels[c] = 0;
    }
  };
  rec(0);
}

}  // namespace

Valuation valuate(const Garden& garden, const GardenInputs& inputs, const Indexing& indexing, int d) {
  if (static_cast<int>(inputs.size()) != garden.input_count())
    throw InvalidArgument("one input vector is required per input box");
  if (indexing.size() != garden.nodes.size()) throw InvalidArgument("indexing must cover every conduit id");
  Valuation out;
  int sign = 1;
  std::vector<NodeVariable> vars;
  GardenPolynomial factor = GardenPolynomial::constant(1);
  for (int x = 0; x < static_cast<int>(garden.nodes.size()); ++x) {
    const auto& node = garden.nodes[x];
    const int upper = indexing[garden.conduit_of(x)];
    if (upper < 1 || upper > d) throw InvalidArgument("conduit label out of range");
    if (node.kind == GardenNode::Kind::input) {
      const auto& vec = inputs[node.slot - 1];
      if (static_cast<int>(vec.size()) != d) throw InvalidArgument("input vector length must equal d");
      factor = factor.multiply(vec[upper - 1]);
      if (factor.is_zero()) break;
      continue;
    }
    std::vector<int> idx;
    for (int c : node.children) idx.push_back(indexing[garden.conduit_of(c)]);
    idx.push_back(upper);
    const auto sv = eval_node_variable(node.vertex, idx, d);
    if (sv.sign == 0) {
      sign = 0;
      break;
    }
    sign *= sv.sign;
    vars.push_back(sv.variable);
  }
  if (garden.type == GardenType::I) out.external_label = indexing[garden.conduit_of(garden.tops[0])];
  if (sign == 0 || factor.is_zero()) return out;
  out.value = GardenPolynomial::term(make_monomial(vars), sign).multiply(factor);
  return out;
}

GardenValue garden_function_bruteforce(const Garden& garden, const GardenInputs& inputs, int d, std::uint64_t guard) {
  garden.validate();
  if (d < 1) throw InvalidArgument("dimension must be positive");
  checked_power(d, garden.conduit_count(), guard);
  GardenValue out;
  out.type = garden.type;
  out.entries.assign(garden.type == GardenType::I ? d : 1, GardenPolynomial{});
  for_each_distinct_indexing(garden, d, [&](const Indexing& labels) {
    ++out.indexings_visited;
    auto v = valuate(garden, inputs, labels, d);
    if (v.value.is_zero()) return;
    out.entries[garden.type == GardenType::I ? v.external_label - 1 : 0] += v.value;
  });
  return out;
}

std::vector<std::pair<Indexing, Valuation>> nonzero_valuations(const Garden& garden, int d, std::uint64_t guard) {
  garden.validate();
  if (garden.input_count() != 0) throw InvalidArgument("nonzero_valuations expects a garden without inputs");
  checked_power(d, garden.conduit_count(), guard);
  std::vector<std::pair<Indexing, Valuation>> out;
  for_each_distinct_indexing(garden, d, [&](const Indexing& labels) {
    auto v = valuate(garden, {}, labels, d);
    if (!v.value.is_zero()) out.emplace_back(labels, std::move(v));
  });
  return out;
}

Garden compose(const Garden& outer, int slot, const Garden& inner) {
  outer.validate();
  inner.validate();
  if (inner.type != GardenType::I) throw InvalidArgument("only Type I gardens can be substituted into an input");
  const int q_outer = outer.input_count();
  if (slot < 1 || slot > q_outer) throw InvalidArgument("input slot out of range");
  const int q_inner = inner.input_count();

  Garden out = outer;
  int target = -1;
  for (int x = 0; x < static_cast<int>(out.nodes.size()); ++x) {
    auto& node = out.nodes[x];
    if (node.kind != GardenNode::Kind::input) continue;
    if (node.slot == slot) {
      target = x;
    } else if (node.slot > slot) {
      node.slot += q_inner - 1;
    }
  }

  // Inner's top takes over the replaced box's id; the rest are appended.
  std::vector<int> remap(inner.nodes.size());
  int next = static_cast<int>(out.nodes.size());
  for (int x = 0; x < static_cast<int>(inner.nodes.size()); ++x)
    remap[x] = x == inner.tops[0] ? target : next++;
  out.nodes.resize(next);
  for (int x = 0; x < static_cast<int>(inner.nodes.size()); ++x) {
    GardenNode node = inner.nodes[x];
    for (int& c : node.children) c = remap[c];
    if (node.kind == GardenNode::Kind::input) node.slot += slot - 1;
    out.nodes[remap[x]] = std::move(node);
  }
  out.validate();
  return out;
}

Garden inner_product_garden() {
  Garden g;
  g.type = GardenType::II;
  g.nodes = {GardenNode{GardenNode::Kind::input, 0, 1, {}}, GardenNode{GardenNode::Kind::input, 0, 2, {}}};
  g.tops = {0, 1};
  return g;
}

Garden identity_garden() {
  Garden g;
  g.nodes = {GardenNode{GardenNode::Kind::input, 0, 1, {}}};
  g.tops = {0};
  return g;
}

Garden phi_alpha_garden(int vertex, int k) {
  if (k < 0) throw InvalidArgument("arity must be non-negative");
  Garden g;
  GardenNode top{GardenNode::Kind::family, vertex, 0, {}};
  g.nodes.push_back(top);
  for (int s = 1; s <= k; ++s) {
    g.nodes[0].children.push_back(s);
    g.nodes.push_back(GardenNode{GardenNode::Kind::input, 0, s, {}});
  }
  g.tops = {0};
  return g;
}

Garden g_alpha_garden(int vertex, int k) { return compose(inner_product_garden(), 1, phi_alpha_garden(vertex, k)); }

namespace {

int add_lss_tree(Garden& garden, const Graph& g, const Ordering& ord, int j) {
  const int id = static_cast<int>(garden.nodes.size());
  garden.nodes.push_back(GardenNode{GardenNode::Kind::family, j, 0, {}});
  for (int w : earlier_non_neighbours(g, ord, j)) {
    const int c = add_lss_tree(garden, g, ord, w);
    garden.nodes[id].children.push_back(c);
  }
  return id;
}

void check_lss_args(const Graph& g, const Ordering& ord, int d) {
  if (ord.size() != g.order()) throw InvalidArgument("ordering size does not match graph order");
  if (d < 1) throw InvalidArgument("dimension must be positive");
}

}  // namespace

Garden build_lss_garden_I(const Graph& g, const Ordering& ord, int j, int d) {
  check_lss_args(g, ord, d);
  if (j < 1 || j > g.order()) throw InvalidArgument("position out of range");
  Garden garden;
  garden.dimension = d;
  garden.tops = {add_lss_tree(garden, g, ord, j)};
  return garden;
}

Garden build_lss_garden_II(const Graph& g, const Ordering& ord, int i, int j, int d) {
  check_lss_args(g, ord, d);
  if (i < 1 || j > g.order() || i > j) throw InvalidArgument("Type II LSS garden needs 1 <= i <= j <= n");
  Garden garden;
  garden.type = GardenType::II;
  garden.dimension = d;
  const int a = add_lss_tree(garden, g, ord, j);
  const int b = add_lss_tree(garden, g, ord, i);
  garden.tops = {a, b};
  return garden;
}

std::uint64_t lss_garden_size(const Graph& g, const Ordering& ord, int j) {
  std::vector<std::uint64_t> size(g.order() + 1, 0);
  for (int p = 1; p <= j; ++p) {
    size[p] = 1;
    for (int w : earlier_non_neighbours(g, ord, p)) size[p] += size[w];
  }
  return size[j];
}

}  // namespace orthorep
