#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "orthorep/error.hpp"
#include "orthorep/graph_catalog.hpp"
#include "orthorep/graph_io.hpp"
#include "orthorep/json_io.hpp"
#include "orthorep/lss.hpp"
#include "orthorep/matrix_props.hpp"
#include "orthorep/sat_reduction.hpp"
#include "orthorep/unique_monomial.hpp"

namespace orthorep::cli {

namespace {

struct Config {
  std::string command;
  std::string input;
  std::string named;
  std::string graph_input;  // check-matrix
  std::string order;
  std::uint64_t seed = 1;
  std::int64_t bound = kDefaultCoefficientBound;
  int dim = 0;  // 0 = automatic
  std::size_t budget_monomials = kDefaultMonomialBudget;
  std::uint64_t budget_index = kDefaultSearchBudget;
  std::string format = "json";
  bool verify = false;
  bool strict = false;
  int i = 0;
  int j = 0;
  std::string factor;
  std::string fraction;
  std::string out_prefix;
  bool seed_given = false;
};

Json config_json(const Config& c) {
  Json j{{"subcommand", c.command}};
  if (!c.input.empty()) j["input"] = c.input;
  if (!c.named.empty()) j["named"] = c.named;
  if (!c.graph_input.empty()) j["graph"] = c.graph_input;
  if (!c.order.empty()) j["order"] = c.order;
  j["seed"] = c.seed;
  j["bound"] = c.bound;
  j["dim"] = c.dim == 0 ? Json(nullptr) : Json(c.dim);
  j["budget_monomials"] = c.budget_monomials;
  j["budget_index"] = c.budget_index;
  j["format"] = c.format;
  j["verify"] = c.verify;
  j["strict"] = c.strict;
  if (c.command == "garden") {
    j["i"] = c.i;
    j["j"] = c.j;
  }
  if (c.command == "reduce") {
    if (!c.factor.empty()) j["factor"] = c.factor;
    if (!c.fraction.empty()) j["fraction"] = c.fraction;
  }
  return j;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path, const std::string& named) {
  if (!named.empty()) return named_graph(named);
  if (path.empty()) throw InvalidArgument("a graph input file or --named is required");
  return parse_graph(read_source(path));
}

Ordering parse_order(const std::string& text, int n) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::vector<int> perm;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      perm.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed ordering entry '" + tok + "'");
    }
  }
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("ordering must list all " + std::to_string(n) + " vertices");
  return Ordering(perm);
}

RationalMatrix load_matrix(const std::string& path) {
  const std::string text = read_source(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      return matrix_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("matrix JSON: ") + e.what());
    }
  }
  return matrix_from_text(text);
}

int final_k(const Graph& g, const Ordering& ord) {
  const auto k = constraint_counts(g, ord);
  return k[g.order()];
}

// Text rendering: one "path: value" line per scalar; matrices as aligned rows.
bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j)
    if (!row.is_array() || row.empty() || !row[0].is_string()) return false;
  return true;
}

void render_text(const Json& j, const std::string& path, std::ostream& out) {
  if (is_matrix(j)) {
    out << path << ":\n";
    for (const auto& row : j) {
      out << " ";
      for (const auto& e : row) out << ' ' << e.get<std::string>();
      out << '\n';
    }
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Config& c, Json body, std::ostream& out) {
  Json doc{{"schema", kSchemaVersion}, {"command", c.command}, {"config", config_json(c)}};
  for (auto& [k, v] : body.items()) doc[k] = std::move(v);
  if (c.format == "text")
    render_text(doc, "", out);
  else
    out << doc.dump(2) << '\n';
}

int cmd_greedegree(const Config& c, std::ostream& out) {
  const Graph g = load_graph(c.input, c.named);
  const auto r = greedegree(g, c.budget_index);
  emit(c, greedegree_to_json(g, r), out);
  return kPass;
}

int cmd_represent(const Config& c, std::ostream& out) {
  const Graph g = load_graph(c.input, c.named);
  const int n = g.order();
  MainTheoremWitness w;
  if (c.order.empty() && c.dim == 0) {
    w = main_theorem_witness(g, c.seed, c.bound);
  } else {
    w.ordering = c.order.empty() ? greedegree(g, c.budget_index).witness : parse_order(c.order, n);
    const int d = c.dim == 0 ? final_k(g, w.ordering) + 1 : c.dim;
    w.final_degree = g.degree(w.ordering.at(n));
    for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
      w.run = uniform_lss(g, w.ordering, d, reseed(c.seed, attempt), c.bound);
      w.report = detect_success(w.run);
      w.reseeds = attempt;
      if (w.report.strong && pattern_check(w.run.t_vertex_order(), g).is_faithful) break;
    }
  }
  const auto t = w.run.t_vertex_order();
  const auto pattern = pattern_check(t, g);
  const auto upper = is_upper_zero_generic(t, w.ordering);
  const auto sap = has_sap(t);
  const auto psd = psd_check(t);
  const auto mpu = mpu_witness_check(t, g, w.ordering);
  const bool pass = w.report.strong && pattern.is_faithful && upper.generic && sap.has_sap && psd.psd && mpu.passed;
  Json body{{"ordering", ordering_to_json(w.ordering)},
            {"greedy", is_greedy(g, w.ordering)},
            {"d", w.run.d},
            {"final_degree", w.final_degree},
            {"seed_used", w.run.seed},
            {"reseeds", w.reseeds},
            {"success", success_to_json(w.report)},
            {"pattern", pattern_to_json(pattern)},
            {"upper_zero", upper_zero_to_json(upper)},
            {"sap", sap_to_json(sap)},
            {"psd", psd.psd},
            {"mpu", mpu_to_json(mpu)},
            {"certified_nullity", mpu.passed ? Json(mpu.nullity) : Json(nullptr)},
            {"verdict", pass ? "pass" : "fail"},
            {"R", matrix_to_json(w.run.r_vertex_order())},
            {"T", matrix_to_json(t)}};
  emit(c, std::move(body), out);
  return pass ? kPass : kVerdictFail;
}

int cmd_garden(const Config& c, std::ostream& out) {
  const Graph g = load_graph(c.input, c.named);
  const int n = g.order();
  const Ordering ord = c.order.empty() ? greedegree(g, c.budget_index).witness : parse_order(c.order, n);
  int i = std::min(c.i, c.j), j = std::max(c.i, c.j);
  if (i < 1 || j > n) throw InvalidArgument("positions must lie in 1..n");
  const int d = c.dim == 0 ? final_k(g, ord) + 1 : c.dim;
  VerifyOptions opts;
  opts.expansion_budget = c.budget_monomials;
  opts.search_budget = c.budget_index;
  const auto r = verify_unique_monomial(g, ord, i, j, d, opts);
  std::string verdict;
  if (r.predicted)
    verdict = r.verified ? "verified" : "mismatch";
  else if (r.identically_zero)
    verdict = "identically zero";
  else
    verdict = "not applicable";
  Json body{{"ordering", ordering_to_json(ord)}, {"report", unique_monomial_to_json(r)}, {"verdict", verdict}};
  // Small polynomials are printed in full.
  if (r.method == "expansion" && r.term_count <= 64) {
    const auto cols = symbolic_columns(g, ord, d, c.budget_monomials);
    body["polynomial"] = polynomial_to_json(symbolic_gram_entry(cols, i, j, c.budget_monomials));
  }
  emit(c, std::move(body), out);
  return verdict == "mismatch" ? kVerdictFail : kPass;
}

int cmd_reduce(const Config& c, std::ostream& out) {
  const auto phi = parse_dimacs(read_source(c.input));
  if (!c.factor.empty() && !c.fraction.empty()) throw InvalidArgument("--factor and --fraction are exclusive");
  const ReductionMode mode = !c.fraction.empty() ? ReductionMode::fraction(rational_from_string(c.fraction))
                                                 : ReductionMode::factor(rational_from_string(c.factor.empty() ? "1" : c.factor));
  const auto bundle = build_formula_graph(phi, mode);
  Json body = bundle_to_json(bundle);
  body["graph6"] = to_graph6(bundle.g);
  bool pass = true;
  if (c.verify) {
    const auto dich = verify_dichotomy(bundle);
    body["dichotomy"] = Json{{"delta_bound", dich.delta_bound},
                             {"Delta_bound", dich.Delta_bound},
                             {"factor_bound", dich.factor_bound},
                             {"degrees_split", dich.degrees_split},
                             {"passed", dich.passed}};
    pass = dich.passed;
    if (bundle.n <= 64) {
      const auto eq = reduction_equivalence_check(phi, bundle, c.budget_index);
      body["equivalence"] = Json{{"satisfiable", eq.satisfiable},
                                 {"pair_avoidable", eq.pair_avoidable},
                                 {"verdict", eq.agree ? "agree" : "disagree"},
                                 {"constructed_ok", eq.constructed_ok},
                                 {"explored", eq.explored}};
      if (eq.constructed) body["equivalence"]["constructed_prefix"] = ordering_to_json(*eq.constructed);
      pass = pass && eq.agree && eq.constructed_ok;
    } else {
      body["equivalence"] = Json{{"verdict", "skipped"}, {"reason", "n exceeds 64"}};
    }
  }
  if (!c.out_prefix.empty()) {
    std::ofstream g6(c.out_prefix + ".g6");
    std::ofstream js(c.out_prefix + ".json");
    if (!g6 || !js) throw ParseError("cannot write bundle files with prefix '" + c.out_prefix + "'");
    g6 << body["graph6"].get<std::string>() << '\n';
    js << body.dump(2) << '\n';
  }
  emit(c, std::move(body), out);
  return pass ? kPass : kVerdictFail;
}

int cmd_check_matrix(const Config& c, std::ostream& out) {
  const auto a = load_matrix(c.input);
  const Graph g = load_graph(c.graph_input, c.named);
  if (a.rows() != g.order() || a.cols() != g.order()) throw InvalidArgument("matrix size does not match the graph");
  if (!a.is_symmetric()) throw InvalidArgument("matrix must be symmetric");
  const Ordering ord = c.order.empty() ? Ordering::identity(g.order()) : parse_order(c.order, g.order());
  const auto pattern = pattern_check(a, g);
  const auto upper = is_upper_zero_generic(a, ord);
  const auto sap = has_sap(a);
  const auto mpu = mpu_witness_check(a, g, ord);
  const bool pass = mpu.passed && sap.has_sap;
  Json body{{"ordering", ordering_to_json(ord)},
            {"pattern", pattern_to_json(pattern)},
            {"psd", psd_check(a).psd},
            {"upper_zero", upper_zero_to_json(upper)},
            {"sap", sap_to_json(sap)},
            {"mpu", mpu_to_json(mpu)},
            {"nullity", nullity(a)},
            {"verdict", pass ? "pass" : "fail"}};
  emit(c, std::move(body), out);
  return pass ? kPass : kVerdictFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faithful orthogonal representations via uniform LSS", "orthorep"};
  app.require_subcommand(1);
  Config c;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Base seed for the coefficient sampler")->each([&](const std::string&) {
      c.seed_given = true;
    });
    sub->add_option("--bound", c.bound, "Coefficient grid bound B")->check(CLI::PositiveNumber);
    sub->add_option("--dim", c.dim, "Dimension override")->check(CLI::PositiveNumber);
    sub->add_option("--budget-monomials", c.budget_monomials, "Monomial budget for symbolic expansion");
    sub->add_option("--budget-index", c.budget_index, "Budget for brute-force and search steps");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--strict", c.strict, "Require an explicit --seed");
  };

  auto* gd = app.add_subcommand("greedegree", "Exact greedegree with a witness greedy ordering");
  gd->add_option("input", c.input, "Graph file (graph6 or edge list, '-' for stdin)");
  gd->add_option("--named", c.named, "Built-in graph such as path:4, cycle:5, petersen");
  add_common(gd);

  auto* rep = app.add_subcommand("represent", "Faithful PSD representation by uniform LSS");
  rep->add_option("input", c.input, "Graph file");
  rep->add_option("--named", c.named, "Built-in graph");
  rep->add_option("--order", c.order, "Vertex ordering, comma separated");
  add_common(rep);

  auto* gar = app.add_subcommand("garden", "Type II LSS garden polynomial and its leading term");
  gar->add_option("input", c.input, "Graph file");
  gar->add_option("--named", c.named, "Built-in graph");
  gar->add_option("--order", c.order, "Vertex ordering, comma separated");
  gar->add_option("-i", c.i, "First position")->required();
  gar->add_option("-j", c.j, "Second position")->required();
  add_common(gar);

  auto* red = app.add_subcommand("reduce", "Formula graph for a DIMACS CNF");
  red->add_option("input", c.input, "DIMACS CNF file")->required();
  auto* fac = red->add_option("--factor", c.factor, "Approximation factor F >= 1");
  red->add_option("--fraction", c.fraction, "Fraction epsilon in (0, 1/2]")->excludes(fac);
  red->add_option("--out", c.out_prefix, "Write PREFIX.g6 and PREFIX.json");
  red->add_flag("--verify", c.verify, "Check the degree dichotomy and SAT equivalence");
  add_common(red);

  auto* chk = app.add_subcommand("check-matrix", "Pattern, PSD, upper-zero and SAP checks for a matrix");
  chk->add_option("input", c.input, "Matrix file (whitespace rows or JSON)")->required();
  chk->add_option("--graph", c.graph_input, "Graph file");
  chk->add_option("--named", c.named, "Built-in graph");
  chk->add_option("--order", c.order, "Ordering for the upper-zero test");
  add_common(chk);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  for (auto* sub : {gd, rep, gar, red, chk})
    if (sub->parsed()) c.command = sub->get_name();

  try {
    if (c.strict && !c.seed_given) throw InvalidArgument("--strict requires an explicit --seed");
    if (c.command == "greedegree") return cmd_greedegree(c, out);
    if (c.command == "represent") return cmd_represent(c, out);
    if (c.command == "garden") return cmd_garden(c, out);
    if (c.command == "reduce") return cmd_reduce(c, out);
    return cmd_check_matrix(c, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const DegeneracyError& e) {
    err << "degenerate: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace orthorep::cli
