#include "orthorep/json_io.hpp"

#include "orthorep/error.hpp"
#include "orthorep/graph_io.hpp"

namespace orthorep {

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("entries") ? j.at("entries") : j;
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix JSON must be a non-empty array of rows");
  std::vector<RationalVector> out;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    RationalVector v;
    for (const auto& e : row) {
      if (e.is_string()) {
        v.push_back(rational_from_string(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        v.push_back(Rational(Integer(static_cast<long>(e.get<std::int64_t>()))));
      } else {
        throw ParseError("matrix entries must be integers or \"p/q\" strings");
      }
    }
    if (!out.empty() && v.size() != cols) throw ParseError("ragged matrix rows");
    cols = v.size();
    out.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(out, static_cast<int>(cols));
}

Json monomial_to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& v : monomial_variables(m)) out.push_back(Json{{"vertex", v.vertex}, {"indices", v.indices()}});
  return out;
}

Json polynomial_to_json(const GardenPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.sorted_terms()) out.push_back(Json{{"monomial", monomial_to_json(m)}, {"coeff", c}});
  return out;
}

GardenPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  GardenPolynomial p;
  for (const auto& term : j) {
    std::vector<NodeVariable> vars;
    for (const auto& v : term.at("monomial")) {
      NodeVariable var;
      var.vertex = v.at("vertex").get<int>();
      for (int idx : v.at("indices").get<std::vector<int>>()) {
        if (idx < 1 || idx > 32) throw ParseError("node variable index out of range");
        var.mask |= 1u << (idx - 1);
      }
      vars.push_back(var);
    }
    p.add_term(make_monomial(vars), term.at("coeff").get<std::int64_t>());
  }
  return p;
}

namespace {

Json node_to_json(const Garden& g, int id) {
  const auto& node = g.nodes[id];
  if (node.kind == GardenNode::Kind::input) return Json{{"input", node.slot}};
  Json children = Json::array();
  for (int c : node.children) children.push_back(node_to_json(g, c));
  return Json{{"family", node.vertex}, {"children", std::move(children)}};
}

int node_from_json(Garden& g, const Json& j) {
  const int id = static_cast<int>(g.nodes.size());
  g.nodes.emplace_back();
  if (j.contains("input")) {
    g.nodes[id].kind = GardenNode::Kind::input;
    g.nodes[id].slot = j.at("input").get<int>();
    return id;
  }
  g.nodes[id].vertex = j.at("family").get<int>();
  for (const auto& c : j.value("children", Json::array())) {
    const int child = node_from_json(g, c);
    g.nodes[id].children.push_back(child);
  }
  return id;
}

}  // namespace

Json garden_to_json(const Garden& g) {
  Json tops = Json::array();
  for (int t : g.tops) tops.push_back(node_to_json(g, t));
  Json out{{"type", g.type == GardenType::I ? "I" : "II"}, {"tops", std::move(tops)}};
  if (g.dimension > 0) out["dimension"] = g.dimension;
  return out;
}

Garden garden_from_json(const Json& j) {
  try {
    Garden g;
    const auto type = j.at("type").get<std::string>();
    if (type == "I") {
      g.type = GardenType::I;
    } else if (type == "II") {
      g.type = GardenType::II;
    } else {
      throw ParseError("garden type must be \"I\" or \"II\"");
    }
    for (const auto& t : j.at("tops")) g.tops.push_back(node_from_json(g, t));
    g.dimension = j.value("dimension", 0);
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed garden JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid garden: ") + e.what());
  }
}

Json ordering_to_json(const Ordering& ord) { return Json(ord.vertices()); }

Json greedegree_to_json(const Graph& g, const GreedegreeResult& r) {
  return Json{{"n", g.order()},
              {"degrees", g.degrees()},
              {"greedegree", r.value},
              {"witness_order", ordering_to_json(r.witness)},
              {"explored", r.explored}};
}

Json success_to_json(const SuccessReport& r) {
  Json out{{"weak", r.weak}, {"strong", r.strong}, {"codimension", r.codimension}};
  out["failing_pair"] = r.failing_pair ? Json::array({r.failing_pair->first, r.failing_pair->second}) : Json(nullptr);
  return out;
}

Json pattern_to_json(const PatternVerdict& v) {
  Json off = Json::array();
  for (const auto& [i, j] : v.offending) off.push_back(Json::array({i, j}));
  return Json{{"orthogonal_representation", v.is_orthogonal_rep}, {"faithful", v.is_faithful}, {"offending", off}};
}

Json upper_zero_to_json(const UpperZeroVerdict& v) {
  Json out{{"upper_zero_generic", v.generic}};
  out["failing_column"] = v.failing_column ? Json(*v.failing_column) : Json(nullptr);
  out["zero_diagonal_at"] = v.zero_diagonal_at ? Json(*v.zero_diagonal_at) : Json(nullptr);
  return out;
}

Json sap_to_json(const SapVerdict& v) {
  Json out{{"has_sap", v.has_sap}, {"x_nullity", v.x_nullity}};
  out["witness"] = v.witness ? matrix_to_json(*v.witness) : Json(nullptr);
  return out;
}

Json mpu_to_json(const MpuVerdict& v) {
  return Json{{"symmetric_psd", v.symmetric_psd},
              {"upper_zero_generic", v.upper_zero_generic},
              {"zeros_on_nonedges", v.zeros_on_nonedges},
              {"nonzeros_on_edges", v.nonzeros_on_edges},
              {"passed", v.passed},
              {"certified_nullity", v.passed ? Json(v.nullity) : Json(nullptr)}};
}

Json unique_monomial_to_json(const UniqueMonomialReport& r) {
  Json out{{"i", r.i},
           {"j", r.j},
           {"d", r.d},
           {"greedy", r.greedy},
           {"pair_valid", r.pair_valid},
           {"method", r.method},
           {"identically_zero", r.identically_zero}};
  out["leading"] = r.leading ? Json{{"monomial", monomial_to_json(*r.leading)}, {"coeff", r.leading_coefficient}}
                             : Json(nullptr);
  out["predicted"] = r.predicted ? Json{{"monomial", monomial_to_json(r.predicted->monomial)},
                                        {"sign", r.predicted->sign},
                                        {"cross_label", r.predicted->cross_label}}
                                 : Json(nullptr);
  out["matches"] = r.matches;
  out["verified"] = r.verified;
  if (r.method == "expansion") out["term_count"] = r.term_count;
  if (r.method == "labeling-search") out["search_nodes"] = r.search_nodes;
  return out;
}

Json bundle_to_json(const FormulaGraphBundle& b) {
  Json out{{"n", b.n},
           {"t", b.formula.t},
           {"k", b.formula.k()},
           {"f", b.f},
           {"m", b.m},
           {"delta", b.delta},
           {"Delta", b.Delta},
           {"a", b.a},
           {"b", b.b},
           {"epsilon", rational_to_string(b.epsilon)}};
  out["factor"] = b.factor ? Json(rational_to_string(*b.factor)) : Json(nullptr);
  out["vertex_names"] = b.g.names();
  out["graph6"] = to_graph6(b.g);
  return out;
}

}  // namespace orthorep
