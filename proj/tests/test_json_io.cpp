#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orthorep/error.hpp"
#include "orthorep/graph_catalog.hpp"
#include "orthorep/json_io.hpp"
#include "orthorep/unique_monomial.hpp"

using namespace orthorep;

TEST(JsonIo, MatrixRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_int_matrix(rng, 1 + trial % 4, 1 + trial % 3, -5, 5);
    m(0, 0) = Rational(5, 7 + trial);
    m(0, 0).canonicalize();
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  }
  EXPECT_EQ(matrix_from_json(Json::parse(R"([[1, "1/2"], ["-3", 0]])")),
            RationalMatrix::from_rows({{1, Rational(1, 2)}, {-3, 0}}, 2));
  EXPECT_EQ(matrix_from_json(Json::parse(R"({"entries": [[2]]})")), RationalMatrix::from_rows({{2}}, 1));
}

TEST(JsonIo, MatrixErrors) {
  EXPECT_THROW(matrix_from_json(Json::parse("[]")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2], [3]]")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1.5]]")), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1/0"]])")), ParseError);
}

TEST(JsonIo, PolynomialRoundTrip) {
  const Ordering ord({1, 3, 4, 2});
  const auto cols = symbolic_columns(complement(path_graph(4)), ord, 3);
  const auto p = symbolic_gram_entry(cols, 1, 3);
  ASSERT_FALSE(p.is_zero());
  const auto j = polynomial_to_json(p);
  EXPECT_EQ(polynomial_from_json(j), p);
  EXPECT_EQ(j.size(), p.size());
  // Terms are listed highest priority first.
  EXPECT_EQ(polynomial_from_json(Json::array({j[0]})).leading_term(), p.leading_term());
}

TEST(JsonIo, GardenRoundTrip) {
  const Graph g = petersen_graph();
  const auto ord = Ordering::identity(10);
  for (int j = 1; j <= 6; ++j) {
    const auto garden = build_lss_garden_I(g, ord, j, 4);
    const auto back = garden_from_json(garden_to_json(garden));
    EXPECT_EQ(garden_to_json(back), garden_to_json(garden));
  }
  const auto two = build_lss_garden_II(g, ord, 2, 5, 4);
  EXPECT_EQ(garden_to_json(garden_from_json(garden_to_json(two))), garden_to_json(two));
  EXPECT_THROW(garden_from_json(Json::parse(R"({"type": "III"})")), std::exception);
}

TEST(JsonIo, ReportsCarryKeyFields) {
  const Graph g = cycle_graph(5);
  const auto gd = greedegree(g);
  const auto jg = greedegree_to_json(g, gd);
  EXPECT_EQ(jg.at("greedegree"), 2);
  EXPECT_EQ(jg.at("witness_order").size(), 5u);

  const auto r = verify_unique_monomial(g, Ordering::identity(5), 4, 5, 3);
  const auto ju = unique_monomial_to_json(r);
  EXPECT_EQ(ju.at("verified"), true);
  EXPECT_EQ(ju.at("method"), "expansion");
  EXPECT_EQ(ju.at("leading").at("coeff"), r.leading_coefficient);
  EXPECT_EQ(ju.at("predicted").at("sign"), r.predicted->sign);

  const auto jb = bundle_to_json(build_formula_graph(parse_dimacs("p cnf 1 1\n1 0\n"), ReductionMode::factor(1)));
  EXPECT_EQ(jb.at("epsilon"), "1/2");
  EXPECT_EQ(jb.at("delta"), 3);
}
