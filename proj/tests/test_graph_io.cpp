#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "orthorep/error.hpp"
#include "orthorep/graph_catalog.hpp"
#include "orthorep/graph_io.hpp"

using namespace orthorep;

TEST(Graph6, KnownEncodings) {
  // Reference strings as produced by nauty's geng/showg conventions.
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(to_graph6(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(to_graph6(empty_graph(1)), "@");
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 70, 0.3);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, HeaderAndErrors) {
  EXPECT_EQ(from_graph6(">>graph6<<C~"), complete_graph(4));
  EXPECT_THROW(from_graph6("C"), ParseError);
  EXPECT_THROW(from_graph6(""), ParseError);
}

TEST(EdgeList, RoundTripAndErrors) {
  const Graph g = petersen_graph();
  EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(from_edge_list("# comment\n3 2\n1 2\n2 3\n"), path_graph(3));
  EXPECT_THROW(from_edge_list("3 2\n1 2\n1 2\n"), ParseError);
  EXPECT_THROW(from_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(from_edge_list("3 2\n1 2\n"), ParseError);
  EXPECT_THROW(from_edge_list("3 1\n1 4\n"), ParseError);
}

TEST(ParseGraph, AutoDetects) {
  EXPECT_EQ(parse_graph("C~\n"), complete_graph(4));
  EXPECT_EQ(parse_graph("4 3\n1 2\n2 3\n3 4\n"), path_graph(4));
}

TEST(Catalog, NamedGraphs) {
  EXPECT_EQ(named_graph("path:4"), path_graph(4));
  EXPECT_EQ(named_graph("star:3").order(), 4);
  EXPECT_EQ(named_graph("petersen").edge_count(), 15);
  for (int v = 1; v <= 10; ++v) EXPECT_EQ(petersen_graph().degree(v), 3);
  EXPECT_THROW(named_graph("wheel:5"), InvalidArgument);
  EXPECT_THROW(named_graph("path:x"), InvalidArgument);
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
}

TEST(Catalog, NonisomorphicCountsMatchKnownSequence) {
  // Graphs on n unlabelled vertices: 1, 2, 4, 11, 34, 156, 1044.
  const int totals[] = {1, 2, 4, 11, 34, 156, 1044};
  const int connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto all = nonisomorphic_graphs(n);
    EXPECT_EQ(static_cast<int>(all.size()), totals[n - 1]);
    int conn = 0;
    for (const auto& g : all) conn += connected_components(g) == 1 ? 1 : 0;
    EXPECT_EQ(conn, connected[n - 1]);
  }
}

TEST(Catalog, CanonicalFormIsLabelInvariant) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, Ordering(p))));
  }
}

TEST(Catalog, LabelledEnumerationCount) {
  int count = 0;
  for_each_labelled_graph(4, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 64);
}
