#include <gtest/gtest.h>

#include <random>

#include "atkp/catalog.hpp"
#include "atkp/io.hpp"
#include "oracles.hpp"

using namespace atkp;

TEST(Graph6, SmallWords) {
  auto k2 = parse_graph6("A_");
  EXPECT_EQ(k2.n(), 2);
  EXPECT_EQ(k2.m(), 1);
  auto e5 = parse_graph6("D??");
  EXPECT_EQ(e5.n(), 5);
  EXPECT_EQ(e5.m(), 0);
  EXPECT_EQ(emit_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(emit_graph6(empty_graph(5)), "D??");
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(12345);
  for (int it = 0; it < 1000; ++it) {
    int n = static_cast<int>(rng() % 13);
    auto g = oracle::random_graph(rng, n, 0.5);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
}

TEST(Graph6, LongHeader) {
  auto g = cycle_graph(70);
  EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
}

TEST(Graph6, ErrorsCarryOffsets) {
  auto msg = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(msg("A_x").find("trailing garbage at byte 2"), std::string::npos);
  EXPECT_NE(msg("C").find("unexpected end"), std::string::npos);
  EXPECT_NE(msg("A\x01").find("out of range at byte 1"), std::string::npos);
  EXPECT_NE(msg("A`").find("padding"), std::string::npos);
}

TEST(EdgeList, ParseAndErrors) {
  auto h = parse_edge_list("# comment\n3 2\n0 1 3\n1 2\n");
  EXPECT_EQ(h.mult(0, 1), 3);
  EXPECT_EQ(h.degree(1), 4);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 1\n0 0\n"), InputError);
  EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), InputError);
  EXPECT_EQ(parse_edge_list(emit_edge_list(h)), h);
  EXPECT_EQ(parse_any_multigraph("A_").edge_count(), 1);
  EXPECT_EQ(parse_any_multigraph("{\"n\":2,\"edges\":[[0,1,2]]}").mult(0, 1), 2);
}

TEST(Generators, JoinAndMultipartite) {
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  auto j = join(complete_graph(4), empty_graph(2));
  EXPECT_EQ(j.n(), 6);
  EXPECT_EQ(j.m(), 14);
  EXPECT_EQ(complete_multipartite_2t(1).m(), 0);
  EXPECT_TRUE(oracle::isomorphic(complete_multipartite_2t(2), cycle_graph(4)));
  EXPECT_EQ(complete_multipartite_2t(3).m(), 12);
  for (int t = 1; t <= 5; ++t) {
    auto g = complete_multipartite_2t(t);
    int missing = 0;
    for (int u = 0; u < 2 * t; ++u)
      for (int v = u + 1; v < 2 * t; ++v)
        if (!g.adj(u, v)) {
          ++missing;
          EXPECT_TRUE(u % 2 == 0 && v == u + 1);
        }
    EXPECT_EQ(missing, t);
  }
  // K2 joined with C4 is the graph of entry 1i.
  EXPECT_TRUE(oracle::isomorphic(join(complete_graph(2), cycle_graph(4)), catalog_entry("1i")->graph));
}

TEST(LineGraph, SmallCases) {
  auto p = line_graph(MultiGraph::from_simple(path_graph(3)));
  EXPECT_EQ(p.graph, complete_graph(2));
  auto s = line_graph(MultiGraph::from_simple(star_graph(3)));
  EXPECT_EQ(s.graph, complete_graph(3));
  auto t = line_graph(MultiGraph(2, {{0, 1, 3}}));
  EXPECT_EQ(t.graph, complete_graph(3));
  for (int v = 0; v < 3; ++v) EXPECT_EQ(t.graph.degree(v), 3 + 3 - 3 - 1);
}

TEST(LineGraph, DegreeFormulaRandomMultigraphs) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<MultiEdge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) es.push_back({u, v, 1 + static_cast<int>(rng() % 4)});
    MultiGraph h(n, es);
    auto lg = line_graph(h);
    for (int x = 0; x < lg.graph.n(); ++x) {
      auto o = lg.origin[x];
      EXPECT_EQ(lg.graph.degree(x), h.degree(o.u) + h.degree(o.v) - h.mult(o.u, o.v) - 1);
    }
  }
}

TEST(LineGraph, RejectsLoops) { EXPECT_THROW(MultiGraph(2, {{1, 1, 1}}), InputError); }

TEST(Catalog, ArcListsOrientEntryGraphs) {
  int at = 0, tj = 0, line = 0;
  for (auto& e : catalog()) {
    auto d = entry_digraph(e);
    if (e.kind == EntryKind::LineKP) {
      ++line;
      // Each maximal clique of the root-edge line graph is covered by an order.
      EXPECT_EQ(d.support(), e.graph) << e.id;
      EXPECT_EQ(static_cast<int>(e.dg_row.size()), e.graph.n());
      EXPECT_EQ(e.graph.degrees(), e.dg_row) << e.id;
    } else {
      (e.kind == EntryKind::AT ? at : tj)++;
      EXPECT_TRUE(d.orients(e.graph)) << e.id;
      EXPECT_EQ(static_cast<int>(e.labels.size()), e.graph.n());
      // Printed labels are in-degrees everywhere except one vertex of 2f.
      auto in = d.indegrees();
      for (int v = 0; v < e.graph.n(); ++v) {
        if (e.id == "2f" && v == 5) {
          EXPECT_EQ(e.labels[v], 5);
          EXPECT_EQ(in[v], 3);
        } else {
          EXPECT_EQ(in[v], e.labels[v]) << e.id << " v" << v;
        }
      }
    }
  }
  EXPECT_EQ(at, 17);
  EXPECT_EQ(tj, 2);
  EXPECT_EQ(line, 3);
  EXPECT_EQ(catalog_entry("1a")->ee, 2);
  EXPECT_EQ(catalog_entry("2g")->eo, 16);
  EXPECT_EQ(catalog_entry("3a")->dg_row, (std::vector<int>{4, 4, 8, 8, 8, 6, 8, 8, 8, 4, 4}));
}
