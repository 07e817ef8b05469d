#include <gtest/gtest.h>

#include <random>

#include "atkp/alon_tarsi.hpp"
#include "atkp/catalog.hpp"
#include "atkp/io.hpp"
#include "oracles.hpp"

using namespace atkp;

TEST(Eulerian, Basics) {
  auto e = eulerian_counts(Digraph(0, {}));
  EXPECT_EQ(e.ee, 1);
  EXPECT_EQ(e.eo, 0);
  auto c3 = eulerian_counts(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(c3.ee, 1);
  EXPECT_EQ(c3.eo, 1);
}

TEST(Eulerian, CatalogExpectedCounts) {
  for (auto& e : catalog()) {
    if (e.kind == EntryKind::LineKP) continue;
    auto c = eulerian_counts(entry_digraph(e));
    EXPECT_EQ(c.ee, e.ee) << e.id;
    EXPECT_EQ(c.eo, e.eo) << e.id;
  }
}

TEST(Eulerian, MatchesBruteForceOnCatalogAndRandom) {
  for (auto& e : catalog()) {
    if (e.kind == EntryKind::LineKP || e.arcs.size() > 20) continue;
    auto d = entry_digraph(e);
    auto b = oracle::eulerian_brute(d);
    auto c = eulerian_counts(d);
    EXPECT_EQ(c.ee, b.ee) << e.id;
    EXPECT_EQ(c.eo, b.eo) << e.id;
  }
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = oracle::random_graph(rng, n, 0.6);
    // Random digraph with some bidirected pairs.
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) {
      int r = static_cast<int>(rng() % 3);
      if (r != 1) arcs.emplace_back(u, v);
      if (r != 0) arcs.emplace_back(v, u);
    }
    Digraph d(n, arcs);
    if (d.arc_count() > 18) continue;
    auto b = oracle::eulerian_brute(d);
    auto c = eulerian_counts(d);
    EXPECT_EQ(c.ee, b.ee);
    EXPECT_EQ(c.eo, b.eo);
  }
}

TEST(Coefficient, SmallExamples) {
  EXPECT_EQ(poly_coefficient_expand(complete_graph(2), {1, 0}), 1);
  EXPECT_EQ(poly_coefficient_expand(complete_graph(3), {1, 1, 1}), 0);
  EXPECT_EQ(poly_coefficient_expand(path_graph(3), {1, 1, 0}), 1);
  EXPECT_EQ(poly_coefficient_schauz(complete_graph(2), {1, 0}), 1);
  EXPECT_EQ(poly_coefficient_schauz(complete_graph(3), {1, 1, 1}), 0);
  auto c4 = cycle_graph(4);
  EXPECT_EQ(poly_coefficient_schauz(c4, {1, 1, 1, 1}), poly_coefficient_expand(c4, {1, 1, 1, 1}));
  EXPECT_NE(poly_coefficient_expand(c4, {1, 1, 1, 1}), 0);
  EXPECT_THROW(poly_coefficient_schauz(c4, {1, 1, 1, 0}), InputError);
}

TEST(Coefficient, ExpansionMatchesFullExpansionAndSchauz) {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 150; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto g = oracle::random_graph(rng, n, 0.55);
    auto full = oracle::expand_full(g);
    for (auto& [k, c] : full) {
      EXPECT_EQ(poly_coefficient_expand(g, k), c);
      EXPECT_EQ(poly_coefficient_schauz(g, k), c);
    }
    // A vector with zero coefficient still agrees.
    std::vector<int> k(n, 0);
    int left = g.m();
    for (int v = 0; v < n && left; ++v) {
      int take = std::min(left, g.degree(v));
      k[v] = take;
      left -= take;
    }
    if (left == 0) EXPECT_EQ(poly_coefficient_schauz(g, k), poly_coefficient_expand(g, k));
  }
}

TEST(Coefficient, OrientationIdentity) {
  for (auto& e : catalog()) {
    if (e.kind == EntryKind::LineKP) continue;
    auto r = coefficient_orientation_identity(e.graph, entry_digraph(e));
    EXPECT_TRUE(r.holds) << e.id;
    EXPECT_TRUE(r.signed_holds) << e.id;
  }
  auto r1a = coefficient_orientation_identity(catalog_entry("1a")->graph, entry_digraph(*catalog_entry("1a")));
  EXPECT_EQ(abs(r1a.coefficient), 1);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 7);
    auto g = oracle::random_graph(rng, n, 0.5);
    auto d = oracle::random_orientation(rng, g);
    auto r = coefficient_orientation_identity(g, d);
    EXPECT_TRUE(r.signed_holds);
  }
  // Trees: only the empty Eulerian subgraph.
  auto t = path_graph(5);
  auto r = coefficient_orientation_identity(t, Digraph(5, {{1, 0}, {1, 2}, {3, 2}, {3, 4}}));
  EXPECT_EQ(r.ee, 1);
  EXPECT_EQ(r.eo, 0);
  EXPECT_EQ(abs(r.coefficient), 1);
  EXPECT_THROW(coefficient_orientation_identity(t, Digraph(5, {{0, 1}})), InputError);
}

TEST(FAT, Examples) {
  auto c4 = is_f_AT(cycle_graph(4), ListSizeFn::constant(4, 2));
  ASSERT_TRUE(c4);
  EXPECT_TRUE(verify_at_certificate(*c4).ok);
  EXPECT_FALSE(is_f_AT(complete_graph(3), ListSizeFn::constant(3, 2)));
  auto lk33 = line_graph(complete_bipartite_multi(3, 3)).graph;
  EXPECT_FALSE(is_f_AT(lk33, ListSizeFn::constant(9, 3)));
}

TEST(FAT, AgreesWithOrientationEnumeration) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 150; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto g = oracle::random_graph(rng, n, 0.5);
    if (g.m() > 12) continue;
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % 3);
    auto cert = is_f_AT(g, ListSizeFn(f));
    EXPECT_EQ(cert.has_value(), oracle::is_f_AT_brute(g, f));
    if (cert) EXPECT_TRUE(verify_at_certificate(*cert).ok);
  }
}

TEST(FAT, CatalogEntriesAreAT) {
  for (auto& e : catalog()) {
    if (e.kind == EntryKind::LineKP) continue;
    auto f = entry_f(e);
    auto d = entry_digraph(e);
    for (int v = 0; v < e.graph.n(); ++v) EXPECT_LE(d.outdeg(v), f[v] - 1) << e.id << " v" << v;
    auto c = eulerian_counts(d);
    ATCertificate cert{e.graph, d, c.ee, c.eo, f, d.outdegrees(), 0};
    EXPECT_TRUE(verify_at_certificate(cert).ok) << e.id;
    EXPECT_TRUE(is_f_AT(e.graph, f).has_value()) << e.id;
  }
}

TEST(FAT, SubgraphMonotonicity) {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 200) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto g = oracle::random_graph(rng, n, 0.6);
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % 3);
    if (!is_f_AT(g, ListSizeFn(f))) continue;
    ++checked;
    for (auto e : g.edges()) EXPECT_TRUE(is_f_AT(g.without_edge(e), ListSizeFn(f)).has_value());
  }
}

TEST(FAT, DeterministicTieBreak) {
  auto g = cycle_graph(4);
  auto a = is_f_AT(g, ListSizeFn::constant(4, 2));
  auto b = is_f_AT(g, ListSizeFn::constant(4, 2));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->digraph, b->digraph);
  // Smallest exponent vector with nonzero coefficient under caps 1.
  EXPECT_EQ(a->exponents, (std::vector<int>{1, 1, 1, 1}));
}

TEST(Join, K2tCertificates) {
  for (auto [s, t] : std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 2}, {0, 3}, {1, 1}, {3, 1}}) {
    auto jc = k2t_join_certificate(s, t);
    EXPECT_TRUE(verify_at_certificate(jc.cert).ok);
    EXPECT_EQ(jc.cert.graph.n(), s + 2 * t);
    EXPECT_EQ(static_cast<int>(jc.clique_a.size()), s + t);
    EXPECT_TRUE(jc.cert.graph.is_clique(jc.clique_a));
  }
}

TEST(ComplementBipartite, Examples) {
  // C4 is the complement of 2K2.
  auto c4 = SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto r = complement_bipartite_at(c4, {0, 1}, ListSizeFn::constant(4, 2));
  EXPECT_TRUE(verify_at_certificate(r.cert).ok);
  // The complement of P4 is P4 again; its parts are the colour classes of 0-1-2-3.
  auto p4c = path_graph(4).complement();
  auto r2 = complement_bipartite_at(p4c, {0, 2}, ListSizeFn::constant(4, 2));
  EXPECT_TRUE(verify_at_certificate(r2.cert).ok);
  // Complement of a random bipartite graph with f = omega on A and |B| on B.
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3);
    std::vector<Edge> bip;
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y)
        if (rng() % 2) bip.emplace_back(x, a + y);
    auto g = SimpleGraph(a + b, bip).complement();
    int w = clique_number(g);
    std::vector<int> f(a + b);
    for (int v = 0; v < a + b; ++v) f[v] = v < a ? w : b;
    std::vector<int> pa;
    for (int v = 0; v < a; ++v) pa.push_back(v);
    auto res = complement_bipartite_at(g, pa, ListSizeFn(f));
    EXPECT_TRUE(verify_at_certificate(res.cert).ok);
  }
  EXPECT_THROW(complement_bipartite_at(path_graph(4), {0, 2}, ListSizeFn::constant(4, 3)), InputError);
}

TEST(Catalog, VerifyEntries) {
  int n = 0;
  for (auto& e : catalog()) {
    if (e.kind == EntryKind::LineKP) {
      EXPECT_THROW(verify_catalog_entry(e), InputError);
      continue;
    }
    auto r = verify_catalog_entry(e);
    EXPECT_TRUE(r.pass()) << e.id;
    ++n;
  }
  EXPECT_EQ(n, 19);
  auto r = verify_catalog_entry(*catalog_entry("1e"));
  EXPECT_EQ(r.ee, 512);
  EXPECT_EQ(r.eo, 515);
  auto bad = *catalog_entry("1a");
  bad.arcs.pop_back();
  EXPECT_THROW(verify_catalog_entry(bad), InputError);
  bad = *catalog_entry("2c");
  bad.eo = 2;
  EXPECT_FALSE(verify_catalog_entry(bad).pass());
}
