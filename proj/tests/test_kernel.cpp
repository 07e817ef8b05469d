#include <gtest/gtest.h>

#include <random>

#include "atkp/alon_tarsi.hpp"
#include "atkp/kernel.hpp"
#include "oracles.hpp"

using namespace atkp;

namespace {

MultiGraph random_multigraph(std::mt19937_64& rng, int n, int max_edges, int max_mult) {
  std::vector<MultiEdge> es;
  int total = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng() % 2) continue;
      int mu = 1 + static_cast<int>(rng() % max_mult);
      if (total + mu > max_edges) continue;
      total += mu;
      es.push_back({u, v, mu});
    }
  return MultiGraph(n, es);
}

// Orientation of a support graph with bidirected pairs mixed in.
Digraph random_digraph_on(std::mt19937_64& rng, const SimpleGraph& g, int both_percent) {
  std::vector<Arc> arcs;
  for (auto [u, v] : g.edges()) {
    if (static_cast<int>(rng() % 100) < both_percent) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    } else if (rng() & 1) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return Digraph(g.n(), arcs);
}

}  // namespace

TEST(Kernel, FindKernelExamples) {
  Digraph arc(2, {{0, 1}});
  EXPECT_EQ(find_kernel(arc, {0, 1}), (std::vector<int>{1}));
  Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_FALSE(find_kernel(c3, {0, 1, 2}));
  Digraph tt(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(find_kernel(tt, {0, 1, 2}), (std::vector<int>{2}));
  Digraph both(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(find_kernel(both, {0, 1}), (std::vector<int>{0}));
  EXPECT_EQ(find_kernel(c3, {}), (std::vector<int>{}));
}

TEST(Kernel, FindKernelAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = oracle::random_graph(rng, n, 0.5);
    auto d = random_digraph_on(rng, g, 20);
    Mask s = rng() & full_mask(n);
    auto k = find_kernel(d, mask_to_vertices(s));
    EXPECT_EQ(k.has_value(), oracle::has_kernel_brute(d, s));
    if (k) {
      Mask km = vertices_to_mask(*k);
      EXPECT_TRUE(g.is_independent(*k));
      for (int v : mask_to_vertices(s & ~km)) EXPECT_TRUE(d.out_mask(v) & km);
    }
  }
}

TEST(Kernel, KernelPerfectExamples) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = oracle::random_graph(rng, n, 0.5);
    // Acyclic: orient low -> high.
    std::vector<Arc> arcs(g.edges().begin(), g.edges().end());
    EXPECT_TRUE(is_kernel_perfect(Digraph(n, arcs)).perfect);
  }
  auto c3 = is_kernel_perfect(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_FALSE(c3.perfect);
  EXPECT_EQ(c3.failing_set, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(is_kernel_perfect(Digraph(2, {{0, 1}, {1, 0}})).perfect);
  EXPECT_THROW(is_kernel_perfect(Digraph(13, {}), 12), CapExceeded);
}

TEST(Kernel, KernelPerfectAgreesWithBruteForce) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 7);
    auto g = oracle::random_graph(rng, n, 0.5);
    auto d = random_digraph_on(rng, g, 15);
    EXPECT_EQ(is_kernel_perfect(d).perfect, oracle::kernel_perfect_brute(d));
  }
}

TEST(LineCharacterization, Examples) {
  auto c4 = MultiGraph::from_simple(cycle_graph(4));
  auto gal = galvin_orientation(c4);
  EXPECT_TRUE(kp_line_characterization(gal.cert.digraph, c4).ok);
  EXPECT_TRUE(is_kernel_perfect(gal.cert.digraph).perfect);
  auto claw = MultiGraph::from_simple(star_graph(3));
  Digraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
  auto rep = kp_line_characterization(cyc, claw);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.reason, "clique not transitively oriented");
  EXPECT_THROW(kp_line_characterization(Digraph(3, {{0, 1}}), claw), InputError);
}

TEST(LineCharacterization, OddHoleNeedsOneWayCycle) {
  // L(C5) = C5.
  auto c5 = MultiGraph::from_simple(cycle_graph(5));
  auto lg = line_graph(c5);
  std::vector<Arc> cyc;
  for (auto [u, v] : lg.graph.edges()) cyc.emplace_back(u, v);
  // Orient as a directed cycle following the cycle order of the line graph.
  std::vector<int> next(5, -1);
  {
    std::vector<int> order{0};
    std::vector<char> seen(5, 0);
    seen[0] = 1;
    while (order.size() < 5)
      for (int w : lg.graph.nbrs(order.back()))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
          break;
        }
    cyc.clear();
    for (int i = 0; i < 5; ++i) cyc.emplace_back(order[i], order[(i + 1) % 5]);
  }
  Digraph d(5, cyc);
  EXPECT_FALSE(kp_line_characterization(d, c5).ok);
  EXPECT_FALSE(is_kernel_perfect(d).perfect);
  // One bidirected arc repairs it.
  auto arcs = cyc;
  arcs.emplace_back(cyc[0].second, cyc[0].first);
  Digraph d2(5, arcs);
  EXPECT_TRUE(kp_line_characterization(d2, c5).ok);
  EXPECT_TRUE(is_kernel_perfect(d2).perfect);
}

TEST(LineCharacterization, EquivalenceSweep) {
  std::mt19937_64 rng(2718);
  int done = 0, kp_count = 0;
  while (done < 300) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto h = random_multigraph(rng, n, 8, 3);
    auto lg = line_graph(h);
    if (lg.graph.n() < 3) continue;
    // Bias toward near-transitive orientations so both outcomes occur.
    Digraph d;
    if (rng() % 2) {
      std::vector<int> pos(lg.graph.n());
      std::iota(pos.begin(), pos.end(), 0);
      std::shuffle(pos.begin(), pos.end(), rng);
      std::vector<Arc> arcs;
      for (auto [u, v] : lg.graph.edges()) {
        bool fwd = pos[u] < pos[v];
        if (rng() % 6 == 0) fwd = !fwd;
        if (rng() % 8 == 0) arcs.emplace_back(v, u), arcs.emplace_back(u, v);
        else arcs.push_back(fwd ? Arc{u, v} : Arc{v, u});
      }
      d = Digraph(lg.graph.n(), arcs);
    } else {
      d = random_digraph_on(rng, lg.graph, 10);
    }
    bool kp = is_kernel_perfect(d).perfect;
    EXPECT_EQ(kp_line_characterization(d, h).ok, kp) << "sweep item " << done;
    kp_count += kp;
    ++done;
  }
  EXPECT_GT(kp_count, 20);
  EXPECT_LT(kp_count, 280);
}

TEST(Galvin, Examples) {
  auto p3 = galvin_orientation(MultiGraph::from_simple(path_graph(3)));
  EXPECT_EQ(p3.cert.digraph.arc_count(), 1);
  EXPECT_EQ(p3.cert.f.values(), (std::vector<int>{2, 2}));
  auto c4 = galvin_orientation(MultiGraph::from_simple(cycle_graph(4)));
  for (int v = 0; v < 4; ++v) EXPECT_LE(c4.cert.digraph.outdeg(v), 1);
  auto k33 = galvin_orientation(complete_bipartite_multi(3, 3));
  for (int v = 0; v < 9; ++v) EXPECT_LE(k33.cert.digraph.outdeg(v), 2);
  EXPECT_TRUE(is_kernel_perfect(k33.cert.digraph).perfect);
  EXPECT_TRUE(verify_kp_certificate(k33.cert).ok);
  EXPECT_THROW(galvin_orientation(MultiGraph::from_simple(cycle_graph(3))), InputError);
}

TEST(Galvin, BoundOnAllSmallBipartiteMultigraphs) {
  // Every bipartite multigraph with parts of size <= 3 and <= 8 edges,
  // enumerated by multiplicity vectors over the 9 possible pairs.
  int checked = 0, searched = 0;
  std::vector<int> mu(9, 0);
  auto rec = [&](auto&& self, int i, int total) -> void {
    if (i == 9) {
      if (total == 0) return;
      std::vector<MultiEdge> es;
      for (int k = 0; k < 9; ++k)
        if (mu[k]) es.push_back({k / 3, 3 + k % 3, mu[k]});
      MultiGraph b(6, es);
      std::vector<int> side{0, 0, 0, 1, 1, 1};
      auto r = galvin_orientation(b, side);
      if (r.construction != "colouring") ++searched;
      auto fb = bkw_bound(b);
      for (int e = 0; e < r.cert.graph.n(); ++e) EXPECT_LE(r.cert.digraph.outdeg(e), fb[e] - 1);
      EXPECT_TRUE(is_kernel_perfect(r.cert.digraph).perfect);
      ++checked;
      return;
    }
    for (int x = 0; total + x <= 8; ++x) {
      // Symmetry is not exploited: every vector is checked.
      mu[i] = x;
      self(self, i + 1, total + x);
    }
    mu[i] = 0;
  };
  rec(rec, 0, 0);
  EXPECT_GT(checked, 10000);
  std::printf("bipartite multigraphs checked: %d, needing preference search: %d\n", checked, searched);
}

TEST(FKP, K4MinusEDichotomy) {
  auto g = SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // missing 23; shared edge 01
  auto f = ListSizeFn::degree(g);
  KPSearchOptions plain;
  EXPECT_FALSE(is_f_KP(g, f, plain));
  KPSearchOptions dbl;
  dbl.allow_doubling = true;
  auto c = is_f_KP(g, f, dbl);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->doubled, (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(verify_kp_certificate(*c).ok);
}

TEST(FKP, SmallCases) {
  auto c = is_f_KP(complete_graph(2), ListSizeFn::constant(2, 2));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->digraph.arc_count(), 1);
  EXPECT_FALSE(is_f_KP(complete_graph(3), ListSizeFn::constant(3, 2)));
  EXPECT_TRUE(is_f_KP(cycle_graph(4), ListSizeFn::constant(4, 2)));
  EXPECT_THROW(is_f_KP(empty_graph(9), ListSizeFn::constant(9, 1)), CapExceeded);
}

TEST(FKP, AgreesWithOrientationEnumeration) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 80; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto g = oracle::random_graph(rng, n, 0.6);
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % 3);
    // Oracle: every orientation, outdegree bound, brute-force kernel perfection.
    bool expect = false;
    const auto& es = g.edges();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.m()) && !expect; ++s) {
      std::vector<Arc> arcs;
      std::vector<int> out(n, 0);
      for (int k = 0; k < g.m(); ++k) {
        auto [u, v] = es[k];
        if (s >> k & 1) std::swap(u, v);
        arcs.emplace_back(u, v);
        ++out[u];
      }
      bool ok = true;
      for (int v = 0; v < n; ++v)
        if (out[v] > f[v] - 1) ok = false;
      if (ok && oracle::kernel_perfect_brute(Digraph(n, arcs))) expect = true;
    }
    auto c = is_f_KP(g, ListSizeFn(f));
    EXPECT_EQ(c.has_value(), expect);
  }
}

TEST(FKP, CliquesOfKernelPerfectDigraphsAreTransitive) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto g = oracle::random_graph(rng, n, 0.7);
    KPSearchOptions o;
    o.allow_doubling = true;
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) f[v] = std::max(1, g.degree(v));
    auto c = is_f_KP(g, ListSizeFn(f), o);
    if (!c) continue;
    for (auto& q : maximal_cliques(g)) {
      // Some vertex of every sub-clique absorbs the rest.
      Mask qm = vertices_to_mask(q);
      for (Mask s = qm; s; s = (s - 1) & qm) EXPECT_TRUE(has_kernel(c->digraph, s));
    }
  }
}

TEST(Mu3, ConfigurationsVerify) {
  auto rs = mu3_kp_certificates();
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[0].dplus, (std::vector<int>{2, 1, 6, 5, 6, 4, 4, 3, 5, 2, 1}));
  EXPECT_EQ(rs[2].dg, (std::vector<int>{4, 6, 6, 6, 5, 5, 5, 3}));
  EXPECT_EQ(rs[2].dplus, (std::vector<int>{2, 4, 3, 4, 3, 3, 2, 1}));
  for (auto& r : rs) {
    EXPECT_TRUE(r.ok()) << r.id;
    EXPECT_TRUE(verify_kp_certificate(r.cert).ok) << r.id;
  }
}

TEST(Galvin, BoundOnRandomWiderBipartiteMultigraphs) {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 2000; ++it) {
    int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
    int edges = 1 + static_cast<int>(rng() % 8);
    std::vector<MultiEdge> es;
    for (int k = 0; k < edges; ++k)
      es.push_back({static_cast<int>(rng() % a), a + static_cast<int>(rng() % b), 1});
    MultiGraph h(a + b, es);
    std::vector<int> side(a + b, 1);
    for (int v = 0; v < a; ++v) side[v] = 0;
    auto r = galvin_orientation(h, side);
    auto fb = bkw_bound(h);
    for (int e = 0; e < r.cert.graph.n(); ++e) EXPECT_LE(r.cert.digraph.outdeg(e), fb[e] - 1);
    EXPECT_TRUE(is_kernel_perfect(r.cert.digraph).perfect);
  }
}
