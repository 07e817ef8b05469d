#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "atkp/catalog.hpp"
#include "atkp/graph.hpp"

namespace atkp {

namespace detail {

inline void require_small(const Digraph& d, int cap, const char* what) {
  if (d.n() > 64) throw CapExceeded(std::string(what) + ": more than 64 vertices");
  if (cap >= 0 && d.n() > cap)
    throw CapExceeded(std::string(what) + ": " + std::to_string(d.n()) + " vertices exceeds cap " + std::to_string(cap));
}

inline std::vector<Mask> support_masks(const Digraph& d) {
  std::vector<Mask> adj(d.n());
  for (int v = 0; v < d.n(); ++v) adj[v] = d.out_mask(v) | d.in_mask(v);
  return adj;
}

// Existence of a kernel in d[s]: branch on the lowest undecided vertex.
// in: chosen kernel vertices, out: vertices excluded from the kernel.
inline bool kernel_search(const std::vector<Mask>& adj, const Digraph& d, Mask s, Mask in, Mask out) {
  Mask undecided = s & ~in & ~out;
  // An excluded vertex whose out-neighbours are all excluded can never be absorbed.
  for (Mask o = out; o; o &= o - 1) {
    int v = std::countr_zero(o);
    Mask reach = d.out_mask(v) & s;
    if (!(reach & in) && !(reach & undecided)) return false;
  }
  if (!undecided) return true;
  int v = std::countr_zero(undecided);
  // v in the kernel: its neighbours leave.
  if (kernel_search(adj, d, s, in | bit(v), out | (adj[v] & s & ~in))) return true;
  return kernel_search(adj, d, s, in, out | bit(v));
}

}  // namespace detail

inline bool has_kernel(const Digraph& d, Mask s) {
  detail::require_small(d, -1, "has_kernel");
  auto adj = detail::support_masks(d);
  return detail::kernel_search(adj, d, s, 0, 0);
}

// Kernel of d[s] with the fewest vertices, ties broken lexicographically.
// Independence is taken in the support, so a bidirected pair is an edge.
inline std::optional<std::vector<int>> find_kernel(const Digraph& d, const std::vector<int>& s) {
  detail::require_small(d, -1, "find_kernel");
  std::vector<int> vs = s;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  Mask sm = 0;
  for (int v : vs) {
    if (v < 0 || v >= d.n()) throw InputError("vertex out of range");
    sm |= bit(v);
  }
  auto adj = detail::support_masks(d);
  if (!detail::kernel_search(adj, d, sm, 0, 0)) return std::nullopt;
  const int k = static_cast<int>(vs.size());
  std::vector<int> pick;
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int start, int left, Mask chosen) -> bool {
    if (left == 0) {
      for (int v : vs) {
        if (chosen & bit(v)) continue;
        if (!(d.out_mask(v) & chosen)) return false;
      }
      found = pick;
      return true;
    }
    for (int i = start; i + left <= k; ++i) {
      int v = vs[i];
      if (adj[v] & chosen) continue;
      pick.push_back(v);
      if (self(self, i + 1, left - 1, chosen | bit(v))) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= k; ++size)
    if (rec(rec, 0, size, 0)) return found;
  throw HardFailure("kernel exists but enumeration missed it");
}

struct KernelPerfectResult {
  bool perfect = true;
  std::vector<int> failing_set;  // first set without a kernel, by size then value
};

inline KernelPerfectResult is_kernel_perfect(const Digraph& d, int cap = 12) {
  detail::require_small(d, cap, "is_kernel_perfect");
  const int n = d.n();
  auto adj = detail::support_masks(d);
  std::vector<Mask> order;
  order.reserve(std::size_t{1} << n);
  for (Mask s = 1; s < (Mask{1} << n); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  for (Mask s : order)
    if (!detail::kernel_search(adj, d, s, 0, 0)) return {false, mask_to_vertices(s)};
  return {};
}

// ---- line-graph characterization -----------------------------------------

struct LineKPReport {
  bool ok = true;
  std::string reason;
  std::vector<int> witness;  // offending clique or cycle
  bool capped = false;       // odd cycles longer than the cap were not enumerated
  bool used_fallback = false;
};

// One-way arcs only: a bidirected pair never contributes a directed cycle
// that lacks a kernel.
inline bool one_way(const Digraph& d, int u, int v) { return d.has_arc(u, v) && !d.has_arc(v, u); }

namespace detail {

inline LineKPReport line_kp_check(const Digraph& d, int cycle_cap) {
  LineKPReport rep;
  const int n = d.n();
  SimpleGraph sup = d.support();
  // (1) In every maximal clique the one-way arcs form an acyclic digraph.
  for (auto& clique : maximal_cliques(sup)) {
    std::vector<int> indeg(clique.size(), 0);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = 0; j < clique.size(); ++j)
        if (i != j && one_way(d, clique[i], clique[j])) ++indeg[j];
    std::vector<char> gone(clique.size(), 0);
    std::size_t removed = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        if (gone[i] || indeg[i]) continue;
        gone[i] = 1;
        ++removed;
        progress = true;
        for (std::size_t j = 0; j < clique.size(); ++j)
          if (!gone[j] && one_way(d, clique[i], clique[j])) --indeg[j];
      }
    }
    if (removed != clique.size()) {
      rep.ok = false;
      rep.reason = "clique not transitively oriented";
      rep.witness = clique;
      return rep;
    }
  }
  // (2) No chordless odd cycle of length >= 5 following one-way arcs.
  int cap = std::min(cycle_cap, n);
  if (cycle_cap < n) rep.capped = true;
  std::vector<int> path;
  std::vector<char> on(n, 0);
  bool bad = false;
  auto extend = [&](auto&& self, int start) -> void {
    int last = path.back();
    for (int w : d.out(last)) {
      if (bad) return;
      if (!one_way(d, last, w)) continue;
      if (w == start) {
        int len = static_cast<int>(path.size());
        if (len >= 5 && len % 2 == 1) {
          bad = true;
          rep.witness = path;
        }
        continue;
      }
      if (w < start || on[w]) continue;
      if (static_cast<int>(path.size()) >= cap) continue;
      // w may touch only the current end, and the start (which then must close).
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (sup.adj(w, path[i])) chord = true;
      if (path.size() >= 2 && sup.adj(w, start)) {
        // Adjacent to start: the cycle must close right here.
        if (chord || !one_way(d, w, start)) continue;
        int len = static_cast<int>(path.size()) + 1;
        if (len >= 5 && len % 2 == 1) {
          bad = true;
          rep.witness = path;
          rep.witness.push_back(w);
        }
        continue;
      }
      if (chord) continue;
      path.push_back(w);
      on[w] = 1;
      self(self, start);
      on[w] = 0;
      path.pop_back();
    }
  };
  for (int s = 0; s < n && !bad; ++s) {
    path = {s};
    on[s] = 1;
    extend(extend, s);
    on[s] = 0;
  }
  if (bad) {
    rep.ok = false;
    rep.reason = "chordless directed odd cycle";
  }
  return rep;
}

}  // namespace detail

constexpr int kCycleCap = 9;

// Vertex i of d must be edge i of root_edges.
inline LineKPReport kp_line_characterization(const Digraph& d, int root_n, const std::vector<Edge>& root_edges) {
  if (!(d.support() == line_graph_of_edge_list(root_n, root_edges)))
    throw InputError("digraph support is not the line graph of the root");
  int n = d.n();
  int cap = n >= 12 ? kCycleCap : n;
  auto rep = detail::line_kp_check(d, n > kCycleCap ? kCycleCap : cap);
  if (n > kCycleCap && n < 12) {
    rep.capped = false;
    if (rep.ok) {
      auto kp = is_kernel_perfect(d, 12);
      rep.used_fallback = true;
      if (!kp.perfect) {
        rep.ok = false;
        rep.reason = "long chordless odd cycle (exhaustive fallback)";
        rep.witness = kp.failing_set;
      }
    }
  }
  return rep;
}

inline LineKPReport kp_line_characterization(const Digraph& d, const MultiGraph& root) {
  return kp_line_characterization(d, root.n(), expand_copies(root));
}

// ---- certificates ---------------------------------------------------------

struct KPCertificate {
  SimpleGraph graph;
  Digraph digraph;
  ListSizeFn f;
  std::vector<Edge> supergraph_edges;
  std::vector<Edge> doubled;
  std::string method;  // how kernel-perfection was established
};

struct KPVerification {
  bool ok = true;
  std::string reason;
  std::string method;
};

// Support covers the graph, outdegrees fit under f, and the digraph is
// kernel-perfect (exhaustively up to 12 vertices; otherwise the digraph must
// come from a line graph and the characterization is used).
inline KPVerification verify_kp_certificate(const KPCertificate& c, const std::vector<Edge>* root_edges = nullptr,
                                            int root_n = 0) {
  KPVerification r;
  const auto& g = c.graph;
  if (c.digraph.n() != g.n() || c.f.size() != g.n()) return {false, "size mismatch", ""};
  for (auto [u, v] : g.edges())
    if (!c.digraph.has_arc(u, v) && !c.digraph.has_arc(v, u)) return {false, "edge not covered", ""};
  for (int v = 0; v < g.n(); ++v)
    if (c.digraph.outdeg(v) > c.f[v] - 1) return {false, "outdegree of " + std::to_string(v) + " exceeds f-1", ""};
  if (g.n() <= 12) {
    auto kp = is_kernel_perfect(c.digraph, 12);
    if (!kp.perfect) return {false, "induced subdigraph without a kernel", "exhaustive"};
    r.method = "exhaustive";
    return r;
  }
  if (!root_edges) return {false, "too large for exhaustive check and no root given", ""};
  auto rep = kp_line_characterization(c.digraph, root_n, *root_edges);
  if (!rep.ok) return {false, rep.reason, "characterization"};
  r.method = rep.capped ? "characterization (odd cycles up to length 9)" : "characterization";
  return r;
}

// ---- Galvin / BKW orientation ---------------------------------------------

struct GalvinResult {
  KPCertificate cert;
  std::vector<EdgeCopy> origin;   // line vertex -> edge copy of b
  std::vector<int> colors;        // proper edge colouring used (empty if search fallback)
  std::string construction;       // "colouring" or "preference-search"
  LineKPReport characterization;
};

namespace detail {

// Proper edge colouring of a bipartite multigraph with max-degree colours
// (alternating-path recolouring).
inline std::vector<int> bipartite_edge_coloring(int n, const std::vector<Edge>& list, int delta) {
  const int m = static_cast<int>(list.size());
  std::vector<std::vector<int>> at(n, std::vector<int>(delta, -1));  // vertex x colour -> edge
  std::vector<int> col(m, -1);
  auto free_color = [&](int v) {
    for (int c = 0; c < delta; ++c)
      if (at[v][c] < 0) return c;
    return -1;
  };
  for (int e = 0; e < m; ++e) {
    auto [u, v] = list[e];
    int a = free_color(u), b = free_color(v);
    if (at[v][a] >= 0) {
      // Swap colours a/b along the alternating path starting at v with colour a.
      std::vector<int> path;
      int x = v, c = a;
      while (at[x][c] >= 0) {
        int f = at[x][c];
        path.push_back(f);
        x = list[f].first == x ? list[f].second : list[f].first;
        c = c == a ? b : a;
      }
      for (int f : path) {
        auto [p, q] = list[f];
        at[p][col[f]] = at[q][col[f]] = -1;
      }
      for (int f : path) {
        col[f] = col[f] == a ? b : a;
        auto [p, q] = list[f];
        at[p][col[f]] = at[q][col[f]] = f;
      }
    }
    if (at[u][a] >= 0 || at[v][a] >= 0) throw HardFailure("edge colouring failed");
    col[e] = a;
    at[u][a] = at[v][a] = e;
  }
  return col;
}

// rank[x][e] = how many edges at x the vertex x prefers to e. Line vertex e
// points at every e' its endpoints prefer.
inline Digraph orientation_from_ranks(int n, const std::vector<Edge>& list, const std::vector<std::vector<int>>& rank) {
  std::vector<std::vector<int>> at(n);
  for (int e = 0; e < static_cast<int>(list.size()); ++e) {
    at[list[e].first].push_back(e);
    at[list[e].second].push_back(e);
  }
  std::vector<Arc> arcs;
  for (int x = 0; x < n; ++x)
    for (int e : at[x])
      for (int f : at[x])
        if (e != f && rank[x][f] < rank[x][e]) arcs.emplace_back(e, f);
  return Digraph(static_cast<int>(list.size()), arcs);
}

}  // namespace detail

inline std::vector<int> bkw_bound(const MultiGraph& b) {
  std::vector<int> f;
  for (auto& e : b.edges())
    for (int c = 0; c < e.mult; ++c) f.push_back(std::max(b.degree(e.u), b.degree(e.v)));
  return f;
}

// x_side[v] == 0 marks the X part. X prefers lower colours, Y higher ones, so
// at X arcs run from higher to lower colour and at Y from lower to higher.
inline GalvinResult galvin_orientation(const MultiGraph& b, const std::vector<int>& x_side,
                                       long long search_limit = 2'000'000) {
  const int n = b.n();
  if (static_cast<int>(x_side.size()) != n) throw InputError("part vector has wrong length");
  for (auto& e : b.edges())
    if (x_side[e.u] == x_side[e.v]) throw InputError("input is not bipartite with respect to the given parts");
  auto lg = line_graph(b);
  auto list = expand_copies(b);
  const int m = static_cast<int>(list.size());
  std::vector<int> fb = bkw_bound(b);
  GalvinResult res;
  res.origin = lg.origin;

  std::vector<std::vector<int>> at(n);
  for (int e = 0; e < m; ++e) {
    at[list[e].first].push_back(e);
    at[list[e].second].push_back(e);
  }
  auto fits = [&](const Digraph& d) {
    for (int e = 0; e < m; ++e)
      if (d.outdeg(e) > fb[e] - 1) return false;
    return true;
  };
  auto ranks_from_colors = [&](const std::vector<int>& col, bool flip) {
    std::vector<std::vector<int>> rank(n, std::vector<int>(m, 0));
    for (int x = 0; x < n; ++x) {
      bool lower_first = (x_side[x] == 0) != flip;
      for (int e : at[x]) {
        int r = 0;
        for (int f : at[x])
          if (f != e && (lower_first ? col[f] < col[e] : col[f] > col[e])) ++r;
        rank[x][e] = r;
      }
    }
    return rank;
  };

  std::optional<Digraph> chosen;
  int delta = b.max_degree();
  if (m > 0) {
    auto col = detail::bipartite_edge_coloring(n, list, delta);
    for (bool flip : {false, true}) {
      auto d = detail::orientation_from_ranks(n, list, ranks_from_colors(col, flip));
      if (fits(d)) {
        chosen = d;
        res.colors = col;
        res.construction = "colouring";
        break;
      }
    }
    if (!chosen) {
      // Backtrack over a linear order at each vertex; any such family of
      // orders yields a kernel-perfect line-graph orientation.
      std::vector<std::vector<int>> rank(n, std::vector<int>(m, -1));
      std::vector<int> load(m, 0);  // out-arcs already forced on edge e
      long long nodes = 0;
      bool found = false;
      // Parallel pairs where both ends rank the same edge higher collapse to
      // one arc, so compute outdegree exactly once all orders are fixed.
      auto order_vertex = [&](auto&& self, int x, std::vector<int>& perm, std::vector<char>& used, int pos) -> bool {
        if (++nodes > search_limit) throw HardFailure("preference-order search limit reached");
        if (pos == static_cast<int>(at[x].size())) {
          if (x + 1 == n) {
            auto d = detail::orientation_from_ranks(n, list, rank);
            if (fits(d)) {
              chosen = d;
              return true;
            }
            return false;
          }
          std::vector<int> p2;
          std::vector<char> u2(at[x + 1].size(), 0);
          return self(self, x + 1, p2, u2, 0);
        }
        for (std::size_t i = 0; i < at[x].size(); ++i) {
          if (used[i]) continue;
          int e = at[x][i];
          // e gets pos out-arcs at x (upper bound; parallels may merge).
          if (load[e] + pos > fb[e] - 1 + 0) {
            // With parallel edges the true count can be lower, so only prune
            // when e has no parallel partner.
            bool has_parallel = false;
            for (int f : at[x])
              if (f != e && list[f] == list[e]) has_parallel = true;
            if (!has_parallel) continue;
          }
          used[i] = 1;
          rank[x][e] = pos;
          load[e] += pos;
          perm.push_back(e);
          if (self(self, x, perm, used, pos + 1)) return true;
          perm.pop_back();
          load[e] -= pos;
          used[i] = 0;
        }
        return false;
      };
      std::vector<int> p0;
      std::vector<char> u0(at[0].size(), 0);
      found = order_vertex(order_vertex, 0, p0, u0, 0);
      if (!found) throw HardFailure("no preference orders meet the max-degree outdegree bound");
      res.construction = "preference-search";
    }
  } else {
    chosen = Digraph(0, {});
    res.construction = "colouring";
  }

  res.cert.graph = lg.graph;
  res.cert.digraph = *chosen;
  res.cert.f = m ? ListSizeFn(fb) : ListSizeFn();
  res.characterization = kp_line_characterization(*chosen, n, list);
  if (!res.characterization.ok) throw HardFailure("Galvin orientation fails the line-graph characterization");
  if (m <= 12) {
    if (!is_kernel_perfect(*chosen, 12).perfect) throw HardFailure("Galvin orientation is not kernel-perfect");
    res.cert.method = "exhaustive";
  } else {
    res.cert.method = res.characterization.capped ? "characterization (odd cycles up to length 9)" : "characterization";
  }
  return res;
}

inline GalvinResult galvin_orientation(const MultiGraph& b) {
  std::vector<int> side;
  if (!is_bipartite(b.support(), &side)) throw InputError("input multigraph is not bipartite");
  return galvin_orientation(b, side);
}

// ---- f-KP search ----------------------------------------------------------

struct KPSearchOptions {
  bool allow_doubling = false;
  int extra_edge_budget = 0;  // non-edges that may be added as arcs
  int cap_vertices = 8;
  long long node_limit = 50'000'000;
};

// Depth-first over arc choices per pair, pairs sorted by (max endpoint, min
// endpoint) so that G[0..k] is settled when vertex k's pairs are done; then
// every subset containing k must have a kernel. Doubled edges are tried in
// increasing number, so the first certificate doubles as few edges as possible.
inline std::optional<KPCertificate> is_f_KP(const SimpleGraph& g, const ListSizeFn& f, const KPSearchOptions& opt = {}) {
  const int n = g.n();
  if (f.size() != n) throw InputError("list size function has wrong length");
  if (n > opt.cap_vertices)
    throw CapExceeded("is_f_KP: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(opt.cap_vertices));
  struct Pair {
    int u, v;
    bool edge;
  };
  std::vector<Pair> pairs;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (g.adj(u, v) || opt.extra_edge_budget > 0) pairs.push_back({u, v, g.adj(u, v)});
  // pairs is already in (max, min) order.
  std::vector<int> last_pair_of(n, -1);
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) last_pair_of[pairs[i].v] = i;

  long long nodes = 0;
  std::vector<int> out(n, 0);
  std::vector<Mask> om(n, 0), im(n, 0);
  std::vector<int> choice(pairs.size(), 0);

  // Vertices whose induced prefix must be checked after pair i.
  auto prefix_ok = [&](int k) {
    // Check every subset of {0..k} that contains k.
    std::vector<Arc> arcs;
    for (int u = 0; u <= k; ++u)
      for (int w : mask_to_vertices(om[u] & full_mask(k + 1))) arcs.emplace_back(u, w);
    Digraph d(k + 1, arcs);
    auto adj = detail::support_masks(d);
    Mask rest = full_mask(k);
    for (Mask s = rest;; s = (s - 1) & rest) {
      if (!detail::kernel_search(adj, d, s | bit(k), 0, 0)) return false;
      if (!s) break;
    }
    return true;
  };

  std::optional<KPCertificate> found;
  auto run = [&](int max_doubled) {
    int doubled = 0, extra = 0;
    auto rec = [&](auto&& self, int i) -> bool {
      if (++nodes > opt.node_limit) throw CapExceeded("is_f_KP: node limit reached");
      if (i == static_cast<int>(pairs.size())) {
        // Vertices with no pairs at all (isolated, processed implicitly).
        return true;
      }
      auto [u, v, is_edge] = pairs[i];
      // 0: u->v, 1: v->u, 2: both, 3: absent (non-edges only)
      for (int c = 0; c < 4; ++c) {
        if (c == 2 && !(opt.allow_doubling || !is_edge)) continue;
        if (c == 2 && is_edge && doubled >= max_doubled) continue;
        if (c == 3 && is_edge) continue;
        if (!is_edge && c != 3 && extra >= opt.extra_edge_budget) continue;
        bool uv = c == 0 || c == 2, vu = c == 1 || c == 2;
        if (uv && out[u] + 1 > f[u] - 1) continue;
        if (vu && out[v] + 1 > f[v] - 1) continue;
        if (uv) ++out[u], om[u] |= bit(v), im[v] |= bit(u);
        if (vu) ++out[v], om[v] |= bit(u), im[u] |= bit(v);
        if (c == 2 && is_edge) ++doubled;
        if (!is_edge && c != 3) ++extra;
        choice[i] = c;
        bool ok = true;
        if (last_pair_of[v] == i) ok = prefix_ok(v);
        if (ok && self(self, i + 1)) return true;
        if (c == 2 && is_edge) --doubled;
        if (!is_edge && c != 3) --extra;
        if (uv) --out[u], om[u] &= ~bit(v), im[v] &= ~bit(u);
        if (vu) --out[v], om[v] &= ~bit(u), im[u] &= ~bit(v);
      }
      return false;
    };
    return rec(rec, 0);
  };

  int max_d = opt.allow_doubling ? g.m() : 0;
  for (int dbl = 0; dbl <= max_d; ++dbl) {
    std::fill(out.begin(), out.end(), 0);
    std::fill(om.begin(), om.end(), 0);
    std::fill(im.begin(), im.end(), 0);
    if (run(dbl)) {
      KPCertificate c;
      c.graph = g;
      c.f = f;
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v, is_edge] = pairs[i];
        int ch = choice[i];
        if (ch == 3) continue;
        if (ch == 0 || ch == 2) arcs.emplace_back(u, v);
        if (ch == 1 || ch == 2) arcs.emplace_back(v, u);
        if (ch == 2 && is_edge) c.doubled.emplace_back(u, v);
        if (!is_edge) c.supergraph_edges.emplace_back(u, v);
      }
      c.digraph = Digraph(n, arcs);
      c.method = "exhaustive";
      if (!is_kernel_perfect(c.digraph, 12).perfect) throw HardFailure("search returned a non-kernel-perfect digraph");
      return c;
    }
  }
  return std::nullopt;
}

// ---- fixed multigraph configurations --------------------------------------

struct Mu3Result {
  std::string id;
  KPCertificate cert;
  std::vector<int> dg, dplus;
  bool rows_match = false;
  LineKPReport characterization;
  bool kernel_perfect = false;  // exhaustive
  bool f_bound = false;
  bool ok() const { return rows_match && characterization.ok && kernel_perfect && f_bound; }
};

inline std::vector<Mu3Result> mu3_kp_certificates() {
  std::vector<Mu3Result> out;
  for (auto& e : catalog()) {
    if (e.kind != EntryKind::LineKP) continue;
    Mu3Result r;
    r.id = e.id;
    Digraph d = entry_digraph(e);
    r.dg = e.graph.degrees();
    r.dplus = d.outdegrees();
    r.rows_match = r.dg == e.dg_row && r.dplus == e.dplus_row;
    r.characterization = kp_line_characterization(d, e.root_n, e.root_edges);
    r.kernel_perfect = is_kernel_perfect(d, 12).perfect;
    auto f = entry_f(e);
    r.f_bound = true;
    for (int v = 0; v < d.n(); ++v)
      if (d.outdeg(v) > f[v] - 1) r.f_bound = false;
    r.cert.graph = e.graph;
    r.cert.digraph = d;
    r.cert.f = f;
    for (auto [u, v] : e.graph.edges())
      if (d.bidirected(u, v)) r.cert.doubled.emplace_back(u, v);
    r.cert.method = "exhaustive";
    if (!r.ok()) throw HardFailure("configuration " + e.id + " failed verification");
    out.push_back(r);
  }
  return out;
}

}  // namespace atkp
