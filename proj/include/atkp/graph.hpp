#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace atkp {

using Mask = std::uint64_t;
using Edge = std::pair<int, int>;
using Arc = std::pair<int, int>;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a construction that a lemma guarantees fails anyway.
struct HardFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

inline std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask vertices_to_mask(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

inline Edge norm_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {
    if (n < 0) throw InputError("negative vertex count");
  }
  SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
    finish();
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool adj(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<int>& nbrs(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Only meaningful for n <= 64.
  Mask nbr_mask(int v) const { return nmask_[v]; }

  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }
  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  bool is_clique(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adj(vs[i], vs[j])) return false;
    return true;
  }
  bool is_independent(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (adj(vs[i], vs[j])) return false;
    return true;
  }

  // Vertex i of the result is vs[i].
  SimpleGraph induced(const std::vector<int>& vs) const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (adj(vs[i], vs[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return SimpleGraph(static_cast<int>(vs.size()), es);
  }

  SimpleGraph complement() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!adj(u, v)) es.emplace_back(u, v);
    return SimpleGraph(n_, es);
  }

  SimpleGraph without_edge(Edge e) const {
    e = norm_edge(e.first, e.second);
    std::vector<Edge> es;
    for (auto x : edges_)
      if (x != e) es.push_back(x);
    return SimpleGraph(n_, es);
  }

  SimpleGraph with_edges(const std::vector<Edge>& extra) const {
    std::vector<Edge> es = edges_;
    es.insert(es.end(), extra.begin(), extra.end());
    return SimpleGraph(n_, es);
  }

  bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (adj(u, v)) throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[static_cast<std::size_t>(u) * n_ + v] = adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    edges_.push_back(norm_edge(u, v));
  }
  void finish() {
    std::sort(edges_.begin(), edges_.end());
    nmask_.assign(n_, 0);
    for (auto [u, v] : edges_) {
      nbrs_[u].push_back(v);
      nbrs_[v].push_back(u);
      if (n_ <= 64) {
        nmask_[u] |= bit(v);
        nmask_[v] |= bit(u);
      }
    }
    for (auto& l : nbrs_) std::sort(l.begin(), l.end());
  }

  int n_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<Mask> nmask_;
  std::vector<Edge> edges_;
};

struct MultiEdge {
  int u = 0, v = 0, mult = 1;
  bool operator==(const MultiEdge&) const = default;
  auto operator<=>(const MultiEdge&) const = default;
};

class MultiGraph {
 public:
  MultiGraph() = default;
  // Records with the same pair are merged by adding multiplicities.
  MultiGraph(int n, std::vector<MultiEdge> edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
      if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
      if (e.mult < 1) throw InputError("multiplicity must be positive");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (auto& e : edges) {
      if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
        edges_.back().mult += e.mult;
      else
        edges_.push_back(e);
    }
    deg_.assign(n, 0);
    for (auto& e : edges_) {
      deg_[e.u] += e.mult;
      deg_[e.v] += e.mult;
    }
  }

  static MultiGraph from_simple(const SimpleGraph& g) {
    std::vector<MultiEdge> es;
    for (auto [u, v] : g.edges()) es.push_back({u, v, 1});
    return MultiGraph(g.n(), es);
  }

  int n() const { return n_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }
  int degree(int v) const { return deg_[v]; }
  int edge_count() const {
    int s = 0;
    for (auto& e : edges_) s += e.mult;
    return s;
  }
  int mult(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (auto& e : edges_)
      if (e.u == u && e.v == v) return e.mult;
    return 0;
  }
  int max_multiplicity() const {
    int m = 0;
    for (auto& e : edges_) m = std::max(m, e.mult);
    return m;
  }
  int max_degree() const {
    int d = 0;
    for (int x : deg_) d = std::max(d, x);
    return d;
  }
  int min_degree() const {
    if (n_ == 0) return 0;
    return *std::min_element(deg_.begin(), deg_.end());
  }
  SimpleGraph support() const {
    std::vector<Edge> es;
    for (auto& e : edges_) es.emplace_back(e.u, e.v);
    return SimpleGraph(n_, es);
  }
  bool operator==(const MultiGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<MultiEdge> edges_;
  std::vector<int> deg_;
};

class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs) : n_(n), out_(n), in_(n) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("arc endpoint out of range");
      if (u == v) throw InputError("loop arc at vertex " + std::to_string(u));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);
    for (auto [u, v] : arcs_) {
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    if (n <= 64) {
      omask_.assign(n, 0);
      imask_.assign(n, 0);
      for (auto [u, v] : arcs_) {
        omask_[u] |= bit(v);
        imask_[v] |= bit(u);
      }
    }
  }

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool has_arc(int u, int v) const { return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v}); }
  bool bidirected(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  int outdeg(int v) const { return static_cast<int>(out_[v].size()); }
  std::vector<int> outdegrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = outdeg(v);
    return d;
  }
  std::vector<int> indegrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(in_[v].size());
    return d;
  }
  // Only meaningful for n <= 64.
  Mask out_mask(int v) const { return omask_[v]; }
  Mask in_mask(int v) const { return imask_[v]; }

  SimpleGraph support() const {
    std::vector<Edge> es;
    for (auto [u, v] : arcs_) es.push_back(norm_edge(u, v));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return SimpleGraph(n_, es);
  }

  Digraph reversed() const {
    std::vector<Arc> a;
    for (auto [u, v] : arcs_) a.emplace_back(v, u);
    return Digraph(n_, a);
  }

  // Vertex i of the result is vs[i].
  Digraph induced(const std::vector<int>& vs) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<Arc> a;
    for (auto [u, v] : arcs_)
      if (pos[u] >= 0 && pos[v] >= 0) a.emplace_back(pos[u], pos[v]);
    return Digraph(static_cast<int>(vs.size()), a);
  }

  // True when every edge of g carries exactly one arc and no arc leaves E(g).
  bool orients(const SimpleGraph& g) const {
    if (g.n() != n_) return false;
    for (auto [u, v] : arcs_)
      if (!g.adj(u, v) || has_arc(v, u)) return false;
    return arc_count() == g.m();
  }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<Mask> omask_, imask_;
};

class ListSizeFn {
 public:
  ListSizeFn() = default;
  explicit ListSizeFn(std::vector<int> values) : values_(std::move(values)) {
    for (int x : values_)
      if (x < 1) throw InputError("list sizes must be positive");
  }
  static ListSizeFn constant(int n, int k) { return ListSizeFn(std::vector<int>(n, k)); }
  // d(v) on low vertices, d(v)-1 elsewhere.
  static ListSizeFn d1(const SimpleGraph& g, const std::vector<int>& low = {}) {
    std::vector<int> f(g.n());
    for (int v = 0; v < g.n(); ++v) f[v] = g.degree(v) - 1;
    for (int v : low) f.at(v) = g.degree(v);
    return ListSizeFn(f);
  }
  static ListSizeFn degree(const SimpleGraph& g) { return d1(g, iota(g.n())); }

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int v) const { return values_[v]; }
  const std::vector<int>& values() const { return values_; }
  int total() const { return std::accumulate(values_.begin(), values_.end(), 0); }
  ListSizeFn restricted(const std::vector<int>& vs) const {
    std::vector<int> f;
    for (int v : vs) f.push_back(values_[v]);
    return ListSizeFn(f);
  }
  bool operator==(const ListSizeFn&) const = default;

  static std::vector<int> iota(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

 private:
  std::vector<int> values_;
};

// ---- generators -----------------------------------------------------------

inline SimpleGraph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return SimpleGraph(n, es);
}

inline SimpleGraph empty_graph(int n) { return SimpleGraph(n, {}); }

inline SimpleGraph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.push_back(norm_edge(v, (v + 1) % n));
  return SimpleGraph(n, es);
}

inline SimpleGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return SimpleGraph(n, es);
}

inline SimpleGraph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return SimpleGraph(leaves + 1, es);
}

inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<Edge> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return SimpleGraph(a.n() + b.n(), es);
}

// Vertices of g1 come first, then those of g2.
inline SimpleGraph join(const SimpleGraph& g1, const SimpleGraph& g2) {
  std::vector<Edge> es = disjoint_union(g1, g2).edges();
  for (int u = 0; u < g1.n(); ++u)
    for (int v = 0; v < g2.n(); ++v) es.emplace_back(u, g1.n() + v);
  return SimpleGraph(g1.n() + g2.n(), es);
}

// K_{2*t}: vertex 2i misses only 2i+1.
inline SimpleGraph complete_multipartite_2t(int t) {
  if (t < 1) throw InputError("t must be positive");
  std::vector<Edge> es;
  for (int u = 0; u < 2 * t; ++u)
    for (int v = u + 1; v < 2 * t; ++v)
      if (!(u % 2 == 0 && v == u + 1)) es.emplace_back(u, v);
  return SimpleGraph(2 * t, es);
}

inline MultiGraph complete_bipartite_multi(int a, int b) {
  std::vector<MultiEdge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.push_back({u, a + v, 1});
  return MultiGraph(a + b, es);
}

// ---- line graphs ----------------------------------------------------------

struct EdgeCopy {
  int u = 0, v = 0, copy = 0;
  bool operator==(const EdgeCopy&) const = default;
};

struct LineGraph {
  SimpleGraph graph;
  std::vector<EdgeCopy> origin;  // line vertex -> root edge copy
};

// Line graph of an explicit list of (possibly parallel) edges; vertex i is edge i.
inline SimpleGraph line_graph_of_edge_list(int n, const std::vector<Edge>& list) {
  std::vector<std::vector<int>> at(n);
  for (std::size_t i = 0; i < list.size(); ++i) {
    auto [u, v] = list[i];
    if (u == v) throw InputError("loop edge in root");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("root edge endpoint out of range");
    at[u].push_back(static_cast<int>(i));
    at[v].push_back(static_cast<int>(i));
  }
  std::vector<Edge> es;
  for (auto& star : at)
    for (std::size_t i = 0; i < star.size(); ++i)
      for (std::size_t j = i + 1; j < star.size(); ++j) es.push_back(norm_edge(star[i], star[j]));
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return SimpleGraph(static_cast<int>(list.size()), es);
}

inline std::vector<Edge> expand_copies(const MultiGraph& h) {
  std::vector<Edge> list;
  for (auto& e : h.edges())
    for (int c = 0; c < e.mult; ++c) list.emplace_back(e.u, e.v);
  return list;
}

inline LineGraph line_graph(const MultiGraph& h) {
  LineGraph lg;
  for (auto& e : h.edges())
    for (int c = 0; c < e.mult; ++c) lg.origin.push_back({e.u, e.v, c});
  lg.graph = line_graph_of_edge_list(h.n(), expand_copies(h));
  return lg;
}

inline bool is_bipartite(const SimpleGraph& g, std::vector<int>* side = nullptr) {
  std::vector<int> col(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.nbrs(u)) {
        if (col[w] < 0) {
          col[w] = 1 - col[u];
          stack.push_back(w);
        } else if (col[w] == col[u]) {
          return false;
        }
      }
    }
  }
  if (side) *side = col;
  return true;
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.nbrs(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == g.n();
}

// Bron–Kerbosch with pivoting; fine at desk scale.
inline std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  auto rec = [&](auto&& self, std::vector<int> p, std::vector<int> x) -> void {
    if (p.empty() && x.empty()) {
      auto c = r;
      std::sort(c.begin(), c.end());
      out.push_back(c);
      return;
    }
    int pivot = -1, best = -1;
    for (int u : p) {
      int c = 0;
      for (int w : p) c += g.adj(u, w);
      if (c > best) best = c, pivot = u;
    }
    for (int u : x) {
      int c = 0;
      for (int w : p) c += g.adj(u, w);
      if (c > best) best = c, pivot = u;
    }
    std::vector<int> cand;
    for (int v : p)
      if (pivot < 0 || !g.adj(pivot, v)) cand.push_back(v);
    for (int v : cand) {
      std::vector<int> p2, x2;
      for (int w : p)
        if (g.adj(v, w)) p2.push_back(w);
      for (int w : x)
        if (g.adj(v, w)) x2.push_back(w);
      r.push_back(v);
      self(self, p2, x2);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  rec(rec, ListSizeFn::iota(g.n()), {});
  std::sort(out.begin(), out.end());
  return out;
}

inline int clique_number(const SimpleGraph& g) {
  int w = 0;
  for (auto& c : maximal_cliques(g)) w = std::max(w, static_cast<int>(c.size()));
  return w;
}

}  // namespace atkp
