#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atkp/alon_tarsi.hpp"
#include "atkp/graph.hpp"
#include "atkp/kernel.hpp"

namespace atkp {

namespace detail {
inline void require_mask_size(const SimpleGraph& g, int cap, const char* what) {
  if (g.n() > cap) throw CapExceeded(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceeds cap " + std::to_string(cap));
}
inline bool mask_is_clique(const SimpleGraph& g, Mask s) {
  for (Mask m = s; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((s & ~bit(v) & ~g.nbr_mask(v)) != 0) return false;
  }
  return true;
}
}  // namespace detail

// ---- claw-free / quasi-line ----------------------------------------------

struct ClawResult {
  bool claw_free = true;
  std::vector<int> claw;  // center first
};

inline ClawResult is_claw_free(const SimpleGraph& g) {
  for (int c = 0; c < g.n(); ++c) {
    auto& nb = g.nbrs(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adj(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adj(nb[i], nb[k]) && !g.adj(nb[j], nb[k])) return {false, {c, nb[i], nb[j], nb[k]}};
      }
  }
  return {};
}

struct QuasiLineResult {
  bool quasi_line = true;
  int witness = -1;  // vertex whose neighbourhood needs three cliques
};

// G[N(v)] splits into two cliques iff its complement is bipartite.
inline QuasiLineResult is_quasi_line(const SimpleGraph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (!is_bipartite(g.induced(g.nbrs(v)).complement())) return {false, v};
  return {};
}

// ---- line graph recognition ----------------------------------------------

struct LineRoot {
  MultiGraph root;
  std::vector<Edge> edge_of;  // input vertex -> root edge
};

// Searches for a family of cliques with every vertex in at most two of them
// and x ~ y iff x and y share a clique. For multigraph roots two vertices may
// share two cliques (parallel edges), so this is a cover, not a partition.
inline std::optional<LineRoot> recognize_line_graph(const SimpleGraph& g, int cap = 12) {
  detail::require_mask_size(g, cap, "recognize_line_graph");
  const int n = g.n();
  std::vector<Mask> cliques;
  std::vector<std::vector<int>> member(n);
  auto covered = [&](int x, int y) {
    for (int c : member[x])
      if (cliques[c] >> y & 1) return true;
    return false;
  };
  auto next_uncovered = [&]() -> std::optional<Edge> {
    for (auto [x, y] : g.edges())
      if (!covered(x, y)) return Edge{x, y};
    return std::nullopt;
  };
  auto can_join = [&](int y, int c) {
    return member[y].size() < 2 && (cliques[c] & ~g.nbr_mask(y)) == 0 && !(cliques[c] >> y & 1);
  };
  auto rec = [&](auto&& self) -> bool {
    auto e = next_uncovered();
    if (!e) return true;
    auto [x, y] = *e;
    for (int pass = 0; pass < 2; ++pass) {
      int a = pass ? y : x, b = pass ? x : y;
      for (int c : std::vector<int>(member[a])) {
        if (!can_join(b, c)) continue;
        cliques[c] |= bit(b);
        member[b].push_back(c);
        if (self(self)) return true;
        member[b].pop_back();
        cliques[c] &= ~bit(b);
      }
    }
    if (member[x].size() < 2 && member[y].size() < 2) {
      int c = static_cast<int>(cliques.size());
      cliques.push_back(bit(x) | bit(y));
      member[x].push_back(c);
      member[y].push_back(c);
      if (self(self)) return true;
      member[x].pop_back();
      member[y].pop_back();
      cliques.pop_back();
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;

  int rn = static_cast<int>(cliques.size());
  LineRoot out;
  for (int x = 0; x < n; ++x) {
    int a, b;
    if (member[x].size() == 2) {
      a = member[x][0];
      b = member[x][1];
    } else if (member[x].size() == 1) {
      a = member[x][0];
      b = rn++;
    } else {
      a = rn++;
      b = rn++;
    }
    out.edge_of.push_back(norm_edge(a, b));
  }
  std::map<Edge, int> mult;
  for (auto e : out.edge_of) ++mult[e];
  std::vector<MultiEdge> es;
  for (auto [e, k] : mult) es.push_back({e.first, e.second, k});
  out.root = MultiGraph(rn, es);
  if (line_graph_of_edge_list(rn, out.edge_of) != g) throw HardFailure("reconstructed root does not reproduce the graph");
  return out;
}

// ---- homogeneous pairs ----------------------------------------------------

struct HomogeneousPair {
  std::vector<int> a1, a2;
  bool nonlinear = false;
};

inline bool has_induced_c4(const SimpleGraph& g, Mask s) {
  auto vs = mask_to_vertices(s);
  const int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int p = j + 1; p < k; ++p)
        for (int q = p + 1; q < k; ++q) {
          int w[4] = {vs[i], vs[j], vs[p], vs[q]};
          int e = 0, deg[4] = {0, 0, 0, 0};
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (g.adj(w[x], w[y])) ++e, ++deg[x], ++deg[y];
          if (e == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) return true;
        }
  return false;
}

inline std::vector<HomogeneousPair> find_homogeneous_pairs(const SimpleGraph& g, bool nonlinear_only, int cap = 12) {
  detail::require_mask_size(g, cap, "find_homogeneous_pairs");
  const int n = g.n();
  const Mask full = full_mask(n);
  std::vector<Mask> cl;
  for (Mask s = 1; s <= full; ++s)
    if (detail::mask_is_clique(g, s)) cl.push_back(s);
  // For each clique, the outside vertices that see all of it / none of it.
  std::vector<Mask> all(cl.size()), none(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) {
    Mask a = full, z = full;
    for (int v : mask_to_vertices(cl[i])) {
      a &= g.nbr_mask(v);
      z &= ~g.nbr_mask(v);
    }
    all[i] = a;
    none[i] = z;
  }
  std::vector<HomogeneousPair> out;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j) {
      if (cl[i] & cl[j]) continue;
      if (popcount(cl[i]) + popcount(cl[j]) < 3) continue;
      Mask outside = full & ~(cl[i] | cl[j]);
      if ((outside & ~(all[i] | none[i])) || (outside & ~(all[j] | none[j]))) continue;
      bool nl = has_induced_c4(g, cl[i] | cl[j]);
      if (nonlinear_only && !nl) continue;
      out.push_back({mask_to_vertices(cl[i]), mask_to_vertices(cl[j]), nl});
    }
  return out;
}

// ---- linear / circular interval orders -----------------------------------

// Vertex order in which every closed neighbourhood is a contiguous block, with
// `first` occupying the leading positions and `last` the trailing ones.
inline std::optional<std::vector<int>> linear_interval_order(const SimpleGraph& g, Mask first = 0, Mask last = 0,
                                                             int cap = 10) {
  detail::require_mask_size(g, cap, "linear interval search");
  const int n = g.n();
  const int nf = popcount(first), nl = popcount(last);
  if (nf > n || nl > n) return std::nullopt;
  std::vector<Mask> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.nbr_mask(v) | bit(v);
  std::vector<int> order;
  std::vector<char> started(n, 0), ended(n, 0);
  auto rec = [&](auto&& self, Mask placed) -> bool {
    int pos = static_cast<int>(order.size());
    if (pos == n) return true;
    for (int x = 0; x < n; ++x) {
      if (placed >> x & 1) continue;
      if (((first >> x) & 1) != (pos < nf)) continue;
      if (((last >> x) & 1) != (pos >= n - nl)) continue;
      // x must extend every open block it belongs to and must not reopen a closed one.
      bool ok = true;
      for (Mask m = placed; m && ok; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((closed[v] >> x & 1) && ended[v]) ok = false;
      }
      // x's own earlier neighbours must be a suffix of the placed sequence.
      if (ok) {
        bool gap = false;
        for (int i = pos - 1; i >= 0; --i) {
          bool nb = g.adj(order[i], x);
          if (nb && gap) ok = false;
          if (!nb) gap = true;
        }
      }
      if (!ok) continue;
      auto saved_s = started, saved_e = ended;
      for (Mask m = placed | bit(x); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (closed[v] >> x & 1)
          started[v] = 1;
        else if (started[v])
          ended[v] = 1;
      }
      order.push_back(x);
      if (self(self, placed | bit(x))) return true;
      order.pop_back();
      started = saved_s;
      ended = saved_e;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return order;
}

inline bool is_circular_arc(Mask set, const std::vector<int>& pos_of_vertex, int n) {
  std::vector<char> in(n, 0);
  for (Mask m = set; m; m &= m - 1) in[pos_of_vertex[std::countr_zero(m)]] = 1;
  int breaks = 0;
  for (int i = 0; i < n; ++i)
    if (in[i] && !in[(i + 1) % n]) ++breaks;
  return breaks <= 1;
}

// Brute force over circular orders with vertex 0 fixed first.
inline std::optional<std::vector<int>> is_circular_interval(const SimpleGraph& g, int cap = 9) {
  detail::require_mask_size(g, cap, "is_circular_interval");
  const int n = g.n();
  if (n == 0) return std::vector<int>{};
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> pos(n);
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = is_circular_arc(g.nbr_mask(v) | bit(v), pos, n);
    if (ok) return order;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return std::nullopt;
}

// ---- compositions of strips -----------------------------------------------

struct Strip {
  SimpleGraph h;
  std::vector<int> x, y;
};

struct CompositionSpec {
  int hub_n = 0;
  std::vector<std::pair<int, int>> hub_edges;  // directed, loops allowed
  std::vector<Strip> strips;                   // one per hub edge
};

// Claw-free H, cliques X and Y, and N_H(v) \ X (resp. \ Y) a clique for v in X (Y).
inline CheckResult check_strip(const Strip& s) {
  if (!s.h.is_clique(s.x)) return CheckResult::fail("X is not a clique");
  if (!s.h.is_clique(s.y)) return CheckResult::fail("Y is not a clique");
  if (!is_claw_free(s.h).claw_free) return CheckResult::fail("strip graph has a claw");
  for (int side = 0; side < 2; ++side) {
    auto& end = side ? s.y : s.x;
    Mask em = vertices_to_mask(end);
    for (int v : end) {
      Mask rest = s.h.nbr_mask(v) & ~em;
      if (!detail::mask_is_clique(s.h, rest))
        return CheckResult::fail(std::string("neighbourhood outside ") + (side ? "Y" : "X") + " of vertex " +
                                 std::to_string(v) + " is not a clique");
    }
  }
  return {};
}

struct Composition {
  SimpleGraph graph;
  std::vector<int> strip_offset;
  std::vector<std::vector<int>> hub_clique;  // C_v per hub vertex
};

inline Composition compose(const CompositionSpec& spec) {
  if (spec.strips.size() != spec.hub_edges.size()) throw InputError("need exactly one strip per hub edge");
  Composition out;
  out.hub_clique.assign(spec.hub_n, {});
  std::vector<Edge> edges;
  int off = 0;
  for (std::size_t i = 0; i < spec.strips.size(); ++i) {
    auto& s = spec.strips[i];
    auto [a, b] = spec.hub_edges[i];
    if (a < 0 || b < 0 || a >= spec.hub_n || b >= spec.hub_n) throw InputError("hub edge endpoint out of range");
    if (auto c = check_strip(s); !c.ok) throw InputError("strip " + std::to_string(i) + ": " + c.reason);
    out.strip_offset.push_back(off);
    for (auto [u, v] : s.h.edges()) edges.emplace_back(off + u, off + v);
    // A loop puts both ends of its strip into the same C_v.
    for (int v : s.x) out.hub_clique[a].push_back(off + v);
    for (int v : s.y) out.hub_clique[b].push_back(off + v);
    off += s.h.n();
  }
  for (auto& c : out.hub_clique) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.push_back(norm_edge(c[i], c[j]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = SimpleGraph(off, edges);
  return out;
}

// ---- interval 2-joins -----------------------------------------------------

struct TwoJoin {
  std::vector<int> h, a1, a2, b1, b2;
};

struct TwoJoinCheck {
  bool ok = true;
  std::string violated;  // "(i)" .. "(iv)" plus detail
  std::vector<int> order;  // linear interval order of H, when (i) holds
};

inline TwoJoinCheck verify_2join(const SimpleGraph& g, const TwoJoin& tj) {
  auto fail = [](std::string s) { return TwoJoinCheck{false, std::move(s), {}}; };
  const int n = g.n();
  for (auto* s : {&tj.h, &tj.a1, &tj.a2, &tj.b1, &tj.b2})
    for (int v : *s)
      if (v < 0 || v >= n) throw InputError("2-join vertex out of range");
  Mask h = vertices_to_mask(tj.h), a1 = vertices_to_mask(tj.a1), a2 = vertices_to_mask(tj.a2);
  Mask b1 = vertices_to_mask(tj.b1), b2 = vertices_to_mask(tj.b2);
  if (!h) return fail("(i) H is empty");
  if ((a1 & ~h) || (a2 & ~h)) return fail("(ii) end cliques must lie in H");
  if (!a1 || !a2) return fail("(ii) end cliques must be nonempty");
  if (!g.is_clique(tj.a1) || !g.is_clique(tj.a2)) return fail("(ii) an end set is not a clique");
  if ((b1 & h) || (b2 & h)) return fail("(iii) B sets must lie outside H");
  if (!g.is_clique(tj.b1) || !g.is_clique(tj.b2)) return fail("(iii) a B set is not a clique");
  // (i) with A1 and A2 at opposite ends of the order.
  auto hg = g.induced(tj.h);
  std::vector<int> idx(n, -1);
  for (std::size_t i = 0; i < tj.h.size(); ++i) idx[tj.h[i]] = static_cast<int>(i);
  Mask la1 = 0, la2 = 0;
  for (int v : tj.a1) la1 |= bit(idx[v]);
  for (int v : tj.a2) la2 |= bit(idx[v]);
  // Reversing an order swaps the ends, so A1 first and A2 last loses nothing.
  auto ord = linear_interval_order(hg, la1, la2);
  if (!ord) return fail("(i) H has no linear interval order with A1 and A2 at the ends");
  // (iii)/(iv): the edges between H and the rest are exactly A1xB1 and A2xB2.
  for (int v : tj.h)
    for (int w : g.nbrs(v)) {
      if (h >> w & 1) continue;
      bool allowed = ((a1 >> v & 1) && (b1 >> w & 1)) || ((a2 >> v & 1) && (b2 >> w & 1));
      if (!allowed) return fail("(iv) extra edge " + std::to_string(v) + "-" + std::to_string(w));
    }
  for (int v : tj.a1)
    for (int w : tj.b1)
      if (!g.adj(v, w)) return fail("(iii) A1 is not joined to B1");
  for (int v : tj.a2)
    for (int w : tj.b2)
      if (!g.adj(v, w)) return fail("(iii) A2 is not joined to B2");
  TwoJoinCheck r;
  for (int i : *ord) r.order.push_back(tj.h[i]);
  return r;
}

// One reduction step on a canonical reducible 2-join. The step strips A1 (or
// A2, mirrored) off H; the new strip keeps every remaining vertex of H except
// C ∩ A2, which moves into both B sets. A side whose C lies inside the far end
// is skipped, since its new near end would be empty.
inline TwoJoin reduce_2join(const SimpleGraph& g, const TwoJoin& tj) {
  auto chk = verify_2join(g, tj);
  if (!chk.ok) throw InputError("not an interval 2-join: " + chk.violated);
  Mask h = vertices_to_mask(tj.h), a1 = vertices_to_mask(tj.a1), a2 = vertices_to_mask(tj.a2);
  if (a1 & a2) throw InputError("2-join is not canonical (A1 and A2 meet)");
  if (g.is_clique(tj.h)) throw InputError("2-join is not reducible (H is complete)");
  auto nh = [&](Mask s) {
    Mask r = 0;
    for (int v : mask_to_vertices(s)) r |= g.nbr_mask(v);
    return r & h;
  };
  const auto& ord = chk.order;
  for (int side = 0; side < 2; ++side) {
    Mask e1 = side ? a2 : a1, e2 = side ? a1 : a2;
    int end = side ? ord.back() : ord.front();
    Mask c = nh(bit(end)) & ~e1;
    if ((nh(e1) & ~e1) != c) continue;
    Mask na1 = c & ~e2, na2 = e2 & ~c;
    // C inside the far end would leave the new near end empty.
    if (!na1) continue;
    Mask nhm = h & ~e1 & ~(c & e2);
    TwoJoin out;
    out.h = mask_to_vertices(nhm);
    auto cb = mask_to_vertices(c & e2);
    auto& b_far = side ? tj.b1 : tj.b2;
    std::vector<int> nb1 = mask_to_vertices(e1), nb2 = b_far;
    nb1.insert(nb1.end(), cb.begin(), cb.end());
    nb2.insert(nb2.end(), cb.begin(), cb.end());
    std::sort(nb1.begin(), nb1.end());
    std::sort(nb2.begin(), nb2.end());
    if (side == 0) {
      out.a1 = mask_to_vertices(na1);
      out.a2 = mask_to_vertices(na2);
      out.b1 = nb1;
      out.b2 = nb2;
    } else {
      out.a2 = mask_to_vertices(na1);
      out.a1 = mask_to_vertices(na2);
      out.b2 = nb1;
      out.b1 = nb2;
    }
    auto again = verify_2join(g, out);
    if (!again.ok) throw HardFailure("reduced 2-join fails verification: " + again.violated);
    return out;
  }
  throw InputError("2-join is not reducible");
}

// ---- reducible configuration scan -----------------------------------------

struct BKWitness {
  std::vector<int> vertices;
  std::string kind;  // "AT", "KP" or "inconclusive"
  ListSizeFn f;
  std::optional<ATCertificate> at;
  std::optional<KPCertificate> kp;
  std::string note;
};

struct BKScanOptions {
  int max_sub = 6;
  int cap_vertices = 16;
  bool try_at = true;
  bool try_kp = true;
  int kp_cap_vertices = 8;
  int at_cap_edges = 24;
  std::optional<std::vector<int>> host_degree;  // d_G override per vertex
};

inline std::vector<int> host_degrees_from_low(const SimpleGraph& g, int delta, const std::vector<int>& low) {
  std::vector<int> d(g.n(), delta);
  for (int v : low) d[v] = delta - 1;
  return d;
}

// f_H(v) = d_H(v) - 1 + delta - d_G(v) over connected induced subgraphs H.
// A disconnected H is reducible iff one of its components is, so connected
// subgraphs are enough.
inline std::vector<BKWitness> bk_free_scan(const SimpleGraph& g, int delta, const BKScanOptions& opt = {}) {
  detail::require_mask_size(g, std::min(opt.cap_vertices, 30), "bk_free_scan");
  const int n = g.n();
  std::vector<int> dg = opt.host_degree ? *opt.host_degree : g.degrees();
  if (static_cast<int>(dg.size()) != n) throw InputError("host degree vector has wrong length");
  for (int v = 0; v < n; ++v)
    if (dg[v] > delta || dg[v] < g.degree(v))
      throw InputError("host degree of vertex " + std::to_string(v) + " is inconsistent with delta");
  std::vector<Mask> subs;
  for (Mask s = 1; s <= full_mask(n); ++s) {
    if (popcount(s) > opt.max_sub) continue;
    if (!is_connected(g.induced(mask_to_vertices(s)))) continue;
    subs.push_back(s);
  }
  std::stable_sort(subs.begin(), subs.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  std::vector<BKWitness> out;
  for (Mask s : subs) {
    auto vs = mask_to_vertices(s);
    auto h = g.induced(vs);
    std::vector<int> f(vs.size());
    bool positive = true;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      f[i] = h.degree(static_cast<int>(i)) - 1 + delta - dg[vs[i]];
      if (f[i] < 1) positive = false;
    }
    if (!positive) continue;
    ListSizeFn fh(f);
    BKWitness w{vs, "", fh, std::nullopt, std::nullopt, ""};
    bool capped = false;
    if (!opt.try_at) {
      // AT skipped on request.
    } else if (h.m() <= opt.at_cap_edges) {
      try {
        if (auto c = is_f_AT(h, fh)) {
          w.kind = "AT";
          w.at = *c;
          out.push_back(std::move(w));
          continue;
        }
      } catch (const CapExceeded& e) {
        capped = true;
        w.note = e.what();
      }
    } else {
      capped = true;
      w.note = "AT search skipped: edge cap";
    }
    if (opt.try_kp) {
      if (h.n() <= opt.kp_cap_vertices) {
        KPSearchOptions ko;
        ko.allow_doubling = true;
        ko.cap_vertices = opt.kp_cap_vertices;
        try {
          if (auto c = is_f_KP(h, fh, ko)) {
            w.kind = "KP";
            w.kp = *c;
            w.note.clear();
            out.push_back(std::move(w));
            continue;
          }
        } catch (const CapExceeded& e) {
          capped = true;
          w.note = e.what();
        }
      } else {
        capped = true;
        if (w.note.empty()) w.note = "KP search skipped: vertex cap";
      }
    }
    if (capped) {
      w.kind = "inconclusive";
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace atkp
