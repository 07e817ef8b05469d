#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "atkp/catalog.hpp"
#include "atkp/graph.hpp"

namespace atkp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

struct EulerCounts {
  BigInt ee, eo;
};

// Arc subsets with in-degree = out-degree everywhere, split by parity of size.
// Dynamic programme over arcs keyed by the balance vector of the still-open
// vertices; a vertex is closed (balance forced to 0) after its last arc.
inline EulerCounts eulerian_counts(const Digraph& d) {
  const int n = d.n();
  std::vector<Arc> arcs = d.arcs();
  std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::max(a.first, a.second) < std::max(b.first, b.second);
  });
  const int m = static_cast<int>(arcs.size());
  std::vector<int> remaining(n, 0), last(n, -1);
  for (int k = 0; k < m; ++k) {
    ++remaining[arcs[k].first];
    ++remaining[arcs[k].second];
    last[arcs[k].first] = last[arcs[k].second] = k;
  }
  struct Pair {
    BigInt even, odd;
  };
  std::unordered_map<std::string, Pair> cur, next;
  cur[std::string(n, '\0')] = Pair{1, 0};
  for (int k = 0; k < m; ++k) {
    auto [u, v] = arcs[k];
    --remaining[u];
    --remaining[v];
    next.clear();
    auto admit = [&](std::string key, const BigInt& even, const BigInt& odd) {
      signed char bu = static_cast<signed char>(key[u]), bv = static_cast<signed char>(key[v]);
      if ((last[u] == k && bu != 0) || (last[v] == k && bv != 0)) return;
      if (std::abs(bu) > remaining[u] || std::abs(bv) > remaining[v]) return;
      auto& slot = next[key];
      slot.even += even;
      slot.odd += odd;
    };
    for (auto& [key, val] : cur) {
      admit(key, val.even, val.odd);
      std::string taken = key;
      taken[u] = static_cast<char>(static_cast<signed char>(taken[u]) + 1);
      taken[v] = static_cast<char>(static_cast<signed char>(taken[v]) - 1);
      admit(taken, val.odd, val.even);
    }
    std::swap(cur, next);
  }
  auto it = cur.find(std::string(n, '\0'));
  if (it == cur.end()) return {0, 0};
  return {it->second.even, it->second.odd};
}

// ---- graph polynomial coefficients ---------------------------------------

namespace detail {

struct Radix {
  std::vector<std::uint64_t> place;
  std::vector<int> cap;
  explicit Radix(const std::vector<int>& caps) : cap(caps) {
    std::uint64_t p = 1;
    place.resize(caps.size());
    for (std::size_t i = 0; i < caps.size(); ++i) {
      place[i] = p;
      if (p > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(caps[i] + 1))
        throw CapExceeded("monomial space too large for capped expansion");
      p *= static_cast<std::uint64_t>(caps[i] + 1);
    }
  }
  int digit(std::uint64_t key, int i) const { return static_cast<int>((key / place[i]) % (cap[i] + 1)); }
  std::vector<int> decode(std::uint64_t key) const {
    std::vector<int> e(cap.size());
    for (std::size_t i = 0; i < cap.size(); ++i) e[i] = digit(key, static_cast<int>(i));
    return e;
  }
  std::uint64_t encode(const std::vector<int>& e) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k += place[i] * static_cast<std::uint64_t>(e[i]);
    return k;
  }
};

// Expands prod_{ij in E, i<j} (x_i - x_j) keeping only monomials with
// exponent <= cap[v]. With exact=true the caps are the target exponents and
// monomials that can no longer reach them are dropped early.
template <class Coef>
std::unordered_map<std::uint64_t, Coef> capped_expansion(const SimpleGraph& g, const std::vector<int>& cap, bool exact) {
  const int n = g.n();
  Radix rx(cap);
  std::vector<int> rem(n, 0);
  for (auto [u, v] : g.edges()) ++rem[u], ++rem[v];
  long long slack_total = 0;
  for (int v = 0; v < n; ++v) slack_total += cap[v];
  int edges_left = g.m();
  std::unordered_map<std::uint64_t, Coef> cur, next;
  cur[0] = Coef(1);
  for (auto [i, j] : g.edges()) {
    --rem[i], --rem[j], --edges_left;
    next.clear();
    for (auto& [key, c] : cur) {
      int ei = rx.digit(key, i), ej = rx.digit(key, j);
      auto feasible = [&](std::uint64_t k2, int a, int a_val, int b, int b_val) {
        if (exact) {
          if (cap[a] - a_val > rem[a] || cap[b] - b_val > rem[b]) return false;
        }
        (void)k2;
        return true;
      };
      if (ei < cap[i]) {
        std::uint64_t k2 = key + rx.place[i];
        if (feasible(k2, i, ei + 1, j, ej)) next[k2] += c;
      }
      if (ej < cap[j]) {
        std::uint64_t k2 = key + rx.place[j];
        if (feasible(k2, i, ei, j, ej + 1)) next[k2] -= c;
      }
    }
    // Global slack: remaining edges must still fit under the caps.
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == 0) {
        it = next.erase(it);
        continue;
      }
      long long used = 0;
      for (int v = 0; v < n; ++v) used += rx.digit(it->first, v);
      if (slack_total - used < edges_left)
        it = next.erase(it);
      else
        ++it;
    }
    std::swap(cur, next);
  }
  return cur;
}

template <class Coef>
BigInt to_big(const Coef& c) {
  return BigInt(c);
}

}  // namespace detail

// Exact coefficient of x^k in the graph polynomial (natural vertex order).
inline BigInt poly_coefficient_expand(const SimpleGraph& g, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != g.n()) throw InputError("exponent vector length must equal vertex count");
  long long sum = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (k[v] < 0) throw InputError("exponents must be nonnegative");
    if (k[v] > g.degree(v)) return 0;
    sum += k[v];
  }
  if (sum != g.m()) return 0;
  if (g.m() <= 62) {
    auto mp = detail::capped_expansion<long long>(g, k, true);
    auto it = mp.find(detail::Radix(k).encode(k));
    return it == mp.end() ? BigInt(0) : BigInt(it->second);
  }
  auto mp = detail::capped_expansion<BigInt>(g, k, true);
  auto it = mp.find(detail::Radix(k).encode(k));
  return it == mp.end() ? BigInt(0) : it->second;
}

// Same coefficient via the coefficient formula over the grid
// C_i = {0..k_i}: sum of g(c) / prod_i prod_{d in C_i, d != c_i} (c_i - d).
inline BigInt poly_coefficient_schauz(const SimpleGraph& g, const std::vector<int>& k) {
  const int n = g.n();
  if (static_cast<int>(k.size()) != n) throw InputError("exponent vector length must equal vertex count");
  long long sum = 0;
  for (int x : k) {
    if (x < 0) throw InputError("exponents must be nonnegative");
    sum += x;
  }
  if (sum != g.m()) throw InputError("degree mismatch: exponents sum to " + std::to_string(sum) + " but |E| = " + std::to_string(g.m()));
  int kmax = 0;
  for (int x : k) kmax = std::max(kmax, x);
  std::vector<BigInt> fact(kmax + 1, 1);
  for (int i = 1; i <= kmax; ++i) fact[i] = fact[i - 1] * i;
  // Only earlier neighbours matter when checking a partial assignment.
  std::vector<std::vector<int>> earlier(n);
  for (auto [u, v] : g.edges()) earlier[v].push_back(u);
  std::vector<int> c(n, 0);
  Rational total = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      BigInt num = 1, den = 1;
      for (auto [u, v] : g.edges()) num *= (c[u] - c[v]);
      for (int v = 0; v < n; ++v) {
        BigInt t = fact[c[v]] * fact[k[v] - c[v]];
        if ((k[v] - c[v]) % 2) t = -t;
        den *= t;
      }
      // This Boost rejects Rational(neg, neg); keep the denominator positive.
      if (den < 0) {
        den = -den;
        num = -num;
      }
      total += Rational(num, den);
      return;
    }
    for (int x = 0; x <= k[i]; ++x) {
      bool ok = true;
      for (int u : earlier[i])
        if (c[u] == x) {
          ok = false;
          break;
        }
      if (!ok) continue;
      c[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  if (boost::multiprecision::denominator(total) != 1) throw HardFailure("coefficient formula produced a non-integer");
  return boost::multiprecision::numerator(total);
}

// ---- orientations ---------------------------------------------------------

namespace detail {

// Can the still-free edges be oriented so that vertex v gains exactly need[v]
// out-arcs? Bipartite assignment edges -> endpoints, solved by augmenting paths.
inline bool orientation_feasible(int n, const std::vector<Edge>& free_edges, std::vector<int> need) {
  long long total = 0;
  for (int x : need) {
    if (x < 0) return false;
    total += x;
  }
  if (total != static_cast<long long>(free_edges.size())) return false;
  std::vector<int> owner(free_edges.size(), -1);
  std::vector<std::vector<int>> held(n);
  for (std::size_t e = 0; e < free_edges.size(); ++e) {
    std::vector<int> seen_v(n, 0);
    std::vector<int> seen_e(free_edges.size(), 0);
    auto augment = [&](auto&& self, int edge) -> bool {
      seen_e[edge] = 1;
      for (int end : {free_edges[edge].first, free_edges[edge].second}) {
        if (seen_v[end]) continue;
        seen_v[end] = 1;
        if (static_cast<int>(held[end].size()) < need[end]) {
          held[end].push_back(edge);
          owner[edge] = end;
          return true;
        }
        for (std::size_t t = 0; t < held[end].size(); ++t) {
          int other = held[end][t];
          if (seen_e[other]) continue;
          if (self(self, other)) {
            held[end][t] = edge;
            owner[edge] = end;
            return true;
          }
        }
      }
      return false;
    };
    if (!augment(augment, static_cast<int>(e))) return false;
  }
  return true;
}

}  // namespace detail

// Lexicographically smallest orientation (forward = lower -> higher first)
// whose outdegree vector is exactly k.
inline std::optional<Digraph> orientation_with_outdegrees(const SimpleGraph& g, const std::vector<int>& k) {
  const auto& es = g.edges();
  std::vector<int> need = k;
  std::vector<Edge> rest(es.begin(), es.end());
  if (!detail::orientation_feasible(g.n(), rest, need)) return std::nullopt;
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    std::vector<Edge> tail(es.begin() + static_cast<long>(i) + 1, es.end());
    --need[u];
    if (need[u] >= 0 && detail::orientation_feasible(g.n(), tail, need)) {
      arcs.emplace_back(u, v);
      continue;
    }
    ++need[u];
    --need[v];
    arcs.emplace_back(v, u);
  }
  return Digraph(g.n(), arcs);
}

// Sign linking the coefficient at the outdegree vector of d to EE - EO:
// each arc j -> i with i < j contributes a factor -1.
inline int orientation_sign(const Digraph& d) {
  int back = 0;
  for (auto [u, v] : d.arcs())
    if (u > v) ++back;
  return back % 2 ? -1 : 1;
}

struct ATCertificate {
  SimpleGraph graph;
  Digraph digraph;
  BigInt ee, eo;
  ListSizeFn f;
  std::vector<int> exponents;
  BigInt coefficient;
};

struct CheckResult {
  bool ok = true;
  std::string reason;
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

inline CheckResult verify_at_certificate(const ATCertificate& c) {
  if (!c.digraph.orients(c.graph)) return CheckResult::fail("digraph does not orient the graph");
  if (c.f.size() != c.graph.n()) return CheckResult::fail("list size function has wrong length");
  for (int v = 0; v < c.graph.n(); ++v)
    if (c.digraph.outdeg(v) > c.f[v] - 1)
      return CheckResult::fail("outdegree of " + std::to_string(v) + " exceeds f-1");
  auto counts = eulerian_counts(c.digraph);
  if (counts.ee != c.ee || counts.eo != c.eo) return CheckResult::fail("stored Eulerian counts do not match");
  if (counts.ee == counts.eo) return CheckResult::fail("EE equals EO");
  return {};
}

inline ATCertificate certificate_from_exponents(const SimpleGraph& g, const ListSizeFn& f, const std::vector<int>& k,
                                                const BigInt& coef) {
  auto d = orientation_with_outdegrees(g, k);
  if (!d) throw HardFailure("nonzero coefficient without a realizing orientation");
  auto counts = eulerian_counts(*d);
  BigInt diff = counts.ee - counts.eo;
  if (coef != orientation_sign(*d) * diff) throw HardFailure("coefficient does not match signed EE-EO");
  return ATCertificate{g, *d, counts.ee, counts.eo, f, k, coef};
}

// Nonzero monomials under caps f(v)-1; the lexicographically smallest
// exponent vector wins, then the smallest orientation realizing it.
inline std::optional<ATCertificate> is_f_AT(const SimpleGraph& g, const ListSizeFn& f) {
  const int n = g.n();
  if (f.size() != n) throw InputError("list size function has wrong length");
  std::vector<int> cap(n);
  long long room = 0;
  for (int v = 0; v < n; ++v) {
    cap[v] = std::min(f[v] - 1, g.degree(v));
    if (cap[v] < 0) return std::nullopt;
    room += cap[v];
  }
  if (room < g.m()) return std::nullopt;
  detail::Radix rx(cap);
  std::optional<std::vector<int>> best;
  BigInt best_coef;
  auto consider = [&](std::uint64_t key, const BigInt& c) {
    if (c == 0) return;
    auto e = rx.decode(key);
    if (!best || e < *best) {
      best = e;
      best_coef = c;
    }
  };
  if (g.m() <= 62) {
    for (auto& [key, c] : detail::capped_expansion<long long>(g, cap, false)) consider(key, BigInt(c));
  } else {
    for (auto& [key, c] : detail::capped_expansion<BigInt>(g, cap, false)) consider(key, c);
  }
  if (!best) return std::nullopt;
  return certificate_from_exponents(g, f, *best, best_coef);
}

struct CoefficientIdentity {
  BigInt coefficient, ee, eo;
  int sign = 1;
  bool holds = false;         // |coef| == |EE - EO|
  bool signed_holds = false;  // coef == sign * (EE - EO)
};

inline CoefficientIdentity coefficient_orientation_identity(const SimpleGraph& g, const Digraph& d) {
  if (!d.orients(g)) throw InputError("digraph does not orient the graph");
  CoefficientIdentity r;
  r.coefficient = poly_coefficient_expand(g, d.outdegrees());
  auto counts = eulerian_counts(d);
  r.ee = counts.ee;
  r.eo = counts.eo;
  r.sign = orientation_sign(d);
  BigInt diff = r.ee - r.eo;
  r.holds = boost::multiprecision::abs(r.coefficient) == boost::multiprecision::abs(diff);
  r.signed_holds = r.coefficient == r.sign * diff;
  return r;
}

// ---- constructions --------------------------------------------------------

struct JoinCertificate {
  int s = 0, t = 0;
  std::vector<int> clique_a;  // the designated (s+t)-clique
  ATCertificate cert;
};

// join(K_s, K_{2*t}) with f = s+t on an (s+t)-clique A and t on the rest.
// K_s occupies 0..s-1; pair i of K_{2*t} is (s+2i, s+2i+1) and A takes s+2i.
inline JoinCertificate k2t_join_certificate(int s, int t) {
  if (s < 0 || t < 1) throw InputError("need s >= 0 and t >= 1");
  SimpleGraph g = join(complete_graph(s), complete_multipartite_2t(t));
  std::vector<int> f(g.n(), t), a;
  for (int v = 0; v < s; ++v) a.push_back(v);
  for (int i = 0; i < t; ++i) a.push_back(s + 2 * i);
  for (int v : a) f[v] = s + t;
  auto cert = is_f_AT(g, ListSizeFn(f));
  if (!cert) throw HardFailure("no AT orientation for join(K_s, K_{2*t}); the clique-join lemma would be false");
  if (!verify_at_certificate(*cert).ok) throw HardFailure("join certificate failed verification");
  return JoinCertificate{s, t, a, *cert};
}

struct ComplementBipartiteResult {
  int omega = 0;
  int padding = 0;                       // vertices added to A
  std::vector<std::pair<int, int>> matching;  // (b, a) pairs in the complement, padded ids
  JoinCertificate join_cert;
  std::vector<int> embedding;            // padded vertex -> join vertex
  std::vector<int> restricted_exponents;
  ATCertificate cert;
};

// Complement of a bipartite graph with sides A and B (both cliques in g).
// Pads A to omega(g), matches B into A inside the complement, embeds into
// join(K_{|A|-|B|}, K_{2*|B|}) and walks the join's nonzero monomial down to g
// one deleted edge at a time: coef_G[k] = coef_{G-e}[k - e_i] - coef_{G-e}[k - e_j].
inline ComplementBipartiteResult complement_bipartite_at(const SimpleGraph& g, const std::vector<int>& part_a,
                                                         const ListSizeFn& f) {
  const int n = g.n();
  if (f.size() != n) throw InputError("list size function has wrong length");
  std::vector<char> in_a(n, 0);
  for (int v : part_a) {
    if (v < 0 || v >= n) throw InputError("part A vertex out of range");
    in_a[v] = 1;
  }
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (in_a[v] ? a : b).push_back(v);
  if (!g.is_clique(a) || !g.is_clique(b)) throw InputError("complement is not bipartite with the given parts");
  ComplementBipartiteResult r;
  r.omega = clique_number(g);
  for (int v : a)
    if (f[v] < r.omega) throw InputError("f(v) must be at least omega on A");
  for (int v : b)
    if (f[v] < static_cast<int>(b.size())) throw InputError("f(v) must be at least |B| on B");

  // Padded graph: new vertices n.. join A only.
  r.padding = r.omega - static_cast<int>(a.size());
  int np = n + r.padding;
  std::vector<Edge> pes = g.edges();
  std::vector<int> a_pad = a;
  for (int p = 0; p < r.padding; ++p) {
    for (int x : a_pad) pes.push_back(norm_edge(x, n + p));
    a_pad.push_back(n + p);
  }
  SimpleGraph gp(np, pes);

  // Hall matching in the complement saturating B.
  std::vector<int> mate_a(np, -1), mate_b(np, -1);
  for (int x : b) {
    std::vector<char> seen(np, 0);
    auto aug = [&](auto&& self, int bv) -> bool {
      for (int av : a_pad) {
        if (gp.adj(bv, av) || seen[av]) continue;
        seen[av] = 1;
        if (mate_a[av] < 0 || self(self, mate_a[av])) {
          mate_a[av] = bv;
          mate_b[bv] = av;
          return true;
        }
      }
      return false;
    };
    if (!aug(aug, x)) throw HardFailure("Hall condition violated in the complement matching");
  }
  for (int x : b) r.matching.emplace_back(x, mate_b[x]);

  int t = static_cast<int>(b.size());
  int s = r.omega - t;
  r.join_cert = k2t_join_certificate(s, t);
  // Embedding: unmatched A-side vertices fill K_s, matched pairs fill the 2-parts.
  r.embedding.assign(np, -1);
  int next_s = 0;
  for (int av : a_pad)
    if (mate_a[av] < 0) r.embedding[av] = next_s++;
  for (int i = 0; i < t; ++i) {
    int bv = b[i];
    r.embedding[mate_b[bv]] = s + 2 * i;
    r.embedding[bv] = s + 2 * i + 1;
  }
  const SimpleGraph& jg = r.join_cert.cert.graph;
  for (auto [u, v] : gp.edges())
    if (!jg.adj(r.embedding[u], r.embedding[v])) throw HardFailure("padded graph does not embed in the join");

  // Relabel the join into padded ids and delete the edges not in g.
  std::vector<int> inv(np);
  for (int v = 0; v < np; ++v) inv[r.embedding[v]] = v;
  std::vector<int> k(np);
  for (int v = 0; v < np; ++v) k[inv[v]] = r.join_cert.cert.exponents[v];
  std::vector<Edge> cur;
  for (auto [u, v] : jg.edges()) cur.push_back(norm_edge(inv[u], inv[v]));
  std::sort(cur.begin(), cur.end());
  for (std::size_t idx = 0; idx < cur.size();) {
    auto [u, v] = cur[idx];
    bool keep = u < n && v < n && g.adj(u, v);
    if (keep) {
      ++idx;
      continue;
    }
    cur.erase(cur.begin() + static_cast<long>(idx));
    SimpleGraph h(np, cur);
    auto ku = k, kv = k;
    --ku[u];
    --kv[v];
    if (ku[u] >= 0 && poly_coefficient_expand(h, ku) != 0)
      k = ku;
    else if (kv[v] >= 0 && poly_coefficient_expand(h, kv) != 0)
      k = kv;
    else
      throw HardFailure("edge deletion lost every nonzero monomial");
  }
  for (int p = n; p < np; ++p)
    if (k[p] != 0) throw HardFailure("padding vertex kept a positive exponent");
  k.resize(n);
  r.restricted_exponents = k;
  BigInt coef = poly_coefficient_expand(g, k);
  for (int v = 0; v < n; ++v)
    if (k[v] > f[v] - 1) throw HardFailure("restricted exponent exceeds f-1");
  r.cert = certificate_from_exponents(g, f, k, coef);
  return r;
}

// ---- catalog entries ------------------------------------------------------

struct EntryReport {
  std::string id;
  BigInt expected_ee, expected_eo, ee, eo;
  bool counts_match = false;
  bool f_bound = false;  // d+(v) <= f(v) - 1 with the entry's low set
  bool pass() const { return counts_match && f_bound && ee != eo; }
};

inline EntryReport verify_catalog_entry(const CatalogEntry& e) {
  if (e.kind == EntryKind::LineKP) throw InputError("entry " + e.id + " has no Eulerian counts");
  Digraph d = entry_digraph(e);
  if (!d.orients(e.graph)) throw InputError("arc list of " + e.id + " does not orient its graph");
  EntryReport r;
  r.id = e.id;
  r.expected_ee = e.ee;
  r.expected_eo = e.eo;
  auto c = eulerian_counts(d);
  r.ee = c.ee;
  r.eo = c.eo;
  r.counts_match = c.ee == e.ee && c.eo == e.eo;
  auto f = entry_f(e);
  r.f_bound = true;
  for (int v = 0; v < d.n(); ++v)
    if (d.outdeg(v) > f[v] - 1) r.f_bound = false;
  return r;
}

}  // namespace atkp
