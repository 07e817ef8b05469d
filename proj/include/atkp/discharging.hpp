#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atkp/graph.hpp"
#include "atkp/kernel.hpp"

namespace atkp {

// ---- max-cut partition ----------------------------------------------------

struct CutPartition {
  std::vector<int> a, b;
  int cut = 0;           // ||A, B|| with multiplicity
  long long mu_sq = 0;   // sum of mu(xy)^2 over crossing pairs
  bool exhaustive = false;
};

namespace detail {
inline std::pair<int, long long> cut_value(const MultiGraph& h, const std::vector<char>& in_a) {
  int cut = 0;
  long long sq = 0;
  for (auto& e : h.edges())
    if (in_a[e.u] != in_a[e.v]) {
      cut += e.mult;
      sq += static_cast<long long>(e.mult) * e.mult;
    }
  return {cut, sq};
}
// Larger cut first, then smaller sum of squares.
inline bool cut_better(std::pair<int, long long> x, std::pair<int, long long> y) {
  return x.first != y.first ? x.first > y.first : x.second < y.second;
}
}  // namespace detail

inline CutPartition maxcut_partition(const MultiGraph& h, int exhaustive_cap = 16) {
  const int n = h.n();
  std::vector<char> best(n, 0);
  bool exhaustive = n <= exhaustive_cap;
  if (n == 0) return {};
  if (exhaustive) {
    // Vertex 0 stays in A; masks in increasing order so ties keep the first.
    std::pair<int, long long> bv{-1, 0};
    std::vector<char> in_a(n);
    for (Mask s = 0; s < (Mask{1} << (n - 1)); ++s) {
      in_a[0] = 1;
      for (int v = 1; v < n; ++v) in_a[v] = !(s >> (v - 1) & 1);
      auto val = detail::cut_value(h, in_a);
      if (bv.first < 0 || detail::cut_better(val, bv)) {
        bv = val;
        best = in_a;
      }
    }
  } else {
    // Single-vertex moves until no move improves the lexicographic objective.
    for (int v = 0; v < n; ++v) best[v] = v % 2 == 0;
    auto cur = detail::cut_value(h, best);
    bool moved = true;
    while (moved) {
      moved = false;
      for (int v = 0; v < n; ++v) {
        best[v] = !best[v];
        auto val = detail::cut_value(h, best);
        if (detail::cut_better(val, cur)) {
          cur = val;
          moved = true;
        } else {
          best[v] = !best[v];
        }
      }
    }
  }
  CutPartition p;
  for (int v = 0; v < n; ++v) (best[v] ? p.a : p.b).push_back(v);
  auto val = detail::cut_value(h, best);
  p.cut = val.first;
  p.mu_sq = val.second;
  p.exhaustive = exhaustive;
  return p;
}

// ---- degeneracy -----------------------------------------------------------

struct Degeneracy {
  int k = 0;
  std::vector<int> order;  // deletion order, each vertex of degree <= k when removed
};

inline Degeneracy degeneracy(const MultiGraph& h) {
  const int n = h.n();
  std::vector<int> deg(n);
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (auto& e : h.edges()) {
    adj[e.u].push_back({e.v, e.mult});
    adj[e.v].push_back({e.u, e.mult});
  }
  for (int v = 0; v < n; ++v) deg[v] = h.degree(v);
  std::vector<char> gone(n, 0);
  Degeneracy d;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    d.k = std::max(d.k, deg[best]);
    d.order.push_back(best);
    gone[best] = 1;
    for (auto [w, m] : adj[best])
      if (!gone[w]) deg[w] -= m;
  }
  return d;
}

// ---- peeling and discharging ----------------------------------------------

struct Transfer {
  int donor, recipient, amount;
};

struct ChargeRound {
  int index;
  std::vector<Transfer> transfers;
};

struct ChargeLedger {
  std::vector<int> initial;
  std::vector<ChargeRound> rounds;
  std::vector<int> final_charge;
};

struct BipartiteWitness {
  MultiGraph b;             // on the vertex set of h; only witness edges present
  std::vector<int> low_side, donor_side;
  int round = 0;
};

struct WitnessCheck {
  bool ok = true;
  std::string reason;
};

// Every edge xy of B: B is bipartite and the endpoint of smaller B-degree keeps
// all of its edges from h.
inline WitnessCheck check_witness(const MultiGraph& h, const MultiGraph& b) {
  if (b.n() != h.n()) return {false, "vertex sets differ"};
  if (b.edge_count() == 0) return {false, "witness has no edges"};
  for (auto& e : b.edges())
    if (e.mult > h.mult(e.u, e.v)) return {false, "witness edge not in h"};
  if (!is_bipartite(b.support())) return {false, "witness is not bipartite"};
  for (auto& e : b.edges()) {
    int x = e.u, y = e.v;
    if (b.degree(x) > b.degree(y)) std::swap(x, y);
    bool ok = b.degree(x) == h.degree(x);
    // On equal B-degrees either endpoint may be the full one.
    if (!ok && b.degree(x) == b.degree(y)) ok = b.degree(y) == h.degree(y);
    if (!ok)
      return {false, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": smaller endpoint misses an edge of h"};
  }
  return {};
}

struct PeelResult {
  std::vector<Transfer> transfers;
  std::optional<BipartiteWitness> witness;
};

// Round i: V_i = vertices of degree 1..i (isolated vertices have no edge in
// the line graph and take no part), B_i = all edges touching V_i. A
// donor outside V_i with current B-degree in [1, i) gives 1 to each B-neighbour;
// the donor and its neighbours leave B. Donor choice: smallest current
// B-degree, then smallest id. Stalling with recipients left returns B.
inline PeelResult peel_witness(const MultiGraph& h, int i) {
  if (i < 2 || i > 11) throw InputError("round index must be in 2..11");
  const int n = h.n();
  std::vector<char> low(n, 0), alive(n, 0);
  for (int v = 0; v < n; ++v) low[v] = h.degree(v) >= 1 && h.degree(v) <= i;
  std::vector<MultiEdge> es;
  for (auto& e : h.edges())
    if (low[e.u] || low[e.v]) es.push_back(e);
  for (int v = 0; v < n; ++v) alive[v] = low[v];
  for (auto& e : es) alive[e.u] = alive[e.v] = 1;
  PeelResult r;
  auto bdeg = [&](int v) {
    int d = 0;
    for (auto& e : es)
      if (alive[e.u] && alive[e.v] && (e.u == v || e.v == v)) d += e.mult;
    return d;
  };
  while (true) {
    bool recipients = false;
    for (int v = 0; v < n; ++v)
      if (alive[v] && low[v]) recipients = true;
    if (!recipients) return r;
    int donor = -1, dd = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || low[v]) continue;
      int d = bdeg(v);
      if (d >= 1 && d < i && (donor < 0 || d < dd)) donor = v, dd = d;
    }
    if (donor < 0) {
      BipartiteWitness w;
      std::vector<MultiEdge> left;
      for (auto& e : es)
        if (alive[e.u] && alive[e.v]) left.push_back(e);
      w.b = MultiGraph(n, left);
      for (int v = 0; v < n; ++v)
        if (alive[v] && w.b.degree(v) > 0) (low[v] ? w.low_side : w.donor_side).push_back(v);
      w.round = i;
      r.witness = std::move(w);
      return r;
    }
    std::vector<int> nb;
    for (auto& e : es) {
      if (!alive[e.u] || !alive[e.v]) continue;
      if (e.u == donor) nb.push_back(e.v);
      if (e.v == donor) nb.push_back(e.u);
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (int u : nb) r.transfers.push_back({donor, u, 1});
    alive[donor] = 0;
    for (int u : nb) alive[u] = 0;
  }
}

struct DischargeResult {
  std::optional<ChargeLedger> ledger;
  std::optional<BipartiteWitness> witness;
  bool edge_sum_condition = false;  // d(u) + d(v) >= Delta(h) + 2 on every edge
};

inline bool edge_sum_condition(const MultiGraph& h) {
  int dmax = h.max_degree();
  for (auto& e : h.edges())
    if (h.degree(e.u) + h.degree(e.v) < dmax + 2) return false;
  return true;
}

inline DischargeResult discharge(const MultiGraph& h) {
  DischargeResult res;
  res.edge_sum_condition = edge_sum_condition(h);
  ChargeLedger led;
  for (int v = 0; v < h.n(); ++v) led.initial.push_back(h.degree(v));
  led.final_charge = led.initial;
  for (int i = 2; i <= 11; ++i) {
    auto p = peel_witness(h, i);
    if (p.witness) {
      res.witness = std::move(p.witness);
      return res;
    }
    for (auto& t : p.transfers) {
      led.final_charge[t.donor] -= t.amount;
      led.final_charge[t.recipient] += t.amount;
    }
    led.rounds.push_back({i, std::move(p.transfers)});
  }
  res.ledger = std::move(led);
  return res;
}

// ---- witness to kernel-perfect certificate --------------------------------

struct WitnessKP {
  KPCertificate cert;
  std::vector<EdgeCopy> origin;
  std::vector<int> bound;  // max(d_B(x), d_B(y)) per line vertex
  KPVerification verification;
};

// L(B) with f(v) = d_D(v) - 1 + delta - d_G(v), where d_G is the degree of the
// edge xy in the line graph of h. Galvin's orientation has out-degree below
// max(d_B(x), d_B(y)), so f >= that maximum makes it an f-KP certificate.
inline WitnessKP witness_to_kp(const MultiGraph& h, const BipartiteWitness& w, int delta) {
  if (h.max_degree() >= delta) throw InputError("need max degree of h below delta");
  auto chk = check_witness(h, w.b);
  if (!chk.ok) throw InputError("invalid witness: " + chk.reason);
  auto gal = galvin_orientation(w.b);
  WitnessKP out;
  out.origin = gal.origin;
  auto& d = gal.cert.graph;
  std::vector<int> f(d.n());
  for (int v = 0; v < d.n(); ++v) {
    auto o = gal.origin[v];
    int dg = h.degree(o.u) + h.degree(o.v) - h.mult(o.u, o.v) - 1;
    f[v] = d.degree(v) - 1 + delta - dg;
    int bound = std::max(w.b.degree(o.u), w.b.degree(o.v));
    out.bound.push_back(bound);
    if (f[v] < bound)
      throw InputError("list size " + std::to_string(f[v]) + " below bound " + std::to_string(bound) + " at line vertex " +
                       std::to_string(v));
  }
  out.cert = gal.cert;
  out.cert.f = ListSizeFn(f);
  out.cert.method = "galvin";
  auto root = expand_copies(w.b);
  out.verification = verify_kp_certificate(out.cert, &root, w.b.n());
  if (!out.verification.ok) throw HardFailure("witness certificate fails verification: " + out.verification.reason);
  return out;
}

}  // namespace atkp
