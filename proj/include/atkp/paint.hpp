#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "atkp/graph.hpp"
#include "atkp/kernel.hpp"

namespace atkp {

struct GameRound {
  std::vector<int> listed, painted;
};

struct GameTranscript {
  std::vector<GameRound> rounds;
  bool painter_won = false;
};

struct GameOptions {
  int cap_vertices = 9;  // hard ceiling 12
  long long state_limit = 40'000'000;
  bool prune_free = true;  // drop vertices with more tokens than uncoloured neighbours
};

// Online list colouring (Lister/Painter). Tokens are the remaining list
// sizes; a listed vertex spends one. Painter colours an independent subset of
// the listed set; an uncoloured vertex without tokens loses the game.
class PaintSolver {
 public:
  PaintSolver(const SimpleGraph& g, const ListSizeFn& f, GameOptions opt = {}) : g_(g), f_(f), opt_(opt) {
    if (f.size() != g.n()) throw InputError("list size function has wrong length");
    if (g.n() > opt.cap_vertices || g.n() > 12)
      throw CapExceeded("paint solver: " + std::to_string(g.n()) + " vertices exceeds cap");
    for (int v = 0; v < g.n(); ++v)
      if (f[v] > 15) throw CapExceeded("paint solver: list sizes above 15 are not supported");
    for (int v = 0; v < g.n(); ++v) nb_[v] = g.nbr_mask(v);
  }

  bool painter_wins() {
    std::array<int, 12> t{};
    for (int v = 0; v < g_.n(); ++v) t[v] = f_[v];
    return wins(full_mask(g_.n()), t);
  }

  // Plays one line: the side with a winning strategy plays solver-checked
  // moves, the other side plays its first legal move in canonical order.
  GameTranscript transcript() {
    GameTranscript tr;
    std::array<int, 12> t{};
    for (int v = 0; v < g_.n(); ++v) t[v] = f_[v];
    Mask u = full_mask(g_.n());
    bool painter = wins(u, t);
    tr.painter_won = painter;
    while (u) {
      Mask chosen_l = 0, chosen_p = 0;
      if (painter) {
        // Lister's canonical move: list everything still uncoloured.
        chosen_l = u;
        auto t2 = t;
        for (int v : mask_to_vertices(chosen_l)) --t2[v];
        bool found = false;
        for_each_response(u, chosen_l, t, [&](Mask p) {
          if (found) return;
          if (alive(u & ~p, t2) && wins(u & ~p, t2)) {
            chosen_p = p;
            found = true;
          }
        });
        if (!found) throw HardFailure("winning Painter has no winning reply");
      } else {
        bool found = false;
        for (Mask l = 1; l <= u && !found; ++l) {
          if ((l & u) != l) continue;
          if (lister_move_wins(u, l, t)) {
            chosen_l = l;
            found = true;
          }
        }
        if (!found) throw HardFailure("winning Lister has no winning move");
        auto t2 = t;
        for (int v : mask_to_vertices(chosen_l)) --t2[v];
        Mask first = 0;
        bool any = false;
        for_each_response(u, chosen_l, t, [&](Mask p) {
          if (!any) first = p, any = true;
        });
        chosen_p = any ? first : 0;
        tr.rounds.push_back({mask_to_vertices(chosen_l), mask_to_vertices(chosen_p)});
        if (!any || !alive(u & ~chosen_p, t2)) return tr;
        t = t2;
        u &= ~chosen_p;
        continue;
      }
      tr.rounds.push_back({mask_to_vertices(chosen_l), mask_to_vertices(chosen_p)});
      for (int v : mask_to_vertices(chosen_l)) --t[v];
      u &= ~chosen_p;
    }
    return tr;
  }

  long long states() const { return static_cast<long long>(memo_.size()); }

 private:
  static std::uint64_t key(Mask u, const std::array<int, 12>& t) {
    std::uint64_t k = u;
    for (int v = 0; v < 12; ++v)
      if (u >> v & 1) k |= static_cast<std::uint64_t>(t[v]) << (12 + 4 * v);
    return k;
  }

  bool alive(Mask u, const std::array<int, 12>& t) const {
    for (Mask m = u; m; m &= m - 1)
      if (t[std::countr_zero(m)] <= 0) return false;
    return true;
  }

  // Painter replies: maximal independent subsets of l containing every listed
  // vertex that just spent its last token. Colouring more never hurts Painter.
  template <class F>
  void for_each_response(Mask u, Mask l, const std::array<int, 12>& t, F&& fn) const {
    (void)u;
    Mask forced = 0;
    for (Mask m = l; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (t[v] == 1) forced |= bit(v);
    }
    for (Mask m = forced; m; m &= m - 1)
      if (nb_[std::countr_zero(m)] & forced) return;  // no legal reply
    Mask blocked = 0;
    for (Mask m = forced; m; m &= m - 1) blocked |= nb_[std::countr_zero(m)];
    Mask cand = l & ~forced & ~blocked;
    // Enumerate maximal independent sets of cand (Bron–Kerbosch style, no pivot).
    auto rec = [&](auto&& self, Mask chosen, Mask p, Mask x) -> void {
      if (!p && !x) {
        fn(chosen | forced);
        return;
      }
      while (p) {
        int v = std::countr_zero(p);
        Mask nv = nb_[v] | bit(v);
        self(self, chosen | bit(v), p & ~nv, x & ~nv);
        p &= ~bit(v);
        x |= bit(v);
      }
    };
    rec(rec, 0, cand, 0);
  }

  bool lister_move_wins(Mask u, Mask l, const std::array<int, 12>& t) {
    auto t2 = t;
    for (Mask m = l; m; m &= m - 1) --t2[std::countr_zero(m)];
    bool painter_ok = false;
    for_each_response(u, l, t, [&](Mask p) {
      if (painter_ok) return;
      Mask rest = u & ~p;
      if (alive(rest, t2) && wins(rest, t2)) painter_ok = true;
    });
    return !painter_ok;
  }

  bool wins(Mask u, std::array<int, 12> t) {
    if (opt_.prune_free) {
      // A vertex with more tokens than uncoloured neighbours can always be
      // coloured last; dropping it repeatedly does not change the value.
      bool changed = true;
      while (changed) {
        changed = false;
        for (Mask m = u; m; m &= m - 1) {
          int v = std::countr_zero(m);
          if (t[v] > popcount(nb_[v] & u)) {
            u &= ~bit(v);
            changed = true;
          }
        }
      }
    }
    if (!u) return true;
    for (Mask m = u; m; m &= m - 1)
      if (t[std::countr_zero(m)] <= 0) return false;
    auto k = key(u, t);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    if (static_cast<long long>(memo_.size()) >= opt_.state_limit) throw CapExceeded("paint solver: state limit reached");
    bool result = true;
    for (Mask l = u; l; l = (l - 1) & u) {
      if (lister_move_wins(u, l, t)) {
        result = false;
        break;
      }
    }
    memo_.emplace(k, result);
    return result;
  }

  const SimpleGraph& g_;
  ListSizeFn f_;
  GameOptions opt_;
  std::array<Mask, 12> nb_{};
  std::unordered_map<std::uint64_t, bool> memo_;
};

struct PaintResult {
  bool paintable = false;
  GameTranscript witness;
  long long states = 0;
};

inline PaintResult is_f_paintable(const SimpleGraph& g, const ListSizeFn& f, GameOptions opt = {}) {
  PaintSolver s(g, f, opt);
  PaintResult r;
  r.paintable = s.painter_wins();
  r.witness = s.transcript();
  r.states = s.states();
  return r;
}

// ---- choosability ---------------------------------------------------------

struct ChooseOptions {
  int cap_vertices = 9;
  long long state_limit = 20'000'000;
};

struct ChooseResult {
  bool choosable = false;
  std::vector<std::vector<int>> failing_lists;  // when not choosable
  long long states = 0;
};

// The adversary builds lists one colour at a time: colour c is a vertex class
// C_c, and every vertex lies in exactly f(v) classes. The colourer's options
// are summarised by R, the down-closed family of vertex sets that can already
// be coloured; colour c extends S in R by any independent subset of C_c \ S.
// Lists exist that defeat the colourer iff some sequence of classes ends with
// V outside R. Classes are order-free, so memoising on (R, remaining) is exact.
// Colours in no list are irrelevant, so there are at most sum(f) classes.
class ChooseSolver {
 public:
  ChooseSolver(const SimpleGraph& g, const ListSizeFn& f, ChooseOptions opt) : g_(g), f_(f), opt_(opt) {
    if (f.size() != g.n()) throw InputError("list size function has wrong length");
    if (g.n() > opt.cap_vertices || g.n() > 9)
      throw CapExceeded("choosability solver: " + std::to_string(g.n()) + " vertices exceeds cap");
    for (int v = 0; v < g.n(); ++v)
      if (f[v] > 15) throw CapExceeded("choosability solver: list sizes above 15 are not supported");
    n_ = g.n();
    full_ = full_mask(n_);
    for (Mask s = 0; s <= full_; ++s) indep_.push_back(g.is_independent(mask_to_vertices(s)));
    disjoint_.resize(full_ + 1);
    for (Mask i = 0; i <= full_; ++i)
      for (Mask s = 0; s <= full_; ++s)
        if (!(s & i)) disjoint_[i].set(s);
  }

  ChooseResult solve() {
    ChooseResult r;
    Family start{};
    start.set(0);
    std::array<int, 9> cnt{};
    for (int v = 0; v < n_; ++v) cnt[v] = f_[v];
    std::vector<Mask> seq;
    bool adv = adversary_wins(start, cnt, &seq);
    r.choosable = !adv;
    if (adv) {
      r.failing_lists.assign(n_, {});
      for (std::size_t c = 0; c < seq.size(); ++c)
        for (int v : mask_to_vertices(seq[c])) r.failing_lists[v].push_back(static_cast<int>(c));
    }
    r.states = static_cast<long long>(memo_.size());
    return r;
  }

 private:
  struct Family {
    std::array<std::uint64_t, 8> w{};
    void set(Mask s) { w[s >> 6] |= std::uint64_t{1} << (s & 63); }
    bool test(Mask s) const { return w[s >> 6] >> (s & 63) & 1; }
    bool operator==(const Family&) const = default;
  };
  struct Key {
    Family r;
    std::uint64_t counts;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.counts * 0x9E3779B97F4A7C15ULL;
      for (auto x : k.r.w) h = (h ^ x) * 0x100000001B3ULL;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  // For S disjoint from I, S | I == S + I, so adding I to every member of R
  // that misses it is a mask-and-shift of the family bitset.
  static Family shifted(const Family& r, const Family& keep, Mask by) {
    Family out{};
    int words = static_cast<int>(by >> 6), bits = static_cast<int>(by & 63);
    for (int i = 7; i >= words; --i) {
      std::uint64_t lo = r.w[i - words] & keep.w[i - words];
      std::uint64_t v = lo << bits;
      if (bits && i - words - 1 >= 0) v |= (r.w[i - words - 1] & keep.w[i - words - 1]) >> (64 - bits);
      out.w[i] = v;
    }
    return out;
  }

  Family extend(const Family& r, Mask cls) const {
    Family out = r;
    for (Mask i = cls; i; i = (i - 1) & cls) {
      if (!indep_[i]) continue;
      Family add = shifted(r, disjoint_[i], i);
      for (int k = 0; k < 8; ++k) out.w[k] |= add.w[k];
    }
    return out;
  }

  bool adversary_wins(const Family& r, std::array<int, 9>& cnt, std::vector<Mask>* seq) {
    if (r.test(full_)) return false;
    Mask live = 0;
    for (int v = 0; v < n_; ++v)
      if (cnt[v] > 0) live |= bit(v);
    if (!live) return true;
    Key k{r, 0};
    for (int v = 0; v < n_; ++v) k.counts |= static_cast<std::uint64_t>(cnt[v]) << (4 * v);
    if (!seq) {
      if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    }
    if (static_cast<long long>(memo_.size()) >= opt_.state_limit) throw CapExceeded("choosability solver: state limit reached");
    bool result = false;
    // Classes must keep the lowest live vertex's count in step: choosing the
    // class containing it first loses nothing, since class order is free.
    int low = std::countr_zero(live);
    Mask rest = live & ~bit(low);
    for (Mask s = rest;; s = (s - 1) & rest) {
      Mask cls = s | bit(low);
      for (int v : mask_to_vertices(cls)) --cnt[v];
      Family nr = extend(r, cls);
      bool w = adversary_wins(nr, cnt, nullptr);
      if (w && seq) {
        seq->push_back(cls);
        adversary_wins(nr, cnt, seq);
      }
      for (int v : mask_to_vertices(cls)) ++cnt[v];
      if (w) {
        result = true;
        break;
      }
      if (!s) break;
    }
    memo_[k] = result;
    return result;
  }

  const SimpleGraph& g_;
  ListSizeFn f_;
  ChooseOptions opt_;
  int n_ = 0;
  Mask full_ = 0;
  std::vector<char> indep_;
  std::vector<Family> disjoint_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

inline ChooseResult is_f_choosable(const SimpleGraph& g, const ListSizeFn& f, ChooseOptions opt = {}) {
  ChooseSolver s(g, f, opt);
  return s.solve();
}

struct ImplicationReport {
  bool paintable = false, choosable = false;
  bool holds = false;  // paintable => choosable
};

inline ImplicationReport paintable_implies_choosable_check(const SimpleGraph& g, const ListSizeFn& f) {
  ImplicationReport r;
  r.paintable = is_f_paintable(g, f).paintable;
  r.choosable = is_f_choosable(g, f).choosable;
  r.holds = !r.paintable || r.choosable;
  return r;
}

// ---- kernel strategy ------------------------------------------------------

struct KernelPlayResult {
  bool painter_always_won = true;
  long long games = 0;       // complete lines (exhaustive) or sampled games
  long long states = 0;      // distinct positions visited (exhaustive)
  GameTranscript example;    // first line played, or a losing line if any
};

// Adversary: "exhaustive" walks every Lister move at every position,
// "random:<seed>" samples `games` games with listed sets drawn from raw
// mt19937_64 output.
inline KernelPlayResult kernel_painter_play(const SimpleGraph& g, const ListSizeFn& f, const KPCertificate& cert,
                                            const std::string& adversary, long long games = 1000) {
  const int n = g.n();
  if (n > 20) throw CapExceeded("kernel_painter_play: more than 20 vertices");
  if (cert.digraph.n() != n || f.size() != n) throw InputError("certificate does not match the graph");
  for (auto [u, v] : g.edges())
    if (!cert.digraph.has_arc(u, v) && !cert.digraph.has_arc(v, u))
      throw InputError("certificate digraph does not cover the graph");
  auto painter_move = [&](Mask listed) {
    auto k = find_kernel(cert.digraph, mask_to_vertices(listed));
    if (!k) throw HardFailure("listed set has no kernel in the certificate digraph");
    return vertices_to_mask(*k);
  };
  KernelPlayResult res;
  std::vector<int> t0(f.values());

  if (adversary == "exhaustive") {
    if (n > 8) throw CapExceeded("exhaustive adversary limited to 8 vertices");
    std::map<std::pair<Mask, std::vector<int>>, bool> seen;
    GameTranscript line;
    bool first_done = false;
    auto rec = [&](auto&& self, Mask u, std::vector<int>& t) -> bool {
      if (!u) {
        ++res.games;
        if (!first_done) {
          res.example = line;
          res.example.painter_won = true;
          first_done = true;
        }
        return true;
      }
      auto key = std::make_pair(u, t);
      if (auto it = seen.find(key); it != seen.end()) {
        ++res.games;
        return it->second;
      }
      bool all = true;
      for (Mask l = u; l; l = (l - 1) & u) {
        Mask k = painter_move(l);
        std::vector<int> t2 = t;
        for (int v : mask_to_vertices(l)) --t2[v];
        Mask rest = u & ~k;
        bool dead = false;
        for (int v : mask_to_vertices(rest))
          if (t2[v] <= 0) dead = true;
        line.rounds.push_back({mask_to_vertices(l), mask_to_vertices(k)});
        bool ok = !dead && self(self, rest, t2);
        if (dead) {
          ++res.games;
          res.example = line;
          res.example.painter_won = false;
        }
        line.rounds.pop_back();
        if (!ok) {
          all = false;
          break;
        }
      }
      seen[key] = all;
      return all;
    };
    res.painter_always_won = rec(rec, full_mask(n), t0);
    res.states = static_cast<long long>(seen.size());
    return res;
  }

  if (adversary.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(adversary.substr(7));
    } catch (const std::exception&) {
      throw InputError("bad adversary seed in '" + adversary + "'");
    }
    std::mt19937_64 rng(seed);
    for (long long gi = 0; gi < games; ++gi) {
      GameTranscript tr;
      Mask u = full_mask(n);
      std::vector<int> t = t0;
      bool won = true;
      while (u) {
        Mask l = 0;
        while (!l) l = rng() & u;
        Mask k = painter_move(l);
        for (int v : mask_to_vertices(l)) --t[v];
        tr.rounds.push_back({mask_to_vertices(l), mask_to_vertices(k)});
        u &= ~k;
        for (int v : mask_to_vertices(u))
          if (t[v] <= 0) won = false;
        if (!won) break;
      }
      tr.painter_won = won;
      ++res.games;
      if (gi == 0 || (!won && res.painter_always_won)) res.example = tr;
      if (!won) res.painter_always_won = false;
    }
    return res;
  }
  throw InputError("unknown adversary '" + adversary + "' (use exhaustive or random:<seed>)");
}

}  // namespace atkp
