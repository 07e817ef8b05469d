#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atkp/graph.hpp"

namespace atkp {

enum class EntryKind { AT, TwoJoin, LineKP };

inline const char* kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::AT: return "at";
    case EntryKind::TwoJoin: return "2join";
    case EntryKind::LineKP: return "line-kp";
  }
  return "?";
}

// AT entries: graph is the support of the drawn arcs, labels are the printed
// integers (they coincide with in-degrees of the drawn orientation), low is
// the set of vertices with f = d; everything else has f = d - 1.
//
// Line-KP entries: vertex i of graph is named edge i of the root multigraph,
// arcs follow every linear order transitively (a before b gives a -> b) and
// pairs ordered both ways become bidirected.
struct CatalogEntry {
  std::string id;
  EntryKind kind = EntryKind::AT;
  SimpleGraph graph;
  std::vector<int> labels;
  std::vector<int> low;
  std::vector<Arc> arcs;
  long long ee = 0, eo = 0;

  int root_n = 0;
  std::vector<Edge> root_edges;
  std::vector<std::string> edge_names;
  std::vector<std::vector<int>> orders;
  std::vector<int> dg_row, dplus_row;
};

namespace detail {

inline CatalogEntry at_entry(std::string id, EntryKind kind, int n, std::vector<Arc> arcs, std::vector<int> low,
                             std::vector<int> labels, long long ee, long long eo) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = kind;
  e.arcs = std::move(arcs);
  e.graph = Digraph(n, e.arcs).support();
  e.low = std::move(low);
  e.labels = std::move(labels);
  e.ee = ee;
  e.eo = eo;
  return e;
}

inline std::vector<Arc> arcs_from_orders(int n, const std::vector<std::vector<int>>& orders) {
  std::vector<Arc> arcs;
  for (auto& ord : orders)
    for (std::size_t i = 0; i < ord.size(); ++i)
      for (std::size_t j = i + 1; j < ord.size(); ++j) {
        if (ord[i] < 0 || ord[i] >= n || ord[j] < 0 || ord[j] >= n) throw InputError("order vertex out of range");
        arcs.emplace_back(ord[i], ord[j]);
      }
  return arcs;
}

inline CatalogEntry line_entry(std::string id, int root_n, std::vector<Edge> root_edges, std::vector<std::string> names,
                               std::vector<std::vector<int>> orders, std::vector<int> low, std::vector<int> dg,
                               std::vector<int> dplus) {
  CatalogEntry e;
  e.id = std::move(id);
  e.kind = EntryKind::LineKP;
  e.root_n = root_n;
  e.root_edges = std::move(root_edges);
  e.edge_names = std::move(names);
  e.orders = std::move(orders);
  e.graph = line_graph_of_edge_list(root_n, e.root_edges);
  e.arcs = arcs_from_orders(e.graph.n(), e.orders);
  e.low = std::move(low);
  e.dg_row = std::move(dg);
  e.dplus_row = std::move(dplus);
  return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  using detail::at_entry;
  using detail::line_entry;
  constexpr auto AT = EntryKind::AT;
  constexpr auto TJ = EntryKind::TwoJoin;
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> c;
    c.push_back(at_entry("1a", AT, 4, {{2, 0}, {1, 2}, {0, 3}, {3, 1}, {1, 0}}, {1, 2, 3}, {2, 1, 1, 1}, 2, 1));
    c.push_back(at_entry("1b", AT, 5, {{2, 0}, {2, 1}, {0, 3}, {3, 1}, {1, 0}, {0, 4}, {4, 1}, {4, 2}, {4, 3}}, {2, 4},
                         {2, 3, 1, 2, 1}, 4, 3));
    c.push_back(at_entry("1c", AT, 7,
                         {{3, 1}, {3, 2}, {1, 0}, {2, 0}, {2, 1}, {4, 3}, {5, 6}, {0, 6}, {1, 6}, {6, 2}, {3, 6}, {6, 4},
                          {0, 5}, {1, 5}, {5, 2}, {5, 3}, {5, 4}},
                         {}, {2, 2, 3, 2, 2, 2, 4}, 81, 80));
    c.push_back(at_entry("1d", AT, 6,
                         {{0, 4}, {4, 1}, {4, 2}, {3, 4}, {0, 5}, {5, 1}, {5, 2}, {3, 5}, {0, 3}, {3, 1}, {3, 2}, {2, 0},
                          {1, 2}, {1, 0}},
                         {3}, {2, 3, 4, 1, 2, 2}, 16, 17));
    c.push_back(at_entry("1e", AT, 8,
                         {{1, 0}, {2, 0}, {2, 1}, {0, 3}, {3, 1}, {3, 2}, {0, 4}, {1, 4}, {4, 2}, {0, 5}, {5, 1}, {5, 2},
                          {0, 6}, {1, 6}, {6, 2}, {1, 7}, {7, 2}, {0, 7}, {7, 3}, {4, 7}, {7, 5}, {6, 7}},
                         {}, {2, 3, 5, 2, 2, 2, 2, 4}, 512, 515));
    c.push_back(at_entry("1f", AT, 8,
                         {{1, 0}, {2, 0}, {2, 1}, {0, 3}, {3, 1}, {3, 2}, {0, 4}, {1, 4}, {4, 2}, {0, 5}, {5, 1}, {2, 5},
                          {0, 6}, {1, 6}, {6, 2}, {1, 7}, {7, 2}, {0, 7}, {7, 3}, {4, 7}, {5, 7}, {6, 7}, {3, 4}},
                         {}, {2, 3, 4, 2, 3, 2, 2, 5}, 751, 750));
    c.push_back(at_entry("1g", AT, 8,
                         {{1, 0}, {2, 0}, {2, 1}, {0, 3}, {3, 1}, {3, 2}, {0, 4}, {4, 1}, {2, 4}, {0, 5}, {1, 5}, {5, 2},
                          {0, 6}, {1, 6}, {6, 2}, {1, 7}, {7, 2}, {0, 7}, {7, 3}, {4, 7}, {5, 7}, {6, 7}, {4, 3}, {5, 6}},
                         {}, {2, 3, 4, 3, 2, 2, 3, 5}, 1097, 1096));
    c.push_back(at_entry("1h", AT, 7,
                         {{1, 0}, {2, 0}, {2, 1}, {4, 5}, {5, 6}, {0, 3}, {3, 1}, {3, 2}, {0, 4}, {1, 4}, {4, 2}, {0, 5},
                          {5, 1}, {5, 2}, {0, 6}, {1, 6}, {6, 2}, {4, 3}},
                         {}, {2, 3, 4, 2, 2, 2, 3}, 108, 107));
    c.push_back(at_entry("1i", AT, 6,
                         {{2, 0}, {2, 1}, {0, 3}, {3, 1}, {1, 0}, {4, 5}, {5, 3}, {4, 2}, {3, 2}, {0, 4}, {1, 4}, {0, 5},
                          {5, 1}},
                         {}, {2, 3, 2, 2, 2, 2}, 30, 28));
    c.push_back(at_entry("2a", AT, 7,
                         {{1, 0}, {1, 2}, {3, 1}, {2, 0}, {0, 3}, {3, 2}, {0, 4}, {4, 2}, {5, 1}, {5, 3}, {4, 5}, {1, 6},
                          {6, 3}, {5, 6}},
                         {4, 5}, {2, 2, 3, 3, 1, 1, 2}, 14, 12));
    c.push_back(at_entry("2b", AT, 5, {{1, 0}, {2, 0}, {3, 2}, {3, 1}, {0, 4}, {4, 1}, {2, 4}, {4, 3}}, {2, 3},
                         {2, 2, 1, 1, 2}, 4, 2));
    c.push_back(at_entry("2c", AT, 5, {{1, 0}, {2, 1}, {3, 2}, {2, 4}, {3, 4}, {4, 1}, {0, 3}}, {0, 2, 3},
                         {1, 2, 1, 1, 2}, 3, 1));
    c.push_back(at_entry("2d", AT, 6,
                         {{1, 0}, {2, 0}, {2, 1}, {3, 1}, {0, 4}, {4, 2}, {1, 4}, {3, 2}, {0, 3}, {0, 5}, {5, 2}, {4, 5}},
                         {3}, {2, 2, 3, 1, 2, 2}, 14, 15));
    c.push_back(at_entry("2e", AT, 6,
                         {{1, 0}, {2, 0}, {3, 2}, {3, 1}, {0, 4}, {2, 4}, {4, 1}, {5, 2}, {0, 5}, {1, 5}, {5, 3}, {5, 4}},
                         {3}, {2, 2, 2, 1, 3, 2}, 13, 11));
    c.push_back(at_entry("2f", AT, 6,
                         {{0, 2}, {0, 4}, {0, 5}, {1, 0}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {4, 3}, {4, 5}, {5, 1}},
                         {0, 2}, {1, 2, 1, 2, 2, 5}, 5, 3));
    c.push_back(at_entry("2g", AT, 6,
                         {{2, 0}, {1, 2}, {0, 3}, {1, 3}, {5, 4}, {3, 5}, {2, 4}, {3, 2}, {4, 0}, {4, 1}, {0, 5}, {5, 1}},
                         {}, {2, 2, 2, 2, 2, 2}, 22, 16));
    c.push_back(at_entry("2h", AT, 8,
                         {{0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 0}, {2, 0}, {2, 3}, {2, 6}, {2, 7}, {3, 1}, {4, 1}, {4, 2},
                          {4, 3}, {4, 6}, {5, 2}, {5, 4}, {6, 5}, {7, 5}, {7, 6}},
                         {}, {2, 2, 2, 2, 2, 3, 4, 2}, 72, 74));
    c.push_back(at_entry("4a", TJ, 6,
                         {{2, 0}, {0, 3}, {1, 2}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 1}, {5, 4}, {1, 0}, {3, 2}},
                         {3, 5}, {2, 3, 2, 1, 2, 1}, 8, 9));
    c.push_back(at_entry("4b", TJ, 6,
                         {{0, 3}, {0, 4}, {0, 5}, {1, 0}, {2, 1}, {2, 0}, {3, 1}, {3, 2}, {4, 1}, {1, 5}, {5, 4}, {4, 2}},
                         {3}, {2, 3, 2, 1, 2, 2}, 14, 15));

    // Triple edges become three named copies; w joins the two triple edges.
    // Names: u1 u2 v1 v2 v3 w x1 x2 x3 y1 y2.
    c.push_back(line_entry("3a", 6, {{0, 4}, {0, 4}, {0, 1}, {0, 1}, {0, 1}, {1, 3}, {1, 2}, {1, 2}, {1, 2}, {2, 5}, {2, 5}},
                           {"u1", "u2", "v1", "v2", "v3", "w", "x1", "x2", "x3", "y1", "y2"},
                           {{2, 3, 0, 1, 4}, {6, 7, 9, 10, 8}, {4, 8, 5, 2, 3, 6, 7}}, {},
                           {4, 4, 8, 8, 8, 6, 8, 8, 8, 4, 4}, {2, 1, 6, 5, 6, 4, 4, 3, 5, 2, 1}));
    // Same configuration without w; the six triple-edge copies keep f = d.
    c.push_back(line_entry("3b", 6, {{0, 4}, {0, 4}, {0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}, {2, 5}, {2, 5}},
                           {"u1", "u2", "v1", "v2", "v3", "x1", "x2", "x3", "y1", "y2"},
                           {{2, 3, 0, 1, 4}, {5, 6, 8, 9, 7}, {4, 7, 2, 3, 5, 6}}, {2, 3, 4, 5, 6, 7},
                           {4, 4, 7, 7, 7, 7, 7, 7, 4, 4}, {2, 1, 6, 5, 5, 4, 3, 4, 2, 1}));
    // Names: u v1 v2 v3 w x1 x2 y.
    c.push_back(line_entry("3c", 5, {{0, 3}, {0, 1}, {0, 1}, {0, 1}, {0, 4}, {1, 2}, {1, 2}, {4, 2}},
                           {"u", "v1", "v2", "v3", "w", "x1", "x2", "y"},
                           {{3, 4, 0, 1, 2}, {1, 2, 5, 6, 3}, {5, 6, 7}, {7, 4}}, {}, {4, 6, 6, 6, 5, 5, 5, 3},
                           {2, 4, 3, 4, 3, 3, 2, 1}));
    return c;
  }();
  return entries;
}

inline std::optional<CatalogEntry> catalog_entry(const std::string& id) {
  for (auto& e : catalog())
    if (e.id == id) return e;
  return std::nullopt;
}

// f used when checking an entry: d on low vertices, d - 1 elsewhere.
inline ListSizeFn entry_f(const CatalogEntry& e) { return ListSizeFn::d1(e.graph, e.low); }

inline Digraph entry_digraph(const CatalogEntry& e) { return Digraph(e.graph.n(), e.arcs); }

}  // namespace atkp
