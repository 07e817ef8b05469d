#include "atkp/structure.hpp"
#include "cli/cli.hpp"

namespace atkp::cli {

namespace {

using GraphQuery = std::function<Item(const SimpleGraph&, const Options&)>;

// "structure <name> <graph>" commands share their plumbing.
void add_graph_query(CLI::App* parent, Action& action, const std::string& name, const std::string& help,
                     GraphQuery query) {
  auto* sub = parent->add_subcommand(name, help);
  auto path = std::make_shared<std::string>();
  sub->add_option("graph", *path)->required();
  sub->callback([&action, path, name, query] {
    action = [path, name, query](const Options& opt) {
      RunReport rep;
      rep.command = "structure " + name;
      auto g = parse_any_graph(rep.read_input(*path));
      Item it = query(g, opt);
      it.name = *path;
      rep.results.push_back(it);
      return rep;
    };
  });
}

TwoJoin two_join_from_json(const json& j) {
  for (const char* k : {"h", "a1", "a2", "b1", "b2"})
    if (!j.is_object() || !j.contains(k)) throw InputError(std::string("2-join JSON needs '") + k + "'");
  return {json_int_list(j["h"], "h"), json_int_list(j["a1"], "a1"), json_int_list(j["a2"], "a2"),
          json_int_list(j["b1"], "b1"), json_int_list(j["b2"], "b2")};
}

json two_join_json(const TwoJoin& t) {
  return {{"h", t.h}, {"a1", t.a1}, {"a2", t.a2}, {"b1", t.b1}, {"b2", t.b2}};
}

CompositionSpec composition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("hub_n") || !j.contains("hub_edges") || !j.contains("strips"))
    throw InputError("composition JSON needs 'hub_n', 'hub_edges' and 'strips'");
  CompositionSpec s;
  s.hub_n = json_int(j["hub_n"], "hub_n");
  for (auto& e : j["hub_edges"]) {
    auto uv = json_int_list(e, "hub edge");
    if (uv.size() != 2) throw InputError("each hub edge must be [u, v]");
    s.hub_edges.emplace_back(uv[0], uv[1]);
  }
  for (auto& st : j["strips"]) {
    if (!st.is_object() || !st.contains("graph") || !st.contains("x") || !st.contains("y"))
      throw InputError("each strip needs 'graph', 'x' and 'y'");
    s.strips.push_back({simple_from_json(st["graph"]), json_int_list(st["x"], "x"), json_int_list(st["y"], "y")});
  }
  return s;
}

}  // namespace

void add_structure_commands(CLI::App& app, Action& action) {
  auto* st = app.add_subcommand("structure", "claw-free structure: recognition, strips, 2-joins, BK-free scans");
  st->require_subcommand(1);

  add_graph_query(st, action, "clawfree", "test for an induced claw", [](const SimpleGraph& g, const Options&) {
    auto r = is_claw_free(g);
    Item it;
    it.pass = r.claw_free;
    it.summary = r.claw_free ? "claw-free" : "contains a claw";
    it.payload = {{"claw_free", r.claw_free}, {"claw", r.claw}};
    return it;
  });

  add_graph_query(st, action, "quasiline", "every neighbourhood is a union of two cliques",
                  [](const SimpleGraph& g, const Options&) {
                    auto r = is_quasi_line(g);
                    Item it;
                    it.pass = r.quasi_line;
                    it.summary = r.quasi_line ? "quasi-line" : "not quasi-line at vertex " + std::to_string(r.witness);
                    it.payload = {{"quasi_line", r.quasi_line}, {"witness", r.witness}};
                    return it;
                  });

  add_graph_query(st, action, "linegraph", "recognise a line graph of a multigraph and return a root",
                  [](const SimpleGraph& g, const Options& opt) {
                    auto r = recognize_line_graph(g, cap_or(opt.cap_vertices, 12));
                    Item it;
                    it.pass = r.has_value();
                    it.summary = r ? "line graph of a multigraph on " + std::to_string(r->root.n()) + " vertices"
                                   : "not a line graph";
                    it.payload = {{"line_graph", r.has_value()}};
                    if (r) {
                      it.payload["root"] = to_json(r->root);
                      it.payload["edge_of"] = edges_json(r->edge_of);
                    }
                    return it;
                  });

  auto* hp = st->add_subcommand("homopairs", "homogeneous pairs of cliques");
  auto hp_path = std::make_shared<std::string>();
  auto hp_nonlinear = std::make_shared<bool>(false);
  hp->add_option("graph", *hp_path)->required();
  hp->add_flag("--nonlinear", *hp_nonlinear, "only pairs whose union induces a C4");
  hp->callback([&action, hp_path, hp_nonlinear] {
    action = [hp_path, hp_nonlinear](const Options& opt) {
      RunReport rep;
      rep.command = "structure homopairs";
      auto g = parse_any_graph(rep.read_input(*hp_path));
      auto pairs = find_homogeneous_pairs(g, *hp_nonlinear, cap_or(opt.cap_vertices, 12));
      json ps = json::array();
      for (auto& p : pairs) ps.push_back({{"a1", p.a1}, {"a2", p.a2}, {"nonlinear", p.nonlinear}});
      Item it;
      it.name = *hp_path;
      it.summary = std::to_string(pairs.size()) + " pair(s)";
      it.payload = {{"pairs", ps}};
      rep.results.push_back(it);
      return rep;
    };
  });

  add_graph_query(st, action, "circular", "find a circular interval representation",
                  [](const SimpleGraph& g, const Options& opt) {
                    auto r = is_circular_interval(g, cap_or(opt.cap_vertices, 9));
                    Item it;
                    it.pass = r.has_value();
                    it.summary = r ? "circular interval graph" : "not a circular interval graph";
                    it.payload = {{"circular_interval", r.has_value()}};
                    if (r) it.payload["order"] = *r;
                    return it;
                  });

  auto* comp = st->add_subcommand("compose", "strip composition from a JSON spec");
  auto comp_path = std::make_shared<std::string>();
  comp->add_option("spec", *comp_path)->required();
  comp->callback([&action, comp_path] {
    action = [comp_path](const Options&) {
      RunReport rep;
      rep.command = "structure compose";
      auto spec = composition_from_json(parse_json_text(rep.read_input(*comp_path)));
      auto c = compose(spec);
      auto cf = is_claw_free(c.graph);
      Item it;
      it.name = *comp_path;
      it.pass = cf.claw_free;
      it.summary = std::to_string(c.graph.n()) + " vertices, " + (cf.claw_free ? "claw-free" : "has a claw");
      it.payload = {{"graph", to_json(c.graph)},
                    {"graph6", emit_graph6(c.graph)},
                    {"strip_offset", c.strip_offset},
                    {"hub_clique", c.hub_clique},
                    {"claw_free", cf.claw_free}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* tj = st->add_subcommand("2join", "interval 2-joins");
  tj->require_subcommand(1);
  for (std::string mode : {"verify", "reduce"}) {
    auto* sub = tj->add_subcommand(mode, mode == "verify" ? "check the four 2-join conditions" : "reduce a canonical 2-join");
    auto gpath = std::make_shared<std::string>();
    auto tpath = std::make_shared<std::string>();
    sub->add_option("graph", *gpath)->required();
    sub->add_option("twojoin", *tpath)->required();
    sub->callback([&action, gpath, tpath, mode] {
      action = [gpath, tpath, mode](const Options&) {
        RunReport rep;
        rep.command = "structure 2join " + mode;
        auto g = parse_any_graph(rep.read_input(*gpath));
        auto t = two_join_from_json(parse_json_text(rep.read_input(*tpath)));
        Item it;
        it.name = *tpath;
        if (mode == "verify") {
          auto r = verify_2join(g, t);
          it.pass = r.ok;
          it.summary = r.ok ? "2-join" : "violates " + r.violated;
          it.payload = {{"ok", r.ok}, {"violated", r.violated}, {"order", r.order}};
        } else {
          auto r = reduce_2join(g, t);
          it.summary = "strip reduced to " + std::to_string(r.h.size()) + " vertices";
          it.payload = {{"reduced", two_join_json(r)}};
        }
        rep.results.push_back(it);
        return rep;
      };
    });
  }

  auto* scan = st->add_subcommand("bkscan", "scan induced subgraphs for f_H-AT or f_H-KP witnesses");
  auto scan_path = std::make_shared<std::string>();
  auto scan_delta = std::make_shared<int>(0);
  auto scan_max = std::make_shared<int>(6);
  auto scan_low = std::make_shared<std::string>();
  scan->add_option("graph", *scan_path)->required();
  scan->add_option("--delta", *scan_delta, "maximum degree of the host graph")->required();
  scan->add_option("--max-sub", *scan_max, "largest induced subgraph to try")->check(CLI::PositiveNumber);
  scan->add_option("--low", *scan_low, "host-low vertices (host degree delta-1); others get delta");
  scan->callback([&action, scan_path, scan_delta, scan_max, scan_low] {
    action = [scan_path, scan_delta, scan_max, scan_low](const Options& opt) {
      RunReport rep;
      rep.command = "structure bkscan";
      auto g = parse_any_graph(rep.read_input(*scan_path));
      BKScanOptions so;
      so.max_sub = *scan_max;
      so.cap_vertices = cap_or(opt.cap_vertices, so.cap_vertices);
      so.at_cap_edges = cap_or(opt.cap_edges, so.at_cap_edges);
      if (!scan_low->empty()) so.host_degree = host_degrees_from_low(g, *scan_delta, parse_int_list(*scan_low, "low id"));
      auto ws = bk_free_scan(g, *scan_delta, so);
      json items = json::array();
      int conclusive = 0;
      for (auto& w : ws) {
        json x = {{"vertices", w.vertices}, {"kind", w.kind}, {"f", w.f.values()}, {"note", w.note}};
        if (w.at) x["arcs"] = to_json(w.at->digraph)["arcs"];
        if (w.kp) x["certificate"] = kp_cert_json(*w.kp);
        items.push_back(x);
        conclusive += w.kind != "inconclusive";
      }
      Item it;
      it.name = *scan_path;
      // Passing means the graph is BK-free up to the size cap.
      it.pass = conclusive == 0;
      it.summary = std::to_string(conclusive) + " reducible induced subgraph(s), " +
                   std::to_string(ws.size() - conclusive) + " inconclusive";
      it.payload = {{"delta", *scan_delta}, {"max_sub", so.max_sub}, {"witnesses", items}};
      rep.results.push_back(it);
      return rep;
    };
  });
}

}  // namespace atkp::cli
