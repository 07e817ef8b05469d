#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "atkp/alon_tarsi.hpp"
#include "atkp/discharging.hpp"
#include "atkp/paint.hpp"
#include "atkp/structure.hpp"
#include "cli/cli.hpp"
#include "cli/discharge_json.hpp"

namespace atkp::cli {

namespace {

// ---- catalog ----------------------------------------------------------------

RunReport catalog_verify(const std::vector<std::string>& ids) {
  for (auto& id : ids)
    if (!catalog_entry(id)) throw InputError("unknown catalog entry '" + id + "'");
  std::vector<std::string> at_ids, kp_ids;
  for (auto& id : ids) (catalog_entry(id)->kind == EntryKind::LineKP ? kp_ids : at_ids).push_back(id);
  RunReport rep;
  rep.command = "catalog verify";
  if (ids.empty() || !at_ids.empty()) rep.results = catalog_at_items(at_ids);
  if (ids.empty() || !kp_ids.empty())
    for (auto& it : catalog_kp_items(kp_ids)) rep.results.push_back(it);
  return rep;
}

// ---- line graph pipeline ----------------------------------------------------

RunReport pipeline_linegraph(RunReport rep, const MultiGraph& h, int delta) {
  const int n = h.n();
  // Reducible multiplicity patterns: each names the catalog configurations
  // that the neighbourhood of the corresponding line vertex contains.
  json heavy = json::array(), triple_triangles = json::array();
  for (auto& e : h.edges()) {
    if (e.mult >= 4) heavy.push_back({e.u, e.v, e.mult});
    if (e.mult == 3)
      for (int w = 0; w < n; ++w)
        if (w != e.u && w != e.v && h.mult(e.u, w) > 0 && h.mult(e.v, w) > 0) triple_triangles.push_back({e.u, e.v, w});
  }
  Item mu;
  mu.name = "multiplicity";
  mu.summary = "mu(h) = " + std::to_string(h.max_multiplicity());
  if (!heavy.empty()) mu.summary += "; edge of multiplicity >= 4 (reducible via 1d, 1e-1g, 1i)";
  if (!triple_triangles.empty()) mu.summary += "; triple edge on a triangle (reducible via 1d, 1g-1i)";
  mu.payload = {{"mu", h.max_multiplicity()},
                {"mu_at_most_3", heavy.empty()},
                {"multiplicity_at_least_4", heavy},
                {"triple_edge_on_triangle", triple_triangles}};
  rep.results.push_back(mu);

  auto p = maxcut_partition(h);
  Item cut;
  cut.name = "maxcut";
  cut.summary = "cut " + std::to_string(p.cut) + (p.exhaustive ? " (optimal)" : " (local optimum)");
  cut.payload = {{"a", p.a}, {"b", p.b}, {"cut", p.cut}, {"mu_sq", p.mu_sq}, {"exhaustive", p.exhaustive}};
  rep.results.push_back(cut);

  auto d = degeneracy(h);
  Item dg;
  dg.name = "degeneracy";
  dg.summary = std::to_string(d.k) + "-degenerate" + (d.k <= 6 ? "" : " (not 6-degenerate)");
  dg.payload = {{"degeneracy", d.k}, {"order", d.order}, {"six_degenerate", d.k <= 6}};
  rep.results.push_back(dg);

  std::optional<int> dl;
  if (h.max_degree() < delta) dl = delta;
  Item dis = discharge_item(h, dl);
  dis.name = "discharge";
  if (!dl) dis.summary += " (delta not above max degree of h; no certificate)";
  rep.results.push_back(dis);
  return rep;
}

// ---- corpus -----------------------------------------------------------------

struct CorpusItem {
  std::string name;
  std::string text;   // graph text, empty when error is set
  std::string error;  // unreadable file etc.
};

bool looks_like_graph6_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (char c : line)
      if (c < 63 || c > 126) return false;
    ++lines;
  }
  return lines > 1;
}

std::vector<CorpusItem> corpus_from_dir(RunReport& rep, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw InputError(dir + " is not a directory");
  std::vector<std::string> paths;
  for (auto& de : fs::directory_iterator(dir, ec))
    if (!de.is_directory()) paths.push_back(de.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<CorpusItem> items;
  for (auto& p : paths) {
    std::string data;
    try {
      data = rep.read_input(p);
    } catch (const InputError& e) {
      items.push_back({p, "", e.what()});
      continue;
    }
    if (looks_like_graph6_lines(data)) {
      std::istringstream in(data);
      std::string line;
      int k = 0;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) items.push_back({p + ":" + std::to_string(++k), line, ""});
      }
    } else {
      items.push_back({p, data, ""});
    }
  }
  return items;
}

// Non-isomorphic graphs on exactly n vertices by vertex extension and
// brute-force canonical forms (minimum graph6 word over all relabellings).
std::vector<SimpleGraph> graphs_up_to_iso(int n) {
  auto canonical = [](const SimpleGraph& g) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      std::vector<Edge> es;
      for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
      std::string w = emit_graph6(SimpleGraph(g.n(), es));
      if (best.empty() || w < best) best = w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::vector<SimpleGraph> level{SimpleGraph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::string> seen;
    std::vector<SimpleGraph> next;
    for (auto& g : level)
      for (Mask s = 0; s < bit(k - 1); ++s) {
        auto es = g.edges();
        for (int v : mask_to_vertices(s)) es.emplace_back(v, k - 1);
        SimpleGraph h(k, es);
        if (seen.insert(canonical(h)).second) next.push_back(h);
      }
    level = std::move(next);
  }
  return level;
}

std::vector<CorpusItem> corpus_generated(int max_n) {
  if (max_n < 1 || max_n > 6) throw InputError("--generate-connected supports 1..6 vertices");
  std::vector<CorpusItem> items;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::string> words;
    for (auto& g : graphs_up_to_iso(n))
      if (is_connected(g)) words.push_back(emit_graph6(g));
    std::sort(words.begin(), words.end());
    for (auto& w : words) items.push_back({"n" + std::to_string(n) + ":" + w, w, ""});
  }
  return items;
}

struct CorpusConfig {
  std::string task = "paint";
  std::string f = "d1";
  std::optional<int> delta;
  int max_sub = 6;
};

Item corpus_task(const CorpusItem& ci, const CorpusConfig& cfg, const Options& opt) {
  Item it;
  it.name = ci.name;
  if (!ci.error.empty()) {
    it.pass = false;
    it.summary = "error: " + ci.error;
    it.payload = {{"error", ci.error}};
    return it;
  }
  try {
    auto g = parse_any_graph(ci.text);
    auto fv = f_values(cfg.f, g);
    it.payload = {{"task", cfg.task}, {"n", g.n()}, {"m", g.m()}, {"graph6", emit_graph6(g)}};
    if (*std::min_element(fv.begin(), fv.end()) < 1) {
      // An empty list cannot be coloured from, so every task answers no.
      it.payload["f"] = fv;
      it.payload["answer"] = false;
      it.payload["note"] = "some list size is below 1";
      it.summary = "no (list size below 1)";
      return it;
    }
    ListSizeFn f(fv);
    bool answer = false;
    if (cfg.task == "at") {
      int cap = cap_or(opt.cap_edges, 40);
      if (g.m() > cap) throw CapExceeded(std::to_string(g.m()) + " edges exceeds edge cap " + std::to_string(cap));
      answer = is_f_AT(g, f).has_value();
    } else if (cfg.task == "kp") {
      KPSearchOptions so;
      so.allow_doubling = true;
      so.cap_vertices = cap_or(opt.cap_vertices, so.cap_vertices);
      answer = is_f_KP(g, f, so).has_value();
    } else if (cfg.task == "paint") {
      GameOptions go;
      go.cap_vertices = cap_or(opt.cap_vertices, go.cap_vertices);
      answer = is_f_paintable(g, f, go).paintable;
    } else {
      BKScanOptions so;
      so.max_sub = cfg.max_sub;
      so.cap_vertices = cap_or(opt.cap_vertices, so.cap_vertices);
      so.at_cap_edges = cap_or(opt.cap_edges, so.at_cap_edges);
      auto ws = bk_free_scan(g, cfg.delta ? *cfg.delta : g.max_degree(), so);
      int conclusive = 0;
      for (auto& w : ws) conclusive += w.kind != "inconclusive";
      answer = conclusive == 0;
      it.payload["witnesses"] = conclusive;
      it.payload["inconclusive"] = static_cast<int>(ws.size()) - conclusive;
    }
    it.payload["f"] = f.values();
    it.payload["answer"] = answer;
    it.summary = answer ? "yes" : "no";
  } catch (const std::runtime_error& e) {
    it.pass = false;
    it.summary = std::string("error: ") + e.what();
    it.payload["error"] = e.what();
  }
  return it;
}

std::vector<Item> run_pool(const std::vector<CorpusItem>& items, const CorpusConfig& cfg, const Options& opt) {
  std::vector<Item> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) out[i] = corpus_task(items[i], cfg, opt);
  };
  int k = std::max(1, std::min<int>(opt.threads, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

void write_csv(const std::string& path, const std::vector<Item>& items) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << "item,n,m,answer,status\n";
  for (auto& it : items) {
    auto get = [&](const char* k) { return it.payload.contains(k) ? it.payload[k].dump() : std::string(); };
    f << '"' << it.name << "\"," << get("n") << ',' << get("m") << ',' << get("answer") << ','
      << (it.pass ? "ok" : "error") << '\n';
  }
}

}  // namespace

void add_pipeline_commands(CLI::App& app, Action& action) {
  auto* cat = app.add_subcommand("catalog", "reducible configurations from the figures");
  cat->require_subcommand(1);
  auto* verify = cat->add_subcommand("verify", "recompute every catalog entry");
  auto ids = std::make_shared<std::vector<std::string>>();
  verify->add_option("--entry", *ids, "entry id, repeatable");
  verify->callback([&action, ids] { action = [ids](const Options&) { return catalog_verify(*ids); }; });

  auto* pipe = app.add_subcommand("pipeline", "end-to-end flows");
  pipe->require_subcommand(1);
  auto* lg = pipe->add_subcommand("linegraph", "multiplicity checks, max-cut, degeneracy and discharging on a root h");
  auto lg_path = std::make_shared<std::string>();
  auto lg_delta = std::make_shared<int>(0);
  lg->add_option("multigraph", *lg_path)->required();
  lg->add_option("--delta", *lg_delta, "maximum degree of the line graph G")->required();
  lg->callback([&action, lg_path, lg_delta] {
    action = [lg_path, lg_delta](const Options&) {
      RunReport rep;
      rep.command = "pipeline linegraph";
      auto h = parse_any_multigraph(rep.read_input(*lg_path));
      return pipeline_linegraph(std::move(rep), h, *lg_delta);
    };
  });

  auto* corpus = app.add_subcommand("corpus", "apply one task to every graph in a directory");
  auto dir = std::make_shared<std::string>();
  auto cfg = std::make_shared<CorpusConfig>();
  auto gen = std::make_shared<int>(0);
  auto csv = std::make_shared<std::string>();
  auto delta = std::make_shared<int>(0);
  corpus->add_option("dir", *dir, "directory of graph files (graph6, edge list or JSON)");
  auto* gen_opt = corpus->add_option("--generate-connected", *gen, "use all connected graphs up to this order instead");
  corpus->add_option("--task", cfg->task, "at, kp, paint or scan")->check(CLI::IsMember({"at", "kp", "paint", "scan"}));
  corpus->add_option("--f", cfg->f, "list sizes: d1, deg, const:<k>, lowset:<ids>");
  auto* delta_opt = corpus->add_option("--delta", *delta, "host maximum degree for scan (default: the graph's own)");
  corpus->add_option("--max-sub", cfg->max_sub, "largest induced subgraph for scan")->check(CLI::PositiveNumber);
  corpus->add_option("--csv", *csv, "also write a CSV table");
  corpus->callback([&action, dir, cfg, gen, gen_opt, csv, delta, delta_opt] {
    bool generate = gen_opt->count() > 0;
    if (delta_opt->count()) cfg->delta = *delta;
    action = [dir, cfg, gen, generate, csv](const Options& opt) {
      if (generate == !dir->empty()) throw InputError("give either a directory or --generate-connected");
      if (cfg->f.rfind("file:", 0) == 0) throw InputError("corpus runs take d1, deg, const or lowset list sizes");
      RunReport rep;
      rep.command = "corpus " + cfg->task;
      auto items = generate ? corpus_generated(*gen) : corpus_from_dir(rep, *dir);
      rep.results = run_pool(items, *cfg, opt);
      if (!csv->empty()) write_csv(*csv, rep.results);
      return rep;
    };
  });
}

}  // namespace atkp::cli
