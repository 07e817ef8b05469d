#include "atkp/catalog.hpp"
#include "atkp/kernel.hpp"
#include "cli/cli.hpp"

namespace atkp::cli {

json kp_cert_json(const KPCertificate& c) {
  return {{"graph", to_json(c.graph)},
          {"arcs", to_json(c.digraph)["arcs"]},
          {"f", c.f.values()},
          {"supergraph_edges", edges_json(c.supergraph_edges)},
          {"doubled", edges_json(c.doubled)},
          {"method", c.method}};
}

// Accepts a bare certificate or a run report whose first result carries one.
KPCertificate kp_cert_from_json(const json& doc) {
  const json* j = &doc;
  if (doc.is_object() && doc.contains("results")) {
    if (!doc["results"].is_array() || doc["results"].empty()) throw InputError("report has no results");
    const json& p = doc["results"][0]["payload"];
    if (!p.is_object() || !p.contains("certificate")) throw InputError("report result carries no certificate");
    j = &p["certificate"];
  }
  if (!j->is_object() || !j->contains("graph") || !j->contains("arcs") || !j->contains("f"))
    throw InputError("certificate needs 'graph', 'arcs' and 'f'");
  KPCertificate c;
  c.graph = simple_from_json((*j)["graph"]);
  json dj = {{"n", c.graph.n()}, {"arcs", (*j)["arcs"]}};
  c.digraph = digraph_from_json(dj);
  c.f = ListSizeFn(json_int_list((*j)["f"], "f"));
  if (c.f.size() != c.graph.n()) throw InputError("certificate f has wrong length");
  if (j->contains("method") && (*j)["method"].is_string()) c.method = (*j)["method"].get<std::string>();
  return c;
}

std::vector<Item> catalog_kp_items(const std::vector<std::string>& ids) {
  std::vector<Item> out;
  for (auto& r : mu3_kp_certificates()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), r.id) == ids.end()) continue;
    Item it;
    it.name = r.id;
    it.pass = r.ok();
    it.summary = std::string("rows ") + (r.rows_match ? "match" : "differ") + ", characterization " +
                 (r.characterization.ok ? "holds" : "fails") + ", kernel-perfect " + (r.kernel_perfect ? "yes" : "no");
    it.payload = {{"entry", r.id},
                  {"dg", r.dg},
                  {"dplus", r.dplus},
                  {"rows_match", r.rows_match},
                  {"characterization", r.characterization.ok},
                  {"kernel_perfect", r.kernel_perfect},
                  {"f_bound", r.f_bound},
                  {"certificate", kp_cert_json(r.cert)}};
    out.push_back(it);
  }
  return out;
}

void add_kp_commands(CLI::App& app, Action& action) {
  auto* kp = app.add_subcommand("kp", "kernel-perfect orientations and the kernel method");
  kp->require_subcommand(1);

  auto* check = kp->add_subcommand("check", "exhaustive kernel-perfection of a digraph JSON {n, arcs}");
  auto check_path = std::make_shared<std::string>();
  check->add_option("digraph", *check_path)->required();
  check->callback([&action, check_path] {
    action = [check_path](const Options& opt) {
      RunReport rep;
      rep.command = "kp check";
      auto d = digraph_from_json(parse_json_text(rep.read_input(*check_path)));
      int cap = cap_or(opt.cap_vertices, 12);
      if (d.n() > cap) throw CapExceeded(std::to_string(d.n()) + " vertices exceeds vertex cap " + std::to_string(cap));
      auto r = is_kernel_perfect(d, cap);
      Item it;
      it.name = *check_path;
      it.pass = r.perfect;
      it.summary = r.perfect ? "kernel-perfect" : "induced subdigraph without a kernel";
      it.payload = {{"kernel_perfect", r.perfect}, {"failing_set", r.failing_set}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* search = kp->add_subcommand("search", "search for an f-KP orientation (superorientation with --double)");
  auto search_path = std::make_shared<std::string>();
  auto search_f = std::make_shared<std::string>("d1");
  auto search_double = std::make_shared<bool>(false);
  search->add_option("graph", *search_path)->required();
  search->add_option("--f", *search_f, "list sizes: d1, deg, const:<k>, lowset:<ids>, file:<path>");
  search->add_flag("--double", *search_double, "allow bidirected edges");
  search->callback([&action, search_path, search_f, search_double] {
    action = [search_path, search_f, search_double](const Options& opt) {
      RunReport rep;
      rep.command = "kp search";
      auto g = parse_any_graph(rep.read_input(*search_path));
      auto f = parse_f_spec(*search_f, g, &rep);
      KPSearchOptions so;
      so.allow_doubling = *search_double;
      so.cap_vertices = cap_or(opt.cap_vertices, so.cap_vertices);
      auto cert = is_f_KP(g, f, so);
      Item it;
      it.name = *search_path;
      it.pass = cert.has_value();
      if (cert) {
        auto v = verify_kp_certificate(*cert);
        if (!v.ok) throw HardFailure("certificate fails verification: " + v.reason);
        it.summary = "f-KP, " + std::to_string(cert->doubled.size()) + " doubled edge(s)";
        it.payload = {{"f_kp", true}, {"certificate", kp_cert_json(*cert)}};
      } else {
        it.summary = so.allow_doubling ? "not f-KP" : "not f-KP without doubling";
        it.payload = {{"f_kp", false}, {"allow_doubling", so.allow_doubling}, {"f", f.values()}};
      }
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* galvin = kp->add_subcommand("galvin", "kernel-perfect orientation of the line graph of a bipartite multigraph");
  auto galvin_path = std::make_shared<std::string>();
  galvin->add_option("bipartite", *galvin_path)->required();
  galvin->callback([&action, galvin_path] {
    action = [galvin_path](const Options&) {
      RunReport rep;
      rep.command = "kp galvin";
      auto b = parse_any_multigraph(rep.read_input(*galvin_path));
      auto g = galvin_orientation(b);
      auto root = expand_copies(b);
      auto v = verify_kp_certificate(g.cert, &root, b.n());
      json origin = json::array();
      for (auto& o : g.origin) origin.push_back({o.u, o.v, o.copy});
      Item it;
      it.name = *galvin_path;
      it.pass = v.ok;
      it.summary = "L(B) on " + std::to_string(g.cert.graph.n()) + " vertices, " + g.construction + ", " +
                   (v.ok ? "verified (" + v.method + ")" : "verification failed: " + v.reason);
      it.payload = {{"construction", g.construction},
                    {"colors", g.colors},
                    {"origin", origin},
                    {"verification", {{"ok", v.ok}, {"method", v.method}, {"reason", v.reason}}},
                    {"certificate", kp_cert_json(g.cert)}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* mu3 = kp->add_subcommand("mu3", "verify the multiplicity-3 line-graph configurations");
  mu3->callback([&action] {
    action = [](const Options&) {
      RunReport rep;
      rep.command = "kp mu3";
      rep.results = catalog_kp_items({});
      return rep;
    };
  });
}

}  // namespace atkp::cli
