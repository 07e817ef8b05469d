#include "atkp/alon_tarsi.hpp"
#include "atkp/catalog.hpp"
#include "cli/cli.hpp"

namespace atkp::cli {

namespace {

constexpr int kDefaultEdgeCap = 40;

json at_cert_json(const ATCertificate& c) {
  return {{"graph", to_json(c.graph)},
          {"arcs", to_json(c.digraph)["arcs"]},
          {"f", c.f.values()},
          {"exponents", c.exponents},
          {"coefficient", to_string(c.coefficient)},
          {"ee", to_string(c.ee)},
          {"eo", to_string(c.eo)}};
}

Item entry_item(const CatalogEntry& e) {
  auto r = verify_catalog_entry(e);
  Item it;
  it.name = e.id;
  it.pass = r.pass();
  it.summary = "EE=" + to_string(r.ee) + " EO=" + to_string(r.eo) + " (expected " + to_string(r.expected_ee) + ", " +
               to_string(r.expected_eo) + ")";
  if (!r.f_bound) it.summary += " outdegree exceeds f-1";
  it.payload = {{"entry", e.id},
                {"kind", kind_name(e.kind)},
                {"expected", {to_string(r.expected_ee), to_string(r.expected_eo)}},
                {"computed", {to_string(r.ee), to_string(r.eo)}},
                {"f_bound", r.f_bound},
                {"pass", r.pass()}};
  return it;
}

}  // namespace

std::vector<Item> catalog_at_items(const std::vector<std::string>& ids) {
  std::vector<Item> out;
  for (auto& e : catalog()) {
    if (e.kind == EntryKind::LineKP) continue;
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
    out.push_back(entry_item(e));
  }
  return out;
}

void add_at_commands(CLI::App& app, Action& action) {
  auto* at = app.add_subcommand("at", "Alon-Tarsi orientations and graph polynomial coefficients");
  at->require_subcommand(1);

  auto* count = at->add_subcommand("count", "EE and EO of a digraph given as JSON {n, arcs}");
  auto count_path = std::make_shared<std::string>();
  count->add_option("digraph", *count_path)->required();
  count->callback([&action, count_path] {
    action = [count_path](const Options&) {
      RunReport rep;
      rep.command = "at count";
      auto d = digraph_from_json(parse_json_text(rep.read_input(*count_path)));
      auto c = eulerian_counts(d);
      Item it;
      it.name = *count_path;
      it.pass = c.ee != c.eo;
      it.summary = "EE=" + to_string(c.ee) + " EO=" + to_string(c.eo);
      it.payload = {{"n", d.n()}, {"arcs", d.arc_count()}, {"ee", to_string(c.ee)}, {"eo", to_string(c.eo)}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* check = at->add_subcommand("check", "search for an AT orientation with outdegrees below f");
  auto check_path = std::make_shared<std::string>();
  auto check_f = std::make_shared<std::string>("d1");
  check->add_option("graph", *check_path)->required();
  check->add_option("--f", *check_f, "list sizes: d1, deg, const:<k>, lowset:<ids>, file:<path>");
  check->callback([&action, check_path, check_f] {
    action = [check_path, check_f](const Options& opt) {
      RunReport rep;
      rep.command = "at check";
      auto g = parse_any_graph(rep.read_input(*check_path));
      auto f = parse_f_spec(*check_f, g, &rep);
      int cap = cap_or(opt.cap_edges, kDefaultEdgeCap);
      if (g.m() > cap) throw CapExceeded(std::to_string(g.m()) + " edges exceeds edge cap " + std::to_string(cap));
      auto cert = is_f_AT(g, f);
      Item it;
      it.name = *check_path;
      it.pass = cert.has_value();
      if (cert) {
        auto v = verify_at_certificate(*cert);
        if (!v.ok) throw HardFailure("certificate fails verification: " + v.reason);
        it.summary = "f-AT, coefficient " + to_string(cert->coefficient);
        it.payload = {{"f_at", true}, {"certificate", at_cert_json(*cert)}};
      } else {
        it.summary = "not f-AT";
        it.payload = {{"f_at", false}, {"f", f.values()}};
      }
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* coeff = at->add_subcommand("coeff", "coefficient of a monomial in the graph polynomial");
  auto coeff_path = std::make_shared<std::string>();
  auto coeff_k = std::make_shared<std::string>();
  coeff->add_option("graph", *coeff_path)->required();
  coeff->add_option("--k", *coeff_k, "comma-separated exponents, one per vertex")->required();
  coeff->callback([&action, coeff_path, coeff_k] {
    action = [coeff_path, coeff_k](const Options& opt) {
      RunReport rep;
      rep.command = "at coeff";
      auto g = parse_any_graph(rep.read_input(*coeff_path));
      auto k = parse_int_list(*coeff_k, "exponent");
      if (static_cast<int>(k.size()) != g.n()) throw InputError("need one exponent per vertex");
      int cap = cap_or(opt.cap_edges, kDefaultEdgeCap);
      if (g.m() > cap) throw CapExceeded(std::to_string(g.m()) + " edges exceeds edge cap " + std::to_string(cap));
      BigInt a = poly_coefficient_expand(g, k);
      // The interpolation formula is cheap only while prod (k_i + 1) stays small.
      double work = 1;
      for (int x : k) work *= x + 1;
      Item it;
      it.name = *coeff_path;
      it.payload = {{"exponents", k}, {"expand", to_string(a)}};
      it.summary = "coefficient " + to_string(a);
      if (work <= 2e6) {
        BigInt b = poly_coefficient_schauz(g, k);
        it.payload["schauz"] = to_string(b);
        it.pass = a == b;
        if (!it.pass) it.summary += " but interpolation gives " + to_string(b);
      }
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* cat = at->add_subcommand("catalog", "recompute EE/EO for catalog entries");
  auto cat_ids = std::make_shared<std::vector<std::string>>();
  cat->add_option("--entry", *cat_ids, "entry id, repeatable");
  cat->callback([&action, cat_ids] {
    action = [cat_ids](const Options&) {
      for (auto& id : *cat_ids) {
        auto e = catalog_entry(id);
        if (!e) throw InputError("unknown catalog entry '" + id + "'");
        if (e->kind == EntryKind::LineKP) throw InputError("entry '" + id + "' is a kernel-perfect configuration");
      }
      RunReport rep;
      rep.command = "at catalog";
      rep.results = catalog_at_items(*cat_ids);
      return rep;
    };
  });
}

}  // namespace atkp::cli
