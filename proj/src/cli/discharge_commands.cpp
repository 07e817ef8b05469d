#include "atkp/discharging.hpp"
#include "cli/cli.hpp"
#include "cli/discharge_json.hpp"

namespace atkp::cli {

json ledger_json(const ChargeLedger& led) {
  json rounds = json::array();
  for (auto& r : led.rounds) {
    json ts = json::array();
    for (auto& t : r.transfers) ts.push_back({t.donor, t.recipient, t.amount});
    rounds.push_back({{"round", r.index}, {"transfers", ts}});
  }
  return {{"initial", led.initial}, {"rounds", rounds}, {"final", led.final_charge}};
}

json witness_json(const BipartiteWitness& w) {
  return {{"round", w.round}, {"b", to_json(w.b)}, {"low_side", w.low_side}, {"donor_side", w.donor_side}};
}

// Discharge outcome as a report item; with a delta a valid witness is also
// turned into a kernel-perfect certificate.
Item discharge_item(const MultiGraph& h, std::optional<int> delta) {
  auto res = discharge(h);
  Item it;
  it.payload = {{"edge_sum_condition", res.edge_sum_condition}};
  if (res.ledger) {
    long long before = 0, after = 0;
    for (int x : res.ledger->initial) before += x;
    for (int x : res.ledger->final_charge) after += x;
    it.pass = before == after;
    it.summary = "ledger completed over " + std::to_string(res.ledger->rounds.size()) + " rounds";
    it.payload["outcome"] = "ledger";
    it.payload["ledger"] = ledger_json(*res.ledger);
    return it;
  }
  auto chk = check_witness(h, res.witness->b);
  it.payload["outcome"] = "witness";
  it.payload["witness"] = witness_json(*res.witness);
  it.payload["witness_valid"] = chk.ok;
  it.summary = "witness at round " + std::to_string(res.witness->round);
  if (!chk.ok) {
    // The peeling guarantee needs V_i independent; without that an invalid
    // witness is an expected outcome, with it a defect.
    int i = res.witness->round;
    bool independent = true;
    for (auto& e : h.edges())
      if (h.degree(e.u) <= i && h.degree(e.v) <= i) independent = false;
    it.pass = !independent;
    it.payload["low_set_independent"] = independent;
    it.summary += ", not a valid witness (" + chk.reason + ")";
    it.payload["witness_reason"] = chk.reason;
    return it;
  }
  if (delta) {
    auto kp = witness_to_kp(h, *res.witness, *delta);
    it.pass = kp.verification.ok;
    it.summary += ", KP certificate on " + std::to_string(kp.cert.graph.n()) + " vertices verified (" +
                  kp.verification.method + ")";
    json origin = json::array();
    for (auto& o : kp.origin) origin.push_back({o.u, o.v, o.copy});
    it.payload["kp"] = {{"verification", {{"ok", kp.verification.ok}, {"method", kp.verification.method}}},
                        {"origin", origin},
                        {"bound", kp.bound},
                        {"certificate", kp_cert_json(kp.cert)}};
  }
  return it;
}

void add_discharge_commands(CLI::App& app, Action& action) {
  auto* dc = app.add_subcommand("discharge", "max-cut partitions, degeneracy and charge ledgers on multigraphs");
  dc->require_subcommand(1);

  auto* run = dc->add_subcommand("run", "discharging rounds 2..11: ledger or bipartite witness");
  auto run_path = std::make_shared<std::string>();
  auto run_delta = std::make_shared<int>(0);
  run->add_option("multigraph", *run_path)->required();
  auto* delta_opt = run->add_option("--delta", *run_delta, "maximum degree of the line graph host; converts witnesses");
  run->callback([&action, run_path, run_delta, delta_opt] {
    std::optional<int> delta;
    if (delta_opt->count()) delta = *run_delta;
    action = [run_path, delta](const Options&) {
      RunReport rep;
      rep.command = "discharge run";
      auto h = parse_any_multigraph(rep.read_input(*run_path));
      Item it = discharge_item(h, delta);
      it.name = *run_path;
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* part = dc->add_subcommand("partition", "max-cut partition preferring low crossing multiplicities");
  auto part_path = std::make_shared<std::string>();
  part->add_option("multigraph", *part_path)->required();
  part->callback([&action, part_path] {
    action = [part_path](const Options& opt) {
      RunReport rep;
      rep.command = "discharge partition";
      auto h = parse_any_multigraph(rep.read_input(*part_path));
      auto p = maxcut_partition(h, cap_or(opt.cap_vertices, 16));
      Item it;
      it.name = *part_path;
      it.summary = "cut " + std::to_string(p.cut) + (p.exhaustive ? " (optimal)" : " (local optimum)");
      it.payload = {{"a", p.a}, {"b", p.b}, {"cut", p.cut}, {"mu_sq", p.mu_sq}, {"exhaustive", p.exhaustive}};
      rep.results.push_back(it);
      return rep;
    };
  });

  auto* deg = dc->add_subcommand("degeneracy", "degeneracy and elimination order");
  auto deg_path = std::make_shared<std::string>();
  deg->add_option("multigraph", *deg_path)->required();
  deg->callback([&action, deg_path] {
    action = [deg_path](const Options&) {
      RunReport rep;
      rep.command = "discharge degeneracy";
      auto h = parse_any_multigraph(rep.read_input(*deg_path));
      auto d = degeneracy(h);
      Item it;
      it.name = *deg_path;
      it.summary = std::to_string(d.k) + "-degenerate";
      it.payload = {{"degeneracy", d.k}, {"order", d.order}};
      rep.results.push_back(it);
      return rep;
    };
  });
}

}  // namespace atkp::cli
