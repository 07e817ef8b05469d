#include "cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace atkp::cli {

bool RunReport::all_pass() const {
  for (auto& r : results)
    if (!r.pass) return false;
  return true;
}

json RunReport::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  json ins = json::array();
  for (auto& [path, hash] : inputs) ins.push_back({{"path", path}, {"fnv1a64", hash}});
  j["inputs"] = ins;
  json rs = json::array();
  for (auto& r : results) rs.push_back({{"item", r.name}, {"pass", r.pass}, {"summary", r.summary}, {"payload", r.payload}});
  j["results"] = rs;
  int passed = 0;
  for (auto& r : results) passed += r.pass;
  j["passed"] = passed;
  j["total"] = static_cast<int>(results.size());
  // Wall-clock time only on request, so reports stay byte-identical.
  j["timing"] = elapsed_ms ? json{{"elapsed_ms", *elapsed_ms}} : json(nullptr);
  return j;
}

std::string RunReport::text() const {
  std::ostringstream ss;
  int passed = 0;
  for (auto& r : results) {
    passed += r.pass;
    ss << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.summary.empty()) ss << "  " << r.summary;
    ss << '\n';
  }
  ss << command << ": " << passed << "/" << results.size() << " pass\n";
  return ss.str();
}

std::string RunReport::read_input(const std::string& path) {
  std::string data = read_file(path);
  inputs.emplace_back(path, fnv1a64_hex(data));
  return data;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError(std::string("bad ") + what + ": '" + tok + "'");
    }
    if (used != tok.size()) throw InputError(std::string("bad ") + what + ": '" + tok + "'");
    out.push_back(x);
  }
  return out;
}

std::vector<int> f_values(const std::string& spec, const SimpleGraph& g, RunReport* report) {
  const int n = g.n();
  std::vector<int> f(n);
  if (spec == "d1" || spec == "deg") {
    for (int v = 0; v < n; ++v) f[v] = g.degree(v) - (spec == "d1");
    return f;
  }
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon), arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "const") {
    auto k = parse_int_list(arg, "const:<k>");
    if (k.size() != 1) throw InputError("const:<k> needs one integer");
    return std::vector<int>(n, k[0]);
  }
  if (kind == "lowset") {
    for (int v = 0; v < n; ++v) f[v] = g.degree(v) - 1;
    for (int v : parse_int_list(arg, "lowset ids")) {
      if (v < 0 || v >= n) throw InputError("lowset id " + std::to_string(v) + " out of range");
      f[v] = g.degree(v);
    }
    return f;
  }
  if (kind == "file") {
    std::string data = report ? report->read_input(arg) : read_file(arg);
    f.clear();
    auto b = data.find_first_not_of(" \t\r\n");
    if (b != std::string::npos && data[b] == '[') {
      f = json_int_list(parse_json_text(data), "f");
    } else {
      std::istringstream in(data);
      std::string tok;
      while (in >> tok) {
        auto v = parse_int_list(tok, "list size");
        f.insert(f.end(), v.begin(), v.end());
      }
    }
    if (static_cast<int>(f.size()) != n)
      throw InputError("f file has " + std::to_string(f.size()) + " values for " + std::to_string(n) + " vertices");
    return f;
  }
  throw InputError("unknown --f specifier '" + spec + "' (use d1, deg, const:<k>, lowset:<ids>, file:<path>)");
}

ListSizeFn parse_f_spec(const std::string& spec, const SimpleGraph& g, RunReport* report) {
  return ListSizeFn(f_values(spec, g, report));
}

json edges_json(const std::vector<Edge>& es) {
  json a = json::array();
  for (auto [u, v] : es) a.push_back({u, v});
  return a;
}

int cap_or(const std::optional<int>& cap, int fallback) { return cap ? *cap : fallback; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alon-Tarsi, kernel-perfect and paintability toolkit", "atkp"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0;
  app.add_option("--threads", opt.threads, "worker threads for corpus runs")->check(CLI::Range(1, 256));
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized commands");
  app.add_option("--json", opt.json_path, "write the run report as JSON to this path ('-' for stdout)");
  app.add_option("--cap-vertices", opt.cap_vertices, "vertex cap for exhaustive searches")->check(CLI::PositiveNumber);
  app.add_option("--cap-edges", opt.cap_edges, "edge cap for coefficient searches")->check(CLI::PositiveNumber);
  app.add_flag("--timing", opt.timing, "record elapsed time in the report");
  app.set_version_flag("--version", kToolVersion);

  Action action;
  add_at_commands(app, action);
  add_kp_commands(app, action);
  add_paint_commands(app, action);
  add_structure_commands(app, action);
  add_discharge_commands(app, action);
  add_pipeline_commands(app, action);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (seed_opt->count()) opt.seed = seed;
  if (!action) {
    // A group command such as "at" without its subcommand.
    for (auto* sub : app.get_subcommands()) out << sub->help();
    return kExitUsage;
  }

  RunReport report;
  try {
    auto t0 = std::chrono::steady_clock::now();
    report = action(opt);
    if (opt.timing)
      report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HardFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitFail;
  }

  if (opt.json_path == "-") {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.text();
    if (!opt.json_path.empty()) {
      std::ofstream f(opt.json_path, std::ios::binary);
      if (!f) {
        err << "cannot write " << opt.json_path << '\n';
        return kExitUsage;
      }
      f << report.to_json().dump(2) << '\n';
    }
  }
  return report.all_pass() ? kExitPass : kExitFail;
}

}  // namespace atkp::cli
