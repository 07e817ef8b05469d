#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atkp/io.hpp"
#include "atkp/kernel.hpp"

namespace atkp::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "atkp.run-report/1";

// Exit codes are part of the interface.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  int threads = 1;
  std::optional<std::uint64_t> seed;
  std::string json_path;  // "-" writes the report to stdout instead of text
  std::optional<int> cap_vertices, cap_edges;
  bool timing = false;
};

struct Item {
  std::string name;
  bool pass = true;
  std::string summary;
  json payload = json::object();
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, fnv1a64
  std::vector<Item> results;
  std::optional<double> elapsed_ms;

  bool all_pass() const;
  json to_json() const;
  std::string text() const;
  // Reads a file and records its hash.
  std::string read_input(const std::string& path);
};

using Action = std::function<RunReport(const Options&)>;

// Each module registers its subcommands; the chosen one stores its action.
void add_at_commands(CLI::App& app, Action& action);
void add_kp_commands(CLI::App& app, Action& action);
void add_paint_commands(CLI::App& app, Action& action);
void add_structure_commands(CLI::App& app, Action& action);
void add_discharge_commands(CLI::App& app, Action& action);
void add_pipeline_commands(CLI::App& app, Action& action);

// Shared helpers.
// --f specifiers: d1, deg, const:<k>, lowset:<ids>, file:<path>.
ListSizeFn parse_f_spec(const std::string& spec, const SimpleGraph& g, RunReport* report = nullptr);
// Same values without the positivity check.
std::vector<int> f_values(const std::string& spec, const SimpleGraph& g, RunReport* report = nullptr);
std::vector<int> parse_int_list(const std::string& text, const char* what);
json edges_json(const std::vector<Edge>& es);
int cap_or(const std::optional<int>& cap, int fallback);
std::vector<Item> catalog_at_items(const std::vector<std::string>& ids);
std::vector<Item> catalog_kp_items(const std::vector<std::string>& ids);
json kp_cert_json(const KPCertificate& c);
KPCertificate kp_cert_from_json(const json& j);

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atkp::cli
