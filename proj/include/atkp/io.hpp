#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "atkp/graph.hpp"
#include "json.hpp"

namespace atkp {

using json = nlohmann::ordered_json;

// ---- graph6 ---------------------------------------------------------------

inline SimpleGraph parse_graph6(const std::string& raw) {
  std::string text = raw;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  auto fail = [](std::size_t off, const std::string& what) -> InputError {
    return InputError("graph6: " + what + " at byte " + std::to_string(off));
  };
  std::size_t pos = 0;
  if (text.rfind(">>graph6<<", 0) == 0) pos = 10;
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw fail(i, "unexpected end of input");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw fail(i, "byte out of range");
    return c - 63;
  };
  long long n = 0;
  if (pos >= text.size()) throw fail(pos, "empty input");
  int first = byte_at(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else {
    if (byte_at(pos + 1) == 63) throw fail(pos, "header for n > 258047 not supported");
    n = (static_cast<long long>(byte_at(pos + 1)) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    if (n < 63) throw fail(pos, "malformed header");
    pos += 4;
  }
  long long bits = n * (n - 1) / 2;
  long long nbytes = (bits + 5) / 6;
  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t off = pos + static_cast<std::size_t>(k / 6);
      int b = byte_at(off);
      if ((b >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    std::size_t off = pos + static_cast<std::size_t>(nbytes - 1);
    int b = byte_at(off);
    int pad = static_cast<int>(6 - bits % 6);
    if (b & ((1 << pad) - 1)) throw fail(off, "nonzero padding bits");
  }
  std::size_t end = pos + static_cast<std::size_t>(nbytes);
  if (end < text.size()) throw fail(end, "trailing garbage");
  return SimpleGraph(static_cast<int>(n), es);
}

inline std::string emit_graph6(const SimpleGraph& g) {
  std::string out;
  int n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, cnt = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adj(i, j) ? 1 : 0);
      if (++cnt == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = cnt = 0;
      }
    }
  if (cnt > 0) out.push_back(static_cast<char>((acc << (6 - cnt)) + 63));
  return out;
}

// ---- edge lists -----------------------------------------------------------

// "n m" header, then m lines "u v [mult]"; '#' starts a comment.
inline MultiGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<MultiEdge> es;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::exception&) {
        throw InputError("edge list: bad token '" + tok + "' on line " + std::to_string(lineno));
      }
    }
    if (nums.empty()) continue;
    if (n < 0) {
      if (nums.size() != 2) throw InputError("edge list: header must be 'n m' (line " + std::to_string(lineno) + ")");
      n = nums[0];
      m = nums[1];
      if (n < 0 || m < 0) throw InputError("edge list: negative header value");
      continue;
    }
    if (nums.size() < 2 || nums.size() > 3)
      throw InputError("edge list: expected 'u v [mult]' on line " + std::to_string(lineno));
    long long mult = nums.size() == 3 ? nums[2] : 1;
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= n || nums[1] >= n)
      throw InputError("edge list: vertex out of range on line " + std::to_string(lineno));
    if (mult < 1) throw InputError("edge list: multiplicity must be positive on line " + std::to_string(lineno));
    es.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(mult)});
  }
  if (n < 0) throw InputError("edge list: missing header");
  if (static_cast<long long>(es.size()) != m)
    throw InputError("edge list: header promises " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
  return MultiGraph(static_cast<int>(n), es);
}

inline std::string emit_edge_list(const MultiGraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.edges().size() << '\n';
  for (auto& e : h.edges()) {
    out << e.u << ' ' << e.v;
    if (e.mult != 1) out << ' ' << e.mult;
    out << '\n';
  }
  return out.str();
}

inline std::string emit_edge_list(const SimpleGraph& g) { return emit_edge_list(MultiGraph::from_simple(g)); }

// ---- JSON -----------------------------------------------------------------

inline json to_json(const Digraph& d) {
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  return json{{"n", d.n()}, {"arcs", arcs}};
}

inline json to_json(const SimpleGraph& g) {
  json es = json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  return json{{"n", g.n()}, {"edges", es}};
}

inline json to_json(const MultiGraph& h) {
  json es = json::array();
  for (auto& e : h.edges()) es.push_back({e.u, e.v, e.mult});
  return json{{"n", h.n()}, {"edges", es}};
}

inline int json_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("json: ") + what + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> json_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string("json: ") + what + " must be an array");
  std::vector<int> out;
  for (auto& x : j) out.push_back(json_int(x, what));
  return out;
}

inline Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) throw InputError("json: digraph needs 'n' and 'arcs'");
  int n = json_int(j["n"], "n");
  std::vector<Arc> arcs;
  for (auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2) throw InputError("json: each arc must be [u, v]");
    arcs.emplace_back(json_int(a[0], "arc"), json_int(a[1], "arc"));
  }
  return Digraph(n, arcs);
}

inline SimpleGraph simple_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw InputError("json: graph needs 'n' and 'edges'");
  int n = json_int(j["n"], "n");
  std::vector<Edge> es;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2) throw InputError("json: each edge must be [u, v]");
    es.emplace_back(json_int(e[0], "edge"), json_int(e[1], "edge"));
  }
  return SimpleGraph(n, es);
}

inline MultiGraph multi_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw InputError("json: graph needs 'n' and 'edges'");
  int n = json_int(j["n"], "n");
  std::vector<MultiEdge> es;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) throw InputError("json: each edge must be [u, v] or [u, v, mult]");
    es.push_back({json_int(e[0], "edge"), json_int(e[1], "edge"), e.size() == 3 ? json_int(e[2], "mult") : 1});
  }
  return MultiGraph(n, es);
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("json: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Accepts graph6, an edge list, or a JSON graph; graph6 words never contain
// digits, whitespace or '#', which is what tells the formats apart.
inline MultiGraph parse_any_multigraph(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw InputError("empty graph input");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  std::string body = text.substr(b, e - b + 1);
  if (body[0] == '{') return multi_from_json(parse_json_text(body));
  for (char c : body)
    if (std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) || c == '#')
      return parse_edge_list(text);
  return MultiGraph::from_simple(parse_graph6(body));
}

inline SimpleGraph parse_any_graph(const std::string& text) {
  MultiGraph h = parse_any_multigraph(text);
  if (h.max_multiplicity() > 1) throw InputError("expected a simple graph, found parallel edges");
  return h.support();
}

inline std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 15];
  return s;
}

}  // namespace atkp
