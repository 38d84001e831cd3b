#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>

#include "pentagon/error.hpp"
#include "pentagon/graph.hpp"

namespace pentagon {
namespace {

struct RawEdgeList {
  std::optional<std::uint64_t> declared_n;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::size_t> lines;
};

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

RawEdgeList read_raw(std::string_view text) {
  RawEdgeList raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("n=") || line.starts_with("n =")) {
      auto value = trim(line.substr(line.find('=') + 1));
      std::uint64_t n = 0;
      if (!parse_u64(value, n)) throw ParseError(line_no, "malformed header, expected n=<count>");
      if (raw.declared_n) throw ParseError(line_no, "duplicate n= header");
      raw.declared_n = n;
      continue;
    }
    auto toks = tokens(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v)) {
      throw ParseError(line_no, "expected two non-negative integers, got '" + std::string(line) + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    raw.pairs.emplace_back(u, v);
    raw.lines.push_back(line_no);
  }
  return raw;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  RawEdgeList raw = read_raw(text);
  std::uint64_t n = 0;
  for (auto [u, v] : raw.pairs) n = std::max({n, u + 1, v + 1});
  if (raw.declared_n) {
    for (std::size_t i = 0; i < raw.pairs.size(); ++i) {
      auto [u, v] = raw.pairs[i];
      if (u >= *raw.declared_n || v >= *raw.declared_n) {
        throw ParseError(raw.lines[i], "vertex id exceeds declared n=" + std::to_string(*raw.declared_n));
      }
    }
    n = *raw.declared_n;
  }
  if (n > 20000) throw ParseError(1, "graph too large for dense adjacency (n=" + std::to_string(n) + ")");
  Graph g(static_cast<std::size_t>(n));
  for (auto [u, v] : raw.pairs) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return g;
}

RemappedGraph parse_edge_list_remapped(std::string_view text) {
  RawEdgeList raw = read_raw(text);
  std::vector<std::uint64_t> ids;
  for (auto [u, v] : raw.pairs) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 20000) throw ParseError(1, "graph too large for dense adjacency");
  std::unordered_map<std::uint64_t, Vertex> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<Vertex>(i));
  RemappedGraph out{Graph(ids.size()), ids};
  for (auto [u, v] : raw.pairs) out.graph.add_edge(index.at(u), index.at(v));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace pentagon
