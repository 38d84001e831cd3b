#include "pentagon/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "pentagon/blocks.hpp"
#include "pentagon/census.hpp"
#include "pentagon/error.hpp"

namespace pentagon::hyper {

Hypergraph::Hypergraph(std::size_t n, std::size_t r) : n_(n), r_(r), incidence_(n) {
  if (r == 0) throw DomainError("uniformity must be positive");
}

bool Hypergraph::contains(EdgeId e, Vertex v) const {
  auto es = edge(e);
  return std::binary_search(es.begin(), es.end(), v);
}

std::optional<EdgeId> Hypergraph::edge_containing(std::span<const Vertex> vs) const {
  if (vs.empty()) return std::nullopt;
  Vertex pivot = vs[0];
  for (Vertex v : vs) {
    if (v >= n_) return std::nullopt;
    if (degree(v) < degree(pivot)) pivot = v;
  }
  for (EdgeId e : incidence_[pivot]) {
    if (std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return contains(e, v); })) return e;
  }
  return std::nullopt;
}

bool Hypergraph::add_edge(std::span<const Vertex> vs) {
  if (vs.size() != r_) throw DomainError("hyperedge has " + std::to_string(vs.size()) + " vertices, expected " + std::to_string(r_));
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("hyperedge repeats a vertex");
  if (sorted.back() >= n_) throw DomainError("hyperedge vertex out of range");
  if (edge_containing(sorted).has_value()) return false;  // same size, so identical
  const auto id = static_cast<EdgeId>(edge_count());
  verts_.insert(verts_.end(), sorted.begin(), sorted.end());
  for (Vertex v : sorted) incidence_[v].push_back(id);
  return true;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_sets() const {
  std::vector<std::vector<Vertex>> out;
  for (EdgeId e = 0; e < edge_count(); ++e) out.emplace_back(edge(e).begin(), edge(e).end());
  return out;
}

bool is_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
  const std::size_t k = c.vertices.size();
  if (k < 2 || c.edges.size() != k) return false;
  auto vs = c.vertices;
  auto es = c.edges;
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
  if (vs.back() >= h.n() || es.back() >= h.edge_count()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!h.contains(c.edges[i], c.vertices[i]) || !h.contains(c.edges[i], c.vertices[(i + 1) % k])) return false;
  }
  return true;
}

LinearityVerdict is_linear(const Hypergraph& h) {
  LinearityVerdict out;
  for (EdgeId a = 0; a < h.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < h.edge_count(); ++b) {
      auto ea = h.edge(a);
      auto eb = h.edge(b);
      std::size_t shared = 0;
      for (Vertex v : ea) shared += std::binary_search(eb.begin(), eb.end(), v) ? 1 : 0;
      if (shared >= 2) {
        out.linear = false;
        out.witness = std::make_pair(a, b);
        return out;
      }
    }
  }
  return out;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Hypergraph& h, std::size_t k) : h_(h), k_(k), used_edge_(h.edge_count(), false), used_vertex_(h.n(), false) {}

  std::optional<BergeCycle> run() {
    for (Vertex v1 = 0; v1 < h_.n(); ++v1) {
      cycle_.vertices = {v1};
      used_vertex_[v1] = true;
      const bool found = extend(v1);
      used_vertex_[v1] = false;
      if (found) return cycle_;
    }
    return std::nullopt;
  }

 private:
  // cycle_.vertices has j vertices and j-1 edges; choose h_j at the last vertex.
  bool extend(Vertex last) {
    const Vertex first = cycle_.vertices.front();
    const std::size_t j = cycle_.vertices.size();
    for (EdgeId e : h_.incident(last)) {
      if (used_edge_[e]) continue;
      if (j == k_) {
        if (h_.contains(e, first)) {
          cycle_.edges.push_back(e);
          return true;
        }
        continue;
      }
      used_edge_[e] = true;
      cycle_.edges.push_back(e);
      for (Vertex next : h_.edge(e)) {
        if (next <= first || used_vertex_[next]) continue;
        used_vertex_[next] = true;
        cycle_.vertices.push_back(next);
        if (extend(next)) return true;
        cycle_.vertices.pop_back();
        used_vertex_[next] = false;
      }
      cycle_.edges.pop_back();
      used_edge_[e] = false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t k_;
  std::vector<bool> used_edge_;
  std::vector<bool> used_vertex_;
  BergeCycle cycle_;
};

}  // namespace

GirthResult berge_girth(const Hypergraph& h, std::size_t cap) {
  if (cap < 2 || cap > 6) throw DomainError("girth cap must lie in 2..6");
  GirthResult out;
  out.cap = cap;
  for (std::size_t k = 2; k < cap; ++k) {
    if (auto c = CycleSearch(h, k).run()) {
      out.cycle = std::move(c);
      return out;
    }
  }
  return out;
}

bool keeps_girth(const Hypergraph& h, std::span<const Vertex> candidate, std::size_t cap) {
  const std::size_t radius = cap - 2;
  std::vector<int> dist(h.n(), -1);
  std::vector<Vertex> touched;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (Vertex v : touched) dist[v] = -1;
    touched.clear();
    std::deque<Vertex> queue{candidate[i]};
    dist[candidate[i]] = 0;
    touched.push_back(candidate[i]);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (static_cast<std::size_t>(dist[x]) == radius) continue;
      for (EdgeId e : h.incident(x)) {
        for (Vertex y : h.edge(e)) {
          if (dist[y] >= 0) continue;
          dist[y] = dist[x] + 1;
          touched.push_back(y);
          queue.push_back(y);
        }
      }
    }
    for (std::size_t j = 0; j < candidate.size(); ++j) {
      if (j != i && dist[candidate[j]] >= 0) return false;
    }
  }
  return true;
}

Graph shadow(const Hypergraph& h) {
  Graph g(h.n());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    }
  }
  return g;
}

Hypergraph k4_hypergraph(const Graph& g) {
  if (auto c5 = census::find_c5(g)) {
    throw StructuralError("graph contains a C5", std::vector<std::uint32_t>(c5->begin(), c5->end()));
  }
  Hypergraph h(g.n(), 4);
  for (const blocks::Block& b : blocks::triangle_blocks(g)) {
    if (b.kind == blocks::BlockKind::K4) h.add_edge(b.vertices);
  }
  if (!is_linear(h).linear || !berge_girth(h).at_least_cap()) {
    throw Error("K4 hypergraph of a C5-free graph has a Berge cycle shorter than 6");
  }
  return h;
}

double bad_path_constant(unsigned r) {
  if (r < 2) throw DomainError("uniformity must be at least 2");
  const double x = r;
  return 3.0 * x * x * x + 2.0 * x * x * x * x * x / (x - 1.0);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0].starts_with("n=") || toks[0].starts_with("r=")) {
      for (const auto& t : toks) {
        std::size_t value = 0;
        auto body = std::string_view(t).substr(2);
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (ec != std::errc{} || p != body.data() + body.size() || body.empty()) throw ParseError(line_no, "malformed header token '" + t + "'");
        if (t[0] == 'n' && t[1] == '=') n = value;
        else if (t[0] == 'r' && t[1] == '=') r = value;
        else throw ParseError(line_no, "unknown header token '" + t + "'");
      }
      continue;
    }
    std::vector<Vertex> e;
    for (const auto& t : toks) {
      std::uint64_t value = 0;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc{} || p != t.data() + t.size() || value > UINT32_MAX) throw ParseError(line_no, "malformed vertex id '" + t + "'");
      e.push_back(static_cast<Vertex>(value));
    }
    if (!r) r = e.size();
    if (e.size() != *r) throw ParseError(line_no, "hyperedge has " + std::to_string(e.size()) + " vertices, expected r=" + std::to_string(*r));
    edges.push_back(std::move(e));
    lines.push_back(line_no);
  }
  std::size_t max_id = 0;
  for (const auto& e : edges) {
    for (Vertex v : e) max_id = std::max<std::size_t>(max_id, v + 1);
  }
  if (n && max_id > *n) throw ParseError(1, "vertex id exceeds declared n=" + std::to_string(*n));
  if (!r) throw ParseError(1, "empty hypergraph needs an r=<k> header");
  Hypergraph h(n.value_or(max_id), *r);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      h.add_edge(edges[i]);
    } catch (const DomainError& err) {
      throw ParseError(lines[i], err.what());
    }
  }
  return h;
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << "n=" << h.n() << " r=" << h.r() << '\n';
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace pentagon::hyper
