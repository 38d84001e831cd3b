#include "pentagon/graph.hpp"

#include <algorithm>
#include <string>

#include "pentagon/bits.hpp"
#include "pentagon/error.hpp"

namespace pentagon {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), degree_(n, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return false;
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --degree_[u];
  --degree_[v];
  --edge_count_;
  return true;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(degree_[v]);
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](Vertex w) {
      if (u < w) out.push_back({u, w});
    });
  }
  return out;
}

std::size_t Graph::common_neighbor_count(Vertex u, Vertex v) const {
  return bits::popcount_and(row(u), row(v));
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

Graph Graph::with_edges(std::span<const Edge> edges) const { return from_edges(n_, edges); }

DegreeStats degree_stats(const Graph& g) {
  if (g.n() == 0) throw DomainError("average degree undefined on the empty vertex set");
  DegreeStats s;
  s.degrees.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) s.degrees[v] = g.degree(v);
  s.maximum = *std::max_element(s.degrees.begin(), s.degrees.end());
  s.minimum = *std::min_element(s.degrees.begin(), s.degrees.end());
  s.average = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.n());
  return s;
}

Neighborhoods neighborhoods(const Graph& g, Vertex v) {
  Neighborhoods out;
  out.first = g.neighbors(v);
  std::vector<std::uint64_t> reach(g.words(), 0);
  for (Vertex u : out.first) {
    auto r = g.row(u);
    for (std::size_t w = 0; w < reach.size(); ++w) reach[w] |= r[w];
  }
  auto own = g.row(v);
  for (std::size_t w = 0; w < reach.size(); ++w) reach[w] &= ~own[w];
  reach[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  for (Vertex u = 0; u < g.n(); ++u) {
    if (bits::test(reach, u)) out.second.push_back(u);
  }
  return out;
}

}  // namespace pentagon
