#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pentagon {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1 with a dense bit-matrix
/// adjacency. Rows are padded to whole 64-bit words.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t words() const noexcept { return words_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::size_t degree(Vertex v) const { return degree_[v]; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// Returns false if the edge was already present. Throws on loops and
  /// out-of-range endpoints.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::vector<Vertex> neighbors(Vertex v) const;
  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t common_neighbor_count(Vertex u, Vertex v) const;

  /// Subgraph induced on `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;
  /// Same vertex set, only the listed edges.
  Graph with_edges(std::span<const Edge> edges) const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      }
    }
  }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degree_;
};

struct DegreeStats {
  std::vector<std::size_t> degrees;
  double average = 0.0;
  std::size_t maximum = 0;
  std::size_t minimum = 0;
};

/// Throws DomainError for the empty vertex set (average undefined).
DegreeStats degree_stats(const Graph& g);

struct Neighborhoods {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// First and second neighbourhood of v (distance exactly 1 and exactly 2).
Neighborhoods neighborhoods(const Graph& g, Vertex v);

// Edge-list text: one "u v" pair per line, '#' starts a comment, an optional
// "n=<k>" line fixes the vertex count. Duplicate pairs collapse.
Graph parse_edge_list(std::string_view text);

struct RemappedGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;  // original_ids[i] is the label of vertex i
};

/// Accepts arbitrary non-negative ids and renumbers them densely in
/// increasing order of the original label.
RemappedGraph parse_edge_list_remapped(std::string_view text);

std::string to_edge_list(const Graph& g);

}  // namespace pentagon
