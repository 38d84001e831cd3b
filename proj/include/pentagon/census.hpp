#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pentagon/count.hpp"
#include "pentagon/graph.hpp"

namespace pentagon::census {

/// Vertex triple with a < b < c.
struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  auto operator<=>(const Triangle&) const = default;
};

struct TriangleCensus {
  std::vector<Triangle> triangles;        // lexicographic order
  std::vector<std::uint64_t> per_vertex;  // t(v)
  double average = 0.0;                   // t = sum t(v) / n
  std::uint64_t total = 0;
};

TriangleCensus triangle_census(const Graph& g);

/// t(v) for every vertex, without materialising the triangle list.
std::vector<std::uint64_t> triangle_degrees(const Graph& g);

using Cycle4 = std::array<Vertex, 4>;
using Cycle5 = std::array<Vertex, 5>;

// Cycle witnesses are canonical: the first vertex is the smallest, and the
// second is smaller than the last. Detectors return the lexicographically
// least canonical witness.
std::optional<Cycle4> find_c4(const Graph& g);
std::optional<Cycle4> find_induced_c4(const Graph& g);
std::optional<Cycle5> find_c5(const Graph& g);

/// Would adding the (absent) edge uv create a C5, i.e. is there a path
/// u-a-b-c-v on five distinct vertices?
bool edge_closes_c5(const Graph& g, Vertex u, Vertex v);

struct ForbiddenSubgraphReport {
  std::optional<Cycle4> c4;
  std::optional<Cycle5> c5;
  std::optional<Cycle4> induced_c4;

  bool contains_c4() const { return c4.has_value(); }
  bool contains_c5() const { return c5.has_value(); }
  bool contains_induced_c4() const { return induced_c4.has_value(); }
};

ForbiddenSubgraphReport forbidden_subgraphs(const Graph& g);

bool is_cycle(const Graph& g, std::span<const Vertex> cycle);
bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Ordered walks v0..vk. Throws OverflowError instead of wrapping.
Count count_walks(const Graph& g, unsigned k);

struct FivePathCensus {
  Count good = 0;            // unordered good 5-paths
  Count bad = 0;             // unordered bad 5-paths
  Count ordered_walks5 = 0;  // ordered 5-walks

  Count paths() const { return good + bad; }
  /// Ordered 5-walks that repeat a vertex.
  Count ordered_nonpath_walks5() const { return ordered_walks5 - 2 * paths(); }
};

/// A 5-path is bad when some three consecutive vertices span a triangle.
FivePathCensus five_path_census(const Graph& g);

/// Unordered 5-path counts attributed to the middle edge, aligned with
/// g.edges().
struct MiddleEdgeCounts {
  std::vector<Edge> edges;
  std::vector<Count> good;
  std::vector<Count> all;
};

MiddleEdgeCounts five_paths_by_middle_edge(const Graph& g);

struct TwoPathViolation {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> common;
};

/// Non-adjacent pairs that break "at most two 2-paths, and their middles are
/// adjacent".
struct TwoPathReport {
  std::vector<TwoPathViolation> count_violations;      // >= 3 common neighbours
  std::vector<TwoPathViolation> adjacency_violations;  // exactly 2, non-adjacent

  bool empty() const { return count_violations.empty() && adjacency_violations.empty(); }
};

TwoPathReport two_path_report(const Graph& g);

}  // namespace pentagon::census
