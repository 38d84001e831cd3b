#pragma once

#include <span>
#include <vector>

#include "pentagon/blocks.hpp"
#include "pentagon/count.hpp"
#include "pentagon/graph.hpp"

namespace pentagon::census {

enum class PartKind { TwoPath, Triangle, K4, SingleEdge };

const char* to_string(PartKind kind);

struct PartCensus {
  PartKind kind = PartKind::SingleEdge;
  /// TwoPath: {a, c, b} with c the middle vertex. SingleEdge: {u, v}.
  std::vector<Vertex> vertices;
  /// anchors[i]: good 2-paths vertices[i]-x-y with x, y outside the part.
  std::vector<std::uint64_t> anchors;
  /// Largest number, over targets y outside the part, of good 2-paths p-x-y
  /// with p in the part and x outside it.
  std::uint64_t max_paths_per_target = 0;
  /// Good 5-paths whose middle edge is an edge of this part.
  Count good_paths = 0;
  /// Sum of anchor products over the middle-edge choices.
  Count pair_product = 0;
  bool within_cap = false;
};

/// Per-part caps: n^2 for a 2-path or a single edge, 4n^2/3 for a triangle,
/// 3n^2/2 for a K4.
struct MiddleEdgeCensus {
  std::size_t n = 0;
  std::vector<PartCensus> parts;
  Count total_good = 0;
  bool all_within_cap = true;
  bool anchor_cap_holds = true;  // every max_paths_per_target <= 2
  bool pair_product_holds = true;
};

bool within_cap(PartKind kind, Count good_paths, std::size_t n);

/// `d` must decompose exactly the edges of g that lie in triangles; `gs` must
/// consist of edges of g lying in no triangle (may be empty). Throws
/// PreconditionError otherwise.
MiddleEdgeCensus middle_edge_census(const Graph& g, const blocks::EdgeDecomposition& d,
                                    std::span<const Edge> gs);

}  // namespace pentagon::census
