#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "pentagon/census.hpp"
#include "pentagon/graph.hpp"

namespace pentagon::blocks {

using census::Triangle;

enum class BlockKind { Crown, K4, Other };

const char* to_string(BlockKind kind);

/// A maximal family of triangles connected through shared edges.
///
/// Crown: every triangle contains `base`; `vertices` holds the tips in
/// increasing order. A single triangle is a crown whose base is its two
/// smallest vertices. K4: `vertices` holds the four vertices. Other: neither
/// shape (only possible when the graph contains a C5); `vertices` holds every
/// vertex of the block.
struct Block {
  BlockKind kind = BlockKind::Other;
  Edge base{};
  std::vector<Vertex> vertices;
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;
};

/// Blocks ordered by their smallest triangle. Pairwise edge-disjoint.
std::vector<Block> triangle_blocks(const Graph& g);

/// The 2-path a-c-b of a crown with base ab and tip c.
struct TwoPathPart {
  Vertex a = 0;
  Vertex c = 0;
  Vertex b = 0;
};

/// Partition of the edges into 2-paths, triangles and K4s. Each crown with
/// tips c1 < ... < ck contributes the triangle a b c1 and the 2-paths a-ci-b.
struct EdgeDecomposition {
  std::vector<TwoPathPart> two_paths;
  std::vector<Triangle> triangles;
  std::vector<std::array<Vertex, 4>> k4s;
  std::size_t edge_total = 0;

  // Fractions of edge_total in triangles, 2-paths and K4s.
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;

  double alpha() const { return alpha1 + alpha2; }
  std::size_t covered_edges() const { return 3 * triangles.size() + 2 * two_paths.size() + 6 * k4s.size(); }
};

/// Requires every edge to lie in a triangle (PreconditionError naming the
/// edge) and every block to be a crown or a K4 (StructuralError with a C5).
EdgeDecomposition edge_decomposition(const Graph& g);

/// Edges of each part of the decomposition, in the part's listed order.
std::vector<Edge> part_edges(const TwoPathPart& p);
std::vector<Edge> part_edges(const Triangle& t);
std::vector<Edge> part_edges(const std::array<Vertex, 4>& k);

struct TriangleSplit {
  Graph g_delta;  // edges lying in at least one triangle
  Graph g_s;      // the rest
};

TriangleSplit split_triangle_edges(const Graph& g);

struct ReductionLog {
  std::vector<Vertex> removed;  // original ids in deletion order
  std::vector<Vertex> kept;     // kept[i] is the original id of vertex i of the result
  double t_before = 0.0;
  double t_after = 0.0;
};

/// Repeatedly deletes the vertex with the smallest t(v) (ties: smallest id)
/// while some vertex has t(v) < t/3, recomputing t after every deletion.
std::pair<Graph, ReductionLog> triangle_core_reduction(const Graph& g);

/// All edges of g_s, the star {ab, ac1, ..., ack} of every crown (a is the
/// smaller base vertex) and {ab, bc, ac, ad} of every K4 (d is the largest
/// vertex). Requires g to be C5-free and induced-C4-free.
Graph extract_c4_free_subgraph(const Graph& g);

/// 4-cycles whose four edges do not all lie in a single block.
std::vector<census::Cycle4> cross_block_four_cycles(const Graph& g);

}  // namespace pentagon::blocks
