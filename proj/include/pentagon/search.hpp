#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pentagon/graph.hpp"
#include "pentagon/hypergraph.hpp"

namespace pentagon::search {

enum class Objective { Triangles, Edges, Hyperedges };

const char* to_string(Objective objective);
Objective parse_objective(std::string_view name);

struct ExactResult {
  Objective objective = Objective::Triangles;
  std::size_t n = 0;
  std::uint64_t value = 0;
  std::optional<Graph> graph;                // Triangles, Edges
  std::optional<hyper::Hypergraph> hypergraph;  // Hyperedges
  std::uint64_t graphs_examined = 0;
  std::string strategy;
};

inline constexpr std::size_t kMaxExactGraphOrder = 8;
inline constexpr std::size_t kMaxLabeledGraphOrder = 6;
inline constexpr std::size_t kMaxExactHypergraphOrder = 9;

// Vertex-by-vertex augmentation with isomorphism rejection by canonical form.
// Both constraints are closed under deleting vertices, so every admissible
// graph on k+1 vertices extends an admissible one on k vertices. The witness
// is the canonical form (largest adjacency code) with the best value and,
// among those, the smallest code. BudgetError above kMaxExactGraphOrder.
ExactResult exact_max_triangles_c5free(std::size_t n);
ExactResult exact_max_edges_indc4c5(std::size_t n);

// Every labelled graph on n <= kMaxLabeledGraphOrder vertices.
ExactResult labeled_max_triangles_c5free(std::size_t n);
ExactResult labeled_max_edges_indc4c5(std::size_t n);

/// Include/exclude backtracking over triples in lexicographic order, with
/// {0,1,2} fixed as the first edge. n <= kMaxExactHypergraphOrder.
ExactResult exact_max_hyperedges_girth6(std::size_t n);

struct TraceEntry {
  std::uint64_t iteration = 0;
  std::uint64_t triangles = 0;
  std::string move;  // "start", "add" or "swap"
};

struct LocalSearchResult {
  Graph best;
  std::uint64_t triangles = 0;
  std::uint64_t iterations_run = 0;
  bool plateau_stop = false;
  std::vector<TraceEntry> trace;  // one entry per strict improvement
};

inline constexpr std::uint64_t kPlateauLimit = 1000;

/// Hill climbing over C5-free graphs on n vertices: add an edge that closes
/// no C5, or swap one edge for another; never accepts a loss. A warm start
/// is truncated (or padded) to n vertices and must be C5-free.
LocalSearchResult local_search_triangles(std::size_t n, std::uint64_t seed, std::uint64_t iterations,
                                         const std::optional<Graph>& warm_start = std::nullopt);

}  // namespace pentagon::search
