#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pentagon/count.hpp"
#include "pentagon/graph.hpp"

namespace pentagon::hyper {

using EdgeId = std::uint32_t;

/// r-uniform hypergraph on 0..n-1. Hyperedges are stored sorted and keep their
/// insertion index; duplicates are refused.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::size_t r);

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return r_ == 0 ? 0 : verts_.size() / r_; }

  std::span<const Vertex> edge(EdgeId e) const { return {verts_.data() + static_cast<std::size_t>(e) * r_, r_}; }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }

  bool contains(EdgeId e, Vertex v) const;
  /// Smallest edge id containing every vertex of `vs`, if any.
  std::optional<EdgeId> edge_containing(std::span<const Vertex> vs) const;

  /// Adds an edge of exactly r distinct in-range vertices (DomainError
  /// otherwise). Returns false and leaves the hypergraph unchanged when the
  /// same vertex set is already an edge.
  bool add_edge(std::span<const Vertex> vs);
  bool add_edge(std::initializer_list<Vertex> vs) { return add_edge(std::span<const Vertex>(vs.begin(), vs.size())); }

  /// Edge vertex sets in insertion order.
  std::vector<std::vector<Vertex>> edge_sets() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<Vertex> verts_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Distinct vertices v1..vk and distinct edges h1..hk with
/// {v_i, v_(i+1 mod k)} contained in h_i.
struct BergeCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

bool is_berge_cycle(const Hypergraph& h, const BergeCycle& c);

struct LinearityVerdict {
  bool linear = true;
  std::optional<std::pair<EdgeId, EdgeId>> witness;  // lexicographically least offending pair
};

LinearityVerdict is_linear(const Hypergraph& h);

struct GirthResult {
  std::size_t cap = 6;
  std::optional<BergeCycle> cycle;  // shortest cycle of length < cap

  bool at_least_cap() const { return !cycle.has_value(); }
  std::size_t girth() const { return cycle ? cycle->vertices.size() : cap; }
};

/// Shortest Berge cycle of length 2..cap-1 (cap <= 6). The witness is the
/// first one met in lexicographic order of (v1, h1, v2, h2, ...), with v1
/// the smallest vertex of the cycle.
GirthResult berge_girth(const Hypergraph& h, std::size_t cap = 6);

/// Assuming h has no Berge cycle shorter than cap, would adding `candidate`
/// keep it that way? True iff no two candidate vertices are within shadow
/// distance cap-2.
bool keeps_girth(const Hypergraph& h, std::span<const Vertex> candidate, std::size_t cap = 6);

/// 2-shadow: uv is an edge iff some hyperedge contains both.
Graph shadow(const Hypergraph& h);

struct ShadowCensus {
  Graph shadow;
  double d_shadow = 0.0;
  std::size_t d_shadow_max = 0;
  Count good3 = 0;  // ordered
  Count bad3 = 0;   // ordered
  Count ordered_walks3 = 0;

  Count paths3() const { return good3 + bad3; }
};

/// A 3-path v0v1v2v3 of the shadow is bad when {v0,v1,v2} or {v1,v2,v3} lies
/// inside one hyperedge.
ShadowCensus three_path_census(const Hypergraph& h);

struct CycleContainmentReport {
  std::size_t cycles_checked = 0;
  std::vector<std::vector<Vertex>> violations;  // shadow cycles not inside one hyperedge
};

/// Every shadow cycle of length 3..5 must sit inside a single hyperedge.
/// Throws StructuralError (with the Berge cycle's vertices) when h has girth
/// below 6.
CycleContainmentReport cycle_containment_check(const Hypergraph& h);

struct HyperedgePathCount {
  EdgeId edge = 0;
  Vertex target = 0;
  std::uint64_t good_paths = 0;
};

struct HyperedgePathReport {
  std::uint64_t max_count = 0;
  std::vector<HyperedgePathCount> counts;  // non-zero entries, ordered by (edge, target)
};

/// For each hyperedge h and vertex v outside h, the number of good ordered
/// 3-paths v0 v1 v2 v with v0, v1 in h. Requires girth >= 6.
HyperedgePathReport hyperedge_3path_bound_report(const Hypergraph& h);

/// One 4-uniform hyperedge per K4 block of a C5-free graph. Throws
/// StructuralError with a C5 witness otherwise.
Hypergraph k4_hypergraph(const Graph& g);

/// c_r = 3 r^3 + 2 r^5 / (r - 1), the lower-order constant in the good
/// 3-path count.
double bad_path_constant(unsigned r);

// Text format: optional "n=<k> r=<r>" header, then one hyperedge per line.
Hypergraph parse_hypergraph(std::string_view text);
std::string to_text(const Hypergraph& h);

}  // namespace pentagon::hyper
