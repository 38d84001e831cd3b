#include "pentagon/middle_edge.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "pentagon/error.hpp"

namespace pentagon::census {
namespace {

std::uint64_t key(const Graph& g, Edge e) { return static_cast<std::uint64_t>(e.u) * g.n() + e.v; }

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void fill_anchors(const Graph& g, PartCensus& part, std::vector<std::uint64_t>& per_target) {
  std::vector<Vertex> touched;
  auto inside = [&](Vertex v) {
    return std::find(part.vertices.begin(), part.vertices.end(), v) != part.vertices.end();
  };
  part.anchors.assign(part.vertices.size(), 0);
  for (std::size_t i = 0; i < part.vertices.size(); ++i) {
    const Vertex p = part.vertices[i];
    g.for_each_neighbor(p, [&](Vertex x) {
      if (inside(x)) return;
      g.for_each_neighbor(x, [&](Vertex y) {
        if (y == p || inside(y) || g.has_edge(p, y)) return;
        ++part.anchors[i];
        if (per_target[y]++ == 0) touched.push_back(y);
      });
    });
  }
  part.max_paths_per_target = 0;
  for (Vertex y : touched) {
    part.max_paths_per_target = std::max(part.max_paths_per_target, per_target[y]);
    per_target[y] = 0;
  }
}

Count pair_product(const PartCensus& part) {
  const auto& n = part.anchors;
  auto c = [](std::uint64_t v) { return static_cast<Count>(v); };
  switch (part.kind) {
    case PartKind::TwoPath: return c(n[1]) * (c(n[0]) + c(n[2]));
    case PartKind::Triangle: return c(n[0]) * c(n[1]) + c(n[1]) * c(n[2]) + c(n[2]) * c(n[0]);
    case PartKind::SingleEdge: return c(n[0]) * c(n[1]);
    case PartKind::K4: {
      Count s = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) s += c(n[i]) * c(n[j]);
      }
      return s;
    }
  }
  return 0;
}

}  // namespace

const char* to_string(PartKind kind) {
  switch (kind) {
    case PartKind::TwoPath: return "two_path";
    case PartKind::Triangle: return "triangle";
    case PartKind::K4: return "k4";
    case PartKind::SingleEdge: return "single_edge";
  }
  return "?";
}

bool within_cap(PartKind kind, Count good_paths, std::size_t n) {
  const Count n2 = static_cast<Count>(n) * static_cast<Count>(n);
  switch (kind) {
    case PartKind::TwoPath:
    case PartKind::SingleEdge: return good_paths <= n2;
    case PartKind::Triangle: return 3 * good_paths <= 4 * n2;
    case PartKind::K4: return 2 * good_paths <= 3 * n2;
  }
  return false;
}

MiddleEdgeCensus middle_edge_census(const Graph& g, const blocks::EdgeDecomposition& d,
                                    std::span<const Edge> gs) {
  MiddleEdgeCounts by_edge = five_paths_by_middle_edge(g);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < by_edge.edges.size(); ++i) index.emplace(key(g, by_edge.edges[i]), i);

  // Every triangle edge exactly once in d, gs disjoint and triangle-free.
  std::vector<int> uses(by_edge.edges.size(), 0);
  auto claim = [&](Edge e, bool from_gs) {
    auto it = index.find(key(g, e));
    if (it == index.end()) throw PreconditionError("decomposition edge " + edge_name(e) + " is not an edge of the graph");
    const bool in_triangle = g.common_neighbor_count(e.u, e.v) > 0;
    if (from_gs && in_triangle) throw PreconditionError("G_S edge " + edge_name(e) + " lies in a triangle");
    if (++uses[it->second] > 1) throw PreconditionError("edge " + edge_name(e) + " is covered more than once");
  };
  MiddleEdgeCensus out;
  out.n = g.n();
  std::vector<std::pair<PartCensus, std::vector<Edge>>> parts;
  for (const auto& p : d.two_paths) parts.push_back({{PartKind::TwoPath, {p.a, p.c, p.b}}, blocks::part_edges(p)});
  for (const auto& t : d.triangles) parts.push_back({{PartKind::Triangle, {t.a, t.b, t.c}}, blocks::part_edges(t)});
  for (const auto& k : d.k4s) parts.push_back({{PartKind::K4, {k.begin(), k.end()}}, blocks::part_edges(k)});
  for (const auto& e : gs) parts.push_back({{PartKind::SingleEdge, {e.u, e.v}}, {make_edge(e.u, e.v)}});
  for (auto& [part, edges] : parts) {
    for (Edge e : edges) claim(e, part.kind == PartKind::SingleEdge);
  }
  for (std::size_t i = 0; i < by_edge.edges.size(); ++i) {
    const Edge e = by_edge.edges[i];
    if (uses[i] == 0 && g.common_neighbor_count(e.u, e.v) > 0) {
      throw PreconditionError("triangle edge " + edge_name(e) + " is not covered by the decomposition");
    }
  }

  std::vector<std::uint64_t> per_target(g.n(), 0);
  for (auto& [part, edges] : parts) {
    fill_anchors(g, part, per_target);
    for (Edge e : edges) part.good_paths = checked_add(part.good_paths, by_edge.good[index.at(key(g, e))]);
    part.pair_product = pair_product(part);
    part.within_cap = within_cap(part.kind, part.good_paths, g.n());
    out.total_good = checked_add(out.total_good, part.good_paths);
    out.all_within_cap = out.all_within_cap && part.within_cap;
    out.anchor_cap_holds = out.anchor_cap_holds && part.max_paths_per_target <= 2;
    out.pair_product_holds = out.pair_product_holds && part.good_paths <= part.pair_product;
    out.parts.push_back(std::move(part));
  }
  return out;
}

}  // namespace pentagon::census
