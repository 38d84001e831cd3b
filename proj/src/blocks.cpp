#include "pentagon/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>

#include "pentagon/error.hpp"

namespace pentagon::blocks {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest index is the root
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t key(const Graph& g, Edge e) { return static_cast<std::uint64_t>(e.u) * g.n() + e.v; }

std::array<Edge, 3> triangle_edges(const Triangle& t) {
  return {Edge{t.a, t.b}, Edge{t.a, t.c}, Edge{t.b, t.c}};
}

std::string edge_name(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::vector<std::uint32_t> as_witness(std::span<const Vertex> vs) { return {vs.begin(), vs.end()}; }

Block classify(std::vector<Triangle> triangles) {
  Block b;
  b.triangles = std::move(triangles);
  std::vector<Vertex> verts;
  for (const Triangle& t : b.triangles) {
    verts.insert(verts.end(), {t.a, t.b, t.c});
    for (Edge e : triangle_edges(t)) b.edges.push_back(e);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::sort(b.edges.begin(), b.edges.end());
  b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());

  const Triangle& first = b.triangles.front();
  if (b.triangles.size() == 1) {
    b.kind = BlockKind::Crown;
    b.base = Edge{first.a, first.b};
    b.vertices = {first.c};
    return b;
  }
  for (Edge candidate : triangle_edges(first)) {
    bool shared = std::all_of(b.triangles.begin(), b.triangles.end(), [&](const Triangle& t) {
      auto es = triangle_edges(t);
      return std::find(es.begin(), es.end(), candidate) != es.end();
    });
    if (!shared) continue;
    b.kind = BlockKind::Crown;
    b.base = candidate;
    for (const Triangle& t : b.triangles) {
      for (Vertex v : {t.a, t.b, t.c}) {
        if (v != candidate.u && v != candidate.v) b.vertices.push_back(v);
      }
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    return b;
  }
  if (b.triangles.size() == 4 && verts.size() == 4) {
    b.kind = BlockKind::K4;
    b.vertices = verts;
    return b;
  }
  b.kind = BlockKind::Other;
  b.vertices = verts;
  return b;
}

}  // namespace

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Crown: return "crown";
    case BlockKind::K4: return "k4";
    case BlockKind::Other: return "other";
  }
  return "?";
}

std::vector<Block> triangle_blocks(const Graph& g) {
  const auto triangles = census::triangle_census(g).triangles;
  DisjointSets sets(triangles.size());
  std::unordered_map<std::uint64_t, std::size_t> owner;
  owner.reserve(triangles.size() * 3);
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (Edge e : triangle_edges(triangles[i])) {
      auto [it, inserted] = owner.emplace(key(g, e), i);
      if (!inserted) sets.unite(it->second, i);
    }
  }
  std::vector<std::vector<Triangle>> groups;
  std::vector<std::size_t> slot(triangles.size(), SIZE_MAX);
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == SIZE_MAX) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].push_back(triangles[i]);
  }
  std::vector<Block> out;
  out.reserve(groups.size());
  for (auto& group : groups) out.push_back(classify(std::move(group)));
  return out;
}

std::vector<Edge> part_edges(const TwoPathPart& p) { return {make_edge(p.a, p.c), make_edge(p.c, p.b)}; }

std::vector<Edge> part_edges(const Triangle& t) {
  auto es = triangle_edges(t);
  return {es.begin(), es.end()};
}

std::vector<Edge> part_edges(const std::array<Vertex, 4>& k) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) out.push_back(make_edge(k[i], k[j]));
  }
  return out;
}

EdgeDecomposition edge_decomposition(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.common_neighbor_count(e.u, e.v) == 0) {
      throw PreconditionError("edge " + edge_name(e) + " lies in no triangle");
    }
  }
  EdgeDecomposition d;
  d.edge_total = g.edge_count();
  for (const Block& b : triangle_blocks(g)) {
    switch (b.kind) {
      case BlockKind::Crown: {
        const Vertex a = b.base.u;
        const Vertex c1 = b.vertices.front();
        std::array<Vertex, 3> tri{a, b.base.v, c1};
        std::sort(tri.begin(), tri.end());
        d.triangles.push_back({tri[0], tri[1], tri[2]});
        for (std::size_t i = 1; i < b.vertices.size(); ++i) d.two_paths.push_back({a, b.vertices[i], b.base.v});
        break;
      }
      case BlockKind::K4:
        d.k4s.push_back({b.vertices[0], b.vertices[1], b.vertices[2], b.vertices[3]});
        break;
      case BlockKind::Other: {
        auto c5 = census::find_c5(g.with_edges(b.edges));
        if (!c5) c5 = census::find_c5(g);
        std::vector<std::uint32_t> witness = c5 ? as_witness(*c5) : as_witness(b.vertices);
        throw StructuralError("block is neither a crown nor a K4; the graph contains a C5", std::move(witness));
      }
    }
  }
  if (d.edge_total > 0) {
    const auto e = static_cast<double>(d.edge_total);
    d.alpha1 = 3.0 * static_cast<double>(d.triangles.size()) / e;
    d.alpha2 = 2.0 * static_cast<double>(d.two_paths.size()) / e;
    d.alpha3 = 6.0 * static_cast<double>(d.k4s.size()) / e;
  }
  return d;
}

TriangleSplit split_triangle_edges(const Graph& g) {
  TriangleSplit s{Graph(g.n()), Graph(g.n())};
  for (const Edge& e : g.edges()) {
    Graph& target = g.common_neighbor_count(e.u, e.v) > 0 ? s.g_delta : s.g_s;
    target.add_edge(e.u, e.v);
  }
  return s;
}

std::pair<Graph, ReductionLog> triangle_core_reduction(const Graph& g) {
  ReductionLog log;
  std::vector<std::uint64_t> t = census::triangle_degrees(g);
  std::vector<bool> alive(g.n(), true);
  std::uint64_t sum = std::accumulate(t.begin(), t.end(), std::uint64_t{0});
  std::size_t remaining = g.n();
  log.t_before = g.n() == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(g.n());

  while (remaining > 0) {
    // t(v) < t/3  <=>  3 * remaining * t(v) < sum
    std::optional<Vertex> victim;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!alive[v]) continue;
      if (3 * remaining * t[v] >= sum) continue;
      if (!victim || t[v] < t[*victim]) victim = v;
    }
    if (!victim) break;
    const Vertex v = *victim;
    std::vector<Vertex> nbrs;
    g.for_each_neighbor(v, [&](Vertex u) {
      if (alive[u]) nbrs.push_back(u);
    });
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.has_edge(nbrs[i], nbrs[j])) {
          --t[nbrs[i]];
          --t[nbrs[j]];
        }
      }
    }
    sum -= 3 * t[v];
    t[v] = 0;
    alive[v] = false;
    --remaining;
    log.removed.push_back(v);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (alive[v]) log.kept.push_back(v);
  }
  log.t_after = remaining == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(remaining);
  return {g.induced(log.kept), std::move(log)};
}

Graph extract_c4_free_subgraph(const Graph& g) {
  if (auto c5 = census::find_c5(g)) throw StructuralError("graph contains a C5", as_witness(*c5));
  if (auto c4 = census::find_induced_c4(g)) throw StructuralError("graph contains an induced C4", as_witness(*c4));
  const TriangleSplit split = split_triangle_edges(g);
  Graph out = split.g_s;
  for (const Block& b : triangle_blocks(g)) {
    if (b.kind == BlockKind::Crown) {
      out.add_edge(b.base.u, b.base.v);
      for (Vertex c : b.vertices) out.add_edge(b.base.u, c);
    } else if (b.kind == BlockKind::K4) {
      const auto& v = b.vertices;
      out.add_edge(v[0], v[1]);
      out.add_edge(v[1], v[2]);
      out.add_edge(v[0], v[2]);
      out.add_edge(v[0], v[3]);
    }
  }
  return out;
}

std::vector<census::Cycle4> cross_block_four_cycles(const Graph& g) {
  std::unordered_map<std::uint64_t, std::size_t> block_of;
  const auto blocks = triangle_blocks(g);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Edge e : blocks[i].edges) block_of.emplace(key(g, e), i);
  }
  auto block_id = [&](Vertex a, Vertex b) -> std::size_t {
    auto it = block_of.find(key(g, make_edge(a, b)));
    return it == block_of.end() ? SIZE_MAX : it->second;
  };
  std::vector<census::Cycle4> out;
  for (Vertex v0 = 0; v0 < g.n(); ++v0) {
    g.for_each_neighbor(v0, [&](Vertex v1) {
      if (v1 <= v0) return;
      g.for_each_neighbor(v1, [&](Vertex v2) {
        if (v2 <= v0) return;
        g.for_each_neighbor(v2, [&](Vertex v3) {
          if (v3 <= v1 || !g.has_edge(v3, v0)) return;
          const std::size_t id = block_id(v0, v1);
          if (id == SIZE_MAX || block_id(v1, v2) != id || block_id(v2, v3) != id || block_id(v3, v0) != id) {
            out.push_back({v0, v1, v2, v3});
          }
        });
      });
    });
  }
  return out;
}

}  // namespace pentagon::blocks
