#include <algorithm>
#include <array>
#include <map>

#include "pentagon/census.hpp"
#include "pentagon/error.hpp"
#include "pentagon/hypergraph.hpp"

namespace pentagon::hyper {
namespace {

bool triple_in_edge(const Hypergraph& h, Vertex a, Vertex b, Vertex c) {
  const std::array<Vertex, 3> vs{a, b, c};
  return h.edge_containing(vs).has_value();
}

void require_girth6(const Hypergraph& h) {
  const GirthResult g = berge_girth(h, 6);
  if (!g.at_least_cap()) {
    throw StructuralError("hypergraph has a Berge cycle of length " + std::to_string(g.girth()) + " (girth 6 required)",
                          std::vector<std::uint32_t>(g.cycle->vertices.begin(), g.cycle->vertices.end()));
  }
}

}  // namespace

ShadowCensus three_path_census(const Hypergraph& h) {
  ShadowCensus out;
  out.shadow = shadow(h);
  const Graph& s = out.shadow;
  if (s.n() > 0) {
    out.d_shadow = 2.0 * static_cast<double>(s.edge_count()) / static_cast<double>(s.n());
    for (Vertex v = 0; v < s.n(); ++v) out.d_shadow_max = std::max(out.d_shadow_max, s.degree(v));
  }
  out.ordered_walks3 = census::count_walks(s, 3);
  // Pivot on the ordered middle edge (v1, v2).
  for (Vertex v1 = 0; v1 < s.n(); ++v1) {
    s.for_each_neighbor(v1, [&](Vertex v2) {
      Count left = 0;
      Count left_good = 0;
      Count right = 0;
      Count right_good = 0;
      Count common = 0;
      Count common_good = 0;
      s.for_each_neighbor(v1, [&](Vertex v0) {
        if (v0 == v2) return;
        ++left;
        const bool bad = triple_in_edge(h, v0, v1, v2);
        if (!bad) ++left_good;
        if (s.has_edge(v0, v2)) {
          ++common;
          if (!bad) ++common_good;
        }
      });
      s.for_each_neighbor(v2, [&](Vertex v3) {
        if (v3 == v1) return;
        ++right;
        if (!triple_in_edge(h, v1, v2, v3)) ++right_good;
      });
      const Count all = left * right - common;
      const Count good = left_good * right_good - common_good;
      out.good3 = checked_add(out.good3, good);
      out.bad3 = checked_add(out.bad3, all - good);
    });
  }
  return out;
}

CycleContainmentReport cycle_containment_check(const Hypergraph& h) {
  require_girth6(h);
  const Graph s = shadow(h);
  CycleContainmentReport out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(s.n(), false);
  // Canonical cycles: path[0] is the minimum and path[1] < path.back().
  auto close = [&]() {
    if (path.size() < 3 || path[1] > path.back() || !s.has_edge(path.back(), path[0])) return;
    ++out.cycles_checked;
    if (!h.edge_containing(path).has_value()) out.violations.push_back(path);
  };
  auto grow = [&](auto&& self) -> void {
    close();
    if (path.size() == 5) return;
    s.for_each_neighbor(path.back(), [&](Vertex next) {
      if (next <= path[0] || on_path[next]) return;
      on_path[next] = true;
      path.push_back(next);
      self(self);
      path.pop_back();
      on_path[next] = false;
    });
  };
  for (Vertex v = 0; v < s.n(); ++v) {
    path = {v};
    on_path[v] = true;
    grow(grow);
    on_path[v] = false;
  }
  return out;
}

HyperedgePathReport hyperedge_3path_bound_report(const Hypergraph& h) {
  require_girth6(h);
  const Graph s = shadow(h);
  HyperedgePathReport out;
  std::vector<std::uint64_t> per_target(h.n(), 0);
  std::vector<Vertex> touched;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto members = h.edge(e);
    for (Vertex v0 : members) {
      for (Vertex v1 : members) {
        if (v0 == v1) continue;
        s.for_each_neighbor(v1, [&](Vertex v2) {
          if (v2 == v0 || triple_in_edge(h, v0, v1, v2)) return;
          s.for_each_neighbor(v2, [&](Vertex v) {
            if (v == v0 || v == v1 || h.contains(e, v)) return;
            if (triple_in_edge(h, v1, v2, v)) return;
            if (per_target[v]++ == 0) touched.push_back(v);
          });
        });
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Vertex v : touched) {
      out.counts.push_back({e, v, per_target[v]});
      out.max_count = std::max(out.max_count, per_target[v]);
      per_target[v] = 0;
    }
    touched.clear();
  }
  return out;
}

}  // namespace pentagon::hyper
