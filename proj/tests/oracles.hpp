// Slow, obviously-correct reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "pentagon/count.hpp"
#include "pentagon/graph.hpp"
#include "pentagon/hypergraph.hpp"

namespace oracle {

using pentagon::Count;
using pentagon::Edge;
using pentagon::Graph;
using pentagon::Vertex;

inline std::uint64_t triangles(const Graph& g) {
  std::uint64_t t = 0;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) ++t;
  return t;
}

inline bool is_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
  return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
}

// Ordered simple paths with `len` edges, fed to `f` as a vertex vector.
template <class F>
void for_each_path(const Graph& g, std::size_t len, F&& f) {
  std::vector<Vertex> path;
  std::vector<char> used(g.n(), 0);
  auto dfs = [&](auto&& self, Vertex v) -> void {
    path.push_back(v);
    used[v] = 1;
    if (path.size() == len + 1) {
      f(path);
    } else {
      for (Vertex w = 0; w < g.n(); ++w) {
        if (!used[w] && g.has_edge(v, w)) self(self, w);
      }
    }
    used[v] = 0;
    path.pop_back();
  };
  for (Vertex v = 0; v < g.n(); ++v) dfs(dfs, v);
}

struct FivePaths {
  Count good = 0;  // unordered
  Count bad = 0;
  std::map<Edge, Count> good_by_middle;  // unordered good paths per middle edge
};

inline FivePaths five_paths(const Graph& g) {
  FivePaths out;
  Count good2 = 0;
  Count bad2 = 0;
  std::map<Edge, Count> by2;
  for_each_path(g, 5, [&](const std::vector<Vertex>& p) {
    bool bad = false;
    for (int i = 0; i + 2 < 6; ++i) bad = bad || is_triangle(g, p[i], p[i + 1], p[i + 2]);
    if (bad) {
      ++bad2;
    } else {
      ++good2;
      ++by2[pentagon::make_edge(p[2], p[3])];
    }
  });
  out.good = good2 / 2;
  out.bad = bad2 / 2;
  for (auto& [e, c] : by2) out.good_by_middle[e] = c / 2;
  return out;
}

inline Count walks(const Graph& g, unsigned k) {
  std::vector<Count> ends(g.n(), 1);
  for (unsigned step = 0; step < k; ++step) {
    std::vector<Count> next(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
      for (Vertex w = 0; w < g.n(); ++w)
        if (g.has_edge(v, w)) next[w] += ends[v];
    ends = std::move(next);
  }
  Count s = 0;
  for (Count c : ends) s += c;
  return s;
}

// Any cycle of length k as a subgraph (k = 4 or 5), by brute DFS.
inline bool has_cycle(const Graph& g, std::size_t k) {
  bool found = false;
  for_each_path(g, k - 1, [&](const std::vector<Vertex>& p) {
    if (g.has_edge(p.front(), p.back())) found = true;
  });
  return found;
}

inline bool has_induced_c4(const Graph& g) {
  bool found = false;
  for_each_path(g, 3, [&](const std::vector<Vertex>& p) {
    if (g.has_edge(p[0], p[3]) && !g.has_edge(p[0], p[2]) && !g.has_edge(p[1], p[3])) found = true;
  });
  return found;
}

// Length of the shortest cycle, 0 if acyclic. BFS from every vertex.
inline std::size_t girth(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1);
    std::vector<int> parent(g.n(), -1);
    std::deque<Vertex> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop_front();
      for (Vertex w = 0; w < g.n(); ++w) {
        if (!g.has_edge(v, w)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = static_cast<int>(v);
          q.push_back(w);
        } else if (parent[v] != static_cast<int>(w)) {
          const std::size_t len = static_cast<std::size_t>(dist[v] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// Berge girth through the vertex/hyperedge incidence graph: a Berge cycle of
// length k is a cycle of length 2k there. Returns 0 when there is none.
inline std::size_t berge_girth(const pentagon::hyper::Hypergraph& h) {
  const std::size_t n = h.n();
  Graph inc(n + h.edge_count());
  for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
    for (Vertex v : h.edge(e)) inc.add_edge(v, static_cast<Vertex>(n + e));
  }
  return girth(inc) / 2;
}

inline bool inside_one_edge(const pentagon::hyper::Hypergraph& h, std::vector<Vertex> vs) {
  for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
    auto es = h.edge(e);
    if (std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return std::find(es.begin(), es.end(), v) != es.end(); })) {
      return true;
    }
  }
  return false;
}

struct ThreePaths {
  Count good = 0;  // ordered
  Count bad = 0;
};

inline ThreePaths three_paths(const pentagon::hyper::Hypergraph& h, const Graph& shadow) {
  ThreePaths out;
  for_each_path(shadow, 3, [&](const std::vector<Vertex>& p) {
    const bool bad = inside_one_edge(h, {p[0], p[1], p[2]}) || inside_one_edge(h, {p[1], p[2], p[3]});
    ++(bad ? out.bad : out.good);
  });
  return out;
}

// Is there a family of k triples on n vertices with no Berge cycle shorter
// than 6? Tries every k-subset of triples.
inline bool girth6_family_exists(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> triples;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == k) {
      pentagon::hyper::Hypergraph h(n, 3);
      for (std::size_t i : pick) h.add_edge(triples[i]);
      const std::size_t gi = oracle::berge_girth(h);
      return gi == 0 || gi >= 6;
    }
    for (std::size_t i = from; i < triples.size(); ++i) {
      pick.push_back(i);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

inline std::uint64_t max_girth6_triples(std::size_t n) {
  std::uint64_t k = 0;
  while (girth6_family_exists(n, k + 1)) ++k;
  return k;
}

}  // namespace oracle
