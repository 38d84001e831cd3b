#include "pentagon/census.hpp"

#include <algorithm>
#include <bit>

#include "pentagon/bits.hpp"
#include "pentagon/parallel.hpp"

namespace pentagon::census {
namespace {

/// Bit mask of vertices strictly greater than v.
std::vector<std::uint64_t> above(std::size_t words, Vertex v) {
  std::vector<std::uint64_t> m(words, 0);
  const std::size_t w = (v + 1) >> 6;
  const unsigned b = (v + 1) & 63;
  if (w < words) {
    m[w] = ~std::uint64_t{0} << b;
    for (std::size_t i = w + 1; i < words; ++i) m[i] = ~std::uint64_t{0};
  }
  return m;
}

template <class F>
bool any_bit(std::size_t words, F&& word_at, Vertex& out) {
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t x = word_at(w);
    if (x != 0) {
      out = static_cast<Vertex>(w * 64 + std::countr_zero(x));
      return true;
    }
  }
  return false;
}

inline std::uint64_t bit_of(std::size_t w, Vertex v) {
  return (v >> 6) == w ? std::uint64_t{1} << (v & 63) : 0;
}

}  // namespace

TriangleCensus triangle_census(const Graph& g) {
  TriangleCensus out;
  out.per_vertex.assign(g.n(), 0);
  const std::size_t words = g.words();
  for (Vertex a = 0; a < g.n(); ++a) {
    const auto above_a = above(words, a);
    g.for_each_neighbor(a, [&](Vertex b) {
      if (b <= a) return;
      const auto above_b = above(words, b);
      auto ra = g.row(a);
      auto rb = g.row(b);
      for (std::size_t w = 0; w < words; ++w) {
        for (std::uint64_t x = ra[w] & rb[w] & above_b[w]; x != 0; x &= x - 1) {
          const auto c = static_cast<Vertex>(w * 64 + std::countr_zero(x));
          out.triangles.push_back({a, b, c});
          ++out.per_vertex[a];
          ++out.per_vertex[b];
          ++out.per_vertex[c];
        }
      }
    });
  }
  out.total = out.triangles.size();
  out.average = g.n() == 0 ? 0.0 : 3.0 * static_cast<double>(out.total) / static_cast<double>(g.n());
  return out;
}

std::vector<std::uint64_t> triangle_degrees(const Graph& g) {
  std::vector<std::uint64_t> t(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    std::uint64_t twice = 0;
    g.for_each_neighbor(v, [&](Vertex u) { twice += bits::popcount_and(g.row(u), g.row(v)); });
    t[v] = twice / 2;
  }
  return t;
}

std::optional<Cycle4> find_c4(const Graph& g) {
  const std::size_t words = g.words();
  for (Vertex v0 = 0; v0 < g.n(); ++v0) {
    auto r0 = g.row(v0);
    for (Vertex v1 = v0 + 1; v1 < g.n(); ++v1) {
      if (!g.has_edge(v0, v1)) continue;
      auto r1 = g.row(v1);
      const auto mask1 = above(words, v1);
      for (Vertex v2 = v0 + 1; v2 < g.n(); ++v2) {
        if (!bits::test(r1, v2)) continue;
        auto r2 = g.row(v2);
        Vertex v3 = 0;
        if (any_bit(words, [&](std::size_t w) { return r2[w] & r0[w] & mask1[w]; }, v3)) {
          return Cycle4{v0, v1, v2, v3};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Cycle4> find_induced_c4(const Graph& g) {
  const std::size_t words = g.words();
  for (Vertex v0 = 0; v0 < g.n(); ++v0) {
    auto r0 = g.row(v0);
    for (Vertex v1 = v0 + 1; v1 < g.n(); ++v1) {
      if (!g.has_edge(v0, v1)) continue;
      auto r1 = g.row(v1);
      const auto mask1 = above(words, v1);
      for (Vertex v2 = v0 + 1; v2 < g.n(); ++v2) {
        if (!bits::test(r1, v2) || g.has_edge(v0, v2)) continue;
        auto r2 = g.row(v2);
        Vertex v3 = 0;
        if (any_bit(words, [&](std::size_t w) { return r2[w] & r0[w] & ~r1[w] & mask1[w]; }, v3)) {
          return Cycle4{v0, v1, v2, v3};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Cycle5> find_c5(const Graph& g) {
  const std::size_t words = g.words();
  for (Vertex v0 = 0; v0 < g.n(); ++v0) {
    auto r0 = g.row(v0);
    for (Vertex v1 = v0 + 1; v1 < g.n(); ++v1) {
      if (!g.has_edge(v0, v1)) continue;
      auto r1 = g.row(v1);
      const auto mask1 = above(words, v1);
      for (Vertex v2 = v0 + 1; v2 < g.n(); ++v2) {
        if (!bits::test(r1, v2)) continue;
        auto r2 = g.row(v2);
        for (Vertex v3 = v0 + 1; v3 < g.n(); ++v3) {
          if (v3 == v1 || !bits::test(r2, v3)) continue;
          auto r3 = g.row(v3);
          Vertex v4 = 0;
          if (any_bit(words, [&](std::size_t w) { return r3[w] & r0[w] & mask1[w] & ~bit_of(w, v2); }, v4)) {
            return Cycle5{v0, v1, v2, v3, v4};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool edge_closes_c5(const Graph& g, Vertex u, Vertex v) {
  const std::size_t words = g.words();
  bool found = false;
  g.for_each_neighbor(u, [&](Vertex a) {
    if (found || a == v) return;
    g.for_each_neighbor(v, [&](Vertex c) {
      if (found || c == u || c == a) return;
      auto ra = g.row(a);
      auto rc = g.row(c);
      for (std::size_t w = 0; w < words && !found; ++w) {
        if (ra[w] & rc[w] & ~bit_of(w, u) & ~bit_of(w, v)) found = true;
      }
    });
  });
  return found;
}

ForbiddenSubgraphReport forbidden_subgraphs(const Graph& g) {
  ForbiddenSubgraphReport r;
  r.c4 = find_c4(g);
  r.c5 = find_c5(g);
  r.induced_c4 = r.c4 ? find_induced_c4(g) : std::nullopt;
  return r;
}

bool is_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.n()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
  }
  return true;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (!is_cycle(g, cycle)) return false;
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(cycle[i], cycle[j])) return false;
    }
  }
  return true;
}

Count count_walks(const Graph& g, unsigned k) {
  if (k == 0) throw DomainError("walk length must be at least 1");
  std::vector<Count> cur(g.n(), 1);
  std::vector<Count> next(g.n(), 0);
  for (unsigned step = 0; step < k; ++step) {
    for (Vertex v = 0; v < g.n(); ++v) {
      Count s = 0;
      g.for_each_neighbor(v, [&](Vertex u) { s = checked_add(s, cur[u]); });
      next[v] = s;
    }
    std::swap(cur, next);
  }
  Count total = 0;
  for (Count c : cur) total = checked_add(total, c);
  return total;
}

TwoPathReport two_path_report(const Graph& g) {
  struct Partial {
    std::vector<TwoPathViolation> count;
    std::vector<TwoPathViolation> adjacency;
  };
  auto parts = parallel_chunks<Partial>(g.n(), [&](std::size_t begin, std::size_t end, std::size_t) {
    Partial p;
    for (auto u = static_cast<Vertex>(begin); u < end; ++u) {
      for (Vertex v = u + 1; v < g.n(); ++v) {
        if (g.has_edge(u, v)) continue;
        const std::size_t common = g.common_neighbor_count(u, v);
        if (common < 2) continue;
        TwoPathViolation viol{u, v, {}};
        bits::for_each_and(g.row(u), g.row(v), [&](Vertex x) { viol.common.push_back(x); });
        if (common >= 3) {
          p.count.push_back(std::move(viol));
        } else if (!g.has_edge(viol.common[0], viol.common[1])) {
          p.adjacency.push_back(std::move(viol));
        }
      }
    }
    return p;
  });
  TwoPathReport out;
  for (auto& p : parts) {
    std::move(p.count.begin(), p.count.end(), std::back_inserter(out.count_violations));
    std::move(p.adjacency.begin(), p.adjacency.end(), std::back_inserter(out.adjacency_violations));
  }
  return out;
}

}  // namespace pentagon::census
