// 5-path counting by middle-edge pivoting. For a middle edge pq every
// unordered 5-path x-y-p-q-z-w splits into a left 2-path (y, x) hanging off p
// and a right 2-path (z, w) hanging off q. The product of the two side counts
// over-counts the pairs that reuse a vertex; those are removed by
// inclusion-exclusion over the four possible coincidences
//   E1: y = z   E2: y = w   E3: x = z   E4: x = w,
// of which only E1&E4 and E2&E3 can hold together.

#include <utility>

#include "pentagon/census.hpp"
#include "pentagon/parallel.hpp"

namespace pentagon::census {
namespace {

struct Scratch {
  explicit Scratch(std::size_t n) : rfirst(n, 0), rend(n, 0) {}
  std::vector<std::pair<Vertex, Vertex>> left;
  std::vector<std::pair<Vertex, Vertex>> right;
  std::vector<std::uint64_t> rfirst;
  std::vector<std::uint64_t> rend;
};

/// Collects the 2-paths (first, end) = (y, x) with y ~ from, x ~ y and
/// x, y not in {from, other}. In good mode also requires y !~ other (so
/// y-from-other is no triangle) and x !~ from (so x-y-from is no triangle).
void collect_side(const Graph& g, Vertex from, Vertex other, bool good_only,
                  std::vector<std::pair<Vertex, Vertex>>& out) {
  out.clear();
  g.for_each_neighbor(from, [&](Vertex y) {
    if (y == other) return;
    if (good_only && g.has_edge(y, other)) return;
    g.for_each_neighbor(y, [&](Vertex x) {
      if (x == from || x == other) return;
      if (good_only && g.has_edge(x, from)) return;
      out.emplace_back(y, x);
    });
  });
}

bool on_side(const Graph& g, Vertex from, Vertex other, bool good_only, Vertex first, Vertex end) {
  if (first == other || first == from || end == from || end == other || first == end) return false;
  if (!g.has_edge(from, first) || !g.has_edge(first, end)) return false;
  if (good_only && (g.has_edge(first, other) || g.has_edge(end, from))) return false;
  return true;
}

Count paths_through(const Graph& g, Vertex p, Vertex q, bool good_only, Scratch& s) {
  collect_side(g, p, q, good_only, s.left);
  collect_side(g, q, p, good_only, s.right);
  for (auto [z, w] : s.right) {
    ++s.rfirst[z];
    ++s.rend[w];
  }
  const Count total = static_cast<Count>(s.left.size()) * static_cast<Count>(s.right.size());
  Count overlap = 0;
  for (auto [y, x] : s.left) {
    overlap += s.rfirst[y] + s.rend[y] + s.rfirst[x] + s.rend[x];
    if (on_side(g, q, p, good_only, y, x)) --overlap;  // E1 & E4
    if (on_side(g, q, p, good_only, x, y)) --overlap;  // E2 & E3
  }
  for (auto [z, w] : s.right) {
    s.rfirst[z] = 0;
    s.rend[w] = 0;
  }
  return total - overlap;
}

}  // namespace

MiddleEdgeCounts five_paths_by_middle_edge(const Graph& g) {
  MiddleEdgeCounts out;
  out.edges = g.edges();
  out.good.assign(out.edges.size(), 0);
  out.all.assign(out.edges.size(), 0);
  parallel_chunks<int>(out.edges.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
    Scratch s(g.n());
    for (std::size_t i = begin; i < end; ++i) {
      const Edge e = out.edges[i];
      out.good[i] = paths_through(g, e.u, e.v, true, s);
      out.all[i] = paths_through(g, e.u, e.v, false, s);
    }
    return 0;
  });
  return out;
}

FivePathCensus five_path_census(const Graph& g) {
  const MiddleEdgeCounts by_edge = five_paths_by_middle_edge(g);
  FivePathCensus c;
  Count all = 0;
  for (std::size_t i = 0; i < by_edge.edges.size(); ++i) {
    c.good = checked_add(c.good, by_edge.good[i]);
    all = checked_add(all, by_edge.all[i]);
  }
  c.bad = checked_sub(all, c.good);
  c.ordered_walks5 = count_walks(g, 5);
  return c;
}

}  // namespace pentagon::census
