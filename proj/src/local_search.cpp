#include <random>

#include "pentagon/census.hpp"
#include "pentagon/error.hpp"
#include "pentagon/search.hpp"

namespace pentagon::search {
namespace {

Graph fit_to_order(const Graph& warm, std::size_t n) {
  Graph out(n);
  for (const Edge& e : warm.edges()) {
    if (e.v < n) out.add_edge(e.u, e.v);
  }
  return out;
}

}  // namespace

LocalSearchResult local_search_triangles(std::size_t n, std::uint64_t seed, std::uint64_t iterations,
                                         const std::optional<Graph>& warm_start) {
  Graph g = warm_start ? fit_to_order(*warm_start, n) : Graph(n);
  if (auto c5 = census::find_c5(g)) {
    throw StructuralError("warm start contains a C5", std::vector<std::uint32_t>(c5->begin(), c5->end()));
  }

  LocalSearchResult out;
  std::uint64_t triangles = census::triangle_census(g).total;
  out.trace.push_back({0, triangles, "start"});
  if (n < 2) {
    out.best = g;
    out.triangles = triangles;
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  auto random_pair = [&](bool want_edge, Edge& out_edge) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Vertex u = pick(rng);
      const Vertex v = pick(rng);
      if (u == v || g.has_edge(u, v) != want_edge) continue;
      out_edge = make_edge(u, v);
      return true;
    }
    return false;
  };

  std::uint64_t plateau = 0;
  std::uint64_t it = 0;
  for (; it < iterations; ++it) {
    if (plateau >= kPlateauLimit) {
      out.plateau_stop = true;
      break;
    }
    std::int64_t delta = -1;
    const bool try_add = (rng() & 1U) == 0 || g.edge_count() == 0;
    Edge add{};
    if (try_add) {
      if (random_pair(false, add) && !census::edge_closes_c5(g, add.u, add.v)) {
        delta = static_cast<std::int64_t>(g.common_neighbor_count(add.u, add.v));
        g.add_edge(add.u, add.v);
      }
    } else {
      Edge drop{};
      if (random_pair(true, drop) && random_pair(false, add)) {
        const auto lost = static_cast<std::int64_t>(g.common_neighbor_count(drop.u, drop.v));
        g.remove_edge(drop.u, drop.v);
        const auto gained = static_cast<std::int64_t>(g.common_neighbor_count(add.u, add.v));
        if (gained >= lost && !census::edge_closes_c5(g, add.u, add.v)) {
          g.add_edge(add.u, add.v);
          delta = gained - lost;
        } else {
          g.add_edge(drop.u, drop.v);
        }
      }
    }
    if (delta > 0) {
      triangles += static_cast<std::uint64_t>(delta);
      out.trace.push_back({it + 1, triangles, try_add ? "add" : "swap"});
      plateau = 0;
    } else {
      ++plateau;
    }
  }
  out.iterations_run = it;

  if (auto c5 = census::find_c5(g)) {
    throw StructuralError("local search produced a C5", std::vector<std::uint32_t>(c5->begin(), c5->end()));
  }
  const auto check = census::triangle_census(g).total;
  if (check != triangles) throw Error("local search lost track of the triangle count");
  out.best = std::move(g);
  out.triangles = triangles;
  return out;
}

}  // namespace pentagon::search
