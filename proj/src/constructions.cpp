#include "pentagon/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "pentagon/census.hpp"
#include "pentagon/error.hpp"

namespace pentagon::construct {
namespace {

using Point = std::array<std::uint64_t, 3>;

std::vector<Point> projective_points(std::uint64_t q) {
  std::vector<Point> pts;
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t y = 0; y < q; ++y) {
      for (std::uint64_t z = 0; z < q; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        Point best{x, y, z};
        for (std::uint64_t s = 2; s < q; ++s) best = std::min(best, Point{x * s % q, y * s % q, z * s % q});
        pts.push_back(best);
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void require_plane(std::uint64_t q, std::size_t copies) {
  if (!is_prime(q)) throw DomainError("q=" + std::to_string(q) + " is not prime (prime powers are not supported)");
  if (q > 1000 || copies * plane_order(q) > 20000) throw DomainError("q=" + std::to_string(q) + " exceeds the dense graph limit");
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::size_t plane_order(std::uint64_t q) { return static_cast<std::size_t>(q * q + q + 1); }

Graph projective_plane_incidence(std::uint64_t q) {
  require_plane(q, 2);
  const auto pts = projective_points(q);
  const std::size_t n = pts.size();
  Graph g(2 * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t l = 0; l < n; ++l) {
      const std::uint64_t dot = pts[p][0] * pts[l][0] + pts[p][1] * pts[l][1] + pts[p][2] * pts[l][2];
      if (dot % q == 0) g.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(n + l));
    }
  }
  return g;
}

Graph bollobas_gyori(std::uint64_t q) {
  require_plane(q, 3);
  const Graph incidence = projective_plane_incidence(q);
  const auto n = static_cast<Vertex>(plane_order(q));
  Graph g(3 * static_cast<std::size_t>(n));
  for (const Edge& e : incidence.edges()) {
    g.add_edge(e.u, e.v);
    g.add_edge(e.u, e.v + n);
  }
  for (Vertex b = n; b < 2 * n; ++b) g.add_edge(b, b + n);
  return g;
}

hyper::Hypergraph greedy_girth6_hypergraph(std::size_t n, std::size_t r, std::uint64_t seed, std::uint64_t budget) {
  if (r < 2 || n < r) throw DomainError("greedy hypergraph needs n >= r >= 2");
  hyper::Hypergraph h(n, r);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> pool(n);
  std::vector<Vertex> pick(r);
  std::uint64_t rejections = 0;
  while (rejections < budget) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    for (std::size_t i = 0; i < r; ++i) {
      std::uniform_int_distribution<std::size_t> dist(i, n - 1);
      std::swap(pool[i], pool[dist(rng)]);
      pick[i] = pool[i];
    }
    std::sort(pick.begin(), pick.end());
    if (hyper::keeps_girth(h, pick, 6)) {
      h.add_edge(pick);
    } else {
      ++rejections;
    }
  }
  if (!hyper::berge_girth(h, 6).at_least_cap()) throw Error("greedy hypergraph failed its girth re-check");
  return h;
}

namespace {

/// Would adding uv create an induced C4 u-v-x-y? (Assumes the current graph
/// has none.)
bool edge_creates_induced_c4(const Graph& g, Vertex u, Vertex v) {
  bool found = false;
  auto probe = [&](Vertex a, Vertex b) {
    g.for_each_neighbor(b, [&](Vertex x) {
      if (found || x == a || g.has_edge(a, x)) return;
      g.for_each_neighbor(x, [&](Vertex y) {
        if (found || y == b || y == a) return;
        if (g.has_edge(y, a) && !g.has_edge(y, b)) found = true;
      });
    });
  };
  probe(u, v);
  return found;
}

}  // namespace

Graph random_c5_free(std::size_t n, std::uint64_t seed, RandomC5FreeOptions options) {
  if (n == 0) throw DomainError("random_c5_free needs n >= 1");
  std::vector<Edge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(n);
  const std::size_t tries = static_cast<std::size_t>(std::min<std::uint64_t>(options.budget, pairs.size()));
  for (std::size_t i = 0; i < tries; ++i) {
    const Edge e = pairs[i];
    if (census::edge_closes_c5(g, e.u, e.v)) continue;
    if (options.forbid_induced_c4 && edge_creates_induced_c4(g, e.u, e.v)) continue;
    g.add_edge(e.u, e.v);
  }
  if (census::find_c5(g)) throw Error("random_c5_free produced a C5");
  if (options.forbid_induced_c4 && census::find_induced_c4(g)) throw Error("random_c5_free produced an induced C4");
  return g;
}

GadgetKind parse_gadget_kind(std::string_view name) {
  if (name == "crown") return GadgetKind::Crown;
  if (name == "k4_chain") return GadgetKind::K4Chain;
  if (name == "book_plus_pendants") return GadgetKind::BookPlusPendants;
  throw DomainError("unknown gadget kind '" + std::string(name) + "'");
}

const char* to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Crown: return "crown";
    case GadgetKind::K4Chain: return "k4_chain";
    case GadgetKind::BookPlusPendants: return "book_plus_pendants";
  }
  return "?";
}

Graph gadget(GadgetKind kind, std::size_t param) {
  if (param == 0) throw DomainError("gadget parameter must be positive");
  switch (kind) {
    case GadgetKind::Crown: {
      Graph g(param + 2);
      g.add_edge(0, 1);
      for (Vertex c = 2; c < param + 2; ++c) {
        g.add_edge(0, c);
        g.add_edge(1, c);
      }
      return g;
    }
    case GadgetKind::K4Chain: {
      Graph g(3 * param + 1);
      for (Vertex i = 0; i < param; ++i) {
        for (Vertex a = 3 * i; a <= 3 * i + 3; ++a) {
          for (Vertex b = a + 1; b <= 3 * i + 3; ++b) g.add_edge(a, b);
        }
      }
      return g;
    }
    case GadgetKind::BookPlusPendants: {
      const std::size_t core = param + 2;
      Graph book = gadget(GadgetKind::Crown, param);
      Graph g(3 * core);
      for (const Edge& e : book.edges()) g.add_edge(e.u, e.v);
      for (Vertex v = 0; v < core; ++v) {
        const auto p1 = static_cast<Vertex>(core + 2 * v);
        g.add_edge(v, p1);
        g.add_edge(p1, p1 + 1);
      }
      return g;
    }
  }
  throw DomainError("unknown gadget kind");
}

}  // namespace pentagon::construct
