#include "pentagon/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "pentagon/census.hpp"
#include "pentagon/error.hpp"

namespace pentagon::search {
namespace {

using Mask = std::uint16_t;

struct Small {
  int n = 0;
  std::array<Mask, 16> adj{};

  bool has(int u, int v) const { return (adj[u] >> v) & 1U; }
  void add(int u, int v) {
    adj[u] |= Mask(1U << v);
    adj[v] |= Mask(1U << u);
  }
  int edges() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += std::popcount(adj[v]);
    return s / 2;
  }
  int triangles() const {
    int s = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (has(u, v)) s += std::popcount(Mask(adj[u] & adj[v] & ~((1U << (v + 1)) - 1)));
      }
    }
    return s;
  }
};

bool c5_from(const Small& g, int start, int at, int depth, Mask used) {
  if (depth == 4) return g.has(at, start);
  for (Mask m = Mask(g.adj[at] & ~used); m; m &= m - 1) {
    const int x = std::countr_zero(m);
    if (x < start) continue;
    if (c5_from(g, start, x, depth + 1, Mask(used | (1U << x)))) return true;
  }
  return false;
}

bool has_c5(const Small& g) {
  for (int s = 0; s < g.n; ++s) {
    if (c5_from(g, s, s, 0, Mask(1U << s))) return true;
  }
  return false;
}

bool has_induced_c4(const Small& g) {
  for (int a = 0; a < g.n; ++a) {
    for (int c = a + 1; c < g.n; ++c) {
      if (g.has(a, c)) continue;
      const Mask common = g.adj[a] & g.adj[c];
      for (Mask m = common; m; m &= m - 1) {
        const int b = std::countr_zero(m);
        if (common & ~g.adj[b] & ~(1U << b)) return true;
      }
    }
  }
  return false;
}

inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

std::uint32_t code_under(const Small& g, const std::array<int, 16>& at) {
  std::uint32_t code = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has(at[i], at[j])) code |= 1U << pair_bit(i, j);
    }
  }
  return code;
}

Small from_code(int n, std::uint32_t code) {
  Small g;
  g.n = n;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1U) g.add(i, j);
    }
  }
  return g;
}

// Colour refinement: start from degrees, split by the multiset of neighbour
// colours until stable.
std::vector<int> refined_colours(const Small& g) {
  std::vector<int> colour(g.n);
  for (int v = 0; v < g.n; ++v) colour[v] = std::popcount(g.adj[v]);
  for (int round = 0; round < g.n; ++round) {
    std::vector<std::vector<int>> keys(g.n);
    for (int v = 0; v < g.n; ++v) {
      keys[v].push_back(colour[v]);
      std::vector<int> nb;
      for (Mask m = g.adj[v]; m; m &= m - 1) nb.push_back(colour[std::countr_zero(m)]);
      std::sort(nb.begin(), nb.end());
      keys[v].insert(keys[v].end(), nb.begin(), nb.end());
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

// Largest adjacency code over all labellings that place the colour classes
// in increasing colour order.
std::uint32_t canonical_code(const Small& g) {
  const auto colour = refined_colours(g);
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<int> slot_colour(g.n);
  for (int p = 0; p < g.n; ++p) slot_colour[p] = colour[order[p]];

  std::array<int, 16> at{};
  std::uint32_t best = 0;
  bool any = false;
  std::function<void(int, Mask)> place = [&](int p, Mask used) {
    if (p == g.n) {
      const auto c = code_under(g, at);
      if (!any || c > best) best = c;
      any = true;
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if ((used >> v) & 1U || colour[v] != slot_colour[p]) continue;
      at[p] = v;
      place(p + 1, Mask(used | (1U << v)));
    }
  };
  place(0, 0);
  return best;
}

Graph to_graph(const Small& g) {
  Graph out(static_cast<std::size_t>(g.n));
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.has(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

struct Constraint {
  Objective objective;
  bool forbid_induced_c4;
};

int value_of(const Small& g, Objective objective) {
  return objective == Objective::Triangles ? g.triangles() : g.edges();
}

bool admissible(const Small& g, const Constraint& c) {
  if (has_c5(g)) return false;
  return !(c.forbid_induced_c4 && has_induced_c4(g));
}

void check_witness(const Graph& g, const Constraint& c) {
  const auto report = census::forbidden_subgraphs(g);
  if (report.contains_c5() || (c.forbid_induced_c4 && report.contains_induced_c4())) {
    throw Error("search witness failed the forbidden-subgraph detector");
  }
}

ExactResult augment(std::size_t n, const Constraint& c) {
  if (n > kMaxExactGraphOrder) {
    throw BudgetError("exact graph search is limited to n <= " + std::to_string(kMaxExactGraphOrder));
  }
  ExactResult out;
  out.objective = c.objective;
  out.n = n;
  out.strategy = "vertex augmentation with canonical-form dedup";
  if (n == 0) {
    out.graph = Graph(0);
    return out;
  }
  std::map<std::uint32_t, Small> level{{0U, from_code(1, 0)}};
  std::uint64_t examined = 1;
  for (int k = 1; k < static_cast<int>(n); ++k) {
    const bool last = k + 1 == static_cast<int>(n);
    std::map<std::uint32_t, Small> next;
    int best_value = -1;
    for (const auto& [code, parent] : level) {
      for (Mask s = 0; s < Mask(1U << k); ++s) {
        Small child = parent;
        child.n = k + 1;
        for (Mask m = s; m; m &= m - 1) child.add(k, std::countr_zero(m));
        ++examined;
        if (!admissible(child, c)) continue;
        if (last) {
          const int v = value_of(child, c.objective);
          if (v < best_value) continue;
          if (v > best_value) next.clear();
          best_value = v;
        }
        const auto canon = canonical_code(child);
        next.emplace(canon, from_code(k + 1, canon));
      }
    }
    level = std::move(next);
  }
  int best_value = -1;
  const Small* witness = nullptr;
  for (const auto& [code, g] : level) {
    const int v = value_of(g, c.objective);
    if (v > best_value) {
      best_value = v;
      witness = &g;
    }
  }
  out.value = static_cast<std::uint64_t>(best_value);
  out.graph = to_graph(*witness);
  out.graphs_examined = examined;
  check_witness(*out.graph, c);
  return out;
}

ExactResult labeled(std::size_t n, const Constraint& c) {
  if (n > kMaxLabeledGraphOrder) {
    throw BudgetError("labelled exhaustive search is limited to n <= " + std::to_string(kMaxLabeledGraphOrder));
  }
  ExactResult out;
  out.objective = c.objective;
  out.n = n;
  out.strategy = "labelled exhaustive";
  const int pairs = static_cast<int>(n * (n - (n > 0 ? 1 : 0)) / 2);
  int best_value = -1;
  std::uint32_t best_code = 0;
  for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
    const Small g = from_code(static_cast<int>(n), code);
    ++out.graphs_examined;
    if (!admissible(g, c)) continue;
    const int v = value_of(g, c.objective);
    if (v > best_value) {
      best_value = v;
      best_code = code;
    }
  }
  out.value = static_cast<std::uint64_t>(std::max(best_value, 0));
  out.graph = to_graph(from_code(static_cast<int>(n), best_code));
  check_witness(*out.graph, c);
  return out;
}

}  // namespace

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::Triangles: return "triangles";
    case Objective::Edges: return "edges";
    case Objective::Hyperedges: return "hyperedges";
  }
  return "?";
}

Objective parse_objective(std::string_view name) {
  if (name == "triangles") return Objective::Triangles;
  if (name == "edges") return Objective::Edges;
  if (name == "hyperedges") return Objective::Hyperedges;
  throw DomainError("unknown objective '" + std::string(name) + "'");
}

ExactResult exact_max_triangles_c5free(std::size_t n) { return augment(n, {Objective::Triangles, false}); }
ExactResult exact_max_edges_indc4c5(std::size_t n) { return augment(n, {Objective::Edges, true}); }
ExactResult labeled_max_triangles_c5free(std::size_t n) { return labeled(n, {Objective::Triangles, false}); }
ExactResult labeled_max_edges_indc4c5(std::size_t n) { return labeled(n, {Objective::Edges, true}); }

ExactResult exact_max_hyperedges_girth6(std::size_t n) {
  if (n > kMaxExactHypergraphOrder) {
    throw BudgetError("exact hypergraph search is limited to n <= " + std::to_string(kMaxExactHypergraphOrder));
  }
  ExactResult out;
  out.objective = Objective::Hyperedges;
  out.n = n;
  out.strategy = "triple backtracking, first edge fixed";
  hyper::Hypergraph best(n, 3);
  if (n < 3) {
    out.hypergraph = best;
    return out;
  }

  std::vector<std::array<int, 3>> triples;
  const int nn = static_cast<int>(n);
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b)
      for (int c = b + 1; c < nn; ++c) triples.push_back({a, b, c});

  std::array<Mask, 16> adj{};
  std::vector<int> chosen{0};
  std::vector<int> best_chosen = chosen;
  auto link = [&](const std::array<int, 3>& t, bool on) {
    for (int x : t) {
      for (int y : t) {
        if (x == y) continue;
        if (on) adj[x] |= Mask(1U << y);
        else adj[x] &= Mask(~(1U << y));
      }
    }
  };
  // Adding t keeps every Berge cycle at length >= 6 iff no two of its
  // vertices are within shadow distance 4.
  auto ball = [&](int v) {
    Mask reach = Mask(1U << v);
    for (int step = 0; step < 4; ++step) {
      Mask grow = reach;
      for (Mask m = reach; m; m &= m - 1) grow |= adj[std::countr_zero(m)];
      reach = grow;
    }
    return reach;
  };
  auto compatible = [&](const std::array<int, 3>& t) {
    const Mask ba = ball(t[0]);
    if ((ba >> t[1]) & 1U || (ba >> t[2]) & 1U) return false;
    return !((ball(t[1]) >> t[2]) & 1U);
  };

  link(triples[0], true);
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t idx) {
    ++nodes;
    if (chosen.size() > best_chosen.size()) best_chosen = chosen;
    if (chosen.size() + (triples.size() - idx) <= best_chosen.size()) return;
    for (std::size_t i = idx; i < triples.size(); ++i) {
      if (chosen.size() + (triples.size() - i) <= best_chosen.size()) return;
      if (!compatible(triples[i])) continue;
      chosen.push_back(static_cast<int>(i));
      link(triples[i], true);
      extend(i + 1);
      link(triples[i], false);
      chosen.pop_back();
    }
  };
  extend(1);

  for (int i : best_chosen) {
    const auto& t = triples[static_cast<std::size_t>(i)];
    best.add_edge({static_cast<Vertex>(t[0]), static_cast<Vertex>(t[1]), static_cast<Vertex>(t[2])});
  }
  if (!hyper::berge_girth(best).at_least_cap()) throw Error("search witness failed the Berge girth detector");
  out.value = best.edge_count();
  out.hypergraph = std::move(best);
  out.graphs_examined = nodes;
  return out;
}

}  // namespace pentagon::search
