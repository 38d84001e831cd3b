#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pentagon/blocks.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"
#include "pentagon/middle_edge.hpp"

using namespace pentagon;
using namespace pentagon::census;

namespace {

MiddleEdgeCensus run(const Graph& g) {
  const auto split = blocks::split_triangle_edges(g);
  const auto d = blocks::edge_decomposition(split.g_delta);
  const auto gs = split.g_s.edges();
  return middle_edge_census(g, d, gs);
}

// Per-part good counts must equal the oracle's per-middle-edge counts summed
// over the part's edges.
void check_against_oracle(const Graph& g) {
  const auto split = blocks::split_triangle_edges(g);
  const auto d = blocks::edge_decomposition(split.g_delta);
  const auto gs = split.g_s.edges();
  const auto c = middle_edge_census(g, d, gs);
  const auto ref = oracle::five_paths(g);
  auto oracle_sum = [&](const std::vector<Edge>& es) {
    Count s = 0;
    for (Edge e : es) {
      auto it = ref.good_by_middle.find(e);
      if (it != ref.good_by_middle.end()) s += it->second;
    }
    return s;
  };
  std::size_t i = 0;
  for (const auto& p : d.two_paths) CHECK(c.parts[i++].good_paths == oracle_sum(blocks::part_edges(p)));
  for (const auto& t : d.triangles) CHECK(c.parts[i++].good_paths == oracle_sum(blocks::part_edges(t)));
  for (const auto& k : d.k4s) CHECK(c.parts[i++].good_paths == oracle_sum(blocks::part_edges(k)));
  for (Edge e : gs) CHECK(c.parts[i++].good_paths == oracle_sum({e}));
  CHECK(i == c.parts.size());
  CHECK(c.total_good == ref.good);
}

}  // namespace

TEST_CASE("K4 alone has no 5-paths") {
  const auto c = run(construct::gadget(construct::GadgetKind::K4Chain, 1));
  REQUIRE(c.parts.size() == 1);
  CHECK(c.parts[0].kind == PartKind::K4);
  CHECK(c.parts[0].good_paths == 0);
  CHECK(c.parts[0].anchors == std::vector<std::uint64_t>{0, 0, 0, 0});
  CHECK(c.all_within_cap);
}

TEST_CASE("caps") {
  CHECK(within_cap(PartKind::TwoPath, 100, 10));
  CHECK_FALSE(within_cap(PartKind::TwoPath, 101, 10));
  CHECK(within_cap(PartKind::Triangle, 133, 10));
  CHECK_FALSE(within_cap(PartKind::Triangle, 134, 10));
  CHECK(within_cap(PartKind::K4, 150, 10));
  CHECK_FALSE(within_cap(PartKind::K4, 151, 10));
  CHECK(within_cap(PartKind::SingleEdge, 100, 10));
}

TEST_CASE("part counts match the path oracle") {
  for (std::size_t k = 1; k <= 4; ++k) {
    CAPTURE(k);
    check_against_oracle(construct::gadget(construct::GadgetKind::BookPlusPendants, k));
    check_against_oracle(construct::gadget(construct::GadgetKind::Crown, k));
  }
  check_against_oracle(construct::gadget(construct::GadgetKind::K4Chain, 3));
  check_against_oracle(construct::bollobas_gyori(2));
  for (const auto& [name, g] : corpus::random_c5_free()) {
    if (g.n() > 12) continue;
    CAPTURE(name);
    check_against_oracle(g);
  }
}

TEST_CASE("book with pendants") {
  const Graph g = construct::gadget(construct::GadgetKind::BookPlusPendants, 2);
  CHECK(g.n() == 12);
  const auto c = run(g);
  CHECK(c.all_within_cap);
  CHECK(c.anchor_cap_holds);
  CHECK(c.pair_product_holds);
  CHECK(c.total_good == oracle::five_paths(g).good);
}

TEST_CASE("block parts stay within their caps on the C5-free corpus") {
  for (const auto& [name, g] : corpus::random_c5_free()) {
    CAPTURE(name);
    for (const auto& p : run(g).parts) {
      if (p.kind != PartKind::SingleEdge) CHECK(p.within_cap);
    }
    const auto split = blocks::split_triangle_edges(g);
    const auto pruned = middle_edge_census(split.g_delta, blocks::edge_decomposition(split.g_delta), {});
    CHECK(pruned.all_within_cap);
    CHECK(pruned.anchor_cap_holds);
  }
}

TEST_CASE("every part stays within its cap on induced-C4-free graphs") {
  for (const auto& [name, g] : corpus::indc4c5()) {
    CAPTURE(name);
    const auto c = run(g);
    CHECK(c.all_within_cap);
    CHECK(c.anchor_cap_holds);
  }
}

TEST_CASE("the single-edge cap needs induced-C4-freeness") {
  // K_{6,6} is C5-free; an edge uv is the middle of 5*5*4*4 good 5-paths.
  Graph k(12);
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 6; b < 12; ++b) k.add_edge(a, b);
  const auto c = run(k);
  REQUIRE(c.parts.size() == 36);
  CHECK(c.parts[0].kind == PartKind::SingleEdge);
  CHECK(c.parts[0].good_paths == 400);
  CHECK_FALSE(c.parts[0].within_cap);
}

TEST_CASE("decomposition integrity is enforced") {
  const Graph g = construct::gadget(construct::GadgetKind::Crown, 2);
  auto d = blocks::edge_decomposition(g);
  const std::vector<Edge> none;

  auto missing = d;
  missing.two_paths.clear();
  CHECK_THROWS_AS(middle_edge_census(g, missing, none), PreconditionError);

  auto doubled = d;
  doubled.triangles.push_back(doubled.triangles.front());
  CHECK_THROWS_AS(middle_edge_census(g, doubled, none), PreconditionError);

  const std::vector<Edge> triangle_edge{{0, 1}};
  CHECK_THROWS_AS(middle_edge_census(g, d, triangle_edge), PreconditionError);

  const std::vector<Edge> absent{{2, 3}};
  CHECK_THROWS_AS(middle_edge_census(g, d, absent), PreconditionError);
}
