#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"
#include "pentagon/hypergraph.hpp"

using namespace pentagon;
using namespace pentagon::hyper;

namespace {

Hypergraph fano() {
  Hypergraph h(7, 3);
  const Vertex lines[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  for (const auto& l : lines) h.add_edge({l[0], l[1], l[2]});
  return h;
}

}  // namespace

TEST_CASE("hypergraph basics") {
  Hypergraph h(5, 3);
  CHECK(h.add_edge({2, 0, 1}));
  CHECK_FALSE(h.add_edge({0, 1, 2}));
  CHECK(h.edge_count() == 1);
  CHECK(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()) == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_AS(h.add_edge({0, 1}), DomainError);
  CHECK_THROWS_AS(h.add_edge({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(h.add_edge({0, 1, 5}), DomainError);
  CHECK(h.degree(0) == 1);
  CHECK(h.degree(4) == 0);
  const Vertex pair[2] = {1, 2};
  CHECK(h.edge_containing(pair) == EdgeId{0});
}

TEST_CASE("Fano plane") {
  const Hypergraph h = fano();
  CHECK(is_linear(h).linear);
  const auto gi = berge_girth(h);
  REQUIRE(gi.cycle);
  CHECK(gi.girth() == 3);
  CHECK(is_berge_cycle(h, *gi.cycle));
  CHECK(gi.cycle->vertices.front() == 0);
  const Graph s = shadow(h);
  CHECK(s.edge_count() == 21);
  CHECK_THROWS_AS(cycle_containment_check(h), StructuralError);
  CHECK(oracle::berge_girth(h) == 3);
}

TEST_CASE("non-linear pair") {
  Hypergraph h(5, 3);
  h.add_edge({0, 1, 2});
  h.add_edge({2, 3, 4});
  h.add_edge({0, 1, 3});
  const auto v = is_linear(h);
  CHECK_FALSE(v.linear);
  REQUIRE(v.witness);
  CHECK(*v.witness == std::pair<EdgeId, EdgeId>{0, 2});
  const auto gi = berge_girth(h);
  REQUIRE(gi.cycle);
  CHECK(gi.girth() == 2);
  CHECK(is_berge_cycle(h, *gi.cycle));
}

TEST_CASE("girth agrees with the incidence-graph oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    // Random triple systems, most with short cycles.
    Hypergraph h(9, 3);
    std::uint64_t x = seed * 2654435761ULL;
    for (int i = 0; i < 6; ++i) {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      const Vertex a = static_cast<Vertex>((x >> 33) % 9);
      const Vertex b = static_cast<Vertex>((x >> 40) % 9);
      const Vertex c = static_cast<Vertex>((x >> 50) % 9);
      if (a != b && b != c && a != c) h.add_edge({a, b, c});
    }
    CAPTURE(seed);
    const auto mine = berge_girth(h);
    const std::size_t ref = oracle::berge_girth(h);
    if (ref == 0 || ref >= 6) {
      CHECK(mine.at_least_cap());
    } else {
      REQUIRE(mine.cycle);
      CHECK(mine.girth() == ref);
      CHECK(is_berge_cycle(h, *mine.cycle));
    }
  }
}

TEST_CASE("keeps_girth matches a full recomputation") {
  const Hypergraph base = construct::greedy_girth6_hypergraph(15, 3, 3, 2000);
  REQUIRE(berge_girth(base).at_least_cap());
  for (Vertex a = 0; a < 15; a += 2)
    for (Vertex b = a + 1; b < 15; b += 3)
      for (Vertex c = b + 1; c < 15; c += 4) {
        const Vertex cand[3] = {a, b, c};
        Hypergraph h = base;
        if (!h.add_edge(cand)) continue;
        CHECK(keeps_girth(base, cand) == berge_girth(h).at_least_cap());
      }
}

TEST_CASE("greedy hypergraphs have girth at least six") {
  for (std::size_t r : {3, 4}) {
    const Hypergraph h = construct::greedy_girth6_hypergraph(40, r, 2);
    CHECK(h.r() == r);
    CHECK(berge_girth(h).at_least_cap());
    CHECK(is_linear(h).linear);
    const std::size_t ref = oracle::berge_girth(h);
    CHECK((ref == 0 || ref >= 6));
  }
}

TEST_CASE("3-path census against the oracle") {
  for (auto [n, r, seed] : {std::tuple{60, 3, 1}, std::tuple{30, 4, 5}}) {
    const Hypergraph h = construct::greedy_girth6_hypergraph(n, r, seed);
    const auto c = three_path_census(h);
    const auto ref = oracle::three_paths(h, c.shadow);
    CHECK(c.good3 == ref.good);
    CHECK(c.bad3 == ref.bad);
    CHECK(c.ordered_walks3 == oracle::walks(c.shadow, 3));
    CHECK(c.shadow == shadow(h));
  }
  const auto f = three_path_census(fano());
  const auto ref = oracle::three_paths(fano(), f.shadow);
  CHECK(f.good3 == ref.good);
  CHECK(f.bad3 == ref.bad);
  CHECK(f.d_shadow == 6.0);
  CHECK(f.d_shadow_max == 6);
}

TEST_CASE("shadow cycles and per-target paths on girth-6 hypergraphs") {
  for (std::size_t r : {3, 4}) {
    const Hypergraph h = construct::greedy_girth6_hypergraph(40, r, 2);
    const auto rep = cycle_containment_check(h);
    CHECK(rep.violations.empty());
    CHECK(rep.cycles_checked > 0);
    const auto paths = hyperedge_3path_bound_report(h);
    CHECK(paths.max_count <= r - 1);
    CHECK(paths.max_count > 0);
  }
}

TEST_CASE("K4 hypergraph") {
  const Hypergraph h = construct::greedy_girth6_hypergraph(32, 4, 9);
  auto back = k4_hypergraph(shadow(h)).edge_sets();
  auto mine = h.edge_sets();
  std::sort(back.begin(), back.end());
  std::sort(mine.begin(), mine.end());
  CHECK(back == mine);

  CHECK(k4_hypergraph(construct::bollobas_gyori(2)).edge_count() == 0);
  const auto chain = k4_hypergraph(construct::gadget(construct::GadgetKind::K4Chain, 3));
  CHECK(chain.edge_count() == 3);
  CHECK(chain.r() == 4);

  Graph c5(5);
  for (Vertex i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK_THROWS_AS(k4_hypergraph(c5), StructuralError);
}

TEST_CASE("K4 hypergraphs of C5-free graphs are linear with girth six") {
  for (const auto& [name, g] : corpus::random_c5_free()) {
    CAPTURE(name);
    const Hypergraph h = k4_hypergraph(g);
    CHECK(is_linear(h).linear);
    CHECK(berge_girth(h).at_least_cap());
  }
}

TEST_CASE("lower-order constant") {
  CHECK(bad_path_constant(3) == doctest::Approx(324.0));
  CHECK(bad_path_constant(4) == doctest::Approx(874.6666667));
  CHECK(bad_path_constant(5) == doctest::Approx(1937.5));
  CHECK_THROWS_AS(bad_path_constant(1), DomainError);
}

TEST_CASE("hypergraph text format") {
  const Hypergraph h = parse_hypergraph("n=6 r=3\n0 1 2\n# comment\n2 3 4\n");
  CHECK(h.n() == 6);
  CHECK(h.edge_count() == 2);
  CHECK(parse_hypergraph(to_text(h)) == h);
  const Hypergraph inferred = parse_hypergraph("0 1 2\n2 3 4\n");
  CHECK(inferred.n() == 5);
  CHECK(inferred.r() == 3);
  CHECK_THROWS_AS(parse_hypergraph("0 1 2\n2 3\n"), ParseError);
  try {
    parse_hypergraph("0 1 2\n\n1 x 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
