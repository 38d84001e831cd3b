#include <doctest.h>

#include "oracles.hpp"
#include "pentagon/census.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"
#include "pentagon/search.hpp"

using namespace pentagon;
using namespace pentagon::search;

TEST_CASE("augmentation agrees with labelled enumeration") {
  for (std::size_t n = 1; n <= kMaxLabeledGraphOrder; ++n) {
    CAPTURE(n);
    const auto a = exact_max_triangles_c5free(n);
    const auto b = labeled_max_triangles_c5free(n);
    CHECK(a.value == b.value);
    REQUIRE(a.graph);
    REQUIRE(b.graph);
    CHECK(oracle::triangles(*a.graph) == a.value);
    CHECK(oracle::triangles(*b.graph) == b.value);
    CHECK_FALSE(oracle::has_cycle(*a.graph, 5));
    CHECK_FALSE(oracle::has_cycle(*b.graph, 5));

    const auto c = exact_max_edges_indc4c5(n);
    const auto d = labeled_max_edges_indc4c5(n);
    CHECK(c.value == d.value);
    REQUIRE(c.graph);
    CHECK(c.graph->edge_count() == c.value);
    CHECK_FALSE(oracle::has_cycle(*c.graph, 5));
    CHECK_FALSE(oracle::has_induced_c4(*c.graph));
  }
}

TEST_CASE("small exact values") {
  CHECK(exact_max_triangles_c5free(3).value == 1);
  CHECK(exact_max_triangles_c5free(4).value == 4);
  CHECK(exact_max_edges_indc4c5(3).value == 3);
  CHECK(exact_max_edges_indc4c5(4).value == 6);
}

TEST_CASE("exact values grow with n") {
  std::uint64_t prev_t = 0;
  std::uint64_t prev_e = 0;
  for (std::size_t n = 1; n <= kMaxExactGraphOrder; ++n) {
    const auto t = exact_max_triangles_c5free(n);
    const auto e = exact_max_edges_indc4c5(n);
    CHECK(t.value >= prev_t);
    CHECK(e.value >= prev_e);
    REQUIRE(t.graph);
    CHECK(census::triangle_census(*t.graph).total == t.value);
    CHECK_FALSE(oracle::has_cycle(*t.graph, 5));
    prev_t = t.value;
    prev_e = e.value;
  }
}

TEST_CASE("exact hypergraph search against the subset oracle") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CAPTURE(n);
    const auto r = exact_max_hyperedges_girth6(n);
    CHECK(r.value == oracle::max_girth6_triples(n));
    REQUIRE(r.hypergraph);
    CHECK(r.hypergraph->edge_count() == r.value);
    const std::size_t g = oracle::berge_girth(*r.hypergraph);
    CHECK((g == 0 || g >= 6));
  }
  CHECK(exact_max_hyperedges_girth6(3).value == 1);
  CHECK(exact_max_hyperedges_girth6(4).value == 1);
}

TEST_CASE("exact searches refuse oversized instances") {
  CHECK_THROWS_AS(exact_max_triangles_c5free(kMaxExactGraphOrder + 1), BudgetError);
  CHECK_THROWS_AS(exact_max_edges_indc4c5(kMaxExactGraphOrder + 1), BudgetError);
  CHECK_THROWS_AS(labeled_max_triangles_c5free(kMaxLabeledGraphOrder + 1), BudgetError);
  CHECK_THROWS_AS(exact_max_hyperedges_girth6(kMaxExactHypergraphOrder + 1), BudgetError);
}

TEST_CASE("objective names") {
  CHECK(parse_objective("triangles") == Objective::Triangles);
  CHECK(parse_objective(to_string(Objective::Hyperedges)) == Objective::Hyperedges);
  CHECK_THROWS_AS(parse_objective("cliques"), DomainError);
}

TEST_CASE("local search") {
  const auto small = local_search_triangles(4, 1, 20000);
  CHECK(small.triangles == 4);
  CHECK(small.trace.front().move == "start");

  const auto a = local_search_triangles(12, 42, 5000);
  const auto b = local_search_triangles(12, 42, 5000);
  CHECK(a.best == b.best);
  CHECK(a.triangles == oracle::triangles(a.best));
  CHECK_FALSE(oracle::has_cycle(a.best, 5));
  for (std::size_t i = 1; i < a.trace.size(); ++i) CHECK(a.trace[i].triangles > a.trace[i - 1].triangles);
}

TEST_CASE("warm-started local search never loses triangles") {
  const Graph bg = construct::bollobas_gyori(2);
  const auto r = local_search_triangles(21, 7, 3000, bg);
  CHECK(r.trace.front().triangles == 21);
  CHECK(r.triangles >= 21);
  CHECK_FALSE(oracle::has_cycle(r.best, 5));

  Graph c5(5);
  for (Vertex i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK_THROWS_AS(local_search_triangles(5, 1, 10, c5), StructuralError);
}
