#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pentagon/census.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"

using namespace pentagon;
using namespace pentagon::census;

namespace {

Graph cycle(std::size_t k) {
  Graph g(k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % k));
  return g;
}

Graph complete(std::size_t k) {
  Graph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("triangle census") {
  const auto k4 = triangle_census(complete(4));
  CHECK(k4.total == 4);
  for (auto t : k4.per_vertex) CHECK(t == 3);
  CHECK(k4.average == doctest::Approx(3.0));

  const auto bg = triangle_census(construct::bollobas_gyori(2));
  CHECK(bg.total == 21);
  CHECK(bg.triangles.size() == 21);

  CHECK(triangle_census(cycle(5)).total == 0);
}

TEST_CASE("triangle census matches brute force") {
  for (const auto& [name, g] : corpus::random_c5_free()) {
    const auto c = triangle_census(g);
    CAPTURE(name);
    CHECK(c.total == oracle::triangles(g));
    std::uint64_t sum = 0;
    for (auto t : c.per_vertex) sum += t;
    CHECK(sum == 3 * c.total);
    CHECK(triangle_degrees(g) == c.per_vertex);
    for (const auto& t : c.triangles) CHECK(oracle::is_triangle(g, t.a, t.b, t.c));
  }
}

TEST_CASE("forbidden cycle detection with witnesses") {
  const Graph c5 = cycle(5);
  const auto r = forbidden_subgraphs(c5);
  REQUIRE(r.contains_c5());
  CHECK(*r.c5 == Cycle5{0, 1, 2, 3, 4});
  CHECK_FALSE(r.contains_c4());

  const auto k4 = forbidden_subgraphs(complete(4));
  CHECK(k4.contains_c4());
  CHECK_FALSE(k4.contains_induced_c4());
  CHECK_FALSE(k4.contains_c5());

  const auto c4 = forbidden_subgraphs(cycle(4));
  REQUIRE(c4.contains_induced_c4());
  CHECK(*c4.induced_c4 == Cycle4{0, 1, 2, 3});

  const auto bg = forbidden_subgraphs(construct::bollobas_gyori(3));
  CHECK_FALSE(bg.contains_c5());
  CHECK_FALSE(bg.contains_induced_c4());
}

TEST_CASE("detectors agree with brute force and witnesses are valid") {
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    // Unrestricted random graphs so that every pattern shows up.
    Graph g(9);
    std::uint64_t x = seed * 0x9E3779B97F4A7C15ULL;
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = u + 1; v < 9; ++v) {
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        if ((x * 0x2545F4914F6CDD1DULL) % 100 < 20 + seed % 30) g.add_edge(u, v);
      }
    graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    const auto r = forbidden_subgraphs(g);
    CHECK(r.contains_c4() == oracle::has_cycle(g, 4));
    CHECK(r.contains_c5() == oracle::has_cycle(g, 5));
    CHECK(r.contains_induced_c4() == oracle::has_induced_c4(g));
    if (r.c4) CHECK(is_cycle(g, *r.c4));
    if (r.c5) CHECK(is_cycle(g, *r.c5));
    if (r.induced_c4) CHECK(is_induced_cycle(g, *r.induced_c4));
    if (r.c5) {
      CHECK((*r.c5)[0] == *std::min_element(r.c5->begin(), r.c5->end()));
      CHECK((*r.c5)[1] < (*r.c5)[4]);
    }
  }
}

TEST_CASE("closing an edge into a C5") {
  Graph p = parse_edge_list("0 1\n1 2\n2 3\n3 4\n");
  CHECK(edge_closes_c5(p, 0, 4));
  CHECK_FALSE(edge_closes_c5(p, 0, 3));
}

TEST_CASE("walk counts") {
  CHECK(count_walks(parse_edge_list("0 1\n"), 1) == 2);
  CHECK(count_walks(complete(3), 2) == 12);
  const Graph heawood = construct::projective_plane_incidence(2);
  CHECK(count_walks(heawood, 5) >= Count(14 * 243));
  CHECK(count_walks(heawood, 5) == oracle::walks(heawood, 5));
  CHECK_THROWS_AS(count_walks(heawood, 0), DomainError);
  for (const auto& [name, g] : corpus::gadgets()) CHECK(count_walks(g, 4) == oracle::walks(g, 4));
}

TEST_CASE("walk counts report overflow instead of wrapping") {
  CHECK_THROWS_AS(count_walks(complete(200), 20), OverflowError);
}

TEST_CASE("five-path census on small shapes") {
  Graph p6(6);
  for (Vertex i = 0; i + 1 < 6; ++i) p6.add_edge(i, i + 1);
  auto c = five_path_census(p6);
  CHECK(c.good == 1);
  CHECK(c.bad == 0);

  c = five_path_census(complete(4));
  CHECK(c.good == 0);
  CHECK(c.bad == 0);
  CHECK(c.ordered_walks5 == count_walks(complete(4), 5));
}

TEST_CASE("five-path census matches the DFS oracle") {
  auto check = [](const Graph& g) {
    const auto c = five_path_census(g);
    const auto o = oracle::five_paths(g);
    CHECK(c.good == o.good);
    CHECK(c.bad == o.bad);
    CHECK(c.ordered_walks5 >= 2 * c.paths());
    CHECK(c.ordered_walks5 == oracle::walks(g, 5));
    const auto m = five_paths_by_middle_edge(g);
    Count total = 0;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      const auto it = o.good_by_middle.find(m.edges[i]);
      CHECK(m.good[i] == (it == o.good_by_middle.end() ? Count(0) : it->second));
      total += m.all[i];
    }
    CHECK(total == c.paths());
  };
  check(construct::bollobas_gyori(2));
  for (const auto& [name, g] : corpus::gadgets()) check(g);
  for (const auto& [name, g] : corpus::random_c5_free()) {
    if (g.n() <= 10) check(g);
  }
  // Graphs with C5s and dense neighbourhoods too.
  check(complete(7));
  check(cycle(5));
  check(parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n2 5\n5 6\n6 7\n7 0\n1 6\n"));
}

TEST_CASE("two-path report") {
  const auto c4 = two_path_report(cycle(4));
  CHECK(c4.count_violations.empty());
  CHECK(c4.adjacency_violations.size() == 2);  // both antipodal pairs

  const Graph k23 = parse_edge_list("0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  const auto r = two_path_report(k23);
  REQUIRE(r.count_violations.size() == 1);
  CHECK(r.count_violations[0].u == 0);
  CHECK(r.count_violations[0].v == 1);
  CHECK(r.count_violations[0].common == std::vector<Vertex>{2, 3, 4});

  CHECK(two_path_report(construct::bollobas_gyori(3)).empty());
}
