#include <doctest.h>

#include "oracles.hpp"
#include "pentagon/census.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"

using namespace pentagon;
using namespace pentagon::construct;

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
  CHECK(plane_order(3) == 13);
}

TEST_CASE("projective plane incidence graphs") {
  const Graph heawood = projective_plane_incidence(2);
  CHECK(heawood.n() == 14);
  CHECK(heawood.edge_count() == 21);
  CHECK(oracle::girth(heawood) == 6);
  for (Vertex v = 0; v < 14; ++v) CHECK(heawood.degree(v) == 3);

  const Graph pg3 = projective_plane_incidence(3);
  CHECK(pg3.n() == 26);
  CHECK(pg3.edge_count() == 52);
  CHECK(oracle::girth(pg3) == 6);
  for (Vertex p = 0; p < 13; ++p)
    for (Vertex l = 0; l < 13; ++l) CHECK(!pg3.has_edge(p, l));

  CHECK_THROWS_AS(projective_plane_incidence(4), DomainError);
  CHECK_THROWS_AS(projective_plane_incidence(1), DomainError);
}

TEST_CASE("doubled incidence graphs") {
  const Graph g = bollobas_gyori(2);
  CHECK(g.n() == 21);
  CHECK(g.edge_count() == 49);
  CHECK(oracle::triangles(g) == 21);
  CHECK_FALSE(oracle::has_cycle(g, 5));
  CHECK_FALSE(oracle::has_induced_c4(g));
  for (Vertex b = 7; b < 14; ++b) {
    CHECK(g.has_edge(b, b + 7));
    for (Vertex p = 0; p < 7; ++p) CHECK(g.has_edge(p, b) == g.has_edge(p, b + 7));
  }

  const Graph g3 = bollobas_gyori(3);
  CHECK(g3.n() == 39);
  CHECK(census::triangle_census(g3).total == 52);
  CHECK(bollobas_gyori(3) == g3);
  CHECK_THROWS_AS(bollobas_gyori(6), DomainError);
}

TEST_CASE("gadgets") {
  const Graph c = gadget(GadgetKind::Crown, 3);
  CHECK(c.n() == 5);
  CHECK(c.edge_count() == 7);
  CHECK(oracle::triangles(c) == 3);

  const Graph k = gadget(GadgetKind::K4Chain, 3);
  CHECK(k.n() == 10);
  CHECK(k.edge_count() == 18);
  CHECK(oracle::triangles(k) == 12);
  CHECK_FALSE(oracle::has_cycle(k, 5));

  const Graph b = gadget(GadgetKind::BookPlusPendants, 2);
  CHECK(b.n() == 12);
  CHECK(b.edge_count() == 5 + 8);
  CHECK(oracle::triangles(b) == 2);

  CHECK(parse_gadget_kind("crown") == GadgetKind::Crown);
  CHECK(parse_gadget_kind(to_string(GadgetKind::BookPlusPendants)) == GadgetKind::BookPlusPendants);
  CHECK_THROWS_AS(parse_gadget_kind("wheel"), DomainError);
  CHECK_THROWS_AS(gadget(GadgetKind::Crown, 0), DomainError);
}

TEST_CASE("random C5-free graphs") {
  const Graph a = random_c5_free(20, 7);
  CHECK(a == random_c5_free(20, 7));
  CHECK_FALSE(oracle::has_cycle(a, 5));
  // Saturated: every missing edge closes a C5.
  for (Vertex u = 0; u < 20; ++u)
    for (Vertex v = u + 1; v < 20; ++v)
      if (!a.has_edge(u, v)) CHECK(census::edge_closes_c5(a, u, v));

  const Graph b = random_c5_free(14, 3, {.budget = UINT64_MAX, .forbid_induced_c4 = true});
  CHECK_FALSE(oracle::has_cycle(b, 5));
  CHECK_FALSE(oracle::has_induced_c4(b));

  CHECK(random_c5_free(12, 1, {.budget = 0}).edge_count() == 0);
  CHECK_THROWS_AS(random_c5_free(0, 1), DomainError);
}

TEST_CASE("greedy girth-6 hypergraphs") {
  const auto h = greedy_girth6_hypergraph(30, 3, 4);
  CHECK(h == greedy_girth6_hypergraph(30, 3, 4));
  const std::size_t g = oracle::berge_girth(h);
  CHECK((g == 0 || g >= 6));
  CHECK(h.edge_count() > 0);

  CHECK(greedy_girth6_hypergraph(4, 4, 1).edge_count() == 1);
  CHECK_THROWS_AS(greedy_girth6_hypergraph(3, 4, 1), DomainError);
  CHECK_THROWS_AS(greedy_girth6_hypergraph(5, 1, 1), DomainError);
}
