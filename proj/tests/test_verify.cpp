#include <doctest.h>

#include "corpus.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"
#include "pentagon/verify.hpp"

using namespace pentagon;
using namespace pentagon::verify;

namespace {

void require_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    CAPTURE(c.tag);
    CAPTURE(c.detail);
    CHECK(c.status != Status::Fail);
  }
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("graph suite on doubled incidence graphs") {
  for (std::uint64_t q : {2, 3}) {
    const Report r = verify_graph(construct::bollobas_gyori(q));
    require_all_pass(r);
    REQUIRE(r.find("blocks-crown-or-k4"));
    CHECK(r.find("blocks-crown-or-k4")->status == Status::Pass);
    // 0.232 n^{3/2} is 22.3 at n=21 and 56.5 at n=39.
    CHECK(r.find("triangle-bound-advisory")->status == Status::Pass);
    CHECK(r.find("no-such-check") == nullptr);
  }
}

TEST_CASE("finite-n excess is advisory, not a failure") {
  const Report r = verify_graph(construct::gadget(construct::GadgetKind::K4Chain, 1));
  CHECK(r.find("triangle-bound-advisory")->status == Status::Advisory);
  CHECK(r.passed());
}

TEST_CASE("graph suite skips C5-dependent checks on a C5") {
  Graph c5(5);
  for (Vertex i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  const Report r = verify_graph(c5);
  CHECK(r.passed());
  const Check* c = r.find("blocks-crown-or-k4");
  REQUIRE(c);
  CHECK(c->status == Status::Skipped);
  CHECK(c->detail.find("precondition failed") != std::string::npos);
  CHECK(r.find("walks-lower-bound")->status == Status::Pass);
}

TEST_CASE("graph suite on the random corpus") {
  for (const auto& [name, g] : corpus::random_c5_free()) {
    if (g.n() > 20) continue;
    CAPTURE(name);
    require_all_pass(verify_graph(g));
  }
}

TEST_CASE("induced-C4 suite") {
  require_all_pass(verify_indc4c5(construct::bollobas_gyori(2)));
  for (std::size_t k = 1; k <= 3; ++k) require_all_pass(verify_indc4c5(construct::gadget(construct::GadgetKind::K4Chain, k)));

  Graph c4(4);
  for (Vertex i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  const Report r = verify_indc4c5(c4);
  CHECK(r.passed());
  CHECK(r.find("c4-free-extraction")->status == Status::Skipped);
}

TEST_CASE("hypergraph suite") {
  require_all_pass(verify_hypergraph(construct::greedy_girth6_hypergraph(40, 3, 1)));
  const Report r4 = verify_hypergraph(construct::greedy_girth6_hypergraph(40, 4, 1));
  require_all_pass(r4);
  CHECK(r4.find("k4-round-trip")->status == Status::Pass);

  hyper::Hypergraph fano(7, 3);
  for (auto l : {std::array<Vertex, 3>{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}) {
    fano.add_edge(l);
  }
  const Report f = verify_hypergraph(fano);
  CHECK(f.find("short-shadow-cycles-in-hyperedge")->status == Status::Skipped);
  CHECK(f.find("shadow-degree-identity")->status == Status::Pass);
}

TEST_CASE("suite names and JSON") {
  CHECK(parse_suite("graph") == Suite::Graph);
  CHECK(parse_suite("indc4c5") == Suite::IndC4C5);
  CHECK(parse_suite("hypergraph") == Suite::Hypergraph);
  CHECK_THROWS_AS(parse_suite("other"), DomainError);
  const auto j = checks_json(verify_graph(construct::bollobas_gyori(2)));
  REQUIRE(j.is_array());
  CHECK(j.front().contains("tag"));
  CHECK(j.front().contains("status"));
}
