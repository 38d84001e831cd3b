#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pentagon/graph.hpp"
#include "pentagon/hypergraph.hpp"

namespace pentagon::verify {

enum class Status { Pass, Fail, Skipped, Advisory };

const char* to_string(Status s);

struct Check {
  std::string tag;
  Status status = Status::Skipped;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  nlohmann::json facts = nlohmann::json::object();

  /// No check failed. Skipped and advisory checks do not count against it.
  bool passed() const;
  const Check* find(std::string_view tag) const;
};

enum class Suite { Graph, Hypergraph, IndC4C5 };

Suite parse_suite(std::string_view name);
const char* to_string(Suite s);

/// "graph": the triangle structure of C5-free graphs, checked on the
/// subgraph of triangle edges, plus walk accounting on the whole graph.
Report verify_graph(const Graph& g);
/// "indc4c5": two-path limits, middle-edge caps including the triangle-free
/// edges, the cross-block 4-cycle scan and the C4-free extraction.
Report verify_indc4c5(const Graph& g);
/// "hypergraph": shadow path accounting and the short-cycle and per-target
/// path limits of girth-6 hypergraphs.
Report verify_hypergraph(const hyper::Hypergraph& h);

nlohmann::json checks_json(const Report& r);

}  // namespace pentagon::verify
