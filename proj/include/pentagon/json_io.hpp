#pragma once

#include <json.hpp>

#include "pentagon/blocks.hpp"
#include "pentagon/bounds.hpp"
#include "pentagon/census.hpp"
#include "pentagon/count.hpp"
#include "pentagon/graph.hpp"
#include "pentagon/hypergraph.hpp"
#include "pentagon/middle_edge.hpp"
#include "pentagon/search.hpp"

namespace pentagon::io {

using nlohmann::json;

/// A number when it fits in 64 bits, otherwise its decimal string.
json count_json(Count c);

json graph_json(const Graph& g);
json degree_stats_json(const DegreeStats& s);
json hypergraph_json(const hyper::Hypergraph& h);

json triangle_census_json(const census::TriangleCensus& c, bool list_triangles = true);
json forbidden_json(const census::ForbiddenSubgraphReport& r);
json five_path_json(const census::FivePathCensus& c);
json two_path_json(const census::TwoPathReport& r);
json middle_edge_json(const census::MiddleEdgeCensus& c);

json blocks_json(const std::vector<blocks::Block>& bs);
json decomposition_json(const blocks::EdgeDecomposition& d);
json reduction_json(const blocks::ReductionLog& log);

json girth_json(const hyper::GirthResult& r);
json linearity_json(const hyper::LinearityVerdict& v);
json shadow_census_json(const hyper::ShadowCensus& c);
json containment_json(const hyper::CycleContainmentReport& r);
json hyperedge_paths_json(const hyper::HyperedgePathReport& r);

json bound_table_json(const bounds::BoundTable& t);
json alpha_optimum_json(const bounds::AlphaOptimum& a);

json exact_result_json(const search::ExactResult& r);
json local_search_json(const search::LocalSearchResult& r);

/// FNV-1a, 64 bit, printed as 16 hex digits.
std::string digest(std::string_view bytes);

}  // namespace pentagon::io
