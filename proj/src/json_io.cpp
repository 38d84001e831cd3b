#include "pentagon/json_io.hpp"

#include <cstdio>

namespace pentagon::io {

json count_json(Count c) {
  if (c <= Count(UINT64_MAX)) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

namespace {

json edge_pairs(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

template <class Seq>
json list(const Seq& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x);
  return out;
}

json triangle_json(const census::Triangle& t) { return {t.a, t.b, t.c}; }

}  // namespace

json graph_json(const Graph& g) {
  std::vector<std::size_t> degrees(g.n());
  for (Vertex v = 0; v < g.n(); ++v) degrees[v] = g.degree(v);
  return {{"n", g.n()}, {"edge_count", g.edge_count()}, {"edges", edge_pairs(g.edges())}, {"degrees", degrees}};
}

json degree_stats_json(const DegreeStats& s) {
  return {{"average", s.average}, {"maximum", s.maximum}, {"minimum", s.minimum}};
}

json hypergraph_json(const hyper::Hypergraph& h) {
  return {{"n", h.n()}, {"r", h.r()}, {"edge_count", h.edge_count()}, {"edges", h.edge_sets()}};
}

json triangle_census_json(const census::TriangleCensus& c, bool list_triangles) {
  json out{{"total", c.total}, {"average", c.average}, {"per_vertex", c.per_vertex}};
  if (list_triangles) {
    json ts = json::array();
    for (const auto& t : c.triangles) ts.push_back(triangle_json(t));
    out["triangles"] = std::move(ts);
  }
  return out;
}

json forbidden_json(const census::ForbiddenSubgraphReport& r) {
  auto witness = [](const auto& w) { return w ? list(*w) : json(nullptr); };
  return {{"contains_c4", r.contains_c4()},
          {"c4_witness", witness(r.c4)},
          {"contains_c5", r.contains_c5()},
          {"c5_witness", witness(r.c5)},
          {"contains_induced_c4", r.contains_induced_c4()},
          {"induced_c4_witness", witness(r.induced_c4)}};
}

json five_path_json(const census::FivePathCensus& c) {
  return {{"good", count_json(c.good)},
          {"bad", count_json(c.bad)},
          {"paths", count_json(c.paths())},
          {"ordered_walks5", count_json(c.ordered_walks5)},
          {"ordered_nonpath_walks5", count_json(c.ordered_nonpath_walks5())}};
}

json two_path_json(const census::TwoPathReport& r) {
  auto rows = [](const std::vector<census::TwoPathViolation>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back({{"u", v.u}, {"v", v.v}, {"common", v.common}});
    return out;
  };
  return {{"violations_count", rows(r.count_violations)}, {"violations_adjacency", rows(r.adjacency_violations)}};
}

json middle_edge_json(const census::MiddleEdgeCensus& c) {
  json parts = json::array();
  for (const auto& p : c.parts) {
    parts.push_back({{"kind", census::to_string(p.kind)},
                     {"vertices", p.vertices},
                     {"anchors", p.anchors},
                     {"max_paths_per_target", p.max_paths_per_target},
                     {"good_paths", count_json(p.good_paths)},
                     {"pair_product", count_json(p.pair_product)},
                     {"within_cap", p.within_cap}});
  }
  return {{"n", c.n},
          {"total_good", count_json(c.total_good)},
          {"all_within_cap", c.all_within_cap},
          {"anchor_cap_holds", c.anchor_cap_holds},
          {"pair_product_holds", c.pair_product_holds},
          {"parts", std::move(parts)}};
}

json blocks_json(const std::vector<blocks::Block>& bs) {
  json out = json::array();
  for (const auto& b : bs) {
    json ts = json::array();
    for (const auto& t : b.triangles) ts.push_back(triangle_json(t));
    json entry{{"kind", blocks::to_string(b.kind)}, {"vertices", b.vertices}, {"triangles", std::move(ts)},
               {"edges", edge_pairs(b.edges)}};
    if (b.kind == blocks::BlockKind::Crown) entry["base"] = {b.base.u, b.base.v};
    out.push_back(std::move(entry));
  }
  return out;
}

json decomposition_json(const blocks::EdgeDecomposition& d) {
  json paths = json::array();
  for (const auto& p : d.two_paths) paths.push_back({p.a, p.c, p.b});
  json ts = json::array();
  for (const auto& t : d.triangles) ts.push_back(triangle_json(t));
  return {{"two_paths", std::move(paths)},
          {"triangles", std::move(ts)},
          {"k4s", d.k4s},
          {"edge_total", d.edge_total},
          {"alpha1", d.alpha1},
          {"alpha2", d.alpha2},
          {"alpha3", d.alpha3},
          {"alpha", d.alpha()}};
}

json reduction_json(const blocks::ReductionLog& log) {
  return {{"removed", log.removed}, {"kept", log.kept}, {"t_before", log.t_before}, {"t_after", log.t_after}};
}

json girth_json(const hyper::GirthResult& r) {
  json out{{"cap", r.cap}, {"at_least_cap", r.at_least_cap()}};
  if (r.cycle) {
    out["girth"] = r.girth();
    out["witness"] = {{"vertices", r.cycle->vertices}, {"hyperedges", r.cycle->edges}};
  } else {
    out["girth"] = ">=" + std::to_string(r.cap);
  }
  return out;
}

json linearity_json(const hyper::LinearityVerdict& v) {
  json out{{"linear", v.linear}};
  if (v.witness) out["witness"] = {v.witness->first, v.witness->second};
  return out;
}

json shadow_census_json(const hyper::ShadowCensus& c) {
  return {{"shadow_edges", c.shadow.edge_count()},
          {"d_shadow", c.d_shadow},
          {"d_shadow_max", c.d_shadow_max},
          {"good3", count_json(c.good3)},
          {"bad3", count_json(c.bad3)},
          {"paths3", count_json(c.paths3())},
          {"ordered_walks3", count_json(c.ordered_walks3)}};
}

json containment_json(const hyper::CycleContainmentReport& r) {
  return {{"cycles_checked", r.cycles_checked}, {"violations", r.violations}};
}

json hyperedge_paths_json(const hyper::HyperedgePathReport& r) {
  json rows = json::array();
  for (const auto& c : r.counts) rows.push_back({c.edge, c.target, c.good_paths});
  return {{"max_count", r.max_count}, {"counts", std::move(rows)}};
}

json bound_table_json(const bounds::BoundTable& t) {
  json out = json::array();
  for (const auto& c : t.entries) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", c.value);
    out.push_back({{"key", c.key}, {"value", c.value}, {"decimal", buf}, {"formula", c.formula}, {"source", c.source}});
  }
  return out;
}

json alpha_optimum_json(const bounds::AlphaOptimum& a) {
  return {{"alpha_star", a.alpha_star},   {"coefficient", a.coefficient}, {"branch_crossing", a.branch_crossing},
          {"left_slope", a.left_slope},   {"right_slope", a.right_slope}, {"grid_max", a.grid_max},
          {"iterations", a.iterations}};
}

json exact_result_json(const search::ExactResult& r) {
  json out{{"objective", search::to_string(r.objective)},
           {"n", r.n},
           {"value", r.value},
           {"graphs_examined", r.graphs_examined},
           {"strategy", r.strategy}};
  if (r.graph) out["witness"] = graph_json(*r.graph);
  if (r.hypergraph) out["witness"] = hypergraph_json(*r.hypergraph);
  return out;
}

json local_search_json(const search::LocalSearchResult& r) {
  json trace = json::array();
  for (const auto& t : r.trace) trace.push_back({{"iteration", t.iteration}, {"triangles", t.triangles}, {"move", t.move}});
  return {{"triangles", r.triangles},
          {"iterations_run", r.iterations_run},
          {"plateau_stop", r.plateau_stop},
          {"trace", std::move(trace)},
          {"best", graph_json(r.best)}};
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pentagon::io
