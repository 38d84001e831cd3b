#include "pentagon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "pentagon/blocks.hpp"
#include "pentagon/bounds.hpp"
#include "pentagon/census.hpp"
#include "pentagon/error.hpp"
#include "pentagon/middle_edge.hpp"

namespace pentagon::verify {
namespace {

using Real = long double;

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {Status::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Status::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Status::Skipped, std::move(detail)}; }
Outcome verdict(bool ok, std::string detail) { return {ok ? Status::Pass : Status::Fail, std::move(detail)}; }

void run(Report& r, std::string tag, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o = fail(e.what());
  }
  r.checks.push_back({std::move(tag), o.status, std::move(o.detail)});
}

template <class... Parts>
std::string say(const Parts&... parts) {
  std::ostringstream os;
  os.precision(12);
  (os << ... << parts);
  return os.str();
}

std::string cycle_text(std::span<const Vertex> c) {
  std::string s;
  for (Vertex v : c) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

Real real(Count c) { return to_real(c); }

// Slack for comparisons of exact counts against real-valued bounds.
bool at_most(Real lhs, Real rhs) { return lhs <= rhs + 1e-9L * std::max<Real>(1, std::fabs(rhs)); }

struct GraphShape {
  Real n = 0;
  Real d = 0;
  Real dmax = 0;
};

GraphShape shape(const Graph& g) {
  GraphShape s;
  s.n = static_cast<Real>(g.n());
  if (g.n() == 0) return s;
  s.d = 2 * static_cast<Real>(g.edge_count()) / s.n;
  for (Vertex v = 0; v < g.n(); ++v) s.dmax = std::max<Real>(s.dmax, static_cast<Real>(g.degree(v)));
  return s;
}

bool decomposition_is_exact(const Graph& g, const blocks::EdgeDecomposition& d, std::string& why) {
  std::vector<Edge> seen;
  auto take = [&](const std::vector<Edge>& es) {
    for (Edge e : es) seen.push_back(e);
  };
  for (const auto& p : d.two_paths) take(blocks::part_edges(p));
  for (const auto& t : d.triangles) take(blocks::part_edges(t));
  for (const auto& k : d.k4s) take(blocks::part_edges(k));
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    why = "an edge appears in two components";
    return false;
  }
  if (seen != g.edges()) {
    why = say("components cover ", seen.size(), " edges, graph has ", g.edge_count());
    return false;
  }
  const double sum = d.alpha1 + d.alpha2 + d.alpha3;
  if (g.edge_count() > 0 && std::fabs(sum - 1.0) > 1e-12) {
    why = say("alpha fractions sum to ", sum);
    return false;
  }
  return true;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Advisory: return "advisory";
  }
  return "?";
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

const Check* Report::find(std::string_view tag) const {
  for (const auto& c : checks) {
    if (c.tag == tag) return &c;
  }
  return nullptr;
}

Suite parse_suite(std::string_view name) {
  if (name == "graph") return Suite::Graph;
  if (name == "hypergraph") return Suite::Hypergraph;
  if (name == "indc4c5") return Suite::IndC4C5;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Graph: return "graph";
    case Suite::Hypergraph: return "hypergraph";
    case Suite::IndC4C5: return "indc4c5";
  }
  return "?";
}

nlohmann::json checks_json(const Report& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r.checks) out.push_back({{"tag", c.tag}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

Report verify_graph(const Graph& g) {
  Report r;
  r.suite = "graph";
  const auto c5 = census::find_c5(g);
  const bool c5_free = !c5.has_value();
  const std::string no_c5 = c5 ? "precondition failed: contains the C5 " + cycle_text(*c5) : "";
  r.facts = {{"n", g.n()}, {"edge_count", g.edge_count()}, {"c5_free", c5_free}};
  if (c5) r.facts["c5_witness"] = std::vector<Vertex>(c5->begin(), c5->end());

  const auto split = blocks::split_triangle_edges(g);
  const Graph& gd = split.g_delta;
  r.facts["triangle_edges"] = gd.edge_count();

  run(r, "blocks-crown-or-k4", [&] {
    if (!c5_free) return skip(no_c5);
    const auto bs = blocks::triangle_blocks(g);
    const auto other = std::count_if(bs.begin(), bs.end(), [](const auto& b) { return b.kind == blocks::BlockKind::Other; });
    return verdict(other == 0, say(bs.size(), " blocks, ", other, " neither crown nor K4"));
  });

  run(r, "two-paths-between-nonadjacent", [&] {
    if (!c5_free) return skip(no_c5);
    const auto rep = census::two_path_report(gd);
    return verdict(rep.empty(), say(rep.count_violations.size(), " pairs with 3+ common neighbours, ",
                                    rep.adjacency_violations.size(), " with two non-adjacent common neighbours"));
  });

  std::optional<blocks::EdgeDecomposition> dec;
  run(r, "decomposition-exact-cover", [&] {
    if (!c5_free) return skip(no_c5);
    dec = blocks::edge_decomposition(gd);
    std::string why;
    const bool ok = decomposition_is_exact(gd, *dec, why);
    r.facts["alpha"] = {dec->alpha1, dec->alpha2, dec->alpha3};
    return verdict(ok, ok ? say(dec->two_paths.size(), " two-paths, ", dec->triangles.size(), " triangles, ",
                                dec->k4s.size(), " K4s")
                          : why);
  });

  const auto tdeg = census::triangle_degrees(gd);
  Real t_sum = 0;
  for (auto t : tdeg) t_sum += static_cast<Real>(t);
  const Real triangles = t_sum / 3;
  r.facts["triangles"] = static_cast<std::uint64_t>(triangles);

  run(r, "triangle-degree-sandwich", [&] {
    if (!c5_free) return skip(no_c5);
    for (Vertex v = 0; v < gd.n(); ++v) {
      if (tdeg[v] > gd.degree(v) || gd.degree(v) > 2 * tdeg[v]) {
        return fail(say("vertex ", v, ": t=", tdeg[v], " d=", gd.degree(v)));
      }
    }
    return pass(say("t(v) <= d(v) <= 2t(v) on all ", gd.n(), " vertices"));
  });

  run(r, "triangle-accounting", [&] {
    if (!dec) return skip("no decomposition");
    const Real e = static_cast<Real>(gd.edge_count());
    const Real cap = (4 - static_cast<Real>(dec->alpha())) * e / 6;
    return verdict(at_most(triangles, cap), say(triangles, " triangles <= (4-alpha)e/6 = ", cap));
  });

  const auto whole = census::five_path_census(g);
  const GraphShape s = shape(g);
  run(r, "walks-lower-bound", [&] {
    if (g.n() == 0) return skip("empty graph");
    const Real lower = s.n * std::pow(s.d, 5);
    return verdict(at_most(lower, real(whole.ordered_walks5)),
                   say("ordered 5-walks ", pentagon::to_string(whole.ordered_walks5), " >= n d^5 = ", lower));
  });

  run(r, "nonpath-walks-upper-bound", [&] {
    const Real cap = 15 * s.n * std::pow(s.dmax, 4);
    const Real nonpath = real(whole.ordered_nonpath_walks5());
    return verdict(at_most(nonpath, cap), say("ordered non-path 5-walks ", nonpath, " <= 15 n dmax^4 = ", cap));
  });

  const auto tri = census::five_path_census(gd);
  const GraphShape sd = shape(gd);
  const Real t_avg = gd.n() ? t_sum / sd.n : 0;
  run(r, "bad-paths-upper-bound", [&] {
    if (!c5_free) return skip(no_c5);
    const Real cap = 4 * sd.n * t_avg * std::pow(sd.dmax, 3);
    return verdict(at_most(real(tri.bad), cap), say("bad 5-paths ", pentagon::to_string(tri.bad), " <= 4 n t dmax^3 = ", cap));
  });

  run(r, "good-paths-lower-bound", [&] {
    if (!c5_free) return skip(no_c5);
    const Real lower = sd.n * std::pow(sd.d, 5) / 2 - 15 * sd.n * std::pow(sd.dmax, 4) -
                       4 * sd.n * t_avg * std::pow(sd.dmax, 3);
    return verdict(at_most(lower, real(tri.good)), say("good 5-paths ", pentagon::to_string(tri.good), " >= ", lower));
  });

  run(r, "good-paths-upper-bound", [&] {
    if (!dec) return skip("no decomposition");
    const Real cap = (1 + static_cast<Real>(dec->alpha())) / 8 * sd.n * sd.n * sd.n * sd.d;
    return verdict(at_most(real(tri.good), cap), say("good 5-paths ", pentagon::to_string(tri.good), " <= (1+alpha)/8 n^3 d = ", cap));
  });

  std::optional<census::MiddleEdgeCensus> mid;
  run(r, "middle-edge-caps", [&] {
    if (!dec) return skip("no decomposition");
    mid = census::middle_edge_census(gd, *dec, {});
    if (mid->total_good != tri.good) {
      return fail(say("parts account for ", pentagon::to_string(mid->total_good), " good 5-paths, census has ", pentagon::to_string(tri.good)));
    }
    const auto over = std::count_if(mid->parts.begin(), mid->parts.end(), [](const auto& p) { return !p.within_cap; });
    return verdict(over == 0, say(mid->parts.size(), " parts, ", over, " above their cap"));
  });

  run(r, "anchor-limit", [&] {
    if (!mid) return skip("no middle-edge census");
    return verdict(mid->anchor_cap_holds && mid->pair_product_holds,
                   say("at most two anchored good 2-paths per target: ", mid->anchor_cap_holds,
                       ", part counts within anchor products: ", mid->pair_product_holds));
  });

  run(r, "core-reduction-fixed-point", [&] {
    const auto [core, log] = blocks::triangle_core_reduction(g);
    const auto ct = census::triangle_degrees(core);
    std::uint64_t total = 0;
    for (auto t : ct) total += t;
    for (Vertex v = 0; v < core.n(); ++v) {
      if (3 * core.n() * ct[v] < total) return fail(say("vertex ", log.kept[v], " has t(v) < t/3 after reduction"));
    }
    r.facts["reduction"] = {{"removed", log.removed.size()}, {"t_before", log.t_before}, {"t_after", log.t_after}};
    return pass(say(log.removed.size(), " vertices removed, t ", log.t_before, " -> ", log.t_after));
  });

  run(r, "k4-hypergraph-linear-girth6", [&] {
    if (!c5_free) return skip(no_c5);
    const auto h = hyper::k4_hypergraph(g);
    const bool linear = hyper::is_linear(h).linear;
    const bool girth = hyper::berge_girth(h).at_least_cap();
    return verdict(linear && girth, say(h.edge_count(), " K4 blocks, linear ", linear, ", girth >= 6 ", girth));
  });

  run(r, "triangle-bound-advisory", [&] {
    if (!c5_free) return skip(no_c5);
    const auto all = census::triangle_census(g).total;
    const Real cap = bounds::coefficient_table().at("improved_upper").value * std::pow(s.n, 1.5L);
    Outcome o{static_cast<Real>(all) <= cap ? Status::Pass : Status::Advisory,
              say(all, " triangles vs max_a f(a) n^{3/2} = ", cap)};
    return o;
  });

  return r;
}

Report verify_indc4c5(const Graph& g) {
  Report r;
  r.suite = "indc4c5";
  const auto forb = census::forbidden_subgraphs(g);
  r.facts = {{"n", g.n()},
             {"edge_count", g.edge_count()},
             {"c5_free", !forb.contains_c5()},
             {"induced_c4_free", !forb.contains_induced_c4()}};
  std::string why;
  if (forb.c5) why = "precondition failed: contains the C5 " + cycle_text(*forb.c5);
  else if (forb.induced_c4) why = "precondition failed: contains the induced C4 " + cycle_text(*forb.induced_c4);
  const bool ok = why.empty();

  run(r, "two-paths-between-nonadjacent", [&] {
    if (!ok) return skip(why);
    const auto rep = census::two_path_report(g);
    return verdict(rep.empty(), say(rep.count_violations.size(), " pairs with 3+ common neighbours, ",
                                    rep.adjacency_violations.size(), " with two non-adjacent common neighbours"));
  });

  run(r, "blocks-crown-or-k4", [&] {
    if (!ok) return skip(why);
    const auto bs = blocks::triangle_blocks(g);
    const auto other = std::count_if(bs.begin(), bs.end(), [](const auto& b) { return b.kind == blocks::BlockKind::Other; });
    return verdict(other == 0, say(bs.size(), " blocks, ", other, " neither crown nor K4"));
  });

  const auto split = blocks::split_triangle_edges(g);
  r.facts["triangle_edges"] = split.g_delta.edge_count();
  r.facts["other_edges"] = split.g_s.edge_count();

  std::optional<census::MiddleEdgeCensus> mid;
  run(r, "middle-edge-caps", [&] {
    if (!ok) return skip(why);
    const auto dec = blocks::edge_decomposition(split.g_delta);
    const auto gs = split.g_s.edges();
    mid = census::middle_edge_census(g, dec, gs);
    const auto good = census::five_path_census(g).good;
    if (mid->total_good != good) {
      return fail(say("parts account for ", pentagon::to_string(mid->total_good), " good 5-paths, census has ", pentagon::to_string(good)));
    }
    const auto over = std::count_if(mid->parts.begin(), mid->parts.end(), [](const auto& p) { return !p.within_cap; });
    return verdict(over == 0, say(mid->parts.size(), " parts (", gs.size(), " single edges), ", over, " above their cap"));
  });

  run(r, "anchor-limit", [&] {
    if (!mid) return skip(ok ? "no middle-edge census" : why);
    return verdict(mid->anchor_cap_holds && mid->pair_product_holds,
                   say("at most two anchored good 2-paths per target: ", mid->anchor_cap_holds,
                       ", part counts within anchor products: ", mid->pair_product_holds));
  });

  run(r, "four-cycles-within-block", [&] {
    if (!ok) return skip(why);
    const auto cross = blocks::cross_block_four_cycles(g);
    if (cross.empty()) return pass("every 4-cycle lies inside one block");
    return fail(say(cross.size(), " cross-block 4-cycles, first ", cycle_text(cross.front())));
  });

  run(r, "c4-free-extraction", [&] {
    if (!ok) return skip(why);
    const Graph sub = blocks::extract_c4_free_subgraph(g);
    const auto rep = census::forbidden_subgraphs(sub);
    for (const Edge& e : sub.edges()) {
      if (!g.has_edge(e.u, e.v)) return fail(say("extracted edge ", e.u, "-", e.v, " is not in the graph"));
    }
    const bool enough = 2 * sub.edge_count() >= 2 * split.g_s.edge_count() + split.g_delta.edge_count();
    r.facts["extracted_edges"] = sub.edge_count();
    return verdict(!rep.contains_c4() && !rep.contains_c5() && enough,
                   say(sub.edge_count(), " edges kept of ", g.edge_count(), "; C4 ", rep.contains_c4(), ", C5 ",
                       rep.contains_c5(), ", at least |E_S| + |E_T|/2 ", enough));
  });

  run(r, "edge-bound-advisory", [&] {
    if (!ok) return skip(why);
    const Real cap = bounds::indc4c5_edge_bound(static_cast<double>(g.n()));
    return Outcome{static_cast<Real>(g.edge_count()) <= cap ? Status::Pass : Status::Advisory,
                   say(g.edge_count(), " edges vs n^{3/2}/(2 * 2^{1/10}) = ", cap)};
  });

  return r;
}

Report verify_hypergraph(const hyper::Hypergraph& h) {
  Report r;
  r.suite = "hypergraph";
  const auto lin = hyper::is_linear(h);
  const auto girth = hyper::berge_girth(h);
  r.facts = {{"n", h.n()}, {"r", h.r()}, {"edge_count", h.edge_count()}, {"linear", lin.linear}};
  if (girth.cycle) {
    r.facts["girth"] = girth.girth();
    r.facts["girth_witness"] = girth.cycle->vertices;
  } else {
    r.facts["girth"] = ">=6";
  }
  const bool g6 = girth.at_least_cap();
  const std::string short_cycle =
      g6 ? "" : say("precondition failed: Berge cycle of length ", girth.girth(), " through ", cycle_text(girth.cycle->vertices));

  const auto sc = hyper::three_path_census(h);
  const Real n = static_cast<Real>(h.n());
  const Real e = static_cast<Real>(h.edge_count());
  const Real rr = static_cast<Real>(h.r());

  run(r, "shadow-degree-identity", [&] {
    if (!lin.linear) return skip("precondition failed: not linear");
    for (Vertex v = 0; v < h.n(); ++v) {
      if (sc.shadow.degree(v) != (h.r() - 1) * h.degree(v)) {
        return fail(say("vertex ", v, ": shadow degree ", sc.shadow.degree(v), ", hyperedge degree ", h.degree(v)));
      }
    }
    return pass(say("shadow degree = (r-1) * degree on all ", h.n(), " vertices"));
  });

  run(r, "shadow-paths-lower-bound", [&] {
    if (h.n() == 0) return skip("empty hypergraph");
    const Real dd = sc.d_shadow;
    const Real dm = static_cast<Real>(sc.d_shadow_max);
    const Real lower = n * dd * dd * dd - 3 * n * dm * dm;
    return verdict(at_most(lower, real(sc.paths3())), say("ordered 3-paths ", pentagon::to_string(sc.paths3()), " >= ", lower));
  });

  run(r, "bad-shadow-paths-upper-bound", [&] {
    const Real triples = rr * (rr - 1) * (rr - 2) / 6;
    const Real cap = 2 * e * triples * 6 * static_cast<Real>(sc.d_shadow_max);
    return verdict(at_most(real(sc.bad3), cap), say("bad ordered 3-paths ", pentagon::to_string(sc.bad3), " <= ", cap));
  });

  run(r, "short-shadow-cycles-in-hyperedge", [&] {
    if (!g6) return skip(short_cycle);
    const auto rep = hyper::cycle_containment_check(h);
    if (rep.violations.empty()) return pass(say(rep.cycles_checked, " shadow cycles of length 3..5 checked"));
    return fail(say(rep.violations.size(), " cycles escape every hyperedge, first ", cycle_text(rep.violations.front())));
  });

  run(r, "good-paths-per-hyperedge-target", [&] {
    if (!g6) return skip(short_cycle);
    const auto rep = hyper::hyperedge_3path_bound_report(h);
    return verdict(rep.max_count + 1 <= h.r(), say("max good 3-paths from one hyperedge to one vertex ", rep.max_count,
                                                   " <= r-1 = ", h.r() - 1));
  });

  run(r, "good-shadow-paths-upper-bound", [&] {
    if (!g6) return skip(short_cycle);
    const Real cap = e * (rr - 1) * n;
    return verdict(at_most(real(sc.good3), cap), say("good ordered 3-paths ", pentagon::to_string(sc.good3), " <= |E|(r-1)n = ", cap));
  });

  run(r, "k4-round-trip", [&] {
    if (h.r() != 4) return skip("uniformity is not 4");
    if (!g6) return skip(short_cycle);
    auto back = hyper::k4_hypergraph(sc.shadow).edge_sets();
    auto mine = h.edge_sets();
    std::sort(back.begin(), back.end());
    std::sort(mine.begin(), mine.end());
    return verdict(back == mine, say(back.size(), " K4 blocks in the shadow, ", mine.size(), " hyperedges"));
  });

  run(r, "edge-bound-advisory", [&] {
    if (!g6) return skip(short_cycle);
    if (h.r() < 2) return skip("uniformity below 2");
    const Real cap = bounds::hypergraph_edge_bounds(static_cast<double>(h.n()), static_cast<unsigned>(h.r())).girth6;
    return Outcome{e <= cap ? Status::Pass : Status::Advisory, say(h.edge_count(), " hyperedges vs ", cap)};
  });

  return r;
}

}  // namespace pentagon::verify
