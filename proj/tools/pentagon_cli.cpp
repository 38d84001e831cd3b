#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentagon/blocks.hpp"
#include "pentagon/bounds.hpp"
#include "pentagon/census.hpp"
#include "pentagon/constructions.hpp"
#include "pentagon/error.hpp"
#include "pentagon/hypergraph.hpp"
#include "pentagon/json_io.hpp"
#include "pentagon/middle_edge.hpp"
#include "pentagon/search.hpp"
#include "pentagon/verify.hpp"

using namespace pentagon;
using nlohmann::json;

namespace {

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::uint64_t q = 2;
  std::size_t n = 0;
  std::size_t r = 3;
  std::uint64_t iters = 10000;
  std::uint64_t budget = 100000;
  std::size_t max_n = 5000;
  bool remap = false;

  // construct
  bool bgy = false;
  bool pg = false;
  bool greedy = false;
  bool random = false;
  bool forbid_induced_c4 = false;
  std::string gadget;
  std::size_t param = 1;

  // census
  bool triangles = false;
  bool forbidden = false;
  bool five_paths = false;
  bool two_paths = false;
  bool middle_edge = false;
  bool degrees = false;
  unsigned walks = 0;

  // decompose
  bool extract = false;

  // hyper
  std::string shadow_out;

  // bounds
  bool table = false;
  bool optimize_alpha = false;
  std::vector<double> alpha;
  double tolerance = 1e-12;
  std::vector<double> triangle_bound;
  bool hyper_bounds = false;

  // search
  bool exact = false;
  std::string objective = "triangles";
  std::uint64_t warm_bgy = 0;

  std::string suite = "graph";
};

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

struct Loaded {
  Graph g;
  std::string digest;
  std::vector<std::uint64_t> original_ids;
};

Loaded load_graph(const Options& o) {
  const std::string text = slurp(o.input);
  Loaded out;
  out.digest = io::digest(text);
  if (o.remap) {
    auto rg = parse_edge_list_remapped(text);
    out.g = std::move(rg.graph);
    out.original_ids = std::move(rg.original_ids);
  } else {
    out.g = parse_edge_list(text);
  }
  if (out.g.n() > o.max_n) {
    throw UsageError("graph has " + std::to_string(out.g.n()) + " vertices, above --max-n " + std::to_string(o.max_n));
  }
  return out;
}

json scalar(const std::string& text) {
  if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '-' || text.front() == '.')) {
    json number = json::parse(text, nullptr, false);
    if (number.is_number()) return number;
  }
  return text;
}

json parameters_of(const CLI::App& sub) {
  json p = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string name = opt->get_name(false, true);
    if (name.empty()) name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(0, 1);
    const auto& res = opt->results();
    if (opt->get_expected_max() == 0) p[name] = true;
    else if (res.size() == 1) p[name] = scalar(res.front());
    else {
      json all = json::array();
      for (const auto& x : res) all.push_back(scalar(x));
      p[name] = std::move(all);
    }
  }
  return p;
}

struct Run {
  json results = json::object();
  json checks = json::array();
  std::string digest;
  bool failed = false;
  std::string raw;  // printed instead of JSON when set (edge lists, TSV)
};

void add_check(Run& run, const std::string& tag, bool ok, const std::string& detail) {
  run.checks.push_back({{"tag", tag}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
  run.failed = run.failed || !ok;
}

void require_json(const Options& o, const char* what) {
  if (o.format != "json") throw UsageError(std::string("--format tsv is only available for tables, not ") + what);
}

Run do_construct(const Options& o) {
  Run run;
  const int picked = o.bgy + o.pg + o.greedy + o.random + !o.gadget.empty();
  if (picked != 1) throw UsageError("choose exactly one of --bgy, --pg, --greedy, --random, --gadget");
  std::string text;
  std::string recipe;
  if (o.greedy) {
    if (o.n < o.r || o.r < 2) throw UsageError("--greedy needs --n >= --r >= 2");
    const auto h = construct::greedy_girth6_hypergraph(o.n, o.r, o.seed, o.budget);
    text = hyper::to_text(h);
    run.results["hypergraph"] = {{"n", h.n()}, {"r", h.r()}, {"edge_count", h.edge_count()}};
    recipe = "greedy " + std::to_string(o.n) + " " + std::to_string(o.r) + " " + std::to_string(o.seed) + " " +
           std::to_string(o.budget);
  } else {
    Graph g;
    if (o.bgy) {
      g = construct::bollobas_gyori(o.q);
      recipe = "bgy " + std::to_string(o.q);
    } else if (o.pg) {
      g = construct::projective_plane_incidence(o.q);
      recipe = "pg " + std::to_string(o.q);
    } else if (o.random) {
      if (o.n == 0) throw UsageError("--random needs --n >= 1");
      construct::RandomC5FreeOptions ro;
      ro.budget = o.budget;
      ro.forbid_induced_c4 = o.forbid_induced_c4;
      g = construct::random_c5_free(o.n, o.seed, ro);
      recipe = "random " + std::to_string(o.n) + " " + std::to_string(o.seed) + " " + std::to_string(o.budget) +
             (o.forbid_induced_c4 ? " indc4" : "");
    } else {
      g = construct::gadget(construct::parse_gadget_kind(o.gadget), o.param);
      recipe = "gadget " + o.gadget + " " + std::to_string(o.param);
    }
    text = to_edge_list(g);
    run.results["graph"] = {{"n", g.n()}, {"edge_count", g.edge_count()},
                            {"triangles", census::triangle_census(g).total}};
  }
  run.digest = io::digest(recipe);
  if (o.out.empty()) {
    run.raw = text;
  } else {
    spit(o.out, text);
    run.results["written"] = o.out;
  }
  return run;
}

Run do_census(const Options& o) {
  Run run;
  const auto in = load_graph(o);
  const Graph& g = in.g;
  run.digest = in.digest;
  const bool all = !(o.triangles || o.forbidden || o.five_paths || o.two_paths || o.middle_edge || o.degrees || o.walks);
  if (o.format == "tsv") {
    const auto tc = census::triangle_census(g);
    std::ostringstream os;
    os << "vertex\tdegree\ttriangles\n";
    for (Vertex v = 0; v < g.n(); ++v) {
      os << (in.original_ids.empty() ? v : in.original_ids[v]) << '\t' << g.degree(v) << '\t' << tc.per_vertex[v] << '\n';
    }
    run.raw = os.str();
    return run;
  }
  run.results["n"] = g.n();
  run.results["edge_count"] = g.edge_count();
  if (!in.original_ids.empty()) run.results["original_ids"] = in.original_ids;
  if (all || o.degrees) {
    if (g.n() > 0) run.results["degree_stats"] = io::degree_stats_json(degree_stats(g));
  }
  if (all || o.triangles) run.results["triangle_census"] = io::triangle_census_json(census::triangle_census(g));
  if (all || o.forbidden) run.results["forbidden_subgraphs"] = io::forbidden_json(census::forbidden_subgraphs(g));
  if (all || o.five_paths) run.results["five_path_census"] = io::five_path_json(census::five_path_census(g));
  if (all || o.two_paths) run.results["two_path_report"] = io::two_path_json(census::two_path_report(g));
  if (o.walks) run.results["walks"] = {{"k", o.walks}, {"ordered", io::count_json(census::count_walks(g, o.walks))}};
  if (all || o.middle_edge) {
    // The triangle edges are decomposed, the rest are single-edge parts.
    try {
      const auto split = blocks::split_triangle_edges(g);
      const auto dec = blocks::edge_decomposition(split.g_delta);
      run.results["middle_edge_census"] = io::middle_edge_json(census::middle_edge_census(g, dec, split.g_s.edges()));
    } catch (const StructuralError& e) {
      run.results["middle_edge_census"] = {{"error", e.what()}, {"witness", e.witness()}};
    }
  }
  return run;
}

Run do_decompose(const Options& o) {
  require_json(o, "decompose");
  Run run;
  const auto in = load_graph(o);
  const Graph& g = in.g;
  run.digest = in.digest;
  const auto bs = blocks::triangle_blocks(g);
  run.results["blocks"] = io::blocks_json(bs);
  const auto split = blocks::split_triangle_edges(g);
  run.results["split"] = {{"triangle_edges", split.g_delta.edge_count()}, {"other_edges", split.g_s.edge_count()}};
  try {
    run.results["decomposition"] = io::decomposition_json(blocks::edge_decomposition(split.g_delta));
  } catch (const StructuralError& e) {
    run.results["decomposition"] = {{"error", e.what()}, {"witness", e.witness()}};
  }
  const auto [core, log] = blocks::triangle_core_reduction(g);
  run.results["reduction"] = io::reduction_json(log);
  if (o.extract) {
    try {
      const Graph sub = blocks::extract_c4_free_subgraph(g);
      run.results["extraction"] = io::graph_json(sub);
      const bool enough = 2 * sub.edge_count() >= 2 * split.g_s.edge_count() + split.g_delta.edge_count();
      add_check(run, "c4-free-extraction-size", enough,
                std::to_string(sub.edge_count()) + " of " + std::to_string(g.edge_count()) + " edges kept");
    } catch (const StructuralError& e) {
      run.results["extraction"] = {{"error", e.what()}, {"witness", e.witness()}};
    }
  }
  return run;
}

Run do_hyper(const Options& o) {
  require_json(o, "hyper");
  Run run;
  hyper::Hypergraph h;
  if (o.greedy) {
    if (o.n < o.r || o.r < 2) throw UsageError("--greedy needs --n >= --r >= 2");
    h = construct::greedy_girth6_hypergraph(o.n, o.r, o.seed, o.budget);
    run.digest = io::digest("greedy " + std::to_string(o.n) + " " + std::to_string(o.r) + " " + std::to_string(o.seed) +
                            " " + std::to_string(o.budget));
  } else {
    if (o.input.empty()) throw UsageError("hyper needs an input file or --greedy");
    const std::string text = slurp(o.input);
    run.digest = io::digest(text);
    h = hyper::parse_hypergraph(text);
  }
  if (h.n() > o.max_n) throw UsageError("hypergraph above --max-n");
  run.results["hypergraph"] = io::hypergraph_json(h);
  run.results["linearity"] = io::linearity_json(hyper::is_linear(h));
  const auto girth = hyper::berge_girth(h);
  run.results["girth"] = io::girth_json(girth);
  const auto sc = hyper::three_path_census(h);
  run.results["shadow_census"] = io::shadow_census_json(sc);
  if (girth.at_least_cap()) {
    run.results["cycle_containment"] = io::containment_json(hyper::cycle_containment_check(h));
    const auto rep = hyper::hyperedge_3path_bound_report(h);
    run.results["hyperedge_paths"] = {{"max_count", rep.max_count}, {"pairs", rep.counts.size()}};
  }
  if (!o.shadow_out.empty()) spit(o.shadow_out, to_edge_list(sc.shadow));
  return run;
}

Run do_bounds(const Options& o) {
  Run run;
  run.digest = io::digest("bounds");
  const bool all = !(o.table || o.optimize_alpha || !o.alpha.empty() || !o.triangle_bound.empty() || o.hyper_bounds);
  const auto table = bounds::coefficient_table();
  if (o.format == "tsv") {
    std::ostringstream os;
    os << "key\tvalue\tformula\n";
    char buf[64];
    for (const auto& c : table.entries) {
      std::snprintf(buf, sizeof buf, "%.12f", c.value);
      os << c.key << '\t' << buf << '\t' << c.formula << '\n';
    }
    run.raw = os.str();
    return run;
  }
  if (all || o.table) run.results["table"] = io::bound_table_json(table);
  if (all || o.optimize_alpha) {
    const auto a = bounds::optimize_alpha(o.tolerance);
    run.results["alpha_optimum"] = io::alpha_optimum_json(a);
    add_check(run, "alpha-branch-crossing", a.branch_crossing, "bisection root of the branch gap");
    add_check(run, "alpha-grid-max", a.grid_max <= a.coefficient + 1e-6, "no grid point beats the crossing");
  }
  for (double a : o.alpha) {
    run.results["objective"].push_back({{"alpha", a}, {"value", bounds::alpha_objective(a)}});
  }
  if (!o.triangle_bound.empty()) {
    if (o.triangle_bound.size() != 2) throw UsageError("--triangle-bound takes N ALPHA");
    run.results["triangle_bound"] = bounds::triangle_bound(o.triangle_bound[0], o.triangle_bound[1]);
  }
  if (o.hyper_bounds) {
    if (o.n == 0) throw UsageError("--hyper-bounds needs --n");
    const auto hb = bounds::hypergraph_edge_bounds(static_cast<double>(o.n), static_cast<unsigned>(o.r));
    run.results["hypergraph_edge_bounds"] = {{"girth6", hb.girth6}, {"girth5", hb.girth5}, {"ratio", hb.ratio}};
  }
  return run;
}

Run do_search(const Options& o) {
  Run run;
  const auto objective = search::parse_objective(o.objective);
  run.digest = io::digest("search " + o.objective + " " + std::to_string(o.n));
  if (o.exact) {
    require_json(o, "exact search");
    search::ExactResult res;
    switch (objective) {
      case search::Objective::Triangles: res = search::exact_max_triangles_c5free(o.n); break;
      case search::Objective::Edges: res = search::exact_max_edges_indc4c5(o.n); break;
      case search::Objective::Hyperedges: res = search::exact_max_hyperedges_girth6(o.n); break;
    }
    run.results["exact"] = io::exact_result_json(res);
    return run;
  }
  if (objective != search::Objective::Triangles) throw UsageError("local search only maximises triangles");
  std::optional<Graph> warm;
  if (o.warm_bgy) warm = construct::bollobas_gyori(o.warm_bgy);
  const auto res = search::local_search_triangles(o.n, o.seed, o.iters, warm);
  run.digest = io::digest("search triangles " + std::to_string(o.n) + " " + std::to_string(o.seed) + " " +
                          std::to_string(o.iters) + " " + std::to_string(o.warm_bgy));
  if (o.format == "tsv") {
    std::ostringstream os;
    os << "iteration\ttriangles\tmove\n";
    for (const auto& t : res.trace) os << t.iteration << '\t' << t.triangles << '\t' << t.move << '\n';
    run.raw = os.str();
    return run;
  }
  run.results["local_search"] = io::local_search_json(res);
  const std::uint64_t start = res.trace.front().triangles;
  add_check(run, "search-monotone", res.triangles >= start,
            std::to_string(res.triangles) + " triangles from a start of " + std::to_string(start));
  return run;
}

Run do_verify(const Options& o) {
  require_json(o, "verify-claims");
  Run run;
  const auto suite = verify::parse_suite(o.suite);
  verify::Report rep;
  if (suite == verify::Suite::Hypergraph) {
    const std::string text = slurp(o.input);
    run.digest = io::digest(text);
    const auto h = hyper::parse_hypergraph(text);
    if (h.n() > o.max_n) throw UsageError("hypergraph above --max-n");
    rep = verify::verify_hypergraph(h);
  } else {
    const auto in = load_graph(o);
    run.digest = in.digest;
    rep = suite == verify::Suite::Graph ? verify::verify_graph(in.g) : verify::verify_indc4c5(in.g);
  }
  run.results["suite"] = rep.suite;
  run.results["facts"] = rep.facts;
  run.checks = verify::checks_json(rep);
  run.failed = !rep.passed();
  return run;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangles in C5-free graphs and girth-6 hypergraphs: censuses, decompositions, bounds and search"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or tsv (tables only)")->check(CLI::IsMember({"json", "tsv"}));
    s->add_option("--max-n", o.max_n, "refuse inputs with more vertices");
  };
  auto add_input = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("input", o.input, "edge-list file");
    if (required) opt->required();
    s->add_flag("--remap", o.remap, "renumber arbitrary vertex ids densely");
  };

  auto* construct_cmd = app.add_subcommand("construct", "generate a graph or hypergraph");
  construct_cmd->add_flag("--bgy", o.bgy, "doubled projective-plane incidence graph");
  construct_cmd->add_flag("--pg", o.pg, "projective-plane incidence graph");
  construct_cmd->add_flag("--greedy", o.greedy, "greedy girth-6 hypergraph");
  construct_cmd->add_flag("--random", o.random, "random C5-free graph");
  construct_cmd->add_flag("--no-induced-c4", o.forbid_induced_c4, "random graph also avoids induced C4");
  construct_cmd->add_option("--gadget", o.gadget, "crown, k4_chain or book_plus_pendants");
  construct_cmd->add_option("--param", o.param, "gadget size");
  construct_cmd->add_option("--q", o.q, "prime order");
  construct_cmd->add_option("--n", o.n, "vertex count");
  construct_cmd->add_option("--r", o.r, "uniformity");
  construct_cmd->add_option("--seed", o.seed, "RNG seed");
  construct_cmd->add_option("--budget", o.budget, "rejection or trial budget");
  construct_cmd->add_option("--out", o.out, "write the edge list here instead of stdout");
  add_common(construct_cmd);

  auto* census_cmd = app.add_subcommand("census", "triangles, forbidden cycles, walks and path counts");
  add_input(census_cmd, true);
  census_cmd->add_flag("--triangles", o.triangles);
  census_cmd->add_flag("--forbidden", o.forbidden);
  census_cmd->add_flag("--five-paths", o.five_paths);
  census_cmd->add_flag("--two-paths", o.two_paths);
  census_cmd->add_flag("--middle-edge", o.middle_edge);
  census_cmd->add_flag("--degrees", o.degrees);
  census_cmd->add_option("--walks", o.walks, "count ordered walks of this length");
  add_common(census_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "triangle blocks, edge decomposition, core reduction");
  add_input(decompose_cmd, true);
  decompose_cmd->add_flag("--extract", o.extract, "also extract the C4-free subgraph");
  add_common(decompose_cmd);

  auto* hyper_cmd = app.add_subcommand("hyper", "Berge girth, shadow and 3-path census");
  hyper_cmd->add_option("input", o.input, "hyperedge file");
  hyper_cmd->add_flag("--greedy", o.greedy, "use a greedy girth-6 hypergraph instead of a file");
  hyper_cmd->add_option("--n", o.n);
  hyper_cmd->add_option("--r", o.r);
  hyper_cmd->add_option("--seed", o.seed);
  hyper_cmd->add_option("--budget", o.budget);
  hyper_cmd->add_option("--shadow-out", o.shadow_out, "write the shadow as an edge list");
  add_common(hyper_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "coefficient table and the alpha optimisation");
  bounds_cmd->add_flag("--table", o.table);
  bounds_cmd->add_flag("--optimize-alpha", o.optimize_alpha);
  bounds_cmd->add_option("--tolerance", o.tolerance)->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--alpha", o.alpha, "evaluate the objective here")->check(CLI::Range(0.0, 1.0));
  bounds_cmd->add_option("--triangle-bound", o.triangle_bound, "N ALPHA")->expected(2);
  bounds_cmd->add_flag("--hyper-bounds", o.hyper_bounds, "edge bounds for --n and --r");
  bounds_cmd->add_option("--n", o.n);
  bounds_cmd->add_option("--r", o.r);
  add_common(bounds_cmd);

  auto* search_cmd = app.add_subcommand("search", "exact small-n maxima and local search");
  search_cmd->add_flag("--exact", o.exact);
  search_cmd->add_option("--objective", o.objective)->check(CLI::IsMember({"triangles", "edges", "hyperedges"}));
  search_cmd->add_option("--n", o.n)->required();
  search_cmd->add_option("--seed", o.seed);
  search_cmd->add_option("--iters", o.iters);
  search_cmd->add_option("--warm-bgy", o.warm_bgy, "warm start from the doubled incidence graph of this prime");
  add_common(search_cmd);

  auto* verify_cmd = app.add_subcommand("verify-claims", "run a suite of structural checks");
  add_input(verify_cmd, true);
  verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember({"graph", "hypergraph", "indc4c5"}));
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  CLI::App* sub = app.get_subcommands().front();
  Run run;
  try {
    const std::string name = sub->get_name();
    if (name == "construct") run = do_construct(o);
    else if (name == "census") run = do_census(o);
    else if (name == "decompose") run = do_decompose(o);
    else if (name == "hyper") run = do_hyper(o);
    else if (name == "bounds") run = do_bounds(o);
    else if (name == "search") run = do_search(o);
    else run = do_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitClaimFailure;
  }

  if (!run.raw.empty()) {
    std::cout << run.raw;
    return run.failed ? kExitClaimFailure : 0;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json report{{"subcommand", sub->get_name()},
              {"input_digest", run.digest},
              {"parameters", parameters_of(*sub)},
              {"results", std::move(run.results)},
              {"checks", std::move(run.checks)},
              {"wall_time_ms", ms}};
  std::cout << report.dump(2) << '\n';
  return run.failed ? kExitClaimFailure : 0;
}
