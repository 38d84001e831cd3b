#include "pentagon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pentagon/error.hpp"

namespace pentagon::bounds {
namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1], got " + std::to_string(alpha));
}

double k4_branch(double alpha) {
  return alpha >= 1.0 ? std::numeric_limits<double>::infinity() : 1.0 / (2.0 * (1.0 - alpha));
}

double walk_branch(double alpha) { return std::pow((1.0 + alpha) / 4.0, 0.25); }

}  // namespace

const Coefficient& BoundTable::at(std::string_view key) const {
  for (const auto& c : entries) {
    if (c.key == key) return c;
  }
  throw DomainError("unknown coefficient '" + std::string(key) + "'");
}

BoundTable coefficient_table() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  const AlphaOptimum opt = optimize_alpha(1e-13);
  BoundTable t;
  t.entries = {
      {"bgy_lower", 1.0 / (3.0 * s3), "1/(3*sqrt(3))", "triangles, doubled C4-free bipartite construction"},
      {"improved_upper", opt.coefficient, "max_a f(a)", "triangles, K4-block refinement via girth-6 hypergraphs"},
      {"main_upper", 1.0 / (3.0 * s2), "1/(3*sqrt(2))", "triangles, good 5-path counting"},
      {"previous_upper", 1.0 / (2.0 * s2), "1/(2*sqrt(2))", "triangles, earlier block-based upper bound"},
      {"alon_shikhelman_upper", s3 / 2.0, "sqrt(3)/2", "triangles, earlier general upper bound"},
      {"bgy_upper", 5.0 / 4.0, "5/4", "triangles, first upper bound"},
      {"girth6_r4", 1.0 / 24.0, "1/(4^{3/2}*3)", "hyperedges of a 4-uniform girth-6 hypergraph"},
      {"indc4c5_lower", 2.0 / (3.0 * s3), "2/(3*sqrt(3))", "edges, induced-C4-free C5-free lower bound"},
      {"indc4c5_upper", 1.0 / (2.0 * std::pow(2.0, 0.1)), "1/(2*2^{1/10})", "edges, induced-C4-free C5-free upper bound"},
      {"indc4c5_previous", 0.5, "1/2", "edges, previous induced-C4-free C5-free upper bound"},
      {"c4c5_edges", 1.0 / (2.0 * s2), "1/(2*sqrt(2))", "edges, C4-free C5-free graphs"},
  };
  return t;
}

double alpha_objective(double alpha) {
  require_alpha(alpha);
  return (4.0 - alpha) / 12.0 * std::min(k4_branch(alpha), walk_branch(alpha));
}

double branch_gap(double alpha) {
  require_alpha(alpha);
  return k4_branch(alpha) - walk_branch(alpha);
}

AlphaOptimum optimize_alpha(double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  double lo = 0.0;
  double hi = 0.9;
  AlphaOptimum out;
  // g is increasing on [0, 0.9] with g(0) < 0 < g(0.9).
  while (hi - lo > tolerance && out.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    (branch_gap(mid) < 0.0 ? lo : hi) = mid;
    ++out.iterations;
  }
  out.alpha_star = 0.5 * (lo + hi);
  out.coefficient = alpha_objective(out.alpha_star);
  out.branch_crossing = std::abs(branch_gap(out.alpha_star)) <= std::max(tolerance, 1e-15);
  const double h = 1e-6;
  out.left_slope = (out.coefficient - alpha_objective(out.alpha_star - h)) / h;
  out.right_slope = (alpha_objective(out.alpha_star + h) - out.coefficient) / h;
  for (int i = 0; i <= 1000; ++i) out.grid_max = std::max(out.grid_max, alpha_objective(i / 1000.0));
  return out;
}

double triangle_bound(double n, double alpha) {
  require_alpha(alpha);
  if (!(n >= 1.0)) throw DomainError("n must be at least 1");
  return walk_branch(alpha) * (4.0 - alpha) / 12.0 * std::pow(n, 1.5);
}

HypergraphEdgeBounds hypergraph_edge_bounds(double n, unsigned r) {
  if (r < 2) throw DomainError("uniformity must be at least 2");
  if (!(n >= 1.0)) throw DomainError("n must be at least 1");
  const double rr = r;
  const double n32 = std::pow(n, 1.5);
  HypergraphEdgeBounds b;
  b.girth6 = n32 / (std::pow(rr, 1.5) * (rr - 1.0));
  b.girth5 = n32 / (rr * (rr - 1.0));
  b.ratio = std::sqrt(rr);
  return b;
}

double indc4c5_edge_bound(double n) {
  if (!(n >= 1.0)) throw DomainError("n must be at least 1");
  return std::pow(n, 1.5) / (2.0 * std::pow(2.0, 0.1));
}

}  // namespace pentagon::bounds
