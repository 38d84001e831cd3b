#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pentagon::bounds {

/// A coefficient c in "bound = c * n^{3/2}".
struct Coefficient {
  std::string key;
  double value = 0.0;
  std::string formula;  // exact closed form
  std::string source;   // which result it belongs to
};

struct BoundTable {
  std::vector<Coefficient> entries;

  /// Throws DomainError for an unknown key.
  const Coefficient& at(std::string_view key) const;
};

/// Keys: bgy_lower, bgy_upper, alon_shikhelman_upper, previous_upper,
/// main_upper, improved_upper, girth6_r4, indc4c5_upper, indc4c5_previous,
/// indc4c5_lower, c4c5_edges.
BoundTable coefficient_table();

/// f(a) = ((4 - a) / 12) * min{1 / (2 (1 - a)), ((1 + a) / 4)^{1/4}}, with the
/// first branch +inf at a = 1. DomainError outside [0, 1].
double alpha_objective(double alpha);

/// g(a) = 1 / (2 (1 - a)) - ((1 + a) / 4)^{1/4}; its root is where the two
/// branches of the minimum cross.
double branch_gap(double alpha);

struct AlphaOptimum {
  double alpha_star = 0.0;
  double coefficient = 0.0;
  bool branch_crossing = false;  // |g(alpha_star)| <= tolerance
  double left_slope = 0.0;       // one-sided difference quotients of f
  double right_slope = 0.0;
  double grid_max = 0.0;         // max of f over {0, 0.001, ..., 1}
  unsigned iterations = 0;
};

/// Bisection for the root of g on [0, 0.9], then a dense grid cross-check.
AlphaOptimum optimize_alpha(double tolerance = 1e-12);

/// ((1 + a) / 4)^{1/4} * ((4 - a) / 12) * n^{3/2}.
double triangle_bound(double n, double alpha);

struct HypergraphEdgeBounds {
  double girth6 = 0.0;  // n^{3/2} / (r^{3/2} (r - 1))
  double girth5 = 0.0;  // n^{3/2} / (r (r - 1))
  double ratio = 0.0;   // girth5 / girth6 = sqrt(r)
};

HypergraphEdgeBounds hypergraph_edge_bounds(double n, unsigned r);

/// n^{3/2} / (2 * 2^{1/10}).
double indc4c5_edge_bound(double n);

}  // namespace pentagon::bounds
