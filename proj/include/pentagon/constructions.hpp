#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pentagon/graph.hpp"
#include "pentagon/hypergraph.hpp"

namespace pentagon::construct {

bool is_prime(std::uint64_t q);

/// Points per side of PG(2, q): q^2 + q + 1.
std::size_t plane_order(std::uint64_t q);

/// Point-line incidence graph of PG(2, q), q prime. Points are 0..N-1 and
/// lines N..2N-1, both listed in lexicographic order of their normalised
/// homogeneous coordinates.
Graph projective_plane_incidence(std::uint64_t q);

/// Incidence graph with every line vertex b doubled to b' = b + N, joined to
/// b and to all points of b. Points 0..N-1, lines N..2N-1, copies 2N..3N-1.
Graph bollobas_gyori(std::uint64_t q);

/// Uniform random r-sets accepted while the Berge girth stays >= 6; stops
/// after `budget` rejections. The result is re-checked with berge_girth.
hyper::Hypergraph greedy_girth6_hypergraph(std::size_t n, std::size_t r, std::uint64_t seed,
                                           std::uint64_t budget = 100000);

struct RandomC5FreeOptions {
  /// Candidate pairs tried (in seeded random order); the default tries every pair once.
  std::uint64_t budget = UINT64_MAX;
  /// Also reject edges that would leave an induced C4.
  bool forbid_induced_c4 = false;
};

/// Random edge insertion that rejects every edge closing a C5.
Graph random_c5_free(std::size_t n, std::uint64_t seed, RandomC5FreeOptions options = {});

enum class GadgetKind { Crown, K4Chain, BookPlusPendants };

GadgetKind parse_gadget_kind(std::string_view name);
const char* to_string(GadgetKind kind);

/// Crown k: base 0-1 with tips 2..k+1.
/// K4 chain m: K4s on {3i, .., 3i+3}, consecutive ones sharing a vertex.
/// Book plus pendants k: crown k with a pendant 2-path hung on each of its
/// k+2 vertices.
Graph gadget(GadgetKind kind, std::size_t param);

}  // namespace pentagon::construct
