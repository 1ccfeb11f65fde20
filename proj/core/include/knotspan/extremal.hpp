#pragma once

#include "knotspan/diagram.hpp"
#include "knotspan/laurent.hpp"
#include "knotspan/states.hpp"

#include <cstdint>
#include <vector>

namespace knotspan {

/// Chords of a decorated state with interleaving adjacency: two chords are
/// adjacent iff they lie on one circle and their endpoints alternate in its
/// cyclic order. At most 64 vertices (chord counts are bounded by c <= 24).
struct InterleaveGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;  // bitmask per vertex, irreflexive

  bool adjacent(int u, int v) const { return adj[u] >> v & 1u; }
  void add_edge(int u, int v);
};

InterleaveGraph interleave_graph(const LinkDiagram& d, Side side);
InterleaveGraph interleave_graph(const std::vector<Chord>& chords);

/// Sum of (-1)^{|C|} over independent vertex subsets C (the independence
/// polynomial evaluated at -1), by vertex-deletion recursion with memoization.
BigInt independent_alternating_sum(const InterleaveGraph& g);

enum class Extreme { Max, Min };

/// Bae-Morton extreme bracket coefficient: a_M for Max (all-A state), a_m for
/// Min (all-B state). Requires a connected diagram.
BigInt extreme_coefficient(const LinkDiagram& d, Extreme which);

}  // namespace knotspan
