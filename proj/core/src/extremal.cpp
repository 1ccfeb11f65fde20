#include "knotspan/extremal.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace knotspan {

void InterleaveGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("interleave graph is irreflexive");
  adj[u] |= std::uint64_t{1} << v;
  adj[v] |= std::uint64_t{1} << u;
}

InterleaveGraph interleave_graph(const std::vector<Chord>& chords) {
  int n = static_cast<int>(chords.size());
  if (n > 64)
    throw std::invalid_argument("interleave_graph: more than 64 chords");
  InterleaveGraph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (chords[i].circle != chords[j].circle) continue;
      // Endpoints alternate iff exactly one endpoint of chord j lies strictly
      // between the endpoints of chord i in the cyclic order.
      int p1 = std::min(chords[i].pos1, chords[i].pos2);
      int p2 = std::max(chords[i].pos1, chords[i].pos2);
      bool in1 = p1 < chords[j].pos1 && chords[j].pos1 < p2;
      bool in2 = p1 < chords[j].pos2 && chords[j].pos2 < p2;
      if (in1 != in2) g.add_edge(i, j);
    }
  return g;
}

InterleaveGraph interleave_graph(const LinkDiagram& d, Side side) {
  return interleave_graph(decorated_state(d, side));
}

namespace {

BigInt ias_rec(const InterleaveGraph& g, std::uint64_t alive,
               std::unordered_map<std::uint64_t, BigInt>& memo) {
  if (alive == 0) return 1;
  // Any isolated vertex v gives I(G) = I(G-v) - I(G-v) = 0.
  std::uint64_t rest = alive;
  int pivot = -1, pivotDeg = -1;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int deg = std::popcount(g.adj[v] & alive);
    if (deg == 0) return 0;
    if (deg > pivotDeg) {
      pivotDeg = deg;
      pivot = v;
    }
  }
  auto it = memo.find(alive);
  if (it != memo.end()) return it->second;
  std::uint64_t bit = std::uint64_t{1} << pivot;
  BigInt val = ias_rec(g, alive & ~bit, memo) -
               ias_rec(g, alive & ~(g.adj[pivot] | bit), memo);
  memo.emplace(alive, val);
  return val;
}

}  // namespace

BigInt independent_alternating_sum(const InterleaveGraph& g) {
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::uint64_t all =
      g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  return ias_rec(g, all, memo);
}

BigInt extreme_coefficient(const LinkDiagram& d, Extreme which) {
  if (!is_connected(d))
    throw std::invalid_argument("extreme_coefficient: diagram not connected");
  Side side = which == Extreme::Max ? Side::A : Side::B;
  StateGeometry geom = resolve_all(d, side);
  BigInt sum = independent_alternating_sum(interleave_graph(decorated_state(geom)));
  return (geom.circleCount - 1) % 2 == 0 ? sum : -sum;
}

}  // namespace knotspan
