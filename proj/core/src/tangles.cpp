#include "knotspan/tangles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace knotspan {

namespace {

struct EndPair {
  // (crossing, slot) of the two occurrences of an edge label.
  std::array<std::array<int, 2>, 2> occ;
  int count = 0;
};

std::map<int, EndPair> edge_ends(const LinkDiagram& d) {
  std::map<int, EndPair> ends;
  for (int i = 0; i < d.crossing_count(); ++i)
    for (int s = 0; s < 4; ++s) {
      EndPair& p = ends[d.crossings[i].end[s]];
      if (p.count == 2)
        throw std::invalid_argument("edge label used more than twice");
      p.occ[p.count++] = {i, s};
    }
  return ends;
}

int find(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

}  // namespace

std::vector<EdgeClass> classify_edges(const LinkDiagram& d) {
  std::vector<EdgeClass> out;
  for (const auto& [label, p] : edge_ends(d)) {
    if (p.count != 2)
      throw std::invalid_argument("open edge in diagram");
    // Odd slots (b,d) are over-strand ends, even slots (a,c) under-strand ends.
    bool over1 = p.occ[0][1] % 2 == 1;
    bool over2 = p.occ[1][1] % 2 == 1;
    EdgeClass e;
    e.label = label;
    if (over1 == over2) {
      e.kind = EdgeKind::NonAlternating;
      e.sign = over1 ? +1 : -1;
    }
    out.push_back(e);
  }
  return out;
}

TangleDecomposition decompose(const LinkDiagram& d) {
  int n = d.crossing_count();
  TangleDecomposition td;
  td.tangleOfCrossing.assign(n, -1);
  if (n == 0) return td;

  auto ends = edge_ends(d);
  std::vector<int> up(n);
  std::iota(up.begin(), up.end(), 0);
  // Merge crossings along alternating edges; the classes are the maximal
  // alternating tangles.
  for (const auto& [label, p] : ends) {
    bool over1 = p.occ[0][1] % 2 == 1;
    bool over2 = p.occ[1][1] % 2 == 1;
    if (over1 != over2) up[find(up, p.occ[0][0])] = find(up, p.occ[1][0]);
  }
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) {
    int r = find(up, i);
    auto [it, fresh] = index.emplace(r, static_cast<int>(index.size()));
    td.tangleOfCrossing[i] = it->second;
    (void)fresh;
  }
  td.tangleCount = static_cast<int>(index.size());
  td.endCounts.assign(td.tangleCount, 0);

  for (const auto& [label, p] : ends) {
    bool over1 = p.occ[0][1] % 2 == 1;
    bool over2 = p.occ[1][1] % 2 == 1;
    if (over1 != over2) continue;
    Connector c;
    c.label = label;
    c.sign = over1 ? +1 : -1;
    c.tangle1 = td.tangleOfCrossing[p.occ[0][0]];
    c.tangle2 = td.tangleOfCrossing[p.occ[1][0]];
    td.endCounts[c.tangle1] += 1;
    td.endCounts[c.tangle2] += 1;
    td.connectors.push_back(c);
  }
  return td;
}

CycleFormReport is_genus_one_cycle_form(const LinkDiagram& d) {
  CycleFormReport rep;
  TangleDecomposition td = decompose(d);
  rep.tangleCount = td.tangleCount;
  rep.connectorCount = static_cast<int>(td.connectors.size());
  rep.allTanglesFourEnded =
      td.tangleCount > 0 &&
      std::all_of(td.endCounts.begin(), td.endCounts.end(),
                  [](int e) { return e == 4; });
  if (td.tangleCount < 2 || !rep.allTanglesFourEnded) return rep;

  // Each adjacency of the tangle cycle carries exactly two connectors of
  // opposite signs. A pair of tangles can be adjacent twice only in the
  // 2-cycle, where it carries four connectors (two of each sign).
  std::map<std::pair<int, int>, std::vector<int>> pairs;
  for (const Connector& c : td.connectors) {
    if (c.tangle1 == c.tangle2) return rep;
    pairs[std::minmax(c.tangle1, c.tangle2)].push_back(c.sign);
  }
  if (td.tangleCount == 2) {
    if (pairs.size() != 1) return rep;
    const auto& signs = pairs.begin()->second;
    int plus = static_cast<int>(std::count(signs.begin(), signs.end(), +1));
    if (signs.size() == 4 && plus == 2) {
      rep.isCycleForm = true;
      rep.evenCycle = true;
    }
    return rep;
  }
  std::vector<std::vector<int>> adj(td.tangleCount);
  for (const auto& [key, signs] : pairs) {
    if (signs.size() != 2 || signs[0] + signs[1] != 0) return rep;
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  for (const auto& nbrs : adj)
    if (nbrs.size() != 2) return rep;
  // Degree 2 everywhere and 4 ends per tangle; a single closed walk from
  // tangle 0 must visit every tangle.
  int prev = -1, cur = 0, seen = 0;
  do {
    ++seen;
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  } while (cur != 0 && seen <= td.tangleCount);
  if (seen != td.tangleCount) return rep;

  rep.isCycleForm = true;
  rep.evenCycle = td.tangleCount % 2 == 0;
  return rep;
}

}  // namespace knotspan
