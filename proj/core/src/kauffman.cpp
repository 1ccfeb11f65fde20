#include "knotspan/kauffman.hpp"

#include "knotspan/states.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <map>
#include <string>
#include <vector>

namespace knotspan {

namespace {

// Unoriented working diagram for the skein recursion. Slots are listed
// counterclockwise; the under-strand occupies slots 0 and 2. Edge ids are
// arbitrary; crossingless circles are carried in `loops`.
struct Skein {
  std::vector<std::array<int, 4>> cr;
  int loops = 0;
};

using Ends = std::map<int, std::vector<std::pair<int, int>>>;

Ends edge_ends(const Skein& d) {
  Ends ends;
  for (int i = 0; i < static_cast<int>(d.cr.size()); ++i)
    for (int s = 0; s < 4; ++s) ends[d.cr[i][s]].push_back({i, s});
  return ends;
}

std::pair<int, int> other_end(const Ends& ends, int edge, int cr, int slot) {
  const auto& occ = ends.at(edge);
  assert(occ.size() == 2);
  return occ[0] == std::pair{cr, slot} ? occ[1] : occ[0];
}

// Replace every occurrence of edge `from` with `to`.
void fuse(Skein& d, int from, int to) {
  for (auto& x : d.cr)
    for (int s = 0; s < 4; ++s)
      if (x[s] == from) x[s] = to;
}

// Remove crossing x joining slot pairs (p0,p1) and (p2,p3).
void smooth_at(Skein& d, int x, std::array<int, 4> slots) {
  std::array<int, 4> e = d.cr[x];
  d.cr.erase(d.cr.begin() + x);
  int u = e[slots[0]], v = e[slots[1]];
  if (u == v)
    ++d.loops;
  else
    fuse(d, v, u);
  int w = e[slots[2]] == v ? u : e[slots[2]];
  int y = e[slots[3]] == v ? u : e[slots[3]];
  if (w == y)
    ++d.loops;
  else
    fuse(d, y, w);
}

// Kink factors: a loop edge at slots (0,1)/(2,3) is a positive curl (factor
// a); at (1,2)/(3,0) a negative curl (factor a^{-1}). Returns the net
// a-exponent accumulated while removing all kinks.
int remove_kinks(Skein& d) {
  int aExp = 0;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < static_cast<int>(d.cr.size()); ++i) {
      const auto& e = d.cr[i];
      int pair = -1;
      for (int s = 0; s < 4; ++s)
        if (e[s] == e[(s + 1) % 4]) {
          pair = s;
          break;
        }
      if (pair < 0) continue;
      aExp += (pair == 0 || pair == 2) ? 1 : -1;
      int p = e[(pair + 2) % 4], q = e[(pair + 3) % 4];
      d.cr.erase(d.cr.begin() + i);
      if (p == q)
        ++d.loops;
      else
        fuse(d, q, p);
      again = true;
      break;
    }
  }
  return aExp;
}

// Traversal summary of a crossing-bearing diagram: strand component count,
// total self-crossing writhe, and the first crossing whose first passage is
// on its under-strand (-1 when descending).
struct Traversal {
  int components = 0;
  int selfWrithe = 0;
  int pivot = -1;
};

Traversal traverse(const Skein& d) {
  Traversal t;
  Ends ends = edge_ends(d);
  int n = static_cast<int>(d.cr.size());
  std::vector<int> firstSlot(n, -1), secondSlot(n, -1);
  std::vector<int> firstComp(n, -1), secondComp(n, -1);
  std::vector<int> firstOrder(n, -1);
  std::map<int, bool> edgeVisited;
  for (const auto& [e, occ] : ends) edgeVisited[e] = false;
  int passageClock = 0;

  for (const auto& [e0, occ0] : ends) {
    if (edgeVisited[e0]) continue;
    int comp = t.components++;
    int edge = e0;
    auto [cr, slot] = occ0[0];  // arrive at the first listed end
    while (true) {
      edgeVisited[edge] = true;
      if (firstSlot[cr] < 0) {
        firstSlot[cr] = slot;
        firstComp[cr] = comp;
        firstOrder[cr] = passageClock;
      } else {
        assert(secondSlot[cr] < 0);
        secondSlot[cr] = slot;
        secondComp[cr] = comp;
      }
      ++passageClock;
      int exit = (slot + 2) % 4;
      int nextEdge = d.cr[cr][exit];
      if (nextEdge == e0) break;
      auto [cr2, s2] = other_end(ends, nextEdge, cr, exit);
      edge = nextEdge;
      cr = cr2;
      slot = s2;
    }
  }

  int bestOrder = -1;
  for (int i = 0; i < n; ++i) {
    assert(firstSlot[i] >= 0 && secondSlot[i] >= 0);
    if (firstComp[i] == secondComp[i]) {
      int u = firstSlot[i] % 2 == 0 ? firstSlot[i] : secondSlot[i];
      int o = firstSlot[i] % 2 == 1 ? firstSlot[i] : secondSlot[i];
      t.selfWrithe += (o == (u + 3) % 4) ? 1 : -1;
    }
    if (firstSlot[i] % 2 == 0 &&
        (bestOrder < 0 || firstOrder[i] < bestOrder)) {
      bestOrder = firstOrder[i];
      t.pivot = i;
    }
  }
  return t;
}

// Canonical code of a connected crossing-bearing diagram component, as the
// lexicographic minimum over start crossings and start rotations of a BFS
// relabeling. Rotation by 2 is the only slot symmetry (under stays at 0,2).
std::vector<int> component_code(const Skein& d, const Ends& ends,
                                const std::vector<int>& members) {
  std::vector<int> best;
  for (int start : members) {
    for (int rot0 : {0, 2}) {
      std::map<int, int> crRot;  // crossing -> rotation
      std::map<int, int> edgeNew;
      std::vector<int> order;
      std::deque<int> queue;
      crRot[start] = rot0;
      queue.push_back(start);
      std::vector<int> code;
      code.reserve(members.size() * 4);
      while (!queue.empty()) {
        int cr = queue.front();
        queue.pop_front();
        order.push_back(cr);
        int rot = crRot[cr];
        for (int s = 0; s < 4; ++s) {
          int edge = d.cr[cr][(rot + s) % 4];
          auto [it, fresh] = edgeNew.try_emplace(edge, static_cast<int>(edgeNew.size()));
          code.push_back(it->second);
        }
        for (int s = 0; s < 4; ++s) {
          int slot = (rot + s) % 4;
          auto [cr2, s2] = other_end(ends, d.cr[cr][slot], cr, slot);
          if (!crRot.count(cr2)) {
            crRot[cr2] = s2 >= 2 ? 2 : 0;
            queue.push_back(cr2);
          }
        }
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

std::string canonical_code(const Skein& d) {
  Ends ends = edge_ends(d);
  int n = static_cast<int>(d.cr.size());
  // Connected components of crossings.
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::deque<int> queue{i};
    comp[i] = id;
    while (!queue.empty()) {
      int cr = queue.front();
      queue.pop_front();
      groups[id].push_back(cr);
      for (int s = 0; s < 4; ++s) {
        auto [cr2, s2] = other_end(ends, d.cr[cr][s], cr, s);
        if (comp[cr2] < 0) {
          comp[cr2] = id;
          queue.push_back(cr2);
        }
      }
    }
  }
  std::vector<std::vector<int>> codes;
  codes.reserve(groups.size());
  for (const auto& g : groups) codes.push_back(component_code(d, ends, g));
  std::sort(codes.begin(), codes.end());
  std::string key;
  for (const auto& c : codes) {
    for (int v : c) {
      key += std::to_string(v);
      key += ',';
    }
    key += ';';
  }
  return key;
}

class Evaluator {
public:
  explicit Evaluator(std::unordered_map<std::string, Laurent2>& memo)
      : memo_(memo),
        delta_(kauffman_delta()),
        z_(Laurent2::monomial(0, 1)) {}

  Laurent2 eval(Skein d) {
    int aExp = remove_kinks(d);
    Laurent2 factor = Laurent2::monomial(aExp, 0);
    if (d.cr.empty()) {
      assert(d.loops >= 1);
      return factor * delta_.pow(static_cast<unsigned>(d.loops - 1));
    }
    if (d.loops > 0) {
      factor = factor * delta_.pow(static_cast<unsigned>(d.loops));
      d.loops = 0;
    }
    return factor * core(std::move(d));
  }

private:
  Laurent2 core(Skein d) {
    std::string key = canonical_code(d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Traversal t = traverse(d);
    Laurent2 val;
    if (t.pivot < 0) {
      // Descending: regular-isotopy equivalent to split curled unknots.
      val = Laurent2::monomial(t.selfWrithe, 0) *
            delta_.pow(static_cast<unsigned>(t.components - 1));
    } else {
      Skein sw = d;
      auto e = sw.cr[t.pivot];
      sw.cr[t.pivot] = {e[1], e[2], e[3], e[0]};
      Skein d0 = d;
      smooth_at(d0, t.pivot, {0, 1, 2, 3});
      Skein dinf = d;
      smooth_at(dinf, t.pivot, {1, 2, 3, 0});
      val = z_ * (eval(std::move(d0)) + eval(std::move(dinf))) -
            eval(std::move(sw));
    }
    memo_.emplace(std::move(key), val);
    return val;
  }

  std::unordered_map<std::string, Laurent2>& memo_;
  Laurent2 delta_;
  Laurent2 z_;
};

}  // namespace

std::string diagram_code(const LinkDiagram& d) {
  Skein s;
  s.loops = d.freeLoops;
  for (const auto& x : d.crossings) s.cr.push_back(x.end);
  return canonical_code(s) + "O" + std::to_string(s.loops);
}

Laurent2 KauffmanEngine::lambda(const LinkDiagram& d) {
  if (d.crossing_count() > maxCrossings_)
    throw CutoffExceeded("lambda: crossing count " +
                         std::to_string(d.crossing_count()) +
                         " exceeds cutoff " + std::to_string(maxCrossings_));
  Skein s;
  s.loops = d.freeLoops;
  for (const auto& x : d.crossings) s.cr.push_back(x.end);
  Evaluator ev(memo_);
  Laurent2 result = ev.eval(std::move(s));
  // A diagram of a k-component link has min deg_z >= 1-k; a violation means
  // the delta bookkeeping or a skein convention is broken.
  if (!result.is_zero() && result.mindeg_z() < 1 - d.componentCount)
    throw std::logic_error("lambda: uncancelled negative z-powers");
  return result;
}

KauffmanReport KauffmanEngine::report(const LinkDiagram& d) {
  KauffmanReport r;
  r.lambda = lambda(d);
  r.F = Laurent2::monomial(-writhe(d), 0) * r.lambda;
  r.spanA = r.lambda.span_a();
  int c = d.crossing_count();
  r.supportOK = support_check(r.lambda, c);
  r.adequacyWitness = adequacy_from_kauffman(r.lambda, c);
  return r;
}

Laurent2 lambda_poly(const LinkDiagram& d, int maxCrossings) {
  KauffmanEngine engine(maxCrossings);
  return engine.lambda(d);
}

bool support_check(const Laurent2& p, int c) {
  for (const auto& [rs, coeff] : p.terms())
    if (std::abs(rs.first) + rs.second > c) return false;
  return true;
}

std::optional<AdequacyWitness> adequacy_from_kauffman(const Laurent2& lambda,
                                                      int c) {
  std::optional<SupportPoint> lo, hi;
  for (const auto& [rs, coeff] : lambda.terms()) {
    if (-rs.first + rs.second == c && !lo) lo = SupportPoint{rs.first, rs.second};
    if (rs.first + rs.second == c && !hi) hi = SupportPoint{rs.first, rs.second};
  }
  if (lo && hi) return AdequacyWitness{*lo, *hi};
  return std::nullopt;
}

Corollary51Report corollary_5_1_check(const LinkDiagram& d,
                                      KauffmanEngine& engine) {
  if (!is_adequate_diagram(d) || turaev_genus_diagram(d) != 1)
    throw std::invalid_argument(
        "corollary_5_1_check: diagram must be adequate with Turaev genus 1");
  Laurent2 lambda = engine.lambda(d);
  Corollary51Report r;
  r.maxdegA = lambda.maxdeg_a();
  r.mindegA = lambda.mindeg_a();
  r.spanA = lambda.span_a();
  r.expectedMax = resolve_all(d, Side::A).circleCount - 1;
  r.expectedMin = -resolve_all(d, Side::B).circleCount + 1;
  r.expectedSpan = d.crossing_count() - 2;
  r.ok = r.maxdegA == r.expectedMax && r.mindegA == r.expectedMin &&
         r.spanA == r.expectedSpan;
  return r;
}

}  // namespace knotspan
