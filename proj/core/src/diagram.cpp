#include "knotspan/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace knotspan {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// (crossing, slot) occurrences of each edge label; exactly two per label.
using Occurrences = std::vector<std::array<std::pair<int, int>, 2>>;

Occurrences edge_occurrences(const LinkDiagram& d) {
  int c = d.crossing_count();
  Occurrences occ(2 * c + 1);
  std::vector<int> count(2 * c + 1, 0);
  for (int i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s) {
      int l = d.crossings[i].end[s];
      occ[l][count[l]++] = {i, s};
    }
  return occ;
}

void check_labels(const std::vector<CrossingTuple>& xs) {
  int c = static_cast<int>(xs.size());
  std::vector<int> count(2 * c + 1, 0);
  for (const auto& x : xs)
    for (int s = 0; s < 4; ++s) {
      int l = x.end[s];
      if (l < 1 || l > 2 * c)
        throw PdError(PdError::Kind::Labels,
                      "edge label " + std::to_string(l) + " outside 1.." +
                          std::to_string(2 * c));
      ++count[l];
    }
  for (int l = 1; l <= 2 * c; ++l)
    if (count[l] != 2)
      throw PdError(PdError::Kind::Labels,
                    "edge label " + std::to_string(l) + " occurs " +
                        std::to_string(count[l]) + " times (expected 2)");
}

// Strand components as label intervals; comp[l] = component id, with the
// cyclic successor of each label within its component interval.
struct Strands {
  std::vector<int> comp;  // by label
  std::vector<int> lo, hi;  // per component
  int count = 0;

  int next(int label) const {
    int k = comp[label];
    return label == hi[k] ? lo[k] : label + 1;
  }
};

Strands strand_components(const std::vector<CrossingTuple>& xs) {
  int c = static_cast<int>(xs.size());
  UnionFind uf(2 * c + 1);
  for (const auto& x : xs) {
    uf.unite(x.end[0], x.end[2]);
    uf.unite(x.end[1], x.end[3]);
  }
  Strands s;
  s.comp.assign(2 * c + 1, -1);
  std::map<int, int> root_to_id;
  for (int l = 1; l <= 2 * c; ++l) {
    int r = uf.find(l);
    auto [it, fresh] = root_to_id.try_emplace(r, s.count);
    if (fresh) {
      s.lo.push_back(l);
      s.hi.push_back(l);
      ++s.count;
    }
    s.comp[l] = it->second;
    s.lo[it->second] = std::min(s.lo[it->second], l);
    s.hi[it->second] = std::max(s.hi[it->second], l);
  }
  // Each component's labels must be exactly the interval [lo, hi].
  std::vector<int> size(s.count, 0);
  for (int l = 1; l <= 2 * c; ++l) ++size[s.comp[l]];
  for (int k = 0; k < s.count; ++k)
    if (size[k] != s.hi[k] - s.lo[k] + 1)
      throw PdError(PdError::Kind::Orientation,
                    "component labels do not form a consecutive interval");
  return s;
}

void infer_signs(std::vector<CrossingTuple>& xs, const Strands& st) {
  for (auto& x : xs) {
    if (st.next(x.a()) != x.c())
      throw PdError(PdError::Kind::Orientation,
                    "under-strand labels not consecutive at crossing");
    bool d_to_b = st.next(x.d()) == x.b();
    bool b_to_d = st.next(x.b()) == x.d();
    if (!d_to_b && !b_to_d)
      throw PdError(PdError::Kind::Orientation,
                    "over-strand labels not consecutive at crossing");
    // Both directions are consistent only for a 2-edge over component;
    // the positive crossing is preferred then.
    x.sign = d_to_b ? +1 : -1;
  }
}

void check_planarity(const LinkDiagram& d) {
  int c = d.crossing_count();
  if (c == 0) return;
  auto occ = edge_occurrences(d);
  auto twin = [&](int cr, int s) {
    int l = d.crossings[cr].end[s];
    auto [o1, o2] = occ[l];
    return (o1 == std::pair<int, int>{cr, s}) ? o2 : o1;
  };
  // Connected components of the 4-valent graph.
  UnionFind uf(c);
  for (int l = 1; l <= 2 * c; ++l) uf.unite(occ[l][0].first, occ[l][1].first);
  // Face count per component via the rotation system: faces are orbits of
  // dart -> rotation-successor of its twin.
  std::vector<char> seen(4 * c, 0);
  std::vector<int> faces(c, 0);
  for (int start = 0; start < 4 * c; ++start) {
    if (seen[start]) continue;
    int cr = start / 4, s = start % 4;
    ++faces[uf.find(cr)];
    int ccr = cr, cs = s;
    while (!seen[ccr * 4 + cs]) {
      seen[ccr * 4 + cs] = 1;
      auto [tc, ts] = twin(ccr, cs);
      ccr = tc;
      cs = (ts + 1) % 4;
    }
  }
  std::vector<int> verts(c, 0), edges(c, 0);
  for (int i = 0; i < c; ++i) ++verts[uf.find(i)];
  for (int l = 1; l <= 2 * c; ++l) ++edges[uf.find(occ[l][0].first)];
  for (int i = 0; i < c; ++i) {
    if (uf.find(i) != i) continue;
    if (verts[i] - edges[i] + faces[i] != 2)
      throw PdError(PdError::Kind::Planarity,
                    "rotation system is not planar (Euler check failed)");
  }
}

LinkDiagram finish(std::vector<CrossingTuple> xs, int freeLoops,
                   std::string name) {
  check_labels(xs);
  Strands st = strand_components(xs);
  infer_signs(xs, st);
  LinkDiagram d;
  d.name = std::move(name);
  d.crossings = std::move(xs);
  d.freeLoops = freeLoops;
  d.componentCount = st.count + freeLoops;
  if (d.componentCount < 1)
    throw PdError(PdError::Kind::Validation, "diagram has no components");
  check_planarity(d);
  return d;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
  std::string name;
  std::string body = text;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
      name.pop_back();
    body = text.substr(colon + 1);
  }
  std::vector<CrossingTuple> xs;
  int freeLoops = 0;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    size_t j = i;
    while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
    if (j == i) throw PdError(PdError::Kind::Syntax, "expected integer in PD code");
    int v = std::stoi(body.substr(i, j - i));
    i = j;
    return v;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (i >= body.size() || body[i] != ch)
      throw PdError(PdError::Kind::Syntax,
                    std::string("expected '") + ch + "' in PD code");
    ++i;
  };
  while (true) {
    skip_ws();
    if (i >= body.size()) break;
    if (body[i] == 'X') {
      ++i;
      expect('[');
      CrossingTuple x{};
      x.end[0] = parse_int();
      expect(',');
      x.end[1] = parse_int();
      expect(',');
      x.end[2] = parse_int();
      expect(',');
      x.end[3] = parse_int();
      expect(']');
      xs.push_back(x);
    } else if (body[i] == 'O') {
      ++i;
      freeLoops = parse_int();
      if (freeLoops < 0)
        throw PdError(PdError::Kind::Syntax, "negative free-loop count");
      skip_ws();
      if (i < body.size())
        throw PdError(PdError::Kind::Syntax, "trailing input after O marker");
      break;
    } else {
      throw PdError(PdError::Kind::Syntax,
                    std::string("unexpected character '") + body[i] +
                        "' in PD code");
    }
  }
  return finish(std::move(xs), freeLoops, std::move(name));
}

LinkDiagram make_diagram(const std::vector<std::array<int, 4>>& tuples,
                         int freeLoops, const std::string& name) {
  std::vector<CrossingTuple> xs;
  xs.reserve(tuples.size());
  for (const auto& t : tuples) xs.push_back(CrossingTuple{t, 0});
  return finish(std::move(xs), freeLoops, name);
}

std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream out;
  out << (d.name.empty() ? "D" : d.name) << " :";
  for (const auto& x : d.crossings)
    out << " X[" << x.end[0] << "," << x.end[1] << "," << x.end[2] << ","
        << x.end[3] << "]";
  if (d.freeLoops > 0) out << " O" << d.freeLoops;
  return out.str();
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings) w += x.sign;
  return w;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(d.crossings.size());
  for (const auto& x : d.crossings) {
    // Switching the crossing makes the old over-strand the under-strand; the
    // rotation (hence the embedding) is unchanged.
    if (x.sign > 0)
      tuples.push_back({x.d(), x.a(), x.b(), x.c()});
    else
      tuples.push_back({x.b(), x.c(), x.d(), x.a()});
  }
  LinkDiagram m = make_diagram(tuples, d.freeLoops,
                               d.name.empty() ? "" : d.name + "*");
  // Keep the orientation of every component: each crossing sign flips. (Sign
  // re-inference cannot recover this when a strand component has only two
  // edges, where PD codes leave the orientation ambiguous.)
  for (std::size_t i = 0; i < m.crossings.size(); ++i)
    m.crossings[i].sign = -d.crossings[i].sign;
  return m;
}

bool is_connected(const LinkDiagram& d) {
  int c = d.crossing_count();
  if (c == 0) return d.freeLoops == 1;
  if (d.freeLoops != 0) return false;
  auto occ = edge_occurrences(d);
  UnionFind uf(c);
  int classes = c;
  for (int l = 1; l <= 2 * c; ++l)
    if (uf.unite(occ[l][0].first, occ[l][1].first)) --classes;
  return classes == 1;
}

int component_count(const LinkDiagram& d) { return d.componentCount; }

bool is_reduced(const LinkDiagram& d) {
  int c = d.crossing_count();
  if (c == 0) return true;
  for (const auto& x : d.crossings)
    for (int s = 0; s < 4; ++s)
      for (int t = s + 1; t < 4; ++t)
        if (x.end[s] == x.end[t]) return false;  // kink
  if (c == 1) return true;
  auto occ = edge_occurrences(d);
  for (int skip = 0; skip < c; ++skip) {
    UnionFind uf(c);
    int classes = c - 1;
    for (int l = 1; l <= 2 * c; ++l) {
      auto [u, v] = std::pair{occ[l][0].first, occ[l][1].first};
      if (u == skip || v == skip) continue;
      if (uf.unite(u, v)) --classes;
    }
    if (classes > 1) return false;  // cut vertex
  }
  return true;
}

bool is_alternating_diagram(const LinkDiagram& d) {
  int c = d.crossing_count();
  if (c == 0) return true;
  auto occ = edge_occurrences(d);
  for (int l = 1; l <= 2 * c; ++l) {
    bool under0 = occ[l][0].second % 2 == 0;
    bool under1 = occ[l][1].second % 2 == 0;
    if (under0 == under1) return false;
  }
  return true;
}

}  // namespace knotspan
