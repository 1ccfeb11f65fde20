#include "knotspan/states.hpp"

#include <stdexcept>

namespace knotspan {

namespace {

// Smoothing arcs by slot: A joins {a,b} and {c,d}; B joins {a,d} and {b,c}.
int arc_of(Side side, int slot) {
  if (side == Side::A) return slot / 2;
  return (slot == 1 || slot == 2) ? 0 : 1;
}

int other_slot(Side side, int arc, int slot) {
  if (side == Side::A) return slot ^ 1;
  if (arc == 0) return slot == 1 ? 2 : 1;
  return slot == 3 ? 0 : 3;
}

}  // namespace

Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

StateGeometry resolve_all(const LinkDiagram& d, Side side) {
  int c = d.crossing_count();
  StateGeometry g;
  g.side = side;
  g.arcCircle.assign(c, {-1, -1});
  g.arcPos.assign(c, {-1, -1});

  // Edge occurrences for the half-edge walk.
  std::vector<std::array<std::pair<int, int>, 2>> occ(2 * c + 1);
  std::vector<int> cnt(2 * c + 1, 0);
  for (int i = 0; i < c; ++i)
    for (int s = 0; s < 4; ++s) {
      int l = d.crossings[i].end[s];
      occ[l][cnt[l]++] = {i, s};
    }
  auto twin = [&](int cr, int s) {
    int l = d.crossings[cr].end[s];
    return occ[l][0] == std::pair<int, int>{cr, s} ? occ[l][1] : occ[l][0];
  };

  std::vector<std::array<char, 2>> visited(c, {0, 0});
  for (int cr0 = 0; cr0 < c; ++cr0)
    for (int a0 = 0; a0 < 2; ++a0) {
      if (visited[cr0][a0]) continue;
      std::vector<TraceEnd> order;
      int cr = cr0, arc = a0;
      int entry = (side == Side::A) ? (arc == 0 ? 0 : 2) : (arc == 0 ? 1 : 3);
      do {
        visited[cr][arc] = 1;
        int circle = static_cast<int>(g.circleOrders.size());
        g.arcCircle[cr][arc] = circle;
        g.arcPos[cr][arc] = static_cast<int>(order.size());
        order.push_back(TraceEnd{cr, arc});
        int exit = other_slot(side, arc, entry);
        auto [cr2, s2] = twin(cr, exit);
        cr = cr2;
        entry = s2;
        arc = arc_of(side, entry);
      } while (!(cr == cr0 && arc == a0));
      g.circleOrders.push_back(std::move(order));
    }
  g.circleCount = static_cast<int>(g.circleOrders.size()) + d.freeLoops;
  return g;
}

std::vector<Chord> decorated_state(const StateGeometry& g) {
  std::vector<Chord> chords;
  for (int cr = 0; cr < static_cast<int>(g.arcCircle.size()); ++cr) {
    if (g.arcCircle[cr][0] == g.arcCircle[cr][1]) {
      chords.push_back(Chord{cr, g.arcCircle[cr][0], g.arcPos[cr][0],
                             g.arcPos[cr][1]});
    }
  }
  return chords;
}

std::vector<Chord> decorated_state(const LinkDiagram& d, Side side) {
  return decorated_state(resolve_all(d, side));
}

int turaev_genus_diagram(const LinkDiagram& d) {
  if (!is_connected(d))
    throw std::invalid_argument("turaev_genus_diagram: diagram not connected");
  int c = d.crossing_count();
  int sa = resolve_all(d, Side::A).circleCount;
  int sb = resolve_all(d, Side::B).circleCount;
  int twice = c + 2 - sa - sb;
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("turaev_genus_diagram: invalid state circle counts");
  return twice / 2;
}

bool is_A_adequate(const LinkDiagram& d) {
  return decorated_state(d, Side::A).empty();
}

bool is_B_adequate(const LinkDiagram& d) {
  return decorated_state(d, Side::B).empty();
}

bool is_adequate_diagram(const LinkDiagram& d) {
  return is_A_adequate(d) && is_B_adequate(d);
}

}  // namespace knotspan
