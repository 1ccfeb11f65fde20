#pragma once

#include "knotspan/diagram.hpp"

#include <vector>

namespace knotspan {

enum class Side { A, B };

Side opposite(Side s);

/// One trace endpoint on a state circle: the smoothing arc of `crossing`
/// with local index `arc` (0 or 1).
struct TraceEnd {
  int crossing;
  int arc;
  bool operator==(const TraceEnd& o) const = default;
};

/// The all-A or all-B Kauffman state of a diagram: its circles with the
/// cyclic order of trace endpoints around each.
struct StateGeometry {
  Side side;
  int circleCount = 0;  // includes free loops (which carry no endpoints)
  /// One entry per circle that meets at least one crossing; cyclic order of
  /// trace endpoints around the circle.
  std::vector<std::vector<TraceEnd>> circleOrders;
  /// For crossing i, arc j: the circle index it lies on and its position in
  /// that circle's cyclic order.
  std::vector<std::array<int, 2>> arcCircle;
  std::vector<std::array<int, 2>> arcPos;
};

/// A trace whose two endpoints land on the same state circle.
struct Chord {
  int crossing;
  int circle;
  int pos1, pos2;  // endpoint positions in the circle's cyclic order
};

StateGeometry resolve_all(const LinkDiagram& d, Side side);

/// Chords of the decorated all-A or all-B state (non-chord traces dropped).
std::vector<Chord> decorated_state(const LinkDiagram& d, Side side);
std::vector<Chord> decorated_state(const StateGeometry& g);

/// (c + 2 - |sigma_A| - |sigma_B|) / 2 for a connected diagram.
int turaev_genus_diagram(const LinkDiagram& d);

bool is_A_adequate(const LinkDiagram& d);
bool is_B_adequate(const LinkDiagram& d);
bool is_adequate_diagram(const LinkDiagram& d);

}  // namespace knotspan
