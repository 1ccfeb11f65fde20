#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotspan {

/// Parse/validation failure for PD input.
class PdError : public std::runtime_error {
public:
  enum class Kind { Syntax, Labels, Orientation, Planarity, Validation };

  PdError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// One PD crossing tuple (a,b,c,d): the four edge ends listed counterclockwise
/// starting from the incoming under-strand edge. The under-strand runs a -> c.
/// sign is +1 exactly when the over-strand is directed d -> b.
struct CrossingTuple {
  std::array<int, 4> end;
  int sign = 0;

  int a() const { return end[0]; }
  int b() const { return end[1]; }
  int c() const { return end[2]; }
  int d() const { return end[3]; }
};

/// An oriented planar link diagram given by PD crossing tuples.
/// Immutable after construction; all operations on it are pure.
struct LinkDiagram {
  std::string name;
  std::vector<CrossingTuple> crossings;
  int freeLoops = 0;      // crossingless unknot components
  int componentCount = 0; // strand components + freeLoops

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

/// Parse one PD line: `NAME ":" WS ( "X[" INT "," INT "," INT "," INT "]" WS? )* ("O"INT)?`
/// Validates labels, orientation consistency, and planarity (rotation-system
/// Euler characteristic). The name part is optional when the line carries no ':'.
LinkDiagram parse_pd(const std::string& text);

/// Build a validated diagram from raw tuples (signs are inferred).
LinkDiagram make_diagram(const std::vector<std::array<int, 4>>& tuples,
                         int freeLoops = 0, const std::string& name = "");

std::string serialize_pd(const LinkDiagram& d);

int writhe(const LinkDiagram& d);
LinkDiagram mirror(const LinkDiagram& d);

bool is_connected(const LinkDiagram& d);
int component_count(const LinkDiagram& d);
/// True iff no crossing is nugatory (no repeated label within a tuple and no
/// crossing is a cut vertex of the underlying 4-valent multigraph).
bool is_reduced(const LinkDiagram& d);

/// True iff every edge has one over and one under endpoint (c >= 1), i.e. the
/// diagram is alternating. The 0-crossing unknot counts as alternating.
bool is_alternating_diagram(const LinkDiagram& d);

}  // namespace knotspan
