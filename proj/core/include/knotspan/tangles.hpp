#pragma once

#include "knotspan/diagram.hpp"

#include <vector>

namespace knotspan {

enum class EdgeKind { Alternating, NonAlternating };

/// Classification of one PD edge: alternating iff one endpoint is an
/// over-crossing and one an under-crossing. Non-alternating edges carry a
/// sign: + when both endpoints are over, - when both are under.
struct EdgeClass {
  int label = 0;
  EdgeKind kind = EdgeKind::Alternating;
  int sign = 0;  // +1 / -1 for non-alternating edges, 0 otherwise
};

/// A connector is a non-alternating edge joining two (possibly equal) tangles.
struct Connector {
  int label = 0;
  int sign = 0;
  int tangle1 = 0, tangle2 = 0;
};

/// Partition of the crossings into maximal alternating tangles joined by
/// signed non-alternating edges.
struct TangleDecomposition {
  std::vector<int> tangleOfCrossing;
  int tangleCount = 0;
  std::vector<Connector> connectors;
  std::vector<int> endCounts;  // connector endpoints per tangle
};

/// Structure summary for the Turaev-genus-one cycle form: an even cycle of
/// 4-ended alternating tangles, every adjacency doubled by two connectors of
/// opposite signs.
struct CycleFormReport {
  bool isCycleForm = false;
  int tangleCount = 0;
  int connectorCount = 0;
  bool allTanglesFourEnded = false;
  bool evenCycle = false;  // reported, not required
};

std::vector<EdgeClass> classify_edges(const LinkDiagram& d);
TangleDecomposition decompose(const LinkDiagram& d);
CycleFormReport is_genus_one_cycle_form(const LinkDiagram& d);

}  // namespace knotspan
