#pragma once

#include "knotspan/diagram.hpp"
#include "knotspan/laurent.hpp"

namespace knotspan {

/// Largest crossing count accepted by the 2^c state-sum enumeration.
inline constexpr int kBracketCrossingLimit = 24;

/// Bracket polynomial with Kauffman's degree-bound diagnostics:
/// M = c + 2|sigma_A| - 2 and m = -c - 2|sigma_B| + 2 bound the degrees; aM
/// and am are the coefficients at those bounds (zero when absent).
struct BracketReport {
  Laurent1 bracket;
  int M = 0, m = 0;
  BigInt aM, am;
  int spanBracket = 0;
};

/// Exact Kauffman bracket by direct state-sum enumeration (c <= 24).
Laurent1 kauffman_bracket(const LinkDiagram& d);

JonesPoly jones(const LinkDiagram& d);

/// span of V_L(t); equals span<D>/4.
int span_jones(const LinkDiagram& d);

BracketReport bracket_report(const LinkDiagram& d);

}  // namespace knotspan
