#pragma once

#include "knotspan/diagram.hpp"
#include "knotspan/laurent.hpp"

#include <optional>
#include <unordered_map>
#include <utility>

namespace knotspan {

/// Thrown when a diagram exceeds the configured skein-recursion cutoff.
class CutoffExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SupportPoint {
  int r, s;
  bool operator==(const SupportPoint& o) const = default;
};

/// Support points witnessing adequacy per the two-variable criterion:
/// first satisfies -r+s = c(D), second satisfies r+s = c(D).
using AdequacyWitness = std::pair<SupportPoint, SupportPoint>;

struct KauffmanReport {
  Laurent2 lambda;  // regular-isotopy polynomial Lambda_D(a,z)
  Laurent2 F;       // a^{-w(D)} Lambda_D(a,z)
  int spanA = 0;
  bool supportOK = false;  // |r|+s <= c(D) over the whole support
  std::optional<AdequacyWitness> adequacyWitness;
};

struct Corollary51Report {
  int maxdegA = 0, mindegA = 0, spanA = 0;
  int expectedMax = 0, expectedMin = 0, expectedSpan = 0;
  bool ok = false;
};

/// Skein-recursion evaluator for Lambda_D(a,z) with a memo table shared
/// across calls; reuse one engine when processing a corpus.
class KauffmanEngine {
public:
  explicit KauffmanEngine(int maxCrossings = 16)
      : maxCrossings_(maxCrossings) {}

  Laurent2 lambda(const LinkDiagram& d);
  KauffmanReport report(const LinkDiagram& d);

  std::size_t memo_size() const { return memo_.size(); }

private:
  int maxCrossings_;
  std::unordered_map<std::string, Laurent2> memo_;
};

Laurent2 lambda_poly(const LinkDiagram& d, int maxCrossings = 16);

/// Canonical unoriented diagram code (BFS-minimal relabeling); equal codes
/// imply identical skein values. Used as the result-cache key.
std::string diagram_code(const LinkDiagram& d);

/// Thistlethwaite support bound: every (r,s) in the support has |r|+s <= c.
bool support_check(const Laurent2& p, int c);

/// Adequacy criterion from the two-variable polynomial; witness present iff
/// both extreme diagonals of the support triangle are touched.
std::optional<AdequacyWitness> adequacy_from_kauffman(const Laurent2& lambda,
                                                      int c);

/// Degree formulas for adequate Turaev-genus-one diagrams:
/// maxdeg_a = |sigma_A|-1, mindeg_a = -|sigma_B|+1, span_a = c-2.
/// (The A/B sides follow the same chirality that makes the bracket
/// specialization hold termwise; see the degree bounds M, m.)
Corollary51Report corollary_5_1_check(const LinkDiagram& d,
                                      KauffmanEngine& engine);

}  // namespace knotspan
