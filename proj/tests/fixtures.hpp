#pragma once

#include "knotspan/diagram.hpp"
#include "knotspan/laurent.hpp"

#include <string>

namespace fixtures {

// Left-handed trefoil (writhe -3): <D> = A^7 - A^3 - A^-5,
// V = q^-4 + q^-12 - q^-16, |sigma_A| = 3, |sigma_B| = 2.
inline const char* kTrefoil = "tref : X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

// Hopf link: <D> = -A^4 - A^-4, |sigma_A| = |sigma_B| = 2.
inline const char* kHopf = "hopf : X[1,3,2,4] X[3,1,4,2]";

// Positive curl: <D> = -A^3, Lambda = a.
inline const char* kCurl = "curl : X[1,1,2,2]";

inline knotspan::LinkDiagram trefoil() { return knotspan::parse_pd(kTrefoil); }
inline knotspan::LinkDiagram hopf() { return knotspan::parse_pd(kHopf); }
inline knotspan::LinkDiagram curl() { return knotspan::parse_pd(kCurl); }

inline knotspan::Laurent1 trefoil_bracket() {
  knotspan::Laurent1 b;
  b.add_term(7, 1);
  b.add_term(3, -1);
  b.add_term(-5, -1);
  return b;
}

inline std::string data_dir() { return KNOTSPAN_DATA_DIR; }

}  // namespace fixtures
