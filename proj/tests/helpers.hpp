#pragma once
#include "npb/algebra.hpp"

// Small fixtures shared across test binaries.

inline npb::BiAlgebra makeUpperTriangular3(const npb::Field& f) {
  using namespace npb;
  // E11, E12, E22 with matrix multiplication, zero bracket
  BiAlgebra a(f, 3, {"E11", "E12", "E22"});
  Scalar one = Scalar::one(f);
  a.setDot(0, 0, 0, one); // E11*E11 = E11
  a.setDot(0, 1, 1, one); // E11*E12 = E12
  a.setDot(1, 2, 1, one); // E12*E22 = E12
  a.setDot(2, 2, 2, one); // E22*E22 = E22
  return a;
}

inline npb::BiAlgebra makeLeibniz2(const npb::Field& f) {
  using namespace npb;
  // [x,x] = y, everything else zero (zero dot)
  BiAlgebra a(f, 2, {"x", "y"});
  a.setBracket(0, 0, 1, Scalar::one(f));
  return a;
}

inline npb::BiAlgebra makeDim1Idempotent(const npb::Field& f) {
  using namespace npb;
  BiAlgebra a(f, 1, {"e"});
  a.setDot(0, 0, 0, Scalar::one(f));
  return a;
}
