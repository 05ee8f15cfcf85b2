#pragma once
#include "npb/cohomology.hpp"

namespace npb {

// The 22 short exact sequences read off the complex constructions, tagged in
// the order they are listed; cPrime/dPrime are the primed variants.
enum class SesTag {
  a1, a2, a,
  b1, b2, b,
  c1, c2, c, cPrime,
  d1, d2, d, dPrime,
  e, f,
  g1, g2, g,
  h1, h2, h,
};

constexpr int kSesTagCount = 22;
std::vector<SesTag> allSesTags();
std::string sesTagName(SesTag t);
SesTag sesTagFromName(const std::string& s);
Variety sesVariety(SesTag t);   // variety the middle complex needs
int sesMinDegree(SesTag t);     // first degree at which the sequence is exact

struct SES {
  SesTag tag;
  int minDeg;
  int maxDeg;
  Complex left, mid, right;
  std::vector<Matrix> inj;  // per degree 0..maxDeg+1
  std::vector<Matrix> surj;
};

SES buildSes(SesTag tag, const Representation& r, int maxDeg);

struct LevelwiseReport {
  bool ok = true;
  int failDegree = -1;
  std::string reason;
};
LevelwiseReport verifyLevelwiseExact(const SES& s);

// Connecting homomorphism H^n(right) -> H^{n+1}(left) on the given bases,
// computed by lift / differentiate / pull back. The pivot rule controls the
// internal solves only, so two rules must produce the same matrix.
Matrix connectingHom(const SES& s, int n, const HSpace& hRight, const HSpace& hLeftNext,
                     PivotRule rule = PivotRule::ShortestColumn);

struct LesNode {
  int degree;
  char at;       // 'L', 'M', 'R'
  bool exact;
  int rankIn, dimKer;
};

struct LESReport {
  SesTag tag;
  int minDeg, maxDeg;
  std::vector<int> hLeft, hMid, hRight;   // dims, index = degree
  std::vector<int> connectingRank;        // rank of H^n(R) -> H^{n+1}(L)
  std::vector<LesNode> nodes;
  bool levelwiseExact = true;
  bool allNodesExact = true;
  bool connectingIndependent = true;      // two pivot rules agreed
};

// Verifies node exactness of the induced long exact sequence at every node
// fully supported by the sequence's valid range, for H degrees <= maxDeg.
LESReport verifyLes(SesTag tag, const Representation& r, int maxDeg);

} // namespace npb
