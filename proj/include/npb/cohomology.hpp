#pragma once
#include "npb/actions.hpp"

namespace npb {

// Cochain coordinates: f in C^n(P, M) is the vector of f(e_{i1},...,e_{in})
// coefficients with flat index ((i1*p + i2)*p + ... + in)*m + t, multi-index
// lexicographic. Hom(P, M) carries the index s*m + t, which makes the flat
// index of C^{n+1}(P, M) literally equal to that of C^n(P, Hom(P,M)).

// A bimodule over P: dot actions only.
struct Bimodule {
  int dim = 0;
  std::vector<Matrix> L, R; // per P basis element
};

Bimodule bimoduleOf(const Representation& r);
// M^e = Hom(P, M) with (p.f)(q) = p.f(q) and (f.p)(q) = f(q).p
Bimodule meModule(const Representation& r);
bool checkAssocBimodule(const BiAlgebra& p, const Bimodule& m);

int cochainDim(const BiAlgebra& p, int moduleDim, int n);

// Coboundary with the global (-1)^(n+1) prefactor.
Matrix hochschildCoboundary(const BiAlgebra& p, const Bimodule& m, int n);
Matrix leibnizCoboundary(const BiAlgebra& p, const Representation& r, int n);

// theta_n, theta'_n: C^{n+1}(P,M) -> C^n(P,M^e), coordinate permutations.
Matrix theta(const BiAlgebra& p, int moduleDim, int n);
Matrix thetaPrime(const BiAlgebra& p, int moduleDim, int n);

// The comparison chain maps C^n_H(P,M) -> C^n_H(P,M^e) and
// C^n_L(P,M) -> C^n_H(P,M^e); degree-1 cases are the special printed formulas.
Matrix alphaMap(const Representation& r, int n);
Matrix alphaPrimeMap(const Representation& r, int n);
Matrix betaMap(const Representation& r, int n);
Matrix betaPrimeMap(const Representation& r, int n);

enum class SummandKind { HM, HMe, LM };

struct Summand {
  SummandKind kind;
  int offset;
  int dim;
};

// A nonnegatively graded complex with explicit boundaries. dims has entries
// 0..N+1 and d[n] maps degree n to degree n+1 for n = 0..N. The per-degree
// summand layout drives the short-exact-sequence plumbing.
struct Complex {
  Field field = Field::rationals();
  int maxDeg = 0; // N
  std::vector<int> dims;
  std::vector<Matrix> d;
  std::vector<std::vector<Summand>> layout;

  bool boundaryConditionHolds() const; // d[n+1] d[n] == 0 for all n < N
};

// The six variety complexes of the cohomology construction.
Complex buildComplex(Variety v, const Representation& r, int maxDeg);

// Building blocks shared with the sequence checks.
Complex buildPlainH(const Representation& r, int maxDeg);     // (C^n_H(P,M), -dH)
Complex buildPlainL(const Representation& r, int maxDeg);     // (C^n_L(P,M), -dL)
Complex buildShiftedMe(const Representation& r, int maxDeg);  // C^{n-1}_H(P,M^e), +dHe
Complex buildConeBeta(const Representation& r, bool prime, int maxDeg);
Complex buildConeBetaBoth(const Representation& r, int maxDeg);
Complex directSum(const Complex& a, const Complex& b);

std::vector<int> cohomologyDims(const Complex& c, int maxDeg);

// Restricted second cohomology of the NP complexes: the kernel of the
// boundary restricted to the (C^2_H, C^2_L) summands modulo the image of d^1.
int restrictedH2(Variety v, const Representation& r);

// Chosen cohomology basis of one degree, with reduction to H-coordinates.
class HSpace {
public:
  HSpace(const Complex& c, int n, PivotRule rule = PivotRule::ShortestColumn);
  int dim() const { return (int)repRows_.size(); }
  const std::vector<SVec>& reps() const { return reps_; }
  // v must be a cocycle; returns its class in the chosen basis coordinates.
  std::vector<Scalar> toH(const SVec& v) const;

private:
  Field field_;
  Echelon ech_;
  std::vector<int> repRows_;
  std::vector<SVec> reps_;
};

} // namespace npb
