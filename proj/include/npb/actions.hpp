#pragma once
#include <optional>
#include <string>
#include <vector>

#include "npb/algebra.hpp"

namespace npb {

// Action of P on a module M, given by four families of module_dim x module_dim
// matrices, one per basis element of P:
//   dotL[i]: m -> e_i . m      dotR[i]: m -> m . e_i
//   brL[i]:  m -> [e_i, m]     brR[i]:  m -> [m, e_i]
// A Representation keeps M abelian (M.M = [M,M] = 0).
struct Representation {
  BiAlgebra algebra; // P
  int moduleDim = 0;
  std::vector<Matrix> dotL, dotR, brL, brR;

  static Representation zero(const BiAlgebra& p, int moduleDim);
  static Representation regular(const BiAlgebra& p);
};

// One failed axiom instance, for reports.
struct ActionDefect {
  std::string family;
  int i, j; // P basis indices involved
};

// Checks the variety's action axioms on basis pairs/triples. The module side
// may be a full algebra (crossed-module checks) or abelian (representations).
bool checkActionOn(Variety v, const BiAlgebra& p, const BiAlgebra& moduleAlgebra,
                   const std::vector<Matrix>& dotL, const std::vector<Matrix>& dotR,
                   const std::vector<Matrix>& brL, const std::vector<Matrix>& brR,
                   std::vector<ActionDefect>* defects = nullptr);
bool checkAction(Variety v, const Representation& r, std::vector<ActionDefect>* defects = nullptr);

// M (+) P with (m1,p1).(m2,p2) = (m1.p2 + p1.m2, p1 p2) and the analogous bracket.
// Module coordinates come first.
BiAlgebra semidirectProduct(Variety v, const Representation& r);

struct ExtensionWitness {
  BiAlgebra total;
  LinearMap inj;  // M -> Q
  LinearMap proj; // Q -> P
};
ExtensionWitness semidirectWitness(Variety v, const Representation& r);
// Reads the action tensors back off a split extension with M in the leading
// coordinates; exactness of the witness is the caller's context.
Representation inducedRepresentation(const ExtensionWitness& w, const BiAlgebra& p);

// Der(P, M): kernel of the linear system for both Leibniz rules; coordinates
// of a map d are d(e_j) = sum_t D[j*moduleDim + t] m_t.
Subspace derivationSpace(const Representation& r);
// ad_p as a coordinate vector of the regular representation, d(x) = -[x, p].
SVec adMap(const BiAlgebra& p, const std::vector<Scalar>& pElem);

// mu: M -> P with M a full algebra carrying an action of P.
struct CrossedModule {
  BiAlgebra p;
  BiAlgebra m;
  LinearMap mu; // dim P x dim M
  std::vector<Matrix> dotL, dotR, brL, brR;
};
bool checkCrossedModule(Variety v, const CrossedModule& cm);

// Brute-force count of equivalence classes of abelian extensions of P by M
// inducing the given representation, over a prime field. The candidate space
// is capped; see the guard parameters.
struct ExtensionCount {
  long long validFactorSets;
  long long coboundaryOrbitSize;
  long long classes;
};
ExtensionCount enumerateExtensions(Variety v, const Representation& r, int dimGuard = 4,
                                   long long candidateGuard = 1LL << 16);

} // namespace npb
