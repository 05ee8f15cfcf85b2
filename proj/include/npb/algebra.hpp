#pragma once
#include <array>
#include <set>
#include <string>
#include <vector>

#include "npb/matrix.hpp"

namespace npb {

// The nine classification tags. Poisson here means: commutative dot,
// alternating bracket ([x,y]+[y,x]=0 and [x,x]=0, the latter checked
// separately so characteristic 2 is handled conservatively), both
// compatibility identities.
enum class VarietyTag { Assoc, Leibniz, AWBl, AWBr, AWBlr, NPl, NPr, NPlr, Poisson };

std::string tagName(VarietyTag t);
VarietyTag tagFromName(const std::string& s);

// The six operational varieties of the library.
enum class Variety { NPl, NPr, NPlr, AWBl, AWBr, AWBlr };
std::string varietyName(Variety v);
Variety varietyFromName(const std::string& s);
VarietyTag varietyTag(Variety v);
bool varietyHasLeibniz(Variety v);   // NP* carry the Leibniz identity
bool varietyHasLeft(Variety v);      // [a.b,c] = a.[b,c] + [a,c].b
bool varietyHasRight(Variety v);     // [a,b.c] = b.[a,c] + [a,b].c

enum class IdentityTag {
  Assoc,
  Leibniz,
  LeftCompat,    // [a.b,c] = a.[b,c] + [a,c].b
  RightCompat,   // [a,b.c] = b.[a,c] + [a,b].c
  DotComm,
  BracketAlt,    // [x,y]+[y,x] = 0 and [x,x] = 0
  D1,            // [a,c].[b,d] + [a,c].[d,b] + [b,c].[a,d] + [c,b].[a,d] = 0
  D2,            // a.c.[b,d] + [a,c].d.b = c.a.[b,d] + [a,c].b.d
  D3,            // [[a,c].d,b] = [[a,c],b].d - [a,c].[b,d] - [b,c].[a,d] + c.[[a,d],b] - [c.[a,d],b]
  D4,            // [a,b.[c,d]] + [a,[b,d].c] = [[a,b.c],d] - [[a,d],b.c]
  D5,            // [a.b,c] - [a,c.b] + [b.c,a] - [b,a.c] + [c.a,b] - [c,b.a] = 0
  D6,            // second expansion of [[a,c].d,b]
};

std::string identityName(IdentityTag t);
std::string identityFormula(IdentityTag t);
IdentityTag identityFromName(const std::string& s);
// The variety whose members are guaranteed to satisfy a derived identity.
VarietyTag derivedPremise(IdentityTag t);

// Finite-dimensional algebra with two bilinear products given by structure
// constants: e_i . e_j = sum_k dot[i][j][k] e_k, [e_i, e_j] = sum_k bracket[i][j][k] e_k.
class BiAlgebra {
public:
  BiAlgebra(const Field& f, int dim, std::vector<std::string> basisNames = {});

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string>& basisNames() const { return names_; }

  const Scalar& dotC(int i, int j, int k) const { return dot_[idx(i, j, k)]; }
  const Scalar& bracketC(int i, int j, int k) const { return bracket_[idx(i, j, k)]; }
  void setDot(int i, int j, int k, const Scalar& v) { dot_[idx(i, j, k)] = v; }
  void setBracket(int i, int j, int k, const Scalar& v) { bracket_[idx(i, j, k)] = v; }

  std::vector<Scalar> dot(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
  std::vector<Scalar> basisVec(int i) const;
  std::vector<Scalar> zeroVec() const;

  bool operator==(const BiAlgebra& o) const;

private:
  size_t idx(int i, int j, int k) const { return ((size_t)i * dim_ + j) * dim_ + k; }
  Field field_;
  int dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> dot_, bracket_;
};

struct LinearMap {
  int sourceDim = 0;
  int targetDim = 0;
  Matrix matrix; // targetDim x sourceDim
};

bool checkIdentity(const BiAlgebra& a, IdentityTag id);
std::set<VarietyTag> classify(const BiAlgebra& a);
bool hasTag(const BiAlgebra& a, VarietyTag t);

struct DerivedIdentityEntry {
  IdentityTag id;
  VarietyTag premise;
  bool premiseHolds;
  bool identityHolds;
  bool violation; // premise holds but identity fails: a bug or a falsified derivation
};
std::vector<DerivedIdentityEntry> checkDerivedIdentities(const BiAlgebra& a);

// [a,b] = ab - ba on an associative algebra.
BiAlgebra commutatorBracket(const BiAlgebra& a);

enum class Side { Left, Right };
// Left: [a,b] = a(Db) - (Db)a.  Right: [a,b] = (Da)b - b(Da).
BiAlgebra derivationBracket(const BiAlgebra& a, const LinearMap& d, Side side);
bool isSquareZeroDerivation(const BiAlgebra& a, const LinearMap& d);

// {z : z.p = p.z = [z,p] = [p,z] = 0 for all p}
Subspace center(const BiAlgebra& p);

// Smallest subspace containing the generators and closed under all four
// products with the whole algebra.
Subspace idealClosure(const BiAlgebra& p, const std::vector<SVec>& generators);
bool isTwoSidedIdeal(const BiAlgebra& p, const Subspace& s);

struct QuotientResult {
  BiAlgebra algebra;
  std::vector<int> complementBasis; // indices of ambient basis vectors kept
};
QuotientResult quotient(const BiAlgebra& p, const Subspace& ideal);

// Quotient by the ideal generated by all [x,x] and xy - yx.
BiAlgebra poissonification(const BiAlgebra& p);

enum class Underlying { Assoc, Leibniz };
BiAlgebra underlying(const BiAlgebra& p, Underlying which);

} // namespace npb
