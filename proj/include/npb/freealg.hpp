#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "npb/algebra.hpp"

namespace npb {

// Immutable term tree over a finite generator set: leaves are generators,
// inner nodes are dot or bracket. Dot spines are flattened right-nested by
// the normalizer; raw input trees may be arbitrary.
class Term {
public:
  enum class Kind { Gen, Dot, Bracket };

  static Term gen(int index);
  static Term dot(const Term& l, const Term& r);      // raw node (no restructuring)
  static Term bracket(const Term& l, const Term& r);

  Kind kind() const { return n_->k; }
  int genIndex() const { return n_->gen; }
  const Term left() const { return Term(n_->l); }
  const Term right() const { return Term(n_->r); }
  int degree() const { return n_->degree; }

  static int compare(const Term& a, const Term& b); // degree, then kind, then children
  bool operator<(const Term& o) const { return compare(*this, o) < 0; }
  bool operator==(const Term& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Term& o) const { return compare(*this, o) != 0; }

  std::string str(const std::vector<std::string>& genNames) const;

private:
  struct Node {
    Kind k;
    int gen = -1;
    int degree;
    std::shared_ptr<const Node> l, r;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Right-nests every dot in the tree (associativity as a structural convention).
Term canonicalizeDots(const Term& t);
std::vector<Term> spineAtoms(const Term& t);          // canonical term -> atom list
Term spineFromAtoms(const std::vector<Term>& atoms);  // inverse

Term parseTerm(const std::string& text, const std::vector<std::string>& genNames);

// Formal linear combination of normal words.
struct FreeElement {
  Variety variety;
  Field field;
  std::map<Term, Scalar> terms; // no zero coefficients

  void add(const Term& t, const Scalar& c);
  void addScaled(const FreeElement& o, const Scalar& c);
  bool isZero() const { return terms.empty(); }
  bool operator==(const FreeElement& o) const;
  std::string str(const std::vector<std::string>& genNames) const;
};

enum class Strategy { Innermost, Outermost };

// Free-object context for one variety over one coefficient field.
// Holds memoization caches; use one instance per thread.
class FreeAlgebra {
public:
  FreeAlgebra(Variety v, const Field& f, std::vector<std::string> generatorNames, int degreeCap = 12);

  Variety variety() const { return variety_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& generators() const { return gens_; }

  FreeElement normalize(const Term& t, Strategy s = Strategy::Innermost) const;
  FreeElement normalize(const FreeElement& e, Strategy s = Strategy::Innermost) const;

  FreeElement freeDot(const FreeElement& a, const FreeElement& b) const;
  FreeElement freeBracket(const FreeElement& a, const FreeElement& b) const;
  FreeElement genElement(int index) const;

  // All admissible normal words of degree exactly n, deterministic order.
  std::vector<Term> enumerateBasis(int n) const;
  bool isNormalWord(const Term& t) const;

private:
  Variety variety_;
  Field field_;
  std::vector<std::string> gens_;
  int degreeCap_;

  struct Cache;
  std::shared_ptr<Cache> cache_;

  std::optional<std::vector<std::pair<Term, long>>> patternRewriteAtRoot(const Term& t) const;
  FreeElement normalizeTermInner(const Term& t) const;
  FreeElement normalizeTermOuter(const Term& t) const;
  std::optional<std::vector<std::pair<Term, long>>> rewriteOutermostOnce(const Term& t) const;
  FreeElement fixOrdering(const Term& t, Strategy s) const;
  int orderViolation(const std::vector<Term>& atoms) const; // index or -1
  void bumpFuel() const;

  std::vector<Term> atomsOfDegree(int k) const;
  std::vector<Term> wordsOfDegree(int k) const;
  bool spineOrderingOk(const std::vector<Term>& atoms) const;
};

// Direct recursive evaluation of a term under phi: generators -> elements of B.
std::vector<Scalar> interpret(const Term& t, const std::vector<std::vector<Scalar>>& phi,
                              const BiAlgebra& b);

// Unique homomorphism extending phi (universal property): evaluates normal
// words / free elements in B. Requires B to carry the variety's tags.
class Evaluator {
public:
  Evaluator(Variety v, const std::vector<std::vector<Scalar>>& phi, const BiAlgebra& b,
            bool checkTags = true);
  std::vector<Scalar> eval(const Term& t) const;
  std::vector<Scalar> eval(const FreeElement& e) const;

private:
  Variety variety_;
  std::vector<std::vector<Scalar>> phi_;
  const BiAlgebra b_;
};

// Finite-dimensional stand-in: basis = normal words of degree <= d, products
// landing above degree d are zero.
struct TruncatedFree {
  BiAlgebra algebra;
  std::vector<Term> basisWords;
};
TruncatedFree truncatedFreeAlgebra(Variety v, const Field& f,
                                   const std::vector<std::string>& gens, int maxDegree);

// Verification of the claimed free generating sets of the underlying
// associative / Leibniz algebras of free NP^l, NP^r, AWB^l, AWB^r objects.
struct FreeBasisDegreeReport {
  int degree;
  int candidateWords;  // words on the claimed letters
  int normalWords;     // dimension of the graded component
  int rank;
  bool spans;
  bool independent;
};
struct FreeBasisReport {
  Variety variety;
  Underlying kind;
  std::vector<FreeBasisDegreeReport> perDegree;
  bool ok;
};
FreeBasisReport underlyingFreeBasisReport(Variety v, const Field& f,
                                          const std::vector<std::string>& gens, Underlying kind,
                                          int maxDegree);

// A nonzero linear dependence among would-be-free associative words in the
// free NPlr/AWBlr algebra: the difference of the two expansion routes of
// [a*b, c*d] over four distinct generators. Evaluates to zero in every
// algebra of the variety.
FreeElement dependenceWitness(Variety v, const Field& f);

} // namespace npb
