#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "npb/algebra.hpp"

using namespace npb;

TEST_CASE("zero algebra satisfies everything") {
  Field q = Field::rationals();
  BiAlgebra z(q, 3);
  for (IdentityTag t : {IdentityTag::Assoc, IdentityTag::Leibniz, IdentityTag::LeftCompat,
                        IdentityTag::RightCompat, IdentityTag::DotComm, IdentityTag::BracketAlt,
                        IdentityTag::D1, IdentityTag::D2, IdentityTag::D3, IdentityTag::D4,
                        IdentityTag::D5, IdentityTag::D6})
    CHECK(checkIdentity(z, t));
  CHECK(classify(z).size() == 9);
  for (auto& e : checkDerivedIdentities(z)) {
    CHECK(e.identityHolds);
    CHECK(!e.violation);
  }
}

TEST_CASE("commutator bracket on upper-triangular matrices") {
  Field q = Field::rationals();
  BiAlgebra ut = makeUpperTriangular3(q);
  BiAlgebra a = commutatorBracket(ut);
  CHECK(checkIdentity(a, IdentityTag::LeftCompat));
  // [E11, E12] = E12
  auto v = a.bracket(a.basisVec(0), a.basisVec(1));
  CHECK(v[1] == Scalar::one(q));
  CHECK(v[0].isZero());
  auto tags = classify(a);
  CHECK(tags.count(VarietyTag::NPlr));
  CHECK(!tags.count(VarietyTag::Poisson)); // E11*E12 != E12*E11
  // derived identities must all hold on an NPlr algebra
  for (auto& e : checkDerivedIdentities(a)) CHECK(!e.violation);
  for (IdentityTag t : {IdentityTag::D1, IdentityTag::D2, IdentityTag::D3, IdentityTag::D4,
                        IdentityTag::D5, IdentityTag::D6})
    CHECK(checkIdentity(a, t));
}

TEST_CASE("commutator bracket edge cases") {
  Field q = Field::rationals();
  BiAlgebra e1 = makeDim1Idempotent(q);
  BiAlgebra c = commutatorBracket(e1);
  CHECK(c.bracket(c.basisVec(0), c.basisVec(0))[0].isZero());

  // commutative algebra: zero bracket
  BiAlgebra comm(q, 2);
  comm.setDot(0, 0, 0, Scalar::one(q));
  comm.setDot(0, 1, 1, Scalar::one(q));
  comm.setDot(1, 0, 1, Scalar::one(q));
  BiAlgebra cc = commutatorBracket(comm);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto v = cc.bracket(cc.basisVec(i), cc.basisVec(j));
      CHECK(std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); }));
    }

  // non-associative input is rejected
  BiAlgebra bad(q, 2);
  bad.setDot(0, 0, 1, Scalar::one(q));
  bad.setDot(1, 0, 0, Scalar::one(q));
  if (!checkIdentity(bad, IdentityTag::Assoc)) CHECK_THROWS_AS(commutatorBracket(bad), Error);
}

TEST_CASE("dot-zero Leibniz algebra classifies as NPlr without Poisson") {
  Field q = Field::rationals();
  BiAlgebra a = makeLeibniz2(q);
  CHECK(checkIdentity(a, IdentityTag::Leibniz));
  auto tags = classify(a);
  for (VarietyTag t : {VarietyTag::Leibniz, VarietyTag::NPl, VarietyTag::NPr, VarietyTag::NPlr,
                       VarietyTag::AWBl, VarietyTag::AWBr, VarietyTag::AWBlr, VarietyTag::Assoc})
    CHECK(tags.count(t));
  CHECK(!tags.count(VarietyTag::Poisson));
}

TEST_CASE("derivation bracket") {
  Field q = Field::rationals();
  BiAlgebra ut = makeUpperTriangular3(q);
  // D = 0: zero bracket, result is commutative-bracket-trivial
  LinearMap d0{3, 3, Matrix(q, 3, 3)};
  BiAlgebra b0 = derivationBracket(ut, d0, Side::Left);
  CHECK(underlying(b0, Underlying::Assoc) == b0);
  CHECK(isSquareZeroDerivation(ut, d0));

  // commutative algebra: any D gives zero bracket on the Left formula
  BiAlgebra comm(q, 2);
  comm.setDot(0, 0, 0, Scalar::one(q));
  comm.setDot(0, 1, 1, Scalar::one(q));
  comm.setDot(1, 0, 1, Scalar::one(q));
  Matrix dm(q, 2, 2);
  dm.set(0, 1, Scalar::fromLong(q, 2));
  dm.set(1, 0, Scalar::fromLong(q, -1));
  BiAlgebra bc = derivationBracket(comm, LinearMap{2, 2, dm}, Side::Left);
  CHECK(underlying(bc, Underlying::Assoc) == bc);

  LinearMap wrongShape{2, 2, Matrix(q, 2, 2)};
  CHECK_THROWS_AS(derivationBracket(ut, wrongShape, Side::Left), Error);
}

TEST_CASE("square-zero derivation predicate") {
  Field q = Field::rationals();
  BiAlgebra e1 = makeDim1Idempotent(q);
  LinearMap id1{1, 1, Matrix::identity(q, 1)};
  CHECK(!isSquareZeroDerivation(e1, id1)); // D(e*e)=e but (De)e+e(De)=2e, and D^2 != 0

  // dual numbers over F_2: D(1)=0, D(eps)=1 is a square-zero derivation
  // (over Q it fails: D(eps^2)=0 but (Deps)eps+eps(Deps)=2eps)
  for (const Field& f : {Field::prime(2), Field::rationals()}) {
    BiAlgebra dual(f, 2, {"one", "eps"});
    Scalar one = Scalar::one(f);
    dual.setDot(0, 0, 0, one);
    dual.setDot(0, 1, 1, one);
    dual.setDot(1, 0, 1, one);
    Matrix dm(f, 2, 2);
    dm.set(0, 1, one); // eps -> 1
    bool ok = isSquareZeroDerivation(dual, LinearMap{2, 2, dm});
    CHECK(ok == !f.isRational());
  }
}

TEST_CASE("center") {
  Field q = Field::rationals();
  BiAlgebra z(q, 3);
  CHECK(center(z).dim() == 3);
  CHECK(center(makeDim1Idempotent(q)).dim() == 0);
  BiAlgebra leib = makeLeibniz2(q);
  Subspace c = center(leib);
  CHECK(c.dim() == 1);
  CHECK(c.contains({{1, Scalar::one(q)}}));         // y central
  CHECK(!c.contains({{0, Scalar::one(q)}}));        // x not
}

TEST_CASE("ideal closure and quotient") {
  Field q = Field::rationals();
  BiAlgebra leib = makeLeibniz2(q);
  CHECK(idealClosure(leib, {}).dim() == 0);
  // generator x: closure adds y = [x,x]
  Subspace ix = idealClosure(leib, {{{0, Scalar::one(q)}}});
  CHECK(ix.dim() == 2);
  // full-span generators
  CHECK(idealClosure(leib, {{{0, Scalar::one(q)}}, {{1, Scalar::one(q)}}}).dim() == 2);

  Subspace zero(q, 2);
  QuotientResult same = quotient(leib, zero);
  CHECK(same.algebra.dim() == 2);
  CHECK(same.algebra == leib);
  QuotientResult nothing = quotient(leib, ix);
  CHECK(nothing.algebra.dim() == 0);

  Subspace iy(q, 2);
  iy.insert({{1, Scalar::one(q)}});
  QuotientResult q1 = quotient(leib, iy);
  CHECK(q1.algebra.dim() == 1);
  CHECK(q1.algebra.bracket(q1.algebra.basisVec(0), q1.algebra.basisVec(0))[0].isZero());

  // not an ideal: span{x} in the Leibniz algebra ([x,x]=y escapes)
  Subspace sx(q, 2);
  sx.insert({{0, Scalar::one(q)}});
  CHECK_THROWS_AS(quotient(leib, sx), Error);

  // identities pass to quotients
  auto tagsBefore = classify(leib);
  auto tagsAfter = classify(q1.algebra);
  for (auto t : tagsBefore) CHECK(tagsAfter.count(t));
}

TEST_CASE("poissonification") {
  Field q = Field::rationals();
  // already Poisson: unchanged
  BiAlgebra pol(q, 2, {"one", "t"});
  Scalar one = Scalar::one(q);
  pol.setDot(0, 0, 0, one);
  pol.setDot(0, 1, 1, one);
  pol.setDot(1, 0, 1, one);
  REQUIRE(classify(pol).count(VarietyTag::Poisson));
  BiAlgebra p1 = poissonification(pol);
  CHECK(p1.dim() == 2);
  CHECK(classify(p1).count(VarietyTag::Poisson));

  // dot-zero Leibniz: collapses to a 1-dim abelian algebra
  BiAlgebra p2 = poissonification(makeLeibniz2(q));
  CHECK(p2.dim() == 1);
  CHECK(classify(p2).count(VarietyTag::Poisson));

  // commutator bracket: bracket dies in the quotient
  BiAlgebra p3 = poissonification(commutatorBracket(makeUpperTriangular3(q)));
  CHECK(classify(p3).count(VarietyTag::Poisson));
  CHECK(p3.dim() == 2);
  CHECK(underlying(p3, Underlying::Assoc) == p3); // zero bracket

  // idempotent on the already-Poisson result
  BiAlgebra p2b = poissonification(p2);
  CHECK(p2b == p2);
}

TEST_CASE("underlying") {
  Field q = Field::rationals();
  BiAlgebra z(q, 2);
  CHECK(underlying(z, Underlying::Assoc) == z);
  BiAlgebra a = commutatorBracket(makeUpperTriangular3(q));
  BiAlgebra ua = underlying(a, Underlying::Assoc);
  CHECK(ua == makeUpperTriangular3(q));
  BiAlgebra ul = underlying(a, Underlying::Leibniz);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        CHECK(ul.bracketC(i, j, k) == a.bracketC(i, j, k));
        CHECK(ul.dotC(i, j, k).isZero());
      }
}

TEST_CASE("classification respects the implication lattice") {
  // perturb the NPlr commutator algebra: at least one defining identity breaks
  Field f2 = Field::prime(2);
  BiAlgebra a = commutatorBracket(makeUpperTriangular3(f2));
  REQUIRE(classify(a).count(VarietyTag::NPlr));
  bool foundBreaking = false;
  for (int i = 0; i < 3 && !foundBreaking; ++i)
    for (int j = 0; j < 3 && !foundBreaking; ++j)
      for (int k = 0; k < 3 && !foundBreaking; ++k) {
        BiAlgebra m = a;
        m.setBracket(i, j, k, m.bracketC(i, j, k) + Scalar::one(f2));
        auto tags = classify(m);
        if (!tags.count(VarietyTag::NPlr)) {
          foundBreaking = true;
          bool defBreaks = !checkIdentity(m, IdentityTag::Assoc) ||
                           !checkIdentity(m, IdentityTag::Leibniz) ||
                           !checkIdentity(m, IdentityTag::LeftCompat) ||
                           !checkIdentity(m, IdentityTag::RightCompat);
          CHECK(defBreaks);
        }
        // lattice coherence on every mutant
        CHECK((tags.count(VarietyTag::NPlr) > 0) ==
              (tags.count(VarietyTag::NPl) && tags.count(VarietyTag::NPr)));
        if (tags.count(VarietyTag::Poisson)) CHECK(tags.count(VarietyTag::NPlr));
        if (tags.count(VarietyTag::NPl)) CHECK(tags.count(VarietyTag::AWBl));
        if (tags.count(VarietyTag::NPr)) CHECK(tags.count(VarietyTag::AWBr));
      }
  CHECK(foundBreaking);
}
