#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "npb/actions.hpp"
#include "npb/sampler.hpp"

using namespace npb;

TEST_CASE("regular and zero representations satisfy the axioms") {
  Field q = Field::rationals();
  BiAlgebra a = commutatorBracket(makeUpperTriangular3(q));
  CHECK(checkAction(Variety::NPlr, Representation::regular(a)));
  CHECK(checkAction(Variety::NPlr, Representation::zero(a, 2)));
  BiAlgebra leib = makeLeibniz2(q);
  CHECK(checkAction(Variety::NPlr, Representation::regular(leib)));
  // NPlr action = NPl action and NPr action
  Representation r = Representation::regular(a);
  CHECK((checkAction(Variety::NPl, r) && checkAction(Variety::NPr, r)) ==
        checkAction(Variety::NPlr, r));
}

TEST_CASE("perturbing the regular representation breaks an axiom") {
  Field q = Field::rationals();
  BiAlgebra a = commutatorBracket(makeUpperTriangular3(q));
  Representation r = Representation::regular(a);
  r.dotL[0].add(1, 1, Scalar::one(q));
  std::vector<ActionDefect> defects;
  CHECK(!checkAction(Variety::NPlr, r, &defects));
  CHECK(!defects.empty()); // a specific broken instance is recorded
}

TEST_CASE("semidirect product") {
  Field q = Field::rationals();
  // zero everything: the abelian algebra on M + P
  BiAlgebra zp(q, 2);
  BiAlgebra sd0 = semidirectProduct(Variety::NPlr, Representation::zero(zp, 2));
  CHECK(sd0.dim() == 4);
  CHECK(sd0 == BiAlgebra(q, 4, sd0.basisNames()));

  // regular representation of the idempotent line: 2-dim associative NPlr algebra
  BiAlgebra e1 = makeDim1Idempotent(q);
  BiAlgebra sd = semidirectProduct(Variety::NPlr, Representation::regular(e1));
  CHECK(sd.dim() == 2);
  auto tags = classify(sd);
  CHECK(tags.count(VarietyTag::Assoc));
  CHECK(tags.count(VarietyTag::NPlr));

  // tags are preserved for sampled valid representations
  Sampler s(42);
  for (int it = 0; it < 12; ++it) {
    for (Variety v : {Variety::NPlr, Variety::NPr, Variety::AWBl}) {
      auto inst = s.randomInstance(v, it % 2 ? Field::prime(2) : Field::rationals(), 3, 2);
      BiAlgebra sp = semidirectProduct(v, inst.rep);
      CHECK(hasTag(sp, varietyTag(v)));
      // the witness recovers the representation tensors entrywise
      ExtensionWitness w = semidirectWitness(v, inst.rep);
      Representation back = inducedRepresentation(w, inst.p);
      for (int i = 0; i < inst.p.dim(); ++i) {
        CHECK(back.dotL[i] == inst.rep.dotL[i]);
        CHECK(back.dotR[i] == inst.rep.dotR[i]);
        CHECK(back.brL[i] == inst.rep.brL[i]);
        CHECK(back.brR[i] == inst.rep.brR[i]);
      }
    }
  }

  Representation bad = Representation::zero(e1, 1);
  bad.dotL[0].add(0, 0, Scalar::fromLong(q, 5)); // e.m = 5m but (ee).m = e.(e.m) fails
  CHECK_THROWS_AS(semidirectProduct(Variety::NPlr, bad), Error);
}

TEST_CASE("derivation spaces") {
  Field q = Field::rationals();
  // zero algebra: every linear map is a derivation
  BiAlgebra z(q, 2);
  CHECK(derivationSpace(Representation::zero(z, 3)).dim() == 6);
  // idempotent line, regular module: d(e) = 2 d(e) forces d = 0 over Q
  BiAlgebra e1 = makeDim1Idempotent(q);
  CHECK(derivationSpace(Representation::regular(e1)).dim() == 0);
  // inner derivations land in the derivation space of the regular representation
  Sampler s(7);
  for (int it = 0; it < 10; ++it) {
    auto p = s.randomAlgebra(Variety::NPlr, Field::rationals(), 3);
    Subspace der = derivationSpace(Representation::regular(p));
    for (int i = 0; i < p.dim(); ++i) {
      SVec ad = adMap(p, p.basisVec(i));
      CHECK(der.contains(ad));
    }
  }
}

TEST_CASE("crossed modules") {
  Field q = Field::rationals();
  BiAlgebra a = commutatorBracket(makeUpperTriangular3(q));

  // inclusion of the two-sided ideal span{E12} with the multiplication action
  BiAlgebra m1(q, 1, {"E12"});
  CrossedModule inc{a, m1, LinearMap{1, 3, Matrix(q, 3, 1)}, {}, {}, {}, {}};
  inc.mu.matrix.set(1, 0, Scalar::one(q));
  for (int i = 0; i < 3; ++i) {
    Matrix l(q, 1, 1), r(q, 1, 1), bl(q, 1, 1), br(q, 1, 1);
    std::vector<Scalar> e12 = a.basisVec(1);
    l.set(0, 0, a.dot(a.basisVec(i), e12)[1]);
    r.set(0, 0, a.dot(e12, a.basisVec(i))[1]);
    bl.set(0, 0, a.bracket(a.basisVec(i), e12)[1]);
    br.set(0, 0, a.bracket(e12, a.basisVec(i))[1]);
    inc.dotL.push_back(l);
    inc.dotR.push_back(r);
    inc.brL.push_back(bl);
    inc.brR.push_back(br);
  }
  CHECK(checkCrossedModule(Variety::NPlr, inc));

  // identity map with the regular action
  Representation reg = Representation::regular(a);
  CrossedModule idcm{a, a, LinearMap{3, 3, Matrix::identity(q, 3)},
                     reg.dotL, reg.dotR, reg.brL, reg.brR};
  CHECK(checkCrossedModule(Variety::NPlr, idcm));

  // mu = 0 with abelian M: true precisely when the action is a representation
  BiAlgebra mAb(q, 2);
  Representation zr = Representation::zero(a, 2);
  CrossedModule zcm{a, mAb, LinearMap{2, 3, Matrix(q, 3, 2)}, zr.dotL, zr.dotR, zr.brL, zr.brR};
  CHECK(checkCrossedModule(Variety::NPlr, zcm));
  CrossedModule badcm = zcm;
  // E12 acting as the identity breaks p1.(p2.m) = (p1 p2).m at (E11, E12)
  badcm.dotL[1].add(0, 0, Scalar::one(q));
  CHECK(!checkCrossedModule(Variety::NPlr, badcm));
}

TEST_CASE("extension enumeration on micro instances") {
  Field f2 = Field::prime(2);
  // dim-1 P and M, everything zero: 4 factor-set pairs, no identifications
  BiAlgebra p1(f2, 1);
  Representation r1 = Representation::zero(p1, 1);
  for (Variety v : {Variety::NPlr, Variety::NPl, Variety::NPr, Variety::AWBl, Variety::AWBr,
                    Variety::AWBlr}) {
    ExtensionCount c = enumerateExtensions(v, r1);
    CHECK(c.validFactorSets == 4);
    CHECK(c.coboundaryOrbitSize == 1);
    CHECK(c.classes == 4);
    CHECK(c.classes >= 1); // the split extension is always there
  }
  // idempotent line: e.e = e with the regular action
  BiAlgebra e1(f2, 1);
  e1.setDot(0, 0, 0, Scalar::one(f2));
  ExtensionCount ce = enumerateExtensions(Variety::NPlr, Representation::regular(e1));
  CHECK(ce.classes >= 1);

  BiAlgebra big(f2, 4);
  CHECK_THROWS_AS(enumerateExtensions(Variety::NPlr, Representation::zero(big, 1)), Error);
  BiAlgebra pq(Field::rationals(), 1);
  CHECK_THROWS_AS(enumerateExtensions(Variety::NPlr, Representation::zero(pq, 1)), Error);
}

TEST_CASE("sampler stays in variety") {
  for (Variety v : {Variety::NPl, Variety::NPr, Variety::NPlr, Variety::AWBl, Variety::AWBr,
                    Variety::AWBlr}) {
    Sampler s(99 + (int)v);
    for (int it = 0; it < 8; ++it) {
      for (const Field& f : {Field::rationals(), Field::prime(2)}) {
        BiAlgebra p = s.randomAlgebra(v, f, 3);
        CHECK(hasTag(p, varietyTag(v)));
        CHECK(p.dim() <= 3);
        auto inst = s.randomInstance(v, f, 3, 2);
        CHECK(hasTag(inst.p, varietyTag(v)));
        CHECK(checkAction(v, inst.rep));
        CHECK(inst.rep.moduleDim <= 2);
        CHECK(inst.p.dim() <= 3);
      }
    }
  }
}
