#include "npb/sampler.hpp"

namespace npb {

long Sampler::nextLong(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng_);
}

Scalar Sampler::nextScalar(const Field& f, int spread) {
  return Scalar::fromLong(f, nextLong(-spread, spread));
}

BiAlgebra Sampler::shrinkToDim(Variety v, BiAlgebra p, int maxDim) {
  for (int tries = 0; tries < 12 && p.dim() > maxDim; ++tries) {
    SVec gen;
    for (int i = 0; i < p.dim(); ++i) {
      Scalar c = Scalar::fromLong(p.field(), nextLong(0, 2));
      if (!c.isZero()) gen.emplace_back(i, c);
    }
    if (gen.empty()) continue;
    Subspace ideal = idealClosure(p, {gen});
    int q = p.dim() - ideal.dim();
    if (ideal.dim() == 0 || q < 1 || q > maxDim) continue;
    p = quotient(p, ideal).algebra;
  }
  if (p.dim() > maxDim) return BiAlgebra(p.field(), 1 + (int)(nextLong(0, maxDim - 1)));
  return p;
}

BiAlgebra Sampler::randomBasisChange(const BiAlgebra& p) {
  const Field& f = p.field();
  int d = p.dim();
  if (d == 0) return p;
  for (int tries = 0; tries < 10; ++tries) {
    Matrix t(f, d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        long v = nextLong(-1, 1);
        if (i == j && v == 0) v = 1;
        if (v) t.add(i, j, Scalar::fromLong(f, v));
      }
    if (rank(t) != d) continue;
    BiAlgebra out(f, d, p.basisNames());
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        std::vector<Scalar> fi = t.applyDense(p.basisVec(i));
        std::vector<Scalar> fj = t.applyDense(p.basisVec(j));
        auto dd = solve(t, svec::fromDense(p.dot(fi, fj)));
        auto bb = solve(t, svec::fromDense(p.bracket(fi, fj)));
        if (!dd || !bb) {
          ok = false;
          break;
        }
        for (auto& [k, val] : *dd) out.setDot(i, j, k, val);
        for (auto& [k, val] : *bb) out.setBracket(i, j, k, val);
      }
    if (ok) return out;
  }
  return p;
}

BiAlgebra Sampler::randomAlgebra(Variety v, const Field& f, int maxDim) {
  int strategy = (int)nextLong(0, 5);
  BiAlgebra out(f, 1);
  switch (strategy) {
    case 0: // abelian
      out = BiAlgebra(f, 1 + (int)nextLong(0, maxDim - 1));
      break;
    case 1:
    case 2: { // quotient of a truncated free algebra
      int gens = (int)nextLong(1, 2);
      int deg = (int)nextLong(2, 3);
      std::vector<std::string> names = gens == 1 ? std::vector<std::string>{"x"}
                                                 : std::vector<std::string>{"x", "y"};
      out = truncatedFreeAlgebra(v, f, names, deg).algebra;
      out = shrinkToDim(v, out, maxDim);
      break;
    }
    case 3: { // zero-dot Leibniz piece of a truncated free algebra
      TruncatedFree tf = truncatedFreeAlgebra(Variety::NPlr, f, {"x", "y"}, 2);
      out = underlying(tf.algebra, Underlying::Leibniz);
      out = shrinkToDim(v, out, maxDim);
      break;
    }
    case 4: { // commutator bracket on a small associative algebra
      TruncatedFree tf = truncatedFreeAlgebra(v, f, {"x", "y"}, 2);
      BiAlgebra assoc = underlying(tf.algebra, Underlying::Assoc);
      out = commutatorBracket(shrinkToDim(v, assoc, maxDim));
      break;
    }
    default: { // upper-triangular commutator algebra, possibly quotiented
      BiAlgebra ut(f, 3, {"E11", "E12", "E22"});
      Scalar one = Scalar::one(f);
      ut.setDot(0, 0, 0, one);
      ut.setDot(0, 1, 1, one);
      ut.setDot(1, 2, 1, one);
      ut.setDot(2, 2, 2, one);
      out = commutatorBracket(ut);
      out = shrinkToDim(v, out, maxDim);
      break;
    }
  }
  out = randomBasisChange(out);
  if (!hasTag(out, varietyTag(v)))
    fail(ErrorKind::VarietyMismatch, "sampler produced an out-of-variety algebra");
  return out;
}

Sampler::Instance Sampler::randomInstance(Variety v, const Field& f, int maxP, int maxM) {
  for (int tries = 0; tries < 24; ++tries) {
    int strategy = (int)nextLong(0, 3);
    if (strategy == 0) {
      BiAlgebra p = randomAlgebra(v, f, maxP);
      Representation r = Representation::zero(p, 1 + (int)nextLong(0, maxM - 1));
      return {p, r};
    }
    if (strategy == 1) {
      BiAlgebra p = randomAlgebra(v, f, std::min(maxP, maxM));
      if (p.dim() > maxM) continue;
      Representation r = Representation::regular(p);
      if (!checkAction(v, r)) fail(ErrorKind::ActionAxiomsFail, "regular representation invalid");
      return {p, r};
    }
    // abelian ideal of a larger in-variety algebra
    BiAlgebra q = randomAlgebra(v, f, maxP + maxM);
    SVec gen;
    for (int i = 0; i < q.dim(); ++i) {
      Scalar c = Scalar::fromLong(f, nextLong(0, 2));
      if (!c.isZero()) gen.emplace_back(i, c);
    }
    if (gen.empty()) continue;
    Subspace ideal = idealClosure(q, {gen});
    int dj = ideal.dim(), dp = q.dim() - dj;
    if (dj < 1 || dj > maxM || dp < 1 || dp > maxP) continue;
    // the ideal must be abelian for the induced action to be a representation
    bool abelian = true;
    for (auto& a : ideal.basis())
      for (auto& b : ideal.basis()) {
        auto av = svec::toDense(a, q.dim(), f), bv = svec::toDense(b, q.dim(), f);
        auto d1 = q.dot(av, bv), d2 = q.bracket(av, bv);
        for (auto& s : d1) abelian = abelian && s.isZero();
        for (auto& s : d2) abelian = abelian && s.isZero();
      }
    if (!abelian) continue;
    QuotientResult qr = quotient(q, ideal);
    const Echelon& jcoords = ideal.echelon();
    Representation r{qr.algebra, dj, {}, {}, {}, {}};
    bool ok = true;
    for (int a = 0; a < (int)qr.complementBasis.size() && ok; ++a) {
      Matrix l(f, dj, dj), rr(f, dj, dj), bl(f, dj, dj), br(f, dj, dj);
      std::vector<Scalar> lift = q.basisVec(qr.complementBasis[a]);
      for (int t = 0; t < dj && ok; ++t) {
        std::vector<Scalar> jt = svec::toDense(ideal.basis()[t], q.dim(), f);
        auto put = [&](Matrix& target, const std::vector<Scalar>& val) {
          SVec sv = svec::fromDense(val);
          if (!jcoords.contains(sv)) {
            ok = false;
            return;
          }
          auto coords = jcoords.coordinates(sv);
          for (int u = 0; u < dj; ++u) target.set(u, t, coords[u]);
        };
        put(l, q.dot(lift, jt));
        put(rr, q.dot(jt, lift));
        put(bl, q.bracket(lift, jt));
        put(br, q.bracket(jt, lift));
      }
      r.dotL.push_back(l);
      r.dotR.push_back(rr);
      r.brL.push_back(bl);
      r.brR.push_back(br);
    }
    if (!ok) continue;
    if (!checkAction(v, r)) fail(ErrorKind::ActionAxiomsFail, "induced representation invalid");
    return {qr.algebra, r};
  }
  // deterministic fallback
  BiAlgebra p = randomAlgebra(v, f, maxP);
  return {p, Representation::zero(p, 1)};
}

} // namespace npb
