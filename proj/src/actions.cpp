#include "npb/actions.hpp"

#include <algorithm>

namespace npb {

namespace {
using Vec = std::vector<Scalar>;

Vec applyMat(const Matrix& m, const Vec& v) { return m.applyDense(v); }

bool vecZero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}
Vec vSub(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
Vec vAdd(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
} // namespace

Representation Representation::zero(const BiAlgebra& p, int moduleDim) {
  Representation r{p, moduleDim, {}, {}, {}, {}};
  for (int i = 0; i < p.dim(); ++i) {
    r.dotL.emplace_back(p.field(), moduleDim, moduleDim);
    r.dotR.emplace_back(p.field(), moduleDim, moduleDim);
    r.brL.emplace_back(p.field(), moduleDim, moduleDim);
    r.brR.emplace_back(p.field(), moduleDim, moduleDim);
  }
  return r;
}

Representation Representation::regular(const BiAlgebra& p) {
  Representation r{p, p.dim(), {}, {}, {}, {}};
  int d = p.dim();
  for (int i = 0; i < d; ++i) {
    Matrix l(p.field(), d, d), rr(p.field(), d, d), bl(p.field(), d, d), br(p.field(), d, d);
    for (int t = 0; t < d; ++t)
      for (int k = 0; k < d; ++k) {
        l.add(k, t, p.dotC(i, t, k));      // e_i . e_t
        rr.add(k, t, p.dotC(t, i, k));     // e_t . e_i
        bl.add(k, t, p.bracketC(i, t, k)); // [e_i, e_t]
        br.add(k, t, p.bracketC(t, i, k)); // [e_t, e_i]
      }
    r.dotL.push_back(l);
    r.dotR.push_back(rr);
    r.brL.push_back(bl);
    r.brR.push_back(br);
  }
  return r;
}

bool checkActionOn(Variety v, const BiAlgebra& p, const BiAlgebra& M, const std::vector<Matrix>& dotL,
                   const std::vector<Matrix>& dotR, const std::vector<Matrix>& brL,
                   const std::vector<Matrix>& brR, std::vector<ActionDefect>* defects) {
  const int dp = p.dim(), dm = M.dim();
  if ((int)dotL.size() != dp || (int)dotR.size() != dp || (int)brL.size() != dp ||
      (int)brR.size() != dp)
    fail(ErrorKind::ShapeMismatch, "one action matrix per P basis element");
  for (auto* fam : {&dotL, &dotR, &brL, &brR})
    for (auto& m : *fam)
      if (m.rows() != dm || m.cols() != dm) fail(ErrorKind::ShapeMismatch, "action matrix shape");

  bool ok = true;
  auto note = [&](const std::string& fam, int i, int j) {
    ok = false;
    if (defects) defects->push_back({fam, i, j});
  };
  auto mBasis = [&](int t) { return M.basisVec(t); };
  auto pDotK = [&](int i, int j, const std::vector<Matrix>& fam, const Vec& m) {
    Vec acc(dm, Scalar::zero(p.field()));
    for (int k = 0; k < dp; ++k) {
      const Scalar& c = p.dotC(i, j, k);
      if (c.isZero()) continue;
      Vec w = applyMat(fam[k], m);
      for (int t = 0; t < dm; ++t) acc[t] += w[t] * c;
    }
    return acc;
  };
  auto pBrK = [&](int i, int j, const std::vector<Matrix>& fam, const Vec& m) {
    Vec acc(dm, Scalar::zero(p.field()));
    for (int k = 0; k < dp; ++k) {
      const Scalar& c = p.bracketC(i, j, k);
      if (c.isZero()) continue;
      Vec w = applyMat(fam[k], m);
      for (int t = 0; t < dm; ++t) acc[t] += w[t] * c;
    }
    return acc;
  };

  const bool leib = varietyHasLeibniz(v);
  const bool left = varietyHasLeft(v);
  const bool right = varietyHasRight(v);

  // Associative action axioms. The two-module-argument ones are real
  // conditions when M carries its own products (crossed modules) and reduce
  // to 0 = 0 for abelian M; all are evaluated literally.
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dp; ++j)
      for (int t = 0; t < dm; ++t) {
        Vec m = mBasis(t);
        // p1.(p2.m) = (p1 p2).m
        if (!vecZero(vSub(applyMat(dotL[i], applyMat(dotL[j], m)), pDotK(i, j, dotL, m))))
          note("assoc p1(p2 m)", i, j);
        // p1.(m.p2) = (p1.m).p2
        if (!vecZero(vSub(applyMat(dotL[i], applyMat(dotR[j], m)),
                          applyMat(dotR[j], applyMat(dotL[i], m)))))
          note("assoc p1(m p2)", i, j);
        // m.(p1 p2) = (m.p1).p2
        if (!vecZero(vSub(pDotK(i, j, dotR, m), applyMat(dotR[j], applyMat(dotR[i], m)))))
          note("assoc m(p1 p2)", i, j);
      }
  for (int i = 0; i < dp; ++i)
    for (int s = 0; s < dm; ++s)
      for (int t = 0; t < dm; ++t) {
        Vec ms = mBasis(s), mt = mBasis(t);
        // p.(m1.m2) = (p.m1).m2
        if (!vecZero(vSub(applyMat(dotL[i], M.dot(ms, mt)), M.dot(applyMat(dotL[i], ms), mt))))
          note("assoc p(m1 m2)", i, s);
        // m1.(p.m2) = (m1.p).m2
        if (!vecZero(vSub(M.dot(ms, applyMat(dotL[i], mt)), M.dot(applyMat(dotR[i], ms), mt))))
          note("assoc m1(p m2)", i, s);
        // (m1.m2).p = m1.(m2.p)
        if (!vecZero(vSub(applyMat(dotR[i], M.dot(ms, mt)), M.dot(ms, applyMat(dotR[i], mt)))))
          note("assoc (m1 m2)p", i, s);
      }

  if (leib) {
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j < dp; ++j)
        for (int t = 0; t < dm; ++t) {
          Vec m = mBasis(t);
          // [p1,[p2,m]] = [[p1,p2],m] - [[p1,m],p2]
          Vec rhs = vSub(pBrK(i, j, brL, m), applyMat(brR[j], applyMat(brL[i], m)));
          if (!vecZero(vSub(applyMat(brL[i], applyMat(brL[j], m)), rhs)))
            note("leibniz [p1,[p2,m]]", i, j);
          // [p1,[m,p2]] = [[p1,m],p2] - [[p1,p2],m]
          rhs = vSub(applyMat(brR[j], applyMat(brL[i], m)), pBrK(i, j, brL, m));
          if (!vecZero(vSub(applyMat(brL[i], applyMat(brR[j], m)), rhs)))
            note("leibniz [p1,[m,p2]]", i, j);
          // [m,[p1,p2]] = [[m,p1],p2] - [[m,p2],p1]
          rhs = vSub(applyMat(brR[j], applyMat(brR[i], m)), applyMat(brR[i], applyMat(brR[j], m)));
          if (!vecZero(vSub(pBrK(i, j, brR, m), rhs))) note("leibniz [m,[p1,p2]]", i, j);
        }
    for (int i = 0; i < dp; ++i)
      for (int s = 0; s < dm; ++s)
        for (int t = 0; t < dm; ++t) {
          Vec ms = mBasis(s), mt = mBasis(t);
          // [p,[m1,m2]] = [[p,m1],m2] - [[p,m2],m1]
          Vec rhs = vSub(M.bracket(applyMat(brL[i], ms), mt), M.bracket(applyMat(brL[i], mt), ms));
          if (!vecZero(vSub(applyMat(brL[i], M.bracket(ms, mt)), rhs)))
            note("leibniz [p,[m1,m2]]", i, s);
          // [m1,[p,m2]] = [[m1,p],m2] - [[m1,m2],p]
          rhs = vSub(M.bracket(applyMat(brR[i], ms), mt), applyMat(brR[i], M.bracket(ms, mt)));
          if (!vecZero(vSub(M.bracket(ms, applyMat(brL[i], mt)), rhs)))
            note("leibniz [m1,[p,m2]]", i, s);
          // [m1,[m2,p]] = [[m1,m2],p] - [[m1,p],m2]
          rhs = vSub(applyMat(brR[i], M.bracket(ms, mt)), M.bracket(applyMat(brR[i], ms), mt));
          if (!vecZero(vSub(M.bracket(ms, applyMat(brR[i], mt)), rhs)))
            note("leibniz [m1,[m2,p]]", i, s);
        }
  }

  if (left) {
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j < dp; ++j)
        for (int t = 0; t < dm; ++t) {
          Vec m = mBasis(t);
          // [p1 p2, m] = p1.[p2,m] + [p1,m].p2
          Vec rhs = vAdd(applyMat(dotL[i], applyMat(brL[j], m)),
                         applyMat(dotR[j], applyMat(brL[i], m)));
          if (!vecZero(vSub(pDotK(i, j, brL, m), rhs))) note("left [p1p2,m]", i, j);
          // [p1.m, p2] = p1.[m,p2] + [p1,p2].m
          rhs = vAdd(applyMat(dotL[i], applyMat(brR[j], m)), pBrK(i, j, dotL, m));
          if (!vecZero(vSub(applyMat(brR[j], applyMat(dotL[i], m)), rhs))) note("left [p1.m,p2]", i, j);
          // [m.p1, p2] = m.[p1,p2] + [m,p2].p1
          rhs = vAdd(pBrK(i, j, dotR, m), applyMat(dotR[i], applyMat(brR[j], m)));
          if (!vecZero(vSub(applyMat(brR[j], applyMat(dotR[i], m)), rhs))) note("left [m.p1,p2]", i, j);
        }
    for (int i = 0; i < dp; ++i)
      for (int s = 0; s < dm; ++s)
        for (int t = 0; t < dm; ++t) {
          Vec ms = mBasis(s), mt = mBasis(t);
          // [m1.m2, p] = m1.[m2,p] + [m1,p].m2
          Vec rhs = vAdd(M.dot(ms, applyMat(brR[i], mt)), M.dot(applyMat(brR[i], ms), mt));
          if (!vecZero(vSub(applyMat(brR[i], M.dot(ms, mt)), rhs))) note("left [m1m2,p]", i, s);
          // [m1.p, m2] = m1.[p,m2] + [m1,m2].p
          rhs = vAdd(M.dot(ms, applyMat(brL[i], mt)), applyMat(dotR[i], M.bracket(ms, mt)));
          if (!vecZero(vSub(M.bracket(applyMat(dotR[i], ms), mt), rhs))) note("left [m1.p,m2]", i, s);
          // [p.m1, m2] = p.[m1,m2] + [p,m2].m1
          rhs = vAdd(applyMat(dotL[i], M.bracket(ms, mt)), M.dot(applyMat(brL[i], mt), ms));
          if (!vecZero(vSub(M.bracket(applyMat(dotL[i], ms), mt), rhs))) note("left [p.m1,m2]", i, s);
        }
  }

  if (right) {
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j < dp; ++j)
        for (int t = 0; t < dm; ++t) {
          Vec m = mBasis(t);
          // [m, p1 p2] = p1.[m,p2] + [m,p1].p2
          Vec rhs = vAdd(applyMat(dotL[i], applyMat(brR[j], m)),
                         applyMat(dotR[j], applyMat(brR[i], m)));
          if (!vecZero(vSub(pDotK(i, j, brR, m), rhs))) note("right [m,p1p2]", i, j);
          // [p1, p2.m] = p2.[p1,m] + [p1,p2].m
          rhs = vAdd(applyMat(dotL[j], applyMat(brL[i], m)), pBrK(i, j, dotL, m));
          if (!vecZero(vSub(applyMat(brL[i], applyMat(dotL[j], m)), rhs)))
            note("right [p1,p2.m]", i, j);
          // [p1, m.p2] = m.[p1,p2] + [p1,m].p2
          rhs = vAdd(pBrK(i, j, dotR, m), applyMat(dotR[j], applyMat(brL[i], m)));
          if (!vecZero(vSub(applyMat(brL[i], applyMat(dotR[j], m)), rhs)))
            note("right [p1,m.p2]", i, j);
        }
    for (int i = 0; i < dp; ++i)
      for (int s = 0; s < dm; ++s)
        for (int t = 0; t < dm; ++t) {
          Vec ms = mBasis(s), mt = mBasis(t);
          // [p, m1.m2] = m1.[p,m2] + [p,m1].m2
          Vec rhs = vAdd(M.dot(ms, applyMat(brL[i], mt)), M.dot(applyMat(brL[i], ms), mt));
          if (!vecZero(vSub(applyMat(brL[i], M.dot(ms, mt)), rhs))) note("right [p,m1m2]", i, s);
          // [m1, m2.p] = m2.[m1,p] + [m1,m2].p
          rhs = vAdd(M.dot(mt, applyMat(brR[i], ms)), applyMat(dotR[i], M.bracket(ms, mt)));
          if (!vecZero(vSub(M.bracket(ms, applyMat(dotR[i], mt)), rhs))) note("right [m1,m2.p]", i, s);
          // [m1, p.m2] = p.[m1,m2] + [m1,p].m2
          rhs = vAdd(applyMat(dotL[i], M.bracket(ms, mt)), M.dot(applyMat(brR[i], ms), mt));
          if (!vecZero(vSub(M.bracket(ms, applyMat(dotL[i], mt)), rhs))) note("right [m1,p.m2]", i, s);
        }
  }

  return ok;
}

bool checkAction(Variety v, const Representation& r, std::vector<ActionDefect>* defects) {
  BiAlgebra abelian(r.algebra.field(), r.moduleDim); // zero products
  return checkActionOn(v, r.algebra, abelian, r.dotL, r.dotR, r.brL, r.brR, defects);
}

BiAlgebra semidirectProduct(Variety v, const Representation& r) {
  if (!checkAction(v, r)) fail(ErrorKind::ActionAxiomsFail, "action axioms fail");
  const BiAlgebra& p = r.algebra;
  int dm = r.moduleDim, dp = p.dim();
  std::vector<std::string> names;
  for (int t = 0; t < dm; ++t) names.push_back("m" + std::to_string(t + 1));
  for (auto& n : p.basisNames()) names.push_back(n);
  BiAlgebra q(p.field(), dm + dp, names);
  // module coordinates first
  for (int i = 0; i < dp; ++i) {
    for (int t = 0; t < dm; ++t)
      for (int u = 0; u < dm; ++u) {
        q.setDot(dm + i, t, u, r.dotL[i].get(u, t));
        q.setDot(t, dm + i, u, r.dotR[i].get(u, t));
        q.setBracket(dm + i, t, u, r.brL[i].get(u, t));
        q.setBracket(t, dm + i, u, r.brR[i].get(u, t));
      }
    for (int j = 0; j < dp; ++j)
      for (int k = 0; k < dp; ++k) {
        q.setDot(dm + i, dm + j, dm + k, p.dotC(i, j, k));
        q.setBracket(dm + i, dm + j, dm + k, p.bracketC(i, j, k));
      }
  }
  return q;
}

ExtensionWitness semidirectWitness(Variety v, const Representation& r) {
  BiAlgebra q = semidirectProduct(v, r);
  int dm = r.moduleDim, dp = r.algebra.dim();
  Matrix inj(q.field(), dm + dp, dm);
  for (int t = 0; t < dm; ++t) inj.set(t, t, Scalar::one(q.field()));
  Matrix proj(q.field(), dp, dm + dp);
  for (int i = 0; i < dp; ++i) proj.set(i, dm + i, Scalar::one(q.field()));
  return {q, LinearMap{dm, dm + dp, inj}, LinearMap{dm + dp, dp, proj}};
}

Representation inducedRepresentation(const ExtensionWitness& w, const BiAlgebra& p) {
  int dm = w.inj.sourceDim;
  int dp = p.dim();
  const BiAlgebra& q = w.total;
  Representation r{p, dm, {}, {}, {}, {}};
  for (int i = 0; i < dp; ++i) {
    Matrix l(q.field(), dm, dm), rr(q.field(), dm, dm), bl(q.field(), dm, dm), br(q.field(), dm, dm);
    std::vector<Scalar> lift = q.zeroVec();
    lift[dm + i] = Scalar::one(q.field());
    for (int t = 0; t < dm; ++t) {
      std::vector<Scalar> m = q.zeroVec();
      m[t] = Scalar::one(q.field());
      auto put = [&](Matrix& target, const std::vector<Scalar>& val) {
        for (int u = 0; u < dm; ++u) target.set(u, t, val[u]);
      };
      put(l, q.dot(lift, m));
      put(rr, q.dot(m, lift));
      put(bl, q.bracket(lift, m));
      put(br, q.bracket(m, lift));
    }
    r.dotL.push_back(l);
    r.dotR.push_back(rr);
    r.brL.push_back(bl);
    r.brR.push_back(br);
  }
  return r;
}

Subspace derivationSpace(const Representation& r) {
  const BiAlgebra& p = r.algebra;
  const Field& f = p.field();
  int dp = p.dim(), dm = r.moduleDim;
  int vars = dp * dm; // D[j*dm + t]: coefficient of m_t in d(e_j)
  std::vector<SVec> rows;
  auto pushRow = [&](SVec row) {
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    SVec merged;
    for (auto& [idx, val] : row) {
      if (!merged.empty() && merged.back().first == idx)
        merged.back().second += val;
      else
        merged.emplace_back(idx, val);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](auto& e) { return e.second.isZero(); }),
                 merged.end());
    if (!merged.empty()) rows.push_back(std::move(merged));
  };
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dp; ++j)
      for (int u = 0; u < dm; ++u) {
        // d(e_i e_j) = d(e_i).e_j + e_i.d(e_j)
        SVec row;
        for (int k = 0; k < dp; ++k)
          if (!p.dotC(i, j, k).isZero()) row.emplace_back(k * dm + u, p.dotC(i, j, k));
        for (int t = 0; t < dm; ++t) {
          row.emplace_back(i * dm + t, -r.dotR[j].get(u, t));
          row.emplace_back(j * dm + t, -r.dotL[i].get(u, t));
        }
        pushRow(std::move(row));
        // d[e_i,e_j] = [d(e_i),e_j] + [e_i,d(e_j)]
        SVec row2;
        for (int k = 0; k < dp; ++k)
          if (!p.bracketC(i, j, k).isZero()) row2.emplace_back(k * dm + u, p.bracketC(i, j, k));
        for (int t = 0; t < dm; ++t) {
          row2.emplace_back(i * dm + t, -r.brR[j].get(u, t));
          row2.emplace_back(j * dm + t, -r.brL[i].get(u, t));
        }
        pushRow(std::move(row2));
      }
  Matrix m = Matrix::fromRows(f, vars, rows);
  return Subspace::fromVectors(f, vars, kernelBasis(m));
}

SVec adMap(const BiAlgebra& p, const std::vector<Scalar>& pElem) {
  // d(e_j) = -[e_j, pElem]
  SVec out;
  int d = p.dim();
  for (int j = 0; j < d; ++j) {
    std::vector<Scalar> v = p.bracket(p.basisVec(j), pElem);
    for (int t = 0; t < d; ++t)
      if (!v[t].isZero()) out.emplace_back(j * d + t, -v[t]);
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

bool checkCrossedModule(Variety v, const CrossedModule& cm) {
  const BiAlgebra& p = cm.p;
  const BiAlgebra& M = cm.m;
  int dp = p.dim(), dm = M.dim();
  if (cm.mu.matrix.rows() != dp || cm.mu.matrix.cols() != dm)
    fail(ErrorKind::ShapeMismatch, "mu must map M into P");
  // the declared action must satisfy the variety's action axioms on the full M
  if (!checkActionOn(v, p, M, cm.dotL, cm.dotR, cm.brL, cm.brR)) return false;
  // mu is a homomorphism
  for (int s = 0; s < dm; ++s)
    for (int t = 0; t < dm; ++t) {
      Vec ms = M.basisVec(s), mt = M.basisVec(t);
      Vec lhs = cm.mu.matrix.applyDense(M.dot(ms, mt));
      Vec rhs = p.dot(cm.mu.matrix.applyDense(ms), cm.mu.matrix.applyDense(mt));
      if (!vecZero(vSub(lhs, rhs))) return false;
      lhs = cm.mu.matrix.applyDense(M.bracket(ms, mt));
      rhs = p.bracket(cm.mu.matrix.applyDense(ms), cm.mu.matrix.applyDense(mt));
      if (!vecZero(vSub(lhs, rhs))) return false;
    }
  // equivariance
  for (int i = 0; i < dp; ++i)
    for (int t = 0; t < dm; ++t) {
      Vec mt = M.basisVec(t);
      Vec muM = cm.mu.matrix.applyDense(mt);
      Vec ei = p.basisVec(i);
      if (!vecZero(vSub(cm.mu.matrix.applyDense(applyMat(cm.dotL[i], mt)), p.dot(ei, muM))))
        return false;
      if (!vecZero(vSub(cm.mu.matrix.applyDense(applyMat(cm.dotR[i], mt)), p.dot(muM, ei))))
        return false;
      if (!vecZero(vSub(cm.mu.matrix.applyDense(applyMat(cm.brL[i], mt)), p.bracket(ei, muM))))
        return false;
      if (!vecZero(vSub(cm.mu.matrix.applyDense(applyMat(cm.brR[i], mt)), p.bracket(muM, ei))))
        return false;
    }
  // Peiffer-type identities: mu(m).m' = m.m' = m.mu(m'), same for brackets
  auto actThrough = [&](const std::vector<Matrix>& fam, const Vec& pe, const Vec& m) {
    Vec acc(dm, Scalar::zero(p.field()));
    for (int i = 0; i < dp; ++i) {
      if (pe[i].isZero()) continue;
      Vec w = applyMat(fam[i], m);
      for (int t = 0; t < dm; ++t) acc[t] += w[t] * pe[i];
    }
    return acc;
  };
  for (int s = 0; s < dm; ++s)
    for (int t = 0; t < dm; ++t) {
      Vec ms = M.basisVec(s), mt = M.basisVec(t);
      Vec muS = cm.mu.matrix.applyDense(ms), muT = cm.mu.matrix.applyDense(mt);
      Vec prod = M.dot(ms, mt);
      if (!vecZero(vSub(actThrough(cm.dotL, muS, mt), prod))) return false;
      if (!vecZero(vSub(actThrough(cm.dotR, muT, ms), prod))) return false;
      Vec br = M.bracket(ms, mt);
      if (!vecZero(vSub(actThrough(cm.brL, muS, mt), br))) return false;
      if (!vecZero(vSub(actThrough(cm.brR, muT, ms), br))) return false;
    }
  return true;
}

ExtensionCount enumerateExtensions(Variety v, const Representation& r, int dimGuard,
                                   long long candidateGuard) {
  const BiAlgebra& p = r.algebra;
  const Field& f = p.field();
  if (f.isRational()) fail(ErrorKind::GuardExceeded, "extension enumeration needs a finite field");
  int dp = p.dim(), dm = r.moduleDim;
  if (dp + dm > dimGuard)
    fail(ErrorKind::GuardExceeded, "dim P + dim M exceeds guard " + std::to_string(dimGuard));
  long long q = (long long)f.p();
  int slots = 2 * dp * dp * dm; // lambda and mu: P (x) P -> M
  long long total = 1;
  for (int i = 0; i < slots; ++i) {
    total *= q;
    if (total > candidateGuard) fail(ErrorKind::GuardExceeded, "candidate space exceeds guard");
  }
  if (!checkAction(v, r)) fail(ErrorKind::ActionAxiomsFail, "action axioms fail");

  // equivalences shift factor sets by the coboundary of a linear map s: P -> M
  int svars = dp * dm;
  Matrix cob(f, slots, svars);
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dp; ++j)
      for (int u = 0; u < dm; ++u) {
        int rowL = (i * dp + j) * dm + u;
        int rowM = slots / 2 + rowL;
        for (int t = 0; t < dm; ++t) {
          cob.add(rowL, j * dm + t, r.dotL[i].get(u, t));
          cob.add(rowL, i * dm + t, r.dotR[j].get(u, t));
          cob.add(rowM, j * dm + t, r.brL[i].get(u, t));
          cob.add(rowM, i * dm + t, r.brR[j].get(u, t));
        }
        for (int k = 0; k < dp; ++k) {
          cob.add(rowL, k * dm + u, -p.dotC(i, j, k));
          cob.add(rowM, k * dm + u, -p.bracketC(i, j, k));
        }
      }
  int cobRank = rank(cob);
  long long orbit = 1;
  for (int i = 0; i < cobRank; ++i) orbit *= q;

  // enumerate factor sets on top of the split extension
  std::vector<long> digits(slots, 0);
  long long valid = 0;
  BiAlgebra base = semidirectProduct(v, r);
  while (true) {
    BiAlgebra qAlg = base;
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j < dp; ++j)
        for (int u = 0; u < dm; ++u) {
          long lv = digits[(i * dp + j) * dm + u];
          long mv = digits[slots / 2 + (i * dp + j) * dm + u];
          if (lv) qAlg.setDot(dm + i, dm + j, u, Scalar::fromLong(f, lv));
          if (mv) qAlg.setBracket(dm + i, dm + j, u, Scalar::fromLong(f, mv));
        }
    bool ok = checkIdentity(qAlg, IdentityTag::Assoc);
    if (ok && varietyHasLeibniz(v)) ok = checkIdentity(qAlg, IdentityTag::Leibniz);
    if (ok && varietyHasLeft(v)) ok = checkIdentity(qAlg, IdentityTag::LeftCompat);
    if (ok && varietyHasRight(v)) ok = checkIdentity(qAlg, IdentityTag::RightCompat);
    if (ok) ++valid;
    int c = 0;
    while (c < slots && ++digits[c] == q) digits[c++] = 0;
    if (c == slots) break;
  }
  if (valid % orbit != 0)
    fail(ErrorKind::NotExact, "valid factor sets are not a union of coboundary orbits");
  return {valid, orbit, valid / orbit};
}

} // namespace npb
