#include "npb/algebra.hpp"

#include <algorithm>

namespace npb {

std::string tagName(VarietyTag t) {
  switch (t) {
    case VarietyTag::Assoc: return "assoc";
    case VarietyTag::Leibniz: return "leibniz";
    case VarietyTag::AWBl: return "awbl";
    case VarietyTag::AWBr: return "awbr";
    case VarietyTag::AWBlr: return "awblr";
    case VarietyTag::NPl: return "npl";
    case VarietyTag::NPr: return "npr";
    case VarietyTag::NPlr: return "nplr";
    case VarietyTag::Poisson: return "poisson";
  }
  return "?";
}

VarietyTag tagFromName(const std::string& s) {
  for (VarietyTag t : {VarietyTag::Assoc, VarietyTag::Leibniz, VarietyTag::AWBl, VarietyTag::AWBr,
                       VarietyTag::AWBlr, VarietyTag::NPl, VarietyTag::NPr, VarietyTag::NPlr,
                       VarietyTag::Poisson})
    if (tagName(t) == s) return t;
  fail(ErrorKind::ParseError, "unknown variety tag: " + s);
}

std::string varietyName(Variety v) {
  switch (v) {
    case Variety::NPl: return "npl";
    case Variety::NPr: return "npr";
    case Variety::NPlr: return "nplr";
    case Variety::AWBl: return "awbl";
    case Variety::AWBr: return "awbr";
    case Variety::AWBlr: return "awblr";
  }
  return "?";
}

Variety varietyFromName(const std::string& s) {
  for (Variety v : {Variety::NPl, Variety::NPr, Variety::NPlr, Variety::AWBl, Variety::AWBr, Variety::AWBlr})
    if (varietyName(v) == s) return v;
  fail(ErrorKind::ParseError, "unknown variety: " + s);
}

VarietyTag varietyTag(Variety v) {
  switch (v) {
    case Variety::NPl: return VarietyTag::NPl;
    case Variety::NPr: return VarietyTag::NPr;
    case Variety::NPlr: return VarietyTag::NPlr;
    case Variety::AWBl: return VarietyTag::AWBl;
    case Variety::AWBr: return VarietyTag::AWBr;
    case Variety::AWBlr: return VarietyTag::AWBlr;
  }
  return VarietyTag::NPlr;
}

bool varietyHasLeibniz(Variety v) { return v == Variety::NPl || v == Variety::NPr || v == Variety::NPlr; }
bool varietyHasLeft(Variety v) {
  return v == Variety::NPl || v == Variety::NPlr || v == Variety::AWBl || v == Variety::AWBlr;
}
bool varietyHasRight(Variety v) {
  return v == Variety::NPr || v == Variety::NPlr || v == Variety::AWBr || v == Variety::AWBlr;
}

std::string identityName(IdentityTag t) {
  switch (t) {
    case IdentityTag::Assoc: return "assoc";
    case IdentityTag::Leibniz: return "leibniz";
    case IdentityTag::LeftCompat: return "left_compat";
    case IdentityTag::RightCompat: return "right_compat";
    case IdentityTag::DotComm: return "dot_comm";
    case IdentityTag::BracketAlt: return "bracket_alt";
    case IdentityTag::D1: return "d1";
    case IdentityTag::D2: return "d2";
    case IdentityTag::D3: return "d3";
    case IdentityTag::D4: return "d4";
    case IdentityTag::D5: return "d5";
    case IdentityTag::D6: return "d6";
  }
  return "?";
}

std::string identityFormula(IdentityTag t) {
  switch (t) {
    case IdentityTag::Assoc: return "(a*b)*c = a*(b*c)";
    case IdentityTag::Leibniz: return "[a,[b,c]] = [[a,b],c] - [[a,c],b]";
    case IdentityTag::LeftCompat: return "[a*b,c] = a*[b,c] + [a,c]*b";
    case IdentityTag::RightCompat: return "[a,b*c] = b*[a,c] + [a,b]*c";
    case IdentityTag::DotComm: return "a*b = b*a";
    case IdentityTag::BracketAlt: return "[a,b] + [b,a] = 0 and [a,a] = 0";
    case IdentityTag::D1: return "[a,c]*[b,d] + [a,c]*[d,b] + [b,c]*[a,d] + [c,b]*[a,d] = 0";
    case IdentityTag::D2: return "a*c*[b,d] + [a,c]*d*b = c*a*[b,d] + [a,c]*b*d";
    case IdentityTag::D3:
      return "[[a,c]*d,b] = [[a,c],b]*d - [a,c]*[b,d] - [b,c]*[a,d] + c*[[a,d],b] - [c*[a,d],b]";
    case IdentityTag::D4: return "[a,b*[c,d]] + [a,[b,d]*c] = [[a,b*c],d] - [[a,d],b*c]";
    case IdentityTag::D5: return "[a*b,c] - [a,c*b] + [b*c,a] - [b,a*c] + [c*a,b] - [c,b*a] = 0";
    case IdentityTag::D6:
      return "[[a,c]*d,b] = -[b,[a,c]*d] + [[b,a],c]*d - [[b,c],a]*d - [a,[b,c]*d] + [[a,b],c]*d "
             "+ [[a,d],c*b] - [[a,d],c]*b - [c*[a,d],b]";
  }
  return "?";
}

IdentityTag identityFromName(const std::string& s) {
  for (IdentityTag t : {IdentityTag::Assoc, IdentityTag::Leibniz, IdentityTag::LeftCompat,
                        IdentityTag::RightCompat, IdentityTag::DotComm, IdentityTag::BracketAlt,
                        IdentityTag::D1, IdentityTag::D2, IdentityTag::D3, IdentityTag::D4,
                        IdentityTag::D5, IdentityTag::D6})
    if (identityName(t) == s) return t;
  fail(ErrorKind::ParseError, "unknown identity: " + s);
}

VarietyTag derivedPremise(IdentityTag t) {
  switch (t) {
    case IdentityTag::D1: return VarietyTag::NPlr;
    case IdentityTag::D2: return VarietyTag::AWBlr;
    case IdentityTag::D3: return VarietyTag::NPr;
    case IdentityTag::D4: return VarietyTag::NPl;
    case IdentityTag::D5: return VarietyTag::AWBlr;
    case IdentityTag::D6: return VarietyTag::NPr;
    default: fail(ErrorKind::ParseError, "not a derived identity");
  }
}

BiAlgebra::BiAlgebra(const Field& f, int dim, std::vector<std::string> basisNames)
    : field_(f), dim_(dim), names_(std::move(basisNames)) {
  if (names_.empty())
    for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  if ((int)names_.size() != dim) fail(ErrorKind::ShapeMismatch, "basis name count");
  dot_.assign((size_t)dim * dim * dim, Scalar::zero(f));
  bracket_.assign((size_t)dim * dim * dim, Scalar::zero(f));
}

std::vector<Scalar> BiAlgebra::dot(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> r = zeroVec();
  for (int i = 0; i < dim_; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].isZero()) continue;
      Scalar c = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& s = dotC(i, j, k);
        if (!s.isZero()) r[k] += c * s;
      }
    }
  }
  return r;
}

std::vector<Scalar> BiAlgebra::bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  std::vector<Scalar> r = zeroVec();
  for (int i = 0; i < dim_; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].isZero()) continue;
      Scalar c = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        const Scalar& s = bracketC(i, j, k);
        if (!s.isZero()) r[k] += c * s;
      }
    }
  }
  return r;
}

std::vector<Scalar> BiAlgebra::basisVec(int i) const {
  std::vector<Scalar> v = zeroVec();
  v[i] = Scalar::one(field_);
  return v;
}

std::vector<Scalar> BiAlgebra::zeroVec() const { return std::vector<Scalar>(dim_, Scalar::zero(field_)); }

bool BiAlgebra::operator==(const BiAlgebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && dot_ == o.dot_ && bracket_ == o.bracket_;
}

namespace {

using Vec = std::vector<Scalar>;
bool vecZero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}
Vec vSub(Vec a, const Vec& b) {
  for (int i = 0; i < (int)a.size(); ++i) a[i] -= b[i];
  return a;
}
Vec vAdd(Vec a, const Vec& b) {
  for (int i = 0; i < (int)a.size(); ++i) a[i] += b[i];
  return a;
}

// Checks a multilinear identity on all basis tuples of the given arity.
template <typename F>
bool forAllTuples(const BiAlgebra& A, int arity, F&& defectIsZero) {
  int d = A.dim();
  std::vector<int> t(arity, 0);
  while (true) {
    if (!defectIsZero(t)) return false;
    int k = arity - 1;
    while (k >= 0 && ++t[k] == d) t[k--] = 0;
    if (k < 0) return true;
  }
}

} // namespace

bool checkIdentity(const BiAlgebra& A, IdentityTag id) {
  auto e = [&](int i) { return A.basisVec(i); };
  auto dot = [&](const Vec& x, const Vec& y) { return A.dot(x, y); };
  auto br = [&](const Vec& x, const Vec& y) { return A.bracket(x, y); };
  switch (id) {
    case IdentityTag::Assoc:
      return forAllTuples(A, 3, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]);
        return vecZero(vSub(dot(dot(a, b), c), dot(a, dot(b, c))));
      });
    case IdentityTag::Leibniz:
      return forAllTuples(A, 3, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]);
        Vec rhs = vSub(br(br(a, b), c), br(br(a, c), b));
        return vecZero(vSub(br(a, br(b, c)), rhs));
      });
    case IdentityTag::LeftCompat:
      return forAllTuples(A, 3, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]);
        Vec rhs = vAdd(dot(a, br(b, c)), dot(br(a, c), b));
        return vecZero(vSub(br(dot(a, b), c), rhs));
      });
    case IdentityTag::RightCompat:
      return forAllTuples(A, 3, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]);
        Vec rhs = vAdd(dot(b, br(a, c)), dot(br(a, b), c));
        return vecZero(vSub(br(a, dot(b, c)), rhs));
      });
    case IdentityTag::DotComm:
      return forAllTuples(A, 2, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]);
        return vecZero(vSub(dot(a, b), dot(b, a)));
      });
    case IdentityTag::BracketAlt: {
      bool anti = forAllTuples(A, 2, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]);
        return vecZero(vAdd(br(a, b), br(b, a)));
      });
      if (!anti) return false;
      // [x,x] = 0 for all x: on basis [e_i,e_i] = 0 plus polarized terms are
      // covered by antisymmetry, so checking basis diagonals completes it.
      for (int i = 0; i < A.dim(); ++i)
        if (!vecZero(br(e(i), e(i)))) return false;
      return true;
    }
    case IdentityTag::D1:
      return forAllTuples(A, 4, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]), d = e(t[3]);
        Vec s = dot(br(a, c), br(b, d));
        s = vAdd(s, dot(br(a, c), br(d, b)));
        s = vAdd(s, dot(br(b, c), br(a, d)));
        s = vAdd(s, dot(br(c, b), br(a, d)));
        return vecZero(s);
      });
    case IdentityTag::D2:
      return forAllTuples(A, 4, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]), d = e(t[3]);
        Vec lhs = vAdd(dot(dot(a, c), br(b, d)), dot(dot(br(a, c), d), b));
        Vec rhs = vAdd(dot(dot(c, a), br(b, d)), dot(dot(br(a, c), b), d));
        return vecZero(vSub(lhs, rhs));
      });
    case IdentityTag::D3:
      return forAllTuples(A, 4, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]), d = e(t[3]);
        Vec lhs = br(dot(br(a, c), d), b);
        Vec rhs = dot(br(br(a, c), b), d);
        rhs = vSub(rhs, dot(br(a, c), br(b, d)));
        rhs = vSub(rhs, dot(br(b, c), br(a, d)));
        rhs = vAdd(rhs, dot(c, br(br(a, d), b)));
        rhs = vSub(rhs, br(dot(c, br(a, d)), b));
        return vecZero(vSub(lhs, rhs));
      });
    case IdentityTag::D4:
      return forAllTuples(A, 4, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]), d = e(t[3]);
        Vec lhs = vAdd(br(a, dot(b, br(c, d))), br(a, dot(br(b, d), c)));
        Vec rhs = vSub(br(br(a, dot(b, c)), d), br(br(a, d), dot(b, c)));
        return vecZero(vSub(lhs, rhs));
      });
    case IdentityTag::D5:
      return forAllTuples(A, 3, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]);
        Vec s = br(dot(a, b), c);
        s = vSub(s, br(a, dot(c, b)));
        s = vAdd(s, br(dot(b, c), a));
        s = vSub(s, br(b, dot(a, c)));
        s = vAdd(s, br(dot(c, a), b));
        s = vSub(s, br(c, dot(b, a)));
        return vecZero(s);
      });
    case IdentityTag::D6:
      return forAllTuples(A, 4, [&](const std::vector<int>& t) {
        Vec a = e(t[0]), b = e(t[1]), c = e(t[2]), d = e(t[3]);
        Vec lhs = br(dot(br(a, c), d), b);
        Vec rhs = vSub(A.zeroVec(), br(b, dot(br(a, c), d)));
        rhs = vAdd(rhs, dot(br(br(b, a), c), d));
        rhs = vSub(rhs, dot(br(br(b, c), a), d));
        rhs = vSub(rhs, br(a, dot(br(b, c), d)));
        rhs = vAdd(rhs, dot(br(br(a, b), c), d));
        rhs = vAdd(rhs, br(br(a, d), dot(c, b)));
        rhs = vSub(rhs, dot(br(br(a, d), c), b));
        rhs = vSub(rhs, br(dot(c, br(a, d)), b));
        return vecZero(vSub(lhs, rhs));
      });
  }
  return false;
}

std::set<VarietyTag> classify(const BiAlgebra& a) {
  std::set<VarietyTag> tags;
  bool assoc = checkIdentity(a, IdentityTag::Assoc);
  bool leib = checkIdentity(a, IdentityTag::Leibniz);
  bool left = checkIdentity(a, IdentityTag::LeftCompat);
  bool right = checkIdentity(a, IdentityTag::RightCompat);
  if (assoc) tags.insert(VarietyTag::Assoc);
  if (leib) tags.insert(VarietyTag::Leibniz);
  if (assoc && left) tags.insert(VarietyTag::AWBl);
  if (assoc && right) tags.insert(VarietyTag::AWBr);
  if (assoc && left && right) tags.insert(VarietyTag::AWBlr);
  if (assoc && leib && left) tags.insert(VarietyTag::NPl);
  if (assoc && leib && right) tags.insert(VarietyTag::NPr);
  if (assoc && leib && left && right) tags.insert(VarietyTag::NPlr);
  if (tags.count(VarietyTag::NPlr) && checkIdentity(a, IdentityTag::DotComm) &&
      checkIdentity(a, IdentityTag::BracketAlt))
    tags.insert(VarietyTag::Poisson);
  return tags;
}

bool hasTag(const BiAlgebra& a, VarietyTag t) { return classify(a).count(t) > 0; }

std::vector<DerivedIdentityEntry> checkDerivedIdentities(const BiAlgebra& a) {
  std::vector<DerivedIdentityEntry> out;
  auto tags = classify(a);
  for (IdentityTag id : {IdentityTag::D1, IdentityTag::D2, IdentityTag::D3, IdentityTag::D4,
                         IdentityTag::D5, IdentityTag::D6}) {
    DerivedIdentityEntry e;
    e.id = id;
    e.premise = derivedPremise(id);
    e.premiseHolds = tags.count(e.premise) > 0;
    e.identityHolds = checkIdentity(a, id);
    e.violation = e.premiseHolds && !e.identityHolds;
    out.push_back(e);
  }
  return out;
}

BiAlgebra commutatorBracket(const BiAlgebra& a) {
  if (!checkIdentity(a, IdentityTag::Assoc)) fail(ErrorKind::NotAssociative, "commutator bracket needs an associative algebra");
  BiAlgebra r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) r.setBracket(i, j, k, a.dotC(i, j, k) - a.dotC(j, i, k));
  return r;
}

BiAlgebra derivationBracket(const BiAlgebra& a, const LinearMap& d, Side side) {
  if (d.sourceDim != a.dim() || d.targetDim != a.dim() || d.matrix.rows() != a.dim() ||
      d.matrix.cols() != a.dim())
    fail(ErrorKind::ShapeMismatch, "derivation map shape");
  BiAlgebra r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Scalar> ei = a.basisVec(i), ej = a.basisVec(j);
      std::vector<Scalar> v;
      if (side == Side::Left) {
        std::vector<Scalar> Dj = d.matrix.applyDense(ej);
        v = a.dot(ei, Dj);
        std::vector<Scalar> w = a.dot(Dj, ei);
        for (int k = 0; k < a.dim(); ++k) v[k] -= w[k];
      } else {
        std::vector<Scalar> Di = d.matrix.applyDense(ei);
        v = a.dot(Di, ej);
        std::vector<Scalar> w = a.dot(ej, Di);
        for (int k = 0; k < a.dim(); ++k) v[k] -= w[k];
      }
      for (int k = 0; k < a.dim(); ++k) r.setBracket(i, j, k, v[k]);
    }
  return r;
}

bool isSquareZeroDerivation(const BiAlgebra& a, const LinearMap& d) {
  if (d.sourceDim != a.dim() || d.targetDim != a.dim()) fail(ErrorKind::ShapeMismatch, "derivation map shape");
  Matrix d2 = d.matrix * d.matrix;
  if (!d2.isZero()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Scalar> ei = a.basisVec(i), ej = a.basisVec(j);
      std::vector<Scalar> lhs = d.matrix.applyDense(a.dot(ei, ej));
      std::vector<Scalar> rhs = a.dot(d.matrix.applyDense(ei), ej);
      std::vector<Scalar> rhs2 = a.dot(ei, d.matrix.applyDense(ej));
      for (int k = 0; k < a.dim(); ++k) rhs[k] += rhs2[k];
      for (int k = 0; k < a.dim(); ++k)
        if (lhs[k] != rhs[k]) return false;
    }
  return true;
}

Subspace center(const BiAlgebra& p) {
  int d = p.dim();
  // rows: for each basis e_j and each product family and each coordinate k,
  // a linear condition on z
  std::vector<SVec> rows;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      SVec zdot, dotz, zbr, brz;
      for (int i = 0; i < d; ++i) {
        if (!p.dotC(i, j, k).isZero()) zdot.emplace_back(i, p.dotC(i, j, k));
        if (!p.dotC(j, i, k).isZero()) dotz.emplace_back(i, p.dotC(j, i, k));
        if (!p.bracketC(i, j, k).isZero()) zbr.emplace_back(i, p.bracketC(i, j, k));
        if (!p.bracketC(j, i, k).isZero()) brz.emplace_back(i, p.bracketC(j, i, k));
      }
      for (auto* v : {&zdot, &dotz, &zbr, &brz})
        if (!v->empty()) rows.push_back(*v);
    }
  Matrix m = Matrix::fromRows(p.field(), d, rows);
  auto kb = kernelBasis(m);
  return Subspace::fromVectors(p.field(), d, kb);
}

Subspace idealClosure(const BiAlgebra& p, const std::vector<SVec>& generators) {
  Subspace s(p.field(), p.dim());
  std::vector<SVec> frontier;
  for (auto& g : generators)
    if (s.insert(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<SVec> next;
    for (auto& v : frontier) {
      std::vector<Scalar> vd = svec::toDense(v, p.dim(), p.field());
      for (int j = 0; j < p.dim(); ++j) {
        std::vector<Scalar> ej = p.basisVec(j);
        for (auto& w : {p.dot(vd, ej), p.dot(ej, vd), p.bracket(vd, ej), p.bracket(ej, vd)}) {
          SVec sv = svec::fromDense(w);
          if (s.insert(sv)) next.push_back(sv);
        }
      }
    }
    frontier = std::move(next);
  }
  return s;
}

bool isTwoSidedIdeal(const BiAlgebra& p, const Subspace& s) {
  for (auto& v : s.basis()) {
    std::vector<Scalar> vd = svec::toDense(v, p.dim(), p.field());
    for (int j = 0; j < p.dim(); ++j) {
      std::vector<Scalar> ej = p.basisVec(j);
      for (auto& w : {p.dot(vd, ej), p.dot(ej, vd), p.bracket(vd, ej), p.bracket(ej, vd)})
        if (!s.contains(svec::fromDense(w))) return false;
    }
  }
  return true;
}

QuotientResult quotient(const BiAlgebra& p, const Subspace& ideal) {
  if (!isTwoSidedIdeal(p, ideal)) fail(ErrorKind::NotAnIdeal, "subspace is not a two-sided ideal");
  const Field& f = p.field();
  int d = p.dim();
  // greedy pivot extension of the ideal basis by ambient coordinate vectors
  Echelon ech(f, d);
  for (auto& v : ideal.basis()) ech.insert(v);
  std::vector<int> comp;
  for (int i = 0; i < d; ++i) {
    SVec e{{i, Scalar::one(f)}};
    if (ech.insert(e)) comp.push_back(i);
  }
  int q = (int)comp.size();
  // coordinates: full basis = ideal basis followed by chosen complement vectors
  std::vector<SVec> baseRows;
  for (auto& v : ideal.basis()) baseRows.push_back(v);
  for (int i : comp) baseRows.push_back({{i, Scalar::one(f)}});
  // Solve x -> coordinates over baseRows via a matrix whose columns are baseRows.
  Matrix basisMat(f, d, d);
  for (int c = 0; c < d; ++c)
    for (auto& [r, v] : baseRows[c]) basisMat.add(r, c, v);
  std::vector<std::string> names;
  for (int i : comp) names.push_back(p.basisNames()[i]);
  BiAlgebra out(f, q, names);
  int nIdeal = ideal.dim();
  auto reduceToComplement = [&](const std::vector<Scalar>& x) {
    auto sol = solve(basisMat, svec::fromDense(x));
    if (!sol) fail(ErrorKind::ShapeMismatch, "quotient coordinate solve failed");
    std::vector<Scalar> coords(q, Scalar::zero(f));
    for (auto& [i, v] : *sol)
      if (i >= nIdeal) coords[i - nIdeal] = v;
    return coords;
  };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<Scalar> ea = p.basisVec(comp[a]), eb = p.basisVec(comp[b]);
      std::vector<Scalar> dq = reduceToComplement(p.dot(ea, eb));
      std::vector<Scalar> bq = reduceToComplement(p.bracket(ea, eb));
      for (int k = 0; k < q; ++k) {
        out.setDot(a, b, k, dq[k]);
        out.setBracket(a, b, k, bq[k]);
      }
    }
  return {out, comp};
}

BiAlgebra poissonification(const BiAlgebra& p) {
  const Field& f = p.field();
  int d = p.dim();
  std::vector<SVec> gens;
  // [x,x] for all x expands to the diagonal brackets plus the symmetrized
  // off-diagonal ones; listing both keeps this correct in characteristic 2.
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      std::vector<Scalar> ei = p.basisVec(i), ej = p.basisVec(j);
      std::vector<Scalar> sym = p.bracket(ei, ej);
      std::vector<Scalar> rev = p.bracket(ej, ei);
      for (int k = 0; k < d; ++k) sym[k] += rev[k];
      gens.push_back(svec::fromDense(sym));
      if (i == j) gens.push_back(svec::fromDense(p.bracket(ei, ei)));
      std::vector<Scalar> comm = p.dot(ei, ej);
      std::vector<Scalar> rev2 = p.dot(ej, ei);
      for (int k = 0; k < d; ++k) comm[k] -= rev2[k];
      gens.push_back(svec::fromDense(comm));
    }
  Subspace ideal = idealClosure(p, gens);
  return quotient(p, ideal).algebra;
}

BiAlgebra underlying(const BiAlgebra& p, Underlying which) {
  BiAlgebra r = p;
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j)
      for (int k = 0; k < p.dim(); ++k) {
        if (which == Underlying::Assoc)
          r.setBracket(i, j, k, Scalar::zero(p.field()));
        else
          r.setDot(i, j, k, Scalar::zero(p.field()));
      }
  return r;
}

} // namespace npb
