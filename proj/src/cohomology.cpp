#include "npb/cohomology.hpp"

#include <algorithm>

namespace npb {

namespace {

// odometer over {0..p-1}^n
struct MultiIdx {
  std::vector<int> v;
  int p;
  bool done = false;
  MultiIdx(int n, int p) : v(n, 0), p(p) { done = (p == 0 && n > 0); }
  void next() {
    int k = (int)v.size() - 1;
    while (k >= 0 && ++v[k] == p) v[k--] = 0;
    if (k < 0) done = true;
  }
  long flat() const {
    long f = 0;
    for (int d : v) f = f * p + d;
    return f;
  }
};

long flatOf(const std::vector<int>& tuple, int p) {
  long f = 0;
  for (int d : tuple) f = f * p + d;
  return f;
}

} // namespace

Bimodule bimoduleOf(const Representation& r) { return {r.moduleDim, r.dotL, r.dotR}; }

Bimodule meModule(const Representation& r) {
  const Field& f = r.algebra.field();
  int p = r.algebra.dim(), m = r.moduleDim;
  Bimodule me;
  me.dim = p * m;
  for (int i = 0; i < p; ++i) {
    Matrix l(f, p * m, p * m), rr(f, p * m, p * m);
    for (int s = 0; s < p; ++s)
      for (int t = 0; t < m; ++t)
        for (int u = 0; u < m; ++u) {
          // (e_i . g)(e_s) = e_i . g(e_s); (g . e_i)(e_s) = g(e_s) . e_i
          l.add(s * m + t, s * m + u, r.dotL[i].get(t, u));
          rr.add(s * m + t, s * m + u, r.dotR[i].get(t, u));
        }
    me.L.push_back(l);
    me.R.push_back(rr);
  }
  return me;
}

bool checkAssocBimodule(const BiAlgebra& p, const Bimodule& m) {
  // p1.(p2.x) = (p1p2).x ; p1.(x.p2) = (p1.x).p2 ; x.(p1p2) = (x.p1).p2
  for (int i = 0; i < p.dim(); ++i)
    for (int j = 0; j < p.dim(); ++j) {
      Matrix lhs = m.L[i] * m.L[j];
      Matrix rhs(p.field(), m.dim, m.dim);
      for (int k = 0; k < p.dim(); ++k) {
        const Scalar& c = p.dotC(i, j, k);
        if (!c.isZero()) rhs = rhs + m.L[k].scaled(c);
      }
      if (!(lhs == rhs)) return false;
      if (!(m.L[i] * m.R[j] == m.R[j] * m.L[i])) return false;
      Matrix rhs2(p.field(), m.dim, m.dim);
      for (int k = 0; k < p.dim(); ++k) {
        const Scalar& c = p.dotC(i, j, k);
        if (!c.isZero()) rhs2 = rhs2 + m.R[k].scaled(c);
      }
      if (!(rhs2 == m.R[j] * m.R[i])) return false;
    }
  return true;
}

int cochainDim(const BiAlgebra& p, int moduleDim, int n) {
  long d = moduleDim;
  for (int i = 0; i < n; ++i) d *= p.dim();
  return (int)d;
}

Matrix hochschildCoboundary(const BiAlgebra& p, const Bimodule& mod, int n) {
  const Field& f = p.field();
  int pd = p.dim(), m = mod.dim;
  Matrix out(f, cochainDim(p, m, n + 1), cochainDim(p, m, n));
  Scalar sign = (n + 1) % 2 == 0 ? Scalar::one(f) : -Scalar::one(f); // (-1)^(n+1)
  for (MultiIdx col(n, pd); !col.done; col.next()) {
    long colBase = col.flat() * m;
    for (int u = 0; u < m; ++u) {
      long c = colBase + u;
      // p1 . f(p2..p_{n+1}): row tuple (i, col...)
      long pn = 1;
      for (int q = 0; q < n; ++q) pn *= pd;
      for (int i = 0; i < pd; ++i) {
        long rowBase = (i * pn + col.flat()) * m;
        for (int t = 0; t < m; ++t) {
          const Scalar& s = mod.L[i].get(t, u);
          if (!s.isZero()) out.add(rowBase + t, c, sign * s);
        }
      }
      // middle terms: (-1)^a f(..., p_a p_{a+1}, ...)
      for (int a = 1; a <= n; ++a) {
        Scalar asign = a % 2 == 0 ? sign : -sign;
        for (int x = 0; x < pd; ++x)
          for (int y = 0; y < pd; ++y) {
            const Scalar& cst = p.dotC(x, y, col.v[a - 1]);
            if (cst.isZero()) continue;
            std::vector<int> row = col.v;
            row[a - 1] = x;
            row.insert(row.begin() + a, y);
            out.add(flatOf(row, pd) * m + u, c, asign * cst);
          }
      }
      // f(p1..p_n) . p_{n+1}: the two (-1)^(n+1) factors cancel
      for (int i = 0; i < pd; ++i) {
        std::vector<int> row = col.v;
        row.push_back(i);
        long rowBase = flatOf(row, pd) * m;
        for (int t = 0; t < m; ++t) {
          const Scalar& s = mod.R[i].get(t, u);
          if (!s.isZero()) out.add(rowBase + t, c, s);
        }
      }
    }
  }
  return out;
}

Matrix leibnizCoboundary(const BiAlgebra& p, const Representation& r, int n) {
  const Field& f = p.field();
  int pd = p.dim(), m = r.moduleDim;
  Matrix out(f, cochainDim(p, m, n + 1), cochainDim(p, m, n));
  Scalar one = Scalar::one(f);
  for (MultiIdx col(n, pd); !col.done; col.next()) {
    long colBase = col.flat() * m;
    for (int u = 0; u < m; ++u) {
      long c = colBase + u;
      // [p1, f(p2..p_{n+1})]
      long pn = 1;
      for (int q = 0; q < n; ++q) pn *= pd;
      for (int i = 0; i < pd; ++i) {
        long rowBase = (i * pn + col.flat()) * m;
        for (int t = 0; t < m; ++t) {
          const Scalar& s = r.brL[i].get(t, u);
          if (!s.isZero()) out.add(rowBase + t, c, s);
        }
      }
      // sum_{i=2}^{n+1} (-1)^i [f(p1..^pi..p_{n+1}), p_i]
      for (int pos = 2; pos <= n + 1; ++pos) {
        Scalar psign = pos % 2 == 0 ? one : -one;
        for (int x = 0; x < pd; ++x) {
          std::vector<int> row = col.v;
          row.insert(row.begin() + (pos - 1), x);
          long rowBase = flatOf(row, pd) * m;
          for (int t = 0; t < m; ++t) {
            const Scalar& s = r.brR[x].get(t, u);
            if (!s.isZero()) out.add(rowBase + t, c, psign * s);
          }
        }
      }
      // sum_{a<b} (-1)^(b+1) f(p1,...,[p_a,p_b],...,^p_b,...)
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n + 1; ++b) {
          Scalar bsign = (b + 1) % 2 == 0 ? one : -one;
          for (int x = 0; x < pd; ++x)
            for (int y = 0; y < pd; ++y) {
              const Scalar& cst = p.bracketC(x, y, col.v[a - 1]);
              if (cst.isZero()) continue;
              std::vector<int> row = col.v;
              row[a - 1] = x;
              row.insert(row.begin() + (b - 1), y);
              out.add(flatOf(row, pd) * m + u, c, bsign * cst);
            }
        }
    }
  }
  return out;
}

Matrix theta(const BiAlgebra& p, int moduleDim, int n) {
  // flat indices coincide: theta_n is the identity permutation
  if (n < 1) fail(ErrorKind::ShapeMismatch, "theta needs n >= 1");
  return Matrix::identity(p.field(), cochainDim(p, moduleDim, n + 1));
}

Matrix thetaPrime(const BiAlgebra& p, int moduleDim, int n) {
  if (n < 1) fail(ErrorKind::ShapeMismatch, "theta' needs n >= 1");
  const Field& f = p.field();
  int pd = p.dim(), m = moduleDim;
  int dim = cochainDim(p, m, n + 1);
  Matrix out(f, dim, dim);
  // theta'_n(f)(p_{i1},...,p_{in})(p_s) = f(p_s, p_{i1}, ..., p_{in})
  for (MultiIdx idx(n, pd); !idx.done; idx.next())
    for (int s = 0; s < pd; ++s)
      for (int t = 0; t < m; ++t) {
        std::vector<int> src{s};
        for (int q : idx.v) src.push_back(q);
        long row = (idx.flat() * pd + s) * m + t;
        long colIdx = flatOf(src, pd) * m + t;
        out.add(row, colIdx, Scalar::one(f));
      }
  return out;
}

Matrix alphaMap(const Representation& r, int n) {
  const BiAlgebra& p = r.algebra;
  const Field& f = p.field();
  int pd = p.dim(), m = r.moduleDim;
  int rows = cochainDim(p, m, n + 1); // = dim C^n(P, M^e)
  Matrix out(f, rows, cochainDim(p, m, n));
  Scalar one = Scalar::one(f);
  if (n == 1) {
    // alpha^1(f)(p1)(p2) = [p1, f(p2)] + [f(p1), p2] - f([p1,p2])
    for (int j = 0; j < pd; ++j)
      for (int u = 0; u < m; ++u) {
        long c = (long)j * m + u;
        for (int i1 = 0; i1 < pd; ++i1)
          for (int t = 0; t < m; ++t) {
            const Scalar& s = r.brL[i1].get(t, u);
            if (!s.isZero()) out.add(((long)i1 * pd + j) * m + t, c, s);
          }
        for (int s2 = 0; s2 < pd; ++s2)
          for (int t = 0; t < m; ++t) {
            const Scalar& s = r.brR[s2].get(t, u);
            if (!s.isZero()) out.add(((long)j * pd + s2) * m + t, c, s);
          }
        for (int i1 = 0; i1 < pd; ++i1)
          for (int s2 = 0; s2 < pd; ++s2) {
            const Scalar& cst = p.bracketC(i1, s2, j);
            if (!cst.isZero()) out.add(((long)i1 * pd + s2) * m + u, c, -cst);
          }
      }
    return out;
  }
  // alpha^n(f)(p1..pn)(p_{n+1}) = [f(p1..pn), p_{n+1}] - sum_a f(p1,..,[p_a,p_{n+1}],..,pn)
  for (MultiIdx col(n, pd); !col.done; col.next())
    for (int u = 0; u < m; ++u) {
      long c = col.flat() * m + u;
      for (int s2 = 0; s2 < pd; ++s2)
        for (int t = 0; t < m; ++t) {
          const Scalar& s = r.brR[s2].get(t, u);
          if (!s.isZero()) out.add((col.flat() * pd + s2) * m + t, c, s);
        }
      for (int a = 0; a < n; ++a)
        for (int x = 0; x < pd; ++x)
          for (int s2 = 0; s2 < pd; ++s2) {
            const Scalar& cst = p.bracketC(x, s2, col.v[a]);
            if (cst.isZero()) continue;
            std::vector<int> row = col.v;
            row[a] = x;
            row.push_back(s2);
            out.add(flatOf(row, pd) * m + u, c, -cst);
          }
    }
  return out;
}

Matrix alphaPrimeMap(const Representation& r, int n) {
  const BiAlgebra& p = r.algebra;
  const Field& f = p.field();
  int pd = p.dim(), m = r.moduleDim;
  Matrix out(f, cochainDim(p, m, n + 1), cochainDim(p, m, n));
  if (n == 1) {
    // alpha'^1(f)(p1)(p2) = [f(p2), p1] + [p2, f(p1)] - f([p2,p1])
    for (int j = 0; j < pd; ++j)
      for (int u = 0; u < m; ++u) {
        long c = (long)j * m + u;
        // [f(p2), p1]: rows (p1, (p2 = j, t)) with the right bracket action by p1
        for (int i1 = 0; i1 < pd; ++i1)
          for (int t = 0; t < m; ++t) {
            const Scalar& s = r.brR[i1].get(t, u);
            if (!s.isZero()) out.add(((long)i1 * pd + j) * m + t, c, s);
          }
        // [p2, f(p1)]: f(p1) means p1 = j; rows (j, (s2, t)) with coeff brL[s2]
        for (int s2 = 0; s2 < pd; ++s2)
          for (int t = 0; t < m; ++t) {
            const Scalar& s = r.brL[s2].get(t, u);
            if (!s.isZero()) out.add(((long)j * pd + s2) * m + t, c, s);
          }
        // -f([p2,p1]): rows (i1, (s2, u)) with coeff -b[s2][i1][j]
        for (int i1 = 0; i1 < pd; ++i1)
          for (int s2 = 0; s2 < pd; ++s2) {
            const Scalar& cst = p.bracketC(s2, i1, j);
            if (!cst.isZero()) out.add(((long)i1 * pd + s2) * m + u, c, -cst);
          }
      }
    return out;
  }
  // alpha'^n(f)(p1..pn)(p_{n+1}) = [p_{n+1}, f(p1..pn)] - sum_a f(p1,..,[p_{n+1},p_a],..,pn)
  for (MultiIdx col(n, pd); !col.done; col.next())
    for (int u = 0; u < m; ++u) {
      long c = col.flat() * m + u;
      for (int s2 = 0; s2 < pd; ++s2)
        for (int t = 0; t < m; ++t) {
          const Scalar& s = r.brL[s2].get(t, u);
          if (!s.isZero()) out.add((col.flat() * pd + s2) * m + t, c, s);
        }
      for (int a = 0; a < n; ++a)
        for (int x = 0; x < pd; ++x)
          for (int s2 = 0; s2 < pd; ++s2) {
            const Scalar& cst = p.bracketC(s2, x, col.v[a]);
            if (cst.isZero()) continue;
            std::vector<int> row = col.v;
            row[a] = x;
            row.push_back(s2);
            out.add(flatOf(row, pd) * m + u, c, -cst);
          }
    }
  return out;
}

Matrix betaMap(const Representation& r, int n) {
  // beta^{2k+1} = theta_{2k+1} dL^{2k+1} (theta is the identity in these
  // coordinates), beta^{2k} = dHe^{2k-1} theta_{2k-1}
  if (n % 2 == 1) return leibnizCoboundary(r.algebra, r, n);
  return hochschildCoboundary(r.algebra, meModule(r), n - 1);
}

Matrix betaPrimeMap(const Representation& r, int n) {
  if (n % 2 == 1) return thetaPrime(r.algebra, r.moduleDim, n) * leibnizCoboundary(r.algebra, r, n);
  return hochschildCoboundary(r.algebra, meModule(r), n - 1) *
         thetaPrime(r.algebra, r.moduleDim, n - 1);
}

bool Complex::boundaryConditionHolds() const {
  for (int n = 0; n + 1 <= maxDeg; ++n)
    if (!(d[n + 1] * d[n]).isZero()) return false;
  return true;
}

namespace {

struct ColumnSpec {
  SummandKind kind;
  int crossFrom = -1; // column index feeding this HMe column (HM source)
  int crossFromL = -1; // LM column feeding this HMe column
  bool prime = false;  // use alpha'/beta' for the cross blocks
};

// Shared assembly: columns with fixed diagonal blocks (-dH, +dHe, -dL) and
// cross blocks alpha/alpha' from an HM column and -beta/-beta' from an LM
// column into each HMe column. npDegreeOne collapses degree 1 to a single
// Hom(P,M) copy with boundary (-dH^1, 0, ..., -dL^1).
Complex assemble(const Representation& r, const std::vector<ColumnSpec>& cols, bool npDegreeOne,
                 int maxDeg) {
  const BiAlgebra& p = r.algebra;
  const Field& f = p.field();
  int m = r.moduleDim;
  Bimodule mm = bimoduleOf(r);
  Bimodule me = meModule(r);

  auto colDim = [&](const ColumnSpec& cs, int n) -> int {
    if (n <= 0) return 0;
    switch (cs.kind) {
      case SummandKind::HM: return cochainDim(p, m, n);
      case SummandKind::LM: return cochainDim(p, m, n);
      case SummandKind::HMe: return n >= 2 ? cochainDim(p, me.dim, n - 1) : 0;
    }
    return 0;
  };

  Complex c;
  c.field = f;
  c.maxDeg = maxDeg;
  c.dims.assign(maxDeg + 2, 0);
  c.layout.assign(maxDeg + 2, {});
  for (int n = 1; n <= maxDeg + 1; ++n) {
    if (npDegreeOne && n == 1) {
      // degree 1 is the single Hom(P,M) copy, carried by the leading column;
      // the other columns are listed with dimension 0 so indices stay stable
      c.dims[1] = cochainDim(p, m, 1);
      for (size_t ci = 0; ci < cols.size(); ++ci)
        c.layout[1].push_back({cols[ci].kind, ci == 0 ? 0 : c.dims[1], ci == 0 ? c.dims[1] : 0});
      continue;
    }
    int off = 0;
    for (auto& cs : cols) {
      int d = colDim(cs, n);
      c.layout[n].push_back({cs.kind, off, d});
      off += d;
    }
    c.dims[n] = off;
  }

  c.d.assign(maxDeg + 1, Matrix());
  c.d[0] = Matrix(f, c.dims[1], 0);
  for (int n = 1; n <= maxDeg; ++n) {
    Matrix dn(f, c.dims[n + 1], c.dims[n]);
    if (npDegreeOne && n == 1) {
      // (-dH^1, 0, ..., -dL^1) out of the single Hom(P,M) copy
      Matrix dh = hochschildCoboundary(p, mm, 1);
      Matrix dl = leibnizCoboundary(p, r, 1);
      for (size_t ci = 0; ci < cols.size(); ++ci) {
        const Summand& s = c.layout[2][ci];
        if (cols[ci].kind == SummandKind::HM) dn.insertBlock(s.offset, 0, -dh);
        if (cols[ci].kind == SummandKind::LM) dn.insertBlock(s.offset, 0, -dl);
      }
      c.d[1] = std::move(dn);
      continue;
    }
    for (size_t ci = 0; ci < cols.size(); ++ci) {
      const Summand& src = c.layout[n][ci];
      if (src.dim == 0) continue;
      // diagonal block
      const Summand& dst = c.layout[n + 1][ci];
      switch (cols[ci].kind) {
        case SummandKind::HM:
          dn.insertBlock(dst.offset, src.offset, -hochschildCoboundary(p, mm, n));
          break;
        case SummandKind::LM:
          dn.insertBlock(dst.offset, src.offset, -leibnizCoboundary(p, r, n));
          break;
        case SummandKind::HMe:
          if (dst.dim > 0 && src.dim > 0)
            dn.insertBlock(dst.offset, src.offset, hochschildCoboundary(p, me, n - 1));
          break;
      }
    }
    // cross blocks into HMe columns at degree n+1 (they hold C^n(P,M^e))
    for (size_t ci = 0; ci < cols.size(); ++ci) {
      if (cols[ci].kind != SummandKind::HMe) continue;
      const Summand& dst = c.layout[n + 1][ci];
      if (dst.dim == 0) continue;
      if (cols[ci].crossFrom >= 0) {
        const Summand& src = c.layout[n][cols[ci].crossFrom];
        if (src.dim > 0)
          dn.insertBlock(dst.offset, src.offset,
                         cols[ci].prime ? alphaPrimeMap(r, n) : alphaMap(r, n));
      }
      if (cols[ci].crossFromL >= 0) {
        const Summand& src = c.layout[n][cols[ci].crossFromL];
        if (src.dim > 0)
          dn.insertBlock(dst.offset, src.offset,
                         -(cols[ci].prime ? betaPrimeMap(r, n) : betaMap(r, n)));
      }
    }
    c.d[n] = std::move(dn);
  }
  return c;
}

} // namespace

Complex buildComplex(Variety v, const Representation& r, int maxDeg) {
  if (!hasTag(r.algebra, varietyTag(v)))
    fail(ErrorKind::VarietyMismatch, "algebra does not carry the variety's tags");
  if (!checkAction(v, r)) fail(ErrorKind::ActionAxiomsFail, "invalid representation");
  switch (v) {
    case Variety::NPl:
      return assemble(r,
                      {{SummandKind::HM}, {SummandKind::HMe, 0, 2, false}, {SummandKind::LM}},
                      true, maxDeg);
    case Variety::NPr:
      return assemble(r, {{SummandKind::HM}, {SummandKind::HMe, 0, 2, true}, {SummandKind::LM}},
                      true, maxDeg);
    case Variety::NPlr:
      return assemble(r,
                      {{SummandKind::HM},
                       {SummandKind::HMe, 0, 3, false},
                       {SummandKind::HMe, 0, 3, true},
                       {SummandKind::LM}},
                      true, maxDeg);
    case Variety::AWBl:
      return assemble(r, {{SummandKind::HM}, {SummandKind::HMe, 0, -1, false}}, false, maxDeg);
    case Variety::AWBr:
      return assemble(r, {{SummandKind::HM}, {SummandKind::HMe, 0, -1, true}}, false, maxDeg);
    case Variety::AWBlr:
      return assemble(r,
                      {{SummandKind::HM},
                       {SummandKind::HMe, 0, -1, false},
                       {SummandKind::HMe, 0, -1, true}},
                      false, maxDeg);
  }
  fail(ErrorKind::VarietyMismatch, "unknown variety");
}

Complex buildPlainH(const Representation& r, int maxDeg) {
  return assemble(r, {{SummandKind::HM}}, false, maxDeg);
}

Complex buildPlainL(const Representation& r, int maxDeg) {
  return assemble(r, {{SummandKind::LM}}, false, maxDeg);
}

Complex buildShiftedMe(const Representation& r, int maxDeg) {
  return assemble(r, {{SummandKind::HMe, -1, -1, false}}, false, maxDeg);
}

Complex buildConeBeta(const Representation& r, bool prime, int maxDeg) {
  return assemble(r, {{SummandKind::LM}, {SummandKind::HMe, -1, 0, prime}}, false, maxDeg);
}

Complex buildConeBetaBoth(const Representation& r, int maxDeg) {
  return assemble(r,
                  {{SummandKind::LM},
                   {SummandKind::HMe, -1, 0, false},
                   {SummandKind::HMe, -1, 0, true}},
                  false, maxDeg);
}

Complex directSum(const Complex& a, const Complex& b) {
  if (a.field != b.field || a.maxDeg != b.maxDeg) fail(ErrorKind::ShapeMismatch, "direct sum mismatch");
  Complex c;
  c.field = a.field;
  c.maxDeg = a.maxDeg;
  c.dims.assign(a.dims.size(), 0);
  c.layout.assign(a.layout.size(), {});
  for (size_t n = 0; n < a.dims.size(); ++n) {
    c.dims[n] = a.dims[n] + b.dims[n];
    c.layout[n] = a.layout[n];
    for (auto s : b.layout[n]) {
      s.offset += a.dims[n];
      c.layout[n].push_back(s);
    }
  }
  c.d.assign(a.d.size(), Matrix());
  for (size_t n = 0; n < a.d.size(); ++n) {
    Matrix dn(c.field, c.dims[n + 1], c.dims[n]);
    dn.insertBlock(0, 0, a.d[n]);
    dn.insertBlock(a.dims[n + 1], a.dims[n], b.d[n]);
    c.d[n] = std::move(dn);
  }
  return c;
}

std::vector<int> cohomologyDims(const Complex& c, int maxDeg) {
  if (maxDeg > c.maxDeg) fail(ErrorKind::RangeTooSmall, "complex not built far enough");
  std::vector<int> h(maxDeg + 1, 0);
  std::vector<int> ranks(maxDeg + 1, 0);
  for (int n = 0; n <= maxDeg; ++n) ranks[n] = rank(c.d[n]);
  for (int n = 0; n <= maxDeg; ++n) {
    int kerDim = c.dims[n] - ranks[n];
    int imPrev = n == 0 ? 0 : ranks[n - 1];
    h[n] = kerDim - imPrev;
  }
  return h;
}

int restrictedH2(Variety v, const Representation& r) {
  if (v != Variety::NPl && v != Variety::NPr && v != Variety::NPlr)
    fail(ErrorKind::VarietyMismatch, "restricted H^2 is defined for the NP varieties");
  Complex c = buildComplex(v, r, 2);
  // restrict d^2 to the HM and LM summands of degree 2
  std::vector<std::pair<int, int>> ranges;
  for (auto& s : c.layout[2])
    if (s.kind == SummandKind::HM || s.kind == SummandKind::LM) ranges.emplace_back(s.offset, s.dim);
  int cols = 0;
  for (auto& [o, d] : ranges) cols += d;
  Matrix restricted(c.field, c.dims[3], cols);
  int at = 0;
  for (auto& [o, d] : ranges) {
    // copy columns [o, o+d)
    for (int i = 0; i < c.d[2].rows(); ++i)
      for (auto& [j, val] : c.d[2].row(i))
        if (j >= o && j < o + d) restricted.add(i, at + j - o, val);
    at += d;
  }
  int kerDim = cols - rank(restricted);
  int imD1 = rank(c.d[1]);
  return kerDim - imD1;
}

HSpace::HSpace(const Complex& c, int n, PivotRule rule)
    : field_(c.field), ech_(c.field, c.dims[n], rule) {
  if (n < 1 || n > c.maxDeg) fail(ErrorKind::RangeTooSmall, "HSpace degree out of range");
  // image of d^{n-1}: columns of the boundary matrix
  if (n >= 1) {
    Matrix t = c.d[n - 1].transpose();
    for (int i = 0; i < t.rows(); ++i)
      if (!t.row(i).empty()) ech_.insert(t.row(i));
  }
  for (auto& z : kernelBasis(c.d[n], rule)) {
    size_t before = ech_.rank();
    if (ech_.insert(z)) {
      repRows_.push_back((int)before);
      reps_.push_back(z);
    }
  }
}

std::vector<Scalar> HSpace::toH(const SVec& v) const {
  auto coords = ech_.coordinates(v);
  std::vector<Scalar> out;
  for (int idx : repRows_) out.push_back(coords[idx]);
  return out;
}

} // namespace npb
