#include "npb/freealg.hpp"

#include <algorithm>
#include <set>

namespace npb {

// ---------- Term ----------

Term Term::gen(int index) {
  auto n = std::make_shared<Node>();
  n->k = Kind::Gen;
  n->gen = index;
  n->degree = 1;
  return Term(std::move(n));
}

Term Term::dot(const Term& l, const Term& r) {
  auto n = std::make_shared<Node>();
  n->k = Kind::Dot;
  n->degree = l.degree() + r.degree();
  n->l = l.n_;
  n->r = r.n_;
  return Term(std::move(n));
}

Term Term::bracket(const Term& l, const Term& r) {
  auto n = std::make_shared<Node>();
  n->k = Kind::Bracket;
  n->degree = l.degree() + r.degree();
  n->l = l.n_;
  n->r = r.n_;
  return Term(std::move(n));
}

int Term::compare(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return 0;
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  int ka = (int)a.kind(), kb = (int)b.kind();
  if (ka != kb) return ka < kb ? -1 : 1;
  if (a.kind() == Kind::Gen) {
    if (a.genIndex() != b.genIndex()) return a.genIndex() < b.genIndex() ? -1 : 1;
    return 0;
  }
  int c = compare(a.left(), b.left());
  if (c) return c;
  return compare(a.right(), b.right());
}

std::string Term::str(const std::vector<std::string>& genNames) const {
  switch (kind()) {
    case Kind::Gen: return genNames.at(genIndex());
    case Kind::Bracket: return "[" + left().str(genNames) + "," + right().str(genNames) + "]";
    case Kind::Dot: {
      std::string ls = left().str(genNames);
      if (left().kind() == Kind::Dot) ls = "(" + ls + ")"; // right-nested spines print flat
      return ls + "*" + right().str(genNames);
    }
  }
  return "?";
}

namespace {
Term dotJoin(const Term& a, const Term& b) {
  if (a.kind() == Term::Kind::Dot) return Term::dot(a.left(), dotJoin(a.right(), b));
  return Term::dot(a, b);
}
} // namespace

Term canonicalizeDots(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen: return t;
    case Term::Kind::Bracket:
      return Term::bracket(canonicalizeDots(t.left()), canonicalizeDots(t.right()));
    case Term::Kind::Dot: return dotJoin(canonicalizeDots(t.left()), canonicalizeDots(t.right()));
  }
  return t;
}

std::vector<Term> spineAtoms(const Term& t) {
  std::vector<Term> atoms;
  Term cur = t;
  while (cur.kind() == Term::Kind::Dot) {
    atoms.push_back(cur.left());
    cur = cur.right();
  }
  atoms.push_back(cur);
  return atoms;
}

Term spineFromAtoms(const std::vector<Term>& atoms) {
  Term cur = atoms.back();
  for (int i = (int)atoms.size() - 2; i >= 0; --i) cur = Term::dot(atoms[i], cur);
  return cur;
}

// ---------- parser ----------

namespace {
struct Parser {
  const std::string& s;
  const std::vector<std::string>& gens;
  size_t pos = 0;

  void skipWs() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skipWs();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Term parseExpr() {
    Term a = parseAtom();
    skipWs();
    if (eat('*')) return Term::dot(a, parseExpr());
    return a;
  }
  Term parseAtom() {
    skipWs();
    if (pos >= s.size()) fail(ErrorKind::ParseError, "unexpected end of term");
    if (eat('(')) {
      Term t = parseExpr();
      if (!eat(')')) fail(ErrorKind::ParseError, "expected ')'");
      return t;
    }
    if (eat('[')) {
      Term l = parseExpr();
      if (!eat(',')) fail(ErrorKind::ParseError, "expected ',' in bracket");
      Term r = parseExpr();
      if (!eat(']')) fail(ErrorKind::ParseError, "expected ']'");
      return Term::bracket(l, r);
    }
    size_t start = pos;
    while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
    if (start == pos) fail(ErrorKind::ParseError, "unexpected character at " + std::to_string(pos));
    std::string name = s.substr(start, pos - start);
    for (int i = 0; i < (int)gens.size(); ++i)
      if (gens[i] == name) return Term::gen(i);
    fail(ErrorKind::ParseError, "unknown generator: " + name);
  }
};
} // namespace

Term parseTerm(const std::string& text, const std::vector<std::string>& genNames) {
  Parser p{text, genNames};
  Term t = p.parseExpr();
  p.skipWs();
  if (p.pos != text.size()) fail(ErrorKind::ParseError, "trailing input in term");
  return t;
}

// ---------- FreeElement ----------

void FreeElement::add(const Term& t, const Scalar& c) {
  if (c.isZero()) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms.erase(it);
  }
}

void FreeElement::addScaled(const FreeElement& o, const Scalar& c) {
  for (auto& [t, v] : o.terms) add(t, v * c);
}

bool FreeElement::operator==(const FreeElement& o) const {
  return variety == o.variety && terms == o.terms;
}

std::string FreeElement::str(const std::vector<std::string>& genNames) const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto& [t, c] : terms) {
    if (!out.empty()) out += " + ";
    out += c.str() + " " + t.str(genNames);
  }
  return out;
}

// ---------- FreeAlgebra ----------

struct FreeAlgebra::Cache {
  std::map<Term, FreeElement> full[2];     // final normal forms per strategy
  std::map<Term, FreeElement> pattern[2];  // pattern-phase normal forms per strategy
  std::set<Term> inProgress;
  std::map<int, std::vector<Term>> atoms;
  std::map<int, std::vector<Term>> words;
  long long fuel = 0;
};

FreeAlgebra::FreeAlgebra(Variety v, const Field& f, std::vector<std::string> generatorNames,
                         int degreeCap)
    : variety_(v), field_(f), gens_(std::move(generatorNames)), degreeCap_(degreeCap),
      cache_(std::make_shared<Cache>()) {}

void FreeAlgebra::bumpFuel() const {
  if (++cache_->fuel > 80'000'000LL)
    fail(ErrorKind::GuardExceeded, "rewriting fuel exhausted (possible divergence)");
}

// One rewrite step at the root of a bracket node, as a +/-1 combination.
// Rule priority is fixed per variety (right-argument rules before
// left-argument rules), so at most one rule applies at a node.
std::optional<std::vector<std::pair<Term, long>>> FreeAlgebra::patternRewriteAtRoot(
    const Term& t) const {
  if (t.kind() != Term::Kind::Bracket) return std::nullopt;
  Term L = t.left(), R = t.right();
  using P = std::pair<Term, long>;

  if (varietyHasLeibniz(variety_) && R.kind() == Term::Kind::Bracket) {
    // [A, [B,C]] -> [[A,B],C] - [[A,C],B]
    Term B = R.left(), C = R.right();
    return std::vector<P>{{Term::bracket(Term::bracket(L, B), C), 1},
                          {Term::bracket(Term::bracket(L, C), B), -1}};
  }
  if (varietyHasRight(variety_) && R.kind() == Term::Kind::Dot) {
    // [A, B*C] -> B*[A,C] + [A,B]*C
    Term B = R.left(), C = R.right();
    return std::vector<P>{{dotJoin(B, Term::bracket(L, C)), 1},
                          {dotJoin(Term::bracket(L, B), C), 1}};
  }
  if (variety_ == Variety::NPl && R.kind() == Term::Kind::Dot) {
    auto atoms = spineAtoms(R);
    if (atoms.back().kind() == Term::Kind::Bracket) {
      // [A, b*[C,D]] -> [[A,b*C],D] - [[A,D],b*C] - [A,[b,D]*C]
      Term beta = atoms.back();
      std::vector<Term> bAtoms(atoms.begin(), atoms.end() - 1);
      Term b = spineFromAtoms(bAtoms);
      Term C = beta.left(), D = beta.right();
      return std::vector<P>{{Term::bracket(Term::bracket(L, dotJoin(b, C)), D), 1},
                            {Term::bracket(Term::bracket(L, D), dotJoin(b, C)), -1},
                            {Term::bracket(L, dotJoin(Term::bracket(b, D), C)), -1}};
    }
  }
  if (variety_ == Variety::NPr && L.kind() == Term::Kind::Dot &&
      L.left().kind() == Term::Kind::Bracket) {
    // [[A,C]*d, B] -> [[A,C],B]*d - [A,C]*[B,d] - [B,C]*[A,d] + C*[[A,d],B] - [C*[A,d],B]
    Term beta = L.left(), d = L.right();
    Term A = beta.left(), C = beta.right(), B = R;
    return std::vector<P>{{dotJoin(Term::bracket(beta, B), d), 1},
                          {dotJoin(beta, Term::bracket(B, d)), -1},
                          {dotJoin(Term::bracket(B, C), Term::bracket(A, d)), -1},
                          {dotJoin(C, Term::bracket(Term::bracket(A, d), B)), 1},
                          {Term::bracket(dotJoin(C, Term::bracket(A, d)), B), -1}};
  }
  if (varietyHasLeft(variety_) && L.kind() == Term::Kind::Dot) {
    // [A*B, C] -> A*[B,C] + [A,C]*B
    Term A = L.left(), B = L.right();
    return std::vector<P>{{dotJoin(A, Term::bracket(B, R)), 1},
                          {dotJoin(Term::bracket(A, R), B), 1}};
  }
  return std::nullopt;
}

namespace {
bool isDeg2GenBracket(const Term& t) {
  return t.kind() == Term::Kind::Bracket && t.degree() == 2 &&
         t.left().kind() == Term::Kind::Gen && t.right().kind() == Term::Kind::Gen;
}
bool isDiagonalBracket(const Term& t) {
  return t.kind() == Term::Kind::Bracket && t.left() == t.right();
}
} // namespace

// First ordering violation in a pattern-normal spine. Kinds:
//   O1: misordered atom pair directly before a bracket atom (d2 rewrite)
//   O2: bracket atom followed by a misordered degree-2 bracket (d1 rewrite)
//   O3: bracket atom followed by a diagonal bracket (d1 at b=d; rationals only)
//   O4: misordered adjacent pair after a diagonal bracket atom (d2 at a=c; free swap)
// Encoded as 4*index + kind; -1 when none.
int FreeAlgebra::orderViolation(const std::vector<Term>& atoms) const {
  bool o1 = variety_ == Variety::NPlr || variety_ == Variety::AWBlr;
  bool o2 = variety_ == Variety::NPlr;
  bool o3 = variety_ == Variety::NPlr && field_.isRational();
  if (!o1) return -1;
  int m = (int)atoms.size();
  int diag = -1;
  for (int i = 0; i < m; ++i)
    if (isDiagonalBracket(atoms[i])) {
      diag = i;
      break;
    }
  for (int i = 0; i < m; ++i) {
    if (diag >= 0 && i > diag && i + 1 < m && atoms[i + 1] < atoms[i]) return 4 * i + 3;
    if (i + 2 < m && atoms[i + 2].kind() == Term::Kind::Bracket && atoms[i + 1] < atoms[i])
      return 4 * i + 0;
    if (o2 && i + 1 < m && atoms[i].kind() == Term::Kind::Bracket && isDeg2GenBracket(atoms[i + 1]) &&
        atoms[i + 1].right() < atoms[i + 1].left())
      return 4 * i + 1;
    if (o3 && i + 1 < m && atoms[i].kind() == Term::Kind::Bracket && isDiagonalBracket(atoms[i + 1]))
      return 4 * i + 2;
  }
  return -1;
}

bool FreeAlgebra::spineOrderingOk(const std::vector<Term>& atoms) const {
  return orderViolation(atoms) == -1;
}

FreeElement FreeAlgebra::normalizeTermInner(const Term& t) const {
  auto& memo = cache_->pattern[0];
  auto hit = memo.find(t);
  if (hit != memo.end()) return hit->second;
  bumpFuel();
  FreeElement out{variety_, field_, {}};
  Scalar one = Scalar::one(field_);
  switch (t.kind()) {
    case Term::Kind::Gen: out.add(t, one); break;
    case Term::Kind::Dot: {
      FreeElement l = normalizeTermInner(t.left());
      FreeElement r = normalizeTermInner(t.right());
      for (auto& [wl, cl] : l.terms)
        for (auto& [wr, cr] : r.terms) out.add(dotJoin(wl, wr), cl * cr);
      break;
    }
    case Term::Kind::Bracket: {
      FreeElement l = normalizeTermInner(t.left());
      FreeElement r = normalizeTermInner(t.right());
      for (auto& [wl, cl] : l.terms)
        for (auto& [wr, cr] : r.terms) {
          Term tb = Term::bracket(wl, wr);
          Scalar c = cl * cr;
          auto rw = patternRewriteAtRoot(tb);
          if (!rw) {
            out.add(tb, c);
          } else {
            for (auto& [u, k] : *rw) out.addScaled(normalizeTermInner(u), c * Scalar::fromLong(field_, k));
          }
        }
      break;
    }
  }
  memo.emplace(t, out);
  return out;
}

std::optional<std::vector<std::pair<Term, long>>> FreeAlgebra::rewriteOutermostOnce(
    const Term& t) const {
  using P = std::pair<Term, long>;
  if (t.kind() == Term::Kind::Gen) return std::nullopt;
  if (t.kind() == Term::Kind::Bracket) {
    if (auto r = patternRewriteAtRoot(t)) return r;
  }
  if (auto lc = rewriteOutermostOnce(t.left())) {
    std::vector<P> out;
    for (auto& [u, k] : *lc)
      out.emplace_back(
          t.kind() == Term::Kind::Dot ? dotJoin(u, t.right()) : Term::bracket(u, t.right()), k);
    return out;
  }
  if (auto rc = rewriteOutermostOnce(t.right())) {
    std::vector<P> out;
    for (auto& [u, k] : *rc)
      out.emplace_back(t.kind() == Term::Kind::Dot ? dotJoin(t.left(), u) : Term::bracket(t.left(), u),
                       k);
    return out;
  }
  return std::nullopt;
}

FreeElement FreeAlgebra::normalizeTermOuter(const Term& t) const {
  auto& memo = cache_->pattern[1];
  auto hit = memo.find(t);
  if (hit != memo.end()) return hit->second;
  bumpFuel();
  FreeElement out{variety_, field_, {}};
  auto rw = rewriteOutermostOnce(t);
  if (!rw) {
    out.add(t, Scalar::one(field_));
  } else {
    for (auto& [u, k] : *rw) out.addScaled(normalizeTermOuter(u), Scalar::fromLong(field_, k));
  }
  memo.emplace(t, out);
  return out;
}

// Ordering pass on a pattern-normal word: rewrite the first violation, then
// re-normalize the corrections (they can contain fresh bracket redexes).
FreeElement FreeAlgebra::fixOrdering(const Term& w, Strategy s) const {
  int si = s == Strategy::Innermost ? 0 : 1;
  auto& memo = cache_->full[si];
  auto hit = memo.find(w);
  if (hit != memo.end()) return hit->second;
  if (cache_->inProgress.count(w))
    fail(ErrorKind::GuardExceeded, "ordering rewrite cycle at " + w.str(gens_));
  cache_->inProgress.insert(w);
  bumpFuel();

  FreeElement out{variety_, field_, {}};
  auto atoms = spineAtoms(w);
  int v = orderViolation(atoms);
  if (v == -1) {
    out.add(w, Scalar::one(field_));
  } else {
    int i = v / 4;
    int kind = v % 4;
    Scalar one = Scalar::one(field_);
    Scalar half = field_.isRational() ? Scalar::fromRatio(field_, 1, 2) : one;
    std::vector<std::pair<Term, Scalar>> repl;
    std::vector<Term> pre(atoms.begin(), atoms.begin() + i);
    auto mk = [&](std::vector<Term> mid, const std::vector<Term>& tail) {
      std::vector<Term> all = pre;
      for (auto& a : mid) all.push_back(a);
      for (auto& a : tail) all.push_back(a);
      return spineFromAtoms(all);
    };
    if (kind == 0) {
      // A_i * A_{i+1} * [b,d] -> swap + [A_i,A_{i+1}]*b*d - [A_i,A_{i+1}]*d*b
      Term beta = atoms[i + 2];
      std::vector<Term> tail(atoms.begin() + i + 3, atoms.end());
      Term b = beta.left(), d = beta.right();
      Term br = Term::bracket(atoms[i], atoms[i + 1]);
      repl = {{mk({atoms[i + 1], atoms[i], beta}, tail), one},
              {mk({br, b, d}, tail), one},
              {mk({br, d, b}, tail), -one}};
    } else if (kind == 1) {
      // F * [g,h] with h < g:
      // [alpha,gamma]*[g,h] = -[alpha,gamma]*[h,g] - [h,gamma]*[alpha,g] - [gamma,h]*[alpha,g]
      Term F = atoms[i], S = atoms[i + 1];
      std::vector<Term> tail(atoms.begin() + i + 2, atoms.end());
      Term alpha = F.left(), gamma = F.right();
      Term g = S.left(), h = S.right();
      repl = {{mk({F, Term::bracket(h, g)}, tail), -one},
              {mk({Term::bracket(h, gamma), Term::bracket(alpha, g)}, tail), -one},
              {mk({Term::bracket(gamma, h), Term::bracket(alpha, g)}, tail), -one}};
    } else if (kind == 2) {
      // F * [T,T] -> -1/2 [T,gamma]*[alpha,T] - 1/2 [gamma,T]*[alpha,T]
      Term F = atoms[i], S = atoms[i + 1];
      std::vector<Term> tail(atoms.begin() + i + 2, atoms.end());
      Term alpha = F.left(), gamma = F.right();
      Term T = S.left();
      repl = {{mk({Term::bracket(T, gamma), Term::bracket(alpha, T)}, tail), -half},
              {mk({Term::bracket(gamma, T), Term::bracket(alpha, T)}, tail), -half}};
    } else {
      // free swap in the tail after a diagonal bracket atom
      std::vector<Term> tail(atoms.begin() + i + 2, atoms.end());
      repl = {{mk({atoms[i + 1], atoms[i]}, tail), one}};
    }
    // Rewrites can return the input word itself (diagonal cases); solve the
    // fixpoint by dividing out the self-coefficient.
    Scalar selfC = Scalar::zero(field_);
    for (auto& [u, c] : repl) {
      FreeElement pn = s == Strategy::Innermost ? normalizeTermInner(u) : normalizeTermOuter(u);
      for (auto& [pw, pc] : pn.terms) {
        if (pw == w)
          selfC += pc * c;
        else
          out.addScaled(fixOrdering(pw, s), pc * c);
      }
    }
    if (!selfC.isZero()) {
      Scalar denom = Scalar::one(field_) - selfC;
      if (denom.isZero()) fail(ErrorKind::GuardExceeded, "ordering fixpoint not solvable");
      Scalar inv = denom.inverse();
      FreeElement scaled{variety_, field_, {}};
      scaled.addScaled(out, inv);
      out = scaled;
    }
  }
  cache_->inProgress.erase(w);
  memo.emplace(w, out);
  return out;
}

FreeElement FreeAlgebra::normalize(const Term& t, Strategy s) const {
  if (t.degree() > degreeCap_)
    fail(ErrorKind::GuardExceeded, "term degree " + std::to_string(t.degree()) + " exceeds cap " +
                                       std::to_string(degreeCap_));
  Term c = canonicalizeDots(t);
  FreeElement pat = s == Strategy::Innermost ? normalizeTermInner(c) : normalizeTermOuter(c);
  FreeElement out{variety_, field_, {}};
  for (auto& [w, cw] : pat.terms) out.addScaled(fixOrdering(w, s), cw);
  return out;
}

FreeElement FreeAlgebra::normalize(const FreeElement& e, Strategy s) const {
  FreeElement out{variety_, field_, {}};
  for (auto& [t, c] : e.terms) out.addScaled(normalize(t, s), c);
  return out;
}

FreeElement FreeAlgebra::freeDot(const FreeElement& a, const FreeElement& b) const {
  if (a.variety != variety_ || b.variety != variety_)
    fail(ErrorKind::VarietyMismatch, "free dot across varieties");
  FreeElement out{variety_, field_, {}};
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) out.addScaled(normalize(Term::dot(wa, wb)), ca * cb);
  return out;
}

FreeElement FreeAlgebra::freeBracket(const FreeElement& a, const FreeElement& b) const {
  if (a.variety != variety_ || b.variety != variety_)
    fail(ErrorKind::VarietyMismatch, "free bracket across varieties");
  FreeElement out{variety_, field_, {}};
  for (auto& [wa, ca] : a.terms)
    for (auto& [wb, cb] : b.terms) out.addScaled(normalize(Term::bracket(wa, wb)), ca * cb);
  return out;
}

FreeElement FreeAlgebra::genElement(int index) const {
  FreeElement e{variety_, field_, {}};
  e.add(Term::gen(index), Scalar::one(field_));
  return e;
}

// ---------- enumeration ----------

std::vector<Term> FreeAlgebra::atomsOfDegree(int k) const {
  auto hit = cache_->atoms.find(k);
  if (hit != cache_->atoms.end()) return hit->second;
  std::vector<Term> out;
  int ng = (int)gens_.size();
  if (k == 1) {
    for (int g = 0; g < ng; ++g) out.push_back(Term::gen(g));
  } else {
    switch (variety_) {
      case Variety::NPlr:
        for (auto& a : atomsOfDegree(k - 1)) // left combs
          for (int g = 0; g < ng; ++g) out.push_back(Term::bracket(a, Term::gen(g)));
        break;
      case Variety::AWBlr:
        for (int i = 1; i < k; ++i) // arbitrary bracket trees
          for (auto& l : atomsOfDegree(i))
            for (auto& r : atomsOfDegree(k - i)) out.push_back(Term::bracket(l, r));
        break;
      case Variety::NPr:
        // [w, g] with w a single atom or a spine starting with a generator
        for (auto& w : wordsOfDegree(k - 1)) {
          auto sa = spineAtoms(w);
          if (sa.size() > 1 && sa[0].kind() == Term::Kind::Bracket) continue;
          for (int g = 0; g < ng; ++g) out.push_back(Term::bracket(w, Term::gen(g)));
        }
        break;
      case Variety::NPl:
        // [L, R]: L a generator or atom; R a generator or a spine ending in a generator
        for (int i = 1; i < k; ++i)
          for (auto& l : atomsOfDegree(i)) {
            int m = k - i;
            if (m == 1) {
              for (int g = 0; g < ng; ++g) out.push_back(Term::bracket(l, Term::gen(g)));
            } else {
              for (auto& r : wordsOfDegree(m)) {
                auto sa = spineAtoms(r);
                if (sa.size() < 2 || sa.back().kind() != Term::Kind::Gen) continue;
                out.push_back(Term::bracket(l, r));
              }
            }
          }
        break;
      case Variety::AWBl:
        for (int i = 1; i < k; ++i)
          for (auto& l : atomsOfDegree(i))
            for (auto& r : wordsOfDegree(k - i)) out.push_back(Term::bracket(l, r));
        break;
      case Variety::AWBr:
        for (int i = 1; i < k; ++i)
          for (auto& l : wordsOfDegree(i))
            for (auto& r : atomsOfDegree(k - i)) out.push_back(Term::bracket(l, r));
        break;
    }
  }
  std::sort(out.begin(), out.end());
  cache_->atoms[k] = out;
  return out;
}

std::vector<Term> FreeAlgebra::wordsOfDegree(int k) const {
  auto hit = cache_->words.find(k);
  if (hit != cache_->words.end()) return hit->second;
  std::vector<std::vector<std::vector<Term>>> byDeg(k + 1); // atom lists per degree
  byDeg[0] = {{}};
  for (int d = 1; d <= k; ++d) {
    std::vector<std::vector<Term>> lists;
    for (int i = 1; i <= d; ++i)
      for (auto& pre : byDeg[d - i])
        for (auto& a : atomsOfDegree(i)) {
          auto l = pre;
          l.push_back(a);
          lists.push_back(std::move(l));
        }
    byDeg[d] = std::move(lists);
  }
  std::vector<Term> out;
  for (auto& atoms : byDeg[k])
    if (spineOrderingOk(atoms)) out.push_back(spineFromAtoms(atoms));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  cache_->words[k] = out;
  return out;
}

std::vector<Term> FreeAlgebra::enumerateBasis(int n) const {
  if (n < 1) fail(ErrorKind::ShapeMismatch, "degree must be >= 1");
  if (n > degreeCap_) fail(ErrorKind::GuardExceeded, "degree exceeds cap");
  return wordsOfDegree(n);
}

bool FreeAlgebra::isNormalWord(const Term& t) const {
  FreeElement e = normalize(t);
  return e.terms.size() == 1 && e.terms.begin()->first == t && e.terms.begin()->second.isOne();
}

// ---------- evaluation ----------

std::vector<Scalar> interpret(const Term& t, const std::vector<std::vector<Scalar>>& phi,
                              const BiAlgebra& b) {
  switch (t.kind()) {
    case Term::Kind::Gen: return phi.at(t.genIndex());
    case Term::Kind::Dot: return b.dot(interpret(t.left(), phi, b), interpret(t.right(), phi, b));
    case Term::Kind::Bracket:
      return b.bracket(interpret(t.left(), phi, b), interpret(t.right(), phi, b));
  }
  return b.zeroVec();
}

Evaluator::Evaluator(Variety v, const std::vector<std::vector<Scalar>>& phi, const BiAlgebra& b,
                     bool checkTags)
    : variety_(v), phi_(phi), b_(b) {
  if (checkTags && !hasTag(b, varietyTag(v)))
    fail(ErrorKind::VarietyMismatch, "target algebra does not carry the variety's tags");
}

std::vector<Scalar> Evaluator::eval(const Term& t) const { return interpret(t, phi_, b_); }

std::vector<Scalar> Evaluator::eval(const FreeElement& e) const {
  std::vector<Scalar> acc = b_.zeroVec();
  for (auto& [t, c] : e.terms) {
    std::vector<Scalar> v = eval(t);
    for (int i = 0; i < (int)acc.size(); ++i) acc[i] += v[i] * c;
  }
  return acc;
}

TruncatedFree truncatedFreeAlgebra(Variety v, const Field& f, const std::vector<std::string>& gens,
                                   int maxDegree) {
  if (maxDegree < 1) fail(ErrorKind::ShapeMismatch, "maxDegree must be >= 1");
  FreeAlgebra fa(v, f, gens);
  std::vector<Term> basis;
  for (int d = 1; d <= maxDegree; ++d)
    for (auto& w : fa.enumerateBasis(d)) basis.push_back(w);
  std::map<Term, int> index;
  std::vector<std::string> names;
  for (int i = 0; i < (int)basis.size(); ++i) {
    index[basis[i]] = i;
    names.push_back(basis[i].str(gens));
  }
  BiAlgebra alg(f, (int)basis.size(), names);
  for (int i = 0; i < (int)basis.size(); ++i)
    for (int j = 0; j < (int)basis.size(); ++j) {
      if (basis[i].degree() + basis[j].degree() > maxDegree) continue;
      FreeElement d = fa.normalize(Term::dot(basis[i], basis[j]));
      for (auto& [w, c] : d.terms) alg.setDot(i, j, index.at(w), c);
      FreeElement br = fa.normalize(Term::bracket(basis[i], basis[j]));
      for (auto& [w, c] : br.terms) alg.setBracket(i, j, index.at(w), c);
    }
  return {alg, basis};
}

// ---------- free-basis reports ----------

namespace {

void letterSequences(const std::vector<std::vector<Term>>& lettersByDeg, int total,
                     std::vector<Term>& cur, std::vector<std::vector<Term>>& out) {
  if (total == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int d = 1; d <= total && d < (int)lettersByDeg.size(); ++d)
    for (auto& l : lettersByDeg[d]) {
      cur.push_back(l);
      letterSequences(lettersByDeg, total - d, cur, out);
      cur.pop_back();
    }
}

bool containsBadNPlSubBracket(const Term& t) {
  // [x,[y,z]] anywhere, or a bracket whose right side starts with a bracket atom
  if (t.kind() == Term::Kind::Gen) return false;
  if (t.kind() == Term::Kind::Bracket) {
    const Term r = t.right();
    if (r.kind() == Term::Kind::Bracket) return true;
    if (r.kind() == Term::Kind::Dot && r.left().kind() == Term::Kind::Bracket) return true;
  }
  return containsBadNPlSubBracket(t.left()) || containsBadNPlSubBracket(t.right());
}

bool containsRightBracket(const Term& t) {
  // any sub-bracket of the shape [a,[b,c]]
  if (t.kind() == Term::Kind::Gen) return false;
  if (t.kind() == Term::Kind::Bracket && t.right().kind() == Term::Kind::Bracket) return true;
  return containsRightBracket(t.left()) || containsRightBracket(t.right());
}

bool isPureGenMonomial(const Term& t) {
  for (auto& a : spineAtoms(t))
    if (a.kind() != Term::Kind::Gen) return false;
  return true;
}

// all canonical formal terms / bracket-rooted formal terms of a given degree
void formalTermsOfDegree(int d, int ng, std::map<int, std::vector<Term>>& termsMemo,
                         std::map<int, std::vector<Term>>& bracketMemo);

void formalBracketsOfDegree(int d, int ng, std::map<int, std::vector<Term>>& termsMemo,
                            std::map<int, std::vector<Term>>& bracketMemo) {
  if (bracketMemo.count(d)) return;
  std::vector<Term> out;
  if (d >= 2)
    for (int i = 1; i < d; ++i) {
      formalTermsOfDegree(i, ng, termsMemo, bracketMemo);
      formalTermsOfDegree(d - i, ng, termsMemo, bracketMemo);
      for (auto& l : termsMemo[i])
        for (auto& r : termsMemo[d - i]) out.push_back(Term::bracket(l, r));
    }
  std::sort(out.begin(), out.end());
  bracketMemo[d] = std::move(out);
}

void formalTermsOfDegree(int d, int ng, std::map<int, std::vector<Term>>& termsMemo,
                         std::map<int, std::vector<Term>>& bracketMemo) {
  if (termsMemo.count(d)) return;
  std::vector<Term> atoms;
  if (d == 1) {
    for (int g = 0; g < ng; ++g) atoms.push_back(Term::gen(g));
    termsMemo[1] = atoms;
    return;
  }
  // spines over atoms (generators and formal brackets)
  std::vector<std::vector<std::vector<Term>>> byDeg(d + 1);
  byDeg[0] = {{}};
  auto atomsOf = [&](int k) {
    std::vector<Term> a;
    if (k == 1)
      for (int g = 0; g < ng; ++g) a.push_back(Term::gen(g));
    formalBracketsOfDegree(k, ng, termsMemo, bracketMemo);
    for (auto& b : bracketMemo[k]) a.push_back(b);
    return a;
  };
  for (int k = 1; k <= d; ++k) {
    std::vector<std::vector<Term>> lists;
    for (int i = 1; i <= k; ++i)
      for (auto& pre : byDeg[k - i])
        for (auto& a : atomsOf(i)) {
          auto l = pre;
          l.push_back(a);
          lists.push_back(std::move(l));
        }
    byDeg[k] = std::move(lists);
  }
  std::vector<Term> out;
  for (auto& lst : byDeg[d]) out.push_back(spineFromAtoms(lst));
  std::sort(out.begin(), out.end());
  termsMemo[d] = std::move(out);
}

// The eight excluded [[x,y],z]*t shapes at four pairwise distinct generators,
// read as index patterns over the sorted generators (a,b,c,d). Inactive on
// fewer than four generators; the rank computation is the ground truth.
bool isExcludedNPrLetter(const Term& t) {
  auto atoms = spineAtoms(t);
  if (atoms.size() != 2) return false;
  const Term& br = atoms[0];
  if (br.kind() != Term::Kind::Bracket || br.degree() != 3) return false;
  if (br.left().kind() != Term::Kind::Bracket) return false;
  const Term x = br.left().left(), y = br.left().right(), z = br.right(), w = atoms[1];
  if (x.kind() != Term::Kind::Gen || y.kind() != Term::Kind::Gen || z.kind() != Term::Kind::Gen ||
      w.kind() != Term::Kind::Gen)
    return false;
  int q[4] = {x.genIndex(), y.genIndex(), z.genIndex(), w.genIndex()};
  std::vector<int> sorted(q, q + 4);
  std::sort(sorted.begin(), sorted.end());
  if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto role = [&](int g) { return (int)(std::find(sorted.begin(), sorted.end(), g) - sorted.begin()); };
  const int a = 0, b = 1, c = 2, d = 3;
  int pat[4] = {role(q[0]), role(q[1]), role(q[2]), role(q[3])};
  const int excluded[8][4] = {{a, b, c, d}, {a, c, b, d}, {a, b, d, c}, {d, a, b, c},
                              {d, b, a, c}, {c, a, d, b}, {c, d, a, b}, {c, d, b, a}};
  for (auto& e : excluded)
    if (pat[0] == e[0] && pat[1] == e[1] && pat[2] == e[2] && pat[3] == e[3]) return true;
  return false;
}

} // namespace

FreeBasisReport underlyingFreeBasisReport(Variety v, const Field& f,
                                          const std::vector<std::string>& gens, Underlying kind,
                                          int maxDegree) {
  if (v == Variety::NPlr || v == Variety::AWBlr)
    fail(ErrorKind::VarietyMismatch, "underlying free-basis check applies to one-sided varieties");
  if (kind == Underlying::Leibniz && (v == Variety::AWBl || v == Variety::AWBr))
    fail(ErrorKind::VarietyMismatch, "Leibniz underlying claim applies to NP varieties");
  FreeAlgebra fa(v, f, gens);
  FreeBasisReport rep{v, kind, {}, true};

  std::vector<std::vector<Term>> letters(maxDegree + 1);
  if (kind == Underlying::Assoc) {
    // generators and admissible bracket atoms
    for (int d = 1; d <= maxDegree; ++d)
      for (auto& w : fa.enumerateBasis(d))
        if (w.kind() == Term::Kind::Gen || w.kind() == Term::Kind::Bracket) letters[d].push_back(w);
  } else {
    // Letters are generator monomials plus monomials carrying one formal
    // bracket word (last position for NPl, first for NPr), the bracket free of
    // the printed forbidden sub-shapes. Distinct formal words can normalize to
    // the same element; duplicates are dropped by element.
    std::map<int, std::vector<Term>> termsMemo, bracketMemo;
    int ng = (int)gens.size();
    for (int d = 1; d <= maxDegree; ++d) {
      std::vector<Term> cand;
      // pure generator monomials
      formalTermsOfDegree(d, ng, termsMemo, bracketMemo);
      for (auto& t : termsMemo[d])
        if (isPureGenMonomial(t)) cand.push_back(t);
      for (int bd = 2; bd <= d; ++bd) {
        formalBracketsOfDegree(bd, ng, termsMemo, bracketMemo);
        std::vector<Term> monos;
        if (bd < d) {
          formalTermsOfDegree(d - bd, ng, termsMemo, bracketMemo);
          for (auto& m : termsMemo[d - bd])
            if (isPureGenMonomial(m)) monos.push_back(m);
        }
        for (auto& b : bracketMemo[bd]) {
          if (v == Variety::NPl && containsBadNPlSubBracket(b)) continue;
          if (v == Variety::NPr && containsRightBracket(b)) continue;
          for (auto& m : monos) {
            Term t = v == Variety::NPl ? Term::dot(m, b) : Term::dot(b, m);
            if (v == Variety::NPr && isExcludedNPrLetter(canonicalizeDots(t))) continue;
            cand.push_back(t);
          }
        }
      }
      // deduplicate by normalized element
      std::vector<FreeElement> seen;
      for (auto& t : cand) {
        FreeElement e = fa.normalize(t);
        if (e.isZero()) continue;
        bool dup = false;
        for (auto& s : seen)
          if (s == e) {
            dup = true;
            break;
          }
        if (!dup) {
          seen.push_back(e);
          letters[d].push_back(t);
        }
      }
    }
  }

  for (int d = 1; d <= maxDegree; ++d) {
    std::vector<Term> basis = fa.enumerateBasis(d);
    std::map<Term, int> index;
    for (int i = 0; i < (int)basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<Term>> seqs;
    std::vector<Term> cur;
    letterSequences(letters, d, cur, seqs);
    std::vector<SVec> rows;
    for (auto& seq : seqs) {
      Term t = seq[0];
      for (size_t i = 1; i < seq.size(); ++i)
        t = kind == Underlying::Assoc ? Term::dot(t, seq[i]) : Term::bracket(t, seq[i]);
      FreeElement e = fa.normalize(t);
      SVec row;
      for (auto& [w, c] : e.terms) {
        auto it = index.find(w);
        if (it == index.end()) fail(ErrorKind::ShapeMismatch, "normal form outside enumerated basis");
        row.emplace_back(it->second, c);
      }
      rows.push_back(std::move(row));
    }
    Matrix m = Matrix::fromRows(f, (int)basis.size(), rows);
    int r = rank(m);
    FreeBasisDegreeReport dr;
    dr.degree = d;
    dr.candidateWords = (int)seqs.size();
    dr.normalWords = (int)basis.size();
    dr.rank = r;
    dr.spans = r == (int)basis.size();
    dr.independent = r == (int)seqs.size();
    rep.ok = rep.ok && dr.spans && dr.independent;
    rep.perDegree.push_back(dr);
  }
  return rep;
}

FreeElement dependenceWitness(Variety v, const Field& f) {
  if (v != Variety::NPlr && v != Variety::AWBlr)
    fail(ErrorKind::VarietyMismatch, "dependence witness applies to two-sided varieties");
  FreeAlgebra fa(v, f, {"a", "b", "c", "d"});
  Term a = Term::gen(0), b = Term::gen(1), c = Term::gen(2), d = Term::gen(3);
  // [a*b, c*d] expanded by the left compatibility identity first ...
  FreeElement left{v, f, {}};
  left.addScaled(fa.normalize(Term::dot(a, Term::bracket(b, Term::dot(c, d)))), Scalar::one(f));
  left.addScaled(fa.normalize(Term::dot(Term::bracket(a, Term::dot(c, d)), b)), Scalar::one(f));
  // ... minus the right-identity-first expansion; the difference is a relation
  // among retained words.
  FreeElement right{v, f, {}};
  right.addScaled(fa.normalize(Term::dot(c, Term::bracket(Term::dot(a, b), d))), Scalar::one(f));
  right.addScaled(fa.normalize(Term::dot(Term::bracket(Term::dot(a, b), c), d)), Scalar::one(f));
  FreeElement out = left;
  out.addScaled(right, -Scalar::one(f));
  return out;
}

} // namespace npb
