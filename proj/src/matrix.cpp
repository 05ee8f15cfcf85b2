#include "npb/matrix.hpp"

#include <algorithm>
#include <map>

namespace npb {

namespace svec {

SVec scaled(const SVec& v, const Scalar& c) {
  SVec r;
  if (c.isZero()) return r;
  r.reserve(v.size());
  for (auto& [i, s] : v) {
    Scalar t = s * c;
    if (!t.isZero()) r.emplace_back(i, t);
  }
  return r;
}

SVec axpy(const SVec& x, const Scalar& c, const SVec& y) {
  SVec r;
  if (c.isZero()) return x;
  r.reserve(x.size() + y.size());
  size_t a = 0, b = 0;
  while (a < x.size() || b < y.size()) {
    if (b == y.size() || (a < x.size() && x[a].first < y[b].first)) {
      r.push_back(x[a++]);
    } else if (a == x.size() || y[b].first < x[a].first) {
      Scalar t = y[b].second * c;
      if (!t.isZero()) r.emplace_back(y[b].first, t);
      ++b;
    } else {
      Scalar t = x[a].second + y[b].second * c;
      if (!t.isZero()) r.emplace_back(x[a].first, t);
      ++a;
      ++b;
    }
  }
  return r;
}

Scalar dot(const SVec& a, const SVec& b, const Field& f) {
  Scalar acc = Scalar::zero(f);
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else {
      acc += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return acc;
}

SVec fromDense(const std::vector<Scalar>& v) {
  SVec r;
  for (int i = 0; i < (int)v.size(); ++i)
    if (!v[i].isZero()) r.emplace_back(i, v[i]);
  return r;
}

std::vector<Scalar> toDense(const SVec& v, int n, const Field& f) {
  std::vector<Scalar> r(n, Scalar::zero(f));
  for (auto& [i, s] : v) r[i] = s;
  return r;
}

bool isZero(const SVec& v) { return v.empty(); }

} // namespace svec

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Scalar::one(f));
  return m;
}

Matrix Matrix::fromRows(const Field& f, int cols, const std::vector<SVec>& rows) {
  Matrix m(f, (int)rows.size(), cols);
  m.data_ = rows;
  return m;
}

Matrix Matrix::fromDense(const Field& f, const std::vector<std::vector<Scalar>>& d) {
  Matrix m(f, (int)d.size(), d.empty() ? 0 : (int)d[0].size());
  for (int i = 0; i < m.rows_; ++i) m.data_[i] = svec::fromDense(d[i]);
  return m;
}

void Matrix::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail(ErrorKind::ShapeMismatch, "matrix index out of range");
  auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == j) {
    if (v.isZero())
      row.erase(it);
    else
      it->second = v;
  } else if (!v.isZero()) {
    row.insert(it, {j, v});
  }
}

void Matrix::add(int i, int j, const Scalar& v) {
  if (v.isZero()) return;
  auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == j) {
    Scalar t = it->second + v;
    if (t.isZero())
      row.erase(it);
    else
      it->second = t;
  } else {
    row.insert(it, {j, v});
  }
}

Scalar Matrix::get(int i, int j) const {
  const auto& row = data_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == j) return it->second;
  return Scalar::zero(field_);
}

long long Matrix::nnz() const {
  long long n = 0;
  for (auto& r : data_) n += (long long)r.size();
  return n;
}

bool Matrix::isZero() const { return nnz() == 0; }

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ShapeMismatch, "matrix add shape mismatch");
  Matrix m(field_, rows_, cols_);
  Scalar one = Scalar::one(field_);
  for (int i = 0; i < rows_; ++i) m.data_[i] = svec::axpy(data_[i], one, o.data_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::ShapeMismatch, "matrix sub shape mismatch");
  Matrix m(field_, rows_, cols_);
  Scalar negOne = -Scalar::one(field_);
  for (int i = 0; i < rows_; ++i) m.data_[i] = svec::axpy(data_[i], negOne, o.data_[i]);
  return m;
}

Matrix Matrix::operator-() const { return scaled(-Scalar::one(field_)); }

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i) m.data_[i] = svec::scaled(data_[i], c);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorKind::ShapeMismatch, "matrix mul shape mismatch");
  Matrix m(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    SVec acc;
    for (auto& [k, v] : data_[i]) acc = svec::axpy(acc, v, o.data_[k]);
    m.data_[i] = std::move(acc);
  }
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  return data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) m.data_[j].emplace_back(i, v);
  return m;
}

void Matrix::insertBlock(int r0, int c0, const Matrix& sub) {
  if (r0 + sub.rows_ > rows_ || c0 + sub.cols_ > cols_) fail(ErrorKind::ShapeMismatch, "block out of range");
  for (int i = 0; i < sub.rows_; ++i)
    for (auto& [j, v] : sub.data_[i]) add(r0 + i, c0 + j, v);
}

std::vector<Scalar> Matrix::applyDense(const std::vector<Scalar>& x) const {
  if ((int)x.size() != cols_) fail(ErrorKind::ShapeMismatch, "apply shape mismatch");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) y[i] += v * x[j];
  return y;
}

SVec Matrix::apply(const SVec& x) const {
  SVec y;
  for (int i = 0; i < rows_; ++i) {
    Scalar s = svec::dot(data_[i], x, field_);
    if (!s.isZero()) y.emplace_back(i, s);
  }
  return y;
}

// ---------- echelon ----------

Echelon::Echelon(const Matrix& m, PivotRule rule, int maxPivotCol)
    : field_(m.field()), cols_(m.cols()), rule_(rule) {
  std::vector<SVec> work;
  work.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) work.push_back(m.row(i));
  buildFrom(std::move(work), maxPivotCol < 0 ? cols_ : maxPivotCol);
}

void Echelon::buildFrom(std::vector<SVec> work, int maxPivotCol) {
  // Deterministic elimination. Pivot column per rule_: structurally shortest
  // column first (ties to the lowest index), or plain lowest index.
  std::vector<bool> used(work.size(), false);
  while (true) {
    std::vector<int> colCount(cols_, 0);
    for (size_t r = 0; r < work.size(); ++r) {
      if (used[r]) continue;
      for (auto& [j, v] : work[r]) ++colCount[j];
    }
    int pcol = -1;
    if (rule_ == PivotRule::ShortestColumn) {
      int best = -1;
      for (int j = 0; j < maxPivotCol; ++j)
        if (colCount[j] > 0 && (best == -1 || colCount[j] < best)) {
          best = colCount[j];
          pcol = j;
        }
    } else {
      for (int j = 0; j < maxPivotCol; ++j)
        if (colCount[j] > 0) {
          pcol = j;
          break;
        }
    }
    if (pcol == -1) {
      for (size_t r = 0; r < work.size(); ++r)
        if (!used[r] && !work[r].empty()) leftover_ = true;
      break;
    }
    // pivot row: fewest nonzeros, ties to lowest index
    int prow = -1;
    size_t bestLen = 0;
    for (size_t r = 0; r < work.size(); ++r) {
      if (used[r]) continue;
      bool has = std::any_of(work[r].begin(), work[r].end(), [&](auto& e) { return e.first == pcol; });
      if (!has) continue;
      if (prow == -1 || work[r].size() < bestLen) {
        prow = (int)r;
        bestLen = work[r].size();
      }
    }
    used[prow] = true;
    SVec piv = work[prow];
    Scalar pv = Scalar::zero(field_);
    for (auto& [j, v] : piv)
      if (j == pcol) pv = v;
    piv = svec::scaled(piv, pv.inverse());
    // clear pcol from existing reduced rows and from remaining work rows
    for (size_t k = 0; k < rows_.size(); ++k) {
      Scalar c = Scalar::zero(field_);
      for (auto& [j, v] : rows_[k])
        if (j == pcol) c = v;
      if (!c.isZero()) rows_[k] = svec::axpy(rows_[k], -c, piv);
    }
    for (size_t r = 0; r < work.size(); ++r) {
      if (used[r]) continue;
      Scalar c = Scalar::zero(field_);
      for (auto& [j, v] : work[r])
        if (j == pcol) c = v;
      if (!c.isZero()) work[r] = svec::axpy(work[r], -c, piv);
    }
    rows_.push_back(std::move(piv));
    recordPivot(pcol);
  }
}

int Echelon::pivotRowOf(int col) const {
  if (colToRow_.empty() || col >= (int)colToRow_.size()) return -1;
  return colToRow_[col];
}

void Echelon::recordPivot(int col) {
  if (colToRow_.empty()) colToRow_.assign(cols_ + 1, -1);
  colToRow_[col] = (int)pivotCols_.size();
  pivotCols_.push_back(col);
}

SVec Echelon::reduce(const SVec& v) const {
  // Rows are fully reduced (each pivot column appears in exactly one row), so a
  // single pass over v's pivot entries eliminates them all.
  std::vector<std::pair<int, Scalar>> hits;
  for (auto& [j, val] : v) {
    int k = pivotRowOf(j);
    if (k >= 0) hits.emplace_back(k, val);
  }
  SVec r = v;
  for (auto& [k, val] : hits) r = svec::axpy(r, -val, rows_[k]);
  return r;
}

bool Echelon::insert(SVec v) {
  SVec r = reduce(v);
  if (r.empty()) return false;
  // pivot per rule: shortest-column has no meaning for a single row; take lowest index
  int pcol = r[0].first;
  Scalar pv = r[0].second;
  r = svec::scaled(r, pv.inverse());
  for (size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = Scalar::zero(field_);
    for (auto& [j, val] : rows_[k])
      if (j == pcol) c = val;
    if (!c.isZero()) rows_[k] = svec::axpy(rows_[k], -c, r);
  }
  rows_.push_back(std::move(r));
  recordPivot(pcol);
  return true;
}

std::vector<Scalar> Echelon::coordinates(const SVec& v) const {
  std::vector<Scalar> coef(rows_.size(), Scalar::zero(field_));
  std::vector<std::pair<int, Scalar>> hits;
  for (auto& [j, val] : v) {
    int k = pivotRowOf(j);
    if (k >= 0) hits.emplace_back(k, val);
  }
  SVec r = v;
  for (auto& [k, val] : hits) {
    coef[k] += val;
    r = svec::axpy(r, -val, rows_[k]);
  }
  if (!r.empty()) fail(ErrorKind::NotContained, "vector not in span");
  return coef;
}

int rank(const Matrix& m, PivotRule rule) { return Echelon(m, rule).rank(); }

std::vector<SVec> kernelBasis(const Matrix& m, PivotRule rule) {
  Echelon e(m, rule);
  std::vector<bool> isPivot(m.cols(), false);
  for (int c : e.pivots()) isPivot[c] = true;
  std::vector<SVec> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (isPivot[j]) continue;
    // x_j = 1, pivot coordinates adjust to cancel
    std::map<int, Scalar> entries;
    entries[j] = Scalar::one(m.field());
    for (size_t k = 0; k < e.rows().size(); ++k) {
      Scalar c = Scalar::zero(m.field());
      for (auto& [jj, v] : e.rows()[k])
        if (jj == j) c = v;
      if (!c.isZero()) entries[e.pivots()[k]] = -c;
    }
    SVec v;
    for (auto& [idx, s] : entries)
      if (!s.isZero()) v.emplace_back(idx, s);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<SVec> solve(const Matrix& m, const SVec& b, PivotRule rule) {
  // Echelonize [m^T rows are equations]: work with the augmented system.
  // Rows of the augmented matrix are (row_i of m | b_i) viewed as equations over x.
  int n = m.cols();
  Matrix aug(m.field(), m.rows(), n + 1);
  for (int i = 0; i < m.rows(); ++i) {
    SVec r = m.row(i);
    aug.setRow(i, r);
  }
  for (auto& [i, v] : b) aug.add(i, n, v);
  Echelon e(aug, rule, n); // never pivot in the augmented column
  // inconsistent iff some eliminated row is supported only on the augmented column
  if (e.hasLeftover()) return std::nullopt;
  // x: free vars = 0, pivot var of each row = -(augmented entry) ... careful with sign:
  // each reduced row is sum_j a_j x_j + a_n * (-1) ... we stored b in column n as +b.
  // Equation: sum_j a_j x_j = b_i originally; after reduction rows are combos of
  // (a | b). A reduced row r with pivot col jp (< n) says x_jp + sum_free a_j x_j - ... = ?
  // Setting free vars to 0: x_jp = r[n] where the augmented entry keeps the RHS.
  // We stored the system as (a | b) with equations a x = b, i.e. (a | -b) (x,1)^T = 0
  // would be homogeneous. Using (a | b): row combos preserve (a | b) pairing, so a
  // reduced row (r | c) still means r x = c.
  SVec x;
  std::map<int, Scalar> xs;
  for (size_t k = 0; k < e.pivots().size(); ++k) {
    int jp = e.pivots()[k];
    Scalar rhs = Scalar::zero(m.field());
    for (auto& [j, v] : e.rows()[k])
      if (j == n) rhs = v;
    // row: x_jp + sum_{free j} v_j x_j = rhs; free vars zero
    xs[jp] = rhs;
  }
  for (auto& [idx, s] : xs)
    if (!s.isZero()) x.emplace_back(idx, s);
  // verify (cheap at our sizes, guards against misuse)
  SVec chk = m.apply(x);
  if (!(chk == b)) return std::nullopt;
  return x;
}

Subspace Subspace::fromVectors(const Field& f, int ambientDim, const std::vector<SVec>& gens) {
  Subspace s(f, ambientDim);
  for (auto& g : gens) s.insert(g);
  return s;
}

Subspace Subspace::full(const Field& f, int ambientDim) {
  Subspace s(f, ambientDim);
  for (int i = 0; i < ambientDim; ++i) s.insert({{i, Scalar::one(f)}});
  return s;
}

bool Subspace::containsSubspace(const Subspace& other) const {
  for (auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

int quotientDim(const Subspace& inner, const Subspace& outer) {
  if (inner.ambientDim() != outer.ambientDim()) fail(ErrorKind::ShapeMismatch, "ambient dims differ");
  if (!outer.containsSubspace(inner)) fail(ErrorKind::NotContained, "inner subspace not contained in outer");
  return outer.dim() - inner.dim();
}

} // namespace npb
