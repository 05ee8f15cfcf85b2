#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "npb/field.hpp"

namespace npb {

// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SVec = std::vector<std::pair<int, Scalar>>;

namespace svec {
SVec scaled(const SVec& v, const Scalar& c);
SVec axpy(const SVec& x, const Scalar& c, const SVec& y); // x + c*y
Scalar dot(const SVec& a, const SVec& b, const Field& f);
SVec fromDense(const std::vector<Scalar>& v);
std::vector<Scalar> toDense(const SVec& v, int n, const Field& f);
bool isZero(const SVec& v);
} // namespace svec

enum class PivotRule { ShortestColumn, LowestIndex };

// Sparse matrix over an exact field, row-major.
class Matrix {
public:
  Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Matrix(const Field& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols), data_(rows) {}

  static Matrix identity(const Field& f, int n);
  static Matrix fromRows(const Field& f, int cols, const std::vector<SVec>& rows);
  static Matrix fromDense(const Field& f, const std::vector<std::vector<Scalar>>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  void set(int i, int j, const Scalar& v);
  void add(int i, int j, const Scalar& v);
  Scalar get(int i, int j) const;
  const SVec& row(int i) const { return data_[i]; }
  void setRow(int i, SVec r) { data_[i] = std::move(r); }
  long long nnz() const;
  bool isZero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;

  // Copies `sub` into this matrix with upper-left corner (r0, c0).
  void insertBlock(int r0, int c0, const Matrix& sub);

  std::vector<Scalar> applyDense(const std::vector<Scalar>& x) const; // this * x
  SVec apply(const SVec& x) const;

private:
  Field field_;
  int rows_, cols_;
  std::vector<SVec> data_;
};

// Reduced echelon data for one matrix; reusable for solving and membership.
class Echelon {
public:
  Echelon(const Field& f, int cols, PivotRule rule = PivotRule::ShortestColumn)
      : field_(f), cols_(cols), rule_(rule) {}
  // maxPivotCol < cols restricts pivot selection to columns [0, maxPivotCol);
  // rows supported only on excluded columns are kept aside as leftovers.
  explicit Echelon(const Matrix& m, PivotRule rule = PivotRule::ShortestColumn, int maxPivotCol = -1);
  bool hasLeftover() const { return leftover_; }

  // Reduces v against the rows; returns the residual (zero iff v in the row span).
  SVec reduce(const SVec& v) const;
  // reduce + when the residual is nonzero, normalize it and add it as a new row.
  // Returns true when the span grew.
  bool insert(SVec v);

  int rank() const { return (int)rows_.size(); }
  int cols() const { return cols_; }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivotCols_; }
  bool contains(const SVec& v) const { return svec::isZero(reduce(v)); }

  // Coordinates of v over the stored rows (v must lie in the span).
  std::vector<Scalar> coordinates(const SVec& v) const;

private:
  Field field_;
  int cols_;
  PivotRule rule_;
  std::vector<SVec> rows_;      // each has a 1 at its pivot, 0 in other pivot columns
  std::vector<int> pivotCols_;  // pivotCols_[k] = pivot column of rows_[k]
  std::vector<int> colToRow_;   // column -> row index, -1 when not a pivot column
  bool leftover_ = false;
  int pivotRowOf(int col) const;
  void recordPivot(int col);
  void buildFrom(std::vector<SVec> work, int maxPivotCol);
};

int rank(const Matrix& m, PivotRule rule = PivotRule::ShortestColumn);

// Basis of the null space {x : m x = 0}, deterministic order.
std::vector<SVec> kernelBasis(const Matrix& m, PivotRule rule = PivotRule::ShortestColumn);

// One solution x of m x = b, if any.
std::optional<SVec> solve(const Matrix& m, const SVec& b, PivotRule rule = PivotRule::ShortestColumn);

// Subspace of an ambient coordinate space, kept as a reduced basis.
class Subspace {
public:
  Subspace(const Field& f, int ambientDim) : ambient_(ambientDim), ech_(f, ambientDim) {}
  static Subspace fromVectors(const Field& f, int ambientDim, const std::vector<SVec>& gens);
  static Subspace full(const Field& f, int ambientDim);

  int ambientDim() const { return ambient_; }
  int dim() const { return ech_.rank(); }
  bool contains(const SVec& v) const { return ech_.contains(v); }
  bool containsSubspace(const Subspace& other) const;
  bool insert(const SVec& v) { return ech_.insert(v); }
  const std::vector<SVec>& basis() const { return ech_.rows(); }
  const Echelon& echelon() const { return ech_; }

private:
  int ambient_;
  Echelon ech_;
};

// dim(outer) - dim(inner); requires inner to be contained in outer.
int quotientDim(const Subspace& inner, const Subspace& outer);

} // namespace npb
