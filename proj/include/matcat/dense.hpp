#pragma once

#include <optional>
#include <vector>

#include "matcat/scalar.hpp"

namespace matcat {

using Vec = std::vector<Scalar>;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  DenseMatrix transpose() const;
  bool is_zero() const;
  Vec apply(const Vec& v) const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced row echelon form in place; returns pivot columns.
// Pivot choice: first nonzero entry at or below the current row.
std::vector<std::size_t> rref(DenseMatrix& a);
std::size_t rank(DenseMatrix a);
// Basis of {v : a v = 0}, one vector per free column, read off the RREF.
std::vector<Vec> nullspace(const DenseMatrix& a);
DenseMatrix inverse(const DenseMatrix& a);
std::optional<DenseMatrix> try_inverse(const DenseMatrix& a);
// Some x with a x = b, or nullopt.
std::optional<Vec> solve(const DenseMatrix& a, const Vec& b);
// Kronecker product with the first argument as the outer index.
DenseMatrix kron(const DenseMatrix& outer, const DenseMatrix& inner);
DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix vconcat(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b);

// Incremental row space used when picking complements.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  // Adds v if it is independent of the current span; returns whether it was.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  Vec reduce(Vec v) const;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace matcat
