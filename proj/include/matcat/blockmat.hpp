#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matcat/algebra.hpp"
#include "matcat/dense.hpp"
#include "matcat/fusion.hpp"

namespace matcat {

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plain grid of algebra elements with no type attached.
class AlgMatrix {
 public:
  AlgMatrix() = default;
  AlgMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  AlgElement& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const AlgElement& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  bool is_zero() const;

  static AlgMatrix mul(const GradedAlgebra& a, const AlgMatrix& x, const AlgMatrix& y);
  // scalar matrices acting on either side
  static AlgMatrix lmul(const DenseMatrix& p, const AlgMatrix& x);
  static AlgMatrix rmul(const AlgMatrix& x, const DenseMatrix& p);
  // entries of a scalar matrix times the unit of A
  static AlgMatrix from_scalar(const GradedAlgebra& a, const DenseMatrix& p);

  AlgMatrix& operator+=(const AlgMatrix& o);
  AlgMatrix& operator-=(const AlgMatrix& o);
  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<AlgElement> e_;
};

// An (m,s)-type matrix over A: row block i has m_i rows, column block j has s_j
// columns, entries of block (i,j) lie in e_i A e_j. A zero row (column) type is
// stored as a single zero row (column).
class BlockMatrix {
 public:
  BlockMatrix() = default;
  BlockMatrix(AlgebraPtr alg, ObjVec rt, ObjVec ct);  // zero matrix

  static BlockMatrix zero(AlgebraPtr alg, const ObjVec& m, const ObjVec& s) { return {std::move(alg), m, s}; }
  static BlockMatrix identity(AlgebraPtr alg, const ObjVec& m);
  // 1x1 matrix of type (e_i, e_j) holding a homogeneous element of e_i A e_j
  static BlockMatrix element(AlgebraPtr alg, int i, int j, const AlgElement& x);
  static BlockMatrix basis(AlgebraPtr alg, int p);
  // Checks shape and grades; throws TypeError.
  static BlockMatrix from_raw(AlgebraPtr alg, ObjVec m, ObjVec s, AlgMatrix raw);

  const AlgebraPtr& algebra() const { return alg_; }
  const GradedAlgebra& alg() const { return *alg_; }
  const ObjVec& row_type() const { return rt_; }
  const ObjVec& col_type() const { return ct_; }
  std::size_t rows() const { return raw_.rows(); }
  std::size_t cols() const { return raw_.cols(); }
  const AlgMatrix& raw() const { return raw_; }
  const AlgElement& at(std::size_t r, std::size_t c) const { return raw_(r, c); }
  void set(std::size_t r, std::size_t c, const AlgElement& x);  // grade-checked
  int row_grade(std::size_t r) const { return rg_.empty() ? -1 : rg_[r]; }
  int col_grade(std::size_t c) const { return cg_.empty() ? -1 : cg_[c]; }
  bool is_zero() const { return raw_.is_zero(); }
  bool is_square() const { return rt_ == ct_; }

  // Block (i,j) as an m_i x s_j grid; empty if either is 0.
  AlgMatrix block(int i, int j) const;
  std::optional<std::string> grade_violation() const;

  friend BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y);
  friend BlockMatrix operator+(const BlockMatrix& x, const BlockMatrix& y);
  friend BlockMatrix operator-(const BlockMatrix& x, const BlockMatrix& y);
  friend BlockMatrix operator*(const Scalar& s, const BlockMatrix& x);
  friend bool operator==(const BlockMatrix& x, const BlockMatrix& y);
  friend bool operator!=(const BlockMatrix& x, const BlockMatrix& y) { return !(x == y); }

 private:
  void init_grades();

  AlgebraPtr alg_;
  ObjVec rt_, ct_;
  std::vector<int> rg_, cg_;
  AlgMatrix raw_;
};

// Offsets of each index block inside a type: off[i] = m_0 + ... + m_{i-1}.
std::vector<std::int64_t> offsets(const ObjVec& m);
// Index grade of each position of the type, in order.
std::vector<int> grades_of(const ObjVec& m);

// Y^m_{i,k}: 1 x |m| row, e_i at position off_i + k (0-based i,k).
BlockMatrix selector_row(const AlgebraPtr& alg, const ObjVec& m, int i, int k);
// X^m_{i,k}: the column counterpart.
BlockMatrix selector_col(const AlgebraPtr& alg, const ObjVec& m, int i, int k);

BlockMatrix vstack(const BlockMatrix& x, const BlockMatrix& y);  // X ⊕̲ Y
BlockMatrix hstack(const BlockMatrix& x, const BlockMatrix& y);  // X ⊕̄ Y
BlockMatrix pi_rearrange(const std::vector<std::vector<BlockMatrix>>& grid);

// P_{m_1..m_r} by the recursive definition; 1x1 zero if all types are zero.
DenseMatrix perm_matrix(const std::vector<ObjVec>& types);
// Naive concatenation [X_11 X_12 ..; X_21 ..] without interleaving.
AlgMatrix concat_grid(const std::vector<std::vector<BlockMatrix>>& grid);

// Transpose into the opposite algebra: (m,s) over A becomes (s,m) over A^op.
BlockMatrix transpose_op(const BlockMatrix& x, const AlgebraPtr& target);

}  // namespace matcat
