#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matcat/blockmat.hpp"

namespace matcat {

// Matrices over A realized as F-linear maps. A column of an (s,*)-type matrix
// whose column grade is l is an element of P(s) e_l = ⊕_r e_{g(r)} A e_l; left
// multiplication by an (m,s)-type X maps P(s) e_l to P(m) e_l.

struct NotProjectiveKernel : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotProjectiveImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coordinates (row, basis index) spanning P(s) e_l.
class Coords {
 public:
  Coords(const GradedAlgebra& a, const ObjVec& s, int l);
  std::size_t size() const { return row_.size(); }
  int row(std::size_t k) const { return row_[k]; }
  int basis(std::size_t k) const { return basis_[k]; }
  int index(int r, int p) const { return lookup_[static_cast<std::size_t>(r) * d_ + p]; }

  Vec vector_of(const BlockMatrix& m, std::size_t col) const;
  std::vector<AlgElement> column_of(const Vec& v, std::size_t rows) const;

 private:
  int d_;
  std::vector<int> row_, basis_, lookup_;
};

DenseMatrix left_action(const BlockMatrix& x, int l);

bool is_column_independent(const BlockMatrix& x);
bool is_row_independent(const BlockMatrix& x);

std::optional<BlockMatrix> try_inverse(const BlockMatrix& u);
BlockMatrix inverse(const BlockMatrix& u);  // throws NotInvertible

// Some Z with Y Z = M (solve_left) or Z Y = M (solve_right).
std::optional<BlockMatrix> solve_left(const BlockMatrix& y, const BlockMatrix& m);
std::optional<BlockMatrix> solve_right(const BlockMatrix& y, const BlockMatrix& m);

// Kernel and cokernel in matrix form.
BlockMatrix right_universal_annihilator(const BlockMatrix& x);
BlockMatrix left_universal_annihilator(const BlockMatrix& x);

// x = x1 x2 with x1 column-independent and x2 row-independent.
std::pair<BlockMatrix, BlockMatrix> epi_mono_factor(const BlockMatrix& x);

}  // namespace matcat
