#pragma once

#include <memory>
#include <vector>

#include "matcat/blockmat.hpp"
#include "matcat/fusion.hpp"

namespace matcat {

// (R, A, phi, a): everything the reconstruction needs.
struct Quadruple {
  std::shared_ptr<const FusionRing> ring;
  AlgebraPtr alg;
  std::vector<BlockMatrix> phi;    // index p*d + q
  std::vector<BlockMatrix> assoc;  // index (i*n + j)*n + l

  int rank() const { return alg->rank(); }
  int dim() const { return alg->dim(); }
  const Field& field() const { return alg->field(); }
  const BlockMatrix& phi_at(int p, int q) const { return phi.at(static_cast<std::size_t>(p) * dim() + q); }
  BlockMatrix& phi_at(int p, int q) { return phi.at(static_cast<std::size_t>(p) * dim() + q); }
  const BlockMatrix& a(int i, int j, int l) const { return assoc.at((static_cast<std::size_t>(i) * rank() + j) * rank() + l); }
  BlockMatrix& a(int i, int j, int l) { return assoc.at((static_cast<std::size_t>(i) * rank() + j) * rank() + l); }
  ObjVec c(int i, int j) const { return ring->cvec(i, j); }
  ObjVec tensor(const ObjVec& m, const ObjVec& s) const { return ring->tensor(m, s); }
};

// Zero-filled phi table and identity associators of the right types.
std::vector<BlockMatrix> zero_phi(const FusionRing& r, const AlgebraPtr& alg);
std::vector<BlockMatrix> identity_assoc(const FusionRing& r, const AlgebraPtr& alg);

// phi(x ⊗ y) for x in e_{i'} A e_i, y in e_{j'} A e_j, extended bilinearly.
BlockMatrix phi_value(const Quadruple& q, const AlgElement& x, int ip, int i, const AlgElement& y, int jp, int j);

// Homogeneous matrix over A ⊗ A. Entries reuse AlgElement with index p*d + q
// standing for b_p ⊗ b_q; each row and column carries its pair of grades.
struct OuterMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::pair<int, int>> row_grade, col_grade;
  std::vector<AlgElement> e;
  const AlgElement& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
  AlgElement& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  static OuterMatrix mul(const GradedAlgebra& a, const OuterMatrix& x, const OuterMatrix& y);
  friend bool operator==(const OuterMatrix& x, const OuterMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.row_grade == y.row_grade && x.col_grade == y.col_grade &&
           x.e == y.e;
  }
};

// X ⊗_F Y: entry (r'|s1| + r, c'|m1| + c) is x_{rc} ⊗ y_{r'c'}.
OuterMatrix outer_tensor(const BlockMatrix& x, const BlockMatrix& y);
// φ applied entrywise; block (R, C) has type (c of the row grades, c of the column grades).
std::vector<std::vector<BlockMatrix>> apply_phi(const Quadruple& q, const OuterMatrix& t);

// The c_{g(r) g'(r')} series of a pair of types in ⊗_F order (outer index from the second factor).
std::vector<ObjVec> layout_series(const Quadruple& q, const ObjVec& m1, const ObjVec& m2);
// P(m1, m2).
DenseMatrix layout_perm(const Quadruple& q, const ObjVec& m1, const ObjVec& m2);

// X ⊗̂ Y. Three routes that must agree: direct placement (used everywhere),
// the Π rearrangement of the φ-block grid, and P(s1,s2) φ(X⊗Y) P(m1,m2)^T.
BlockMatrix hat_tensor(const Quadruple& q, const BlockMatrix& x, const BlockMatrix& y);
BlockMatrix hat_tensor_pi(const Quadruple& q, const BlockMatrix& x, const BlockMatrix& y);
BlockMatrix hat_tensor_perm(const Quadruple& q, const BlockMatrix& x, const BlockMatrix& y);

Report check_phi(const Quadruple& q);

}  // namespace matcat
