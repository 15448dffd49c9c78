#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matcat/associator.hpp"
#include "matcat/phi.hpp"

namespace matcat {

// Linear-level model of the Sweedler H4 module category: the four
// indecomposables as coordinate spaces, the hom basis as matrices and the
// chosen decompositions theta_ij : V_i ⊗ V_j -> ⊕ c_ijk V_k.
// V_i ⊗ V_j uses index a + dim(V_i) * b for v_a ⊗ w_b (second factor outer).
struct ConcreteModel {
  std::vector<int> dims;
  std::shared_ptr<const FusionRing> ring;
  AlgebraPtr alg;
  std::vector<DenseMatrix> maps;   // basis element p as a dims[col] -> dims[row] matrix
  std::vector<DenseMatrix> theta;  // index i*n + j

  int n() const { return static_cast<int>(dims.size()); }
  const DenseMatrix& th(int i, int j) const { return theta[static_cast<std::size_t>(i) * n() + j]; }
  int dim_of(const ObjVec& m) const;  // dim V^(m)
};

struct H4Options {
  Field field = Field::rational();
  // theta_ij scaled by scales[i*4 + j]; empty means all 1
  std::vector<Scalar> scales;
  // flips the sign of the V4 component of theta_22
  bool negate_v4_in_theta22 = false;
};

ConcreteModel h4_model(const H4Options& opt = {});

// The matrix of a morphism as a linear map V^(s) -> V^(m).
DenseMatrix realize(const ConcreteModel& mod, const BlockMatrix& x);
// Inverse of realize; throws std::runtime_error if a block is outside the hom span.
BlockMatrix from_linear(const ConcreteModel& mod, const ObjVec& m, const ObjVec& s, const DenseMatrix& f);
// f ⊗ g on V ⊗ W in the model's index convention.
DenseMatrix tensor_maps(const DenseMatrix& f, const DenseMatrix& g);

// φ and a derived from the model.
Quadruple quadruple_from_model(const ConcreteModel& mod);
// theta(m1, m2) : V^(m1) ⊗ V^(m2) -> V^(m1 ⊗̂ m2)
DenseMatrix theta_ext(const ConcreteModel& mod, const Quadruple& q, const ObjVec& m1, const ObjVec& m2);

Quadruple build_h4(const H4Options& opt = {});

struct Regauged {
  Quadruple quad;
  std::vector<BlockMatrix> eta;  // index i*n + j, relates build_h4() to quad
};
// theta'_ij = scale_ij theta_ij; scales has 16 entries with scale(1,i) = scale(i,1) = 1.
Regauged build_h4_regauged(const std::vector<Scalar>& scales);

// The commuting squares that tie the block-matrix data to the linear model,
// on all basis pairs and on the supplied objects.
Report check_model_diagrams(const ConcreteModel& mod, const Quadruple& q, const std::vector<ObjVec>& objects);
// Realization is injective on every hom space between the supplied objects.
Report check_hom_faithful(const ConcreteModel& mod, const Quadruple& q, const std::vector<ObjVec>& objects);

// The phi values printed alongside the example, for comparison with the table.
struct PhiSpot {
  std::string x, y;
  BlockMatrix printed;
};
std::vector<PhiSpot> h4_printed_phi(const Quadruple& q);

// Vec(Z/2): A = F x F, trivial phi; sign = true puts -e2 at a_{2,2,2}.
Quadruple vec_z2(bool sign, Field field = Field::rational());
// F^n with the given fusion ring, trivial phi and identity associators.
Quadruple diagonal_quadruple(std::shared_ptr<const FusionRing> ring, Field field = Field::rational());
AlgebraPtr diagonal_algebra(int n, Field field = Field::rational());

}  // namespace matcat
