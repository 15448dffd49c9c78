#pragma once

#include <vector>

#include "matcat/associator.hpp"
#include "matcat/phi.hpp"

namespace matcat {

// eta(i, j) in M_{c_ij}(A), index i*n + j. It maps the tensor of the second
// quadruple to that of the first: (x ⊗̂ y) eta(i,j) = eta(i',j') (x ⊗̂' y).
using EtaWitness = std::vector<BlockMatrix>;

EtaWitness identity_eta(const Quadruple& q);
// eta(m, s) = sum (X^m ⊗̂ X^s) eta(i,j) (Y^m ⊗̂' Y^s)
BlockMatrix extend_eta(const Quadruple& q, const Quadruple& q2, const EtaWitness& eta, const ObjVec& m,
                       const ObjVec& s);
// q and q2 share R and A; q2 may carry its own phi as well as its own associator.
Report check_eta_equiv(const Quadruple& q, const Quadruple& q2, const EtaWitness& eta, unsigned jobs = 1);
// eta for q1 ~ q2 and eta2 for q2 ~ q3 give q1 ~ q3
EtaWitness compose_eta(const EtaWitness& eta, const EtaWitness& eta2);

struct EquivWitness {
  std::vector<int> sigma;        // 0-based images
  std::vector<AlgElement> delta;  // image of each basis element of A in A'
  Scalar alpha = 1;
  std::vector<BlockMatrix> phi;  // index i*n + j, in M_{c'_{σi σj}}(A')
};

ObjVec permute_obj(const std::vector<int>& sigma, const ObjVec& m);  // m^σ
// P_σ(m): |m| x |m| with column (grade a, copy p) sent to row off^σ_{σ(a)} + p; 1x1 zero for m = 0
DenseMatrix sigma_perm(const std::vector<int>& sigma, const ObjVec& m);

AlgElement apply_delta(const EquivWitness& w, const AlgElement& x);
AlgMatrix apply_delta(const EquivWitness& w, const AlgMatrix& x);
// F(X) = P_σ(m) δ(X) P_σ(s)^T for X : s -> m typed (m, s)
BlockMatrix apply_functor(const EquivWitness& w, const AlgebraPtr& target, const BlockMatrix& x);

Report check_tensor_equiv(const Quadruple& qa, const Quadruple& qb, const EquivWitness& w, unsigned jobs = 1);

// The same quadruple with indices renamed by σ (σ(0) = 0) and the witness
// that carries the original onto it.
std::pair<Quadruple, EquivWitness> relabel(const Quadruple& q, const std::vector<int>& sigma);
EquivWitness identity_witness(const Quadruple& q);

}  // namespace matcat
