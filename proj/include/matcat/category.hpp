#pragma once

#include <vector>

#include "matcat/linmod.hpp"
#include "matcat/phi.hpp"

namespace matcat {

// Hom(m, s) = M_{s x m}(A).
std::int64_t hom_dim(const GradedAlgebra& a, const ObjVec& m, const ObjVec& s);

struct DirectSum {
  ObjVec obj;
  BlockMatrix inj_m, inj_s;    // X : m -> m+s and Y : s -> m+s
  BlockMatrix proj_m, proj_s;  // their transposes
};
DirectSum direct_sum(const AlgebraPtr& alg, const ObjVec& m, const ObjVec& s);
Report check_direct_sum(const DirectSum& ds, const ObjVec& m, const ObjVec& s);

bool is_semisimple(const GradedAlgebra& a);

// [m] = sum m_i r_i
RingElement green_ring_class(const ObjVec& m);
// [m ⊗̂ s] = [m][s] over all pairs of the supplied objects
Report check_green_ring(const FusionRing& r, const std::vector<ObjVec>& objects);

// Kernel (t, K : t -> m) of X : m -> s, and cokernel (t, C : s -> t).
struct SubQuot {
  ObjVec obj;
  BlockMatrix map;
};
SubQuot kernel(const BlockMatrix& x);
SubQuot cokernel(const BlockMatrix& x);

// Condition (2) of the unit-simplicity remark: every column-independent X in
// M_{e_1 x m}(A) is 0 with m = 0 or a nonzero multiple of e_1. Tested on the
// basis of each e_1 A e_l and on one fixed generic combination.
bool unit_is_simple(const GradedAlgebra& a);

// Every object with |m| <= k, in lexicographic order.
std::vector<ObjVec> objects_up_to(int n, int k);

}  // namespace matcat
