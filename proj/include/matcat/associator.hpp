#pragma once

#include <utility>

#include "matcat/phi.hpp"

namespace matcat {

// a_{m,s,t} from the a_{i,j,l} by the selector sum; the 1x1 zero when m⊗̂s⊗̂t = 0.
BlockMatrix extend(const Quadruple& q, const ObjVec& m, const ObjVec& s, const ObjVec& t);
// The same sum with a_{i,j,l}^{-1} and the bracketings swapped; throws NotInvertible.
BlockMatrix inverse_extended(const Quadruple& q, const ObjVec& m, const ObjVec& s, const ObjVec& t);

// Both sides of the pentagon on indecomposables, 0-based (i, j, l, t):
// (E ⊗̂ a_{j,l,t}) a_{e_i, c_jl, e_t} (a_{i,j,l} ⊗̂ E)  and  a_{e_i, e_j, c_lt} a_{c_ij, e_l, e_t}.
std::pair<BlockMatrix, BlockMatrix> pentagon_sides(const Quadruple& q, int i, int j, int l, int t);
// The summed form written out with selectors instead of extended associators.
std::pair<BlockMatrix, BlockMatrix> pentagon_summed_sides(const Quadruple& q, int i1, int i2, int i3, int i4);

// Types, invertibility, naturality on basis triples, a_{i,1,j} = E, pentagon.
Report check_associator(const Quadruple& q, unsigned jobs = 1);

}  // namespace matcat
