#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matcat/report.hpp"

namespace matcat {

// An object of the reconstructed category: multiplicities over the indecomposables.
using ObjVec = std::vector<std::int64_t>;
// A Z-combination of the basis r_1..r_n.
using RingElement = std::vector<std::int64_t>;

std::int64_t size(const ObjVec& m);  // |m|
bool is_zero(const ObjVec& m);
ObjVec unit_vec(int n, int i);  // e_i, 0-based i
ObjVec operator+(const ObjVec& a, const ObjVec& b);
std::string obj_str(const ObjVec& m);  // "0,1,0,0"

// Structure constants c[i][j][k], 0-based internally; index 0 is the unit.
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(int n, std::vector<std::int64_t> c);

  int rank() const { return n_; }
  std::int64_t c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  ObjVec cvec(int i, int j) const;

  RingElement multiply(const RingElement& x, const RingElement& y) const;
  ObjVec tensor(const ObjVec& m, const ObjVec& s) const;  // m ⊗̂ s
  const std::vector<std::int64_t>& data() const { return c_; }

  Report check() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> c_;
};

// Parses and evaluates "(r1+r2)^2", "2*r3 + r1·r2" and the like.
RingElement eval_ring_expr(const FusionRing& r, const std::string& expr);
std::string ring_str(const RingElement& x);  // "2r1+8r2"

}  // namespace matcat
