#pragma once

#include <random>
#include <vector>

#include "matcat/algebra.hpp"
#include "matcat/blockmat.hpp"

namespace testsupport {

using namespace matcat;
using Rng = std::mt19937_64;

inline long small_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Random object with |m| <= max_size; zero allowed only if allow_zero.
inline ObjVec random_obj(Rng& rng, int n, int max_size, bool allow_zero = false) {
  while (true) {
    ObjVec m(n, 0);
    int k = static_cast<int>(small_int(rng, allow_zero ? 0 : 1, max_size));
    for (int t = 0; t < k; ++t) ++m[small_int(rng, 0, n - 1)];
    return m;
  }
}

inline AlgElement random_element(Rng& rng, const GradedAlgebra& a, int i, int j) {
  AlgElement x;
  for (int p : a.peirce(i, j)) x.add_term(p, Scalar(small_int(rng, -2, 2)));
  return x;
}

inline BlockMatrix random_matrix(Rng& rng, const AlgebraPtr& alg, const ObjVec& m, const ObjVec& s) {
  BlockMatrix x(alg, m, s);
  if (size(m) == 0 || size(s) == 0) return x;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) x.set(r, c, random_element(rng, *alg, x.row_grade(r), x.col_grade(c)));
  return x;
}

// Invertible by construction: a unit upper-triangular scalar part on equal
// grades with nonzero diagonal, plus radical entries everywhere.
inline BlockMatrix random_invertible(Rng& rng, const AlgebraPtr& alg, const ObjVec& m) {
  BlockMatrix x(alg, m, m);
  if (size(m) == 0) return x;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      int gr = x.row_grade(r), gc = x.col_grade(c);
      AlgElement e;
      for (const auto& rad : alg->radical(gr, gc)) e += Scalar(small_int(rng, -1, 1)) * rad;
      if (gr == gc && r == c) {
        long d = 0;
        while (d == 0) d = small_int(rng, -3, 3);
        e += Scalar(d) * alg->e(gr);
      } else if (gr == gc && r < c) {
        e += Scalar(small_int(rng, -2, 2)) * alg->e(gr);
      }
      x.set(r, c, e);
    }
  return x;
}

// 16 gauge scales, 1 wherever the unit object is involved.
inline std::vector<Scalar> random_scales(Rng& rng) {
  std::vector<Scalar> s(16, Scalar(1));
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      long num = 0;
      while (num == 0) num = small_int(rng, -7, 7);
      s[i * 4 + j] = Scalar(num, small_int(rng, 1, 5));
    }
  return s;
}

}  // namespace testsupport
