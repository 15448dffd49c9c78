#include "matcat/associator.hpp"

#include <fmt/format.h>

#include "matcat/linmod.hpp"
#include "matcat/parallel.hpp"

namespace matcat {

namespace {

BlockMatrix unit_id(const Quadruple& q, int i) { return BlockMatrix::identity(q.alg, unit_vec(q.rank(), i)); }

template <class Fn>
BlockMatrix selector_sum(const Quadruple& q, const ObjVec& m, const ObjVec& s, const ObjVec& t, Fn term) {
  ObjVec tot = q.tensor(q.tensor(m, s), t);
  BlockMatrix acc(q.alg, tot, tot);
  if (size(tot) == 0) return acc;
  int n = q.rank();
  for (int i = 0; i < n; ++i)
    for (int k1 = 0; k1 < m[i]; ++k1)
      for (int j = 0; j < n; ++j)
        for (int k2 = 0; k2 < s[j]; ++k2)
          for (int l = 0; l < n; ++l)
            for (int k3 = 0; k3 < t[l]; ++k3) {
              BlockMatrix xm = selector_col(q.alg, m, i, k1), xs = selector_col(q.alg, s, j, k2),
                          xt = selector_col(q.alg, t, l, k3);
              BlockMatrix ym = selector_row(q.alg, m, i, k1), ys = selector_row(q.alg, s, j, k2),
                          yt = selector_row(q.alg, t, l, k3);
              acc = acc + term(i, j, l, xm, xs, xt, ym, ys, yt);
            }
  return acc;
}

}  // namespace

BlockMatrix extend(const Quadruple& q, const ObjVec& m, const ObjVec& s, const ObjVec& t) {
  return selector_sum(q, m, s, t,
                      [&](int i, int j, int l, const BlockMatrix& xm, const BlockMatrix& xs, const BlockMatrix& xt,
                          const BlockMatrix& ym, const BlockMatrix& ys, const BlockMatrix& yt) {
                        return hat_tensor(q, xm, hat_tensor(q, xs, xt)) * q.a(i, j, l) *
                               hat_tensor(q, hat_tensor(q, ym, ys), yt);
                      });
}

BlockMatrix inverse_extended(const Quadruple& q, const ObjVec& m, const ObjVec& s, const ObjVec& t) {
  std::vector<std::optional<BlockMatrix>> inv(q.assoc.size());
  int n = q.rank();
  return selector_sum(q, m, s, t,
                      [&](int i, int j, int l, const BlockMatrix& xm, const BlockMatrix& xs, const BlockMatrix& xt,
                          const BlockMatrix& ym, const BlockMatrix& ys, const BlockMatrix& yt) {
                        auto& ai = inv[(static_cast<std::size_t>(i) * n + j) * n + l];
                        if (!ai) ai = inverse(q.a(i, j, l));
                        return hat_tensor(q, hat_tensor(q, xm, xs), xt) * *ai *
                               hat_tensor(q, ym, hat_tensor(q, ys, yt));
                      });
}

std::pair<BlockMatrix, BlockMatrix> pentagon_sides(const Quadruple& q, int i, int j, int l, int t) {
  int n = q.rank();
  ObjVec ei = unit_vec(n, i), ej = unit_vec(n, j), el = unit_vec(n, l), et = unit_vec(n, t);
  BlockMatrix lhs = hat_tensor(q, unit_id(q, i), q.a(j, l, t)) * extend(q, ei, q.c(j, l), et) *
                    hat_tensor(q, q.a(i, j, l), unit_id(q, t));
  BlockMatrix rhs = extend(q, ei, ej, q.c(l, t)) * extend(q, q.c(i, j), el, et);
  return {lhs, rhs};
}

std::pair<BlockMatrix, BlockMatrix> pentagon_summed_sides(const Quadruple& q, int i1, int i2, int i3, int i4) {
  int n = q.rank();
  const auto& al = q.alg;
  BlockMatrix E1 = unit_id(q, i1), E2 = unit_id(q, i2), E3 = unit_id(q, i3), E4 = unit_id(q, i4);
  ObjVec c23 = q.c(i2, i3), c34 = q.c(i3, i4), c12 = q.c(i1, i2);

  ObjVec ltype = q.tensor(q.tensor(unit_vec(n, i1), c23), unit_vec(n, i4));
  ObjVec lcol = q.tensor(q.tensor(c12, unit_vec(n, i3)), unit_vec(n, i4));
  BlockMatrix lhs(al, ltype, lcol);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < c23[j]; ++k) {
      BlockMatrix x = selector_col(al, c23, j, k), y = selector_row(al, c23, j, k);
      lhs = lhs + hat_tensor(q, E1, q.a(i2, i3, i4) * hat_tensor(q, x, E4)) * q.a(i1, j, i4) *
                      hat_tensor(q, hat_tensor(q, E1, y) * q.a(i1, i2, i3), E4);
    }

  ObjVec rtype = q.tensor(unit_vec(n, i1), q.tensor(unit_vec(n, i2), c34));
  BlockMatrix rhs(al, rtype, lcol);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < c34[j]; ++k)
      for (int jp = 0; jp < n; ++jp)
        for (int kp = 0; kp < c12[jp]; ++kp) {
          BlockMatrix x = selector_col(al, c34, j, k), y = selector_row(al, c34, j, k);
          BlockMatrix xp = selector_col(al, c12, jp, kp), yp = selector_row(al, c12, jp, kp);
          rhs = rhs + hat_tensor(q, E1, hat_tensor(q, E2, x)) * q.a(i1, i2, j) * hat_tensor(q, xp, y) *
                          q.a(jp, i3, i4) * hat_tensor(q, hat_tensor(q, yp, E3), E4);
        }
  return {lhs, rhs};
}

Report check_associator(const Quadruple& q, unsigned jobs) {
  Report rep;
  const auto& a = *q.alg;
  int n = q.rank(), d = q.dim();
  if (q.assoc.size() != static_cast<std::size_t>(n) * n * n) {
    rep.fail("associator.grading", {}, fmt::format("family has {} entries, expected {}", q.assoc.size(), n * n * n));
    return rep;
  }

  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        ObjVec t = q.tensor(q.c(i, j), unit_vec(n, l));
        const auto& x = q.a(i, j, l);
        if (x.row_type() != t || x.col_type() != t) {
          ok = false;
          rep.fail("associator.grading", {i + 1, j + 1, l + 1},
                   fmt::format("a has type ({}|{}), expected ({}|{})", obj_str(x.row_type()), obj_str(x.col_type()),
                               obj_str(t), obj_str(t)));
        }
      }
  if (!ok) return rep;
  rep.pass("associator.grading", static_cast<long>(n) * n * n);

  ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (!try_inverse(q.a(i, j, l))) {
          ok = false;
          rep.fail("associator.invertible", {i + 1, j + 1, l + 1}, "a is not invertible");
        }
  if (ok) rep.pass("associator.invertible", static_cast<long>(n) * n * n);

  ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.a(i, 0, j) != BlockMatrix::identity(q.alg, q.c(i, j))) {
        ok = false;
        rep.fail("associator.unit", {i + 1, 1, j + 1}, fmt::format("a_{{{},1,{}}} != E_c{}{}", i + 1, j + 1, i + 1, j + 1));
      }
  if (ok) rep.pass("associator.unit", static_cast<long>(n) * n);

  // naturality over basis triples, one task per first factor
  std::vector<Report> nat(d);
  std::vector<BlockMatrix> basis;
  for (int p = 0; p < d; ++p) basis.push_back(BlockMatrix::basis(q.alg, p));
  parallel_for(d, jobs, [&](std::size_t p) {
    const auto& bx = a.basis(static_cast<int>(p));
    for (int r = 0; r < d; ++r) {
      const auto& by = a.basis(r);
      BlockMatrix xy = hat_tensor(q, basis[p], basis[r]);
      for (int u = 0; u < d; ++u) {
        const auto& bz = a.basis(u);
        BlockMatrix lhs = hat_tensor(q, basis[p], hat_tensor(q, basis[r], basis[u])) * q.a(bx.col, by.col, bz.col);
        BlockMatrix rhs = q.a(bx.row, by.row, bz.row) * hat_tensor(q, xy, basis[u]);
        if (lhs != rhs)
          nat[p].fail("associator.naturality", {static_cast<int>(p) + 1, r + 1, u + 1},
                      fmt::format("(x⊗̂(y⊗̂z))a != a((x⊗̂y)⊗̂z) for x={}, y={}, z={}", bx.name, by.name, bz.name));
      }
    }
  });
  ok = true;
  for (const auto& r : nat) {
    if (!r.ok()) ok = false;
    rep.merge(r);
  }
  if (ok) rep.pass("associator.naturality", static_cast<long>(d) * d * d);

  std::size_t total = static_cast<std::size_t>(n) * n * n * n;
  std::vector<Report> pent(total);
  parallel_for(total, jobs, [&](std::size_t k) {
    int t = static_cast<int>(k % n), l = static_cast<int>(k / n % n), j = static_cast<int>(k / n / n % n),
        i = static_cast<int>(k / n / n / n);
    auto [lhs, rhs] = pentagon_sides(q, i, j, l, t);
    if (lhs != rhs) pent[k].fail("associator.pentagon", {i + 1, j + 1, l + 1, t + 1}, "pentagon sides differ");
  });
  ok = true;
  for (const auto& r : pent) {
    if (!r.ok()) ok = false;
    rep.merge(r);
  }
  if (ok) rep.pass("associator.pentagon", static_cast<long>(total));
  return rep;
}

}  // namespace matcat
