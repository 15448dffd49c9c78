#include "matcat/phi.hpp"

#include <fmt/format.h>

namespace matcat {

std::vector<BlockMatrix> zero_phi(const FusionRing& r, const AlgebraPtr& alg) {
  int d = alg->dim();
  std::vector<BlockMatrix> t;
  t.reserve(static_cast<std::size_t>(d) * d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      const auto& bp = alg->basis(p);
      const auto& bq = alg->basis(q);
      t.emplace_back(alg, r.cvec(bp.row, bq.row), r.cvec(bp.col, bq.col));
    }
  return t;
}

std::vector<BlockMatrix> identity_assoc(const FusionRing& r, const AlgebraPtr& alg) {
  int n = alg->rank();
  std::vector<BlockMatrix> t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) t.push_back(BlockMatrix::identity(alg, r.tensor(r.cvec(i, j), unit_vec(n, l))));
  return t;
}

BlockMatrix phi_value(const Quadruple& q, const AlgElement& x, int ip, int i, const AlgElement& y, int jp, int j) {
  const auto& a = *q.alg;
  BlockMatrix z(q.alg, q.c(ip, jp), q.c(i, j));
  for (const auto& tx : x.terms()) {
    const auto& bx = a.basis(tx.idx);
    if (bx.row != ip || bx.col != i) throw TypeError("phi_value: left factor not in the stated Peirce component");
    for (const auto& ty : y.terms()) {
      const auto& by = a.basis(ty.idx);
      if (by.row != jp || by.col != j) throw TypeError("phi_value: right factor not in the stated Peirce component");
      z = z + (tx.c * ty.c) * q.phi_at(tx.idx, ty.idx);
    }
  }
  return z;
}

OuterMatrix OuterMatrix::mul(const GradedAlgebra& a, const OuterMatrix& x, const OuterMatrix& y) {
  if (x.cols != y.rows || x.col_grade != y.row_grade) throw TypeError("outer product: types differ");
  auto d = static_cast<std::uint32_t>(a.dim());
  OuterMatrix z{x.rows, y.cols, x.row_grade, y.col_grade, std::vector<AlgElement>(x.rows * y.cols)};
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const auto& u = x.at(i, k);
      if (u.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        const auto& v = y.at(k, j);
        if (v.is_zero()) continue;
        for (const auto& tu : u.terms())
          for (const auto& tv : v.terms()) {
            const auto& l = a.mul_basis(tu.idx / d, tv.idx / d);
            if (l.is_zero()) continue;
            const auto& r = a.mul_basis(tu.idx % d, tv.idx % d);
            for (const auto& tl : l.terms())
              for (const auto& tr : r.terms()) z.at(i, j).add_term(tl.idx * d + tr.idx, tu.c * tv.c * tl.c * tr.c);
          }
      }
    }
  return z;
}

OuterMatrix outer_tensor(const BlockMatrix& x, const BlockMatrix& y) {
  auto d = static_cast<std::uint32_t>(x.alg().dim());
  auto xs = static_cast<std::size_t>(size(x.row_type())), xm = static_cast<std::size_t>(size(x.col_type()));
  auto ys = static_cast<std::size_t>(size(y.row_type())), ym = static_cast<std::size_t>(size(y.col_type()));
  OuterMatrix t;
  t.rows = xs * ys;
  t.cols = xm * ym;
  t.e.resize(t.rows * t.cols);
  for (std::size_t rp = 0; rp < ys; ++rp)
    for (std::size_t r = 0; r < xs; ++r) t.row_grade.emplace_back(x.row_grade(r), y.row_grade(rp));
  for (std::size_t cp = 0; cp < ym; ++cp)
    for (std::size_t c = 0; c < xm; ++c) t.col_grade.emplace_back(x.col_grade(c), y.col_grade(cp));
  for (std::size_t r = 0; r < xs; ++r)
    for (std::size_t c = 0; c < xm; ++c) {
      const auto& u = x.at(r, c);
      if (u.is_zero()) continue;
      for (std::size_t rp = 0; rp < ys; ++rp)
        for (std::size_t cp = 0; cp < ym; ++cp) {
          const auto& v = y.at(rp, cp);
          if (v.is_zero()) continue;
          auto& e = t.at(rp * xs + r, cp * xm + c);
          for (const auto& tu : u.terms())
            for (const auto& tv : v.terms()) e.add_term(tu.idx * d + tv.idx, tu.c * tv.c);
        }
    }
  return t;
}

std::vector<std::vector<BlockMatrix>> apply_phi(const Quadruple& q, const OuterMatrix& t) {
  auto d = static_cast<std::uint32_t>(q.dim());
  std::vector<std::vector<BlockMatrix>> grid(t.rows);
  for (std::size_t r = 0; r < t.rows; ++r) {
    auto [ip, jp] = t.row_grade[r];
    for (std::size_t c = 0; c < t.cols; ++c) {
      auto [i, j] = t.col_grade[c];
      BlockMatrix z(q.alg, q.c(ip, jp), q.c(i, j));
      for (const auto& term : t.at(r, c).terms()) z = z + term.c * q.phi_at(term.idx / d, term.idx % d);
      grid[r].push_back(std::move(z));
    }
  }
  return grid;
}

std::vector<ObjVec> layout_series(const Quadruple& q, const ObjVec& m1, const ObjVec& m2) {
  auto g1 = grades_of(m1), g2 = grades_of(m2);
  std::vector<ObjVec> out;
  for (int b : g2)
    for (int a : g1) out.push_back(q.c(a, b));
  return out;
}

DenseMatrix layout_perm(const Quadruple& q, const ObjVec& m1, const ObjVec& m2) {
  auto series = layout_series(q, m1, m2);
  if (series.empty()) return DenseMatrix(1, 1);
  return perm_matrix(series);
}

namespace {

// Final positions of each block-local index, block R of the series taking
// its share of every component after the earlier blocks.
std::vector<std::vector<std::size_t>> placement(const std::vector<ObjVec>& series, const ObjVec& total) {
  auto off = offsets(total);
  std::vector<std::int64_t> used(total.size(), 0);
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& h : series) {
    std::vector<std::size_t> p;
    for (std::size_t a = 0; a < h.size(); ++a)
      for (std::int64_t k = 0; k < h[a]; ++k) p.push_back(static_cast<std::size_t>(off[a] + used[a] + k));
    for (std::size_t a = 0; a < h.size(); ++a) used[a] += h[a];
    pos.push_back(std::move(p));
  }
  return pos;
}

bool degenerate(const ObjVec& s, const ObjVec& m) { return size(s) == 0 || size(m) == 0; }

}  // namespace

BlockMatrix hat_tensor(const Quadruple& q, const BlockMatrix& x, const BlockMatrix& y) {
  ObjVec s = q.tensor(x.row_type(), y.row_type());
  ObjVec m = q.tensor(x.col_type(), y.col_type());
  BlockMatrix z(q.alg, s, m);
  if (degenerate(s, m)) return z;
  auto rpos = placement(layout_series(q, x.row_type(), y.row_type()), s);
  auto cpos = placement(layout_series(q, x.col_type(), y.col_type()), m);
  auto xs = static_cast<std::size_t>(size(x.row_type())), xm = static_cast<std::size_t>(size(x.col_type()));
  auto ys = static_cast<std::size_t>(size(y.row_type())), ym = static_cast<std::size_t>(size(y.col_type()));
  AlgMatrix raw(z.rows(), z.cols());
  for (std::size_t r = 0; r < xs; ++r)
    for (std::size_t c = 0; c < xm; ++c) {
      const auto& u = x.at(r, c);
      if (u.is_zero()) continue;
      for (std::size_t rp = 0; rp < ys; ++rp)
        for (std::size_t cp = 0; cp < ym; ++cp) {
          const auto& v = y.at(rp, cp);
          if (v.is_zero()) continue;
          BlockMatrix b = phi_value(q, u, x.row_grade(r), x.col_grade(c), v, y.row_grade(rp), y.col_grade(cp));
          const auto& rp_ = rpos[rp * xs + r];
          const auto& cp_ = cpos[cp * xm + c];
          for (std::size_t i = 0; i < rp_.size(); ++i)
            for (std::size_t j = 0; j < cp_.size(); ++j)
              if (!b.at(i, j).is_zero()) raw(rp_[i], cp_[j]) += b.at(i, j);
        }
    }
  return BlockMatrix::from_raw(q.alg, s, m, std::move(raw));
}

BlockMatrix hat_tensor_pi(const Quadruple& q, const BlockMatrix& x, const BlockMatrix& y) {
  ObjVec s = q.tensor(x.row_type(), y.row_type());
  ObjVec m = q.tensor(x.col_type(), y.col_type());
  if (degenerate(s, m)) return BlockMatrix(q.alg, s, m);
  return pi_rearrange(apply_phi(q, outer_tensor(x, y)));
}

BlockMatrix hat_tensor_perm(const Quadruple& q, const BlockMatrix& x, const BlockMatrix& y) {
  ObjVec s = q.tensor(x.row_type(), y.row_type());
  ObjVec m = q.tensor(x.col_type(), y.col_type());
  if (degenerate(s, m)) return BlockMatrix(q.alg, s, m);
  AlgMatrix g = concat_grid(apply_phi(q, outer_tensor(x, y)));
  AlgMatrix r = AlgMatrix::rmul(AlgMatrix::lmul(layout_perm(q, x.row_type(), y.row_type()), g),
                                layout_perm(q, x.col_type(), y.col_type()).transpose());
  return BlockMatrix::from_raw(q.alg, s, m, std::move(r));
}

Report check_phi(const Quadruple& q) {
  Report rep;
  const auto& a = *q.alg;
  int d = a.dim(), n = a.rank();
  if (q.phi.size() != static_cast<std::size_t>(d) * d) {
    rep.fail("phi.grading", {}, fmt::format("table has {} entries, expected {}", q.phi.size(), d * d));
    return rep;
  }

  bool graded = true;
  for (int p = 0; p < d; ++p)
    for (int r = 0; r < d; ++r) {
      const auto& bp = a.basis(p);
      const auto& br = a.basis(r);
      const auto& v = q.phi_at(p, r);
      ObjVec rt = q.c(bp.row, br.row), ct = q.c(bp.col, br.col);
      if (v.row_type() != rt || v.col_type() != ct) {
        graded = false;
        rep.fail("phi.grading", {p + 1, r + 1},
                 fmt::format("phi({}⊗{}) has type ({}|{}), expected ({}|{})", bp.name, br.name, obj_str(v.row_type()),
                             obj_str(v.col_type()), obj_str(rt), obj_str(ct)));
      } else if (auto g = v.grade_violation()) {
        graded = false;
        rep.fail("phi.grading", {p + 1, r + 1}, fmt::format("phi({}⊗{}): {}", bp.name, br.name, *g));
      }
    }
  if (!graded) return rep;
  rep.pass("phi.grading", static_cast<long>(d) * d);

  bool ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.phi_at(a.idem(i), a.idem(j)) != BlockMatrix::identity(q.alg, q.c(i, j))) {
        ok = false;
        rep.fail("phi.phi1", {i + 1, j + 1}, fmt::format("phi(e{}⊗e{}) is not E_c{}{}", i + 1, j + 1, i + 1, j + 1));
      }
  if (ok) rep.pass("phi.phi1", static_cast<long>(n) * n);

  ok = true;
  int e1 = a.idem(0);
  for (int p = 0; p < d; ++p) {
    auto b = BlockMatrix::basis(q.alg, p);
    if (q.phi_at(e1, p) != b) {
      ok = false;
      rep.fail("phi.phi2", {1, p + 1}, fmt::format("phi(e1⊗{}) != {}", a.basis(p).name, a.basis(p).name));
    }
    if (q.phi_at(p, e1) != b) {
      ok = false;
      rep.fail("phi.phi2", {p + 1, 1}, fmt::format("phi({}⊗e1) != {}", a.basis(p).name, a.basis(p).name));
    }
  }
  if (ok) rep.pass("phi.phi2", 2L * d);

  ok = true;
  long inst = 0;
  for (int p1 = 0; p1 < d; ++p1)
    for (int q1 = 0; q1 < d; ++q1) {
      const auto& bp1 = a.basis(p1);
      const auto& bq1 = a.basis(q1);
      for (int p2 = 0; p2 < d; ++p2) {
        if (a.basis(p2).row != bp1.col) continue;
        for (int q2 = 0; q2 < d; ++q2) {
          if (a.basis(q2).row != bq1.col) continue;
          ++inst;
          BlockMatrix lhs = phi_value(q, a.mul_basis(p1, p2), bp1.row, a.basis(p2).col, a.mul_basis(q1, q2), bq1.row,
                                      a.basis(q2).col);
          BlockMatrix rhs = q.phi_at(p1, q1) * q.phi_at(p2, q2);
          if (lhs != rhs) {
            ok = false;
            rep.fail("phi.multiplicative", {p1 + 1, q1 + 1, p2 + 1, q2 + 1},
                     fmt::format("phi(({}⊗{})({}⊗{})) != phi({}⊗{}) phi({}⊗{})", bp1.name, bq1.name,
                                 a.basis(p2).name, a.basis(q2).name, bp1.name, bq1.name, a.basis(p2).name,
                                 a.basis(q2).name));
          }
        }
      }
    }
  if (ok) rep.pass("phi.multiplicative", inst);
  return rep;
}

}  // namespace matcat
