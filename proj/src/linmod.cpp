#include "matcat/linmod.hpp"

#include <fmt/format.h>

namespace matcat {

Coords::Coords(const GradedAlgebra& a, const ObjVec& s, int l) : d_(a.dim()) {
  auto g = grades_of(s);
  lookup_.assign(g.size() * d_, -1);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (int p : a.peirce(g[r], l)) {
      lookup_[r * d_ + p] = static_cast<int>(row_.size());
      row_.push_back(static_cast<int>(r));
      basis_.push_back(p);
    }
}

Vec Coords::vector_of(const BlockMatrix& m, std::size_t col) const {
  Vec v(size());
  if (size() == 0) return v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& t : m.at(r, col).terms()) {
      int k = index(static_cast<int>(r), static_cast<int>(t.idx));
      if (k < 0) throw TypeError("column entry outside the expected Peirce component");
      v[k] = t.c;
    }
  return v;
}

std::vector<AlgElement> Coords::column_of(const Vec& v, std::size_t rows) const {
  std::vector<AlgElement> col(rows);
  for (std::size_t k = 0; k < size(); ++k)
    if (!v[k].is_zero()) col[row_[k]].add_term(basis_[k], v[k]);
  return col;
}

DenseMatrix left_action(const BlockMatrix& x, int l) {
  const auto& a = x.alg();
  Coords dom(a, x.col_type(), l), cod(a, x.row_type(), l);
  DenseMatrix m(cod.size(), dom.size());
  for (std::size_t k = 0; k < dom.size(); ++k) {
    auto r = static_cast<std::size_t>(dom.row(k));
    AlgElement b = AlgElement::basis(dom.basis(k));
    for (std::size_t i = 0; i < x.rows(); ++i) {
      const auto& u = x.at(i, r);
      if (u.is_zero()) continue;
      AlgElement ub = a.mul(u, b);
      for (const auto& t : ub.terms()) m(cod.index(static_cast<int>(i), static_cast<int>(t.idx)), k) = t.c;
    }
  }
  return m;
}

bool is_column_independent(const BlockMatrix& x) {
  for (int l = 0; l < x.alg().rank(); ++l)
    if (!nullspace(left_action(x, l)).empty()) return false;
  return true;
}

bool is_row_independent(const BlockMatrix& x) {
  auto op = x.alg().opposite();
  return is_column_independent(transpose_op(x, op));
}

std::optional<BlockMatrix> solve_left(const BlockMatrix& y, const BlockMatrix& m) {
  if (y.row_type() != m.row_type()) throw TypeError("solve_left: row types differ");
  const auto& a = y.alg();
  BlockMatrix z(y.algebra(), y.col_type(), m.col_type());
  if (size(m.col_type()) == 0) return z;
  AlgMatrix raw(z.rows(), z.cols());
  std::vector<std::optional<DenseMatrix>> act(a.rank());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    int l = m.col_grade(c);
    if (!act[l]) act[l] = left_action(y, l);
    Coords dom(a, y.col_type(), l), cod(a, y.row_type(), l);
    auto sol = solve(*act[l], cod.vector_of(m, c));
    if (!sol) return std::nullopt;
    auto col = dom.column_of(*sol, z.rows());
    for (std::size_t r = 0; r < z.rows(); ++r) raw(r, c) = std::move(col[r]);
  }
  return BlockMatrix::from_raw(y.algebra(), y.col_type(), m.col_type(), std::move(raw));
}

std::optional<BlockMatrix> solve_right(const BlockMatrix& y, const BlockMatrix& m) {
  auto op = y.alg().opposite();
  auto zt = solve_left(transpose_op(y, op), transpose_op(m, op));
  if (!zt) return std::nullopt;
  return transpose_op(*zt, y.algebra());
}

std::optional<BlockMatrix> try_inverse(const BlockMatrix& u) {
  const auto& a = u.alg();
  for (int l = 0; l < a.rank(); ++l) {
    auto act = left_action(u, l);
    if (act.rows() != act.cols() || rank(act) != act.rows()) return std::nullopt;
  }
  auto v = solve_left(u, BlockMatrix::identity(u.algebra(), u.row_type()));
  if (!v) return std::nullopt;
  if (*v * u != BlockMatrix::identity(u.algebra(), u.col_type())) return std::nullopt;
  return v;
}

BlockMatrix inverse(const BlockMatrix& u) {
  auto v = try_inverse(u);
  if (!v) throw NotInvertible("matrix is not invertible over A");
  return *v;
}

BlockMatrix right_universal_annihilator(const BlockMatrix& x) {
  const auto& a = x.alg();
  int n = a.rank();
  const ObjVec& s = x.col_type();
  if (!a.radical_available()) throw UnsupportedCharacteristic("annihilators need the radical (characteristic 0)");

  std::vector<Coords> co;
  std::vector<std::vector<Vec>> ker(n);
  for (int l = 0; l < n; ++l) {
    co.emplace_back(a, s, l);
    ker[l] = nullspace(left_action(x, l));
  }
  auto rows = static_cast<std::size_t>(size(s));

  ObjVec t(n, 0);
  std::vector<std::vector<std::vector<AlgElement>>> gens(n);
  for (int l = 0; l < n; ++l) {
    RowSpace span(co[l].size());
    for (int lp = 0; lp < n; ++lp)
      for (const auto& k : ker[lp]) {
        auto col = co[lp].column_of(k, rows);
        for (const auto& r : a.radical(lp, l)) {
          Vec v(co[l].size());
          for (std::size_t i = 0; i < rows; ++i) {
            AlgElement cr = a.mul(col[i], r);
            for (const auto& term : cr.terms()) v[co[l].index(static_cast<int>(i), term.idx)] = term.c;
          }
          span.add(v);
        }
      }
    for (const auto& k : ker[l])
      if (span.add(k)) {
        gens[l].push_back(co[l].column_of(k, rows));
        ++t[l];
      }
  }

  for (int l = 0; l < n; ++l) {
    std::int64_t expect = 0;
    for (int lp = 0; lp < n; ++lp) expect += t[lp] * static_cast<std::int64_t>(a.peirce(lp, l).size());
    if (expect != static_cast<std::int64_t>(ker[l].size()))
      throw NotProjectiveKernel(fmt::format("kernel component at index {} has dimension {}, generators span {}", l + 1,
                                            ker[l].size(), expect));
  }

  BlockMatrix y(x.algebra(), s, t);
  if (size(t) == 0) return y;
  AlgMatrix raw(y.rows(), y.cols());
  std::size_t c = 0;
  for (int l = 0; l < n; ++l)
    for (const auto& g : gens[l]) {
      for (std::size_t r = 0; r < rows; ++r) raw(r, c) = g[r];
      ++c;
    }
  return BlockMatrix::from_raw(x.algebra(), s, t, std::move(raw));
}

BlockMatrix left_universal_annihilator(const BlockMatrix& x) {
  auto op = x.alg().opposite();
  return transpose_op(right_universal_annihilator(transpose_op(x, op)), x.algebra());
}

std::pair<BlockMatrix, BlockMatrix> epi_mono_factor(const BlockMatrix& x) {
  // the image is taken as the kernel of the cokernel
  BlockMatrix x1 = right_universal_annihilator(left_universal_annihilator(x));
  auto x2 = solve_left(x1, x);
  if (!x2) throw NotProjectiveImage("matrix does not factor through the kernel of its cokernel");
  if (!is_row_independent(*x2)) throw NotProjectiveImage("image part is not row-independent");
  return {x1, *x2};
}

}  // namespace matcat
