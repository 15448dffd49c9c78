#include "matcat/blockmat.hpp"

#include <fmt/format.h>

namespace matcat {

bool AlgMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

AlgMatrix AlgMatrix::mul(const GradedAlgebra& a, const AlgMatrix& x, const AlgMatrix& y) {
  if (x.cols_ != y.rows_) throw TypeError("matrix product: inner dimensions differ");
  AlgMatrix z(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const AlgElement& u = x(i, k);
      if (u.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const AlgElement& v = y(k, j);
        if (v.is_zero()) continue;
        z(i, j) += a.mul(u, v);
      }
    }
  return z;
}

AlgMatrix AlgMatrix::lmul(const DenseMatrix& p, const AlgMatrix& x) {
  if (p.cols() != x.rows_) throw TypeError("scalar product: dimensions differ");
  AlgMatrix z(p.rows(), x.cols_);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t k = 0; k < p.cols(); ++k) {
      if (p(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < x.cols_; ++j)
        if (!x(k, j).is_zero()) z(i, j) += p(i, k) * x(k, j);
    }
  return z;
}

AlgMatrix AlgMatrix::rmul(const AlgMatrix& x, const DenseMatrix& p) {
  if (x.cols_ != p.rows()) throw TypeError("scalar product: dimensions differ");
  AlgMatrix z(x.rows_, p.cols());
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      if (x(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (!p(k, j).is_zero()) z(i, j) += p(k, j) * x(i, k);
    }
  return z;
}

AlgMatrix AlgMatrix::from_scalar(const GradedAlgebra& a, const DenseMatrix& p) {
  AlgMatrix z(p.rows(), p.cols());
  AlgElement one = a.one();
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) z(i, j) = p(i, j) * one;
  return z;
}

AlgMatrix& AlgMatrix::operator+=(const AlgMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw TypeError("matrix sum: shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  return *this;
}

AlgMatrix& AlgMatrix::operator-=(const AlgMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw TypeError("matrix difference: shapes differ");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  return *this;
}

std::vector<std::int64_t> offsets(const ObjVec& m) {
  std::vector<std::int64_t> off(m.size() + 1, 0);
  for (std::size_t i = 0; i < m.size(); ++i) off[i + 1] = off[i] + m[i];
  return off;
}

std::vector<int> grades_of(const ObjVec& m) {
  std::vector<int> g;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::int64_t k = 0; k < m[i]; ++k) g.push_back(static_cast<int>(i));
  return g;
}

namespace {

void check_type(const GradedAlgebra& a, const ObjVec& m) {
  if (static_cast<int>(m.size()) != a.rank())
    throw TypeError(fmt::format("object [{}] has length {}, expected {}", obj_str(m), m.size(), a.rank()));
  for (auto x : m)
    if (x < 0) throw TypeError("negative multiplicity in [" + obj_str(m) + "]");
}

std::size_t padded(const ObjVec& m) {
  auto s = size(m);
  return s ? static_cast<std::size_t>(s) : 1;
}

}  // namespace

BlockMatrix::BlockMatrix(AlgebraPtr alg, ObjVec rt, ObjVec ct) : alg_(std::move(alg)), rt_(std::move(rt)), ct_(std::move(ct)) {
  check_type(*alg_, rt_);
  check_type(*alg_, ct_);
  raw_ = AlgMatrix(padded(rt_), padded(ct_));
  init_grades();
}

void BlockMatrix::init_grades() {
  rg_ = grades_of(rt_);
  cg_ = grades_of(ct_);
}

BlockMatrix BlockMatrix::identity(AlgebraPtr alg, const ObjVec& m) {
  BlockMatrix x(alg, m, m);
  auto g = grades_of(m);
  for (std::size_t r = 0; r < g.size(); ++r) x.raw_(r, r) = alg->e(g[r]);
  return x;
}

BlockMatrix BlockMatrix::element(AlgebraPtr alg, int i, int j, const AlgElement& x) {
  int n = alg->rank();
  BlockMatrix b(alg, unit_vec(n, i), unit_vec(n, j));
  b.set(0, 0, x);
  return b;
}

BlockMatrix BlockMatrix::basis(AlgebraPtr alg, int p) {
  const auto& be = alg->basis(p);
  return element(alg, be.row, be.col, AlgElement::basis(p));
}

BlockMatrix BlockMatrix::from_raw(AlgebraPtr alg, ObjVec m, ObjVec s, AlgMatrix raw) {
  BlockMatrix b(std::move(alg), std::move(m), std::move(s));
  if (raw.rows() != b.rows() || raw.cols() != b.cols())
    throw TypeError(fmt::format("({}|{})-type matrix must be {}x{}, got {}x{}", obj_str(b.rt_), obj_str(b.ct_), b.rows(),
                                b.cols(), raw.rows(), raw.cols()));
  b.raw_ = std::move(raw);
  if (auto v = b.grade_violation()) throw TypeError(*v);
  return b;
}

void BlockMatrix::set(std::size_t r, std::size_t c, const AlgElement& x) {
  if (r >= rows() || c >= cols()) throw TypeError("entry position out of range");
  if (!x.is_zero()) {
    if (rg_.empty() || cg_.empty()) throw TypeError("nonzero entry in a zero-type slot");
    if (!alg_->in_peirce(x, rg_[r], cg_[c]))
      throw TypeError(fmt::format("entry ({},{}) = {} is not in e_{} A e_{}", r + 1, c + 1, alg_str(*alg_, x),
                                  rg_[r] + 1, cg_[c] + 1));
  }
  raw_(r, c) = x;
}

AlgMatrix BlockMatrix::block(int i, int j) const {
  if (rt_[i] == 0 || ct_[j] == 0) return {};
  auto ro = offsets(rt_);
  auto co = offsets(ct_);
  AlgMatrix b(rt_[i], ct_[j]);
  for (std::int64_t r = 0; r < rt_[i]; ++r)
    for (std::int64_t c = 0; c < ct_[j]; ++c) b(r, c) = raw_(ro[i] + r, co[j] + c);
  return b;
}

std::optional<std::string> BlockMatrix::grade_violation() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto& x = raw_(r, c);
      if (x.is_zero()) continue;
      if (rg_.empty() || cg_.empty()) return "nonzero entry in a zero-type matrix";
      if (!alg_->in_peirce(x, rg_[r], cg_[c]))
        return fmt::format("entry ({},{}) = {} is not in e_{} A e_{}", r + 1, c + 1, alg_str(*alg_, x), rg_[r] + 1,
                           cg_[c] + 1);
    }
  return std::nullopt;
}

BlockMatrix operator*(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.ct_ != y.rt_)
    throw TypeError(fmt::format("compose: column type [{}] vs row type [{}]", obj_str(x.ct_), obj_str(y.rt_)));
  BlockMatrix z(x.alg_, x.rt_, y.ct_);
  z.raw_ = AlgMatrix::mul(*x.alg_, x.raw_, y.raw_);
  return z;
}

BlockMatrix operator+(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.rt_ != y.rt_ || x.ct_ != y.ct_) throw TypeError("sum of matrices of different types");
  BlockMatrix z = x;
  z.raw_ += y.raw_;
  return z;
}

BlockMatrix operator-(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.rt_ != y.rt_ || x.ct_ != y.ct_) throw TypeError("difference of matrices of different types");
  BlockMatrix z = x;
  z.raw_ -= y.raw_;
  return z;
}

BlockMatrix operator*(const Scalar& s, const BlockMatrix& x) {
  BlockMatrix z = x;
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) z.raw_(r, c) *= s;
  return z;
}

bool operator==(const BlockMatrix& x, const BlockMatrix& y) {
  return x.rt_ == y.rt_ && x.ct_ == y.ct_ && x.raw_ == y.raw_;
}

BlockMatrix selector_row(const AlgebraPtr& alg, const ObjVec& m, int i, int k) {
  if (i < 0 || i >= static_cast<int>(m.size()) || k < 0 || k >= m[i]) throw TypeError("selector position out of range");
  BlockMatrix y(alg, unit_vec(alg->rank(), i), m);
  y.set(0, offsets(m)[i] + k, alg->e(i));
  return y;
}

BlockMatrix selector_col(const AlgebraPtr& alg, const ObjVec& m, int i, int k) {
  if (i < 0 || i >= static_cast<int>(m.size()) || k < 0 || k >= m[i]) throw TypeError("selector position out of range");
  BlockMatrix x(alg, m, unit_vec(alg->rank(), i));
  x.set(offsets(m)[i] + k, 0, alg->e(i));
  return x;
}

BlockMatrix vstack(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.col_type() != y.col_type()) throw TypeError("vstack: column types differ");
  const ObjVec& m = x.row_type();
  const ObjVec& mp = y.row_type();
  ObjVec sum = m + mp;
  BlockMatrix z(x.algebra(), sum, x.col_type());
  if (size(sum) == 0) return z;
  auto om = offsets(m), omp = offsets(mp), os = offsets(sum);
  AlgMatrix raw(z.rows(), z.cols());
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::int64_t p = 0; p < m[a]; ++p)
      for (std::size_t c = 0; c < z.cols(); ++c) raw(os[a] + p, c) = x.at(om[a] + p, c);
    for (std::int64_t p = 0; p < mp[a]; ++p)
      for (std::size_t c = 0; c < z.cols(); ++c) raw(os[a] + m[a] + p, c) = y.at(omp[a] + p, c);
  }
  return BlockMatrix::from_raw(x.algebra(), sum, x.col_type(), std::move(raw));
}

BlockMatrix hstack(const BlockMatrix& x, const BlockMatrix& y) {
  if (x.row_type() != y.row_type()) throw TypeError("hstack: row types differ");
  const ObjVec& s = x.col_type();
  const ObjVec& sp = y.col_type();
  ObjVec sum = s + sp;
  BlockMatrix z(x.algebra(), x.row_type(), sum);
  if (size(sum) == 0) return z;
  auto os = offsets(s), osp = offsets(sp), ot = offsets(sum);
  AlgMatrix raw(z.rows(), z.cols());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::int64_t p = 0; p < s[a]; ++p)
      for (std::size_t r = 0; r < z.rows(); ++r) raw(r, ot[a] + p) = x.at(r, os[a] + p);
    for (std::int64_t p = 0; p < sp[a]; ++p)
      for (std::size_t r = 0; r < z.rows(); ++r) raw(r, ot[a] + s[a] + p) = y.at(r, osp[a] + p);
  }
  return BlockMatrix::from_raw(x.algebra(), x.row_type(), sum, std::move(raw));
}

BlockMatrix pi_rearrange(const std::vector<std::vector<BlockMatrix>>& grid) {
  if (grid.empty() || grid[0].empty()) throw TypeError("pi_rearrange: empty grid");
  std::size_t l = grid[0].size();
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (grid[r].size() != l) throw TypeError("pi_rearrange: ragged grid");
    for (std::size_t c = 0; c < l; ++c) {
      if (grid[r][c].row_type() != grid[r][0].row_type()) throw TypeError("pi_rearrange: row types differ in a grid row");
      if (grid[r][c].col_type() != grid[0][c].col_type())
        throw TypeError("pi_rearrange: column types differ in a grid column");
    }
  }
  std::optional<BlockMatrix> acc;
  for (const auto& row : grid) {
    BlockMatrix h = row[0];
    for (std::size_t c = 1; c < l; ++c) h = hstack(h, row[c]);
    acc = acc ? vstack(*acc, h) : h;
  }
  return *acc;
}

namespace {

// P_{m,m'} as a |m+m'| square matrix acting on [X;Y].
DenseMatrix perm_pair(const ObjVec& m, const ObjVec& mp) {
  ObjVec sum = m + mp;
  auto n = static_cast<std::size_t>(size(sum));
  DenseMatrix p(n, n);
  auto om = offsets(m), omp = offsets(mp), os = offsets(sum);
  auto nm = static_cast<std::size_t>(size(m));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::int64_t k = 0; k < m[a]; ++k) p(os[a] + k, om[a] + k) = 1;
    for (std::int64_t k = 0; k < mp[a]; ++k) p(os[a] + m[a] + k, nm + omp[a] + k) = 1;
  }
  return p;
}

DenseMatrix perm_rec(const std::vector<ObjVec>& types, std::size_t r) {
  if (r == 1) return DenseMatrix::identity(static_cast<std::size_t>(size(types[0])));
  ObjVec prefix = types[0];
  for (std::size_t k = 1; k + 1 < r; ++k) prefix = prefix + types[k];
  DenseMatrix inner = perm_rec(types, r - 1);
  auto last = static_cast<std::size_t>(size(types[r - 1]));
  return perm_pair(prefix, types[r - 1]) * block_diag(inner, DenseMatrix::identity(last));
}

}  // namespace

DenseMatrix perm_matrix(const std::vector<ObjVec>& types) {
  if (types.empty()) throw TypeError("perm_matrix: no types");
  std::int64_t total = 0;
  for (const auto& t : types) total += size(t);
  if (total == 0) return DenseMatrix(1, 1);
  return perm_rec(types, types.size());
}

AlgMatrix concat_grid(const std::vector<std::vector<BlockMatrix>>& grid) {
  std::size_t rows = 0, cols = 0;
  for (const auto& row : grid) rows += static_cast<std::size_t>(size(row[0].row_type()));
  for (const auto& b : grid[0]) cols += static_cast<std::size_t>(size(b.col_type()));
  AlgMatrix z(rows ? rows : 1, cols ? cols : 1);
  std::size_t r0 = 0;
  for (const auto& row : grid) {
    auto h = static_cast<std::size_t>(size(row[0].row_type()));
    std::size_t c0 = 0;
    for (const auto& b : row) {
      auto w = static_cast<std::size_t>(size(b.col_type()));
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) z(r0 + r, c0 + c) = b.at(r, c);
      c0 += w;
    }
    r0 += h;
  }
  return z;
}

BlockMatrix transpose_op(const BlockMatrix& x, const AlgebraPtr& target) {
  AlgMatrix t(x.cols(), x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) t(c, r) = x.at(r, c);
  return BlockMatrix::from_raw(target, x.col_type(), x.row_type(), std::move(t));
}

}  // namespace matcat
