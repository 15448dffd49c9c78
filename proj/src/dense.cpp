#include "matcat/dense.hpp"

#include <string>

namespace matcat {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec DenseMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("apply: length mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("mat_mul: " + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_));
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("add: shape mismatch");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("sub: shape mismatch");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<std::size_t> rref(DenseMatrix& a) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::size_t rank(DenseMatrix a) { return rref(a).size(); }

std::vector<Vec> nullspace(const DenseMatrix& a) {
  DenseMatrix r = a;
  auto piv = rref(r);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!r(i, f).is_zero()) v[piv[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<DenseMatrix> try_inverse(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = a.rows();
  DenseMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  DenseMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

DenseMatrix inverse(const DenseMatrix& a) {
  auto r = try_inverse(a);
  if (!r) throw NotInvertible("matrix is singular");
  return *r;
}

std::optional<Vec> solve(const DenseMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: length mismatch");
  DenseMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

DenseMatrix kron(const DenseMatrix& outer, const DenseMatrix& inner) {
  DenseMatrix k(outer.rows() * inner.rows(), outer.cols() * inner.cols());
  for (std::size_t a = 0; a < outer.rows(); ++a)
    for (std::size_t b = 0; b < outer.cols(); ++b) {
      const Scalar& x = outer(a, b);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < inner.rows(); ++c)
        for (std::size_t d = 0; d < inner.cols(); ++d)
          if (!inner(c, d).is_zero()) k(a * inner.rows() + c, b * inner.cols() + d) = x * inner(c, d);
    }
  return k;
}

DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row mismatch");
  DenseMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

DenseMatrix vconcat(const DenseMatrix& a, const DenseMatrix& b) {
  return hconcat(a.transpose(), b.transpose()).transpose();
}

DenseMatrix block_diag(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Vec RowSpace::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& f = v[piv_[k]];
    if (f.is_zero()) continue;
    Scalar c = f;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool RowSpace::add(const Vec& v) {
  if (v.size() != dim_) throw DimensionError("RowSpace: length mismatch");
  Vec r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = r[p].inv();
  for (auto& x : r) x *= inv;
  // keep earlier rows reduced against the new pivot
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  piv_.push_back(p);
  return true;
}

}  // namespace matcat
