#include "matcat/algebra.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace matcat {

AlgElement AlgElement::basis(std::uint32_t idx, Scalar c) {
  AlgElement a;
  a.add_term(idx, c);
  return a;
}

Scalar AlgElement::coeff(std::uint32_t idx) const {
  for (const auto& t : terms_)
    if (t.idx == idx) return t.c;
  return Scalar();
}

void AlgElement::add_term(std::uint32_t idx, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                             [](const Term& t, std::uint32_t i) { return t.idx < i; });
  if (it != terms_.end() && it->idx == idx) {
    it->c += c;
    if (it->c.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{idx, c});
  }
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].idx < o.terms_[j].idx)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].idx < terms_[i].idx) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].c + o.terms_[j].c;
      if (!c.is_zero()) out.push_back(Term{terms_[i].idx, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) { return *this += -o; }

AlgElement& AlgElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= s;
  return *this;
}

AlgElement AlgElement::operator-() const {
  AlgElement a = *this;
  for (auto& t : a.terms_) t.c = -t.c;
  return a;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].idx != b.terms_[i].idx || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

GradedAlgebra::GradedAlgebra(Field field, int n, std::vector<BasisElem> basis, std::vector<int> idem,
                             const std::vector<Product>& products)
    : field_(field), n_(n), basis_(std::move(basis)), idem_(std::move(idem)) {
  if (n_ < 1) throw std::invalid_argument("algebra needs at least one idempotent");
  if (static_cast<int>(idem_.size()) != n_) throw std::invalid_argument("need exactly n idempotents");
  int d = dim();
  for (const auto& b : basis_)
    if (b.row < 0 || b.row >= n_ || b.col < 0 || b.col >= n_)
      throw std::invalid_argument("basis element '" + b.name + "' has grade out of range");
  for (int i = 0; i < n_; ++i)
    if (idem_[i] < 0 || idem_[i] >= d) throw std::invalid_argument("idempotent index out of range");
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q)
      if (basis_[p].name == basis_[q].name) throw std::invalid_argument("duplicate basis name '" + basis_[p].name + "'");
  table_.assign(static_cast<std::size_t>(d) * d, AlgElement());
  for (const auto& pr : products) {
    if (pr.p < 0 || pr.p >= d || pr.q < 0 || pr.q >= d) throw std::invalid_argument("product index out of range");
    for (const auto& t : pr.value.terms())
      if (static_cast<int>(t.idx) >= d) throw std::invalid_argument("product term index out of range");
    auto& slot = table_[pr.p * d + pr.q];
    AlgElement v;
    for (const auto& t : pr.value.terms()) v.add_term(t.idx, field_.canon(t.c));
    slot += v;
  }
  peirce_.assign(static_cast<std::size_t>(n_) * n_, {});
  for (int p = 0; p < d; ++p) peirce_[basis_[p].row * n_ + basis_[p].col].push_back(p);
  rad_.assign(static_cast<std::size_t>(n_) * n_, {});
  if (field_.is_rational()) compute_radical();
}

std::optional<int> GradedAlgebra::index_of(const std::string& name) const {
  for (int p = 0; p < dim(); ++p)
    if (basis_[p].name == name) return p;
  return std::nullopt;
}

AlgElement GradedAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
  AlgElement r;
  if (a.is_zero() || b.is_zero()) return r;
  int d = dim();
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      const AlgElement& pr = table_[ta.idx * d + tb.idx];
      if (pr.is_zero()) continue;
      Scalar f = ta.c * tb.c;
      for (const auto& t : pr.terms()) r.add_term(t.idx, f * t.c);
    }
  }
  return r;
}

AlgElement GradedAlgebra::one() const {
  AlgElement u;
  for (int i = 0; i < n_; ++i) u.add_term(idem_[i], 1);
  return u;
}

bool GradedAlgebra::in_peirce(const AlgElement& a, int i, int j) const {
  for (const auto& t : a.terms())
    if (basis_[t.idx].row != i || basis_[t.idx].col != j) return false;
  return true;
}

const std::vector<AlgElement>& GradedAlgebra::radical(int i, int j) const {
  if (!radical_available())
    throw UnsupportedCharacteristic(fmt::format("radical needs characteristic 0 (field is F_{})", field_.p));
  return rad_.at(i * n_ + j);
}

std::vector<AlgElement> GradedAlgebra::radical() const {
  std::vector<AlgElement> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (const auto& r : radical(i, j)) out.push_back(r);
  return out;
}

void GradedAlgebra::compute_radical() {
  int d = dim();
  // trace of left multiplication by each basis element
  std::vector<Scalar> tr(d);
  for (int r = 0; r < d; ++r)
    for (int p = 0; p < d; ++p) tr[r] += mul_basis(r, p).coeff(p);
  DenseMatrix g(d, d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q)
      for (const auto& t : mul_basis(p, q).terms()) g(q, p) += t.c * tr[t.idx];
  auto kern = nullspace(g);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const auto& idx = peirce_[i * n_ + j];
      std::vector<AlgElement> out;
      RowSpace again(idx.size());
      for (const auto& v : kern) {
        Vec proj(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) proj[k] = v[idx[k]];
        if (!again.add(proj)) continue;
        AlgElement a;
        for (std::size_t k = 0; k < idx.size(); ++k) a.add_term(idx[k], proj[k]);
        out.push_back(a);
      }
      rad_[i * n_ + j] = std::move(out);
    }
}

std::shared_ptr<const GradedAlgebra> GradedAlgebra::opposite() const {
  std::call_once(op_once_, [this] {
  std::vector<BasisElem> b = basis_;
  for (auto& x : b) std::swap(x.row, x.col);
  std::vector<Product> prods;
  for (int p = 0; p < dim(); ++p)
    for (int q = 0; q < dim(); ++q)
      if (!mul_basis(q, p).is_zero()) prods.push_back({p, q, mul_basis(q, p)});
  op_ = std::make_shared<GradedAlgebra>(field_, n_, std::move(b), idem_, prods);
  });
  return op_;
}

std::vector<Product> GradedAlgebra::products() const {
  std::vector<Product> out;
  for (int p = 0; p < dim(); ++p)
    for (int q = 0; q < dim(); ++q)
      if (!mul_basis(p, q).is_zero()) out.push_back({p, q, mul_basis(p, q)});
  return out;
}

namespace {

bool in_span(const std::vector<AlgElement>& basis, const AlgElement& x, int d) {
  RowSpace s(d);
  for (const auto& b : basis) {
    Vec v(d);
    for (const auto& t : b.terms()) v[t.idx] = t.c;
    s.add(v);
  }
  Vec v(d);
  for (const auto& t : x.terms()) v[t.idx] = t.c;
  return s.contains(v);
}

}  // namespace

Report GradedAlgebra::check() const {
  Report rep;
  int d = dim();

  bool ok = true;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      const auto& pr = mul_basis(p, q);
      if (pr.is_zero()) continue;
      const auto& bp = basis_[p];
      const auto& bq = basis_[q];
      if (bp.col != bq.row || !in_peirce(pr, bp.row, bq.col)) {
        ok = false;
        rep.fail("algebra.grading", {p + 1, q + 1},
                 fmt::format("{}*{} = {} violates the grading", bp.name, basis_[q].name, alg_str(*this, pr)));
      }
    }
  if (ok) rep.pass("algebra.grading", static_cast<long>(d) * d);

  ok = true;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q)
      for (int r = 0; r < d; ++r) {
        AlgElement lhs = mul(mul_basis(p, q), AlgElement::basis(r));
        AlgElement rhs = mul(AlgElement::basis(p), mul_basis(q, r));
        if (lhs != rhs) {
          ok = false;
          rep.fail("algebra.assoc", {p + 1, q + 1, r + 1},
                   fmt::format("({}{}){} = {} but {}({}{}) = {}", basis_[p].name, basis_[q].name, basis_[r].name,
                               alg_str(*this, lhs), basis_[p].name, basis_[q].name, basis_[r].name,
                               alg_str(*this, rhs)));
        }
      }
  if (ok) rep.pass("algebra.assoc", static_cast<long>(d) * d * d);

  ok = true;
  for (int i = 0; i < n_; ++i) {
    const auto& b = basis_[idem_[i]];
    if (b.row != i || b.col != i) {
      ok = false;
      rep.fail("algebra.idempotent", {i + 1}, fmt::format("e_{} = {} is not of grade ({},{})", i + 1, b.name, i + 1, i + 1));
    }
    for (int j = 0; j < n_; ++j) {
      AlgElement want = i == j ? e(i) : AlgElement();
      if (mul(e(i), e(j)) != want) {
        ok = false;
        rep.fail("algebra.idempotent", {i + 1, j + 1}, "e_i e_j != delta_ij e_i");
      }
    }
  }
  AlgElement u = one();
  for (int p = 0; p < d; ++p) {
    AlgElement b = AlgElement::basis(p);
    if (mul(u, b) != b || mul(b, u) != b) {
      ok = false;
      rep.fail("algebra.unit", {p + 1}, fmt::format("sum of idempotents does not fix {}", basis_[p].name));
    }
  }
  if (ok) rep.pass("algebra.idempotent", static_cast<long>(n_) * n_ + d);

  if (peirce(0, 0).size() != 1) {
    rep.fail("algebra.unit_dim", {1}, fmt::format("dim e_1 A e_1 = {}", peirce(0, 0).size()));
  } else {
    rep.pass("algebra.unit_dim", 1);
  }

  if (!radical_available()) {
    rep.skip("algebra.KS", "radical needs characteristic 0");
    rep.skip("algebra.split_local", "radical needs characteristic 0");
    return rep;
  }

  ok = true;
  long count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      for (int p : peirce(i, j))
        for (int q : peirce(j, i)) {
          ++count;
          AlgElement xy = mul_basis(p, q);
          if (!in_span(radical(i, i), xy, d)) {
            ok = false;
            rep.fail("algebra.KS", {i + 1, j + 1},
                     fmt::format("{}{} = {} not in rad(e_{} A e_{})", basis_[p].name, basis_[q].name, alg_str(*this, xy),
                                 i + 1, i + 1));
          }
        }
    }
  if (ok) rep.pass("algebra.KS", count);

  ok = true;
  for (int i = 0; i < n_; ++i) {
    long q = static_cast<long>(peirce(i, i).size()) - static_cast<long>(radical(i, i).size());
    if (q != 1) {
      ok = false;
      rep.fail("algebra.split_local", {i + 1}, fmt::format("dim e_{0} A e_{0} / rad = {1}", i + 1, q));
    }
  }
  if (ok) rep.pass("algebra.split_local", n_);
  return rep;
}

std::string alg_str(const GradedAlgebra& a, const AlgElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& t : x.terms()) {
    std::string c = t.c.str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) {
      s += "-";
      c = c.substr(1);
    } else if (!s.empty()) {
      s += "+";
    }
    if (c != "1") s += c + "*";
    s += a.basis(t.idx).name;
  }
  return s;
}

}  // namespace matcat
