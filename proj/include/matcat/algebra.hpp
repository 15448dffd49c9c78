#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "matcat/dense.hpp"
#include "matcat/report.hpp"
#include "matcat/scalar.hpp"

namespace matcat {

struct UnsupportedCharacteristic : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Term {
  std::uint32_t idx;
  Scalar c;
};

// Sparse element of A over its basis; terms sorted by index, no zero coefficients.
class AlgElement {
 public:
  AlgElement() = default;
  static AlgElement basis(std::uint32_t idx, Scalar c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  Scalar coeff(std::uint32_t idx) const;
  void add_term(std::uint32_t idx, const Scalar& c);

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const Scalar& s);
  AlgElement operator-() const;
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Scalar& s, AlgElement a) { return a *= s; }
  friend bool operator==(const AlgElement& a, const AlgElement& b);
  friend bool operator!=(const AlgElement& a, const AlgElement& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

struct BasisElem {
  std::string name;
  int row = 0;  // e_row A e_col, 0-based
  int col = 0;
};

struct Product {
  int p, q;
  AlgElement value;
};

class GradedAlgebra {
 public:
  GradedAlgebra(Field field, int n, std::vector<BasisElem> basis, std::vector<int> idem,
                const std::vector<Product>& products);
  GradedAlgebra(const GradedAlgebra&) = delete;
  GradedAlgebra& operator=(const GradedAlgebra&) = delete;

  const Field& field() const { return field_; }
  int rank() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElem& basis(int p) const { return basis_.at(p); }
  const std::vector<BasisElem>& basis() const { return basis_; }
  int idem(int i) const { return idem_.at(i); }
  const std::vector<int>& idems() const { return idem_; }
  std::optional<int> index_of(const std::string& name) const;

  const AlgElement& mul_basis(int p, int q) const { return table_[p * dim() + q]; }
  AlgElement mul(const AlgElement& a, const AlgElement& b) const;
  AlgElement e(int i) const { return AlgElement::basis(idem_.at(i)); }
  AlgElement one() const;

  const std::vector<int>& peirce(int i, int j) const { return peirce_.at(i * n_ + j); }
  bool in_peirce(const AlgElement& a, int i, int j) const;

  Report check() const;

  bool radical_available() const { return field_.is_rational(); }
  // Homogeneous basis of rad(A) restricted to e_i A e_j.
  const std::vector<AlgElement>& radical(int i, int j) const;
  std::vector<AlgElement> radical() const;

  // cached; basis shared, grades swapped, p*q becomes q*p
  std::shared_ptr<const GradedAlgebra> opposite() const;
  std::vector<Product> products() const;  // nonzero structure constants

 private:
  void compute_radical();

  Field field_;
  int n_;
  std::vector<BasisElem> basis_;
  std::vector<int> idem_;
  std::vector<AlgElement> table_;
  std::vector<std::vector<int>> peirce_;
  std::vector<std::vector<AlgElement>> rad_;
  mutable std::once_flag op_once_;
  mutable std::shared_ptr<const GradedAlgebra> op_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

std::string alg_str(const GradedAlgebra& a, const AlgElement& x);

}  // namespace matcat
