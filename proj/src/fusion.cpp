#include "matcat/fusion.hpp"

#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

namespace matcat {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ring coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ring coefficient overflow");
  return r;
}

}  // namespace

std::int64_t size(const ObjVec& m) {
  std::int64_t s = 0;
  for (auto x : m) s += x;
  return s;
}

bool is_zero(const ObjVec& m) {
  for (auto x : m)
    if (x) return false;
  return true;
}

ObjVec unit_vec(int n, int i) {
  ObjVec v(n, 0);
  v.at(i) = 1;
  return v;
}

ObjVec operator+(const ObjVec& a, const ObjVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("object length mismatch");
  ObjVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::string obj_str(const ObjVec& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s;
}

FusionRing::FusionRing(int n, std::vector<std::int64_t> c) : n_(n), c_(std::move(c)) {
  if (n < 1) throw std::invalid_argument("fusion ring needs rank >= 1");
  if (c_.size() != static_cast<std::size_t>(n) * n * n) throw std::invalid_argument("fusion tensor has wrong size");
  for (auto x : c_)
    if (x < 0) throw std::invalid_argument("fusion coefficients must be nonnegative");
}

ObjVec FusionRing::cvec(int i, int j) const {
  ObjVec v(n_);
  for (int k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

RingElement FusionRing::multiply(const RingElement& x, const RingElement& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("ring element length mismatch");
  RingElement z(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n_; ++j) {
      if (!y[j]) continue;
      std::int64_t f = checked_mul(x[i], y[j]);
      for (int k = 0; k < n_; ++k)
        if (c(i, j, k)) z[k] = checked_add(z[k], checked_mul(f, c(i, j, k)));
    }
  }
  return z;
}

ObjVec FusionRing::tensor(const ObjVec& m, const ObjVec& s) const { return multiply(m, s); }

Report FusionRing::check() const {
  Report rep;
  long n_unit = 0;
  bool unit_ok = true;
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) {
      ++n_unit;
      std::int64_t want = j == k ? 1 : 0;
      if (c(0, j, k) != want) {
        unit_ok = false;
        rep.fail("fusion.unit", {1, j + 1, k + 1}, fmt::format("c_1jk = {}, expected {}", c(0, j, k), want));
      }
      if (c(j, 0, k) != want) {
        unit_ok = false;
        rep.fail("fusion.unit", {j + 1, 1, k + 1}, fmt::format("c_i1k = {}, expected {}", c(j, 0, k), want));
      }
    }
  if (unit_ok) rep.pass("fusion.unit", n_unit);

  bool nz_ok = true;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (is_zero(cvec(i, j))) {
        nz_ok = false;
        rep.fail("fusion.nonzero", {i + 1, j + 1}, "r_i r_j = 0");
      }
  if (nz_ok) rep.pass("fusion.nonzero", static_cast<long>(n_) * n_);

  bool assoc_ok = true;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int l = 0; l < n_; ++l)
        for (int t = 0; t < n_; ++t) {
          std::int64_t lhs = 0, rhs = 0;
          for (int k = 0; k < n_; ++k) {
            lhs += c(i, j, k) * c(k, l, t);
            rhs += c(j, l, k) * c(i, k, t);
          }
          if (lhs != rhs) {
            assoc_ok = false;
            rep.fail("fusion.assoc", {i + 1, j + 1, l + 1, t + 1}, fmt::format("{} != {}", lhs, rhs));
          }
        }
  if (assoc_ok) rep.pass("fusion.assoc", static_cast<long>(n_) * n_ * n_ * n_);
  return rep;
}

// Grammar:
//   expr   := term ('+' term | '-' term)*
//   term   := factor (('*' | '·')? factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | 'r' integer | '(' expr ')'
namespace {

class Parser {
 public:
  Parser(const FusionRing& r, const std::string& s) : r_(r), s_(s) {}

  RingElement run() {
    RingElement v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument(fmt::format("green-ring expression: {} at position {}", what, pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 18) error("integer too large");
    return std::stoll(digits);
  }

  RingElement scalar(std::int64_t v) const {
    RingElement e(r_.rank(), 0);
    e[0] = v;
    return e;
  }

  RingElement expr() {
    RingElement v = term();
    for (;;) {
      if (eat("+")) {
        RingElement w = term();
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = checked_add(v[k], w[k]);
      } else if (eat("-")) {
        RingElement w = term();
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = checked_add(v[k], -w[k]);
      } else {
        return v;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char ch = s_[pos_];
    return ch == '(' || ch == 'r' || std::isdigit(static_cast<unsigned char>(ch));
  }

  RingElement term() {
    RingElement v = factor();
    for (;;) {
      if (eat("*") || eat("\xC2\xB7")) {
        v = r_.multiply(v, factor());
      } else if (starts_factor()) {
        v = r_.multiply(v, factor());
      } else {
        return v;
      }
    }
  }

  RingElement factor() {
    RingElement base = atom();
    if (eat("^")) {
      std::int64_t e = integer();
      RingElement acc = scalar(1);
      for (std::int64_t k = 0; k < e; ++k) acc = r_.multiply(acc, base);
      return acc;
    }
    return base;
  }

  RingElement atom() {
    skip();
    if (eat("(")) {
      RingElement v = expr();
      if (!eat(")")) error("expected ')'");
      return v;
    }
    if (eat("r")) {
      std::int64_t i = integer();
      if (i < 1 || i > r_.rank()) error(fmt::format("basis symbol r{} out of range", i));
      RingElement e(r_.rank(), 0);
      e[i - 1] = 1;
      return e;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return scalar(integer());
    error("expected r<k>, integer or '('");
  }

  const FusionRing& r_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement eval_ring_expr(const FusionRing& r, const std::string& expr) { return Parser(r, expr).run(); }

std::string ring_str(const RingElement& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k]) continue;
    if (x[k] < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    std::int64_t a = x[k] < 0 ? -x[k] : x[k];
    if (a != 1) s += std::to_string(a);
    s += "r" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace matcat
