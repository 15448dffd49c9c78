#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace matcat {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A field element: either an exact rational or a residue mod p.
// Rationals built from integers promote to residues when mixed with them,
// so integer constants work in any field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT
  Scalar(int v) : q_(v) {}   // NOLINT
  Scalar(long num, long den);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  static Scalar residue(std::uint64_t r, std::uint64_t p);

  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  bool is_modular() const { return p_ != 0; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t residue_value() const { return r_; }
  const mpq_class& rational() const { return q_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inv() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  // converts a rational into the residue field of p
  static std::uint64_t reduce(const mpq_class& q, std::uint64_t p);
  void promote_to(std::uint64_t p);
  void unify(Scalar& o);

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

// Field descriptor: rationals (p == 0) or F_p.
struct Field {
  std::uint64_t p = 0;

  static Field rational() { return {}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p == 0; }
  std::uint64_t characteristic() const { return p; }
  Scalar from_int(long v) const;
  Scalar parse(const std::string& s) const;
  Scalar canon(const Scalar& s) const;
  bool operator==(const Field& o) const { return p == o.p; }
};

bool is_prime(std::uint64_t n);

}  // namespace matcat
