#include "matcat/scalar.hpp"

#include <regex>

namespace matcat {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class m;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw FieldError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = r % p;
  return s;
}

std::uint64_t Scalar::reduce(const mpq_class& q, std::uint64_t p) {
  std::uint64_t num = mpz_mod_u64(q.get_num(), p);
  std::uint64_t den = mpz_mod_u64(q.get_den(), p);
  if (den == 0) throw FieldError("rational " + q.get_str() + " has no image mod " + std::to_string(p));
  return mulmod(num, powmod(den, p - 2, p), p);
}

void Scalar::promote_to(std::uint64_t p) {
  r_ = reduce(q_, p);
  p_ = p;
  q_ = 0;
}

void Scalar::unify(Scalar& o) {
  if (p_ == o.p_) return;
  if (p_ && o.p_) throw FieldError("mixed prime fields");
  if (p_) {
    o.promote_to(p_);
  } else {
    promote_to(o.p_);
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_) {
    s.r_ = r_ ? p_ - r_ : 0;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ = (r_ + o.r_) % p_;
    } else {
      q_ += o.q_;
    }
    return *this;
  }
  Scalar b = o;
  unify(b);
  return *this += b;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ = mulmod(r_, o.r_, p_);
    } else {
      q_ *= o.q_;
    }
    return *this;
  }
  Scalar b = o;
  unify(b);
  return *this *= b;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar s = *this;
  if (p_) {
    s.r_ = powmod(r_, p_ - 2, p_);
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  Scalar b = o;
  unify(b);
  return *this *= b.inv();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  Scalar x = a;
  Scalar y = b;
  x.unify(y);
  return x.r_ == y.r_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  return Field{p};
}

Scalar Field::from_int(long v) const { return canon(Scalar(v)); }

Scalar Field::canon(const Scalar& s) const {
  if (p == 0) {
    if (s.is_modular()) throw FieldError("residue in rational field");
    return s;
  }
  if (s.is_modular()) {
    if (s.modulus() != p) throw FieldError("mixed prime fields");
    return s;
  }
  return Scalar::residue(0, p) + s;
}

Scalar Field::parse(const std::string& s) const {
  static const std::regex lit("-?[0-9]+(/[0-9]+)?");
  if (!std::regex_match(s, lit)) throw FieldError("bad scalar literal '" + s + "'");
  mpq_class q;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw FieldError("zero denominator in '" + s + "'");
    q = mpq_class(num, den);
    q.canonicalize();
  } else {
    q = mpq_class(mpz_class(s));
  }
  return canon(Scalar(q));
}

}  // namespace matcat
