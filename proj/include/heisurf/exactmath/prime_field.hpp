#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/rational.hpp"

namespace heisurf {

/// Deterministic primality by trial division; adequate for moduli below 2^32.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Element of GF(p). The modulus travels with the value; mixing moduli throws.
class ModP {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

  struct Field {
    std::uint64_t p = 2;
    friend bool operator==(const Field&, const Field&) = default;
  };

  static Field make_field(std::uint64_t p) {
    if (p > kMaxModulus || !is_prime_u64(p))
      throw BadPrime(std::to_string(p) + " is not a prime below 2^32");
    return Field{p};
  }

  ModP() = default;
  ModP(const Field& f, std::int64_t v) : p_(f.p) {
    auto r = v % static_cast<std::int64_t>(p_);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }

  static ModP zero(const Field& f) { return ModP(f, 0); }
  static ModP one(const Field& f) { return ModP(f, 1); }
  static ModP from_rational(const Field& f, const Rational& r) {
    mpz_class p(static_cast<unsigned long>(f.p));
    mpz_class den = r.denominator() % p;
    if (den == 0) throw BadPrime("prime " + std::to_string(f.p) + " divides a denominator");
    mpz_class num = r.numerator() % p;
    if (num < 0) num += p;
    ModP n(f, static_cast<std::int64_t>(num.get_ui()));
    ModP d(f, static_cast<std::int64_t>(den.get_ui()));
    return n / d;
  }
  Field field() const { return Field{p_}; }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  ModP inverse() const {
    if (v_ == 0) throw DivisionByZero();
    // extended Euclid on signed 64-bit; p < 2^32 keeps intermediates in range
    std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
    std::int64_t x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return ModP(Field{p_}, x0);
  }

  ModP& operator+=(const ModP& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = (v_ * o.v_) % p_;
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) {
    ModP r = a;
    if (r.v_ != 0) r.v_ = r.p_ - r.v_;
    return r;
  }
  friend bool operator==(const ModP& a, const ModP& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  std::string to_string() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.v_; }

 private:
  void check(const ModP& o) const {
    if (o.p_ != p_) throw FieldMismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

}  // namespace heisurf
