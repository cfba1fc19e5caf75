#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/rational.hpp"

namespace heisurf {

namespace detail {

inline constexpr unsigned kMaxCyclotomicOrder = 256;

// Integer coefficients of Phi_n, lowest degree first. Built once, immutable afterwards.
inline const std::vector<std::vector<long long>>& cyclotomic_table() {
  static const std::vector<std::vector<long long>> table = [] {
    std::vector<std::vector<long long>> t(kMaxCyclotomicOrder + 1);
    for (unsigned n = 1; n <= kMaxCyclotomicOrder; ++n) {
      // z^n - 1 divided by Phi_d for every proper divisor d
      std::vector<long long> num(n + 1, 0);
      num[0] = -1;
      num[n] = 1;
      for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& den = t[d];
        std::size_t dd = den.size() - 1;
        std::vector<long long> quot(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
          long long c = num[i];  // den is monic
          quot[i - dd] = c;
          if (c == 0) continue;
          for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = std::move(quot);
      }
      t[n] = std::move(num);
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
inline const std::vector<long long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0 || n > detail::kMaxCyclotomicOrder)
    throw BoundExceeded("cyclotomic order " + std::to_string(n) + " out of range");
  return detail::cyclotomic_table()[n];
}

inline unsigned euler_phi(unsigned n) { return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1); }

/// Element of Q(zeta_n) stored as a polynomial in zeta of degree < phi(n),
/// reduced modulo Phi_n. Equality is coefficientwise.
class Cyclotomic {
 public:
  struct Field {
    unsigned n = 1;
    friend bool operator==(const Field&, const Field&) = default;
  };

  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(const Field& f, const Rational& r) : n_(f.n), c_(euler_phi(f.n)) { c_[0] = r; }

  static Cyclotomic zero(const Field& f) { return Cyclotomic(f, Rational()); }
  static Cyclotomic one(const Field& f) { return Cyclotomic(f, Rational(1)); }
  static Cyclotomic from_rational(const Field& f, const Rational& r) { return Cyclotomic(f, r); }
  Field field() const { return Field{n_}; }

  /// zeta_n^k for any integer k.
  static Cyclotomic zeta(unsigned n, long long k = 1) {
    long long kk = k % static_cast<long long>(n);
    if (kk < 0) kk += n;
    std::vector<Rational> raw(static_cast<std::size_t>(kk) + 1);
    raw[static_cast<std::size_t>(kk)] = Rational(1);
    return reduce(n, std::move(raw));
  }

  /// Canonical representative of a polynomial in z modulo Phi_n.
  static Cyclotomic reduce(unsigned n, std::vector<Rational> raw) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = raw.size(); i-- > deg;) {
      if (raw[i].is_zero()) continue;
      Rational c = raw[i];
      for (std::size_t j = 0; j <= deg; ++j)
        if (phi[j] != 0) raw[i - deg + j] -= c * Rational(static_cast<long>(phi[j]));
    }
    raw.resize(deg);
    Cyclotomic out;
    out.n_ = n;
    out.c_ = std::move(raw);
    return out;
  }

  unsigned order() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0].is_one(); }
  const Rational& rational_part() const { return c_[0]; }

  Cyclotomic inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Solve (multiplication-by-this) * b = e_0 over Q.
    std::size_t d = c_.size();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> basis(j + 1);
      basis[j] = Rational(1);
      Cyclotomic col = *this * reduce(n_, std::move(basis));
      for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
    }
    a[0][d] = Rational(1);
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (a[piv][col].is_zero()) ++piv;
      std::swap(a[piv], a[col]);
      Rational inv = a[col][col].inverse();
      for (auto& x : a[col]) x *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == col || a[r][col].is_zero()) continue;
        Rational f = a[r][col];
        for (std::size_t k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
      }
    }
    Cyclotomic out;
    out.n_ = n_;
    out.c_.resize(d);
    for (std::size_t i = 0; i < d; ++i) out.c_[i] = a[i][d];
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    if (a.c_.size() == 1) return Cyclotomic(a.field(), a.c_[0] * b.c_[0]);
    std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) raw[i + j] += a.c_[i] * b.c_[j];
    }
    return reduce(a.n_, std::move(raw));
  }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

  /// Polynomial in zeta(n), highest power first, e.g. "-zeta(3) - 1".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& c = c_[k];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational mag = neg ? -c : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string z = "zeta(" + std::to_string(n_) + ")";
      if (k > 1) z += "^" + std::to_string(k);
      if (k == 0)
        out += mag.to_string();
      else if (mag.is_one())
        out += z;
      else
        out += mag.to_string() + "*" + z;
    }
    return out.empty() ? "0" : out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

 private:
  void check(const Cyclotomic& o) const {
    if (o.n_ != n_)
      throw FieldMismatch("Q(zeta_" + std::to_string(n_) + ") vs Q(zeta_" + std::to_string(o.n_) + ")");
  }

  unsigned n_;
  std::vector<Rational> c_;
};

/// Canonical representative of raw(z) in Q[z]/Phi_n.
inline Cyclotomic cyclo_reduce(unsigned n, std::vector<Rational> raw) {
  if (n == 0) throw BoundExceeded("cyclotomic order must be positive");
  return Cyclotomic::reduce(n, std::move(raw));
}

}  // namespace heisurf
