#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/cyclotomic.hpp"
#include "heisurf/exactmath/prime_field.hpp"
#include "heisurf/exactmath/rational.hpp"
#include "heisurf/poly/multipoly.hpp"

namespace heisurf {

// zeta(k)^e as an element of the coefficient field, or nullopt if the field
// has no primitive k-th root of unity we can name.
inline std::optional<Rational> zeta_in(const Rational::Field&, unsigned k, unsigned e) {
  if (k == 1) return Rational(1);
  if (k == 2) return Rational(e % 2 ? -1 : 1);
  return std::nullopt;
}
inline std::optional<ModP> zeta_in(const ModP::Field& f, unsigned k, unsigned e) {
  if (k == 1) return ModP::one(f);
  if (k == 2) return ModP(f, e % 2 ? -1 : 1);
  return std::nullopt;
}
inline std::optional<Cyclotomic> zeta_in(const Cyclotomic::Field& f, unsigned k, unsigned e) {
  if (k == 0 || f.n % k != 0) return std::nullopt;
  return Cyclotomic::zeta(f.n, static_cast<long long>(f.n / k) * e);
}

namespace detail {

inline constexpr unsigned kMaxParsedExponent = 4096;

template <FieldElement F>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr<F> ring) : s_(text), ring_(std::move(ring)) {}

  MultiPoly<F> run() {
    MultiPoly<F> p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  unsigned small_uint() {
    std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 6 || std::stoul(d) > kMaxParsedExponent) {
      pos_ = at;
      fail("exponent too large");
    }
    return static_cast<unsigned>(std::stoul(d));
  }
  unsigned optional_power() { return accept('^') ? small_uint() : 1U; }

  MultiPoly<F> expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    MultiPoly<F> acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MultiPoly<F> term() {
    MultiPoly<F> acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly<F> factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly<F> inner = expr();
      expect(')');
      return pow(inner, optional_power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      mpz_class num(digits());
      mpz_class den(1);
      if (accept('/')) {
        den = mpz_class(digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      try {
        return MultiPoly<F>::constant(ring_, q);
      } catch (const BadPrime&) {
        pos_ = at;
        fail("coefficient denominator vanishes in the field");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(at, pos_ - at));
      if (name == "zeta" && peek('(')) {
        expect('(');
        unsigned k = small_uint();
        expect(')');
        unsigned e = optional_power();
        auto z = zeta_in(ring_->field, k, e);
        if (!z) {
          pos_ = at;
          fail("zeta(" + std::to_string(k) + ") is not available in the coefficient field");
        }
        return MultiPoly<F>::constant(ring_, *z);
      }
      auto idx = ring_->vars.find(name);
      if (!idx) throw UnknownVariable(name);
      return MultiPoly<F>::variable(ring_, *idx, optional_power());
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial grammar:
///   expr := ['+'|'-'] term (('+'|'-') term)*   term := factor ('*' factor)*
///   factor := int ['/' uint] | var ['^' uint] | 'zeta(' uint ')' ['^' uint] | '(' expr ')' ['^' uint]
template <FieldElement F>
MultiPoly<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolyParser<F>(text, ring).run();
}

}  // namespace heisurf
