#pragma once

#include <string>

#include "heisurf/exactmath/cyclotomic.hpp"
#include "heisurf/exactmath/prime_field.hpp"
#include "heisurf/exactmath/rational.hpp"

namespace heisurf {

// How a coefficient is spelled inside a serialized term.
// magnitude is empty when the coefficient is +-1.
struct CoeffText {
  bool negative = false;
  std::string magnitude;
};

inline CoeffText format_coefficient(const Rational& c) {
  CoeffText t;
  t.negative = c.sign() < 0;
  Rational mag = t.negative ? -c : c;
  if (!mag.is_one()) t.magnitude = mag.to_string();
  return t;
}

// Symmetric representative, so -1 prints as "-1" rather than "p-1".
inline CoeffText format_coefficient(const ModP& c) {
  CoeffText t;
  std::uint64_t v = c.value();
  std::uint64_t p = c.modulus();
  if (v > p / 2) {
    t.negative = true;
    v = p - v;
  }
  if (v != 1) t.magnitude = std::to_string(v);
  return t;
}

inline CoeffText format_coefficient(const Cyclotomic& c) {
  if (c.is_rational()) return format_coefficient(c.rational_part());
  const auto& cs = c.coefficients();
  std::size_t nonzero = 0, k = 0;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) {
      ++nonzero;
      k = i;
    }
  CoeffText t;
  if (nonzero == 1) {
    t = format_coefficient(cs[k]);
    std::string z = "zeta(" + std::to_string(c.order()) + ")";
    if (k > 1) z += "^" + std::to_string(k);
    t.magnitude = t.magnitude.empty() ? z : t.magnitude + "*" + z;
    return t;
  }
  t.magnitude = "(" + c.to_string() + ")";
  return t;
}

}  // namespace heisurf
