#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/matrix.hpp"
#include "heisurf/poly/multipoly.hpp"

namespace heisurf {

/// Sylvester matrix of a and b in var. With m = deg a, n = deg b the first n
/// rows hold shifted copies of a's coefficients (highest power first), the
/// last m rows those of b.
template <FieldElement F>
ExactMatrix<MultiPoly<F>> sylvester_matrix(const MultiPoly<F>& a, const MultiPoly<F>& b, std::size_t var) {
  std::size_t m = coefficients_in(a, var).size() - 1, n = coefficients_in(b, var).size() - 1;
  if (a.is_zero() || b.is_zero() || m == 0 || n == 0)
    throw DegreeZero("resultant needs positive degree in '" + a.ring()->vars.name(var) + "'");
  return sylvester_matrix(a, b, var, m, n);
}

/// Sylvester matrix for formal degrees m >= deg a, n >= deg b: the
/// dehomogenized resultant of two binary forms of degrees m and n.
template <FieldElement F>
ExactMatrix<MultiPoly<F>> sylvester_matrix(const MultiPoly<F>& a, const MultiPoly<F>& b, std::size_t var,
                                           std::size_t m, std::size_t n) {
  auto ca = coefficients_in(a, var);
  auto cb = coefficients_in(b, var);
  if (m == 0 || n == 0 || ca.size() > m + 1 || cb.size() > n + 1)
    throw DegreeZero("formal degrees must be positive and bound the actual degrees");
  ca.resize(m + 1, MultiPoly<F>(a.ring()));
  cb.resize(n + 1, MultiPoly<F>(b.ring()));
  std::size_t size = m + n;
  ExactMatrix<MultiPoly<F>> s(size, size, MultiPoly<F>(a.ring()));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = ca[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s(n + r, r + j) = cb[n - j];
  return s;
}

/// Res_var(a, b) as the Bareiss determinant of the Sylvester matrix.
template <FieldElement F>
MultiPoly<F> sylvester_resultant(const MultiPoly<F>& a, const MultiPoly<F>& b, std::size_t var) {
  return det_bareiss(sylvester_matrix(a, b, var));
}
template <FieldElement F>
MultiPoly<F> sylvester_resultant(const MultiPoly<F>& a, const MultiPoly<F>& b, std::string_view var) {
  return sylvester_resultant(a, b, a.ring()->vars.index(var));
}
template <FieldElement F>
MultiPoly<F> sylvester_resultant(const MultiPoly<F>& a, const MultiPoly<F>& b, std::string_view var, std::size_t m,
                                 std::size_t n) {
  return det_bareiss(sylvester_matrix(a, b, a.ring()->vars.index(var), m, n));
}

/// Discriminant of a x^3 + b x^2 + c x + d.
template <class R>
R cubic_discriminant(const R& a, const R& b, const R& c, const R& d) {
  auto k = [&](long v) {
    if constexpr (FieldElement<R>)
      return R::from_rational(a.field(), Rational(v));
    else
      return one_like(a).scaled(Rational(v));
  };
  return b * b * c * c - k(4) * a * c * c * c - k(4) * b * b * b * d - k(27) * a * a * d * d + k(18) * a * b * c * d;
}

/// (-1)^{n(n-1)/2} Res(p, p') / lc(p), with n = deg_var p >= 2.
template <FieldElement F>
MultiPoly<F> univariate_discriminant(const MultiPoly<F>& p, std::size_t var) {
  auto coeffs = coefficients_in(p, var);
  std::size_t n = coeffs.size() - 1;
  if (p.is_zero() || n < 2) throw DegreeZero("discriminant needs degree >= 2");
  MultiPoly<F> res = sylvester_resultant(p, partial_derivative(p, var), var);
  MultiPoly<F> d = exact_divide(res, coeffs[n]);
  return (n * (n - 1) / 2) % 2 ? -d : d;
}
template <FieldElement F>
MultiPoly<F> univariate_discriminant(const MultiPoly<F>& p, std::string_view var) {
  return univariate_discriminant(p, p.ring()->vars.index(var));
}

}  // namespace heisurf
