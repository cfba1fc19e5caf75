#pragma once

#include "heisurf/elim/resultant.hpp"
#include "heisurf/exactmath/matrix.hpp"
#include "heisurf/surfaces/family.hpp"

namespace heisurf {

inline RingPtr<Rational> chpp_ring() {
  static const auto r = make_ring<Rational>({"y1", "y2", "x1", "x2", "lam", "z"});
  return r;
}

/// x1 (y1^3 + lam y1 y2^2) + x2 (y2^3 + lam y2 y1^2)
inline QPoly chpp_equation(const Param& lambda = std::nullopt) {
  auto r = chpp_ring();
  QPoly l = param_poly(r, "lam", lambda);
  QPoly y1 = qvar(r, "y1"), y2 = qvar(r, "y2");
  return qvar(r, "x1") * (pow(y1, 3) + l * y1 * pow(y2, 2)) + qvar(r, "x2") * (pow(y2, 3) + l * y2 * pow(y1, 2));
}

inline FamilyDescriptor chpp_family(const Param& lambda = std::nullopt) {
  return FamilyDescriptor{"CHPP", HeisType(1, 2), "x", {{"lam", param_text(lambda)}}, chpp_ring(),
                          {chpp_equation(lambda)}, {"f"}};
}

/// The printed 4x4 determinant.
inline ExactMatrix<QPoly> chpp_discriminant_matrix(const Param& lambda = std::nullopt) {
  auto r = chpp_ring();
  QPoly l = param_poly(r, "lam", lambda), x1 = qvar(r, "x1"), x2 = qvar(r, "x2"), o(r);
  QPoly three = qconst(r, 3), two = qconst(r, 2);
  return ExactMatrix<QPoly>{{three * x1, two * l * x2, l * x1, o},
                            {o, three * x1, two * l * x2, l * x1},
                            {l * x2, two * l * x1, three * x2, o},
                            {o, l * x2, two * l * x1, three * x2}};
}

inline QPoly chpp_discriminant(const Param& lambda = std::nullopt) {
  return det_bareiss(chpp_discriminant_matrix(lambda));
}

/// Independent route: Res_{y1} of the two y-partials of the equation at y2 = 1,
/// taken with formal degrees (2, 2) so it specializes correctly in lambda.
inline QPoly chpp_discriminant_resultant(const Param& lambda = std::nullopt) {
  QPoly f = chpp_equation(lambda);
  QPoly one = qconst(f.ring(), 1);
  QPoly a = substitute(partial_derivative(f, "y1"), "y2", one);
  QPoly b = substitute(partial_derivative(f, "y2"), "y2", one);
  return sylvester_resultant(a, b, "y1", 2, 2);
}

/// Determinant of the x-coefficient matrix of the two y-partials:
/// (3y1^2 + lam y2^2)(3y2^2 + lam y1^2) - (2 lam y1 y2)^2.
inline QPoly chpp_partials_determinant(const Param& lambda = std::nullopt) {
  QPoly f = chpp_equation(lambda);
  QPoly f1 = partial_derivative(f, "y1"), f2 = partial_derivative(f, "y2");
  ExactMatrix<QPoly> m{{coefficients_in(f1, "x1").at(1), coefficients_in(f1, "x2").at(1)},
                       {coefficients_in(f2, "x1").at(1), coefficients_in(f2, "x2").at(1)}};
  return det_cofactor(m);
}

/// The singular-fibre quartic in z (y1 = 1, y2 = z). Symbolic lam gives the
/// denominator-free form lam + lam z^4 + (3 - lam^2) z^2 (determinant / 3);
/// numeric lam gives the monic 1 + z^4 + (3 - lam^2)/lam z^2 (determinant / 3 lam).
inline QPoly chpp_singular_fiber_quartic(const Param& lambda = std::nullopt) {
  if (lambda && lambda->is_zero()) throw LambdaZero();
  auto r = chpp_ring();
  QPoly det = substitute(chpp_partials_determinant(lambda), {{"y1", qconst(r, 1)}, {"y2", qvar(r, "z")}});
  return exact_divide(det, lambda ? qconst(r, *lambda * Rational(3)) : qconst(r, 3));
}

/// Res_{y2}(1 + lam y2^2, y2^2 + lam): the pair (y1^2 + lam y2^2, y2^2 + lam y1^2)
/// at y1 = 1 has a common root iff this vanishes.
inline QPoly chpp_companion_resultant() {
  auto r = chpp_ring();
  QPoly l = qvar(r, "lam"), y2 = qvar(r, "y2"), one = qconst(r, 1);
  return sylvester_resultant(one + l * pow(y2, 2), pow(y2, 2) + l, "y2");
}

/// Zeuthen-Segre: e(blow-up) = -2 D^2 + mu.
inline long zeuthen_segre_count(long d_squared, long euler_blowup) { return euler_blowup + 2 * d_squared; }

}  // namespace heisurf
