#pragma once

#include <array>

#include "heisurf/elim/resultant.hpp"
#include "heisurf/exactmath/matrix.hpp"
#include "heisurf/surfaces/family.hpp"

namespace heisurf {

inline RingPtr<Rational> pp4_ring() {
  static const auto r =
      make_ring<Rational>({"y1", "y2", "y3", "s1", "s2", "s3", "lam", "mu", "s", "t", "a", "c"});
  return r;
}

/// M = [[s1, s3, s2], [lam y1^2 + mu y2 y3, lam y3^2 + mu y1 y2, lam y2^2 + mu y1 y3]].
inline ExactMatrix<QPoly> pp4_matrix(const Param& lambda, const Param& mu) {
  auto r = pp4_ring();
  QPoly l = param_poly(r, "lam", lambda), m = param_poly(r, "mu", mu);
  QPoly y1 = qvar(r, "y1"), y2 = qvar(r, "y2"), y3 = qvar(r, "y3");
  return ExactMatrix<QPoly>{{qvar(r, "s1"), qvar(r, "s3"), qvar(r, "s2")},
                            {l * y1 * y1 + m * y2 * y3, l * y3 * y3 + m * y1 * y2, l * y2 * y2 + m * y1 * y3}};
}

/// (F1, F2, F3) from the lex-ordered minors (m01, m02, m12) = (F2, -F3, F1).
inline std::array<QPoly, 3> pp4_equations(const Param& lambda, const Param& mu) {
  auto mins = minors(pp4_matrix(lambda, mu), 2);
  return {mins[2], mins[0], -mins[1]};
}

/// The paper's PP4 family: lam normalized to 1.
inline FamilyDescriptor pp4_family(const Param& mu = std::nullopt) {
  auto f = pp4_equations(Rational(1), mu);
  return FamilyDescriptor{"PP4", HeisType(1, 3), "s", {{"lam", "1"}, {"mu", param_text(mu)}}, pp4_ring(),
                          {f[0], f[1], f[2]}, {"F1", "F2", "F3"}};
}

/// The printed A_{s,t}.
inline ExactMatrix<QPoly> pp4_pencil_matrix(const Param& mu = std::nullopt) {
  auto r = pp4_ring();
  QPoly m = param_poly(r, "mu", mu), s = qvar(r, "s"), t = qvar(r, "t");
  QPoly s1 = qvar(r, "s1"), s2 = qvar(r, "s2"), s3 = qvar(r, "s3");
  Rational half(1, 2);
  QPoly d = s2 * t - s3 * s;
  return ExactMatrix<QPoly>{{d, (m * s1 * s).scaled(half), (-m * s1 * t).scaled(half)},
                            {(m * s1 * s).scaled(half), -s1 * t, (m * d).scaled(half)},
                            {(-m * s1 * t).scaled(half), (m * d).scaled(half), s1 * s}};
}

/// p(s,t) = det A_{s,t}.
inline QPoly pp4_pencil_poly(const Param& mu = std::nullopt) { return det_bareiss(pp4_pencil_matrix(mu)); }

/// Coefficients (a, b, c, d) of p = a s^3 + b s^2 t + c s t^2 + d t^3.
inline std::array<QPoly, 4> binary_cubic_coefficients(const QPoly& p) {
  auto r = p.ring();
  QPoly at_t1 = substitute(p, "t", qconst(r, 1));
  auto by_s = coefficients_in(at_t1, "s");
  by_s.resize(4, QPoly(r));
  return {by_s[3], by_s[2], by_s[1], by_s[0]};
}

/// Disc(4p), i.e. the discriminant after clearing the 1/4 in A_{s,t}.
inline QPoly binary_cubic_discriminant_cleared(const QPoly& p) {
  auto c = binary_cubic_coefficients(p.scaled(Rational(4)));
  return cubic_discriminant(c[0], c[1], c[2], c[3]);
}

/// det of the symmetric matrix of the conic s G + t H in (y1, y2, y3).
inline QPoly conic_pencil_det(const QPoly& g, const QPoly& h) {
  auto r = g.ring();
  return det_bareiss(quadric_matrix(qvar(r, "s") * g + qvar(r, "t") * h, {"y1", "y2", "y3"}));
}

/// Branch sextic on the chart s1 != 0: Disc(4 p) / s1^6, p from the printed A_{s,t}.
inline QPoly pp4_branch_locus(const Param& mu = std::nullopt) {
  QPoly disc = binary_cubic_discriminant_cleared(pp4_pencil_poly(mu));
  return exact_divide(disc, qvar(disc.ring(), "s1", 6));
}

/// Chart s_k != 0 (k = 1, 2, 3): pencil of the two equations whose minors
/// contain s_k, recomputed from their quadric matrices.
inline QPoly pp4_branch_locus_chart(unsigned k, const Param& lambda, const Param& mu) {
  auto f = pp4_equations(lambda, mu);
  QPoly p;
  switch (k) {
    case 1: p = conic_pencil_det(f[1], f[2]); break;
    case 2: p = conic_pencil_det(f[2], f[0]); break;
    case 3: p = conic_pencil_det(f[0], f[1]); break;
    default: throw Error("chart index must be 1, 2 or 3");
  }
  QPoly disc = binary_cubic_discriminant_cleared(p);
  return exact_divide(disc, qvar(disc.ring(), "s" + std::to_string(k), 6));
}

/// The printed sextic, term by term; the middle coefficient sits on the
/// cyclic orbit s1^3 s2^3 + s1^3 s3^3 + s2^3 s3^3.
inline QPoly pp4_printed_sextic(const Param& mu = std::nullopt) {
  auto r = pp4_ring();
  QPoly m = param_poly(r, "mu", mu);
  QPoly s1 = qvar(r, "s1"), s2 = qvar(r, "s2"), s3 = qvar(r, "s3");
  auto c = [&](long v) { return qconst(r, v); };
  QPoly k6 = c(-27) * pow(m, 8);
  QPoly k33 = pow(m, 2) * (c(-4) * pow(m, 9) + c(6) * pow(m, 6) - c(192) * pow(m, 3) - c(256));
  QPoly k411 = pow(m, 4) * (c(18) * pow(m, 6) + c(144) * pow(m, 3) + c(288));
  QPoly k222 = pow(m, 12) - c(92) * pow(m, 9) - c(336) * pow(m, 6) + c(256) * pow(m, 3) + c(256);
  return k6 * (pow(s1, 6) + pow(s2, 6) + pow(s3, 6)) +
         k33 * (pow(s1, 3) * pow(s2, 3) + pow(s1, 3) * pow(s3, 3) + pow(s2, 3) * pow(s3, 3)) +
         k411 * s1 * s2 * s3 * (pow(s1, 3) + pow(s2, 3) + pow(s3, 3)) + k222 * pow(s1 * s2 * s3, 2);
}

struct SexticCoefficients {
  QPoly pure6;     // on s1^6 (and its cyclic partners)
  QPoly cubes;     // on s1^3 s2^3
  QPoly cubes13;   // on s1^3 s3^3
  QPoly mixed;     // on s1^4 s2 s3
  QPoly central;   // on s1^2 s2^2 s3^2
  QPoly s1s3;      // on the printed s1 s3 (degree 2)
};

inline SexticCoefficients sextic_coefficients(const QPoly& f) {
  std::vector<std::string> v{"s1", "s2", "s3"};
  return {coefficient_of(f, v, {6, 0, 0}), coefficient_of(f, v, {3, 3, 0}), coefficient_of(f, v, {3, 0, 3}),
          coefficient_of(f, v, {4, 1, 1}), coefficient_of(f, v, {2, 2, 2}), coefficient_of(f, v, {1, 0, 1})};
}

/// Our reading of the Penegini-Polizzi form: the mu-sextic homogenized by
/// mu = -a/c and scaled so that -27 PP(a = -mu, c = 1) is the sextic.
inline QPoly pp_form_from_sextic(const QPoly& sextic) {
  auto r = sextic.ring();
  const std::size_t mu = r->vars.index("mu"), a = r->vars.index("a"), c = r->vars.index("c");
  const unsigned deg = sextic.degree_in(mu);
  std::vector<QPoly::Term> out;
  for (const auto& [e, coef] : sextic.terms()) {
    Exponents x = e;
    unsigned k = x[mu];
    x[mu] = 0;
    x[a] = k;
    x[c] = deg - k;
    Rational v = coef * Rational(-1, 27);
    if (k % 2) v = -v;
    out.emplace_back(std::move(x), v);
  }
  return QPoly::from_terms(r, std::move(out));
}

/// gamma = (F1 wedge F2) / s3 in the wedge basis of S^2(V^vee) with monomials
/// y1^2, y1y2, y1y3, y2^2, y2y3, y3^2 and pairs in lex order.
inline std::vector<QPoly> pp4_gamma(const Param& lambda = std::nullopt, const Param& mu = std::nullopt) {
  auto f = pp4_equations(lambda, mu);
  const std::vector<std::string> y{"y1", "y2", "y3"};
  const std::vector<std::vector<unsigned>> mons{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  std::vector<QPoly> c1, c2;
  for (const auto& e : mons) {
    c1.push_back(coefficient_of(f[0], y, e));
    c2.push_back(coefficient_of(f[1], y, e));
  }
  QPoly s3 = qvar(pp4_ring(), "s3");
  std::vector<QPoly> out;
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = i + 1; j < mons.size(); ++j) out.push_back(exact_divide(c1[i] * c2[j] - c1[j] * c2[i], s3));
  return out;
}

inline const std::vector<std::string>& pp4_gamma_labels() {
  static const std::vector<std::string> labels{
      "y1^2^y1y2", "y1^2^y1y3", "y1^2^y2^2", "y1^2^y2y3", "y1^2^y3^2", "y1y2^y1y3", "y1y2^y2^2", "y1y2^y2y3",
      "y1y2^y3^2", "y1y3^y2^2", "y1y3^y2y3", "y1y3^y3^2", "y2^2^y2y3", "y2^2^y3^2", "y2y3^y3^2"};
  return labels;
}

/// (a, b, c, d, e) read off gamma: a, b, c from the s2, s3, s3 coefficients of
/// components 0, 1, 2, d from component 3, e from the s1 coefficient of component 5.
inline std::array<QPoly, 5> pp4_gamma_dictionary(const std::vector<QPoly>& gamma) {
  std::vector<std::string> s{"s1", "s2", "s3"};
  return {coefficient_of(gamma.at(0), s, {0, 1, 0}), coefficient_of(gamma.at(1), s, {0, 0, 1}),
          coefficient_of(gamma.at(2), s, {0, 0, 1}), gamma.at(3), coefficient_of(gamma.at(5), s, {1, 0, 0})};
}

}  // namespace heisurf
