#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "heisurf/elim/groebner.hpp"
#include "heisurf/elim/rank_probe.hpp"
#include "heisurf/surfaces/family.hpp"

namespace heisurf {

inline RingPtr<Rational> hesse_ring() {
  static const auto r = make_ring<Rational>({"y1", "y2", "y3", "x1", "x2", "x3", "m", "lam"});
  return r;
}

/// sum_j y_j^3 + 6 m y1 y2 y3
inline QPoly hesse_cubic(const Param& m = std::nullopt) {
  auto r = hesse_ring();
  QPoly y1 = qvar(r, "y1"), y2 = qvar(r, "y2"), y3 = qvar(r, "y3");
  return pow(y1, 3) + pow(y2, 3) + pow(y3, 3) + qconst(r, 6) * param_poly(r, "m", m) * y1 * y2 * y3;
}

/// q_j = y_j^2 + 2 m y_{j+1} y_{j-1}
inline std::array<QPoly, 3> hesse_q(const Param& m = std::nullopt) {
  auto r = hesse_ring();
  QPoly two_m = qconst(r, 2) * param_poly(r, "m", m);
  std::array<QPoly, 3> y{qvar(r, "y1"), qvar(r, "y2"), qvar(r, "y3")};
  std::array<QPoly, 3> q;
  for (std::size_t j = 0; j < 3; ++j) q[j] = y[j] * y[j] + two_m * y[(j + 1) % 3] * y[(j + 2) % 3];
  return q;
}

/// The printed dual sextic B_m in x1, x2, x3 (pairs i != j taken unordered).
inline QPoly hesse_dual_sextic(const Param& m = std::nullopt) {
  auto r = hesse_ring();
  QPoly mm = param_poly(r, "m", m);
  QPoly x1 = qvar(r, "x1"), x2 = qvar(r, "x2"), x3 = qvar(r, "x3");
  auto c = [&](long v) { return qconst(r, v); };
  QPoly cubes = pow(x1, 3) + pow(x2, 3) + pow(x3, 3);
  QPoly pairs = pow(x1 * x2, 3) + pow(x1 * x3, 3) + pow(x2 * x3, 3);
  return pow(x1, 6) + pow(x2, 6) + pow(x3, 6) + c(2) * (c(-16) * pow(mm, 3) - c(1)) * pairs -
         c(24) * pow(mm, 2) * x1 * x2 * x3 * cubes + c(6) * mm * (c(-8) * pow(mm, 3) - c(4)) * pow(x1 * x2 * x3, 2);
}

/// B_m(grad f_m(y)), a polynomial in y (and m).
inline QPoly hesse_dual_on_gradient(const Param& m = std::nullopt) {
  QPoly f = hesse_cubic(m);
  return substitute(hesse_dual_sextic(m), {{"x1", partial_derivative(f, "y1")},
                                           {"x2", partial_derivative(f, "y2")},
                                           {"x3", partial_derivative(f, "y3")}});
}

inline RingPtr<Rational> plane_ring() {
  static const auto r = make_ring<Rational>({"y1", "y2", "y3"});
  return r;
}

/// Normal form of B_m(grad f_m) modulo the Groebner basis of (f_m), numeric m.
inline QPoly hesse_duality_remainder(const Rational& m) {
  auto r = plane_ring();
  auto to_plane = [&](const QPoly& f) { return change_ring(f, r, [](const Rational& c) { return c; }); };
  auto gb = groebner(IdealBasis<Rational>(r, {to_plane(hesse_cubic(m))}));
  return gb.reduce(to_plane(hesse_dual_on_gradient(m)));
}

inline IdealBasis<Rational> plane_gradient_ideal(const QPoly& f) {
  auto r = plane_ring();
  std::vector<QPoly> grad;
  for (const char* v : {"y1", "y2", "y3"})
    grad.push_back(change_ring(partial_derivative(f, v), r, [](const Rational& c) { return c; }));
  return IdealBasis<Rational>(r, grad);
}

/// Gradient ideal certificate of a plane cubic in y1, y2, y3 (smooth iff empty).
inline EmptinessCertificate plane_curve_smoothness(const QPoly& f) {
  return is_projectively_empty(plane_gradient_ideal(f), {"y1", "y2", "y3"});
}

struct SampledDuality {
  std::size_t points = 0;
  std::size_t vanishing = 0;
  std::size_t attempts = 0;
};

/// Random GF(p) points (m, y) with f_m(y) = 0, y3 found by exhaustive search;
/// counts how many satisfy B_m(grad f_m(y)) = 0.
inline SampledDuality hesse_duality_sampled(std::uint64_t p, std::size_t points, std::uint64_t seed) {
  ModP::Field fld = ModP::make_field(p);
  auto ring = make_ring<ModP>(hesse_ring()->vars.names(), fld);
  MultiPoly<ModP> f = from_rational_poly(hesse_cubic(), ring);
  MultiPoly<ModP> b = from_rational_poly(hesse_dual_on_gradient(), ring);
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_int_distribution<std::uint64_t> u(0, p - 1);
  SampledDuality out;
  std::vector<ModP> pt(ring->vars.size(), ModP::zero(fld));
  const std::size_t iy3 = ring->vars.index("y3"), iy1 = ring->vars.index("y1"), iy2 = ring->vars.index("y2"),
                    im = ring->vars.index("m");
  while (out.points < points && out.attempts < 100 * points) {
    ++out.attempts;
    pt[im] = ModP(fld, static_cast<std::int64_t>(u(rng)));
    pt[iy1] = ModP(fld, static_cast<std::int64_t>(u(rng)));
    pt[iy2] = ModP(fld, static_cast<std::int64_t>(u(rng)));
    // f as a cubic in y3 with the other coordinates fixed
    std::array<ModP, 4> coef{ModP::zero(fld), ModP::zero(fld), ModP::zero(fld), ModP::zero(fld)};
    for (const auto& [e, c] : f.terms()) {
      ModP v = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i] && i != iy3; ++k) v = v * pt[i];
      coef[e[iy3]] = coef[e[iy3]] + v;
    }
    bool found = false;
    for (std::uint64_t y3 = 0; y3 < p && !found; ++y3) {
      ModP z(fld, static_cast<std::int64_t>(y3));
      if (((coef[3] * z + coef[2]) * z + coef[1]) * z + coef[0] == ModP::zero(fld)) {
        pt[iy3] = z;
        found = true;
      }
    }
    if (!found) continue;
    if (pt[iy1].is_zero() && pt[iy2].is_zero() && pt[iy3].is_zero()) continue;
    ++out.points;
    if (eval_generic(b, pt, [](const ModP& c) { return c; }, ModP::zero(fld)).is_zero()) ++out.vanishing;
  }
  return out;
}

inline QPoly coordinate_pairing(const RingPtr<Rational>& r, std::size_t delta, const std::string& primal = "x") {
  QPoly s(r);
  for (std::size_t j = 1; j <= delta; ++j) s = s + qvar(r, "y" + std::to_string(j)) * qvar(r, primal + std::to_string(j));
  return s;
}

/// sum_j y_j x_j and sum y_j^3 + lam y1 y2 y3.
inline FamilyDescriptor hesse3_family(const Param& lambda = std::nullopt) {
  auto r = hesse_ring();
  QPoly y1 = qvar(r, "y1"), y2 = qvar(r, "y2"), y3 = qvar(r, "y3");
  QPoly cubic = pow(y1, 3) + pow(y2, 3) + pow(y3, 3) + param_poly(r, "lam", lambda) * y1 * y2 * y3;
  return FamilyDescriptor{"HESSE3", HeisType(1, 3), "x", {{"lam", param_text(lambda)}}, r,
                          {coordinate_pairing(r, 3), cubic}, {"pairing", "cubic"}};
}

inline QPoly ac3_cubic() {
  auto r = hesse_ring();
  QPoly y1 = qvar(r, "y1"), y2 = qvar(r, "y2"), y3 = qvar(r, "y3");
  return y1 * y1 * y2 + y2 * y2 * y3 + y3 * y3 * y1;
}

inline FamilyDescriptor ac3_family() {
  auto r = hesse_ring();
  return FamilyDescriptor{"AC3", HeisType(1, 3), "x", {}, r, {coordinate_pairing(r, 3), ac3_cubic()},
                          {"pairing", "cubic"}};
}

}  // namespace heisurf
