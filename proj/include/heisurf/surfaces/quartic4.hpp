#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "heisurf/elim/groebner.hpp"
#include "heisurf/elim/ideal_file.hpp"
#include "heisurf/elim/rank_probe.hpp"
#include "heisurf/surfaces/family.hpp"
#include "heisurf/surfaces/hesse.hpp"

namespace heisurf {

inline RingPtr<Rational> quartic4_ring() {
  static const auto r = make_ring<Rational>({"y1", "y2", "y3", "y4", "x1", "x2", "x3", "x4", "lam"});
  return r;
}

/// Q1 = y1^2 + y3^2 + 2 lam y2 y4, Q2 = y2^2 + y4^2 + 2 lam y1 y3.
inline std::array<QPoly, 2> quartic4_quadrics(const Param& lambda = std::nullopt) {
  auto r = quartic4_ring();
  auto y = [&](int i) { return qvar(r, "y" + std::to_string(i)); };
  QPoly two_l = qconst(r, 2) * param_poly(r, "lam", lambda);
  return {y(1) * y(1) + y(3) * y(3) + two_l * y(2) * y(4), y(2) * y(2) + y(4) * y(4) + two_l * y(1) * y(3)};
}

inline FamilyDescriptor quartic4_family(const Param& lambda = std::nullopt) {
  auto r = quartic4_ring();
  auto q = quartic4_quadrics(lambda);
  return FamilyDescriptor{"QUARTIC4", HeisType(1, 4), "x", {{"lam", param_text(lambda)}}, r,
                          {coordinate_pairing(r, 4), q[0], q[1]}, {"pairing", "Q1", "Q2"}};
}

inline RingPtr<Rational> space_ring() {
  static const auto r = make_ring<Rational>({"y1", "y2", "y3", "y4"});
  return r;
}

/// (Q1, Q2, 2x2 minors of the Jacobian) in y1..y4.
inline IdealBasis<Rational> quartic4_singular_ideal(const Rational& lambda) {
  auto r = space_ring();
  auto q = quartic4_quadrics(lambda);
  std::vector<QPoly> gens;
  for (const auto& f : q) gens.push_back(change_ring(f, r, [](const Rational& c) { return c; }));
  const std::vector<std::string> y{"y1", "y2", "y3", "y4"};
  ExactMatrix<QPoly> jac(2, 4, QPoly(r));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) jac(i, j) = partial_derivative(gens[i], y[j]);
  for (auto& mnr : minors(jac, 2)) gens.push_back(std::move(mnr));
  return IdealBasis<Rational>(r, gens);
}

/// C = {Q1 = Q2 = 0} in P^3 is smooth iff the singular ideal has no projective zero.
inline EmptinessCertificate quartic4_curve_smoothness(const Rational& lambda) {
  return is_projectively_empty(quartic4_singular_ideal(lambda), {"y1", "y2", "y3", "y4"});
}

struct BetaMap {
  std::array<QPoly, 4> beta0, beta1, beta_tilde;
};

inline RingPtr<Rational> beta_ring() {
  static const auto r = make_ring<Rational>({"y1", "y2", "y3", "y4", "lam"});
  return r;
}

inline BetaMap beta_map() {
  auto r = beta_ring();
  auto y = [&](int i) { return qvar(r, "y" + std::to_string(i)); };
  BetaMap b;
  b.beta0 = {y(1) * y(1) * y(3), -y(2) * y(2) * y(4), y(1) * y(3) * y(3), -y(2) * y(4) * y(4)};
  b.beta1 = {-y(2) * y(3) * y(4), y(1) * y(3) * y(4), -y(1) * y(2) * y(4), y(1) * y(2) * y(3)};
  QPoly two_y2y4 = qconst(r, 2) * y(2) * y(4), s13 = y(1) * y(1) + y(3) * y(3);
  for (std::size_t i = 0; i < 4; ++i) b.beta_tilde[i] = two_y2y4 * b.beta0[i] - s13 * b.beta1[i];
  return b;
}

/// The quartic of C': (y1^2 + y3^2) y1 y3 - (y2^2 + y4^2) y2 y4.
inline QPoly c_prime_quartic(const RingPtr<Rational>& r) {
  auto y = [&](int i) { return qvar(r, "y" + std::to_string(i)); };
  return (y(1) * y(1) + y(3) * y(3)) * y(1) * y(3) - (y(2) * y(2) + y(4) * y(4)) * y(2) * y(4);
}

struct BetaCertificate {
  QPoly y_dot_beta;     // y . (beta0 + lam beta1)
  QPoly lambda_part;    // its lam-coefficient (must vanish)
  bool equals_c_prime;  // y . beta == quartic of C'
  bool identity_ii;     // 2 y2 y4 beta - beta_tilde == Q1 beta1
};

inline BetaCertificate beta_certificates() {
  auto r = beta_ring();
  BetaMap b = beta_map();
  QPoly lam = qvar(r, "lam");
  auto y = [&](int i) { return qvar(r, "y" + std::to_string(i)); };
  BetaCertificate cert;
  cert.y_dot_beta = QPoly(r);
  for (std::size_t i = 0; i < 4; ++i) cert.y_dot_beta = cert.y_dot_beta + y(static_cast<int>(i) + 1) * (b.beta0[i] + lam * b.beta1[i]);
  auto by_lam = coefficients_in(cert.y_dot_beta, "lam");
  cert.lambda_part = by_lam.size() > 1 ? by_lam[1] : QPoly(r);
  cert.equals_c_prime = cert.y_dot_beta == c_prime_quartic(r);
  QPoly q1 = y(1) * y(1) + y(3) * y(3) + qconst(r, 2) * lam * y(2) * y(4);
  cert.identity_ii = true;
  for (std::size_t i = 0; i < 4; ++i) {
    QPoly lhs = qconst(r, 2) * y(2) * y(4) * (b.beta0[i] + lam * b.beta1[i]) - b.beta_tilde[i];
    cert.identity_ii = cert.identity_ii && lhs == q1 * b.beta1[i];
  }
  return cert;
}

inline const std::vector<std::string>& octic_vars() {
  static const std::vector<std::string> v{"c0", "c1", "c2", "c3", "x1", "x2", "x3", "x4"};
  return v;
}

/// Reads F(c, x): vars exactly c0..c3 x1..x4, one polynomial, homogeneous of
/// degree 8 in x.
inline QPoly load_octic(const PolyFile& file, const std::string& origin) {
  if (file.ring->vars.names() != octic_vars())
    throw FileError(origin + ": octic file must declare 'vars: c0 c1 c2 c3 x1 x2 x3 x4'");
  if (file.polys.size() != 1)
    throw FileError(origin + ": expected exactly one polynomial, found " + std::to_string(file.polys.size()));
  const QPoly& f = file.polys.front();
  auto h = is_homogeneous_in(f, {"x1", "x2", "x3", "x4"});
  if (f.is_zero() || !h.homogeneous || h.degree != 8)
    throw DegreeMismatch(origin + ": F must be homogeneous of degree 8 in x1..x4");
  return f;
}

/// F = sum_k c_k G_k with each G_k a sum of `terms` random degree-8 monomials
/// in x1..x4, coefficients in [-9, 9]. Deterministic in seed.
inline QPoly random_octic_family(std::uint64_t seed, std::size_t terms = 40) {
  auto r = make_ring<Rational>(octic_vars());
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<QPoly::Term> out;
  for (unsigned k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < terms; ++i) {
      Exponents e(8, 0);
      e[k] = 1;
      for (int d = 0; d < 8; ++d) ++e[4 + rng() % 4];
      long c = static_cast<long>(rng() % 19) - 9;
      if (c != 0) out.emplace_back(std::move(e), Rational(c));
    }
  return QPoly::from_terms(r, std::move(out));
}

struct Star3Result {
  RankProbeResult probe;
  bool verified = false;  // max rank 3
};

/// Jacobian rank in x of (F, p(grad_x F), F(c, beta_tilde(grad_x F))) at random
/// GF(p) points; the claim holds iff the rank reaches 3.
inline Star3Result star3_rank_probe(const QPoly& octic, std::uint64_t p, std::size_t samples, std::uint64_t seed,
                                    unsigned threads = 1) {
  ModP::Field fld = ModP::make_field(p);
  auto ring = make_ring<ModP>(octic_vars(), fld);
  MultiPoly<ModP> f = from_rational_poly(octic, ring);
  std::array<MultiPoly<ModP>, 4> grad;
  for (int i = 0; i < 4; ++i) grad[i] = partial_derivative(f, "x" + std::to_string(i + 1));
  auto yring = make_ring<ModP>({"y1", "y2", "y3", "y4"}, fld);
  auto to_y = [&](const QPoly& q) {
    return change_ring(q, yring, [&](const Rational& c) { return ModP::from_rational(fld, c); });
  };
  MultiPoly<ModP> quartic = to_y(c_prime_quartic(space_ring()));
  BetaMap b = beta_map();
  std::array<MultiPoly<ModP>, 4> bt;
  for (int i = 0; i < 4; ++i) bt[i] = to_y(b.beta_tilde[i]);

  JetSystem system = [=](const std::vector<Jet<ModP>>& pt) {
    std::vector<Jet<ModP>> y;
    for (const auto& g : grad) y.push_back(eval_jet(g, pt));
    std::vector<Jet<ModP>> shifted(pt.begin(), pt.begin() + 4);
    for (const auto& q : bt) shifted.push_back(eval_jet(q, y));
    return std::vector<Jet<ModP>>{eval_jet(f, pt), eval_jet(quartic, y), eval_jet(f, shifted)};
  };
  Star3Result out;
  out.probe = random_rank_probe_with(system, octic_vars().size(), {4, 5, 6, 7}, p, samples, seed, threads);
  out.verified = out.probe.max_rank == 3;
  return out;
}

inline Star3Result star3_rank_probe(const std::string& path, std::uint64_t p, std::size_t samples,
                                    std::uint64_t seed, unsigned threads = 1) {
  return star3_rank_probe(load_octic(read_poly_file(path), path), p, samples, seed, threads);
}

}  // namespace heisurf
