#include <gtest/gtest.h>

#include "heisurf/elim/ideal_file.hpp"
#include "heisurf/heis/module.hpp"
#include "heisurf/poly/parse.hpp"
#include "heisurf/surfaces/chpp.hpp"
#include "heisurf/surfaces/hesse.hpp"
#include "heisurf/surfaces/invariants.hpp"
#include "heisurf/surfaces/pp4.hpp"
#include "heisurf/surfaces/quartic4.hpp"

using namespace heisurf;

namespace {

QPoly P(const std::string& text, const RingPtr<Rational>& r) { return parse_poly(text, r); }

std::string fixture(const std::string& name) { return std::string(HEISURF_FIXTURE_DIR) + "/" + name; }

std::optional<unsigned> exponent_of(const EquationEigen& e, const std::string& gen) {
  for (const auto& [g, k] : e.exponents)
    if (g == gen) return k;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- CHPP

TEST(Chpp, FamilyAtLambdaZeroIsGaloisCase) {
  EXPECT_EQ(chpp_equation(Rational(0)), P("x1*y1^3 + x2*y2^3", chpp_ring()));
}

TEST(Chpp, SymbolicFamilyIsInvariant) {
  auto rep = family_equivariance(chpp_family());
  EXPECT_TRUE(rep.all_eigenvectors);
  for (const auto& [g, k] : rep.equations.at(0).exponents) EXPECT_EQ(k, std::optional<unsigned>(0)) << g;
  // the lam = 1 member lies in the heis trivial eigenspace of Sym^3(V^vee) (x) V
  HeisType t(1, 2);
  GradedModule m(t, 3, 1);
  auto basis = eigenspace_basis(t, m, trivial_character(t));
  auto f = change_ring(chpp_equation(Rational(1)), m.ring(),
                       [&](const Rational& c) { return Cyclotomic::from_rational(t.field(), c); });
  basis.push_back(f);
  EXPECT_EQ(poly_span_rank(basis), 2u);
}

TEST(Chpp, DiscriminantRoutesAgree) {
  QPoly det = chpp_discriminant();
  EXPECT_EQ(det, chpp_discriminant_resultant());
  EXPECT_EQ(det, det_cofactor(chpp_discriminant_matrix()));
  auto h = is_homogeneous_in(det, {"x1", "x2"});
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.degree, 4);
}

TEST(Chpp, DiscriminantAtLambdaZero) {
  auto r = chpp_ring();
  EXPECT_EQ(substitute(chpp_discriminant(), "lam", qconst(r, 0)), P("81*x1^2*x2^2", r));
  EXPECT_EQ(chpp_discriminant(Rational(0)), P("81*x1^2*x2^2", r));
}

TEST(Chpp, DiscriminantSymmetricUnderSwap) {
  auto r = chpp_ring();
  QPoly d = chpp_discriminant();
  EXPECT_EQ(substitute(d, {{"x1", qvar(r, "x2")}, {"x2", qvar(r, "x1")}}), d);
}

TEST(Chpp, SingularFibreQuartic) {
  auto r = chpp_ring();
  QPoly q = chpp_singular_fiber_quartic();
  EXPECT_EQ(q, P("lam + lam*z^4 + (3 - lam^2)*z^2", r));
  // 3 lam times the monic quartic is the expanded determinant at y1 = 1
  QPoly det = substitute(P("(3*y1^2 + lam*y2^2)*(3*y2^2 + lam*y1^2) - (2*lam*y1*y2)^2", r),
                         {{"y1", qconst(r, 1)}, {"y2", qvar(r, "z")}});
  EXPECT_EQ(q.scaled(Rational(3)), det);
  EXPECT_EQ(chpp_partials_determinant(), P("(3*y1^2 + lam*y2^2)*(3*y2^2 + lam*y1^2) - (2*lam*y1*y2)^2", r));
  // even in z
  EXPECT_EQ(substitute(q, "z", -qvar(r, "z")), q);
  EXPECT_EQ(chpp_singular_fiber_quartic(Rational(2)), P("1 + z^4 - 1/2*z^2", r));
  EXPECT_THROW(chpp_singular_fiber_quartic(Rational(0)), LambdaZero);
}

TEST(Chpp, CompanionCommonRootIffLambdaSquaredOne) {
  auto r = chpp_ring();
  EXPECT_EQ(chpp_companion_resultant(), P("(lam^2 - 1)^2", r));
}

TEST(Chpp, ZeuthenSegre) {
  EXPECT_EQ(zeuthen_segre_count(4, 4), 12);
  EXPECT_EQ(zeuthen_segre_count(0, 0), 0);
  EXPECT_EQ(zeuthen_segre_count(6, 4), 16);
}

// ---------------------------------------------------------------- PP4

TEST(Pp4, MinorsReproducePrintedEquations) {
  auto r = pp4_ring();
  auto fam = pp4_family();
  EXPECT_EQ(fam.equations[0], P("s3*(y2^2 + mu*y1*y3) - s2*(y3^2 + mu*y1*y2)", r));
  EXPECT_EQ(fam.equations[1], P("s1*(y3^2 + mu*y1*y2) - s3*(y1^2 + mu*y2*y3)", r));
  EXPECT_EQ(fam.equations[2], P("s2*(y1^2 + mu*y2*y3) - s1*(y2^2 + mu*y1*y3)", r));
  auto mins = minors(pp4_matrix(Rational(1), std::nullopt), 2);
  EXPECT_EQ(mins[0], fam.equations[1]);
  EXPECT_EQ(mins[1], -fam.equations[2]);
  EXPECT_EQ(mins[2], fam.equations[0]);
}

TEST(Pp4, AtMuZeroDifferencesOfMonomials) {
  auto f = pp4_family(Rational(0));
  auto r = pp4_ring();
  EXPECT_EQ(f.equations[0], P("s3*y2^2 - s2*y3^2", r));
  EXPECT_EQ(f.equations[1], P("s1*y3^2 - s3*y1^2", r));
  EXPECT_EQ(f.equations[2], P("s2*y1^2 - s1*y2^2", r));
}

TEST(Pp4, Equivariance) {
  auto fam = pp4_family();
  auto rep = family_equivariance(fam);
  ASSERT_EQ(rep.equations.size(), 3u);
  // chi multiplies F1, F2, F3 by 1, eps^2, eps
  EXPECT_EQ(exponent_of(rep.equations[0], "chi"), std::optional<unsigned>(0));
  EXPECT_EQ(exponent_of(rep.equations[1], "chi"), std::optional<unsigned>(2));
  EXPECT_EQ(exponent_of(rep.equations[2], "chi"), std::optional<unsigned>(1));
  EXPECT_TRUE(rep.span_invariant);
  EXPECT_FALSE(rep.all_eigenvectors);
  // the translation permutes them cyclically: F1 -> F3 -> F2 -> F1
  HeisType t(1, 3);
  std::vector<CPoly> f;
  for (const auto& e : fam.equations) f.push_back(to_cyclotomic(e, 3));
  HeisElement g = heis_generator(t, "t");
  EXPECT_EQ(act(t, g, f[0], "y", "s"), f[2]);
  EXPECT_EQ(act(t, g, f[2], "y", "s"), f[1]);
  EXPECT_EQ(act(t, g, f[1], "y", "s"), f[0]);
}

TEST(Pp4, PencilPolynomialMatchesPrinted) {
  auto r = pp4_ring();
  QPoly p = pp4_pencil_poly();
  QPoly printed = P("1/4*mu^2*(s3^3 - s1^3)*s^3 + (1/4*mu^3*s1^2*s3 - 3/4*mu^2*s2*s3^2 + s1^2*s3)*s^2*t"
                    " + (-1/4*mu^3*s1^2*s2 + 3/4*mu^2*s2^2*s3 - s1^2*s2)*s*t^2 + 1/4*mu^2*(s1^3 - s2^3)*t^3",
                    r);
  EXPECT_EQ(p, printed);
  auto c = binary_cubic_coefficients(p);
  EXPECT_EQ(c[0], P("1/4*mu^2*(s3^3 - s1^3)", r));
  EXPECT_EQ(c[3], P("1/4*mu^2*(s1^3 - s2^3)", r));
  // the printed matrix is the quadric matrix of s F2 + t F3
  auto f = pp4_equations(Rational(1), std::nullopt);
  EXPECT_EQ(conic_pencil_det(f[1], f[2]), p);
  EXPECT_EQ(pp4_pencil_poly(Rational(0)), substitute(p, "mu", qconst(r, 0)));
}

TEST(Pp4, BranchLocusMatchesPrintedSextic) {
  auto r = pp4_ring();
  QPoly sextic = pp4_branch_locus();
  EXPECT_EQ(sextic, pp4_printed_sextic());
  auto k = sextic_coefficients(sextic);
  EXPECT_EQ(k.pure6, P("-27*mu^8", r));
  EXPECT_EQ(k.cubes, P("mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)", r));
  EXPECT_EQ(k.cubes13, k.cubes);
  EXPECT_EQ(k.mixed, P("mu^4*(18*mu^6 + 144*mu^3 + 288)", r));
  EXPECT_EQ(k.central, P("mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256", r));
  EXPECT_TRUE(k.s1s3.is_zero());
}

TEST(Pp4, BranchLocusSymmetryAndCharts) {
  QPoly sextic = pp4_branch_locus();
  EXPECT_EQ(cycle3(sextic, "s"), sextic);
  for (unsigned chart = 1; chart <= 3; ++chart)
    EXPECT_EQ(pp4_branch_locus_chart(chart, Rational(1), std::nullopt), sextic) << "chart s" << chart;
}

TEST(Pp4, PeneginiPolizziForm) {
  auto r = pp4_ring();
  QPoly sextic = pp4_branch_locus();
  QPoly pp = pp_form_from_sextic(sextic);
  QPoly back = substitute(pp, {{"a", -qvar(r, "mu")}, {"c", qconst(r, 1)}}).scaled(Rational(-27));
  EXPECT_EQ(back, sextic);
  // two-parameter family: specializes at lam = 1, is invariant under (lam, mu) -> (-lam, -mu),
  // and matches the (lam, mu) -> (a, c) = (-lam mu, lam^2) correspondence
  QPoly two = pp4_branch_locus_chart(1, std::nullopt, std::nullopt);
  EXPECT_EQ(substitute(two, "lam", qconst(r, 1)), sextic);
  EXPECT_EQ(substitute(two, {{"lam", -qvar(r, "lam")}, {"mu", -qvar(r, "mu")}}), two);
  QPoly mapped = substitute(pp, {{"a", -qvar(r, "lam") * qvar(r, "mu")}, {"c", pow(qvar(r, "lam"), 2)}})
                     .scaled(Rational(-27));
  auto h = is_homogeneous(two, std::map<std::string, long>{{"lam", 1}, {"mu", 1}});
  ASSERT_TRUE(h.homogeneous);
  ASSERT_LE(h.degree, 24);
  EXPECT_EQ(mapped, two * qvar(r, "lam", static_cast<unsigned>(24 - h.degree)));
}

TEST(Pp4, GammaMatchesPrintedDisplay) {
  auto r = pp4_ring();
  const char* printed[15] = {"-lam*mu*s2", "lam*mu*s3", "lam^2*s3", "0",        "-lam^2*s2",
                             "-mu^2*s1",   "-lam*mu*s1", "mu^2*s2", "0",        "0",
                             "-mu^2*s3",   "lam*mu*s1", "-lam*mu*s3", "lam^2*s1", "-lam*mu*s2"};
  auto g = pp4_gamma();
  ASSERT_EQ(g.size(), 15u);
  for (std::size_t i = 0; i < 15; ++i) EXPECT_EQ(g[i], P(printed[i], r)) << pp4_gamma_labels()[i];
  auto d = pp4_gamma_dictionary(g);
  EXPECT_EQ(d[0], P("-lam*mu", r));
  EXPECT_EQ(d[1], P("lam*mu", r));
  EXPECT_EQ(d[2], P("lam^2", r));
  EXPECT_TRUE(d[3].is_zero());
  EXPECT_EQ(d[4], P("-mu^2", r));
  // lam = 1, mu = 0 keeps only the lam^2 entries
  auto g10 = pp4_gamma(Rational(1), Rational(0));
  std::size_t nonzero = 0;
  for (const auto& c : g10) nonzero += !c.is_zero();
  EXPECT_EQ(nonzero, 3u);
}

// ---------------------------------------------------------------- Hesse / delta = 3

TEST(Hesse, QuadricsAreScaledPartials) {
  auto q = hesse_q();
  QPoly f = hesse_cubic();
  for (int j = 0; j < 3; ++j)
    EXPECT_EQ(q[j].scaled(Rational(3)), partial_derivative(f, "y" + std::to_string(j + 1)));
  EXPECT_EQ(hesse_cubic(Rational(0)), P("y1^3 + y2^3 + y3^3", hesse_ring()));
}

TEST(Hesse, SmoothnessVerdicts) {
  EXPECT_TRUE(plane_curve_smoothness(hesse_cubic(Rational(0))).empty);
  EXPECT_TRUE(plane_curve_smoothness(hesse_cubic(Rational(1))).empty);
  EXPECT_FALSE(plane_curve_smoothness(hesse_cubic(Rational(-1, 2))).empty);
}

TEST(Hesse, DualSextic) {
  auto r = hesse_ring();
  QPoly b0 = hesse_dual_sextic(Rational(0));
  EXPECT_EQ(b0, P("x1^6 + x2^6 + x3^6 - 2*(x1^3*x2^3 + x1^3*x3^3 + x2^3*x3^3)", r));
  QPoly b = hesse_dual_sextic();
  EXPECT_EQ(cycle3(b, "x"), b);
  for (long m : {0L, 1L, 2L, -1L}) EXPECT_TRUE(hesse_duality_remainder(Rational(m)).is_zero()) << "m=" << m;
  // B_0(y1^2, y2^2, y3^2) lies in (sum y_j^3)
  QPoly on_squares = substitute(b0, {{"x1", P("y1^2", r)}, {"x2", P("y2^2", r)}, {"x3", P("y3^2", r)}});
  EXPECT_EQ(exact_divide(on_squares, hesse_cubic(Rational(0))) * hesse_cubic(Rational(0)), on_squares);
}

TEST(Hesse, OrderedPairReadingFailsDuality) {
  // reading sum_{i != j} as ordered pairs doubles the middle term; the duality breaks
  auto r = plane_ring();
  for (long m : {0L, 1L}) {
    QPoly f = hesse_cubic(Rational(m));
    QPoly x1 = partial_derivative(f, "y1"), x2 = partial_derivative(f, "y2"), x3 = partial_derivative(f, "y3");
    QPoly extra = qconst(f.ring(), 2) * (qconst(f.ring(), -16 * m * m * m) - qconst(f.ring(), 1)) *
                  (pow(x1 * x2, 3) + pow(x1 * x3, 3) + pow(x2 * x3, 3));
    QPoly ordered = hesse_dual_on_gradient(Rational(m)) + extra;
    auto to_plane = [&](const QPoly& g) { return change_ring(g, r, [](const Rational& c) { return c; }); };
    auto gb = groebner(IdealBasis<Rational>(r, {to_plane(f)}));
    EXPECT_FALSE(gb.reduce(to_plane(ordered)).is_zero()) << "m=" << m;
  }
}

TEST(Hesse, SampledDualityOverPrimeField) {
  auto s = hesse_duality_sampled(10007, 100, 1);
  EXPECT_EQ(s.points, 100u);
  EXPECT_EQ(s.vanishing, 100u);
}

TEST(Hesse, Hesse3AndAc3Families) {
  auto r = hesse_ring();
  auto h = hesse3_family();
  QPoly six_m = substitute(h.equations[1], "lam", qconst(r, 6) * qvar(r, "m"));
  EXPECT_EQ(six_m, hesse_cubic());
  auto hr = family_equivariance(h);
  EXPECT_TRUE(hr.all_eigenvectors);
  for (const auto& e : hr.equations)
    for (const auto& [g, k] : e.exponents) EXPECT_EQ(k, std::optional<unsigned>(0)) << e.label << " " << g;
  auto a = ac3_family();
  auto ar = family_equivariance(a);
  EXPECT_TRUE(ar.all_eigenvectors);
  EXPECT_EQ(exponent_of(ar.equations[1], "t"), std::optional<unsigned>(0));
  EXPECT_EQ(exponent_of(ar.equations[1], "chi"), std::optional<unsigned>(2));
  auto cert = plane_curve_smoothness(ac3_cubic());
  EXPECT_TRUE(cert.empty);
  EXPECT_EQ(cert.pure_powers.size(), 3u);
  // the shipped gradient ideal describes the same certificate
  auto file = read_poly_file(fixture("ac3_gradient.ideal"));
  EXPECT_TRUE(is_projectively_empty(IdealBasis<Rational>(file.ring, file.polys), {"y1", "y2", "y3"}).empty);
}

// ---------------------------------------------------------------- QUARTIC4

TEST(Quartic4, PencilIsHeisenbergEigenspace) {
  HeisType t(1, 4);
  GradedModule m(t, 2, 0);
  Cyclotomic one = Cyclotomic::one(t.field());
  auto e1 = eigenspace_basis(t, m, {{power(t, heis_generator(t, "t"), 2), one}, {heis_generator(t, "chi"), one}});
  ASSERT_EQ(e1.size(), 2u);
  auto q = quartic4_quadrics(Rational(2));
  auto q1 = change_ring(q[0], m.ring(), [&](const Rational& c) { return Cyclotomic::from_rational(t.field(), c); });
  e1.push_back(q1);
  EXPECT_EQ(poly_span_rank(e1), 2u);
  auto rep = family_equivariance(quartic4_family());
  EXPECT_TRUE(rep.span_invariant);
  auto fam = quartic4_family();
  EXPECT_EQ(act(t, heis_generator(t, "t"), to_cyclotomic(fam.equations[1], 4)), to_cyclotomic(fam.equations[2], 4));
}

TEST(Quartic4, CurveSmoothnessCertificates) {
  auto smooth = quartic4_curve_smoothness(Rational(2));
  EXPECT_TRUE(smooth.empty);
  EXPECT_EQ(smooth.pure_powers.size(), 4u);
  EXPECT_FALSE(quartic4_curve_smoothness(Rational(0)).empty);
  EXPECT_FALSE(quartic4_curve_smoothness(Rational(1)).empty);
}

TEST(Quartic4, BetaIdentities) {
  auto r = beta_ring();
  auto b = beta_map();
  EXPECT_EQ(b.beta0[1], P("-y2^2*y4", r));
  EXPECT_EQ(b.beta1[3], P("y1*y2*y3", r));
  auto cert = beta_certificates();
  EXPECT_TRUE(cert.lambda_part.is_zero());
  EXPECT_EQ(cert.y_dot_beta, P("y1^3*y3 - y2^3*y4 + y1*y3^3 - y2*y4^3", r));
  EXPECT_TRUE(cert.equals_c_prime);
  EXPECT_TRUE(cert.identity_ii);
  for (const auto& f : b.beta_tilde) EXPECT_EQ(is_homogeneous_in(f, {"y1", "y2", "y3", "y4"}).degree, 5);
}

TEST(Star3, SyntheticOcticReachesRankThree) {
  auto r = star3_rank_probe(fixture("synthetic_octic.poly"), 10007, 20, 42);
  EXPECT_EQ(r.probe.max_rank, 3u);
  EXPECT_TRUE(r.verified);
  auto again = star3_rank_probe(fixture("synthetic_octic.poly"), 10007, 20, 42, 4);
  EXPECT_EQ(again.probe.ranks, r.probe.ranks);
  EXPECT_EQ(again.probe.witness, r.probe.witness);
}

TEST(Star3, DegenerateOcticIsNotVerified) {
  auto r = star3_rank_probe(fixture("degenerate_octic.poly"), 10007, 20, 42);
  EXPECT_LE(r.probe.max_rank, 2u);
  EXPECT_FALSE(r.verified);
}

TEST(Star3, InputValidation) {
  EXPECT_THROW(load_octic(parse_poly_file("vars: x1 x2 x3 x4\nx1^8\n"), "t"), FileError);
  EXPECT_THROW(load_octic(parse_poly_file("vars: c0 c1 c2 c3 x1 x2 x3 x4\nx1^7\n"), "t"), DegreeMismatch);
  EXPECT_THROW(load_octic(parse_poly_file("vars: c0 c1 c2 c3 x1 x2 x3 x4\nx1^8\nx2^8\n"), "t"), FileError);
  EXPECT_THROW(star3_rank_probe("/nonexistent/octic.poly", 10007, 1, 0), FileError);
}

// ---------------------------------------------------------------- invariants

TEST(Invariants, Table) {
  auto chpp = numeric_invariants("CHPP");
  EXPECT_EQ(chpp.k2, 5);
  EXPECT_EQ(chpp.k2_cover, 20);
  EXPECT_FALSE(chpp.c2.has_value());
  auto pp4 = numeric_invariants("PP4");
  EXPECT_EQ(pp4.k2, 6);
  EXPECT_EQ(pp4.k2_cover, 54);
  EXPECT_EQ(pp4.c2, std::optional<int>(18));
  EXPECT_EQ(numeric_invariants("HESSE3").k2, 6);
  EXPECT_EQ(numeric_invariants("AC3").k2_cover, 54);
  EXPECT_EQ(numeric_invariants("QUARTIC4").k2_cover, 96);
  EXPECT_EQ(numeric_invariants("HESSE3").pg, 3);
  EXPECT_EQ(numeric_invariants("AC3").q, 2);
  for (const auto& name : family_names()) {
    auto n = numeric_invariants(name);
    EXPECT_EQ(n.k2_cover, n.delta * n.delta * n.k2);
    EXPECT_EQ(n.chi_cover, n.delta * n.delta);
    EXPECT_EQ(n.chi, 1);
    if (n.d == 3) {
      EXPECT_EQ(n.k2, n.delta + 3);
    }
  }
  EXPECT_THROW(numeric_invariants("K3"), UnknownFamily);
}
