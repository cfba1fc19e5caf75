#pragma once

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "heisurf/cli/report.hpp"
#include "heisurf/heis/module.hpp"
#include "heisurf/poly/parse.hpp"
#include "heisurf/surfaces/chpp.hpp"
#include "heisurf/surfaces/hesse.hpp"
#include "heisurf/surfaces/invariants.hpp"
#include "heisurf/surfaces/pp4.hpp"
#include "heisurf/surfaces/quartic4.hpp"

namespace heisurf {

struct SuiteOptions {
  std::string filter = "*";
  std::uint64_t seed = 1;
  std::uint64_t prime = 10007;
  std::optional<std::string> octic;  // user-supplied octic for the star3 probe
  unsigned threads = 0;              // 0: hardware concurrency
};

struct CheckOutcome {
  CheckStatus status = CheckStatus::fail;
  std::optional<std::string> expected, actual;
  std::string note;
};

struct SuiteCheck {
  std::string id;
  std::string anchor;
  std::function<CheckOutcome(const SuiteOptions&)> run;
};

inline CheckOutcome compare(std::string expected, std::string actual, std::string note = "") {
  CheckStatus s = expected == actual ? CheckStatus::pass : CheckStatus::fail;
  return {s, std::move(expected), std::move(actual), std::move(note)};
}

template <class P>
  requires requires(const P& p) { p.to_string(); }
CheckOutcome compare(const P& expected, const P& actual, std::string note = "") {
  return compare(expected.to_string(), actual.to_string(), std::move(note));
}

inline bool glob_match(const std::string& pattern, const std::string& id) {
  return fnmatch(pattern.c_str(), id.c_str(), 0) == 0;
}

namespace suite_detail {

inline QPoly P(const std::string& text, const RingPtr<Rational>& r) { return parse_poly(text, r); }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string scalar_text(const RepMatrix& m) {
  if (m.rows() == 0 || m != scalar_matrix(m.rows(), m(0, 0))) return "not scalar";
  return m(0, 0).to_string() + "*Id";
}

inline std::string exponents_text(const EquationEigen& e) {
  std::vector<std::string> parts;
  for (const auto& [g, k] : e.exponents) parts.push_back(g + ":" + (k ? std::to_string(*k) : "none"));
  return e.label + "(" + join(parts, ",") + ")";
}

inline std::vector<HeisType> small_types(unsigned max_delta) {
  std::vector<HeisType> out;
  for (unsigned d1 = 1; d1 <= max_delta; ++d1)
    for (unsigned d2 = d1; d1 * d2 <= max_delta; d2 += d1) out.emplace_back(d1, d2);
  return out;
}

inline std::string cert_text(const EmptinessCertificate& c) {
  if (!c.empty) return "nonempty (no pure power of " + join(c.missing, ",") + ")";
  std::vector<std::string> parts;
  for (const auto& [v, k] : c.pure_powers) parts.push_back(v + "^" + std::to_string(k));
  return "empty: " + join(parts, ", ");
}

inline std::string verdict(const EmptinessCertificate& c) { return c.empty ? "smooth" : "singular"; }

template <class F>
std::string span_text(const std::vector<MultiPoly<F>>& basis) {
  std::vector<std::string> parts;
  for (const auto& f : basis) parts.push_back(f.to_string());
  return join(parts);
}

inline CPoly cyc(const RingPtr<Cyclotomic>& r, const std::string& text) { return parse_poly(text, r); }

inline std::optional<unsigned> eigen_power(const HeisType& t, const HeisElement& g, const CPoly& f) {
  CPoly image = act(t, g, f);
  for (unsigned k = 0; k < t.n(); ++k)
    if (image == f.scaled(Cyclotomic::zeta(t.n(), k))) return k;
  return std::nullopt;
}

inline std::string probe_text(const Star3Result& r) {
  return "rank " + std::to_string(r.probe.max_rank) + (r.verified ? " (verified)" : " (unverified)");
}

// ---------------------------------------------------------------- heis

inline std::vector<SuiteCheck> heis_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"heis.relations.all_types", "Heisenberg commutator relations", [](const SuiteOptions&) {
                 std::vector<std::string> bad;
                 auto types = small_types(8);
                 for (const auto& t : types) {
                   auto r = verify_group_relations(t);
                   if (!r.pass) bad.push_back(t.to_string() + ": " + (r.failures.empty() ? "?" : r.failures.front()));
                 }
                 std::string n = std::to_string(types.size());
                 return compare(n + "/" + n + " types", std::to_string(types.size() - bad.size()) + "/" + n + " types",
                                join(bad));
               }});
  c.push_back({"heis.gamma.delta2", "gamma acts by -1", [](const SuiteOptions&) {
                 HeisType t(1, 2);
                 RepMatrix g1 = rho(t, heis_generator(t, "g1")), g2 = rho(t, heis_generator(t, "g2"));
                 return compare("-1*Id", scalar_text(g1 * g2 * g1 * g2));
               }});
  auto commutators = [](unsigned d1, unsigned d2, std::vector<std::string> wanted) {
    return [=](const SuiteOptions&) {
      auto r = verify_group_relations(HeisType(d1, d2));
      std::vector<std::string> found;
      for (const auto& w : wanted) {
        auto head = w.substr(0, w.find(" = "));
        auto it = std::find_if(r.lines.begin(), r.lines.end(), [&](const std::string& l) { return l.rfind(head, 0) == 0; });
        found.push_back(it == r.lines.end() ? head + " missing" : *it);
      }
      return compare(join(wanted), join(found));
    };
  };
  c.push_back({"heis.commutator.delta3", "Heisenberg commutator relations",
               commutators(1, 3, {"[t,chi] = zeta(3)*Id"})});
  c.push_back({"heis.commutator.type22", "Heisenberg commutator relations",
               commutators(2, 2, {"[t1,chi1] = -1*Id", "[t1,chi2] = 1*Id", "[t2,chi2] = -1*Id"})});
  c.push_back({"heis.dual.delta2_same", "W and V are the same representation", [](const SuiteOptions&) {
                 HeisType t(1, 2);
                 std::vector<std::string> diff;
                 for (const auto& [name, g] : heis_generators(t))
                   if (rho_dual(t, g) != rho(t, g)) diff.push_back(name);
                 return compare("same", diff.empty() ? "same" : "differ on " + join(diff, ","));
               }});
  c.push_back({"heis.dual.delta3_g2", "g2 entries 1, eps^2, eps", [](const SuiteOptions&) {
                 HeisType t(1, 3);
                 RepMatrix m = rho_dual(t, heis_generator(t, "g2"));
                 std::vector<std::string> d;
                 for (std::size_t i = 0; i < 3; ++i) d.push_back(m(i, i).to_string());
                 bool diagonal = true;
                 for (std::size_t i = 0; i < 3; ++i)
                   for (std::size_t j = 0; j < 3; ++j) diagonal = diagonal && (i == j || m(i, j).is_zero());
                 std::string expected = "diag(1, " + Cyclotomic::zeta(3, 2).to_string() + ", " + Cyclotomic::zeta(3).to_string() + ")";
                 return compare(expected, diagonal ? "diag(" + join(d, ", ") + ")" : "not diagonal");
               }});
  c.push_back({"heis.translation.delta3_cycle", "invariant cubics for delta 3", [](const SuiteOptions&) {
                 HeisType t(1, 3);
                 auto ring = make_ring<Cyclotomic>({"y1", "y2", "y3"}, t.field());
                 HeisElement g1 = heis_generator(t, "g1");
                 std::vector<std::string> parts;
                 for (const char* v : {"y1", "y3", "y2"})
                   parts.push_back(std::string(v) + " -> " + act(t, g1, CPoly::variable(ring, v)).to_string());
                 return compare("y1 -> y3; y3 -> y2; y2 -> y1", join(parts));
               }});
  c.push_back({"heis.center.chpp_module", "centre acts trivially", [](const SuiteOptions&) {
                 HeisType t(1, 2);
                 GradedModule m(t, 3, 1);
                 return compare("1*Id", scalar_text(induced_action(t, m, central(t, 1))));
               }});
  c.push_back({"heis.eigenspace.chpp", "CHPP invariant family derivation", [](const SuiteOptions&) {
                 HeisType t(1, 2);
                 GradedModule m(t, 3, 1);
                 auto basis = eigenspace_basis(t, m, trivial_character(t));
                 std::vector<CPoly> expected{cyc(m.ring(), "x1*y1^3 + x2*y2^3"), cyc(m.ring(), "x1*y1*y2^2 + x2*y1^2*y2")};
                 return compare(span_text(expected), span_text(basis));
               }});
  c.push_back({"heis.eigenspace.delta3_cubics", "invariant cubics for delta 3", [](const SuiteOptions&) {
                 HeisType t(1, 3);
                 GradedModule m(t, 3, 0);
                 auto inv = eigenspace_basis(t, m, {{heis_generator(t, "g1"), Cyclotomic::one(t.field())}});
                 std::vector<CPoly> expected{cyc(m.ring(), "y1^3 + y2^3 + y3^3"), cyc(m.ring(), "y1*y2*y3"),
                                             cyc(m.ring(), "y1^2*y2 + y2^2*y3 + y3^2*y1"),
                                             cyc(m.ring(), "y1^2*y3 + y2^2*y1 + y3^2*y2")};
                 auto both = inv;
                 both.insert(both.end(), expected.begin(), expected.end());
                 return compare("dim 4, span rank 4", "dim " + std::to_string(inv.size()) + ", span rank " +
                                                          std::to_string(poly_span_rank(both)));
               }});
  c.push_back({"heis.eigenspace.delta3_eigenvalues", "eigenvalues 1, 1, eps^2, eps", [](const SuiteOptions&) {
                 HeisType t(1, 3);
                 auto ring = make_ring<Cyclotomic>({"y1", "y2", "y3"}, t.field());
                 std::vector<std::string> parts;
                 for (const char* f : {"y1^3 + y2^3 + y3^3", "y1*y2*y3", "y1^2*y2 + y2^2*y3 + y3^2*y1",
                                       "y1^2*y3 + y2^2*y1 + y3^2*y2"}) {
                   auto k = eigen_power(t, heis_generator(t, "g2"), cyc(ring, f));
                   parts.push_back(k ? "eps^" + std::to_string(*k) : "none");
                 }
                 return compare("eps^0, eps^0, eps^2, eps^1", join(parts, ", "));
               }});
  c.push_back({"heis.eigenspace.quartic_pencil", "Heisenberg invariance of the two quadrics", [](const SuiteOptions&) {
                 HeisType t(1, 4);
                 GradedModule m(t, 2, 0);
                 Cyclotomic one = Cyclotomic::one(t.field());
                 HeisElement tt = power(t, heis_generator(t, "t"), 2), chi = heis_generator(t, "chi");
                 auto e1 = eigenspace_basis(t, m, {{tt, one}, {chi, one}});
                 auto e2 = eigenspace_basis(t, m, {{tt, one}, {chi, -one}});
                 auto span1 = e1, span2 = e2;
                 span1.push_back(cyc(m.ring(), "y1^2 + y3^2"));
                 span1.push_back(cyc(m.ring(), "y2*y4"));
                 span2.push_back(cyc(m.ring(), "y2^2 + y4^2"));
                 span2.push_back(cyc(m.ring(), "y1*y3"));
                 auto text = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
                 return compare("Q1 pencil 2/2; Q2 pencil 2/2", "Q1 pencil " + text(e1.size(), poly_span_rank(span1)) +
                                                                    "; Q2 pencil " + text(e2.size(), poly_span_rank(span2)));
               }});
  c.push_back({"heis.schur.pairing", "only invariant is the identity", [](const SuiteOptions&) {
                 std::vector<std::string> bad;
                 std::string delta3, expected;
                 for (const auto& t : small_types(8)) {
                   GradedModule m(t, 1, 1);
                   auto basis = eigenspace_basis(t, m, trivial_character(t));
                   CPoly pairing(m.ring());
                   for (std::size_t j = 1; j <= t.delta(); ++j)
                     pairing = pairing + CPoly::variable(m.ring(), "x" + std::to_string(j)) *
                                             CPoly::variable(m.ring(), "y" + std::to_string(j));
                   if (basis.size() != 1 || basis[0] != pairing) bad.push_back(t.to_string());
                   if (t == HeisType(1, 3)) {
                     delta3 = span_text(basis);
                     expected = cyc(m.ring(), "x1*y1 + x2*y2 + x3*y3").to_string();
                   }
                 }
                 return compare(expected, bad.empty() ? delta3 : "fails for " + join(bad, ","));
               }});
  c.push_back({"heis.characters.sum", "Schur decomposition of the modules", [](const SuiteOptions&) {
                 std::vector<std::string> exp, act_;
                 for (auto [d1, d2, d, e] : std::vector<std::array<unsigned, 4>>{{1, 2, 3, 1}, {1, 3, 3, 0}, {2, 2, 2, 0}}) {
                   HeisType t(d1, d2);
                   GradedModule m(t, d, e);
                   std::size_t total = 0;
                   for (const auto& chi : all_characters(t)) total += eigenspace_basis(t, m, chi).size();
                   exp.push_back(std::to_string(m.dim()));
                   act_.push_back(std::to_string(total));
                 }
                 return compare(join(exp, ","), join(act_, ","));
               }});
  c.push_back({"heis.iota.normalizes", "exchange of eps and its inverse", [](const SuiteOptions&) {
                 std::vector<std::string> bad;
                 for (const auto& t : small_types(8))
                   if (!iota_normalizes(t)) bad.push_back(t.to_string());
                 return compare("all types", bad.empty() ? "all types" : "fails for " + join(bad, ","));
               }});
  return c;
}

// ---------------------------------------------------------------- CHPP

inline std::vector<SuiteCheck> chpp_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"chpp.family.lambda0", "CHPP Galois case", [](const SuiteOptions&) {
                 return compare(P("x1*y1^3 + x2*y2^3", chpp_ring()), chpp_equation(Rational(0)));
               }});
  c.push_back({"chpp.family.invariant", "CHPP invariant family derivation", [](const SuiteOptions&) {
                 auto rep = family_equivariance(chpp_family());
                 return compare("f(t:0,chi:0)", exponents_text(rep.equations.at(0)));
               }});
  c.push_back({"chpp.partial.y1", "CHPP partial derivatives", [](const SuiteOptions&) {
                 auto r = chpp_ring();
                 return compare(P("x1*(3*y1^2 + lam*y2^2) + x2*(2*lam*y1*y2)", r), partial_derivative(chpp_equation(), "y1"));
               }});
  c.push_back({"chpp.weights", "CHPP bidegree (3, 1)", [](const SuiteOptions&) {
                 QPoly f = chpp_equation();
                 auto y = is_homogeneous(f, std::map<std::string, long>{{"y1", 1}, {"y2", 1}});
                 auto x = is_homogeneous(f, std::map<std::string, long>{{"x1", 1}, {"x2", 1}});
                 auto text = [](const Homogeneity& h) { return h.homogeneous ? std::to_string(h.degree) : "inhomogeneous"; };
                 return compare("y-degree 3, x-degree 1", "y-degree " + text(y) + ", x-degree " + text(x));
               }});
  c.push_back({"chpp.disc.routes", "CHPP discriminant determinant", [](const SuiteOptions&) {
                 QPoly det = chpp_discriminant();
                 std::string note = det == det_cofactor(chpp_discriminant_matrix()) ? "" : "cofactor expansion disagrees";
                 auto out = compare(chpp_discriminant_resultant(), det, note);
                 if (!note.empty()) out.status = CheckStatus::fail;
                 return out;
               }});
  c.push_back({"chpp.disc.lambda0", "CHPP discriminant at lambda 0", [](const SuiteOptions&) {
                 auto r = chpp_ring();
                 return compare(P("81*x1^2*x2^2", r), substitute(chpp_discriminant(), "lam", qconst(r, 0)));
               }});
  c.push_back({"chpp.disc.resultant_lambda0", "CHPP discriminant at lambda 0", [](const SuiteOptions&) {
                 return compare(P("81*x1^2*x2^2", chpp_ring()), chpp_discriminant_resultant(Rational(0)));
               }});
  c.push_back({"chpp.disc.swap", "CHPP discriminant determinant", [](const SuiteOptions&) {
                 auto r = chpp_ring();
                 QPoly d = chpp_discriminant();
                 return compare(d, substitute(d, {{"x1", qvar(r, "x2")}, {"x2", qvar(r, "x1")}}));
               }});
  c.push_back({"chpp.quartic.derivation", "CHPP singular fibre quartic", [](const SuiteOptions&) {
                 auto r = chpp_ring();
                 QPoly q = chpp_singular_fiber_quartic();
                 QPoly det = substitute(chpp_partials_determinant(), {{"y1", qconst(r, 1)}, {"y2", qvar(r, "z")}});
                 std::string note = q.scaled(Rational(3)) == det ? "" : "3*quartic differs from the determinant at y1 = 1";
                 auto out = compare(P("lam + lam*z^4 + (3 - lam^2)*z^2", r), q, note);
                 if (!note.empty()) out.status = CheckStatus::fail;
                 return out;
               }});
  c.push_back({"chpp.quartic.even", "roots come in opposite pairs", [](const SuiteOptions&) {
                 auto r = chpp_ring();
                 QPoly q = chpp_singular_fiber_quartic();
                 return compare(q, substitute(q, "z", -qvar(r, "z")));
               }});
  c.push_back({"chpp.quartic.companion", "common root only for lambda = 1 or -1", [](const SuiteOptions&) {
                 return compare(P("(lam^2 - 1)^2", chpp_ring()), chpp_companion_resultant());
               }});
  c.push_back({"chpp.zeuthen_segre", "Zeuthen-Segre count", [](const SuiteOptions&) {
                 return compare("12", std::to_string(zeuthen_segre_count(4, 4)));
               }});
  return c;
}

// ---------------------------------------------------------------- PP4

inline std::vector<SuiteCheck> pp4_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"pp4.minors", "PP4 equations F1, F2, F3", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 auto mins = minors(pp4_matrix(Rational(1), std::nullopt), 2);
                 std::vector<QPoly> printed{P("s3*(y2^2 + mu*y1*y3) - s2*(y3^2 + mu*y1*y2)", r),
                                            P("s1*(y3^2 + mu*y1*y2) - s3*(y1^2 + mu*y2*y3)", r),
                                            P("s2*(y1^2 + mu*y2*y3) - s1*(y2^2 + mu*y1*y3)", r)};
                 // lex-ordered minors are (F2, -F3, F1)
                 return compare(span_text(std::vector<QPoly>{printed[1], -printed[2], printed[0]}), span_text(mins),
                                "minor signs: (+F2, -F3, +F1)");
               }});
  c.push_back({"pp4.equivariance.eigenvalues", "F1, F2, F3 multiplied by 1, eps^2, eps", [](const SuiteOptions&) {
                 auto rep = family_equivariance(pp4_family());
                 std::vector<std::string> parts;
                 for (const auto& e : rep.equations)
                   for (const auto& [g, k] : e.exponents)
                     if (g == "chi") parts.push_back(k ? "eps^" + std::to_string(*k) : "none");
                 return compare("eps^0, eps^2, eps^1", join(parts, ", "));
               }});
  c.push_back({"pp4.equivariance.cyclic", "F1, F2, F3 cyclically permuted", [](const SuiteOptions&) {
                 auto fam = pp4_family();
                 HeisType t(1, 3);
                 std::vector<CPoly> f;
                 for (const auto& e : fam.equations) f.push_back(to_cyclotomic(e, 3));
                 HeisElement g = heis_generator(t, "t");
                 std::vector<std::string> parts;
                 for (std::size_t i = 0; i < 3; ++i) {
                   CPoly img = act(t, g, f[i], "y", "s");
                   std::string target = "?";
                   for (std::size_t j = 0; j < 3; ++j)
                     if (img == f[j]) target = "F" + std::to_string(j + 1);
                   parts.push_back("F" + std::to_string(i + 1) + " -> " + target);
                 }
                 return compare("F1 -> F3; F2 -> F1; F3 -> F2", join(parts));
               }});
  c.push_back({"pp4.pencil.printed", "conic pencil p(s,t)", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 QPoly printed = P("1/4*mu^2*(s3^3 - s1^3)*s^3 + (1/4*mu^3*s1^2*s3 - 3/4*mu^2*s2*s3^2 + s1^2*s3)*s^2*t"
                                   " + (-1/4*mu^3*s1^2*s2 + 3/4*mu^2*s2^2*s3 - s1^2*s2)*s*t^2 + 1/4*mu^2*(s1^3 - s2^3)*t^3",
                                   r);
                 return compare(printed, pp4_pencil_poly());
               }});
  c.push_back({"pp4.pencil.matrix", "conic pencil matrix A_{s,t}", [](const SuiteOptions&) {
                 auto f = pp4_equations(Rational(1), std::nullopt);
                 return compare(pp4_pencil_poly(), conic_pencil_det(f[1], f[2]));
               }});
  c.push_back({"pp4.pencil.cubic_coefficients", "conic pencil p(s,t)", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 auto k = binary_cubic_coefficients(pp4_pencil_poly());
                 return compare(P("1/4*mu^2*(s3^3 - s1^3)", r).to_string() + "; " + P("1/4*mu^2*(s1^3 - s2^3)", r).to_string(),
                                k[0].to_string() + "; " + k[3].to_string());
               }});
  c.push_back({"pp4.branch.coefficients", "PP4 branch locus sextic", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 auto k = sextic_coefficients(pp4_branch_locus());
                 std::vector<std::string> expected{P("-27*mu^8", r).to_string(),
                                                   P("mu^2*(-4*mu^9 + 6*mu^6 - 192*mu^3 - 256)", r).to_string(),
                                                   P("mu^4*(18*mu^6 + 144*mu^3 + 288)", r).to_string(),
                                                   P("mu^12 - 92*mu^9 - 336*mu^6 + 256*mu^3 + 256", r).to_string()};
                 std::vector<std::string> actual{k.pure6.to_string(), k.cubes.to_string(), k.mixed.to_string(),
                                                 k.central.to_string()};
                 return compare(join(expected), join(actual));
               }});
  c.push_back({"pp4.branch.sextic", "PP4 branch locus sextic", [](const SuiteOptions&) {
                 return compare(pp4_printed_sextic(), pp4_branch_locus(),
                                "printed middle orbit read as s1^3*s2^3 + s1^3*s3^3 + s2^3*s3^3");
               }});
  c.push_back({"pp4.branch.middle_term", "PP4 branch locus sextic", [](const SuiteOptions&) {
                 auto k = sextic_coefficients(pp4_branch_locus());
                 std::string actual = "s1^3*s3^3: " + k.cubes13.to_string() + "; s1*s3: " + k.s1s3.to_string();
                 return compare("s1^3*s3^3: " + k.cubes.to_string() + "; s1*s3: 0", actual,
                                "suspected misprint: the display prints s1*s3 (degree 2) inside the s1^3*s2^3 orbit; "
                                "the computed sextic has the s1^3*s3^3 term and no s1*s3 term");
               }});
  c.push_back({"pp4.branch.cyclic", "PP4 branch locus sextic", [](const SuiteOptions&) {
                 QPoly sextic = pp4_branch_locus();
                 return compare(sextic, cycle3(sextic, "s"));
               }});
  c.push_back({"pp4.branch.charts", "PP4 branch locus sextic", [](const SuiteOptions&) {
                 QPoly sextic = pp4_branch_locus();
                 std::vector<std::string> parts;
                 for (unsigned k = 2; k <= 3; ++k)
                   parts.push_back("chart s" + std::to_string(k) +
                                   (pp4_branch_locus_chart(k, Rational(1), std::nullopt) == sextic ? " agrees" : " differs"));
                 return compare("chart s2 agrees; chart s3 agrees", join(parts));
               }});
  c.push_back({"pp4.branch.penegini_polizzi", "Penegini-Polizzi substitution", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 QPoly two = pp4_branch_locus_chart(1, std::nullopt, std::nullopt);
                 QPoly pp = pp_form_from_sextic(pp4_branch_locus());
                 QPoly mapped = substitute(pp, {{"a", -qvar(r, "lam") * qvar(r, "mu")}, {"c", pow(qvar(r, "lam"), 2)}})
                                    .scaled(Rational(-27));
                 auto h = is_homogeneous(two, std::map<std::string, long>{{"lam", 1}, {"mu", 1}});
                 if (!h.homogeneous || h.degree > 24) return compare("homogeneous in (lam, mu)", "inhomogeneous");
                 return compare(two * qvar(r, "lam", static_cast<unsigned>(24 - h.degree)), mapped,
                                "(a, c) = (-lam*mu, lam^2)");
               }});
  c.push_back({"pp4.gamma.components", "gamma_{lam,mu} display", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 const char* printed[15] = {"-lam*mu*s2", "lam*mu*s3", "lam^2*s3", "0",          "-lam^2*s2",
                                            "-mu^2*s1",   "-lam*mu*s1", "mu^2*s2", "0",          "0",
                                            "-mu^2*s3",   "lam*mu*s1", "-lam*mu*s3", "lam^2*s1", "-lam*mu*s2"};
                 auto g = pp4_gamma();
                 std::vector<std::string> exp, act_;
                 for (std::size_t i = 0; i < 15; ++i) {
                   exp.push_back(pp4_gamma_labels()[i] + "=" + P(printed[i], r).to_string());
                   act_.push_back(pp4_gamma_labels()[i] + "=" + g.at(i).to_string());
                 }
                 return compare(join(exp), join(act_));
               }});
  c.push_back({"pp4.gamma.dictionary", "gamma coefficients (a, b, c, d, e)", [](const SuiteOptions&) {
                 auto r = pp4_ring();
                 auto d = pp4_gamma_dictionary(pp4_gamma());
                 std::vector<std::string> act_;
                 for (const auto& x : d) act_.push_back(x.to_string());
                 std::vector<std::string> exp;
                 for (const char* e : {"-lam*mu", "lam*mu", "lam^2", "0", "-mu^2"}) exp.push_back(P(e, r).to_string());
                 return compare(join(exp, ", "), join(act_, ", "));
               }});
  return c;
}

// ---------------------------------------------------------------- Hesse, AC3

inline std::vector<SuiteCheck> hesse_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"hesse.q_partials", "Hesse quadrics 3 q_j", [](const SuiteOptions&) {
                 auto q = hesse_q();
                 QPoly f = hesse_cubic();
                 std::vector<std::string> exp, act_;
                 for (int j = 0; j < 3; ++j) {
                   exp.push_back(q[j].scaled(Rational(3)).to_string());
                   act_.push_back(partial_derivative(f, "y" + std::to_string(j + 1)).to_string());
                 }
                 return compare(join(exp), join(act_));
               }});
  c.push_back({"hesse.smoothness", "singular members (2m)^3 = -1", [](const SuiteOptions&) {
                 std::vector<std::string> act_, notes;
                 for (const Rational& m : {Rational(0), Rational(1), Rational(-1, 2)}) {
                   auto cert = plane_curve_smoothness(hesse_cubic(m));
                   act_.push_back("m=" + m.to_string() + ": " + verdict(cert));
                   notes.push_back("m=" + m.to_string() + " " + cert_text(cert));
                 }
                 return compare("m=0: smooth; m=1: smooth; m=-1/2: singular", join(act_), join(notes));
               }});
  c.push_back({"hesse.dual.groebner", "dual sextic B_m", [](const SuiteOptions&) {
                 std::vector<std::string> act_;
                 for (long m : {0L, 1L, 2L, -1L})
                   act_.push_back("m=" + std::to_string(m) + ": " + hesse_duality_remainder(Rational(m)).to_string());
                 return compare("m=0: 0; m=1: 0; m=2: 0; m=-1: 0", join(act_));
               }});
  c.push_back({"hesse.dual.sampled", "dual sextic B_m", [](const SuiteOptions& o) {
                 auto s = hesse_duality_sampled(o.prime, 100, o.seed);
                 return compare("100/100 points", std::to_string(s.vanishing) + "/" + std::to_string(s.points) + " points",
                                "GF(" + std::to_string(o.prime) + "), " + std::to_string(s.attempts) + " attempts");
               }});
  c.push_back({"hesse.dual.cyclic", "dual sextic B_m", [](const SuiteOptions&) {
                 QPoly b = hesse_dual_sextic();
                 return compare(b, cycle3(b, "x"));
               }});
  c.push_back({"hesse.dual.lambda0", "dual sextic B_m", [](const SuiteOptions&) {
                 return compare(P("x1^6 + x2^6 + x3^6 - 2*(x1^3*x2^3 + x1^3*x3^3 + x2^3*x3^3)", hesse_ring()),
                                hesse_dual_sextic(Rational(0)));
               }});
  c.push_back({"hesse3.family.invariant", "invariant cubics for delta 3", [](const SuiteOptions&) {
                 auto rep = family_equivariance(hesse3_family());
                 std::vector<std::string> parts;
                 for (const auto& e : rep.equations) parts.push_back(exponents_text(e));
                 return compare("pairing(t:0,chi:0); cubic(t:0,chi:0)", join(parts));
               }});
  c.push_back({"ac3.character", "AC3 cubic", [](const SuiteOptions&) {
                 auto rep = family_equivariance(ac3_family());
                 return compare("cubic(t:0,chi:2)", exponents_text(rep.equations.at(1)));
               }});
  c.push_back({"ac3.smooth", "AC3 partials cannot vanish simultaneously", [](const SuiteOptions&) {
                 auto cert = plane_curve_smoothness(ac3_cubic());
                 return compare("smooth", verdict(cert), cert_text(cert));
               }});
  return c;
}

// ---------------------------------------------------------------- QUARTIC4

inline std::vector<SuiteCheck> quartic4_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"quartic4.smooth.lambda2", "quadric pencil Q1, Q2", [](const SuiteOptions&) {
                 auto cert = quartic4_curve_smoothness(Rational(2));
                 return compare("smooth", verdict(cert), cert_text(cert));
               }});
  c.push_back({"quartic4.singular.lambda0", "quadric pencil Q1, Q2", [](const SuiteOptions&) {
                 auto cert = quartic4_curve_smoothness(Rational(0));
                 return compare("singular", verdict(cert), cert_text(cert));
               }});
  c.push_back({"quartic4.beta.lambda_cancellation", "beta map identities", [](const SuiteOptions&) {
                 return compare("0", beta_certificates().lambda_part.to_string());
               }});
  c.push_back({"quartic4.beta.c_prime", "quartic relation of C'", [](const SuiteOptions&) {
                 auto r = beta_ring();
                 return compare(c_prime_quartic(r), beta_certificates().y_dot_beta);
               }});
  c.push_back({"quartic4.beta.identity_ii", "beta map identities", [](const SuiteOptions&) {
                 auto r = beta_ring();
                 auto b = beta_map();
                 QPoly lam = qvar(r, "lam");
                 auto y = [&](int i) { return qvar(r, "y" + std::to_string(i)); };
                 QPoly q1 = y(1) * y(1) + y(3) * y(3) + qconst(r, 2) * lam * y(2) * y(4);
                 std::vector<std::string> exp, act_;
                 for (std::size_t i = 0; i < 4; ++i) {
                   exp.push_back((q1 * b.beta1[i]).to_string());
                   act_.push_back((qconst(r, 2) * y(2) * y(4) * (b.beta0[i] + lam * b.beta1[i]) - b.beta_tilde[i]).to_string());
                 }
                 return compare(join(exp), join(act_));
               }});
  c.push_back({"quartic4.probe.synthetic", "Jacobian rank 3 claim", [](const SuiteOptions& o) {
                 auto r = star3_rank_probe(random_octic_family(20261016), o.prime, 20, o.seed);
                 return compare("rank 3 (verified)", probe_text(r),
                                "witness sample " + std::to_string(r.probe.witness_sample));
               }});
  c.push_back({"quartic4.probe.degenerate", "Jacobian rank 3 claim", [](const SuiteOptions& o) {
                 auto f = parse_poly("x1^8", make_ring<Rational>(octic_vars()));
                 auto r = star3_rank_probe(f, o.prime, 20, o.seed);
                 std::string rank = r.probe.max_rank <= 2 ? "rank <= 2" : "rank " + std::to_string(r.probe.max_rank);
                 return compare("rank <= 2 (unverified)", rank + (r.verified ? " (verified)" : " (unverified)"));
               }});
  c.push_back({"quartic4.probe.user", "Jacobian rank 3 claim", [](const SuiteOptions& o) {
                 if (!o.octic) return CheckOutcome{CheckStatus::skipped, std::nullopt, std::nullopt, "no --octic file given"};
                 auto r = star3_rank_probe(*o.octic, o.prime, 20, o.seed);
                 return compare("rank 3 (verified)", probe_text(r), *o.octic);
               }});
  return c;
}

// ---------------------------------------------------------------- invariants

inline std::vector<SuiteCheck> invariant_checks() {
  auto row = [](const NumericInvariants& n) {
    return "K2=" + std::to_string(n.k2) + " K2'=" + std::to_string(n.k2_cover) + " chi=" + std::to_string(n.chi) +
           " c2=" + (n.c2 ? std::to_string(*n.c2) : "-");
  };
  std::vector<SuiteCheck> c;
  c.push_back({"invariants.chpp", "K^2 of the CHPP surfaces",
               [=](const SuiteOptions&) { return compare("K2=5 K2'=20 chi=1 c2=-", row(numeric_invariants("CHPP"))); }});
  c.push_back({"invariants.pp4", "c2 of the Tschirnhaus bundle",
               [=](const SuiteOptions&) { return compare("K2=6 K2'=54 chi=1 c2=18", row(numeric_invariants("PP4"))); }});
  c.push_back({"invariants.degree3", "K^2_S = delta + 3", [](const SuiteOptions&) {
                 std::vector<std::string> exp, act_;
                 for (const auto& name : family_names()) {
                   auto n = numeric_invariants(name);
                   if (n.d != 3) continue;
                   exp.push_back(name + ":" + std::to_string(n.delta + 3));
                   act_.push_back(name + ":" + std::to_string(n.k2));
                 }
                 return compare(join(exp, ","), join(act_, ","));
               }});
  return c;
}

// ---------------------------------------------------------------- infrastructure

inline std::vector<QPoly> suite_polynomials() {
  std::vector<QPoly> out{chpp_equation(), chpp_discriminant(), chpp_singular_fiber_quartic(), chpp_companion_resultant(),
                         pp4_pencil_poly(), pp4_branch_locus(), pp_form_from_sextic(pp4_branch_locus()),
                         hesse_cubic(), hesse_dual_sextic(), ac3_cubic(), c_prime_quartic(beta_ring())};
  for (const auto& f : pp4_equations(std::nullopt, std::nullopt)) out.push_back(f);
  for (const auto& g : pp4_gamma()) out.push_back(g);
  for (const auto& q : hesse_q()) out.push_back(q);
  for (const auto& q : quartic4_quadrics()) out.push_back(q);
  for (const auto& b : beta_map().beta_tilde) out.push_back(b);
  return out;
}

inline std::vector<SuiteCheck> infra_checks() {
  std::vector<SuiteCheck> c;
  c.push_back({"infra.groebner.verify", "Groebner certificates", [](const SuiteOptions&) {
                 std::vector<std::pair<std::string, IdealBasis<Rational>>> ideals;
                 for (long m : {0L, 1L})
                   ideals.emplace_back("hesse gradient m=" + std::to_string(m), plane_gradient_ideal(hesse_cubic(Rational(m))));
                 ideals.emplace_back("hesse gradient m=-1/2", plane_gradient_ideal(hesse_cubic(Rational(-1, 2))));
                 ideals.emplace_back("ac3 gradient", plane_gradient_ideal(ac3_cubic()));
                 for (long l : {0L, 2L})
                   ideals.emplace_back("quartic4 singular lam=" + std::to_string(l), quartic4_singular_ideal(Rational(l)));
                 auto r = plane_ring();
                 for (long m : {0L, 1L, 2L, -1L})
                   ideals.emplace_back("hesse cubic m=" + std::to_string(m),
                                       IdealBasis<Rational>(r, {change_ring(hesse_cubic(Rational(m)), r,
                                                                            [](const Rational& x) { return x; })}));
                 std::vector<std::string> bad;
                 for (const auto& [name, ideal] : ideals)
                   if (!groebner(ideal).verify()) bad.push_back(name);
                 std::string n = std::to_string(ideals.size());
                 return compare(n + "/" + n + " bases verified",
                                std::to_string(ideals.size() - bad.size()) + "/" + n + " bases verified", join(bad));
               }});
  c.push_back({"infra.roundtrip", "canonical serialization", [](const SuiteOptions&) {
                 auto polys = suite_polynomials();
                 std::vector<std::string> bad;
                 for (const auto& f : polys)
                   if (parse_poly(f.to_string(), f.ring()) != f) bad.push_back(f.to_string());
                 HeisType t(1, 3);
                 GradedModule m(t, 3, 0);
                 std::size_t total = polys.size();
                 for (const auto& chi : all_characters(t))
                   for (const auto& f : eigenspace_basis(t, m, chi)) {
                     ++total;
                     if (parse_poly(f.to_string(), f.ring()) != f) bad.push_back(f.to_string());
                   }
                 std::string n = std::to_string(total);
                 return compare(n + "/" + n + " round-trips", std::to_string(total - bad.size()) + "/" + n + " round-trips",
                                join(bad));
               }});
  c.push_back({"infra.det.agreement", "exact determinants", [](const SuiteOptions& o) {
                 std::mt19937_64 rng(splitmix64(o.seed));
                 std::size_t agree = 0;
                 for (int trial = 0; trial < 200; ++trial) {
                   std::size_t n = 1 + trial % 4;
                   std::vector<Rational> v;
                   for (std::size_t i = 0; i < n * n; ++i)
                     v.emplace_back(static_cast<long>(rng() % 19) - 9, static_cast<long>(1 + rng() % 3));
                   ExactMatrix<Rational> a(n, n, std::move(v));
                   agree += det_bareiss(a) == det_cofactor(a);
                 }
                 return compare("200/200", std::to_string(agree) + "/200");
               }});
  return c;
}

}  // namespace suite_detail

/// Every check of the suite, in registration order.
inline const std::vector<SuiteCheck>& suite_checks() {
  static const std::vector<SuiteCheck> all = [] {
    std::vector<SuiteCheck> out;
    for (auto&& group : {suite_detail::heis_checks(), suite_detail::chpp_checks(), suite_detail::pp4_checks(),
                         suite_detail::hesse_checks(), suite_detail::quartic4_checks(),
                         suite_detail::invariant_checks(), suite_detail::infra_checks()})
      out.insert(out.end(), group.begin(), group.end());
    return out;
  }();
  return all;
}

/// Runs the checks whose id matches the glob on a bounded pool; a check that
/// throws becomes a fail entry. Results are sorted by id.
inline VerificationReport run_suite(const SuiteOptions& opts, const std::vector<SuiteCheck>& checks = suite_checks()) {
  ModP::make_field(opts.prime);
  std::vector<const SuiteCheck*> selected;
  for (const auto& c : checks)
    if (glob_match(opts.filter, c.id)) selected.push_back(&c);

  VerificationReport report;
  report.seed = opts.seed;
  report.prime = opts.prime;
  report.checks.resize(selected.size());
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, selected.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      const SuiteCheck& c = *selected[i];
      CheckResult& out = report.checks[i];
      out.id = c.id;
      out.paper_anchor = c.anchor;
      auto start = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = c.run(opts);
        out.status = o.status;
        out.expected = std::move(o.expected);
        out.actual = std::move(o.actual);
        out.note = std::move(o.note);
      } catch (const std::exception& e) {
        out.status = CheckStatus::fail;
        out.note = std::string("error: ") + e.what();
      }
      out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  if (workers > 0) work();
  for (auto& t : pool) t.join();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace heisurf
