#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heisurf/heis/module.hpp"
#include "heisurf/poly/multipoly.hpp"

namespace heisurf {

using QPoly = MultiPoly<Rational>;
using CPoly = MultiPoly<Cyclotomic>;

/// A family parameter is either a symbol (kept as a ring variable) or a
/// rational value substituted into the equations.
using Param = std::optional<Rational>;

inline std::string param_text(const Param& p) { return p ? p->to_string() : "symbolic"; }

struct FamilyDescriptor {
  std::string name;
  HeisType heis_type;
  std::string primal_prefix = "x";  // V coordinates (x_j or s_j); V^vee is always y_j
  std::vector<std::pair<std::string, std::string>> parameters;
  RingPtr<Rational> ring;
  std::vector<QPoly> equations;
  std::vector<std::string> labels;  // one per equation
};

inline QPoly qvar(const RingPtr<Rational>& r, std::string_view name, unsigned power = 1) {
  return QPoly::variable(r, name, power);
}
inline QPoly qconst(const RingPtr<Rational>& r, const Rational& c) { return QPoly::constant(r, c); }

/// The symbol itself, or its value when specialized.
inline QPoly param_poly(const RingPtr<Rational>& r, std::string_view name, const Param& p) {
  return p ? qconst(r, *p) : qvar(r, name);
}

/// f in the same variables over Q(zeta_n).
inline CPoly to_cyclotomic(const QPoly& f, unsigned n) {
  auto ring = make_ring<Cyclotomic>(f.ring()->vars.names(), Cyclotomic::Field{n}, f.ring()->order);
  return from_rational_poly(f, ring);
}

/// k with g f = zeta_n^k f, if f is an eigenvector of g.
inline std::optional<unsigned> eigen_exponent(const HeisType& t, const HeisElement& g, const CPoly& f,
                                              const std::string& primal_prefix) {
  if (f.is_zero()) return 0;
  CPoly image = act(t, g, f, "y", primal_prefix);
  for (unsigned k = 0; k < t.n(); ++k)
    if (image == f.scaled(Cyclotomic::zeta(t.n(), k))) return k;
  return std::nullopt;
}

/// Rank of the coefficient vectors of polys (all in one ring).
inline std::size_t poly_span_rank(const std::vector<CPoly>& polys) {
  std::map<Exponents, std::size_t> column;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) column.emplace(e, column.size());
  if (polys.empty() || column.empty()) return 0;
  Cyclotomic zero = Cyclotomic::zero(polys.front().field());
  ExactMatrix<Cyclotomic> m(polys.size(), column.size(), zero);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [e, c] : polys[i].terms()) m(i, column.at(e)) = c;
  return rank(m);
}

struct EquationEigen {
  std::string label;
  // per generator name: zeta_n exponent, or nullopt when not an eigenvector
  std::vector<std::pair<std::string, std::optional<unsigned>>> exponents;
  bool eigenvector() const {
    for (const auto& [g, k] : exponents)
      if (!k) return false;
    return true;
  }
};

struct EquivarianceReport {
  std::vector<EquationEigen> equations;
  bool all_eigenvectors = true;
  bool span_invariant = true;  // each g f_i lies in span{f_j}
};

inline EquivarianceReport family_equivariance(const FamilyDescriptor& fam) {
  const HeisType& t = fam.heis_type;
  std::vector<CPoly> eqs;
  for (const auto& f : fam.equations) eqs.push_back(to_cyclotomic(f, t.n()));
  EquivarianceReport rep;
  std::size_t base_rank = poly_span_rank(eqs);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    EquationEigen ee{i < fam.labels.size() ? fam.labels[i] : "eq" + std::to_string(i + 1), {}};
    for (const auto& [name, g] : heis_generators(t)) {
      ee.exponents.emplace_back(name, eigen_exponent(t, g, eqs[i], fam.primal_prefix));
      auto with = eqs;
      with.push_back(act(t, g, eqs[i], "y", fam.primal_prefix));
      if (poly_span_rank(with) != base_rank) rep.span_invariant = false;
    }
    rep.all_eigenvectors = rep.all_eigenvectors && ee.eigenvector();
    rep.equations.push_back(std::move(ee));
  }
  return rep;
}

/// 1/2 of the Hessian of a quadratic form q in the listed variables: the
/// symmetric matrix A with q = v^T A v.
inline ExactMatrix<QPoly> quadric_matrix(const QPoly& q, const std::vector<std::string>& vars) {
  ExactMatrix<QPoly> a(vars.size(), vars.size(), QPoly(q.ring()));
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j)
      a(i, j) = partial_derivative(partial_derivative(q, vars[i]), vars[j]).scaled(Rational(1, 2));
  return a;
}

/// Coefficient of the monomial prod vars[i]^exps[i] in f, as a polynomial in
/// the remaining variables.
inline QPoly coefficient_of(const QPoly& f, const std::vector<std::string>& vars, const std::vector<unsigned>& exps) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(f.ring()->vars.index(v));
  std::vector<QPoly::Term> out;
  for (const auto& [e, c] : f.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < idx.size() && match; ++i) match = e[idx[i]] == exps[i];
    if (!match) continue;
    Exponents r = e;
    for (auto i : idx) r[i] = 0;
    out.emplace_back(std::move(r), c);
  }
  return QPoly::from_terms(f.ring(), std::move(out));
}

/// Cyclic relabeling prefix1 -> prefix2 -> prefix3 -> prefix1 of three variables.
inline QPoly cycle3(const QPoly& f, const std::string& prefix) {
  const auto& r = f.ring();
  return substitute(f, {{prefix + "1", qvar(r, prefix + "2")},
                        {prefix + "2", qvar(r, prefix + "3")},
                        {prefix + "3", qvar(r, prefix + "1")}});
}

}  // namespace heisurf
