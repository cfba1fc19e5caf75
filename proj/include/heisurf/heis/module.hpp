#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heisurf/heis/heisenberg.hpp"
#include "heisurf/poly/multipoly.hpp"

namespace heisurf {

/// Variable names y1..y_delta (V^vee) or x1..x_delta (V) for a given prefix.
inline std::vector<std::string> coordinate_names(const std::string& prefix, std::size_t delta) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < delta; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

/// All exponent vectors of total degree d in k variables, grevlex descending.
inline std::vector<Exponents> monomials_of_degree(std::size_t k, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(k, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (k == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (i + 1 == k) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      cur[i] = a;
      self(self, i + 1, left - a);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    return compare_monomials(a, b, MonomialOrder::grevlex) > 0;
  });
  return out;
}

/// Sym^d(V^vee) (x) Sym^e(V) inside Q(zeta_n)[y1..y_delta, x1..x_delta].
class GradedModule {
 public:
  GradedModule(HeisType type, unsigned d, unsigned e, std::string dual_prefix = "y", std::string primal_prefix = "x")
      : type_(type), d_(d), e_(e), dual_(std::move(dual_prefix)), primal_(std::move(primal_prefix)) {
    std::size_t delta = type_.delta();
    auto names = coordinate_names(dual_, delta);
    auto xs = coordinate_names(primal_, delta);
    names.insert(names.end(), xs.begin(), xs.end());
    ring_ = make_ring<Cyclotomic>(names, type_.field());
    auto alphas = monomials_of_degree(delta, d);
    auto betas = monomials_of_degree(delta, e);
    for (const auto& a : alphas)
      for (const auto& b : betas) {
        Exponents m(a);
        m.insert(m.end(), b.begin(), b.end());
        position_.emplace(m, basis_.size());
        basis_.push_back(std::move(m));
      }
  }

  const HeisType& type() const { return type_; }
  unsigned d() const { return d_; }
  unsigned e() const { return e_; }
  const std::string& dual_prefix() const { return dual_; }
  const std::string& primal_prefix() const { return primal_; }
  const RingPtr<Cyclotomic>& ring() const { return ring_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Exponents>& basis() const { return basis_; }

  MultiPoly<Cyclotomic> basis_element(std::size_t i) const {
    return MultiPoly<Cyclotomic>::monomial(ring_, basis_.at(i), Cyclotomic::one(type_.field()));
  }

  MultiPoly<Cyclotomic> element(const std::vector<Cyclotomic>& coords) const {
    if (coords.size() != dim()) throw DimensionMismatch("module coordinates");
    std::vector<MultiPoly<Cyclotomic>::Term> terms;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero()) terms.emplace_back(basis_[i], coords[i]);
    return MultiPoly<Cyclotomic>::from_terms(ring_, std::move(terms));
  }

  /// Coordinates of f in the monomial basis; f must live in the module's ring
  /// and be bihomogeneous of degree (d, e).
  std::vector<Cyclotomic> coordinates(const MultiPoly<Cyclotomic>& f) const {
    std::vector<Cyclotomic> out(dim(), Cyclotomic::zero(type_.field()));
    if (f.is_zero()) return out;
    if (!same_ring(f.ring(), ring_)) throw FieldMismatch("polynomial is not in the module's ring");
    for (const auto& [m, c] : f.terms()) {
      auto it = position_.find(m);
      if (it == position_.end()) throw DimensionMismatch("monomial outside Sym^" + std::to_string(d_) +
                                                         " (x) Sym^" + std::to_string(e_));
      out[it->second] = c;
    }
    return out;
  }

 private:
  HeisType type_;
  unsigned d_, e_;
  std::string dual_, primal_;
  RingPtr<Cyclotomic> ring_;
  std::vector<Exponents> basis_;
  std::map<Exponents, std::size_t> position_;
};

/// Substitutes y_a -> sum_r on_dual(r, a) y_r and x_a -> sum_r on_primal(r, a) x_r
/// for the coordinate variables present in f's ring; other variables are fixed.
inline MultiPoly<Cyclotomic> act_by_matrices(const MultiPoly<Cyclotomic>& f, const RepMatrix& on_dual,
                                             const RepMatrix& on_primal, const std::string& dual_prefix = "y",
                                             const std::string& primal_prefix = "x") {
  if (f.is_zero()) return f;
  const auto& ring = f.ring();
  std::map<std::string, MultiPoly<Cyclotomic>> bind;
  auto add = [&](const RepMatrix& m, const std::string& prefix) {
    auto names = coordinate_names(prefix, m.cols());
    for (std::size_t a = 0; a < m.cols(); ++a) {
      if (!ring->vars.find(names[a])) continue;
      MultiPoly<Cyclotomic> image(ring);
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, a).is_zero()) image = image + MultiPoly<Cyclotomic>::variable(ring, names[r]).scaled(m(r, a));
      bind.emplace(names[a], std::move(image));
    }
  };
  add(on_dual, dual_prefix);
  add(on_primal, primal_prefix);
  return substitute(f, bind);
}

/// g . f for f in any ring over Q(zeta_n) using the module's variable prefixes.
inline MultiPoly<Cyclotomic> act(const HeisType& t, const HeisElement& g, const MultiPoly<Cyclotomic>& f,
                                 const std::string& dual_prefix = "y", const std::string& primal_prefix = "x") {
  if (!f.is_zero() && !(f.field() == t.field()))
    throw FieldMismatch("polynomial field differs from Q(zeta_" + std::to_string(t.n()) + ")");
  return act_by_matrices(f, rho_dual(t, g), rho(t, g), dual_prefix, primal_prefix);
}

/// Matrix of g on the module basis (column j = image of basis element j).
inline RepMatrix induced_action(const HeisType& t, const GradedModule& m, const HeisElement& g) {
  if (!(t == m.type())) throw DimensionMismatch("module built for a different Heisenberg type");
  RepMatrix out(m.dim(), m.dim(), Cyclotomic::zero(t.field()));
  RepMatrix dual = rho_dual(t, g), primal = rho(t, g);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    auto coords = m.coordinates(act_by_matrices(m.basis_element(j), dual, primal, m.dual_prefix(), m.primal_prefix()));
    for (std::size_t i = 0; i < m.dim(); ++i) out(i, j) = coords[i];
  }
  return out;
}

using EigenCondition = std::pair<HeisElement, Cyclotomic>;

/// Basis of {f in module : g f = lambda f for every (g, lambda)}, as the
/// reduced echelon kernel of the stacked (rho(g) - lambda Id).
inline std::vector<MultiPoly<Cyclotomic>> eigenspace_basis(const HeisType& t, const GradedModule& m,
                                                           const std::vector<EigenCondition>& conditions) {
  const std::size_t dim = m.dim();
  std::vector<Cyclotomic> flat;
  flat.reserve(conditions.size() * dim * dim);
  for (const auto& [g, lambda] : conditions) {
    RepMatrix a = induced_action(t, m, g);
    for (std::size_t i = 0; i < dim; ++i) a(i, i) = a(i, i) - lambda;
    flat.insert(flat.end(), a.entries().begin(), a.entries().end());
  }
  ExactMatrix<Cyclotomic> stacked(conditions.size() * dim, dim, std::move(flat));
  std::vector<MultiPoly<Cyclotomic>> out;
  for (const auto& v : nullspace(stacked, Cyclotomic::one(t.field()))) out.push_back(m.element(v));
  return out;
}

/// A character of G = H x H^*, given by zeta_n-exponents on the named
/// generators of heis_generators.
struct HeisCharacter {
  std::vector<std::pair<std::string, unsigned>> values;

  std::string to_string() const {
    std::string s;
    for (const auto& [name, k] : values) s += (s.empty() ? "" : ",") + name + "=" + std::to_string(k);
    return s.empty() ? "trivial" : s;
  }
};

inline std::vector<EigenCondition> conditions_for(const HeisType& t, const HeisCharacter& chi) {
  std::vector<EigenCondition> out;
  for (const auto& [name, k] : chi.values) out.emplace_back(heis_generator(t, name), Cyclotomic::zeta(t.n(), k));
  return out;
}

inline std::vector<MultiPoly<Cyclotomic>> eigenspace_basis(const HeisType& t, const GradedModule& m,
                                                           const HeisCharacter& chi) {
  return eigenspace_basis(t, m, conditions_for(t, chi));
}

inline HeisCharacter trivial_character(const HeisType& t) {
  HeisCharacter chi;
  for (const auto& [name, g] : heis_generators(t)) chi.values.emplace_back(name, 0);
  return chi;
}

/// The delta^2 characters of G, generator values zeta_{d_i}^j written as
/// zeta_n exponents.
inline std::vector<HeisCharacter> all_characters(const HeisType& t) {
  auto gens = heis_generators(t);
  std::vector<HeisCharacter> out{HeisCharacter{}};
  for (const auto& [name, g] : gens) {
    unsigned order = (name == "t1" || name == "chi1") ? t.d1() : t.d2();
    std::vector<HeisCharacter> next;
    for (const auto& c : out)
      for (unsigned j = 0; j < order; ++j) {
        HeisCharacter d = c;
        d.values.emplace_back(name, j * (t.n() / order));
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

/// chi(g) on a module where the center acts by zeta^{e-d}: g = z^k t^h chi^b.
inline Cyclotomic character_value(const HeisType& t, const GradedModule& m, const HeisCharacter& chi,
                                  const HeisElement& g) {
  long long exp = static_cast<long long>(g.k) * (static_cast<long long>(m.e()) - m.d());
  auto value_of = [&](const std::string& name) -> long long {
    for (const auto& [n, k] : chi.values)
      if (n == name) return k;
    throw Error("character has no value on generator '" + name + "'");
  };
  if (t.d1() > 1) {
    exp += value_of("t1") * g.h1 + value_of("t2") * g.h2 + value_of("chi1") * g.b1 + value_of("chi2") * g.b2;
  } else if (t.d2() > 1) {
    exp += value_of("t") * g.h2 + value_of("chi") * g.b2;
  }
  long long n = t.n();
  return Cyclotomic::zeta(t.n(), ((exp % n) + n) % n);
}

/// f -> iota f with iota: x_a -> x_{-a}, y_a -> y_{-a}.
inline MultiPoly<Cyclotomic> apply_iota(const HeisType& t, const MultiPoly<Cyclotomic>& f,
                                        const std::string& dual_prefix = "y", const std::string& primal_prefix = "x") {
  RepMatrix i = iota_matrix(t);
  return act_by_matrices(f, i, i, dual_prefix, primal_prefix);
}

/// iota rho(g) iota^-1 = rho(iota_conjugate(g)) for every generator.
inline bool iota_normalizes(const HeisType& t) {
  RepMatrix i = iota_matrix(t);
  auto gens = heis_generators(t);
  gens.emplace_back("z", central(t, 1));
  for (const auto& [name, g] : gens)
    if (!(i * rho(t, g) * i == rho(t, iota_conjugate(t, g)))) return false;
  return true;
}

}  // namespace heisurf
