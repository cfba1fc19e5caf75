#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/poly/multipoly.hpp"

namespace heisurf {

inline constexpr std::size_t kDefaultPairLimit = 100000;

/// Pair bound for Buchberger; HEISURF_PAIR_LIMIT overrides the default.
inline std::size_t pair_limit_from_env() {
  if (const char* s = std::getenv("HEISURF_PAIR_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultPairLimit;
}

template <FieldElement F>
struct IdealBasis {
  RingPtr<F> ring;
  std::vector<MultiPoly<F>> generators;

  IdealBasis(RingPtr<F> r, std::vector<MultiPoly<F>> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!same_ring(g.ring(), ring)) throw FieldMismatch("ideal generator from a different ring");
      generators.push_back(std::move(g));
    }
  }
  explicit IdealBasis(const std::vector<MultiPoly<F>>& gens)
      : IdealBasis(gens.empty() ? RingPtr<F>{} : gens.front().ring(), gens) {}

  MonomialOrder order() const { return ring->order; }
};

inline Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}
inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}
inline Exponents monomial_quotient(const Exponents& a, const Exponents& b) {
  Exponents q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = a[i] - b[i];
  return q;
}

/// Full normal form of f modulo the list g (each element monic), reducing
/// every term, not just the leading one.
template <FieldElement F>
MultiPoly<F> normal_form(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& g) {
  MultiPoly<F> p = f;
  std::vector<typename MultiPoly<F>::Term> rem;
  while (!p.is_zero()) {
    const Exponents& lt = p.leading_monomial();
    const MultiPoly<F>* div = nullptr;
    for (const auto& h : g)
      if (divides(h.leading_monomial(), lt)) {
        div = &h;
        break;
      }
    if (div) {
      F c = p.leading_coefficient() / div->leading_coefficient();
      p = p - div->mul_term(monomial_quotient(lt, div->leading_monomial()), c);
    } else {
      rem.push_back(p.terms().front());
      p = p - MultiPoly<F>::monomial(p.ring(), lt, p.leading_coefficient());
    }
  }
  return MultiPoly<F>::from_terms(f.ring(), std::move(rem));
}

template <FieldElement F>
MultiPoly<F> s_polynomial(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  Exponents l = monomial_lcm(a.leading_monomial(), b.leading_monomial());
  auto one = F::one(a.field());
  return a.mul_term(monomial_quotient(l, a.leading_monomial()), one / a.leading_coefficient()) -
         b.mul_term(monomial_quotient(l, b.leading_monomial()), one / b.leading_coefficient());
}

/// Reduced Groebner basis. Construction re-checks the defining property:
/// every S-polynomial and every input generator reduces to zero.
template <FieldElement F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, std::vector<MultiPoly<F>> basis, const std::vector<MultiPoly<F>>& inputs,
                std::size_t pairs_processed)
      : ring_(std::move(ring)), basis_(std::move(basis)), pairs_processed_(pairs_processed) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j)
        if (!normal_form(s_polynomial(basis_[i], basis_[j]), basis_).is_zero())
          throw Error("internal error: S-polynomial does not reduce to zero");
    for (const auto& f : inputs)
      if (!normal_form(f, basis_).is_zero()) throw Error("internal error: generator not in the computed ideal");
  }

  const RingPtr<F>& ring() const { return ring_; }
  MonomialOrder order() const { return ring_->order; }
  const std::vector<MultiPoly<F>>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t pairs_processed() const { return pairs_processed_; }

  MultiPoly<F> reduce(const MultiPoly<F>& f) const { return normal_form(f, basis_); }
  bool contains(const MultiPoly<F>& f) const { return reduce(f).is_zero(); }
  bool is_unit_ideal() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  /// Every S-polynomial reduces to zero and no leading monomial divides another.
  bool verify() const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (i == j) continue;
        if (divides(basis_[i].leading_monomial(), basis_[j].leading_monomial())) return false;
        if (i < j && !reduce(s_polynomial(basis_[i], basis_[j])).is_zero()) return false;
      }
    for (const auto& g : basis_)
      if (!(g.leading_coefficient() == F::one(g.field()))) return false;
    return true;
  }

 private:
  RingPtr<F> ring_;
  std::vector<MultiPoly<F>> basis_;
  std::size_t pairs_processed_;
};

struct GroebnerOptions {
  std::size_t pair_limit = pair_limit_from_env();
};

/// Buchberger's algorithm with the product and chain criteria and the normal
/// selection strategy (smallest lcm degree, ties broken by pair indices).
template <FieldElement F>
GroebnerBasis<F> groebner(const IdealBasis<F>& ideal, const GroebnerOptions& opts = {}) {
  const auto& ring = ideal.ring;
  std::vector<MultiPoly<F>> g;
  for (const auto& f : ideal.generators) g.push_back(f.monic());
  if (g.empty()) return GroebnerBasis<F>(ring, {}, {}, 0);

  // key: (lcm degree, i, j)
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t created = 0, processed = 0;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    Exponents l = monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial());
    queue.emplace(MultiPoly<F>::degree_of(l), i, j);
    pending.emplace(i, j);
    if (++created > opts.pair_limit || queue.size() > opts.pair_limit)
      throw ResourceLimit("Buchberger pair bound " + std::to_string(opts.pair_limit) + " exceeded");
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({a, b}) > 0;
  };

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    ++processed;
    const Exponents& li = g[i].leading_monomial();
    const Exponents& lj = g[j].leading_monomial();
    if (coprime(li, lj)) continue;
    Exponents l = monomial_lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(g[k].leading_monomial(), l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;
    MultiPoly<F> r = normal_form(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    if (g.back().is_constant()) {
      MultiPoly<F> unit = g.back();
      g.assign(1, unit);
      queue.clear();
      pending.clear();
      break;
    }
    for (std::size_t k = 0; k + 1 < g.size(); ++k) add_pair(k, g.size() - 1);
  }

  // minimal basis: drop elements whose leading monomial is divisible by another's
  std::vector<MultiPoly<F>> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(g[k].leading_monomial(), g[i].leading_monomial()) &&
          (g[k].leading_monomial() != g[i].leading_monomial() || k < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // interreduce tails
  std::vector<MultiPoly<F>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly<F>> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    const auto& f = minimal[i];
    MultiPoly<F> lead = MultiPoly<F>::monomial(ring, f.leading_monomial(), f.leading_coefficient());
    reduced.push_back((lead + normal_form(f - lead, others)).monic());
  }
  const auto order = ring->order;
  std::sort(reduced.begin(), reduced.end(), [order](const MultiPoly<F>& a, const MultiPoly<F>& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  return GroebnerBasis<F>(ring, std::move(reduced), ideal.generators, processed);
}

struct EmptinessCertificate {
  bool empty = false;
  // exponent k with v^k a leading monomial of the basis, per projective variable
  std::map<std::string, unsigned> pure_powers;
  std::vector<std::string> missing;
};

/// Decides whether the homogeneous ideal has no common zero in the
/// projective space on vars: each variable needs a pure power among the
/// Groebner leading monomials.
template <FieldElement F>
EmptinessCertificate is_projectively_empty(const GroebnerBasis<F>& gb, const std::vector<std::string>& vars) {
  const auto& table = gb.ring()->vars;
  EmptinessCertificate cert;
  for (const auto& name : vars) {
    std::size_t v = table.index(name);
    unsigned best = 0;
    for (const auto& g : gb.basis()) {
      const Exponents& lm = g.leading_monomial();
      bool pure = true;
      for (std::size_t k = 0; k < lm.size(); ++k)
        if (k != v && lm[k] != 0) pure = false;
      if (pure && (best == 0 || lm[v] < best)) best = lm[v];
    }
    if (best > 0 || gb.is_unit_ideal())
      cert.pure_powers[name] = best;
    else
      cert.missing.push_back(name);
  }
  cert.empty = cert.missing.empty();
  return cert;
}

template <FieldElement F>
EmptinessCertificate is_projectively_empty(const IdealBasis<F>& ideal, const std::vector<std::string>& vars,
                                           const GroebnerOptions& opts = {}) {
  for (const auto& f : ideal.generators)
    if (!is_homogeneous_in(f, vars).homogeneous)
      throw NotHomogeneous("generator " + f.to_string() + " is not homogeneous in the projective variables");
  return is_projectively_empty(groebner(ideal, opts), vars);
}

}  // namespace heisurf
