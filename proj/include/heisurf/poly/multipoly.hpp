#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/rational.hpp"
#include "heisurf/exactmath/ring.hpp"
#include "heisurf/poly/coeff_format.hpp"
#include "heisurf/poly/ring.hpp"

namespace heisurf {

/// Sparse polynomial over the field F. Terms are kept sorted in descending
/// order for the ring's monomial order, with no zero coefficients.
template <FieldElement F>
class MultiPoly {
 public:
  using Term = std::pair<Exponents, F>;

  MultiPoly() = default;
  explicit MultiPoly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr<F> ring, const F& c) {
    MultiPoly p(ring);
    if (!c.is_zero()) p.terms_.emplace_back(Exponents(p.nvars(), 0), c);
    return p;
  }
  static MultiPoly constant(RingPtr<F> ring, const Rational& c)
    requires(!std::same_as<F, Rational>)
  {
    F v = F::from_rational(ring->field, c);
    return constant(std::move(ring), v);
  }
  static MultiPoly variable(RingPtr<F> ring, std::size_t idx, unsigned power = 1) {
    if (idx >= ring->vars.size()) throw UnknownVariable("#" + std::to_string(idx));
    Exponents e(ring->vars.size(), 0);
    e[idx] = power;
    F one = F::one(ring->field);
    return monomial(std::move(ring), std::move(e), one);
  }
  static MultiPoly variable(RingPtr<F> ring, std::string_view name, unsigned power = 1) {
    std::size_t idx = ring->vars.index(name);
    return variable(std::move(ring), idx, power);
  }
  static MultiPoly monomial(RingPtr<F> ring, Exponents e, const F& c) {
    MultiPoly p(std::move(ring));
    if (e.size() != p.nvars()) throw DimensionMismatch("exponent vector length");
    if (!c.is_zero()) p.terms_.emplace_back(std::move(e), c);
    return p;
  }
  /// Collects like terms and sorts; input may contain repeats and zeros.
  static MultiPoly from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    MultiPoly p(std::move(ring));
    const auto order = p.ring_->order;
    std::sort(terms.begin(), terms.end(),
              [order](const Term& a, const Term& b) { return compare_monomials(a.first, b.first, order) > 0; });
    for (auto& t : terms) {
      if (t.first.size() != p.nvars()) throw DimensionMismatch("exponent vector length");
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = p.terms_.back().second + t.second;
        if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t nvars() const { return ring_ ? ring_->vars.size() : 0; }
  typename F::Field field() const { return ring_->field; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].first) == 0); }
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second == F::one(ring_->field); }
  F constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.empty() ? F::zero(ring_->field) : terms_[0].second;
  }

  const Exponents& leading_monomial() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front().first;
  }
  const F& leading_coefficient() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return terms_.front().second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, degree_of(t.first));
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.first.at(var));
    return d;
  }
  unsigned degree_in(std::string_view name) const { return degree_in(ring_->vars.index(name)); }

  F coefficient(const Exponents& e) const {
    for (const auto& t : terms_)
      if (t.first == e) return t.second;
    return F::zero(ring_->field);
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    const auto order = a.ring_->order;
    auto cmp = [order](const Exponents& x, const Exponents& y) { return compare_monomials(x, y, order) > 0; };
    std::map<Exponents, F, decltype(cmp)> acc(cmp);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        auto it = acc.find(e);
        if (it == acc.end())
          acc.emplace(e, ca * cb);
        else
          it->second = it->second + ca * cb;
      }
    MultiPoly r(a.ring_);
    r.terms_.reserve(acc.size());
    for (auto& [ex, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(ex, c);
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const F& c) const {
    if (c.is_zero()) return MultiPoly(ring_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }
  MultiPoly scaled(const Rational& c) const
    requires(!std::same_as<F, Rational>)
  {
    return scaled(F::from_rational(ring_->field, c));
  }

  /// this * c * x^e; monomial multiplication preserves the term order.
  MultiPoly mul_term(const Exponents& e, const F& c) const {
    if (c.is_zero()) return MultiPoly(ring_);
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [ex, cx] : terms_) {
      Exponents s = ex;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += e[i];
      r.terms_.emplace_back(std::move(s), cx * c);
    }
    return r;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.empty() && b.terms_.empty()) return true;
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  /// Canonical text: grevlex-descending terms, variables in ring order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    if (ring_->order != MonomialOrder::grevlex)
      std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        return compare_monomials(a->first, b->first, MonomialOrder::grevlex) > 0;
      });
    std::string out;
    for (const Term* t : order) {
      CoeffText ct = format_coefficient(t->second);
      if (out.empty())
        out += ct.negative ? "-" : "";
      else
        out += ct.negative ? " - " : " + ";
      std::string mono = monomial_text(t->first);
      if (mono.empty())
        out += ct.magnitude.empty() ? "1" : ct.magnitude;
      else if (ct.magnitude.empty())
        out += mono;
      else
        out += ct.magnitude + "*" + mono;
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

  static unsigned degree_of(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

 private:
  void check(const MultiPoly& o) const {
    if (!same_ring(ring_, o.ring_)) throw FieldMismatch("polynomials belong to different rings");
  }

  std::string monomial_text(const Exponents& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->vars.name(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    a.check(b);
    const auto order = a.ring_->order;
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c = i == a.terms_.size()   ? -1
              : j == b.terms_.size() ? 1
                                     : compare_monomials(a.terms_[i].first, b.terms_[j].first, order);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
      } else {
        F s = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!s.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <FieldElement F>
MultiPoly<F> pow(MultiPoly<F> base, unsigned e) {
  MultiPoly<F> r = MultiPoly<F>::constant(base.ring(), F::one(base.field()));
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

// ring-element protocol used by ExactMatrix
template <FieldElement F>
MultiPoly<F> zero_like(const MultiPoly<F>& x) { return MultiPoly<F>(x.ring()); }
template <FieldElement F>
MultiPoly<F> one_like(const MultiPoly<F>& x) { return MultiPoly<F>::constant(x.ring(), F::one(x.field())); }
template <FieldElement F>
bool is_zero(const MultiPoly<F>& x) { return x.is_zero(); }

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// a / b when b divides a exactly; throws ExactDivisionFailed otherwise.
template <FieldElement F>
MultiPoly<F> exact_divide(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.is_constant()) return a.scaled(b.constant_value().inverse());
  std::vector<typename MultiPoly<F>::Term> q;
  MultiPoly<F> r = a;
  const Exponents& lb = b.leading_monomial();
  F inv = b.leading_coefficient().inverse();
  Exponents d(lb.size());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_monomial();
    if (!divides(lb, lr)) throw ExactDivisionFailed("divisor does not divide dividend exactly");
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = lr[i] - lb[i];
    F c = r.leading_coefficient() * inv;
    r = r - b.mul_term(d, c);
    q.emplace_back(d, c);
  }
  return MultiPoly<F>::from_terms(a.ring(), std::move(q));
}

template <FieldElement F>
MultiPoly<F> partial_derivative(const MultiPoly<F>& f, std::size_t var) {
  if (var >= f.nvars()) throw UnknownVariable("#" + std::to_string(var));
  std::vector<typename MultiPoly<F>::Term> out;
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.emplace_back(std::move(d), c * F::from_rational(f.field(), Rational(static_cast<long>(e[var]))));
  }
  return MultiPoly<F>::from_terms(f.ring(), std::move(out));
}
template <FieldElement F>
MultiPoly<F> partial_derivative(const MultiPoly<F>& f, std::string_view var) {
  return partial_derivative(f, f.ring()->vars.index(var));
}

/// Evaluates f with variable i replaced by values[i] in any commutative ring T.
/// coef maps field coefficients into T.
template <class T, FieldElement F, class CoefFn>
T eval_generic(const MultiPoly<F>& f, const std::vector<T>& values, CoefFn&& coef, const T& zero) {
  if (values.size() != f.nvars()) throw DimensionMismatch("one value per ring variable required");
  std::vector<std::vector<T>> powers(values.size());
  for (std::size_t v = 0; v < values.size(); ++v) {
    unsigned d = f.degree_in(v);
    if (d == 0) continue;
    powers[v].reserve(d + 1);
    powers[v].push_back(values[v]);
    for (unsigned k = 2; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v]);
  }
  T acc = zero;
  for (const auto& [e, c] : f.terms()) {
    T term = coef(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) term = term * powers[v][e[v] - 1];
    acc = acc + term;
  }
  return acc;
}

/// Simultaneous substitution of polynomials (same ring) for named variables.
template <FieldElement F>
MultiPoly<F> substitute(const MultiPoly<F>& f, const std::map<std::string, MultiPoly<F>>& bindings) {
  const auto& ring = f.ring();
  std::vector<MultiPoly<F>> values;
  values.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) values.push_back(MultiPoly<F>::variable(ring, i));
  for (const auto& [name, value] : bindings) {
    std::size_t i = ring->vars.index(name);
    if (!value.is_zero() && !same_ring(value.ring(), ring))
      throw FieldMismatch("substituted value lives in a different ring");
    values[i] = value.is_zero() ? MultiPoly<F>(ring) : value;
  }
  return eval_generic(f, values, [&](const F& c) { return MultiPoly<F>::constant(ring, c); }, MultiPoly<F>(ring));
}

template <FieldElement F>
MultiPoly<F> substitute(const MultiPoly<F>& f, const std::string& var, const MultiPoly<F>& value) {
  return substitute(f, std::map<std::string, MultiPoly<F>>{{var, value}});
}

/// Value of f at a point; only variables that occur in f need a binding.
template <FieldElement F>
F evaluate(const MultiPoly<F>& f, const std::map<std::string, F>& point) {
  const auto& vars = f.ring()->vars;
  for (const auto& [name, v] : point) {
    vars.index(name);
    if (!(v.field() == f.field())) throw FieldMismatch("point coordinate in a different field");
  }
  std::vector<F> values(f.nvars(), F::zero(f.field()));
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto it = point.find(vars.name(i));
    if (it != point.end())
      values[i] = it->second;
    else if (f.degree_in(i) > 0)
      throw UnboundVariable(vars.name(i));
  }
  return eval_generic(f, values, [](const F& c) { return c; }, F::zero(f.field()));
}

struct Homogeneity {
  bool homogeneous = true;
  long degree = 0;
};

/// Weighted homogeneity; the zero polynomial counts as homogeneous of degree 0.
template <FieldElement F>
Homogeneity is_homogeneous(const MultiPoly<F>& f, const std::vector<long>& weights) {
  if (weights.size() != f.nvars()) throw DimensionMismatch("one weight per ring variable required");
  Homogeneity h;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * static_cast<long>(e[i]);
    if (first) {
      h.degree = d;
      first = false;
    } else if (d != h.degree) {
      return {false, 0};
    }
  }
  return h;
}

/// Weights by name; unnamed variables get weight 0.
template <FieldElement F>
Homogeneity is_homogeneous(const MultiPoly<F>& f, const std::map<std::string, long>& weights) {
  std::vector<long> w(f.nvars(), 0);
  for (const auto& [name, x] : weights) w[f.ring()->vars.index(name)] = x;
  return is_homogeneous(f, w);
}

/// Standard-grading homogeneity in the listed variables only.
template <FieldElement F>
Homogeneity is_homogeneous_in(const MultiPoly<F>& f, const std::vector<std::string>& vars) {
  std::map<std::string, long> w;
  for (const auto& v : vars) w[v] = 1;
  return is_homogeneous(f, w);
}

/// f as a polynomial in var: result[k] is the coefficient of var^k.
template <FieldElement F>
std::vector<MultiPoly<F>> coefficients_in(const MultiPoly<F>& f, std::size_t var) {
  unsigned d = f.degree_in(var);
  std::vector<std::vector<typename MultiPoly<F>::Term>> parts(d + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponents r = e;
    r[var] = 0;
    parts[e[var]].emplace_back(std::move(r), c);
  }
  std::vector<MultiPoly<F>> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(MultiPoly<F>::from_terms(f.ring(), std::move(p)));
  return out;
}
template <FieldElement F>
std::vector<MultiPoly<F>> coefficients_in(const MultiPoly<F>& f, std::string_view var) {
  return coefficients_in(f, f.ring()->vars.index(var));
}

/// Moves f into another ring, matching variables by name and mapping
/// coefficients with coef. Variables of f absent from the target must not occur.
template <FieldElement G, FieldElement F, class CoefFn>
MultiPoly<G> change_ring(const MultiPoly<F>& f, const RingPtr<G>& target, CoefFn&& coef) {
  const auto& src = f.ring()->vars;
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->vars.find(src.name(i));
  std::vector<typename MultiPoly<G>::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    Exponents t(target->vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) throw UnknownVariable(src.name(i));
      t[*map[i]] = e[i];
    }
    out.emplace_back(std::move(t), coef(c));
  }
  return MultiPoly<G>::from_terms(target, std::move(out));
}

/// Rational polynomial into any ring whose field admits from_rational.
template <FieldElement G>
MultiPoly<G> from_rational_poly(const MultiPoly<Rational>& f, const RingPtr<G>& target) {
  return change_ring(f, target, [&](const Rational& c) { return G::from_rational(target->field, c); });
}

/// Same ring data, different monomial order (terms re-sorted).
template <FieldElement F>
MultiPoly<F> reorder(const MultiPoly<F>& f, MonomialOrder order) {
  auto r = with_order(f.ring(), order);
  if (r == f.ring()) return f;
  return MultiPoly<F>::from_terms(r, f.terms());
}

}  // namespace heisurf
