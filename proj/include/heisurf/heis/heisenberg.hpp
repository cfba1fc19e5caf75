#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heisurf/errors.hpp"
#include "heisurf/exactmath/cyclotomic.hpp"
#include "heisurf/exactmath/matrix.hpp"

namespace heisurf {

inline constexpr unsigned kDefaultHeisBound = 12;

/// H = Z/d1 x Z/d2 with d1 | d2. V = C^H has basis x_a, a = (a1, a2), listed
/// lexicographically: index(a) = a1*d2 + a2.
class HeisType {
 public:
  HeisType(unsigned d1, unsigned d2, unsigned bound = kDefaultHeisBound) : d1_(d1), d2_(d2) {
    if (d1 == 0 || d2 == 0 || d2 % d1 != 0)
      throw Error("Heisenberg type needs positive d1 dividing d2, got (" + std::to_string(d1) + "," +
                  std::to_string(d2) + ")");
    if (d1 * d2 > bound) throw BoundExceeded("Pfaffian " + std::to_string(d1 * d2) + " exceeds bound");
  }

  unsigned d1() const { return d1_; }
  unsigned d2() const { return d2_; }
  unsigned delta() const { return d1_ * d2_; }
  /// exponent of H; scalars live in mu_n
  unsigned n() const { return d2_; }
  Cyclotomic::Field field() const { return Cyclotomic::Field{n()}; }

  std::size_t index(unsigned a1, unsigned a2) const { return std::size_t{a1 % d1_} * d2_ + a2 % d2_; }
  std::pair<unsigned, unsigned> coords(std::size_t idx) const {
    return {static_cast<unsigned>(idx / d2_), static_cast<unsigned>(idx % d2_)};
  }

  /// <a, b> with zeta_n^<a,b> the standard pairing of H with itself.
  unsigned pairing(unsigned a1, unsigned a2, unsigned b1, unsigned b2) const {
    unsigned long long v = static_cast<unsigned long long>(n() / d1_) * (a1 % d1_) * (b1 % d1_) +
                           static_cast<unsigned long long>(a2 % d2_) * (b2 % d2_);
    return static_cast<unsigned>(v % n());
  }

  std::string to_string() const { return "(" + std::to_string(d1_) + "," + std::to_string(d2_) + ")"; }
  friend bool operator==(const HeisType&, const HeisType&) = default;

 private:
  unsigned d1_, d2_;
};

/// zeta_n^k T_h X_b, acting on V by x_a -> zeta_n^{k + <a,b>} x_{a-h}.
struct HeisElement {
  unsigned h1 = 0, h2 = 0;  // translation
  unsigned b1 = 0, b2 = 0;  // character, via the pairing
  unsigned k = 0;           // central exponent

  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

inline HeisElement normalize(const HeisType& t, HeisElement g) {
  g.h1 %= t.d1();
  g.b1 %= t.d1();
  g.h2 %= t.d2();
  g.b2 %= t.d2();
  g.k %= t.n();
  return g;
}

/// Group law of the central extension:
/// (h, b, k)(h', b', k') = (h + h', b + b', k + k' - <h', b>).
inline HeisElement compose(const HeisType& t, const HeisElement& x, const HeisElement& y) {
  HeisElement r;
  r.h1 = x.h1 + y.h1;
  r.h2 = x.h2 + y.h2;
  r.b1 = x.b1 + y.b1;
  r.b2 = x.b2 + y.b2;
  r.k = x.k + y.k + t.n() - t.pairing(y.h1, y.h2, x.b1, x.b2);
  return normalize(t, r);
}

inline HeisElement inverse(const HeisType& t, const HeisElement& g) {
  HeisElement r;
  r.h1 = t.d1() - g.h1 % t.d1();
  r.h2 = t.d2() - g.h2 % t.d2();
  r.b1 = t.d1() - g.b1 % t.d1();
  r.b2 = t.d2() - g.b2 % t.d2();
  r.k = 2 * t.n() - g.k % t.n() - t.pairing(g.h1, g.h2, g.b1, g.b2);
  return normalize(t, r);
}

inline HeisElement power(const HeisType& t, const HeisElement& g, unsigned e) {
  HeisElement r;
  for (unsigned i = 0; i < e; ++i) r = compose(t, r, g);
  return r;
}

inline HeisElement central(const HeisType& t, unsigned k) { return normalize(t, HeisElement{0, 0, 0, 0, k}); }

/// Named generators: translation t_i and character chi_i per nontrivial cyclic
/// factor ("t", "chi" when d1 = 1), plus the central generator "z".
inline std::vector<std::pair<std::string, HeisElement>> heis_generators(const HeisType& t) {
  std::vector<std::pair<std::string, HeisElement>> g;
  if (t.d1() > 1) {
    g.push_back({"t1", {1, 0, 0, 0, 0}});
    g.push_back({"chi1", {0, 0, 1, 0, 0}});
    g.push_back({"t2", {0, 1, 0, 0, 0}});
    g.push_back({"chi2", {0, 0, 0, 1, 0}});
  } else if (t.d2() > 1) {
    g.push_back({"t", {0, 1, 0, 0, 0}});
    g.push_back({"chi", {0, 0, 0, 1, 0}});
  }
  return g;
}

/// Also accepts g1, g2 for cyclic H: g1 = chi, g2 = t when delta = 2, otherwise
/// g1 = t, g2 = chi.
inline HeisElement heis_generator(const HeisType& t, const std::string& name) {
  if (name == "z") return central(t, 1);
  if (name == "1" || name == "id") return {};
  if ((name == "g1" || name == "g2") && t.d1() == 1 && t.d2() > 1) {
    bool first_is_chi = t.d2() == 2;
    return heis_generator(t, (name == "g1") == first_is_chi ? "chi" : "t");
  }
  for (const auto& [n, g] : heis_generators(t))
    if (n == name) return g;
  throw Error("unknown generator '" + name + "' for type " + t.to_string());
}

/// Every element of Heis(H), center included.
inline std::vector<HeisElement> heis_elements(const HeisType& t) {
  std::vector<HeisElement> out;
  for (unsigned h1 = 0; h1 < t.d1(); ++h1)
    for (unsigned h2 = 0; h2 < t.d2(); ++h2)
      for (unsigned b1 = 0; b1 < t.d1(); ++b1)
        for (unsigned b2 = 0; b2 < t.d2(); ++b2)
          for (unsigned k = 0; k < t.n(); ++k) out.push_back({h1, h2, b1, b2, k});
  return out;
}

using RepMatrix = ExactMatrix<Cyclotomic>;

/// Schroedinger representation on V: column a holds the image of x_a.
inline RepMatrix rho(const HeisType& t, const HeisElement& g) {
  std::size_t dim = t.delta();
  RepMatrix m(dim, dim, Cyclotomic::zero(t.field()));
  for (std::size_t col = 0; col < dim; ++col) {
    auto [a1, a2] = t.coords(col);
    std::size_t row = t.index(a1 + t.d1() - g.h1 % t.d1(), a2 + t.d2() - g.h2 % t.d2());
    m(row, col) = Cyclotomic::zeta(t.n(), static_cast<long long>(g.k) + t.pairing(a1, a2, g.b1, g.b2));
  }
  return m;
}

/// Contragredient action on V^vee: inverse transpose.
inline RepMatrix rho_dual(const HeisType& t, const HeisElement& g) { return rho(t, inverse(t, g)).transpose(); }

struct SchrodingerRep {
  HeisType type;
  std::vector<std::pair<std::string, RepMatrix>> generators;  // includes "z"
};

inline SchrodingerRep schrodinger_rep(const HeisType& t) {
  SchrodingerRep r{t, {}};
  for (const auto& [name, g] : heis_generators(t)) r.generators.emplace_back(name, rho(t, g));
  r.generators.emplace_back("z", rho(t, central(t, 1)));
  return r;
}

inline SchrodingerRep dual_rep(const HeisType& t) {
  SchrodingerRep r{t, {}};
  for (const auto& [name, g] : heis_generators(t)) r.generators.emplace_back(name, rho_dual(t, g));
  r.generators.emplace_back("z", rho_dual(t, central(t, 1)));
  return r;
}

inline RepMatrix scalar_matrix(std::size_t dim, const Cyclotomic& c) {
  RepMatrix m(dim, dim, zero_like(c));
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = c;
  return m;
}

/// Exactly one nonzero entry per row and column, each a root of unity.
inline bool is_monomial_matrix(const RepMatrix& m, unsigned n) {
  if (m.rows() != m.cols()) return false;
  std::vector<std::size_t> per_col(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t nonzero = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      ++nonzero;
      ++per_col[c];
      bool unit_root = false;
      for (unsigned k = 0; k < n && !unit_root; ++k) unit_root = m(r, c) == Cyclotomic::zeta(n, k);
      if (!unit_root) return false;
    }
    if (nonzero != 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](std::size_t c) { return c == 1; });
}

struct RelationCheck {
  bool pass = true;
  std::vector<std::string> lines;  // one per verified relation
  std::vector<std::string> failures;
};

/// Commutators rho(t_i) rho(chi_j) rho(t_i)^-1 rho(chi_j)^-1 = chi_j(t_i) Id for
/// all generator pairs, translations and characters commute among themselves,
/// each generator has the expected order, and z acts by zeta_n.
inline RelationCheck verify_group_relations(const HeisType& t) {
  RelationCheck out;
  const std::size_t dim = t.delta();
  auto gens = heis_generators(t);
  auto record = [&](bool ok, const std::string& line) {
    (ok ? out.lines : out.failures).push_back(line);
    out.pass = out.pass && ok;
  };
  auto mat = [&](const HeisElement& g) { return rho(t, g); };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto& [na, a] = gens[i];
      const auto& [nb, b] = gens[j];
      RepMatrix comm = mat(a) * mat(b) * mat(inverse(t, a)) * mat(inverse(t, b));
      unsigned e = (t.n() - t.pairing(b.h1, b.h2, a.b1, a.b2) + t.pairing(a.h1, a.h2, b.b1, b.b2)) % t.n();
      Cyclotomic expected = Cyclotomic::zeta(t.n(), e);
      record(comm == scalar_matrix(dim, expected),
             "[" + na + "," + nb + "] = " + expected.to_string() + "*Id");
    }
  for (const auto& [na, a] : gens) {
    unsigned order = (na == "t1" || na == "chi1") ? t.d1() : t.d2();
    RepMatrix p = RepMatrix::identity(dim, Cyclotomic::one(t.field()));
    for (unsigned i = 0; i < order; ++i) p = p * mat(a);
    record(p == RepMatrix::identity(dim, Cyclotomic::one(t.field())), na + "^" + std::to_string(order) + " = Id");
    record(is_monomial_matrix(mat(a), t.n()), na + " is monomial");
  }
  record(mat(central(t, 1)) == scalar_matrix(dim, Cyclotomic::zeta(t.n())), "z = zeta(" + std::to_string(t.n()) + ")*Id");
  // the representation respects the group law on all generator products
  for (const auto& [na, a] : gens)
    for (const auto& [nb, b] : gens)
      record(mat(compose(t, a, b)) == mat(a) * mat(b), "rho(" + na + "*" + nb + ") = rho(" + na + ")rho(" + nb + ")");
  return out;
}

/// The involution x_a -> x_{-a}; it normalizes Heis(H), sending (h, b, k) to
/// (-h, -b, k).
inline RepMatrix iota_matrix(const HeisType& t) {
  std::size_t dim = t.delta();
  RepMatrix m(dim, dim, Cyclotomic::zero(t.field()));
  for (std::size_t col = 0; col < dim; ++col) {
    auto [a1, a2] = t.coords(col);
    m(t.index(t.d1() - a1, t.d2() - a2), col) = Cyclotomic::one(t.field());
  }
  return m;
}

inline HeisElement iota_conjugate(const HeisType& t, const HeisElement& g) {
  return normalize(t, HeisElement{t.d1() - g.h1 % t.d1(), t.d2() - g.h2 % t.d2(), t.d1() - g.b1 % t.d1(),
                                  t.d2() - g.b2 % t.d2(), g.k});
}

}  // namespace heisurf
