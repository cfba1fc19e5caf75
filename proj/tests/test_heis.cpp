#include <gtest/gtest.h>

#include <random>

#include "heisurf/heis/heisenberg.hpp"
#include "heisurf/heis/module.hpp"
#include "heisurf/poly/parse.hpp"

using namespace heisurf;
using CPoly = MultiPoly<Cyclotomic>;

namespace {

std::vector<HeisType> small_types(unsigned max_delta) {
  std::vector<HeisType> out;
  for (unsigned d1 = 1; d1 <= max_delta; ++d1)
    for (unsigned d2 = d1; d1 * d2 <= max_delta; d2 += d1) out.emplace_back(d1, d2);
  return out;
}

HeisElement random_element(const HeisType& t, std::mt19937& rng) {
  auto u = [&](unsigned m) { return std::uniform_int_distribution<unsigned>(0, m - 1)(rng); };
  return {u(t.d1()), u(t.d2()), u(t.d1()), u(t.d2()), u(t.n())};
}

Cyclotomic z(unsigned n, long long k = 1) { return Cyclotomic::zeta(n, k); }

RepMatrix diag(const std::vector<Cyclotomic>& d) {
  RepMatrix m(d.size(), d.size(), zero_like(d.front()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::size_t span_rank(const GradedModule& m, const std::vector<CPoly>& polys) {
  if (polys.empty()) return 0;
  std::vector<Cyclotomic> flat;
  for (const auto& p : polys) {
    auto c = m.coordinates(p);
    flat.insert(flat.end(), c.begin(), c.end());
  }
  return rank(ExactMatrix<Cyclotomic>(polys.size(), m.dim(), std::move(flat)));
}

// Brute-force isotypic projector (1/|Heis|) sum_g chi(g)^-1 rho(g).
RepMatrix projector(const HeisType& t, const GradedModule& m, const HeisCharacter& chi) {
  RepMatrix p(m.dim(), m.dim(), Cyclotomic::zero(t.field()));
  auto elems = heis_elements(t);
  for (const auto& g : elems) p = p + induced_action(t, m, g).scaled(character_value(t, m, chi, g).inverse());
  return p.scaled(Cyclotomic(t.field(), Rational(1, static_cast<long>(elems.size()))));
}

}  // namespace

TEST(HeisType, ValidatesDivisibilityAndBound) {
  EXPECT_THROW(HeisType(2, 3), Error);
  EXPECT_THROW(HeisType(0, 2), Error);
  EXPECT_THROW(HeisType(1, 13), BoundExceeded);
  EXPECT_THROW(HeisType(4, 4), BoundExceeded);
  EXPECT_NO_THROW(HeisType(4, 4, 16));
  HeisType t(2, 4);
  EXPECT_EQ(t.delta(), 8u);
  EXPECT_EQ(t.n(), 4u);
  for (std::size_t i = 0; i < t.delta(); ++i) {
    auto [a1, a2] = t.coords(i);
    EXPECT_EQ(t.index(a1, a2), i);
  }
}

TEST(HeisGroup, LawIsAssociativeWithInverses) {
  std::mt19937 rng(7);
  for (const auto& t : small_types(8))
    for (int trial = 0; trial < 50; ++trial) {
      auto a = random_element(t, rng), b = random_element(t, rng), c = random_element(t, rng);
      EXPECT_EQ(compose(t, compose(t, a, b), c), compose(t, a, compose(t, b, c)));
      EXPECT_EQ(compose(t, a, inverse(t, a)), HeisElement{});
      EXPECT_EQ(compose(t, inverse(t, a), a), HeisElement{});
    }
}

TEST(Schrodinger, TrivialType) {
  HeisType t(1, 1);
  EXPECT_TRUE(heis_generators(t).empty());
  auto r = schrodinger_rep(t);
  ASSERT_EQ(r.generators.size(), 1u);
  EXPECT_EQ(r.generators[0].second, RepMatrix::identity(1, Cyclotomic::one(t.field())));
}

TEST(Schrodinger, DeltaTwoMatchesPaperMatrices) {
  HeisType t(1, 2);
  RepMatrix g1 = rho(t, heis_generator(t, "g1")), g2 = rho(t, heis_generator(t, "g2"));
  Cyclotomic one = Cyclotomic::one(t.field()), zero = Cyclotomic::zero(t.field());
  EXPECT_EQ(g1, diag({one, -one}));
  EXPECT_EQ(g2, RepMatrix(2, 2, std::vector<Cyclotomic>{zero, one, one, zero}));
  EXPECT_EQ(g1 * g2 * g1 * g2, scalar_matrix(2, -one));
  // W and V are the same representation
  for (const auto& [name, g] : heis_generators(t)) EXPECT_EQ(rho_dual(t, g), rho(t, g)) << name;
}

TEST(Schrodinger, DeltaThreeMatchesPaperMatrices) {
  HeisType t(1, 3);
  HeisElement g1 = heis_generator(t, "g1"), g2 = heis_generator(t, "g2");
  Cyclotomic one = Cyclotomic::one(t.field());
  EXPECT_EQ(rho(t, g2), diag({one, z(3), z(3, 2)}));
  EXPECT_EQ(rho_dual(t, g2), diag({one, z(3, 2), z(3)}));
  EXPECT_TRUE(is_monomial_matrix(rho(t, g1), 3));
  EXPECT_EQ(rho(t, g1) * rho(t, g2) * rho(t, inverse(t, g1)) * rho(t, inverse(t, g2)), scalar_matrix(3, z(3)));
  // the translation cycles y1 -> y3 -> y2 -> y1
  auto ring = make_ring<Cyclotomic>({"y1", "y2", "y3"}, t.field());
  EXPECT_EQ(act(t, g1, CPoly::variable(ring, "y1")), CPoly::variable(ring, "y3"));
  EXPECT_EQ(act(t, g1, CPoly::variable(ring, "y3")), CPoly::variable(ring, "y2"));
  EXPECT_EQ(act(t, g1, CPoly::variable(ring, "y2")), CPoly::variable(ring, "y1"));
}

TEST(Schrodinger, DualIsInverseTranspose) {
  std::mt19937 rng(3);
  for (const auto& t : small_types(8)) {
    auto rep = schrodinger_rep(t), dual = dual_rep(t);
    ASSERT_EQ(rep.generators.size(), dual.generators.size());
    for (std::size_t i = 0; i < rep.generators.size(); ++i)
      EXPECT_EQ(dual.generators[i].second.transpose() * rep.generators[i].second,
                RepMatrix::identity(t.delta(), Cyclotomic::one(t.field())));
    EXPECT_EQ(rho_dual(t, HeisElement{}), RepMatrix::identity(t.delta(), Cyclotomic::one(t.field())));
  }
}

TEST(Schrodinger, IsHomomorphismOnV) {
  std::mt19937 rng(11);
  for (const auto& t : small_types(9))
    for (int trial = 0; trial < 30; ++trial) {
      auto a = random_element(t, rng), b = random_element(t, rng);
      EXPECT_EQ(rho(t, compose(t, a, b)), rho(t, a) * rho(t, b)) << t.to_string();
      EXPECT_TRUE(is_monomial_matrix(rho(t, a), t.n()));
    }
}

TEST(Relations, AllSmallTypesPass) {
  for (const auto& t : small_types(12)) {
    auto r = verify_group_relations(t);
    EXPECT_TRUE(r.pass) << t.to_string() << (r.failures.empty() ? "" : ": " + r.failures.front());
  }
}

TEST(Relations, ExpectedCommutators) {
  auto has = [](const RelationCheck& r, const std::string& line) {
    return std::find(r.lines.begin(), r.lines.end(), line) != r.lines.end();
  };
  auto r12 = verify_group_relations(HeisType(1, 2));
  EXPECT_TRUE(has(r12, "[t,chi] = -1*Id"));
  auto r13 = verify_group_relations(HeisType(1, 3));
  EXPECT_TRUE(has(r13, "[t,chi] = zeta(3)*Id"));
  auto r22 = verify_group_relations(HeisType(2, 2));
  EXPECT_TRUE(has(r22, "[t1,chi1] = -1*Id"));
  EXPECT_TRUE(has(r22, "[t2,chi2] = -1*Id"));
  EXPECT_TRUE(has(r22, "[t1,chi2] = 1*Id"));
}

TEST(GradedModule, DimensionAndOrder) {
  auto binom = [](unsigned n, unsigned k) {
    unsigned long r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (const auto& t : small_types(6))
    for (unsigned d = 0; d <= 3; ++d)
      for (unsigned e = 0; e <= 2; ++e) {
        GradedModule m(t, d, e);
        EXPECT_EQ(m.dim(), binom(d + t.delta() - 1, t.delta() - 1) * binom(e + t.delta() - 1, t.delta() - 1));
      }
  GradedModule m(HeisType(1, 2), 2, 0);
  ASSERT_EQ(m.dim(), 3u);
  EXPECT_EQ(m.basis_element(0).to_string(), "y1^2");
  EXPECT_EQ(m.basis_element(1).to_string(), "y1*y2");
  EXPECT_EQ(m.basis_element(2).to_string(), "y2^2");
}

TEST(InducedAction, CenterActsByZetaPowerEMinusD) {
  HeisType t2(1, 2);
  GradedModule m31(t2, 3, 1);
  EXPECT_EQ(induced_action(t2, m31, central(t2, 1)), RepMatrix::identity(m31.dim(), Cyclotomic::one(t2.field())));
  GradedModule m00(t2, 0, 0);
  EXPECT_EQ(induced_action(t2, m00, heis_generator(t2, "t")), RepMatrix::identity(1, Cyclotomic::one(t2.field())));
  HeisType t3(1, 3);
  GradedModule m20(t3, 2, 0);
  RepMatrix c = induced_action(t3, m20, central(t3, 1));
  EXPECT_EQ(c, scalar_matrix(m20.dim(), z(3, -2)));
  EXPECT_NE(c, RepMatrix::identity(m20.dim(), Cyclotomic::one(t3.field())));
  for (const auto& t : small_types(6))
    for (auto [d, e] : {std::pair{1u, 0u}, {2u, 1u}, {0u, 2u}}) {
      GradedModule m(t, d, e);
      EXPECT_EQ(induced_action(t, m, central(t, 1)),
                scalar_matrix(m.dim(), z(t.n(), static_cast<long long>(e) - static_cast<long long>(d))));
    }
}

TEST(InducedAction, IsHomomorphism) {
  std::mt19937 rng(2024);
  std::vector<GradedModule> modules{GradedModule(HeisType(1, 2), 3, 1), GradedModule(HeisType(1, 3), 3, 0),
                                    GradedModule(HeisType(1, 3), 2, 1), GradedModule(HeisType(1, 4), 2, 0),
                                    GradedModule(HeisType(2, 2), 1, 1)};
  for (const auto& m : modules) {
    const auto& t = m.type();
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_element(t, rng), b = random_element(t, rng);
      EXPECT_EQ(induced_action(t, m, compose(t, a, b)), induced_action(t, m, a) * induced_action(t, m, b));
    }
  }
}

TEST(Eigenspace, ChppTrivialCharacter) {
  HeisType t(1, 2);
  GradedModule m(t, 3, 1);
  auto basis = eigenspace_basis(t, m, trivial_character(t));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], parse_poly("x1*y1^3 + x2*y2^3", m.ring()));
  EXPECT_EQ(basis[1], parse_poly("x1*y1*y2^2 + x2*y1^2*y2", m.ring()));
  // projection oracle has the same image
  RepMatrix p = projector(t, m, trivial_character(t));
  EXPECT_EQ(rank(p), 2u);
  std::vector<CPoly> image;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    std::vector<Cyclotomic> col;
    for (std::size_t i = 0; i < m.dim(); ++i) col.push_back(p(i, j));
    image.push_back(m.element(col));
  }
  image.insert(image.end(), basis.begin(), basis.end());
  EXPECT_EQ(span_rank(m, image), 2u);
}

TEST(Eigenspace, HesseCubicsSplitUnderCharacter) {
  HeisType t(1, 3);
  GradedModule m(t, 3, 0);
  Cyclotomic one = Cyclotomic::one(t.field());
  auto inv = eigenspace_basis(t, m, {{heis_generator(t, "g1"), one}});
  ASSERT_EQ(inv.size(), 4u);
  std::vector<CPoly> expected{parse_poly("y1^3 + y2^3 + y3^3", m.ring()), parse_poly("y1*y2*y3", m.ring()),
                              parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1", m.ring()),
                              parse_poly("y1^2*y3 + y2^2*y1 + y3^2*y2", m.ring())};
  auto both = inv;
  both.insert(both.end(), expected.begin(), expected.end());
  EXPECT_EQ(span_rank(m, both), 4u);
  std::vector<Cyclotomic> eig{one, one, z(3, 2), z(3)};
  HeisElement g2 = heis_generator(t, "g2");
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(act(t, g2, expected[i]), expected[i].scaled(eig[i])) << i;
  EXPECT_EQ(eigenspace_basis(t, m, {{heis_generator(t, "g1"), one}, {g2, one}}).size(), 2u);
  EXPECT_EQ(eigenspace_basis(t, m, {{heis_generator(t, "g1"), one}, {g2, z(3, 2)}}).size(), 1u);
  EXPECT_EQ(eigenspace_basis(t, m, {{heis_generator(t, "g1"), one}, {g2, z(3)}}).size(), 1u);
}

TEST(Eigenspace, QuarticPencilUsesCommutingPair) {
  HeisType t(1, 4);
  GradedModule m(t, 2, 0);
  Cyclotomic one = Cyclotomic::one(t.field());
  HeisElement tt = power(t, heis_generator(t, "t"), 2), chi = heis_generator(t, "chi");
  auto q1 = eigenspace_basis(t, m, {{tt, one}, {chi, one}});
  auto q2 = eigenspace_basis(t, m, {{tt, one}, {chi, -one}});
  ASSERT_EQ(q1.size(), 2u);
  ASSERT_EQ(q2.size(), 2u);
  auto span1 = q1;
  span1.push_back(parse_poly("y1^2 + y3^2", m.ring()));
  span1.push_back(parse_poly("y2*y4", m.ring()));
  EXPECT_EQ(span_rank(m, span1), 2u);
  auto span2 = q2;
  span2.push_back(parse_poly("y2^2 + y4^2", m.ring()));
  span2.push_back(parse_poly("y1*y3", m.ring()));
  EXPECT_EQ(span_rank(m, span2), 2u);
  // t and chi do not commute on Sym^2: no joint eigenvectors
  for (unsigned k = 0; k < 4; ++k)
    EXPECT_TRUE(eigenspace_basis(t, m, {{heis_generator(t, "t"), z(4, k)}, {chi, one}}).empty());
}

TEST(Eigenspace, SchurSurrogate) {
  for (const auto& t : small_types(8)) {
    GradedModule m(t, 1, 1);
    auto basis = eigenspace_basis(t, m, trivial_character(t));
    ASSERT_EQ(basis.size(), 1u) << t.to_string();
    CPoly pairing(m.ring());
    for (std::size_t j = 1; j <= t.delta(); ++j)
      pairing = pairing + CPoly::variable(m.ring(), "x" + std::to_string(j)) *
                              CPoly::variable(m.ring(), "y" + std::to_string(j));
    EXPECT_EQ(basis[0], pairing) << t.to_string();
  }
}

TEST(Eigenspace, CharacterDimensionsSumToModule) {
  std::vector<GradedModule> modules{GradedModule(HeisType(1, 2), 3, 1), GradedModule(HeisType(1, 3), 3, 0),
                                    GradedModule(HeisType(1, 2), 2, 0), GradedModule(HeisType(2, 2), 2, 0),
                                    GradedModule(HeisType(1, 3), 1, 1), GradedModule(HeisType(1, 4), 1, 1)};
  for (const auto& m : modules) {
    const auto& t = m.type();
    auto chars = all_characters(t);
    EXPECT_EQ(chars.size(), std::size_t{t.delta()} * t.delta());
    std::size_t total = 0;
    for (const auto& chi : chars) total += eigenspace_basis(t, m, chi).size();
    EXPECT_EQ(total, m.dim()) << t.to_string() << " d=" << m.d() << " e=" << m.e();
  }
}

TEST(Eigenspace, VectorsScaleByCharacterValue) {
  std::mt19937 rng(5);
  std::vector<GradedModule> modules{GradedModule(HeisType(1, 2), 3, 1), GradedModule(HeisType(1, 3), 3, 0),
                                    GradedModule(HeisType(2, 2), 2, 0)};
  for (const auto& m : modules) {
    const auto& t = m.type();
    for (const auto& chi : all_characters(t))
      for (const auto& f : eigenspace_basis(t, m, chi))
        for (int trial = 0; trial < 10; ++trial) {
          auto g = random_element(t, rng);
          EXPECT_EQ(act(t, g, f), f.scaled(character_value(t, m, chi, g))) << chi.to_string();
        }
  }
}

TEST(Iota, NormalizesAndSwapsNonInvariantCubics) {
  for (const auto& t : small_types(8)) EXPECT_TRUE(iota_normalizes(t)) << t.to_string();
  HeisType t(1, 3);
  auto ring = make_ring<Cyclotomic>({"y1", "y2", "y3"}, t.field());
  CPoly a = parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1", ring), b = parse_poly("y1^2*y3 + y2^2*y1 + y3^2*y2", ring);
  EXPECT_EQ(apply_iota(t, a), b);
  EXPECT_EQ(apply_iota(t, b), a);
  CPoly hesse = parse_poly("y1^3 + y2^3 + y3^3", ring);
  EXPECT_EQ(apply_iota(t, hesse), hesse);
}
