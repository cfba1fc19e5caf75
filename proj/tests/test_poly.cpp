#include <gtest/gtest.h>

#include <random>

#include "heisurf/poly/multipoly.hpp"
#include "heisurf/poly/parse.hpp"

using namespace heisurf;
using QPoly = MultiPoly<Rational>;

namespace {

auto chpp_ring() { return make_ring<Rational>({"x1", "x2", "y1", "y2", "lam"}); }

QPoly P(const RingPtr<Rational>& r, const char* s) { return parse_poly(s, r); }

template <FieldElement F>
MultiPoly<F> random_poly(std::mt19937_64& rng, const RingPtr<F>& ring, int terms, unsigned maxdeg) {
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<unsigned> e(0, maxdeg);
  std::vector<typename MultiPoly<F>::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Exponents ex(ring->vars.size());
    for (auto& x : ex) x = e(rng);
    ts.emplace_back(ex, F::from_rational(ring->field, Rational(c(rng))));
  }
  return MultiPoly<F>::from_terms(ring, ts);
}

}  // namespace

TEST(Parse, Examples) {
  auto R = chpp_ring();
  QPoly f = P(R, "x1*y1^3 + x2*y2^3");
  EXPECT_EQ(f.size(), 2U);
  EXPECT_EQ(f.to_string(), "x1*y1^3 + x2*y2^3");
  EXPECT_TRUE(P(R, "0").is_zero());
  EXPECT_TRUE(P(R, "(y1+y2)^2 - y1^2 - 2*y1*y2 - y2^2").is_zero());
  EXPECT_EQ(P(R, " - 3/6 * x1 "), QPoly::variable(R, "x1").scaled(Rational(mpz_class(-1), mpz_class(2))));
}

TEST(Parse, Errors) {
  auto R = chpp_ring();
  EXPECT_THROW(P(R, "x1 + z"), UnknownVariable);
  try {
    P(R, "x1 + * y1");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5U);
  }
  EXPECT_THROW(P(R, "x1 +"), SyntaxError);
  EXPECT_THROW(P(R, "(x1"), SyntaxError);
  EXPECT_THROW(P(R, "1/0"), SyntaxError);
  EXPECT_THROW(P(R, "zeta(3)"), SyntaxError);
  EXPECT_THROW(P(R, "x1^99999999"), SyntaxError);
  try {
    P(R, "x1 + w9");
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.name(), "w9");
  }
}

TEST(Parse, CyclotomicCoefficients) {
  auto R = make_ring<Cyclotomic>({"y1", "y2"}, Cyclotomic::Field{12});
  auto f = parse_poly("zeta(3)*y1 + zeta(4)^2*y2", R);
  EXPECT_EQ(f.terms().front().second, Cyclotomic::zeta(12, 4));
  EXPECT_EQ(parse_poly(f.to_string(), R), f);
  auto g = parse_poly("(zeta(12) + 2)*y1^2 - zeta(12)^3*y2", R);
  EXPECT_EQ(g.to_string(), "(zeta(12) + 2)*y1^2 - zeta(12)^3*y2");
  EXPECT_EQ(parse_poly(g.to_string(), R), g);
  EXPECT_THROW(parse_poly("zeta(5)", R), SyntaxError);
}

TEST(Serialize, CanonicalForm) {
  auto R = chpp_ring();
  EXPECT_EQ(P(R, "y2^3*x2 + 2 - x1*y1^3").to_string(), "-x1*y1^3 + x2*y2^3 + 2");
  EXPECT_EQ(P(R, "-1").to_string(), "-1");
  EXPECT_EQ(P(R, "1/2*lam*y1 - 1").to_string(), "1/2*y1*lam - 1");
  // lex-ordered ring serializes in grevlex order as well
  auto L = with_order(R, MonomialOrder::lex);
  EXPECT_EQ(parse_poly("x1 + y1^2", L).to_string(), "y1^2 + x1");
  auto F7 = make_ring<ModP>({"x"}, ModP::make_field(7));
  EXPECT_EQ(parse_poly("x - 5", F7).to_string(), "x + 2");
  EXPECT_EQ(parse_poly("6*x", F7).to_string(), "-x");
}

TEST(Serialize, RoundTripRandom) {
  std::mt19937_64 rng(11);
  auto R = chpp_ring();
  auto F = make_ring<ModP>({"a", "b", "c"}, ModP::make_field(10007));
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng, R, 1 + i % 7, 3).scaled(Rational(mpz_class(1), mpz_class(1 + i % 5)));
    EXPECT_EQ(parse_poly(f.to_string(), R), f);
    auto g = random_poly(rng, F, 1 + i % 7, 4);
    EXPECT_EQ(parse_poly(g.to_string(), F), g);
  }
}

TEST(Arithmetic, RingAxiomsRandom) {
  std::mt19937_64 rng(3);
  auto R = make_ring<Rational>({"a", "b", "c"});
  auto F = make_ring<ModP>({"a", "b", "c"}, ModP::make_field(10007));
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng, R, 4, 3), g = random_poly(rng, R, 4, 3), h = random_poly(rng, R, 3, 2);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
    auto u = random_poly(rng, F, 4, 3), v = random_poly(rng, F, 4, 3), w = random_poly(rng, F, 3, 2);
    EXPECT_EQ((u + v) * w, u * w + v * w);
    EXPECT_EQ((u * v) * w, u * (v * w));
  }
}

TEST(Arithmetic, ExactDivision) {
  std::mt19937_64 rng(8);
  auto R = make_ring<Rational>({"a", "b", "c"});
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(rng, R, 4, 3), g = random_poly(rng, R, 3, 2);
    if (g.is_zero()) continue;
    EXPECT_EQ(exact_divide(f * g, g), f);
  }
  EXPECT_THROW(exact_divide(P(R, "a^2 + b"), P(R, "a")), ExactDivisionFailed);
  EXPECT_THROW(exact_divide(P(R, "a"), P(R, "0")), DivisionByZero);
}

TEST(Arithmetic, RingMismatch) {
  auto A = make_ring<Rational>({"a"});
  auto B = make_ring<Rational>({"b"});
  EXPECT_THROW(P(A, "a") + P(B, "b"), FieldMismatch);
  auto A2 = make_ring<Rational>({"a"});
  EXPECT_EQ(P(A, "a") + P(A2, "a"), P(A, "2*a"));
}

TEST(Derivative, Examples) {
  auto R = chpp_ring();
  auto f = P(R, "x1*(y1^3 + lam*y1*y2^2) + x2*(y2^3 + lam*y2*y1^2)");
  EXPECT_EQ(partial_derivative(f, "y1"), P(R, "x1*(3*y1^2 + lam*y2^2) + x2*(2*lam*y1*y2)"));
  EXPECT_TRUE(partial_derivative(P(R, "7"), "x1").is_zero());
  EXPECT_THROW(partial_derivative(f, "q"), UnknownVariable);
  // Euler identity in the y-grading
  auto euler = P(R, "y1") * partial_derivative(f, "y1") + P(R, "y2") * partial_derivative(f, "y2");
  EXPECT_EQ(euler, f.scaled(Rational(3)));
}

TEST(Derivative, LeibnizRandom) {
  std::mt19937_64 rng(12);
  auto R = make_ring<Rational>({"a", "b", "c"});
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(rng, R, 4, 3), g = random_poly(rng, R, 4, 3);
    for (std::size_t v = 0; v < 3; ++v)
      EXPECT_EQ(partial_derivative(f * g, v), f * partial_derivative(g, v) + g * partial_derivative(f, v));
  }
}

TEST(Substitute, Examples) {
  auto R = chpp_ring();
  auto f = P(R, "x1*(y1^3 + lam*y1*y2^2) + x2*(y2^3 + lam*y2*y1^2)");
  EXPECT_EQ(substitute(f, "lam", P(R, "0")), P(R, "x1*y1^3 + x2*y2^3"));
  auto H = make_ring<Rational>({"y1", "y2", "y3", "m"});
  auto fm = parse_poly("y1^3 + y2^3 + y3^3 + 6*m*y1*y2*y3", H);
  EXPECT_EQ(substitute(fm, "m", parse_poly("-1/2", H)), parse_poly("y1^3 + y2^3 + y3^3 - 3*y1*y2*y3", H));
  // simultaneous, not sequential
  EXPECT_EQ(substitute(P(R, "x1 + 2*x2"), {{"x1", P(R, "x2")}, {"x2", P(R, "x1")}}), P(R, "x2 + 2*x1"));
  EXPECT_THROW(substitute(f, "nope", P(R, "1")), UnknownVariable);
}

TEST(Evaluate, Examples) {
  auto R = chpp_ring();
  auto f = P(R, "x1*y1 + x2*y2");
  EXPECT_TRUE(evaluate(f, {{"x1", Rational(1)}, {"x2", Rational(0)}, {"y1", Rational(0)}, {"y2", Rational(1)}})
                  .is_zero());
  auto H = make_ring<Rational>({"y1", "y2", "y3"});
  EXPECT_EQ(evaluate(parse_poly("y1^3 + y2^3 + y3^3", H), {{"y1", Rational(1)}, {"y2", Rational(1)}, {"y3", Rational(1)}}),
            Rational(3));
  auto Z = make_ring<Cyclotomic>({"y1", "y2", "y3", "y4", "lam"}, Cyclotomic::Field{4});
  auto q1 = parse_poly("y1^2 + y3^2 + 2*lam*y2*y4", Z);
  Cyclotomic::Field f4{4};
  auto val = evaluate(q1, {{"y1", Cyclotomic::one(f4)},
                           {"y2", Cyclotomic::zero(f4)},
                           {"y3", Cyclotomic::zeta(4)},
                           {"y4", Cyclotomic::zero(f4)},
                           {"lam", Cyclotomic::from_rational(f4, Rational(5))}});
  EXPECT_TRUE(val.is_zero());
  EXPECT_THROW(evaluate(f, {{"x1", Rational(1)}}), UnboundVariable);
}

TEST(Homogeneity, Examples) {
  auto R = chpp_ring();
  auto f = P(R, "x1*(y1^3 + lam*y1*y2^2) + x2*(y2^3 + lam*y2*y1^2)");
  auto hy = is_homogeneous(f, {{"y1", 1}, {"y2", 1}});
  EXPECT_TRUE(hy.homogeneous);
  EXPECT_EQ(hy.degree, 3);
  auto hx = is_homogeneous(f, {{"x1", 1}, {"x2", 1}});
  EXPECT_TRUE(hx.homogeneous);
  EXPECT_EQ(hx.degree, 1);
  EXPECT_FALSE(is_homogeneous_in(P(R, "y1^2 + y2"), {"y1", "y2"}).homogeneous);
}

TEST(Coefficients, InVariable) {
  auto R = chpp_ring();
  auto c = coefficients_in(P(R, "y1^2*x1 + 3*y1 - x2"), "y1");
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c[0], P(R, "-x2"));
  EXPECT_EQ(c[1], P(R, "3"));
  EXPECT_EQ(c[2], P(R, "x1"));
}

TEST(ChangeRing, ByName) {
  auto R = chpp_ring();
  auto Z = make_ring<Cyclotomic>({"y2", "y1", "x1", "x2"}, Cyclotomic::Field{3});
  auto g = from_rational_poly(P(R, "x1*y1^3 + 1/2*x2*y2"), Z);
  EXPECT_EQ(g.to_string(), "y1^3*x1 + 1/2*y2*x2");
  EXPECT_THROW(from_rational_poly(P(R, "lam"), Z), UnknownVariable);
}
