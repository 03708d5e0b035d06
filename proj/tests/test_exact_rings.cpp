#include <gtest/gtest.h>

#include "studydet/cyclotomic.hpp"
#include "studydet/polynomial.hpp"
#include "studydet/random.hpp"
#include "studydet/rational.hpp"

using namespace studydet;

namespace {

Cyclotomic cyc(int n, std::vector<long> coeffs) {
  std::vector<Rational> raw(coeffs.begin(), coeffs.end());
  return cyclo_reduce(std::move(raw), n);
}

Cyclotomic random_cyclotomic(Rng& rng, int n) {
  std::vector<Rational> raw(static_cast<std::size_t>(n));
  for (auto& c : raw) c = rng.small_rational();
  return cyclo_reduce(std::move(raw), n);
}

Poly<Rational> random_poly(Rng& rng, const VarList& vars, int terms) {
  std::vector<std::pair<std::vector<unsigned>, Rational>> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<unsigned> e(vars->size());
    for (auto& x : e) x = static_cast<unsigned>(rng.below(3));
    t.emplace_back(e, rng.small_rational());
  }
  return poly_normalize(vars, Rational(), t);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_TRUE(Rational(0, 5) == Rational());
  EXPECT_EQ(Rational().to_string(), "0");
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_EQ(Rational(3).inverse(), Rational(1, 3));
  EXPECT_FALSE(Rational().try_inverse().has_value());
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-3/2"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("abc"), InputError);
  EXPECT_THROW(Rational::parse(""), InputError);
  EXPECT_THROW(Rational::parse("1/"), InputError);
}

TEST(Cyclotomic, PolynomialTable) {
  auto as_long = [](int n) {
    std::vector<long> out;
    for (const auto& c : cyclotomic_polynomial(n)) out.push_back(c.numerator().get_si());
    return out;
  };
  EXPECT_EQ(as_long(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_long(3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(as_long(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(as_long(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(as_long(8), (std::vector<long>{1, 0, 0, 0, 1}));
  EXPECT_EQ(as_long(12), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, ReduceExamples) {
  EXPECT_EQ(cyc(4, {0, 0, 1}).coeffs(), (std::vector<Rational>{-1, 0}));
  EXPECT_EQ(cyc(3, {0, 0, 1}).coeffs(), (std::vector<Rational>{-1, -1}));
  EXPECT_EQ(cyc(1, {5}).coeffs(), (std::vector<Rational>{5}));
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) EXPECT_TRUE(Cyclotomic::zeta_power(n, n).is_one()) << n;
}

TEST(Cyclotomic, GaussianProduct) {
  Cyclotomic one(4, 1);
  Cyclotomic i = Cyclotomic::zeta_power(4, 1);
  EXPECT_EQ((one + i) * (one - i), Cyclotomic(4, 2));
  EXPECT_EQ(i.conj(), -i);
  EXPECT_EQ(i * i, Cyclotomic(4, -1));
}

TEST(Cyclotomic, DescriptorMismatch) {
  EXPECT_THROW(Cyclotomic(3, 1) + Cyclotomic(4, 1), StructuralError);
  EXPECT_THROW(Cyclotomic(3, 1) * Cyclotomic(4, 1), StructuralError);
}

TEST(Cyclotomic, TextRoundTrip) {
  Cyclotomic z = Cyclotomic::zeta_power(3, 1);
  Cyclotomic a = Cyclotomic(3, 1) - z;
  EXPECT_EQ(a.to_string(), "(1-ζ)");
  EXPECT_EQ(Cyclotomic::parse("(1-ζ)", 3), a);
  EXPECT_EQ(Cyclotomic::parse("(1-z)", 3), a);
  Cyclotomic b = Cyclotomic(8, Rational(-3, 2)) + Cyclotomic::zeta_power(8, 3) * Rational(2);
  EXPECT_EQ(b.to_string(), "(-3/2+2*ζ^3)");
  EXPECT_EQ(Cyclotomic::parse(b.to_string(), 8), b);
  EXPECT_EQ(Cyclotomic(4, 5).to_string(), "5");
  EXPECT_THROW(Cyclotomic::parse("(1+q)", 3), InputError);
}

TEST(Cyclotomic, LiftAndInverse) {
  Cyclotomic i = Cyclotomic::zeta_power(4, 1);
  EXPECT_EQ(i.lift(8), Cyclotomic::zeta_power(8, 2));
  EXPECT_EQ(Cyclotomic::zeta_power(3, 1).lift(6), Cyclotomic::zeta_power(6, 2));
  EXPECT_THROW(i.lift(6), StructuralError);
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    for (int n : {3, 4, 5, 8, 12}) {
      Cyclotomic a = random_cyclotomic(rng, n);
      if (a.is_zero()) continue;
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Cyclotomic, RingAxioms) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    for (int n : {3, 4, 6, 8}) {
      auto a = random_cyclotomic(rng, n), b = random_cyclotomic(rng, n), c = random_cyclotomic(rng, n);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(Cyclotomic, ReductionIsHomomorphism) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::vector<int>{3, 4, 5, 6, 8, 12}[rng.below(6)];
    std::vector<Rational> p(rng.below(10) + 1), q(rng.below(10) + 1), pq(p.size() + q.size() - 1);
    for (auto& c : p) c = rng.small_rational();
    for (auto& c : q) c = rng.small_rational();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) pq[i + j] += p[i] * q[j];
    EXPECT_EQ(cyclo_reduce(pq, n), cyclo_reduce(p, n) * cyclo_reduce(q, n));
  }
}

TEST(Cyclotomic, PrimitiveRootsMultiplyToPhi) {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
    auto vars = make_vars({"x"});
    Cyclotomic one(n, 1);
    auto x = Poly<Cyclotomic>::variable(vars, 0, one);
    auto prod = Poly<Cyclotomic>::constant(vars, one);
    for (int k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) prod = prod * (x - Poly<Cyclotomic>::constant(vars, Cyclotomic::zeta_power(n, k)));
    const auto& phi = cyclotomic_polynomial(n);
    ASSERT_EQ(prod.total_degree(), static_cast<int>(phi.size()) - 1);
    for (const auto& [m, c] : prod.terms()) {
      ASSERT_TRUE(c.is_rational());
      EXPECT_EQ(c.rational_part(), phi[m.exponents[0]]);
    }
  }
}

TEST(Polynomial, NormalizeExamples) {
  auto vars = make_vars({"x", "y"});
  using T = std::vector<std::pair<std::vector<unsigned>, Rational>>;
  std::vector<unsigned> e1{1, 0}, e2{0, 1};
  EXPECT_TRUE(poly_normalize(vars, Rational(), T{{e1, 2}, {e1, -2}}).is_zero());
  auto sorted = poly_normalize(vars, Rational(), T{{e2, 1}, {e1, 1}});
  ASSERT_EQ(sorted.terms().size(), 2U);
  EXPECT_EQ(sorted.terms()[0].first, Monomial::from_exponents(e1));
  EXPECT_EQ(sorted.to_string(), "x + y");
  auto merged = poly_normalize(vars, Rational(), T{{e1, 1}, {e1, 1}});
  EXPECT_EQ(merged.to_string(), "2*x");
  EXPECT_THROW(poly_normalize(vars, Rational(), T{{{1}, 1}}), StructuralError);
}

TEST(Polynomial, NormalizeIdempotentAndOrderFree) {
  Rng rng(3);
  auto vars = make_vars({"a", "b", "c"});
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<std::vector<unsigned>, Rational>> t;
    for (int k = 0; k < 8; ++k)
      t.emplace_back(std::vector<unsigned>{unsigned(rng.below(3)), unsigned(rng.below(3)), unsigned(rng.below(3))},
                     rng.small_rational());
    auto p = poly_normalize(vars, Rational(), t);
    std::vector<std::pair<std::vector<unsigned>, Rational>> again;
    for (const auto& [m, c] : p.terms())
      again.emplace_back(std::vector<unsigned>{m.exponents[0], m.exponents[1], m.exponents[2]}, c);
    EXPECT_EQ(poly_normalize(vars, Rational(), again), p);
    std::reverse(t.begin(), t.end());
    EXPECT_EQ(poly_normalize(vars, Rational(), t), p);
  }
}

TEST(Polynomial, DifferenceOfSquares) {
  auto vars = make_vars({"x", "y"});
  auto x = Poly<Rational>::variable(vars, 0, 1);
  auto y = Poly<Rational>::variable(vars, 1, 1);
  auto p = (x + y) * (x - y);
  EXPECT_EQ(p.to_string(), "x^2 - y^2");
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.total_degree(), 2);
}

TEST(Polynomial, GrlexOrder) {
  auto vars = make_vars({"x_0", "x_1", "x_2"});
  auto x0 = Poly<Rational>::variable(vars, 0, 1);
  auto x1 = Poly<Rational>::variable(vars, 1, 1);
  auto x2 = Poly<Rational>::variable(vars, 2, 1);
  auto theta = x0 * x0 * x0 + x1 * x1 * x1 + x2 * x2 * x2 - x0 * x1 * x2.scaled(3);
  EXPECT_EQ(theta.to_string(), "x_0^3 - 3*x_0*x_1*x_2 + x_1^3 + x_2^3");
  auto q = x2 + x0 * x2 + Poly<Rational>::constant(vars, 5);
  EXPECT_EQ(q.to_string(), "x_0*x_2 + x_2 + 5");
}

TEST(Polynomial, RingAxioms) {
  Rng rng(23);
  auto vars = make_vars({"x", "y", "z"});
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_poly(rng, vars, 4), b = random_poly(rng, vars, 4), c = random_poly(rng, vars, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, CyclotomicCoefficientsAndParse) {
  auto vars = make_vars({"x_0", "x_1"});
  Cyclotomic one(3, 1);
  auto x0 = Poly<Cyclotomic>::variable(vars, 0, one);
  auto x1 = Poly<Cyclotomic>::variable(vars, 1, one);
  auto p = x0 + x1.scaled(one - Cyclotomic::zeta_power(3, 1));
  EXPECT_EQ(p.to_string(), "x_0 + (1-ζ)*x_1");
  EXPECT_EQ(parse_poly(p.to_string(), vars, one), p);
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = random_poly(rng, vars, 5);
    EXPECT_EQ(parse_poly(r.to_string(), vars, Rational(1)), r) << r.to_string();
    auto rc = r.map_coefficients([&](const Rational& c) { return Cyclotomic::zeta_power(3, trial) * c; }, one.zero_like());
    EXPECT_EQ(parse_poly(rc.to_string(), vars, one), rc) << rc.to_string();
  }
  EXPECT_THROW(parse_poly("x_0 + w", vars, Rational(1)), InputError);
}

TEST(Polynomial, VariableListMismatch) {
  auto a = Poly<Rational>::variable(make_vars({"x"}), 0, 1);
  auto b = Poly<Rational>::variable(make_vars({"y"}), 0, 1);
  EXPECT_THROW(a + b, StructuralError);
  EXPECT_THROW(a * b, StructuralError);
}

TEST(Polynomial, NestedCoefficients) {
  auto inner = make_vars({"t"});
  auto outer = make_vars({"s"});
  using P = Poly<Rational>;
  P zero(inner, Rational());
  auto t = P::variable(inner, 0, 1);
  auto s = Poly<P>::variable(outer, 0, P::constant(inner, 1));
  auto q = s.scaled(t) - Poly<P>::constant(outer, t * t);
  EXPECT_EQ(q.to_string(), "t*s - t^2");
  auto r = s.scaled(t + P::constant(inner, 1));
  EXPECT_EQ(r.to_string(), "(t + 1)*s");
}
