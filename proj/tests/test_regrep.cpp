#include <gtest/gtest.h>

#include "support.hpp"

using namespace studydet;
using namespace studydet::testing;

namespace {

using QElem = AlgebraElement<Rational>;

AMatrix<Rational> amat(std::size_t n, std::vector<QElem> v) { return AMatrix<Rational>(n, n, std::move(v)); }

struct QuaternionTowers {
  AlgebraPtr<Rational> h = quaternions();
  Tower<Rational> e = make_tower(h, {0, 1});          // H over Q(i)
  Tower<Rational> f = make_tower(h, {0}, {0, 1});     // Q(i) over Q
  QElem one = h->one(), i = h->monomial(1), j = h->monomial(2), k = h->monomial(3);
};

}  // namespace

TEST(RegrepElement, ComplexOverReals) {
  auto cr = TwistedAlgebra<Rational>::create(fixtures::complex_numbers(), Rational());
  auto t = make_tower(cr, {0});
  auto a = cr->from_coords({Rational(5), Rational(-7)});
  auto b1 = cr->scalar(Rational(5)), b2 = cr->scalar(Rational(-7));
  EXPECT_EQ(regrep_element(t, a), amat(2, {b1, -b2, b2, b1}));
}

TEST(RegrepElement, QuaternionsOverGaussian) {
  QuaternionTowers q;
  EXPECT_EQ(regrep_element(q.e, q.j), amat(2, {q.h->zero(), -q.one, q.one, q.h->zero()}));
  // a = b1 + j b2 with b1 = 1 + 2i, b2 = 3 - 4i.
  auto a = quat(q.h, 1, 2, 3, 4);
  auto b1 = quat(q.h, 1, 2, 0, 0), b2 = quat(q.h, 3, -4, 0, 0);
  auto conj = [&](const QElem& b) { return b - q.i.scaled(b.coeff(1) * Rational(2)); };
  EXPECT_EQ(regrep_element(q.e, a), amat(2, {b1, -conj(b2), b2, conj(b1)}));
}

TEST(RegrepElement, GroupAlgebraOverCoefficients) {
  auto vars = make_vars({"b1", "b2"});
  using P = Poly<Rational>;
  auto alg = untwisted(fixtures::c2(), P(vars, Rational()));
  auto t = make_tower(alg, {0});
  auto b1 = alg->scalar(P::variable(vars, 0, 1)), b2 = alg->scalar(P::variable(vars, 1, 1));
  auto a = alg->from_coords({P::variable(vars, 0, 1), P::variable(vars, 1, 1)});
  EXPECT_EQ(regrep_element(t, a), AMatrix<P>(2, 2, {b1, b2, b2, b1}));
}

TEST(RegrepElement, OutsideUpperRejected) {
  QuaternionTowers q;
  EXPECT_THROW(regrep_element(q.f, q.j), StructuralError);
}

TEST(RegrepMatrix, Examples) {
  QuaternionTowers q;
  Rng rng(4);
  auto a = random_element(rng, q.h);
  EXPECT_EQ(regrep_matrix(q.e, amat(1, {a})), regrep_element(q.e, a));
  auto id = AMatrix<Rational>::identity(3, q.one);
  EXPECT_EQ(regrep_matrix(q.e, id), AMatrix<Rational>::identity(6, q.one));

  auto z = q.h->zero();
  auto diag = amat(2, {q.j, z, z, q.j});
  auto blocks = perm_action(sigma_perm(2, 2), regrep_matrix(q.e, diag));
  auto lj = regrep_element(q.e, q.j);
  AMatrix<Rational> expected(4, 4, z);
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) expected(b * 2 + x, b * 2 + y) = lj(x, y);
  EXPECT_EQ(blocks, expected);
}

TEST(RegrepMatrix, PermutationToBlockForm) {
  auto s3 = untwisted(fixtures::s3(), Cyclotomic(3));
  auto t = make_tower(s3, s3->g().subgroup("R3"));
  auto h = quaternions();
  auto tq = make_tower(h, {0, 1});
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_trial(2, "lemma-4.2", trial);
    std::size_t r = 1 + rng.below(3);
    auto a = random_matrix(rng, s3, r);
    EXPECT_EQ(perm_action(sigma_perm(t.m(), r), regrep_matrix(t, a)), regrep_blocks(t, a));
    auto b = random_matrix(rng, h, r);
    EXPECT_EQ(perm_action(sigma_perm(tq.m(), r), regrep_matrix(tq, b)), regrep_blocks(tq, b));
  }
}

TEST(Regrep, MultiplicativeAndUnital) {
  auto check = [](auto alg, std::vector<std::size_t> lower, int trials) {
    auto t = make_tower(alg, lower);
    EXPECT_EQ(regrep_element(t, alg->one()), decltype(regrep_element(t, alg->one()))::identity(t.m(), alg->one()));
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::for_trial(3, alg->g().name(), trial);
      auto a = random_element(rng, alg), b = random_element(rng, alg);
      EXPECT_EQ(regrep_element(t, a * b), regrep_element(t, a) * regrep_element(t, b));
      EXPECT_EQ(compose(t, decompose(t, a)), a);
    }
  };
  check(quaternions(), {0, 1}, 30);
  check(quaternions(), {0}, 30);
  check(untwisted(fixtures::s3(), Cyclotomic(3)), {0, 1, 2}, 20);
  check(untwisted(fixtures::s3(), Rational()), {0, 3}, 20);
  check(untwisted(fixtures::d4(), Rational()), {0, 1, 2, 3}, 10);
  check(untwisted(fixtures::q8(), Cyclotomic(4)), {0, 1, 4, 5}, 10);
  check(untwisted(fixtures::c4(), Cyclotomic(4)), {0}, 20);
  auto vars = make_vars({"x", "y"});
  check(untwisted(fixtures::s3(), Poly<Rational>(vars, Rational())), {0, 1, 2}, 5);
}

TEST(Regrep, InjectiveOnBasisCoordinates) {
  auto alg = untwisted(fixtures::s3(), Rational());
  auto t = make_tower(alg, alg->g().subgroup("R3"));
  for (std::size_t g = 0; g < 6; ++g) EXPECT_FALSE(regrep_element(t, alg->monomial(g)).is_zero());
  EXPECT_TRUE(regrep_element(t, alg->zero()).is_zero());
}

TEST(Regrep, DeterminantIsBasisIndependent) {
  auto h = quaternions();
  auto s3 = untwisted(fixtures::s3(), Cyclotomic(3));
  auto c6 = untwisted(fixtures::c6(), Rational());
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_trial(5, "basis", trial);
    for (auto [alg, lower] : {std::pair{s3, std::vector<std::size_t>{0, 1, 2}}}) {
      Tower<Cyclotomic> other(alg, random_basis(rng, alg->group(), lower, alg->g().all_elements()));
      auto a = random_element(rng, alg);
      EXPECT_EQ(det(regrep_element(make_tower(alg, lower), a)), det(regrep_element(other, a)));
    }
    Tower<Rational> hq(h, random_basis(rng, h->group(), {0, 1}, h->g().all_elements()));
    auto a = random_element(rng, h);
    EXPECT_EQ(det(regrep_element(make_tower(h, {0, 1}), a)), det(regrep_element(hq, a)));
    Tower<Rational> ct(c6, random_basis(rng, c6->group(), {0, 3}, c6->g().all_elements()));
    auto c = random_element(rng, c6);
    EXPECT_EQ(det(regrep_element(make_tower(c6, {0, 3}), c)), det(regrep_element(ct, c)));
  }
}

TEST(RegrepIndicator, Examples) {
  QuaternionTowers q;
  EXPECT_EQ(regrep_via_indicator(q.e, q.j), amat(2, {q.h->zero(), -q.one, q.one, q.h->zero()}));
  EXPECT_EQ(regrep_via_indicator(q.e, q.one), AMatrix<Rational>::identity(2, q.one));
  auto s3 = untwisted(fixtures::s3(), Rational());
  auto nn = make_tower(s3, s3->g().subgroup("S"));
  Tower<Rational> broken(s3, coset_basis(s3->group(), {0, 3}, s3->g().all_elements(), {0, 4, 5},
                                         std::vector<Cyclotomic>(3, Cyclotomic(1, 1))));
  EXPECT_NO_THROW(regrep_via_indicator(nn, s3->one()));
  EXPECT_THROW(regrep_via_indicator(broken, s3->one()), PreconditionError);
}

TEST(RegrepIndicator, MatchesRegrepOnS3OverPolynomials) {
  auto vars = group_variables(*fixtures::s3());
  auto alg = untwisted(fixtures::s3(), Poly<Cyclotomic>(vars, Cyclotomic(3)));
  auto t = make_tower(alg, alg->g().subgroup("R3"));
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::for_trial(6, "indicator", trial);
    auto a = random_element(rng, alg);
    auto l = regrep_element(t, a);
    EXPECT_EQ(regrep_via_indicator(t, a), l);
    EXPECT_EQ(regrep_via_cosets(t, a), l);
  }
  auto x = general_element(alg, alg->g().all_elements());
  EXPECT_EQ(regrep_via_indicator(t, x), regrep_element(t, x));
}

TEST(RegrepIndicator, QuaternionRandom) {
  QuaternionTowers q;
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_trial(7, "indicator-h", trial);
    auto a = random_element(rng, q.h);
    EXPECT_EQ(regrep_via_indicator(q.e, a), regrep_element(q.e, a));
    EXPECT_EQ(regrep_via_cosets(q.e, a), regrep_element(q.e, a));
  }
}

TEST(InverseViaRegrep, Examples) {
  QuaternionTowers q;
  EXPECT_EQ(*inverse_via_regrep(q.e, q.j), -q.j);
  auto a = quat(q.h, 1, 2, 3, 4);
  auto inv = inverse_via_regrep(q.e, a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, quat(q.h, 1, -2, -3, -4).scaled(Rational(1, 30)));
  EXPECT_FALSE(inverse_via_regrep(q.e, q.h->zero()).has_value());
}

TEST(InverseViaRegrep, InvertibilityPreserved) {
  auto c4 = untwisted(fixtures::c4(), Cyclotomic(4));
  auto s3 = untwisted(fixtures::s3(), Rational());
  auto tc = make_tower(c4, {0, 2});
  auto ts = make_tower(s3, s3->g().subgroup("R3"));
  auto full_c4 = make_tower(c4, {0});
  auto full_s3 = make_tower(s3, {0});
  int singular = 0, invertible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Rng rng = Rng::for_trial(8, "inverse", trial);
    auto a = random_element(rng, c4);
    auto inv = inverse_via_regrep(tc, a);
    EXPECT_EQ(inv.has_value(), !det(regrep_element(full_c4, a)).is_zero());
    if (inv) {
      EXPECT_EQ(a * *inv, c4->one());
      EXPECT_EQ(*inv * a, c4->one());
    }
    // (1 + s)(1 - s) = 0, so multiples of 1 + s are never invertible.
    auto b = rng.coin() ? random_element(rng, s3) : (s3->one() + s3->monomial(3)) * random_element(rng, s3);
    auto sinv = inverse_via_regrep(ts, b);
    EXPECT_EQ(sinv.has_value(), !det(regrep_element(full_s3, b)).is_zero());
    if (sinv) {
      ++invertible;
      EXPECT_EQ(b * *sinv, s3->one());
      EXPECT_EQ(*sinv * b, s3->one());
    } else {
      ++singular;
    }
  }
  EXPECT_GT(singular, 0);
  EXPECT_GT(invertible, 0);
}

TEST(InverseViaRegrep, MatrixInverse) {
  QuaternionTowers q;
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::for_trial(9, "matrix-inverse", trial);
    auto a = random_matrix(rng, q.h, 2);
    auto inv = inverse_matrix_via_regrep(q.e, a);
    ASSERT_EQ(inv.has_value(), !det(regrep_matrix(q.e, a)).is_zero());
    if (inv) {
      auto id = AMatrix<Rational>::identity(2, q.one);
      EXPECT_EQ(a * *inv, id);
      EXPECT_EQ(*inv * a, id);
    }
  }
  auto z = q.h->zero();
  EXPECT_FALSE(inverse_matrix_via_regrep(q.e, amat(2, {q.j, q.j, q.j, q.j})).has_value());
}

TEST(InverseViaRegrep, PolynomialCoefficientsUnavailable) {
  auto vars = make_vars({"x"});
  auto alg = untwisted(fixtures::c2(), Poly<Rational>(vars, Rational()));
  EXPECT_THROW(inverse_via_regrep(make_tower(alg, {0}), alg->one()), PreconditionError);
}

TEST(CharpolyRegrep, Examples) {
  QuaternionTowers q;
  EXPECT_EQ(charpoly_text(charpoly_regrep(q.e, q.j)), "x^2 + 1");
  EXPECT_EQ(charpoly_text(charpoly_regrep(q.e, quat(q.h, 1, 2, 3, 4))), "x^2 - 2*x + 30");
  auto s3 = untwisted(fixtures::s3(), Rational());
  EXPECT_EQ(charpoly_text(charpoly_regrep(make_tower(s3, {0}), s3->one())), "x^6 - 6*x^5 + 15*x^4 - 20*x^3 + 15*x^2 - 6*x + 1");
  EXPECT_THROW(charpoly_regrep(make_tower(s3, {0, 3}, {0, 3}), s3->monomial(1)), StructuralError);
  EXPECT_THROW(charpoly_regrep(make_tower(s3, s3->g().all_elements()), s3->one()), PreconditionError);
}

TEST(CharpolyRegrep, CoefficientsCentralUnderConditions) {
  auto s3 = untwisted(fixtures::s3(), Cyclotomic(3));
  auto t = make_tower(s3, s3->g().subgroup("R3"));
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::for_trial(10, "central", trial);
    for (const auto& b : charpoly_regrep(t, random_element(rng, s3))) {
      EXPECT_TRUE(t.in_lower_span(b));
      for (std::size_t g = 0; g < 6; ++g) EXPECT_EQ(b * s3->monomial(g), s3->monomial(g) * b);
    }
  }
}

TEST(CayleyHamilton, Examples) {
  QuaternionTowers q;
  auto a = quat(q.h, 1, 2, 3, 4);
  EXPECT_EQ(a * a, quat(q.h, -28, 4, 6, 8));
  EXPECT_TRUE((a * a - a.scaled(Rational(2)) + q.h->scalar(Rational(30))).is_zero());
  EXPECT_TRUE(cayley_hamilton_check(q.e, a));
  EXPECT_TRUE(cayley_hamilton_check(q.e, q.one));
  auto c4 = untwisted(fixtures::c4(), Cyclotomic(4));
  auto t = make_tower(c4, {0});
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_trial(11, "ch", trial);
    EXPECT_TRUE(cayley_hamilton_check(t, random_element(rng, c4)));
  }
  auto s3 = untwisted(fixtures::s3(), Rational());
  EXPECT_THROW(cayley_hamilton_check(make_tower(s3, s3->g().subgroup("S")), s3->one()), PreconditionError);
}

TEST(JMatrices, Examples) {
  QuaternionTowers q;
  auto js = j_matrices(q.e);
  ASSERT_EQ(js.size(), 2u);
  EXPECT_EQ(js[0], AMatrix<Rational>::identity(2, q.one));
  EXPECT_EQ(js[1], amat(2, {q.h->zero(), q.j, -q.j, q.h->zero()}));
  for (const auto& j : js) {
    for (std::size_t r = 0; r < 2; ++r) {
      int nonzero = 0;
      for (std::size_t c = 0; c < 2; ++c) nonzero += j(r, c).is_zero() ? 0 : 1;
      EXPECT_EQ(nonzero, 1);
    }
  }

  auto vars = make_vars({"x"});
  using P = Poly<Rational>;
  auto c2 = untwisted(fixtures::c2(), P(vars, Rational()));
  auto jc = j_matrices(make_tower(c2, {0}));
  auto g = c2->monomial(1);
  EXPECT_EQ(jc[1], AMatrix<P>(2, 2, {c2->zero(), g, g, c2->zero()}));
}

TEST(Commutant, Examples) {
  QuaternionTowers q;
  auto id = commutant_check(q.e, AMatrix<Rational>::identity(2, q.one));
  EXPECT_TRUE(id.member);
  ASSERT_TRUE(id.witness.has_value());
  EXPECT_EQ(*id.witness, q.one);
  EXPECT_TRUE(id.witness_verified);

  auto e12 = AMatrix<Rational>::unit(2, 0, 1, q.one);
  EXPECT_FALSE(commutant_check(q.e, e12).member);

  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_trial(12, "commutant", trial);
    auto a = random_element(rng, q.h);
    auto res = commutant_check(q.e, regrep_element(q.e, a));
    EXPECT_TRUE(res.member);
    EXPECT_TRUE(res.witness_verified);
    EXPECT_EQ(*res.witness, a);
  }
}

TEST(Commutant, ReverseInclusionOverFields) {
  QuaternionTowers q;
  auto basis = commutant_basis(q.e);
  EXPECT_EQ(basis.size(), 4u);
  auto s3 = untwisted(fixtures::s3(), Cyclotomic(3));
  auto ts = make_tower(s3, s3->g().subgroup("R3"));
  auto sb = commutant_basis(ts);
  EXPECT_EQ(sb.size(), 6u);
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::for_trial(13, "commutant-reverse", trial);
    AMatrix<Rational> b(2, 2, q.h->zero());
    for (const auto& v : basis) {
      Rational s = rng.small_rational();
      b = b + v.map([&](const QElem& x) { return x.scaled(s); });
    }
    auto res = commutant_check(q.e, b);
    EXPECT_TRUE(res.member);
    EXPECT_TRUE(res.witness_verified);
    AMatrix<Cyclotomic> c(2, 2, s3->zero());
    for (const auto& v : sb) {
      Cyclotomic s = random_cyclotomic(rng, 3);
      c = c + v.map([&](const AlgebraElement<Cyclotomic>& x) { return x.scaled(s); });
    }
    EXPECT_TRUE(commutant_check(ts, c).witness_verified);
  }
}

TEST(Commutant, MatrixVersion) {
  QuaternionTowers q;
  EXPECT_TRUE(matrix_commutant_check(q.e, 2, AMatrix<Rational>::identity(4, q.one)).member);
  for (int trial = 0; trial < 10; ++trial) {
    Rng rng = Rng::for_trial(14, "matrix-commutant", trial);
    std::size_t r = 1 + rng.below(3);
    auto a = random_matrix(rng, q.h, r);
    auto res = matrix_commutant_check(q.e, r, regrep_matrix(q.e, a));
    EXPECT_TRUE(res.member);
    EXPECT_TRUE(res.witness_verified);
    EXPECT_EQ(*res.witness, a);
  }
  // b = [[1, 0], [0, i]]: J b = [[0, -i], [1, 0]] but conj(b) J = [[0, 1], [-i, 0]]... not of the form psi(a).
  auto b = amat(2, {q.one, q.h->zero(), q.h->zero(), q.i});
  EXPECT_FALSE(matrix_commutant_check(q.e, 1, b).member);
}

TEST(Commutant, RequiresConditionVi) {
  auto s3 = untwisted(fixtures::s3(), Rational());
  auto t = make_tower(s3, s3->g().trivial_subgroup());
  EXPECT_FALSE(basis_conditions(t).commuting);
  EXPECT_THROW(commutant_check(t, AMatrix<Rational>::identity(6, s3->one())), PreconditionError);
}

TEST(Diagram, Examples) {
  QuaternionTowers q;
  auto trivial = make_tower(q.h, {0, 1}, {0, 1});
  EXPECT_TRUE(diagram_check_element(q.e, trivial, q.j));
  EXPECT_TRUE(diagram_check_element(q.e, q.f, q.j));
  auto ef = tower_product(q.e, q.f);
  auto flat = regrep_element(ef, q.j);
  EXPECT_EQ(flat.rows(), 4u);
  for (const auto& x : flat.entries()) EXPECT_TRUE(x.supported_in({0}));

  auto vars = make_vars({"x", "y"});
  auto s3 = untwisted(fixtures::s3(), Poly<Rational>(vars, Rational()));
  auto upper = make_tower(s3, s3->g().subgroup("R3"));
  auto lower = make_tower(s3, {0}, s3->g().subgroup("R3"));
  for (int trial = 0; trial < 5; ++trial) {
    Rng rng = Rng::for_trial(15, "diagram", trial);
    EXPECT_TRUE(diagram_check_element(upper, lower, random_element(rng, s3)));
    EXPECT_TRUE(diagram_check_matrix(upper, lower, random_matrix(rng, s3, 2)));
  }
  EXPECT_THROW(diagram_check_element(upper, make_tower(s3, {0}), s3->one()), StructuralError);
}

TEST(Diagram, DeterminantsAgree) {
  QuaternionTowers q;
  auto gauss = std::vector<std::size_t>{0, 1};
  auto c4 = untwisted(fixtures::c4(), Rational());
  auto c4_lower = make_tower(c4, {0}, {0, 2});
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng = Rng::for_trial(16, "theorem-4.4", trial);
    std::size_t r = 1 + rng.below(3);
    auto pair = determinant_diagram(q.f, random_matrix(rng, q.h, r, gauss));
    EXPECT_TRUE(pair.equal()) << pair.flattened.to_string() << " vs " << pair.composed.to_string();
    EXPECT_TRUE(determinant_diagram(c4_lower, random_matrix(rng, c4, r, {0, 2})).equal());
  }
  EXPECT_THROW(determinant_diagram(q.f, amat(1, {q.j})), StructuralError);
}
