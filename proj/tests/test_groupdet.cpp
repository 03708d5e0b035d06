#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "studydet/fixtures.hpp"
#include "studydet/groupdet.hpp"
#include "support.hpp"

using namespace studydet;
using namespace studydet::testing;

namespace {

// Leibniz expansion of (x_{g h^-1}) built independently of the library's
// permutation-expansion route.
QPoly leibniz_theta(const FiniteGroup& g) {
  auto vars = group_variables(g);
  Matrix<QPoly> m(g.order(), g.order(), QPoly(vars, Rational()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) m(a, b) = QPoly::variable(vars, g.mul(a, g.inverse(b)), Rational(1));
  return det_leibniz(m);
}

ZPoly linear_form(const VarList& vars, const std::vector<Cyclotomic>& coeffs) {
  ZPoly out(vars, coeffs.front().zero_like());
  for (std::size_t k = 0; k < coeffs.size(); ++k) out = out + ZPoly::variable(vars, k, coeffs[k]);
  return out;
}

}  // namespace

TEST(GroupDeterminant, SmallExamples) {
  EXPECT_EQ(group_determinant_direct(*fixtures::c2()).to_string(), "x_e^2 - x_g^2");
  EXPECT_EQ(group_determinant_direct(*fixtures::c1()).to_string(), "x_e");
  auto c3 = fixtures::c3();
  auto vars = group_variables(*c3);
  auto expected = parse_poly("x_0^3 + x_1^3 + x_2^3 - 3*x_0*x_1*x_2", vars, Rational(1));
  EXPECT_EQ(group_determinant_direct(*c3), expected);
  EXPECT_EQ(group_determinant_direct(*c3).to_string(), "x_0^3 - 3*x_0*x_1*x_2 + x_1^3 + x_2^3");
}

TEST(GroupDeterminant, RoutesAgreeOnEveryBundledGroup) {
  for (const auto& g : {fixtures::c1(), fixtures::c2(), fixtures::c3(), fixtures::c4(), fixtures::c6(),
                        fixtures::klein(), fixtures::s3(), fixtures::d4(), fixtures::q8()}) {
    auto r = group_determinant(g);
    EXPECT_TRUE(r.routes_agree) << g->name();
    EXPECT_TRUE(r.theta.is_homogeneous()) << g->name();
    EXPECT_EQ(r.theta.total_degree(), static_cast<int>(g->order())) << g->name();
  }
}

TEST(GroupDeterminant, MatchesLeibnizOracle) {
  for (const auto& g : {fixtures::c4(), fixtures::klein(), fixtures::s3()})
    EXPECT_EQ(group_determinant_direct(*g), leibniz_theta(*g)) << g->name();
}

TEST(GroupDeterminant, InvariantUnderRenumbering) {
  auto rng = Rng::for_trial(7, "groupdet-renumber", 0);
  for (const auto& g : {fixtures::s3(), fixtures::d4(), fixtures::q8(), fixtures::c6()}) {
    auto theta = group_determinant_direct(*g);
    for (int trial = 0; trial < 3; ++trial) {
      auto perm = rng.permutation(g->order());
      EXPECT_EQ(group_determinant_relabeled(*g, perm), theta) << g->name();
    }
  }
}

TEST(GroupDeterminant, RefusesOverBudget) {
  auto c9 = fixtures::cyclic(9, {"0", "1", "2", "3", "4", "5", "6", "7", "8"});
  EXPECT_THROW(group_determinant_direct(*c9), PreconditionError);
}

TEST(Characters, C2AndC4) {
  auto c2 = abelian_characters(fixtures::c2(), {0, 1});
  ASSERT_EQ(c2.size(), 2u);
  EXPECT_EQ(c2.values[0][1], Cyclotomic(2, 1));
  EXPECT_EQ(c2.values[1][1], Cyclotomic(2, -1));

  auto c4 = abelian_characters(fixtures::c4(), {0, 1, 2, 3});
  ASSERT_EQ(c4.size(), 4u);
  EXPECT_EQ(c4.conductor, 4);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(c4.values[k][1], Cyclotomic::zeta_power(4, k));
  EXPECT_TRUE(characters_orthogonal(c4));
}

TEST(Characters, KleinFourIsPlusMinusOne) {
  auto t = abelian_characters(fixtures::klein(), {0, 1, 2, 3});
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.conductor, 2);
  for (const auto& chi : t.values)
    for (const auto& v : chi) EXPECT_TRUE(v == Cyclotomic(2, 1) || v == Cyclotomic(2, -1));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) EXPECT_FALSE(t.values[a] == t.values[b]);
  EXPECT_TRUE(characters_orthogonal(t));
}

TEST(Characters, HomomorphismsOnSubgroups) {
  for (auto [g, h] : {std::pair{fixtures::c6(), std::vector<std::size_t>{0, 1, 2, 3, 4, 5}},
                      std::pair{fixtures::q8(), std::vector<std::size_t>{0, 1, 4, 5}},
                      std::pair{fixtures::d4(), std::vector<std::size_t>{0, 1, 2, 3}},
                      std::pair{fixtures::s3(), std::vector<std::size_t>{0, 1, 2}}}) {
    auto t = abelian_characters(g, h);
    EXPECT_EQ(t.size(), h.size());
    EXPECT_TRUE(characters_orthogonal(t));
    for (const auto& chi : t.values)
      for (auto a : h)
        for (auto b : h) EXPECT_EQ(chi[g->mul(a, b)], chi[a] * chi[b]);
  }
}

TEST(Characters, NonabelianRefused) {
  auto s3 = fixtures::s3();
  EXPECT_THROW(abelian_characters(s3, s3->all_elements()), PreconditionError);
}

TEST(Dedekind, C2Factors) {
  auto r = dedekind_factorize(fixtures::c2());
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.factors[0].poly.to_string(), "x_e + x_g");
  EXPECT_EQ(r.factors[1].poly.to_string(), "x_e - x_g");
  EXPECT_TRUE(r.ok());
}

TEST(Dedekind, C3FactorsAreTheCirculantForms) {
  auto g = fixtures::c3();
  auto r = dedekind_factorize(g);
  ASSERT_EQ(r.factors.size(), 3u);
  auto vars = group_variables(*g);
  for (int k = 0; k < 3; ++k) {
    auto expected = linear_form(vars, {Cyclotomic(3, 1), Cyclotomic::zeta_power(3, k), Cyclotomic::zeta_power(3, 2 * k)});
    EXPECT_EQ(r.factors[k].poly, expected) << k;
  }
  EXPECT_TRUE(r.ok());
}

TEST(Dedekind, ProductIdentityOnAbelianFixtures) {
  for (const auto& g : {fixtures::c1(), fixtures::c2(), fixtures::c3(), fixtures::c4(), fixtures::klein(), fixtures::c6()}) {
    auto r = dedekind_factorize(g);
    EXPECT_TRUE(r.ok()) << g->name() << " " << r.detail;
    EXPECT_EQ(r.factors.size(), g->order());
  }
  EXPECT_EQ(dedekind_factorize(fixtures::c1()).factors[0].poly.to_string(), "x_e");
}

TEST(Dedekind, NonabelianGroupRefused) {
  try {
    dedekind_factorize(fixtures::s3());
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "subgroup must be abelian: G itself is not");
  }
}

TEST(RelativeDeterminant, WholeAbelianGroupGivesGeneralElement) {
  auto g = fixtures::c4();
  auto rel = theta_relative(g, g->all_elements());
  EXPECT_EQ(rel.index, 1u);
  EXPECT_EQ(rel.theta, general_element(rel.algebra, g->all_elements()));
}

TEST(RelativeDeterminant, CoordinateDegreesEqualIndex) {
  struct Case {
    GroupPtr g;
    std::vector<std::size_t> h;
  };
  for (const auto& [g, h] : {Case{fixtures::c4(), {0, 2}}, Case{fixtures::s3(), {0, 1, 2}}, Case{fixtures::d4(), {0, 1, 2, 3}},
                             Case{fixtures::q8(), {0, 1, 4, 5}}, Case{fixtures::c6(), {0, 3}}}) {
    auto rel = theta_relative(g, h);
    EXPECT_TRUE(rel.degrees_ok) << g->name();
    EXPECT_EQ(rel.index, g->order() / h.size());
    bool any = false;
    for (auto x : h)
      if (!rel.theta.coeff(x).is_zero()) {
        any = true;
        EXPECT_EQ(rel.theta.coeff(x).total_degree(), static_cast<int>(rel.index));
      }
    EXPECT_TRUE(any);
    EXPECT_TRUE(rel.theta.supported_in(h));
  }
}

TEST(RelativeDeterminant, IndependentOfCosetRepresentatives) {
  auto rng = Rng::for_trial(11, "groupdet-basis", 0);
  for (auto [g, h] : {std::pair{fixtures::s3(), std::vector<std::size_t>{0, 1, 2}},
                      std::pair{fixtures::d4(), std::vector<std::size_t>{0, 1, 2, 3}},
                      std::pair{fixtures::q8(), std::vector<std::size_t>{0, 1, 4, 5}}}) {
    int n = static_cast<int>(g->exponent_of(h));
    auto canonical = theta_relative(g, h);
    for (int trial = 0; trial < 3; ++trial) {
      auto alt = theta_relative(g, random_basis(rng, g, h, g->all_elements()), n);
      EXPECT_EQ(alt.theta.coords(), canonical.theta.coords()) << g->name();
    }
  }
}

TEST(RelativeDeterminant, NonabelianSubgroupRefused) {
  auto s3 = fixtures::s3();
  EXPECT_THROW(theta_relative(s3, s3->all_elements()), PreconditionError);
}

TEST(Extension, ReducesToDedekindWhenHIsG) {
  auto r = extension_check(fixtures::c2(), {0, 1});
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.factors[0].poly.to_string(), "x_e + x_g");
  EXPECT_EQ(r.factors[1].poly.to_string(), "x_e - x_g");
  EXPECT_TRUE(r.ok());
}

TEST(Extension, ProductIdentityOnFixtures) {
  struct Case {
    GroupPtr g;
    std::vector<std::size_t> h;
  };
  for (const auto& [g, h] : {Case{fixtures::c4(), {0, 2}}, Case{fixtures::s3(), {0, 1, 2}}, Case{fixtures::d4(), {0, 1, 2, 3}},
                             Case{fixtures::q8(), {0, 1, 4, 5}}, Case{fixtures::c6(), {0, 2, 4}}}) {
    auto r = extension_check(g, h);
    EXPECT_TRUE(r.ok()) << g->name() << " " << r.detail;
    EXPECT_EQ(r.factors.size(), h.size());
    for (const auto& f : r.factors) EXPECT_EQ(f.poly.total_degree(), static_cast<int>(g->order() / h.size()));
  }
}

TEST(Frobenius, S3WithStandardRepresentation) {
  auto g = fixtures::s3();
  auto r = frobenius_verify(g, fixtures::s3_irreps());
  EXPECT_TRUE(r.ok()) << r.detail;
  ASSERT_EQ(r.factors.size(), 3u);
  EXPECT_EQ(r.factors[0].poly.to_string(), "x_e + x_r + x_r2 + x_s + x_rs + x_r2s");
  EXPECT_EQ(r.factors[1].poly.to_string(), "x_e + x_r + x_r2 - x_s - x_rs - x_r2s");
  EXPECT_EQ(r.factors[2].multiplicity, 2u);
  EXPECT_EQ(r.factors[2].poly.total_degree(), 2);
  int total = 0;
  for (const auto& f : r.factors) total += static_cast<int>(f.multiplicity) * f.poly.total_degree();
  EXPECT_EQ(total, 6);
}

TEST(Frobenius, Q8) {
  auto r = frobenius_verify(fixtures::q8(), fixtures::q8_irreps());
  EXPECT_TRUE(r.ok()) << r.detail;
  EXPECT_EQ(r.factors.size(), 5u);
}

TEST(Frobenius, AbelianCharactersReduceToDedekind) {
  auto g = fixtures::c4();
  auto chars = abelian_characters(g, g->all_elements());
  std::vector<Representation> reps;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    Representation rep{"chi" + std::to_string(c), 1, chars.conductor, {}};
    for (const auto& v : chars.values[c]) rep.images.push_back(Matrix<Cyclotomic>(1, 1, v));
    reps.push_back(rep);
  }
  auto f = frobenius_verify(g, reps);
  auto d = dedekind_factorize(g);
  EXPECT_TRUE(f.ok());
  ASSERT_EQ(f.factors.size(), d.factors.size());
  for (std::size_t k = 0; k < f.factors.size(); ++k) EXPECT_EQ(f.factors[k].poly, d.factors[k].poly);
}

TEST(Frobenius, WrongDegreeBookkeepingRejected) {
  auto irreps = fixtures::s3_irreps();
  irreps.pop_back();
  try {
    frobenius_verify(fixtures::s3(), irreps);
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("sum of squared degrees is 2"), std::string::npos) << e.what();
  }
}

TEST(Frobenius, NonMultiplicativeInputNamesThePair) {
  auto irreps = fixtures::s3_irreps();
  irreps[1].images[1] = Matrix<Cyclotomic>(1, 1, Cyclotomic(1, -1));
  try {
    frobenius_verify(fixtures::s3(), irreps);
    FAIL() << "expected an input error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not multiplicative at ("), std::string::npos) << e.what();
  }
}

TEST(DegreeBound, Examples) {
  auto s3 = fixtures::s3();
  EXPECT_TRUE(degree_bound_check(*s3, {0, 1, 2}, fixtures::s3_irreps()));
  EXPECT_TRUE(degree_bound_check(*fixtures::q8(), {0, 1, 4, 5}, fixtures::q8_irreps()));
  EXPECT_FALSE(degree_bound_check(*fixtures::q8(), fixtures::q8()->all_elements(), fixtures::q8_irreps()));
  auto c4 = fixtures::c4();
  auto chars = abelian_characters(c4, c4->all_elements());
  std::vector<Representation> reps;
  for (const auto& chi : chars.values) {
    Representation rep{"chi", 1, chars.conductor, {}};
    for (const auto& v : chi) rep.images.push_back(Matrix<Cyclotomic>(1, 1, v));
    reps.push_back(rep);
  }
  EXPECT_TRUE(degree_bound_check(*c4, c4->all_elements(), reps));
}

TEST(FrobeniusAgainstExtension, BothProductsAgree) {
  EXPECT_TRUE(frobenius_matches_extension(fixtures::s3(), {0, 1, 2}, fixtures::s3_irreps()));
  EXPECT_TRUE(frobenius_matches_extension(fixtures::q8(), {0, 1, 4, 5}, fixtures::q8_irreps()));
  EXPECT_TRUE(frobenius_matches_extension(fixtures::q8(), {0, 4}, fixtures::q8_irreps()));
}
