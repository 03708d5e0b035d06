#pragma once

// Seeded property suites. Every trial draws from its own generator,
// Rng::for_trial(seed, "<suite>/<property>", draw), so a failing draw can be
// replayed alone from the reported seed and draw index.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "studydet/draw.hpp"
#include "studydet/fixtures.hpp"
#include "studydet/groupdet.hpp"
#include "studydet/regrep.hpp"
#include "studydet/sdet.hpp"

namespace studydet {

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
};

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t trials = 0;
  std::string reproducer;

  bool pass() const { return passed == trials; }
  std::string detail() const {
    std::string s = std::to_string(passed) + "/" + std::to_string(trials) + " pass";
    if (!reproducer.empty()) s += "; first failure: " + reproducer;
    return s;
  }
};

using SuiteReport = std::vector<PropertyResult>;

/// Runs numbered draws of a property and keeps the first failing reproducer.
class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const VerifyConfig& cfg) : suite_(std::move(suite)), cfg_(cfg) {}

  /// body(rng, draw, inputs) -> bool; inputs is filled with a description of
  /// the drawn data before anything that may fail.
  template <class F>
  void property(const std::string& name, std::size_t trials, F&& body) {
    PropertyResult r{suite_ + "/" + name, 0, trials, {}};
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = Rng::for_trial(cfg_.seed, r.name, t);
      std::string inputs;
      bool ok = false;
      try {
        ok = body(rng, t, inputs);
      } catch (const std::exception& e) {
        inputs += (inputs.empty() ? "" : "; ") + std::string("exception: ") + e.what();
      }
      if (ok) {
        ++r.passed;
      } else if (r.reproducer.empty()) {
        r.reproducer = "seed " + std::to_string(cfg_.seed) + ", draw " + std::to_string(t) + ", inputs: " + inputs;
      }
    }
    report_.push_back(std::move(r));
  }

  SuiteReport take() { return std::move(report_); }
  std::size_t trials() const { return cfg_.trials; }

 private:
  std::string suite_;
  VerifyConfig cfg_;
  SuiteReport report_;
};

namespace suites {

inline Matrix<Rational> random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<Rational> e(rows * cols);
  for (auto& x : e) x = rng.small_rational();
  return Matrix<Rational>(rows, cols, std::move(e));
}

inline Permutation random_permutation(Rng& rng, std::size_t n) { return Permutation(rng.permutation(n)); }

inline AlgebraPtr<Rational> rational_group_algebra(const GroupPtr& g) {
  return TwistedAlgebra<Rational>::create(fixtures::untwisted(g), Rational());
}

inline AlgebraPtr<Cyclotomic> cyclotomic_group_algebra(const GroupPtr& g, int n) {
  return TwistedAlgebra<Cyclotomic>::create(fixtures::untwisted(g), Cyclotomic(n));
}

/// Scalar rings: associativity, distributivity and commutativity; the
/// reduction map to Q(zeta_n) is multiplicative; twisted products associate.
inline SuiteReport rings(const VerifyConfig& cfg) {
  SuiteRunner run("rings", cfg);
  const std::size_t n = cfg.trials;
  auto axioms = [](const auto& a, const auto& b, const auto& c) {
    return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a;
  };
  run.property("rational-axioms", n, [&](Rng& rng, std::size_t, std::string& in) {
    Rational a(rng.small(), rng.between(1, 3)), b(rng.small(), rng.between(1, 3)), c(rng.small(), rng.between(1, 3));
    in = a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    return axioms(a, b, c);
  });
  run.property("cyclotomic-axioms", n, [&](Rng& rng, std::size_t, std::string& in) {
    static const int conductors[] = {3, 4, 5, 8, 12};
    int m = conductors[rng.below(5)];
    auto a = random_cyclotomic(rng, m), b = random_cyclotomic(rng, m), c = random_cyclotomic(rng, m);
    in = "n=" + std::to_string(m) + ": " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
    return axioms(a, b, c);
  });
  run.property("reduction-homomorphism", n, [&](Rng& rng, std::size_t, std::string& in) {
    int m = static_cast<int>(rng.between(2, 12));
    std::vector<Rational> p(rng.between(1, 2 * m)), q(rng.between(1, 2 * m));
    for (auto& x : p) x = rng.small_rational();
    for (auto& x : q) x = rng.small_rational();
    std::vector<Rational> pq(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) pq[i + j] += p[i] * q[j];
    in = "n=" + std::to_string(m) + ", degrees " + std::to_string(p.size() - 1) + " and " + std::to_string(q.size() - 1);
    return cyclo_reduce(pq, m) == cyclo_reduce(p, m) * cyclo_reduce(q, m);
  });
  run.property("polynomial-axioms", n, [&](Rng& rng, std::size_t, std::string& in) {
    static const VarList vars = make_vars({"x", "y"});
    auto poly = [&]() {
      std::vector<Poly<Rational>::Term> terms;
      for (int k = 0; k < 3; ++k)
        terms.emplace_back(Monomial::from_exponents({static_cast<unsigned>(rng.below(3)), static_cast<unsigned>(rng.below(3))}),
                           rng.small_rational());
      return Poly<Rational>::from_terms(vars, Rational(), std::move(terms));
    };
    auto a = poly(), b = poly(), c = poly();
    in = a.to_string() + "; " + b.to_string() + "; " + c.to_string();
    return axioms(a, b, c);
  });
  run.property("twisted-associativity", n, [&](Rng& rng, std::size_t t, std::string& in) {
    switch (t % 3) {
      case 0: {
        auto h = quaternion_algebra();
        auto a = random_element(rng, h), b = random_element(rng, h), c = random_element(rng, h);
        in = "H: " + a.to_string() + "; " + b.to_string() + "; " + c.to_string();
        return (a * b) * c == a * (b * c);
      }
      case 1: {
        auto alg = cyclotomic_group_algebra(fixtures::c6(), 3);
        auto a = random_element(rng, alg), b = random_element(rng, alg), c = random_element(rng, alg);
        in = "Q(z3)C6: " + a.to_string() + "; " + b.to_string() + "; " + c.to_string();
        return (a * b) * c == a * (b * c) && a * b == b * a;
      }
      default: {
        static const VarList vars = make_vars({"x"});
        auto alg = TwistedAlgebra<Poly<Rational>>::create(fixtures::untwisted(fixtures::s3()), Poly<Rational>(vars, Rational()));
        auto a = random_element(rng, alg), b = random_element(rng, alg), c = random_element(rng, alg);
        in = "Q[x]S3: " + a.to_string() + "; " + b.to_string() + "; " + c.to_string();
        return (a * b) * c == a * (b * c);
      }
    }
  });
  return run.take();
}

/// sigma(m,n) . (X (x) Y) = Y (x) X, and det is invariant under the S_m action.
inline SuiteReport kron(const VerifyConfig& cfg) {
  SuiteRunner run("kron", cfg);
  run.property("sigma-reverses-kron", cfg.trials, [](Rng& rng, std::size_t, std::string& in) {
    std::size_t m = 1 + rng.below(4), n = 1 + rng.below(4);
    auto x = random_rational_matrix(rng, m, m), y = random_rational_matrix(rng, n, n);
    in = "X=" + x.to_string() + " Y=" + y.to_string();
    return perm_action(sigma_perm(m, n), kron(x, y)) == kron(y, x);
  });
  run.property("det-permutation-invariance", cfg.trials, [](Rng& rng, std::size_t, std::string& in) {
    std::size_t n = 1 + rng.below(5);
    auto x = random_rational_matrix(rng, n, n);
    auto s = random_permutation(rng, n);
    in = "X=" + x.to_string();
    return det(perm_action(s, x)) == det(x);
  });
  return run.take();
}

/// Blocks that are polynomials of degree <= 2 in one random matrix T commute;
/// then Det(X) = Det(sum_sigma sgn X^(1,s1) ... X^(m,sm)).
inline SuiteReport block_det(const VerifyConfig& cfg) {
  SuiteRunner run("block-det", cfg);
  run.property("commuting-blocks", cfg.trials, [](Rng& rng, std::size_t, std::string& in) {
    std::size_t m = 1 + rng.below(3), n = 1 + rng.below(3);
    auto t = random_rational_matrix(rng, n, n);
    auto id = Matrix<Rational>::identity(n, Rational());
    auto t2 = t * t;
    Matrix<Matrix<Rational>> blocks(m, m, Matrix<Rational>::zero(n, n, Rational()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        blocks(i, j) = id.left_scaled(rng.small_rational()) + t.left_scaled(rng.small_rational()) +
                       t2.left_scaled(rng.small_rational());
    auto x = flatten(blocks);
    in = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " X=" + x.to_string();
    auto outer = det(x);
    auto inner = det(block_det_inner(x, n));
    bool ok = outer == inner;
    if (m * n <= kLeibnizLimit) ok = ok && det_leibniz(x) == outer;
    if (n <= kLeibnizLimit) ok = ok && det_leibniz(block_det_inner(x, n)) == inner;
    return ok;
  });
  return run.take();
}

/// Division-free determinant against the Leibniz oracle, alternating between
/// Q and Q[x, y] entries.
inline SuiteReport det_oracle(const VerifyConfig& cfg) {
  SuiteRunner run("det-oracle", cfg);
  run.property("divfree-vs-leibniz", cfg.trials, [](Rng& rng, std::size_t t, std::string& in) {
    std::size_t n = 1 + rng.below(5);
    if (t % 2 == 0) {
      auto x = random_rational_matrix(rng, n, n);
      in = "over Q: " + x.to_string();
      auto d = det(x);
      auto cp = charpoly_coefficients(x);
      Rational sign(n % 2 == 0 ? 1 : -1);
      return d == det_leibniz(x) && cp.front() == sign * d && cp.back() == Rational(1);
    }
    static const VarList vars = make_vars({"x", "y"});
    using P = Poly<Rational>;
    Matrix<P> x(n, n, P(vars, Rational()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        P e = P::constant(vars, rng.small_rational());
        for (std::size_t v = 0; v < 2; ++v)
          if (rng.coin()) e = e + P::variable(vars, v, Rational(1)).scaled(rng.small_rational());
        x(i, j) = e;
      }
    in = "over Q[x,y]: " + x.to_string();
    return det(x) == det_leibniz(x);
  });
  return run.take();
}

/// L_{e (x) f (x) I_r}(a) = L_{f (x) I_mr}(L_{e (x) I_r}(a)), and the two
/// determinant paths agree, in four nested towers.
inline SuiteReport diagram(const VerifyConfig& cfg) {
  SuiteRunner run("diagram", cfg);
  auto both = [](const Tower<Rational>& upper, const Tower<Rational>& lower, const AMatrix<Rational>& a) {
    return diagram_check_matrix(upper, lower, a) && determinant_diagram(lower, regrep_matrix(upper, a)).equal();
  };
  run.property("Q<Q(i)<H", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    auto a = random_matrix(rng, quaternion_algebra(), 1 + rng.below(3));
    in = a.to_string();
    return both(quaternion_tower(), gaussian_tower(), a);
  });
  struct GroupTower {
    const char* name;
    GroupPtr g;
    std::vector<std::size_t> h;
  };
  for (const auto& [name, g, h] : {GroupTower{"1<C2<C4", fixtures::c4(), {0, 2}},
                                   GroupTower{"1<A<C2xC2", fixtures::klein(), {0, 1}},
                                   GroupTower{"1<R3<S3", fixtures::s3(), {0, 1, 2}}}) {
    auto alg = rational_group_algebra(g);
    auto upper = make_tower(alg, h);
    auto lower = make_tower(alg, g->trivial_subgroup(), h);
    run.property(name, cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
      auto a = random_matrix(rng, alg, 1 + rng.below(3));
      in = a.to_string();
      return both(upper, lower, a);
    });
  }
  return run.take();
}

/// Quaternionic Study determinant: S0' to S7'. S2' uses trials/4 invertible
/// and trials/10 constructed-singular draws.
inline SuiteReport study(const VerifyConfig& cfg) {
  SuiteRunner run("study", cfg);
  const auto& h = quaternion_algebra();
  auto qmat = [&](Rng& rng, std::size_t r) { return random_matrix(rng, h, r); };
  run.property("S0-psi-injective-hom", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    std::size_t r = 1 + rng.below(3);
    auto a = qmat(rng, r), b = qmat(rng, r);
    in = "a=" + a.to_string() + " b=" + b.to_string();
    bool hom = psi(a * b) == psi(a) * psi(b) && psi(a) == psi_via_regrep(a);
    auto c = psi(a).map([](const Cyclotomic& z) { return z; });
    bool phi_hom = phi(c * c) == phi(c) * phi(c) && phi(c) == phi_via_regrep(c);
    bool injective = (a == b) == (psi(a) == psi(b));
    return hom && phi_hom && injective;
  });
  run.property("S1-multiplicative", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    std::size_t r = 1 + rng.below(3);
    auto a = qmat(rng, r), b = qmat(rng, r);
    in = "a=" + a.to_string() + " b=" + b.to_string();
    return study_det(a * b) == study_det(a) * study_det(b);
  });
  run.property("S2-invertible", std::max<std::size_t>(1, cfg.trials / 4), [&](Rng& rng, std::size_t, std::string& in) {
    std::size_t r = 1 + rng.below(3);
    auto a = qmat(rng, r);
    for (int k = 0; k < 16 && study_det(a).is_zero(); ++k) a = qmat(rng, r);
    in = a.to_string();
    if (study_det(a).is_zero()) return false;
    auto inv = inverse_matrix_via_regrep(quaternion_tower(), a);
    auto id = AMatrix<Rational>::identity(r, h->one());
    return inv.has_value() && a * *inv == id && *inv * a == id;
  });
  run.property("S2-singular", std::max<std::size_t>(1, cfg.trials / 10), [&](Rng& rng, std::size_t, std::string& in) {
    std::size_t r = 1 + rng.below(3);
    auto a = qmat(rng, r);
    if (r == 1) {
      a(0, 0) = h->zero();
    } else {
      // Last row := q * (first row), a left-dependent row.
      auto q = random_element(rng, h);
      for (std::size_t c = 0; c < r; ++c) a(r - 1, c) = q * a(0, c);
    }
    in = a.to_string();
    return study_det(a).is_zero() && !inverse_matrix_via_regrep(quaternion_tower(), a).has_value();
  });
  run.property("S3-row-ops", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    std::size_t r = 2 + rng.below(2);
    auto a = qmat(rng, r);
    auto q = random_element(rng, h);
    std::size_t i = rng.below(r), j = (i + 1 + rng.below(r - 1)) % r;
    in = "a=" + a.to_string() + " q=" + q.to_string() + " i=" + std::to_string(i) + " j=" + std::to_string(j);
    return sdet_row_op_invariance(quaternion_tower(), a, RowOp::AddLeftMultipleRow, i, j, q) &&
           sdet_row_op_invariance(quaternion_tower(), a, RowOp::AddRightMultipleColumn, i, j, q);
  });
  run.property("S4-real", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    auto a = qmat(rng, 1 + rng.below(3));
    in = a.to_string();
    auto s = study_det(a);
    return imaginary_part(s).is_zero() && from_gaussian(s) == sdet(quaternion_tower(), a);
  });
  run.property("S5-phi-psi-square", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    auto a = qmat(rng, 1 + rng.below(3));
    in = a.to_string();
    auto s = real_part(study_det(a));
    return det(phi(psi(a))) == s * s;
  });
  run.property("S6-S7-membership", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    std::size_t r = 1 + rng.below(2);
    auto a = qmat(rng, r);
    GaussMatrix noise(2 * r, 2 * r, Cyclotomic(4));
    for (std::size_t i = 0; i < 2 * r; ++i)
      for (std::size_t j = 0; j < 2 * r; ++j) noise(i, j) = random_cyclotomic(rng, 4);
    in = "a=" + a.to_string() + " noise=" + noise.to_string();
    auto member = study_membership(ImageKind::Psi, psi(a));
    auto other = study_membership(ImageKind::Psi, noise);
    auto c = phi(psi(a)).map([](const Rational& x) { return Cyclotomic(4, x); });
    auto phi_member = study_membership(ImageKind::Phi, c);
    auto phi_noise = study_membership(ImageKind::Phi, noise.map([](const Cyclotomic& z) { return Cyclotomic(4, real_part(z)); }));
    return member.criterion && member.agree() && other.agree() && phi_member.criterion && phi_member.agree() &&
           phi_noise.agree();
  });
  return run.take();
}

namespace detail {

struct RationalTowerPair {
  std::string name;
  Tower<Rational> upper;
  Tower<Rational> lower;
};

inline std::vector<RationalTowerPair> sdet_towers() {
  std::vector<RationalTowerPair> out;
  out.push_back({"H/Q(i)/Q", quaternion_tower(), gaussian_tower()});
  for (auto [name, g, h] : {std::tuple{"C4/C2/1", fixtures::c4(), std::vector<std::size_t>{0, 2}},
                            std::tuple{"S3/R3/1", fixtures::s3(), std::vector<std::size_t>{0, 1, 2}}}) {
    auto alg = rational_group_algebra(g);
    out.push_back({name, make_tower(alg, h), make_tower(alg, g->trivial_subgroup(), h)});
  }
  return out;
}

}  // namespace detail

/// Study-type determinants over group-algebra towers: multiplicativity, row
/// operations, the composition theorem, centrality, and the power identity
/// where Sdet^B lands in C (the quaternion tower).
inline SuiteReport sdet(const VerifyConfig& cfg) {
  SuiteRunner run("sdet", cfg);
  const auto towers = detail::sdet_towers();
  auto pick = [&](std::size_t t) -> const detail::RationalTowerPair& { return towers[t % towers.size()]; };
  run.property("multiplicative", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    const auto& p = pick(t);
    std::size_t r = 1 + rng.below(2);
    auto a = random_matrix(rng, p.upper.algebra(), r), b = random_matrix(rng, p.upper.algebra(), r);
    in = p.name + ": a=" + a.to_string() + " b=" + b.to_string();
    return studydet::sdet(p.upper, a * b) == studydet::sdet(p.upper, a) * studydet::sdet(p.upper, b);
  });
  run.property("row-ops", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    const auto& p = pick(t);
    auto a = random_matrix(rng, p.upper.algebra(), 2);
    auto q = random_element(rng, p.upper.algebra());
    in = p.name + ": a=" + a.to_string() + " q=" + q.to_string();
    return sdet_row_op_invariance(p.upper, a, RowOp::AddLeftMultipleRow, 1, 0, q) &&
           sdet_row_op_invariance(p.upper, a, RowOp::AddRightMultipleColumn, 0, 1, q);
  });
  run.property("compose", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    const auto& p = pick(t);
    auto a = random_matrix(rng, p.upper.algebra(), 1 + rng.below(2));
    in = p.name + ": a=" + a.to_string();
    return sdet_compose(p.upper, p.lower, a).equal();
  });
  run.property("centrality", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    const auto& p = pick(t);
    auto a = random_matrix(rng, p.upper.algebra(), 1 + rng.below(2));
    in = p.name + ": a=" + a.to_string();
    return sdet_centrality(p.upper, a);
  });
  run.property("power-quaternion", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    auto a = random_matrix(rng, quaternion_algebra(), 1 + rng.below(3));
    in = a.to_string();
    return sdet_power(quaternion_tower(), gaussian_tower(), a);
  });
  return run.take();
}

/// Regular representations: homomorphism, basis independence, inverses,
/// block form, the indicator and coset formulas, determinant subring.
inline SuiteReport regrep(const VerifyConfig& cfg) {
  SuiteRunner run("regrep", cfg);
  auto q = quaternion_algebra();
  auto c4 = cyclotomic_group_algebra(fixtures::c4(), 4);
  auto s3 = cyclotomic_group_algebra(fixtures::s3(), 3);
  auto s3q = rational_group_algebra(fixtures::s3());
  const auto& tq = quaternion_tower();
  auto tc4 = make_tower(c4, {0, 2});
  auto ts3 = make_tower(s3, {0, 1, 2});
  auto ts3q = make_tower(s3q, {0, 1, 2});

  run.property("multiplicative-unital", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    auto check = [&](const auto& tower) {
      auto alg = tower.algebra();
      auto a = random_element(rng, alg), b = random_element(rng, alg);
      in = a.to_string() + "; " + b.to_string();
      auto one = regrep_element(tower, alg->one());
      return regrep_element(tower, a * b) == regrep_element(tower, a) * regrep_element(tower, b) &&
             one == decltype(one)::identity(tower.m(), alg->one());
    };
    switch (t % 3) {
      case 0: return check(tq);
      case 1: return check(tc4);
      default: return check(ts3);
    }
  });
  run.property("basis-independence", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    struct Case {
      GroupPtr g;
      std::vector<std::size_t> h;
    };
    static const Case cases[] = {{fixtures::s3(), {0, 1, 2}}, {fixtures::d4(), {0, 1, 2, 3}}, {fixtures::q8(), {0, 1, 4, 5}},
                                 {fixtures::c6(), {0, 3}}};
    const auto& c = cases[t % 4];
    auto alg = rational_group_algebra(c.g);
    auto canonical = make_tower(alg, c.h);
    Tower<Rational> alt(alg, random_coset_basis(rng, c.g, c.h, c.g->all_elements()));
    auto a = random_element(rng, alg);
    in = c.g->name() + ": " + a.to_string() + " reps " + [&] {
      std::string s;
      for (auto x : alt.basis().reps) s += c.g->element_name(x) + " ";
      return s;
    }();
    return det(regrep_element(canonical, a)) == det(regrep_element(alt, a));
  });
  run.property("invertibility", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    auto check = [&](const auto& tower, const auto& full, auto a) {
      in = a.to_string();
      auto alg = tower.algebra();
      auto inv = inverse_via_regrep(tower, a);
      bool unit = !det(regrep_element(full, a)).is_zero();
      if (inv.has_value() != unit) return false;
      return !inv || (a * *inv == alg->one() && *inv * a == alg->one());
    };
    if (t % 2 == 0) {
      auto a = random_element(rng, c4);
      // (1 + g^2)(1 - g^2) = 0 in C4, so half of these draws are zero divisors.
      if (rng.coin()) a = (c4->one() + c4->monomial(2)) * a;
      return check(tc4, make_tower(c4, {0}), a);
    }
    auto a = random_element(rng, s3q);
    if (rng.coin()) a = (s3q->one() + s3q->monomial(3)) * a;
    return check(ts3q, make_tower(s3q, {0}), a);
  });
  run.property("block-form", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    auto check = [&](const auto& tower) {
      std::size_t r = 1 + rng.below(3);
      auto a = random_matrix(rng, tower.algebra(), r);
      in = a.to_string();
      return perm_action(sigma_perm(tower.m(), r), regrep_matrix(tower, a)) == regrep_blocks(tower, a);
    };
    return t % 2 == 0 ? check(tq) : check(ts3);
  });
  run.property("indicator-and-cosets", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    auto check = [&](const auto& tower) {
      auto a = random_element(rng, tower.algebra());
      in = a.to_string();
      auto l = regrep_element(tower, a);
      return regrep_via_indicator(tower, a) == l && regrep_via_cosets(tower, a) == l;
    };
    switch (t % 3) {
      case 0: return check(tq);
      case 1: return check(tc4);
      default: return check(ts3);
    }
  });
  run.property("det-in-subring", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    // Blocks of L_{e (x) I_r}(a) over Q(i) have determinants in Q(i); the
    // full determinant lands in the real subring Q.
    auto a = random_matrix(rng, q, 1 + rng.below(3));
    in = a.to_string();
    return det(regrep_matrix(tq, a)).supported_in({0});
  });
  return run.take();
}

/// Phi_{L(a)}(a) = 0 across three towers, and the closed form for 1+2i+3j+4k.
inline SuiteReport cayley_hamilton(const VerifyConfig& cfg) {
  SuiteRunner run("cayley-hamilton", cfg);
  auto c4 = cyclotomic_group_algebra(fixtures::c4(), 4);
  auto s3 = cyclotomic_group_algebra(fixtures::s3(), 3);
  auto tc4 = make_tower(c4, {0});
  auto ts3 = make_tower(s3, {0, 1, 2});
  run.property("annihilates", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    switch (t % 3) {
      case 0: {
        auto a = random_element(rng, quaternion_algebra());
        in = "H over Q(i): " + a.to_string();
        return cayley_hamilton_check(quaternion_tower(), a);
      }
      case 1: {
        auto a = random_element(rng, c4);
        in = "Q(i)C4: " + a.to_string();
        return cayley_hamilton_check(tc4, a);
      }
      default: {
        auto a = random_element(rng, s3);
        in = "Q(z3)S3 over <r>: " + a.to_string();
        return cayley_hamilton_check(ts3, a);
      }
    }
  });
  run.property("closed-form", 1, [&](Rng&, std::size_t, std::string& in) {
    auto a = quaternion(1, 2, 3, 4);
    in = a.to_string();
    return charpoly_text(charpoly_regrep(quaternion_tower(), a)) == "x^2 - 2*x + 30" &&
           cayley_hamilton_check(quaternion_tower(), a);
  });
  return run.take();
}

/// Images of L commute with every J(e_k) and give back their preimage; random
/// points of the commutant (trials/5 of them) come from some a.
inline SuiteReport commutant(const VerifyConfig& cfg) {
  SuiteRunner run("commutant", cfg);
  auto c4 = cyclotomic_group_algebra(fixtures::c4(), 4);
  auto s3 = cyclotomic_group_algebra(fixtures::s3(), 3);
  auto tc4 = make_tower(c4, {0});
  auto ts3 = make_tower(s3, {0, 1, 2});
  run.property("forward", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    auto check = [&](const auto& tower) {
      auto a = random_element(rng, tower.algebra());
      in = a.to_string();
      auto b = regrep_element(tower, a);
      for (const auto& j : j_matrices(tower))
        if (!(j * b == b * j)) return false;
      auto res = commutant_check(tower, b);
      return res.member && res.witness_verified && res.witness && *res.witness == a;
    };
    switch (t % 3) {
      case 0: return check(quaternion_tower());
      case 1: return check(tc4);
      default: return check(ts3);
    }
  });
  const auto hq_basis = commutant_basis(quaternion_tower());
  const auto c4_basis = commutant_basis(tc4);
  run.property("reverse", std::max<std::size_t>(1, cfg.trials / 5), [&](Rng& rng, std::size_t t, std::string& in) {
    auto sample = [&](const auto& tower, const auto& basis) {
      auto b = basis.front().zero_like();
      for (const auto& v : basis) {
        auto s = draw(rng, tower.algebra()->coefficient_zero());
        b = b + v.map([&](const auto& x) { return x.scaled(s); });
      }
      in = b.to_string();
      auto res = commutant_check(tower, b);
      return res.member && res.witness_verified && res.witness && regrep_element(tower, *res.witness) == b;
    };
    return t % 2 == 0 ? sample(quaternion_tower(), hq_basis) : sample(tc4, c4_basis);
  });
  return run.take();
}

/// Group determinants: both routes, renumbering, Dedekind, the extension
/// theorem, Frobenius with bundled irreps, and basis independence of Theta(G:H).
inline SuiteReport groupdet(const VerifyConfig& cfg) {
  SuiteRunner run("groupdet", cfg);
  const std::vector<GroupPtr> groups{fixtures::c1(), fixtures::c2(), fixtures::c3(),    fixtures::c4(), fixtures::c6(),
                                     fixtures::klein(), fixtures::s3(), fixtures::d4(), fixtures::q8()};
  run.property("routes-agree", groups.size(), [&](Rng&, std::size_t t, std::string& in) {
    in = groups[t]->name();
    auto r = group_determinant(groups[t]);
    return r.routes_agree && r.theta.is_homogeneous() && r.theta.total_degree() == static_cast<int>(groups[t]->order());
  });
  run.property("renumbering", cfg.trials, [&](Rng& rng, std::size_t, std::string& in) {
    const auto& g = groups[rng.below(groups.size())];
    auto perm = rng.permutation(g->order());
    in = g->name() + " perm";
    for (auto p : perm) in += " " + std::to_string(p);
    return group_determinant_relabeled(*g, perm) == group_determinant_direct(*g);
  });
  const std::vector<GroupPtr> abelian{fixtures::c2(), fixtures::c3(), fixtures::c4(), fixtures::klein(), fixtures::c6()};
  run.property("dedekind", abelian.size(), [&](Rng&, std::size_t t, std::string& in) {
    in = abelian[t]->name();
    return dedekind_factorize(abelian[t]).ok();
  });
  const std::vector<std::pair<GroupPtr, std::vector<std::size_t>>> pairs{{fixtures::c4(), {0, 2}},
                                                                         {fixtures::s3(), {0, 1, 2}},
                                                                         {fixtures::d4(), {0, 1, 2, 3}},
                                                                         {fixtures::q8(), {0, 1, 4, 5}}};
  run.property("extension", pairs.size(), [&](Rng&, std::size_t t, std::string& in) {
    in = pairs[t].first->name();
    return extension_check(pairs[t].first, pairs[t].second).ok();
  });
  const std::vector<std::tuple<GroupPtr, std::vector<std::size_t>, std::vector<Representation>>> frob{
      {fixtures::s3(), {0, 1, 2}, fixtures::s3_irreps()}, {fixtures::q8(), {0, 1, 4, 5}, fixtures::q8_irreps()}};
  run.property("frobenius", frob.size(), [&](Rng&, std::size_t t, std::string& in) {
    const auto& [g, h, reps] = frob[t];
    in = g->name();
    return frobenius_verify(g, reps).ok() && degree_bound_check(*g, h, reps) &&
           frobenius_matches_extension(g, h, reps);
  });
  run.property("relative-basis-independence", cfg.trials, [&](Rng& rng, std::size_t t, std::string& in) {
    const auto& [g, h] = pairs[t % pairs.size()];
    int n = static_cast<int>(g->exponent_of(h));
    auto basis = random_coset_basis(rng, g, h, g->all_elements());
    in = g->name() + " reps";
    for (auto x : basis.reps) in += " " + g->element_name(x);
    return theta_relative(g, basis, n).theta.coords() == theta_relative(g, h).theta.coords();
  });
  return run.take();
}

}  // namespace suites

using SuiteFn = std::function<SuiteReport(const VerifyConfig&)>;

/// Suites in the order "all" runs them.
inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> registry{
      {"rings", suites::rings},         {"kron", suites::kron},
      {"block-det", suites::block_det}, {"det-oracle", suites::det_oracle},
      {"diagram", suites::diagram},     {"study", suites::study},
      {"sdet", suites::sdet},           {"regrep", suites::regrep},
      {"cayley-hamilton", suites::cayley_hamilton}, {"commutant", suites::commutant},
      {"groupdet", suites::groupdet}};
  return registry;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_registry()) out.push_back(name);
  out.push_back("all");
  return out;
}

/// Runs one named suite, or every suite for "all".
inline SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteReport out;
  bool found = false;
  for (const auto& [suite, fn] : suite_registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    auto part = fn(cfg);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (!found) {
    std::string known;
    for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
    throw InputError("unknown suite '" + name + "' (known: " + known + ")");
  }
  return out;
}

}  // namespace studydet
