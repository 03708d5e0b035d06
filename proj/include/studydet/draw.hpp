#pragma once

// Random draws for property suites. Scalars are uniform in {-3, ..., 3};
// cyclotomic draws fill all n power-basis slots before reduction;
// polynomial draws are a constant plus one random linear term.

#include <vector>

#include "studydet/random.hpp"
#include "studydet/regrep.hpp"
#include "studydet/tga.hpp"
#include "studydet/tower.hpp"

namespace studydet {

inline Cyclotomic random_cyclotomic(Rng& rng, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = rng.small_rational();
  return cyclo_reduce(std::move(c), n);
}

inline Rational draw(Rng& rng, const Rational&) { return rng.small_rational(); }
inline Cyclotomic draw(Rng& rng, const Cyclotomic& like) { return random_cyclotomic(rng, like.conductor()); }

template <RingElement C>
Poly<C> draw(Rng& rng, const Poly<C>& like) {
  const auto& vars = like.vars();
  auto base = like.coefficient_zero();
  auto p = Poly<C>::constant(vars, draw(rng, base));
  return p + Poly<C>::variable(vars, rng.below(vars->size()), base.one_like()).scaled(draw(rng, base));
}

/// Random element supported on `support` (all of A when empty).
template <RingElement C>
AlgebraElement<C> random_element(Rng& rng, const AlgebraPtr<C>& alg, const std::vector<std::size_t>& support = {}) {
  auto a = alg->zero();
  if (support.empty()) {
    for (std::size_t g = 0; g < alg->dimension(); ++g) a.coeff(g) = draw(rng, alg->coefficient_zero());
  } else {
    for (auto g : support) a.coeff(g) = draw(rng, alg->coefficient_zero());
  }
  return a;
}

template <RingElement C>
AMatrix<C> random_matrix(Rng& rng, const AlgebraPtr<C>& alg, std::size_t r, const std::vector<std::size_t>& support = {}) {
  AMatrix<C> a(r, r, alg->zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = random_element(rng, alg, support);
  return a;
}

/// Random coset representatives with random sign weights, e_1 = 1 kept.
inline TowerBasis random_coset_basis(Rng& rng, GroupPtr g, const std::vector<std::size_t>& lower,
                                     const std::vector<std::size_t>& upper) {
  auto canon = coset_decompose(g, lower, upper);
  std::vector<std::size_t> reps{canon.reps[0]};
  std::vector<Cyclotomic> weights{Cyclotomic(1, 1)};
  for (std::size_t i = 1; i < canon.m(); ++i) {
    reps.push_back(g->mul(canon.reps[i], canon.lower[rng.below(canon.lower.size())]));
    weights.emplace_back(1, rng.coin() ? 1 : -1);
  }
  return coset_basis(g, lower, upper, std::move(reps), std::move(weights));
}

}  // namespace studydet
