#pragma once

// Shared fixtures and random draws for the unit tests.

#include <vector>

#include "studydet/draw.hpp"
#include "studydet/fixtures.hpp"
#include "studydet/random.hpp"
#include "studydet/regrep.hpp"
#include "studydet/tga.hpp"
#include "studydet/tower.hpp"

namespace studydet::testing {

inline AlgebraPtr<Rational> quaternions() {
  return TwistedAlgebra<Rational>::create(fixtures::quaternion(), Rational());
}

inline AlgebraElement<Rational> quat(const AlgebraPtr<Rational>& h, long w, long x, long y, long z) {
  return h->from_coords({Rational(w), Rational(x), Rational(y), Rational(z)});
}

template <RingElement C>
AlgebraPtr<C> untwisted(GroupPtr g, const C& zero) {
  return TwistedAlgebra<C>::create(fixtures::untwisted(std::move(g)), zero);
}

inline TowerBasis random_basis(Rng& rng, GroupPtr g, const std::vector<std::size_t>& lower,
                               const std::vector<std::size_t>& upper) {
  return random_coset_basis(rng, std::move(g), lower, upper);
}

}  // namespace studydet::testing
