#pragma once

// Coset bases realizing a twisted group algebra over the span of an upper
// subgroup M as a free right module over the span of a subgroup H <= M.
//
// The basis is e_i = w_i g_{r_i} with unit weights w_i. Every x in M has a
// unique decomposition x = r_i h (h in H), and in the algebra
//   g_x = u_x e_i g_h,   u_x = (w_i c(r_i, h))^{-1}.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "studydet/group.hpp"
#include "studydet/tga.hpp"

namespace studydet {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct TowerBasis {
  GroupPtr group;
  std::vector<std::size_t> upper;  // M, sorted
  std::vector<std::size_t> lower;  // H, sorted
  std::vector<std::size_t> reps;   // r_1 = identity
  std::vector<Cyclotomic> weights;
  std::vector<std::size_t> coset;  // x -> i, kNone outside M
  std::vector<std::size_t> part;   // x -> h with x = r_i h

  std::size_t m() const { return reps.size(); }
  bool in_upper(std::size_t x) const { return coset[x] != kNone; }
  bool in_lower(std::size_t x) const { return std::binary_search(lower.begin(), lower.end(), x); }
};

namespace detail {

inline std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline void fill_coset_map(TowerBasis& t) {
  const auto& g = *t.group;
  t.coset.assign(g.order(), kNone);
  t.part.assign(g.order(), kNone);
  for (std::size_t i = 0; i < t.reps.size(); ++i)
    for (auto h : t.lower) {
      std::size_t x = g.mul(t.reps[i], h);
      require_structure(std::binary_search(t.upper.begin(), t.upper.end(), x),
                        "coset representative times subgroup leaves the upper subgroup");
      require_structure(t.coset[x] == kNone, "two representatives lie in the same coset");
      t.coset[x] = i;
      t.part[x] = h;
    }
  for (auto x : t.upper) require_structure(t.coset[x] != kNone, "representatives miss a coset");
}

inline void check_subgroups(const FiniteGroup& g, const std::vector<std::size_t>& lower,
                            const std::vector<std::size_t>& upper) {
  require_structure(g.is_subgroup(upper), "upper set is not a subgroup of " + g.name());
  require_structure(g.is_subgroup(lower), "lower set is not a subgroup of " + g.name());
  for (auto h : lower)
    require_structure(std::binary_search(upper.begin(), upper.end(), h), "lower subgroup is not inside the upper one");
}

}  // namespace detail

/// Canonical coset basis: the coset of the identity first with
/// representative 1, the others ordered by and represented by their least
/// element index. All weights are 1.
inline TowerBasis coset_decompose(GroupPtr group, std::vector<std::size_t> lower, std::vector<std::size_t> upper) {
  lower = detail::sorted_unique(std::move(lower));
  upper = detail::sorted_unique(std::move(upper));
  detail::check_subgroups(*group, lower, upper);
  TowerBasis t;
  t.group = group;
  t.upper = upper;
  t.lower = lower;
  std::vector<bool> covered(group->order(), false);
  auto take = [&](std::size_t r) {
    t.reps.push_back(r);
    t.weights.emplace_back(1, 1);
    for (auto h : lower) covered[group->mul(r, h)] = true;
  };
  take(group->identity());
  for (auto x : upper)
    if (!covered[x]) take(x);
  detail::fill_coset_map(t);
  return t;
}

inline TowerBasis coset_decompose(GroupPtr group, std::vector<std::size_t> lower) {
  auto upper = group->all_elements();
  return coset_decompose(std::move(group), std::move(lower), std::move(upper));
}

/// Coset basis with explicit representatives and unit weights.
inline TowerBasis coset_basis(GroupPtr group, std::vector<std::size_t> lower, std::vector<std::size_t> upper,
                              std::vector<std::size_t> reps, std::vector<Cyclotomic> weights) {
  lower = detail::sorted_unique(std::move(lower));
  upper = detail::sorted_unique(std::move(upper));
  detail::check_subgroups(*group, lower, upper);
  require_structure(!reps.empty() && reps.size() == weights.size(), "representatives and weights differ in length");
  require_structure(reps.front() == group->identity() && weights.front().is_one(), "the first basis element must be 1");
  for (const auto& w : weights) require_structure(!w.is_zero(), "basis weights must be units");
  TowerBasis t;
  t.group = group;
  t.upper = upper;
  t.lower = lower;
  t.reps = std::move(reps);
  t.weights = std::move(weights);
  detail::fill_coset_map(t);
  return t;
}

/// An algebra together with a coset basis, with the decomposition units
/// precomputed in the coefficient ring.
template <RingElement C>
class Tower {
 public:
  Tower(AlgebraPtr<C> algebra, TowerBasis basis) : algebra_(std::move(algebra)), basis_(std::move(basis)) {
    require_structure(algebra_->g() == *basis_.group, "tower basis belongs to a different group");
    const auto& g = algebra_->g();
    const auto& c = algebra_->cocycle();
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < m(); ++i) {
      int cond = lcm_conductor(c.conductor(), basis_.weights[i].conductor());
      Cyclotomic w = basis_.weights[i].lift(cond);
      elements_.push_back(algebra_->monomial(basis_.reps[i], algebra_->embed(w)));
      std::size_t inv = g.inverse(basis_.reps[i]);
      Cyclotomic wc = w * c(basis_.reps[i], inv).lift(cond);
      inverses_.push_back(algebra_->monomial(inv, algebra_->embed(wc.inverse())));
    }
    unit_.assign(n, algebra_->coefficient_zero());
    for (std::size_t x = 0; x < n; ++x) {
      if (!basis_.in_upper(x)) continue;
      std::size_t i = basis_.coset[x];
      int cond = lcm_conductor(c.conductor(), basis_.weights[i].conductor());
      Cyclotomic d = basis_.weights[i].lift(cond) * c(basis_.reps[i], basis_.part[x]).lift(cond);
      unit_[x] = algebra_->embed(d.inverse());
    }
    // a_g g e_j = a_g w_j c(g, r_j) u_x e_i g_h with x = g r_j = r_i h.
    factor_.assign(n * m(), algebra_->coefficient_zero());
    for (auto gi : basis_.upper)
      for (std::size_t j = 0; j < m(); ++j) {
        std::size_t x = g.mul(gi, basis_.reps[j]);
        int cond = lcm_conductor(c.conductor(), basis_.weights[j].conductor());
        Cyclotomic s = basis_.weights[j].lift(cond) * c(gi, basis_.reps[j]).lift(cond);
        factor_[gi * m() + j] = algebra_->embed(s) * unit_[x];
      }
  }

  const AlgebraPtr<C>& algebra() const { return algebra_; }
  const TowerBasis& basis() const { return basis_; }
  const FiniteGroup& g() const { return algebra_->g(); }
  std::size_t m() const { return basis_.m(); }
  const std::vector<std::size_t>& lower() const { return basis_.lower; }
  const std::vector<std::size_t>& upper() const { return basis_.upper; }

  /// e_i as an algebra element, and its inverse.
  const AlgebraElement<C>& e(std::size_t i) const { return elements_[i]; }
  const AlgebraElement<C>& e_inverse(std::size_t i) const { return inverses_[i]; }

  /// Unit u_x in g_x = u_x e_i g_h.
  const C& unit(std::size_t x) const { return unit_[x]; }
  /// Scalar with g e_j = factor(g, j) e_i g_h.
  const C& factor(std::size_t g, std::size_t j) const { return factor_[g * m() + j]; }

  bool in_lower_span(const AlgebraElement<C>& b) const { return b.supported_in(basis_.lower); }
  bool in_upper_span(const AlgebraElement<C>& a) const { return a.supported_in(basis_.upper); }

 private:
  AlgebraPtr<C> algebra_;
  TowerBasis basis_;
  std::vector<AlgebraElement<C>> elements_;
  std::vector<AlgebraElement<C>> inverses_;
  std::vector<C> unit_;
  std::vector<C> factor_;
};

/// The basis e (x) f of the upper algebra over the bottom subgroup, with
/// position k m + i holding e_i f_k.
template <RingElement C>
Tower<C> tower_product(const Tower<C>& upper, const Tower<C>& lower) {
  require_structure(upper.lower() == lower.upper(), "towers are not nested: the middle subgroups differ");
  const auto& g = upper.g();
  const auto& c = upper.algebra()->cocycle();
  const auto& e = upper.basis();
  const auto& f = lower.basis();
  std::vector<std::size_t> reps;
  std::vector<Cyclotomic> weights;
  for (std::size_t k = 0; k < f.m(); ++k)
    for (std::size_t i = 0; i < e.m(); ++i) {
      reps.push_back(g.mul(e.reps[i], f.reps[k]));
      int cond = lcm_conductor(lcm_conductor(c.conductor(), e.weights[i].conductor()), f.weights[k].conductor());
      weights.push_back(e.weights[i].lift(cond) * f.weights[k].lift(cond) * c(e.reps[i], f.reps[k]).lift(cond));
    }
  return Tower<C>(upper.algebra(),
                  coset_basis(e.group, f.lower, e.upper, std::move(reps), std::move(weights)));
}

/// The basis conditions (i)-(vi) and the group axioms for (eB, *).
struct BasisConditions {
  bool invertible = false;          // (i)
  bool conjugation_closed = false;  // (ii)
  bool products_closed = false;     // (iii)
  bool has_identity = false;        // (iv)
  bool has_inverses = false;        // (v)
  bool commuting = false;           // (vi)
  bool coset_group = false;         // (eB, *) satisfies the group axioms
  std::string detail;

  bool i_ii() const { return invertible && conjugation_closed; }
  bool iii_v() const { return products_closed && has_identity && has_inverses && coset_group; }
  bool iii_vi() const { return iii_v() && commuting; }
};

template <RingElement C>
BasisConditions basis_conditions(const Tower<C>& t) {
  BasisConditions out;
  const auto& g = t.g();
  const auto& b = t.basis();
  const std::size_t m = t.m();
  auto note = [&](const std::string& s) {
    if (out.detail.empty()) out.detail = s;
  };
  auto one = t.algebra()->one();

  out.invertible = true;
  for (std::size_t i = 0; i < m; ++i)
    if (!(t.e(i) * t.e_inverse(i) == one) || !(t.e_inverse(i) * t.e(i) == one)) {
      out.invertible = false;
      note("(i) fails for e_" + std::to_string(i + 1));
    }

  out.conjugation_closed = true;
  for (std::size_t i = 0; i < m && out.conjugation_closed; ++i)
    for (auto h : b.lower) {
      auto conj = t.e_inverse(i) * t.algebra()->monomial(h) * t.e(i);
      if (!conj.supported_in(b.lower)) {
        out.conjugation_closed = false;
        note("(ii) fails: e_" + std::to_string(i + 1) + "^-1 " + g.element_name(h) + " e_" + std::to_string(i + 1) +
             " is not in B");
        break;
      }
    }

  // e_i B * e_j B = {e_i e_j b} is the coset of r_i r_j; product[i][j] is its
  // index when it is one of the e_k B.
  std::vector<std::vector<std::size_t>> product(m, std::vector<std::size_t>(m, kNone));
  out.products_closed = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t x = g.mul(b.reps[i], b.reps[j]);
      std::vector<std::size_t> set;
      for (auto h : b.lower) set.push_back(g.mul(x, h));
      std::sort(set.begin(), set.end());
      for (std::size_t k = 0; k < m && product[i][j] == kNone; ++k) {
        std::vector<std::size_t> coset_k;
        for (auto h : b.lower) coset_k.push_back(g.mul(b.reps[k], h));
        std::sort(coset_k.begin(), coset_k.end());
        if (coset_k == set) product[i][j] = k;
      }
      if (product[i][j] == kNone) {
        out.products_closed = false;
        note("(iii) fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }

  std::size_t unit_index = kNone;
  for (std::size_t k = 0; k < m && unit_index == kNone; ++k)
    if (b.coset[b.reps[k]] == k && b.in_lower(b.reps[k])) unit_index = k;
  out.has_identity = unit_index != kNone;
  if (!out.has_identity) note("(iv) fails: no e_k with e_k B = B");

  out.has_inverses = out.products_closed && out.has_identity;
  for (std::size_t i = 0; i < m && out.has_inverses; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m && !found; ++j) found = product[i][j] == unit_index;
    if (!found) {
      out.has_inverses = false;
      note("(v) fails for e_" + std::to_string(i + 1));
    }
  }

  out.commuting = out.products_closed;
  for (std::size_t i = 0; i < m && out.commuting; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (product[i][j] != product[j][i]) {
        out.commuting = false;
        note("(vi) fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        break;
      }

  out.coset_group = out.products_closed && out.has_identity && out.has_inverses;
  for (std::size_t i = 0; i < m && out.coset_group; ++i) {
    if (product[unit_index][i] != i || product[i][unit_index] != i) {
      out.coset_group = false;
      note("(eB,*) identity axiom fails");
    }
    for (std::size_t j = 0; j < m && out.coset_group; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (product[product[i][j]][k] != product[i][product[j][k]]) {
          out.coset_group = false;
          note("(eB,*) is not associative at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
               std::to_string(k + 1) + ")");
          break;
        }
  }
  return out;
}

/// The span of `members` is commutative: they commute and c is symmetric on them.
template <RingElement C>
bool span_commutative(const TwistedAlgebra<C>& alg, const std::vector<std::size_t>& members) {
  const auto& g = alg.g();
  const auto& c = alg.cocycle();
  for (auto a : members)
    for (auto b : members)
      if (g.mul(a, b) != g.mul(b, a) || !(c(a, b) == c(b, a))) return false;
  return true;
}

/// B = span of H is commutative: H abelian and c symmetric on H.
template <RingElement C>
bool subalgebra_commutative(const Tower<C>& t) {
  return span_commutative(*t.algebra(), t.lower());
}

template <RingElement C>
Tower<C> make_tower(const AlgebraPtr<C>& algebra, const std::vector<std::size_t>& lower) {
  return Tower<C>(algebra, coset_decompose(algebra->group(), lower));
}

template <RingElement C>
Tower<C> make_tower(const AlgebraPtr<C>& algebra, const std::vector<std::size_t>& lower,
                    const std::vector<std::size_t>& upper) {
  return Tower<C>(algebra, coset_decompose(algebra->group(), lower, upper));
}

}  // namespace studydet
