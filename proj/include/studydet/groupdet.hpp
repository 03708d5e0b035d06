#pragma once

// Group determinants Theta(G), abelian characters, Dedekind and Frobenius
// factorizations, and the relative determinant Theta(G:H).

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "studydet/regrep.hpp"
#include "studydet/representation.hpp"

namespace studydet {

using QPoly = Poly<Rational>;
using ZPoly = Poly<Cyclotomic>;

inline constexpr std::size_t kGroupBudget = 8;

inline void require_group_budget(const FiniteGroup& g) {
  if (g.order() > kGroupBudget)
    throw PreconditionError("size budget: |G| = " + std::to_string(g.order()) + " exceeds " +
                            std::to_string(kGroupBudget));
}

inline ZPoly to_cyclotomic(const QPoly& p, int conductor) {
  return p.map_coefficients([conductor](const Rational& q) { return Cyclotomic(conductor, q); }, Cyclotomic(conductor));
}

inline ZPoly lift_poly(const ZPoly& p, int conductor) {
  return p.map_coefficients([conductor](const Cyclotomic& z) { return z.lift(conductor); }, Cyclotomic(conductor));
}

/// Det(x_{g h^-1}) by permutation expansion; every entry is a single variable.
inline QPoly group_determinant_direct(const FiniteGroup& g) {
  require_group_budget(g);
  const std::size_t n = g.order();
  auto vars = group_variables(g);
  std::vector<std::vector<std::size_t>> var(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) var[a][b] = g.mul(a, g.inverse(b));
  std::unordered_map<Monomial, long, MonomialHash> acc;
  for_each_permutation(n, [&](const std::vector<std::size_t>& p, int sign) {
    std::vector<unsigned> e(n, 0);
    for (std::size_t a = 0; a < n; ++a) ++e[var[a][p[a]]];
    acc[Monomial::from_exponents(e)] += sign;
  });
  std::vector<QPoly::Term> terms;
  for (const auto& [m, c] : acc)
    if (c != 0) terms.emplace_back(m, Rational(c));
  return QPoly::from_terms(vars, Rational(), std::move(terms));
}

/// Det(sum_g x_g L_G(g)): the regular representation of the general element
/// over the trivial subgroup, with a division-free determinant.
inline QPoly group_determinant_regrep(const GroupPtr& g) {
  require_group_budget(*g);
  auto vars = group_variables(*g);
  auto alg = TwistedAlgebra<QPoly>::create(fixtures::untwisted(g), QPoly(vars, Rational()));
  auto t = make_tower(alg, g->trivial_subgroup());
  auto l = regrep_element(t, general_element(alg, g->all_elements()));
  return det(l.map([](const AlgebraElement<QPoly>& x) { return detail::identity_coefficient(x); }));
}

struct GroupDeterminant {
  QPoly theta;
  bool routes_agree = false;
};

inline GroupDeterminant group_determinant(const GroupPtr& g) {
  auto direct = group_determinant_direct(*g);
  auto via_regrep = group_determinant_regrep(g);
  bool agree = direct == via_regrep;
  return {std::move(direct), agree};
}

/// Theta of the group with element g moved to position perm[g], its
/// variables renamed back to the original order.
inline QPoly group_determinant_relabeled(const FiniteGroup& g, const std::vector<std::size_t>& perm) {
  auto moved = g.relabeled(perm);
  auto theta = group_determinant_direct(moved);
  std::vector<std::size_t> back(perm.size());
  for (std::size_t a = 0; a < perm.size(); ++a) back[perm[a]] = a;
  return theta.rename(group_variables(g), back);
}

/// Homomorphisms from an abelian subgroup into the roots of unity of order
/// dividing its exponent. values[c][g] is chi_c(g), zero off the subgroup.
struct CharacterTable {
  GroupPtr group;
  std::vector<std::size_t> members;
  int conductor = 1;
  std::vector<std::vector<Cyclotomic>> values;

  std::size_t size() const { return values.size(); }
};

inline void require_abelian_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& members) {
  require_structure(g.is_subgroup(members), "not a subgroup of " + g.name());
  if (!g.commute_on(members)) throw PreconditionError("subgroup must be abelian");
}

inline CharacterTable abelian_characters(const GroupPtr& g, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  require_abelian_subgroup(*g, members);
  const int n = static_cast<int>(g->exponent_of(members));
  const std::size_t e = g->identity();

  // Greedy generating set: each generator is the least element outside the
  // span of the previous ones.
  std::vector<std::size_t> gens;
  std::vector<bool> in_span(g->order(), false);
  in_span[e] = true;
  for (auto x : members) {
    if (in_span[x]) continue;
    gens.push_back(x);
    std::vector<std::size_t> span;
    for (std::size_t y = 0; y < g->order(); ++y)
      if (in_span[y]) span.push_back(y);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t k = 0, sz = span.size(); k < sz; ++k)
        for (auto gen : gens) {
          std::size_t z = g->mul(span[k], gen);
          if (!in_span[z]) {
            in_span[z] = true;
            span.push_back(z);
            grew = true;
          }
        }
    }
  }

  CharacterTable table{g, members, n, {}};
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> order(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) order[k] = static_cast<int>(g->element_order(gens[k]));
  while (true) {
    // chi as exponents of zeta_n, propagated from the identity.
    std::vector<int> expo(g->order(), -1);
    expo[e] = 0;
    std::vector<std::size_t> frontier{e};
    bool consistent = true;
    for (std::size_t head = 0; head < frontier.size() && consistent; ++head) {
      std::size_t y = frontier[head];
      for (std::size_t k = 0; k < gens.size() && consistent; ++k) {
        std::size_t z = g->mul(y, gens[k]);
        int v = (expo[y] + choice[k] * (n / order[k])) % n;
        if (expo[z] < 0) {
          expo[z] = v;
          frontier.push_back(z);
        } else if (expo[z] != v) {
          consistent = false;
        }
      }
    }
    if (consistent) {
      std::vector<Cyclotomic> row(g->order(), Cyclotomic(n));
      for (auto x : members) row[x] = Cyclotomic::zeta_power(n, expo[x]);
      table.values.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == order[k]) choice[k++] = 0;
    if (k == gens.size()) break;
  }
  require_structure(table.size() == members.size(), "character enumeration found the wrong number of characters");
  return table;
}

/// sum_g chi(g) chi'(g^-1) = |H| [chi = chi'] for every pair.
inline bool characters_orthogonal(const CharacterTable& t) {
  const auto& g = *t.group;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) {
      Cyclotomic sum(t.conductor);
      for (auto x : t.members) sum = sum + t.values[a][x] * t.values[b][g.inverse(x)];
      Cyclotomic expected(t.conductor, a == b ? Rational(static_cast<long>(t.members.size())) : Rational());
      if (!(sum == expected)) return false;
    }
  return true;
}

struct Factor {
  std::string label;
  ZPoly poly;
  unsigned multiplicity = 1;
};

struct FactorizationReport {
  std::vector<Factor> factors;
  bool product_check = false;
  bool degrees_ok = true;
  std::string target;  // canonical text of Theta(G)
  std::string detail;

  bool ok() const { return product_check && degrees_ok; }
};

namespace detail {

inline void finish_report(FactorizationReport& r, const QPoly& theta) {
  int n = 1;
  for (const auto& f : r.factors) n = lcm_conductor(n, f.poly.coefficient_zero().conductor());
  ZPoly product = ZPoly::constant(theta.vars(), Cyclotomic(n, 1));
  for (const auto& f : r.factors) product = product * power(lift_poly(f.poly, n), f.multiplicity);
  r.product_check = product == to_cyclotomic(theta, n);
  r.target = theta.to_string();
  if (!r.product_check) r.detail = "product expands to " + product.to_string();
}

}  // namespace detail

/// Theta(G) = prod over characters chi of sum_g chi(g) x_g, for abelian G.
inline FactorizationReport dedekind_factorize(const GroupPtr& g) {
  if (!g->is_abelian()) throw PreconditionError("subgroup must be abelian: G itself is not");
  require_group_budget(*g);
  auto chars = abelian_characters(g, g->all_elements());
  auto vars = group_variables(*g);
  FactorizationReport r;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    ZPoly f(vars, Cyclotomic(chars.conductor));
    for (std::size_t x = 0; x < g->order(); ++x)
      f = f + ZPoly::variable(vars, x, chars.values[c][x]);
    r.factors.push_back({"chi_" + std::to_string(c), std::move(f), 1});
  }
  for (const auto& f : r.factors) r.degrees_ok = r.degrees_ok && f.poly.is_homogeneous() && f.poly.total_degree() == 1;
  detail::finish_report(r, group_determinant_direct(*g));
  return r;
}

/// Theta(G:H) = Det L(X_G) over B = Q(zeta)[x_g]H, an element of the
/// commutative span of H; each coordinate has degree [G:H].
struct RelativeDeterminant {
  AlgebraPtr<ZPoly> algebra;
  std::vector<std::size_t> subgroup;
  std::size_t index = 1;
  AlgebraElement<ZPoly> theta;
  bool degrees_ok = false;

  /// chi(Theta(G:H)) = sum_h chi(h) c_h.
  ZPoly apply(const std::vector<Cyclotomic>& chi) const {
    const auto& zero = algebra->coefficient_zero();
    int n = lcm_conductor(zero.coefficient_zero().conductor(), chi.front().conductor());
    ZPoly out(zero.vars(), Cyclotomic(n));
    for (auto h : subgroup) {
      if (theta.coeff(h).is_zero()) continue;
      Cyclotomic v = chi[h].lift(n);
      out = out + lift_poly(theta.coeff(h), n).map_coefficients([&](const Cyclotomic& c) { return c * v; }, Cyclotomic(n));
    }
    return out;
  }
};

inline RelativeDeterminant theta_relative(const GroupPtr& g, const TowerBasis& basis, int conductor) {
  require_abelian_subgroup(*g, basis.lower);
  require_group_budget(*g);
  auto vars = group_variables(*g);
  auto alg = TwistedAlgebra<ZPoly>::create(fixtures::untwisted(g), ZPoly(vars, Cyclotomic(conductor)));
  Tower<ZPoly> t(alg, basis);
  auto theta = det(regrep_element(t, general_element(alg, g->all_elements())));
  RelativeDeterminant out{alg, basis.lower, basis.m(), theta, true};
  for (auto h : basis.lower) {
    const auto& c = theta.coeff(h);
    if (c.is_zero()) continue;
    if (!c.is_homogeneous() || c.total_degree() != static_cast<int>(basis.m())) out.degrees_ok = false;
  }
  return out;
}

inline RelativeDeterminant theta_relative(const GroupPtr& g, const std::vector<std::size_t>& subgroup,
                                          int conductor = 0) {
  require_abelian_subgroup(*g, subgroup);
  if (conductor == 0) conductor = static_cast<int>(g->exponent_of(subgroup));
  return theta_relative(g, coset_decompose(g, subgroup), conductor);
}

/// Theta(G) = prod over chi in the dual of H of chi(Theta(G:H)).
inline FactorizationReport extension_check(const GroupPtr& g, const std::vector<std::size_t>& subgroup) {
  auto rel = theta_relative(g, subgroup);
  auto chars = abelian_characters(g, subgroup);
  FactorizationReport r;
  r.degrees_ok = rel.degrees_ok;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    auto f = rel.apply(chars.values[c]);
    if (!f.is_homogeneous() || f.total_degree() != static_cast<int>(rel.index)) r.degrees_ok = false;
    r.factors.push_back({"chi_" + std::to_string(c) + "(Theta(G:H))", std::move(f), 1});
  }
  detail::finish_report(r, group_determinant_direct(*g));
  if (!rel.degrees_ok) r.detail += (r.detail.empty() ? "" : "; ") + std::string("a coordinate of Theta(G:H) has the wrong degree");
  return r;
}

/// Validates supplied irreducible representations: multiplicativity and
/// sum of squared degrees equal to |G|.
inline void validate_irreps(const FiniteGroup& g, const std::vector<Representation>& irreps) {
  if (irreps.empty()) throw InputError("no representations supplied");
  std::size_t squares = 0;
  for (const auto& rep : irreps) {
    auto report = validate_representation(g, rep);
    if (!report) throw InputError(report.message);
    squares += rep.degree * rep.degree;
  }
  if (squares != g.order())
    throw InputError("degree bookkeeping: sum of squared degrees is " + std::to_string(squares) + ", expected |G| = " +
                     std::to_string(g.order()));
}

/// Det(phi(X_G)) = Det(sum_g x_g phi(g)) over Q(zeta)[x_g].
inline ZPoly representation_determinant(const FiniteGroup& g, const Representation& rep) {
  auto vars = group_variables(g);
  const Cyclotomic zero(rep.conductor);
  Matrix<ZPoly> m(rep.degree, rep.degree, ZPoly(vars, zero));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < rep.degree; ++i)
      for (std::size_t j = 0; j < rep.degree; ++j) {
        const auto& c = rep.images[x](i, j);
        if (!c.is_zero()) m(i, j) = m(i, j) + ZPoly::variable(vars, x, c.lift(rep.conductor));
      }
  return det(m);
}

/// Theta(G) = prod over phi of Det(phi(X_G))^deg(phi).
inline FactorizationReport frobenius_verify(const GroupPtr& g, const std::vector<Representation>& irreps) {
  require_group_budget(*g);
  validate_irreps(*g, irreps);
  FactorizationReport r;
  for (const auto& rep : irreps) {
    auto f = representation_determinant(*g, rep);
    if (!f.is_homogeneous() || f.total_degree() != static_cast<int>(rep.degree)) r.degrees_ok = false;
    r.factors.push_back({"Det(" + rep.name + "(X))", std::move(f), static_cast<unsigned>(rep.degree)});
  }
  detail::finish_report(r, group_determinant_direct(*g));
  return r;
}

/// Every supplied degree is at most [G:H].
inline bool degree_bound_check(const FiniteGroup& g, const std::vector<std::size_t>& subgroup,
                               const std::vector<Representation>& irreps) {
  require_structure(g.is_subgroup(subgroup), "not a subgroup of " + g.name());
  const std::size_t index = g.order() / subgroup.size();
  for (const auto& rep : irreps)
    if (rep.degree > index) return false;
  return true;
}

/// prod_i Det(phi_i(X))^{d_i} == prod_chi chi(Theta(G:H)), both expanded.
inline bool frobenius_matches_extension(const GroupPtr& g, const std::vector<std::size_t>& subgroup,
                                        const std::vector<Representation>& irreps) {
  validate_irreps(*g, irreps);
  auto chars = abelian_characters(g, subgroup);
  int n = chars.conductor;
  for (const auto& rep : irreps) n = lcm_conductor(n, rep.conductor);
  auto rel = theta_relative(g, subgroup, n);
  auto vars = group_variables(*g);
  ZPoly lhs = ZPoly::constant(vars, Cyclotomic(n, 1));
  for (const auto& rep : irreps)
    lhs = lhs * power(lift_poly(representation_determinant(*g, rep), n), static_cast<unsigned>(rep.degree));
  ZPoly rhs = ZPoly::constant(vars, Cyclotomic(n, 1));
  for (const auto& chi : chars.values) rhs = rhs * lift_poly(rel.apply(chi), n);
  return lhs == rhs;
}

}  // namespace studydet
