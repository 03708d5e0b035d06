#pragma once

// Twisted group algebras R^c[G]: finite sums of group monomials with
// coefficients in a commutative ring R that is central in the algebra.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "studydet/cyclotomic.hpp"
#include "studydet/fixtures.hpp"
#include "studydet/group.hpp"
#include "studydet/polynomial.hpp"

namespace studydet {

// Scalar embeddings into coefficient rings.

inline Rational embed_rational(const Rational& q, const Rational&) { return q; }
inline Cyclotomic embed_rational(const Rational& q, const Cyclotomic& like) { return Cyclotomic(like.conductor(), q); }
template <RingElement C>
Poly<C> embed_rational(const Rational& q, const Poly<C>& like) {
  return Poly<C>::constant(like.vars(), embed_rational(q, like.coefficient_zero()));
}

inline Rational embed_scalar(const Cyclotomic& z, const Rational&) {
  require_structure(z.is_rational(), "cannot embed " + z.to_string() + " into the rationals");
  return z.rational_part();
}
inline Cyclotomic embed_scalar(const Cyclotomic& z, const Cyclotomic& like) {
  if (z.is_rational()) return Cyclotomic(like.conductor(), z.rational_part());
  return z.lift(like.conductor());
}
template <RingElement C>
Poly<C> embed_scalar(const Cyclotomic& z, const Poly<C>& like) {
  return Poly<C>::constant(like.vars(), embed_scalar(z, like.coefficient_zero()));
}

/// Field inverse in the coefficient ring, when it is a field.
inline std::optional<Rational> scalar_try_inverse(const Rational& q) { return q.try_inverse(); }
inline std::optional<Cyclotomic> scalar_try_inverse(const Cyclotomic& z) { return z.try_inverse(); }
template <RingElement C>
std::optional<Poly<C>> scalar_try_inverse(const Poly<C>&) {
  throw PreconditionError("unit check unavailable over polynomial coefficients");
}

template <RingElement C>
class AlgebraElement;

template <RingElement C>
class TwistedAlgebra : public std::enable_shared_from_this<TwistedAlgebra<C>> {
 public:
  static std::shared_ptr<const TwistedAlgebra> create(const TwistedGroup& tg, const C& coefficient_zero) {
    auto report = validate_cocycle(*tg.group, tg.cocycle);
    if (!report) throw StructuralError("cocycle on '" + tg.group->name() + "': " + report.message);
    return std::shared_ptr<const TwistedAlgebra>(new TwistedAlgebra(tg, coefficient_zero));
  }

  const GroupPtr& group() const { return group_; }
  const FiniteGroup& g() const { return *group_; }
  const Cocycle& cocycle() const { return cocycle_; }
  std::size_t dimension() const { return group_->order(); }
  const C& coefficient_zero() const { return zero_; }
  const C& coefficient_one() const { return one_; }
  const C& cocycle_value(std::size_t a, std::size_t b) const { return embedded_[a * dimension() + b]; }
  int cocycle_sign(std::size_t a, std::size_t b) const { return signs_[a * dimension() + b]; }
  bool is_twisted() const { return twisted_; }

  C embed(const Cyclotomic& z) const { return embed_scalar(z, zero_); }
  C embed(const Rational& q) const { return embed_rational(q, zero_); }

  std::shared_ptr<const TwistedAlgebra> self() const { return this->shared_from_this(); }

  AlgebraElement<C> zero() const;
  AlgebraElement<C> one() const;
  AlgebraElement<C> monomial(std::size_t g, const C& coefficient) const;
  AlgebraElement<C> monomial(std::size_t g) const { return monomial(g, one_); }
  AlgebraElement<C> scalar(const C& coefficient) const { return monomial(group_->identity(), coefficient); }
  AlgebraElement<C> from_coords(std::vector<C> coords) const;

 private:
  TwistedAlgebra(const TwistedGroup& tg, const C& coefficient_zero)
      : group_(tg.group), cocycle_(tg.cocycle), zero_(coefficient_zero.zero_like()), one_(coefficient_zero.one_like()) {
    const std::size_t n = group_->order();
    twisted_ = !cocycle_.is_trivial();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Cyclotomic& v = cocycle_(a, b);
        embedded_.push_back(embed_scalar(v, zero_));
        signs_.push_back(v.is_one() ? 1 : (-v).is_one() ? -1 : 0);
      }
  }

  GroupPtr group_;
  Cocycle cocycle_;
  C zero_;
  C one_;
  bool twisted_ = false;
  std::vector<C> embedded_;
  std::vector<int> signs_;  // +1, -1, or 0 for a general unit
};

template <RingElement C>
using AlgebraPtr = std::shared_ptr<const TwistedAlgebra<C>>;

/// Element sum_g a_g g of a twisted group algebra, stored densely.
template <RingElement C>
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr<C> algebra, std::vector<C> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    require_structure(coords_.size() == algebra_->dimension(), "coordinate vector has wrong length");
  }

  const AlgebraPtr<C>& algebra() const { return algebra_; }
  const std::vector<C>& coords() const { return coords_; }
  const C& coeff(std::size_t g) const { return coords_[g]; }
  C& coeff(std::size_t g) { return coords_[g]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }
  AlgebraElement zero_like() const { return algebra_->zero(); }
  AlgebraElement one_like() const { return algebra_->one(); }
  RingDescriptor descriptor() const {
    return RingDescriptor::twisted_group_algebra(algebra_->g().name(), algebra_->coefficient_zero().descriptor());
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < coords_.size(); ++g)
      if (!coords_[g].is_zero()) out.push_back(g);
    return out;
  }

  /// True when every monomial in the support lies in `members`.
  bool supported_in(const std::vector<std::size_t>& members) const {
    for (std::size_t g = 0; g < coords_.size(); ++g) {
      if (coords_[g].is_zero()) continue;
      if (std::find(members.begin(), members.end(), g) == members.end()) return false;
    }
    return true;
  }

  /// Multiplies every coordinate by a central scalar.
  AlgebraElement scaled(const C& s) const {
    AlgebraElement out = *this;
    for (auto& c : out.coords_)
      if (!c.is_zero()) c = c * s;
    return out;
  }

  /// "3 - 4*i", "x_e*e + x_g*g"; the identity monomial is left implicit.
  std::string to_string() const {
    std::string out;
    const auto& g = algebra_->g();
    for (std::size_t x = 0; x < coords_.size(); ++x) {
      const C& c = coords_[x];
      if (c.is_zero()) continue;
      bool negative = coefficient_sign(c) < 0;
      std::string coeff = coefficient_text(negative ? -c : c);
      std::string body;
      if (x == g.identity())
        body = coeff;
      else if (coeff == "1")
        body = g.element_name(x);
      else
        body = coeff + "*" + g.element_name(x);
      if (out.empty())
        out = negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a, b);
    AlgebraElement out = a;
    for (std::size_t g = 0; g < out.coords_.size(); ++g)
      if (!b.coords_[g].is_zero()) out.coords_[g] = out.coords_[g] + b.coords_[g];
    return out;
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a, b);
    AlgebraElement out = a;
    for (std::size_t g = 0; g < out.coords_.size(); ++g)
      if (!b.coords_[g].is_zero()) out.coords_[g] = out.coords_[g] - b.coords_[g];
    return out;
  }
  friend AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement out = a;
    for (auto& c : out.coords_)
      if (!c.is_zero()) c = -c;
    return out;
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a, b);
    const auto& alg = *a.algebra_;
    const auto& table = alg.g().table();
    AlgebraElement out = alg.zero();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      if (a.coords_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coords_.size(); ++j) {
        if (b.coords_[j].is_zero()) continue;
        C term = a.coords_[i] * b.coords_[j];
        switch (alg.cocycle_sign(i, j)) {
          case 1:
            break;
          case -1:
            term = -term;
            break;
          default:
            term = alg.cocycle_value(i, j) * term;
        }
        C& slot = out.coords_[table[i][j]];
        slot = slot + term;
      }
    }
    return out;
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return same_algebra(a, b) && a.coords_ == b.coords_;
  }

 private:
  static bool same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_ == b.algebra_ ||
           (a.algebra_->g() == b.algebra_->g() && a.algebra_->cocycle() == b.algebra_->cocycle() &&
            a.algebra_->coefficient_zero().descriptor() == b.algebra_->coefficient_zero().descriptor());
  }
  static void check_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (!same_algebra(a, b))
      throw StructuralError("descriptor mismatch: " + a.descriptor().to_string() + " vs " +
                            b.descriptor().to_string());
  }

  AlgebraPtr<C> algebra_;
  std::vector<C> coords_;
};

template <RingElement C>
AlgebraElement<C> TwistedAlgebra<C>::zero() const {
  return AlgebraElement<C>(self(), std::vector<C>(dimension(), zero_));
}

template <RingElement C>
AlgebraElement<C> TwistedAlgebra<C>::one() const {
  return monomial(group_->identity(), one_);
}

template <RingElement C>
AlgebraElement<C> TwistedAlgebra<C>::monomial(std::size_t g, const C& coefficient) const {
  require_structure(g < dimension(), "monomial index out of range");
  std::vector<C> coords(dimension(), zero_);
  coords[g] = coefficient;
  return AlgebraElement<C>(self(), std::move(coords));
}

template <RingElement C>
AlgebraElement<C> TwistedAlgebra<C>::from_coords(std::vector<C> coords) const {
  return AlgebraElement<C>(self(), std::move(coords));
}

// An algebra element used as a coefficient prints bare when it is a scalar
// multiple of the identity.
template <RingElement C>
int coefficient_sign(const AlgebraElement<C>& a) {
  return a.supported_in({a.algebra()->g().identity()}) ? coefficient_sign(a.coeff(a.algebra()->g().identity())) : 1;
}
template <RingElement C>
std::string coefficient_text(const AlgebraElement<C>& a) {
  std::size_t e = a.algebra()->g().identity();
  return a.supported_in({e}) ? coefficient_text(a.coeff(e)) : "(" + a.to_string() + ")";
}

/// sum_{s in S} x_s s over the polynomial ring with one variable x_<name>
/// per monomial of S, in the order given.
template <RingElement C>
AlgebraElement<Poly<C>> general_element(const AlgebraPtr<Poly<C>>& algebra, const std::vector<std::size_t>& support) {
  require_structure(!support.empty(), "general element needs a nonempty monomial set");
  const auto& vars = algebra->coefficient_zero().vars();
  require_structure(vars->size() >= support.size(), "not enough variables for the general element");
  auto out = algebra->zero();
  const C one = algebra->coefficient_zero().coefficient_zero().one_like();
  for (std::size_t k = 0; k < support.size(); ++k)
    out.coeff(support[k]) = Poly<C>::variable(vars, k, one);
  return out;
}

/// Variables x_<element name> for every element of g, in element order.
inline VarList group_variables(const FiniteGroup& g) {
  std::vector<std::string> names;
  for (const auto& e : g.elements()) names.push_back("x_" + e);
  return make_vars(std::move(names));
}

}  // namespace studydet
