#pragma once

// Study-type determinants Sdet = Det . iota . L over a tower, and the
// classical Study determinant of rational quaternion matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "studydet/fixtures.hpp"
#include "studydet/regrep.hpp"

namespace studydet {

/// Sdet^B(a) = Det(L_{e (x) I_r}(a)) in B.
template <RingElement C>
AlgebraElement<C> sdet(const Tower<C>& t, const AMatrix<C>& a) {
  detail::require_commutative(t);
  return det(regrep_matrix(t, a));
}

enum class RowOp { AddLeftMultipleRow, AddRightMultipleColumn };

/// Applies row_i += q row_j (or col_j += col_i q) and compares Sdet.
template <RingElement C>
bool sdet_row_op_invariance(const Tower<C>& t, const AMatrix<C>& a, RowOp op, std::size_t i, std::size_t j,
                            const AlgebraElement<C>& q) {
  require_structure(a.rows() >= 2 && i != j && i < a.rows() && j < a.rows(), "row operation needs r >= 2 and i != j");
  AMatrix<C> b = a;
  for (std::size_t c = 0; c < a.rows(); ++c) {
    if (op == RowOp::AddLeftMultipleRow)
      b(i, c) = b(i, c) + q * a(j, c);
    else
      b(c, j) = b(c, j) + a(c, i) * q;
  }
  return sdet(t, b) == sdet(t, a);
}

template <RingElement C>
struct ComposeResult {
  AlgebraElement<C> via_c;
  AlgebraElement<C> via_b_then_c;
  bool equal() const { return via_c == via_b_then_c; }
};

/// Sdet^C over the basis e (x) f, against Sdet^C_{M(1,B)}(Sdet^B(a)).
template <RingElement C>
ComposeResult<C> sdet_compose(const Tower<C>& upper, const Tower<C>& lower, const AMatrix<C>& a) {
  auto ef = tower_product(upper, lower);
  detail::require_commutative(lower);
  auto direct = det(regrep_matrix(ef, a));
  auto staged = det(regrep_element(lower, sdet(upper, a)));
  return {std::move(direct), std::move(staged)};
}

/// Sdet(a) lies in B and commutes with every monomial of A.
template <RingElement C>
bool sdet_centrality(const Tower<C>& t, const AMatrix<C>& a) {
  detail::require_conditions(t, true, false, false);
  auto s = sdet(t, a);
  if (!t.in_lower_span(s)) return false;
  for (auto g : t.upper()) {
    auto x = t.algebra()->monomial(g);
    if (!(s * x == x * s)) return false;
  }
  return true;
}

/// Sdet^C(a) == (Sdet^B(a))^n with n the rank of B over C.
template <RingElement C>
bool sdet_power(const Tower<C>& upper, const Tower<C>& lower, const AMatrix<C>& a) {
  detail::require_conditions(upper, true, false, false);
  auto res = sdet_compose(upper, lower, a);
  return res.via_c == power(sdet(upper, a), static_cast<unsigned>(lower.m()));
}

// Rational quaternions H(Q) as the twisted C2 x C2 fixture, with C = Q(i)
// realized as the span of {1, i} and as Cyclotomic(4).

using Quaternion = AlgebraElement<Rational>;
using QuaternionMatrix = AMatrix<Rational>;
using GaussMatrix = Matrix<Cyclotomic>;
using RationalMatrix = Matrix<Rational>;

inline const AlgebraPtr<Rational>& quaternion_algebra() {
  static const AlgebraPtr<Rational> algebra = TwistedAlgebra<Rational>::create(fixtures::quaternion(), Rational());
  return algebra;
}

inline Quaternion quaternion(const Rational& w, const Rational& x, const Rational& y, const Rational& z) {
  return quaternion_algebra()->from_coords({w, x, y, z});
}

/// H over Q(i) with e = (1, j).
inline const Tower<Rational>& quaternion_tower() {
  static const Tower<Rational> t = make_tower(quaternion_algebra(), {0, 1});
  return t;
}

/// Q(i) over Q with f = (1, i).
inline const Tower<Rational>& gaussian_tower() {
  static const Tower<Rational> t = make_tower(quaternion_algebra(), {0}, {0, 1});
  return t;
}

/// c1 + c2 i in span{1, i} as an element of Q(zeta_4).
inline Cyclotomic to_gaussian(const Quaternion& b) {
  require_structure(b.supported_in({0, 1}), "quaternion " + b.to_string() + " is not in Q(i)");
  return Cyclotomic(4, b.coeff(0)) + Cyclotomic::zeta_power(4, 1) * b.coeff(1);
}

inline Quaternion from_gaussian(const Cyclotomic& z) {
  auto c = z.lift(4).coeffs();
  return quaternion(c[0], c[1], Rational(), Rational());
}

inline Rational real_part(const Cyclotomic& z) { return z.lift(4).coeffs()[0]; }
inline Rational imaginary_part(const Cyclotomic& z) { return z.lift(4).coeffs()[1]; }

namespace detail {

template <RingElement R, typename F>
Matrix<R> block2(std::size_t r, const R& zero, F&& entry) {
  Matrix<R> out(2 * r, 2 * r, zero);
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out(bi * r + i, bj * r + j) = entry(bi, bj, i, j);
  return out;
}

}  // namespace detail

/// psi_r(a) = [[b1, -conj(b2)], [b2, conj(b1)]] for a = b1 + j b2.
inline GaussMatrix psi(const QuaternionMatrix& a) {
  require_structure(a.is_square(), "psi needs a square matrix");
  const std::size_t r = a.rows();
  const Cyclotomic zi = Cyclotomic::zeta_power(4, 1);
  auto b1 = [&](std::size_t i, std::size_t j) { return Cyclotomic(4, a(i, j).coeff(0)) + zi * a(i, j).coeff(1); };
  // j (y - z i) = y j + z k.
  auto b2 = [&](std::size_t i, std::size_t j) { return Cyclotomic(4, a(i, j).coeff(2)) - zi * a(i, j).coeff(3); };
  return detail::block2<Cyclotomic>(r, Cyclotomic(4), [&](std::size_t bi, std::size_t bj, std::size_t i, std::size_t j) {
    if (bi == 0 && bj == 0) return b1(i, j);
    if (bi == 1 && bj == 0) return b2(i, j);
    if (bi == 0) return -b2(i, j).conj();
    return b1(i, j).conj();
  });
}

/// phi_r(c1 + i c2) = [[c1, -c2], [c2, c1]].
inline RationalMatrix phi(const GaussMatrix& b) {
  require_structure(b.is_square(), "phi needs a square matrix");
  const std::size_t r = b.rows();
  return detail::block2<Rational>(r, Rational(), [&](std::size_t bi, std::size_t bj, std::size_t i, std::size_t j) {
    Rational c1 = real_part(b(i, j)), c2 = imaginary_part(b(i, j));
    if (bi == bj) return c1;
    return bi == 0 ? -c2 : c2;
  });
}

/// iota . L_{e (x) I_r}: the same map through the regular representation.
inline GaussMatrix psi_via_regrep(const QuaternionMatrix& a) {
  return regrep_matrix(quaternion_tower(), a).map([](const Quaternion& b) { return to_gaussian(b); });
}

/// iota . L_{f (x) I_r}.
inline RationalMatrix phi_via_regrep(const GaussMatrix& b) {
  auto lifted = b.map([](const Cyclotomic& z) { return from_gaussian(z); });
  return regrep_matrix(gaussian_tower(), lifted).map([](const Quaternion& x) { return detail::identity_coefficient(x); });
}

/// Sdet(a) = Det(psi_r(a)), an element of Q(i) that is always real.
inline Cyclotomic study_det(const QuaternionMatrix& a) { return det(psi(a)); }

/// J_r = [[0, -I_r], [I_r, 0]].
template <RingElement R>
Matrix<R> j_block(std::size_t r, const R& like) {
  return detail::block2<R>(r, like.zero_like(), [&](std::size_t bi, std::size_t bj, std::size_t i, std::size_t j) {
    if (bi == bj || i != j) return like.zero_like();
    return bi == 0 ? -like.one_like() : like.one_like();
  });
}

enum class ImageKind { Phi, Psi };

struct MembershipResult {
  bool criterion = false;
  bool constructive = false;
  bool agree() const { return criterion == constructive; }
};

/// phi-image: J_r c = c J_r over Q. psi-image: J_r b = conj(b) J_r over Q(i).
/// The constructive check rebuilds a preimage from the left block column
/// and re-embeds it.
inline MembershipResult study_membership(ImageKind kind, const GaussMatrix& m) {
  require_structure(m.is_square() && m.rows() % 2 == 0, "membership needs a 2r x 2r matrix");
  const std::size_t r = m.rows() / 2;
  MembershipResult out;
  if (kind == ImageKind::Phi) {
    for (const auto& z : m.entries())
      require_structure(imaginary_part(z).is_zero(), "phi-image membership needs a rational matrix");
    auto c = m.map([](const Cyclotomic& z) { return real_part(z); });
    auto j = j_block(r, Rational());
    out.criterion = j * c == c * j;
    GaussMatrix pre(r, r, Cyclotomic(4));
    const Cyclotomic zi = Cyclotomic::zeta_power(4, 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) pre(i, k) = Cyclotomic(4, c(i, k)) + zi * c(r + i, k);
    out.constructive = phi(pre) == c;
    return out;
  }
  auto j = j_block(r, Cyclotomic(4, 1));
  auto conj = m.map([](const Cyclotomic& z) { return z.conj(); });
  out.criterion = j * m == conj * j;
  QuaternionMatrix pre(r, r, quaternion_algebra()->zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      const auto& b1 = m(i, k);
      const auto& b2 = m(r + i, k);
      pre(i, k) = quaternion(real_part(b1), imaginary_part(b1), real_part(b2), -imaginary_part(b2));
    }
  out.constructive = psi(pre) == m;
  return out;
}

}  // namespace studydet
