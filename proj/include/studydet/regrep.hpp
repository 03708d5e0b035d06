#pragma once

// Left regular representations of a twisted group algebra A over the span B
// of a subgroup, computed from a coset basis: a e = e L_e(a).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "studydet/matrix.hpp"
#include "studydet/tga.hpp"
#include "studydet/tower.hpp"

namespace studydet {

template <RingElement C>
using AMatrix = Matrix<AlgebraElement<C>>;

namespace detail {

template <RingElement C>
void require_in_upper(const Tower<C>& t, const AlgebraElement<C>& a) {
  require_structure(t.in_upper_span(a), "element " + a.to_string() + " is outside the algebra of this tower");
}

template <RingElement C>
void require_commutative(const Tower<C>& t) {
  if (!subalgebra_commutative(t)) throw PreconditionError("B is not commutative for this tower");
}

template <RingElement C>
BasisConditions require_conditions(const Tower<C>& t, bool i_ii, bool iii_v, bool vi) {
  auto bc = basis_conditions(t);
  if (i_ii && !bc.i_ii()) throw PreconditionError("basis conditions (i)+(ii) fail: " + bc.detail);
  if (iii_v && !bc.iii_v()) throw PreconditionError("basis conditions (iii)-(v) fail: " + bc.detail);
  if (vi && !bc.commuting) throw PreconditionError("basis condition (vi) fails: " + bc.detail);
  return bc;
}

/// Element of A supported on the identity, as a scalar.
template <RingElement C>
const C& identity_coefficient(const AlgebraElement<C>& a) {
  std::size_t e = a.algebra()->g().identity();
  require_structure(a.supported_in({e}), "expected a scalar element, got " + a.to_string());
  return a.coeff(e);
}

}  // namespace detail

/// L_e(a): the m x m matrix over B with a e_j = sum_i e_i L_ij.
template <RingElement C>
AMatrix<C> regrep_element(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_in_upper(t, a);
  const auto& alg = *t.algebra();
  const auto& b = t.basis();
  const std::size_t m = t.m();
  std::vector<AlgebraElement<C>> entries(m * m, alg.zero());
  for (auto g : b.upper) {
    const C& ag = a.coeff(g);
    if (ag.is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t x = alg.g().mul(g, b.reps[j]);
      C& slot = entries[b.coset[x] * m + j].coeff(b.part[x]);
      slot = slot + ag * t.factor(g, j);
    }
  }
  return AMatrix<C>(m, m, std::move(entries));
}

/// L_{e (x) I_r}(a) = sum_ij L_e(a_ij) (x) E_ij, an mr x mr matrix over B.
/// Entry (k r + i, l r + j) is L_e(a_ij)_kl.
template <RingElement C>
AMatrix<C> regrep_matrix(const Tower<C>& t, const AMatrix<C>& a) {
  require_structure(a.is_square(), "regular representation of a non-square matrix");
  const std::size_t r = a.rows(), m = t.m();
  AMatrix<C> out(m * r, m * r, t.algebra()->zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (a(i, j).is_zero()) continue;
      auto l = regrep_element(t, a(i, j));
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < m; ++q) out(k * r + i, q * r + j) = l(k, q);
    }
  return out;
}

/// Block matrix (L_e(a_ij))_ij, flattened: entry (i m + k, j m + l) is L_e(a_ij)_kl.
template <RingElement C>
AMatrix<C> regrep_blocks(const Tower<C>& t, const AMatrix<C>& a) {
  const std::size_t r = a.rows(), m = t.m();
  Matrix<AMatrix<C>> blocks(r, r, AMatrix<C>(m, m, t.algebra()->zero()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) blocks(i, j) = regrep_element(t, a(i, j));
  return flatten(blocks);
}

/// Coordinates b with a = sum_k e_k b_k, b_k in B.
template <RingElement C>
std::vector<AlgebraElement<C>> decompose(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_in_upper(t, a);
  const auto& b = t.basis();
  std::vector<AlgebraElement<C>> out(t.m(), t.algebra()->zero());
  for (auto x : b.upper) {
    if (a.coeff(x).is_zero()) continue;
    C& slot = out[b.coset[x]].coeff(b.part[x]);
    slot = slot + a.coeff(x) * t.unit(x);
  }
  return out;
}

template <RingElement C>
AlgebraElement<C> compose(const Tower<C>& t, const std::vector<AlgebraElement<C>>& b) {
  require_structure(b.size() == t.m(), "coordinate vector has wrong length");
  auto out = t.algebra()->zero();
  for (std::size_t k = 0; k < t.m(); ++k)
    if (!b[k].is_zero()) out = out + t.e(k) * b[k];
  return out;
}

/// 1_B(e_i^{-1} e_k e_j): 1 if the product lies in B, else 0.
template <RingElement C>
bool indicator(const Tower<C>& t, std::size_t i, std::size_t k, std::size_t j) {
  const auto& g = t.g();
  const auto& b = t.basis();
  std::size_t x = g.mul(g.mul(g.inverse(b.reps[i]), b.reps[k]), b.reps[j]);
  return b.in_lower(x);
}

/// L_{eB}(e_k B): the 0/1 matrix of the induced coset product, over A.
template <RingElement C>
AMatrix<C> coset_matrix(const Tower<C>& t, std::size_t k) {
  const std::size_t m = t.m();
  AMatrix<C> out(m, m, t.algebra()->zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (indicator(t, i, k, j)) out(i, j) = t.algebra()->one();
  return out;
}

/// P(e) = diag(e_1, ..., e_m) and its inverse.
template <RingElement C>
AMatrix<C> basis_diagonal(const Tower<C>& t, bool inverse) {
  AMatrix<C> out(t.m(), t.m(), t.algebra()->zero());
  for (std::size_t i = 0; i < t.m(); ++i) out(i, i) = inverse ? t.e_inverse(i) : t.e(i);
  return out;
}

/// L_e(a)_ij = sum_k 1_B(e_i^{-1} e_k e_j) e_i^{-1} e_k b_k e_j.
template <RingElement C>
AMatrix<C> regrep_via_indicator(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_conditions(t, false, true, false);
  auto b = decompose(t, a);
  const std::size_t m = t.m();
  AMatrix<C> out(m, m, t.algebra()->zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (!b[k].is_zero() && indicator(t, i, k, j))
          out(i, j) = out(i, j) + t.e_inverse(i) * t.e(k) * b[k] * t.e(j);
  return out;
}

/// P(e)^{-1} (sum_k L_{eB}(e_k B) e_k b_k) P(e), computed with matrix products over A.
template <RingElement C>
AMatrix<C> regrep_via_cosets(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_conditions(t, false, true, false);
  auto b = decompose(t, a);
  const std::size_t m = t.m();
  AMatrix<C> sum(m, m, t.algebra()->zero());
  for (std::size_t k = 0; k < m; ++k)
    if (!b[k].is_zero()) sum = sum + coset_matrix(t, k).right_scaled(t.e(k) * b[k]);
  return basis_diagonal(t, true) * sum * basis_diagonal(t, false);
}

/// J(e_k) = P(e)^{-1} L_{eB}(e_k B) P(e), k = 0..m-1.
template <RingElement C>
std::vector<AMatrix<C>> j_matrices(const Tower<C>& t) {
  detail::require_conditions(t, false, true, false);
  std::vector<AMatrix<C>> out;
  auto p = basis_diagonal(t, false), pinv = basis_diagonal(t, true);
  for (std::size_t k = 0; k < t.m(); ++k) out.push_back(pinv * coset_matrix(t, k) * p);
  return out;
}

namespace detail {

/// d^{-1} for d in the commutative subalgebra B, through the regular
/// representation of B over the coefficients; nullopt when d is not a unit.
template <RingElement C>
std::optional<AlgebraElement<C>> invert_in_lower(const Tower<C>& t, const AlgebraElement<C>& d) {
  Tower<C> tb(t.algebra(), coset_decompose(t.algebra()->group(), t.g().trivial_subgroup(), t.lower()));
  auto l = regrep_element(tb, d).map([](const AlgebraElement<C>& x) { return identity_coefficient(x); });
  C c = det(l);
  auto cinv = scalar_try_inverse(c);
  if (!cinv) return std::nullopt;
  auto adj = adjugate(l);
  auto out = t.algebra()->zero();
  for (std::size_t k = 0; k < tb.m(); ++k)
    if (!adj(k, 0).is_zero()) out = out + tb.e(k).scaled(adj(k, 0) * *cinv);
  return out;
}

}  // namespace detail

/// a^{-1} = sum_i e_i (L_e(a)^{-1})_{i1}, or nullopt when det L_e(a) is not a
/// unit of B. Needs field coefficients to decide units.
template <RingElement C>
std::optional<AlgebraElement<C>> inverse_via_regrep(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_commutative(t);
  auto l = regrep_element(t, a);
  auto dinv = detail::invert_in_lower(t, det(l));
  if (!dinv) return std::nullopt;
  auto adj = adjugate(l);
  auto out = t.algebra()->zero();
  for (std::size_t i = 0; i < t.m(); ++i) out = out + t.e(i) * (adj(i, 0) * *dinv);
  return out;
}

/// Inverse of a square matrix over A through L_{e (x) I_r}.
template <RingElement C>
std::optional<AMatrix<C>> inverse_matrix_via_regrep(const Tower<C>& t, const AMatrix<C>& a) {
  detail::require_commutative(t);
  auto l = regrep_matrix(t, a);
  auto dinv = detail::invert_in_lower(t, det(l));
  if (!dinv) return std::nullopt;
  auto adj = adjugate(l);
  const std::size_t r = a.rows();
  AMatrix<C> out(r, r, t.algebra()->zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < t.m(); ++k) {
        const auto& x = adj(k * r + i, j);
        if (!x.is_zero()) out(i, j) = out(i, j) + t.e(k) * (x * *dinv);
      }
  return out;
}

/// Coefficients b_0, ..., b_m of Det(x I - L_e(a)), lowest degree first.
template <RingElement C>
std::vector<AlgebraElement<C>> charpoly_regrep(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_commutative(t);
  return charpoly_coefficients(regrep_element(t, a));
}

/// Characteristic polynomial as text in `var`, coefficients over B.
template <RingElement C>
std::string charpoly_text(const std::vector<AlgebraElement<C>>& coeffs, const std::string& var = "x") {
  std::vector<typename Poly<AlgebraElement<C>>::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    terms.emplace_back(Monomial::from_exponents({static_cast<unsigned>(k)}), coeffs[k]);
  auto p = Poly<AlgebraElement<C>>::from_terms(make_vars({var}), coeffs.front().zero_like(), std::move(terms));
  return p.to_string();
}

/// Phi_{L(a)}(a) = sum_k a^k b_k == 0, coefficients placed on the right.
template <RingElement C>
bool cayley_hamilton_check(const Tower<C>& t, const AlgebraElement<C>& a) {
  detail::require_conditions(t, true, false, false);
  auto coeffs = charpoly_regrep(t, a);
  auto power = t.algebra()->one();
  auto acc = t.algebra()->zero();
  for (const auto& b : coeffs) {
    acc = acc + power * b;
    power = power * a;
  }
  return acc.is_zero();
}

template <RingElement C>
struct CommutantResult {
  bool member = false;
  std::optional<AlgebraElement<C>> witness;
  bool witness_verified = false;
};

template <RingElement C>
struct MatrixCommutantResult {
  bool member = false;
  std::optional<AMatrix<C>> witness;
  bool witness_verified = false;
};

/// b in L_e(A) iff J(e_k) b = b J(e_k) for all k; the witness is
/// a = sum_k e_k b_{k1}.
template <RingElement C>
CommutantResult<C> commutant_check(const Tower<C>& t, const AMatrix<C>& b) {
  detail::require_conditions(t, false, true, true);
  require_structure(b.rows() == t.m() && b.cols() == t.m(), "commutant check needs an m x m matrix");
  CommutantResult<C> out;
  out.member = true;
  for (const auto& j : j_matrices(t))
    if (!(j * b == b * j)) {
      out.member = false;
      break;
    }
  if (!out.member) return out;
  auto a = t.algebra()->zero();
  for (std::size_t k = 0; k < t.m(); ++k) a = a + t.e(k) * b(k, 0);
  out.witness_verified = regrep_element(t, a) == b;
  out.witness = std::move(a);
  return out;
}

/// b in L_{e (x) I_r}(M(r, A)) iff b commutes with every J(e_k) (x) I_r.
template <RingElement C>
MatrixCommutantResult<C> matrix_commutant_check(const Tower<C>& t, std::size_t r, const AMatrix<C>& b) {
  detail::require_conditions(t, false, true, true);
  const std::size_t m = t.m();
  require_structure(b.rows() == m * r && b.cols() == m * r, "matrix commutant check needs an mr x mr matrix");
  MatrixCommutantResult<C> out;
  out.member = true;
  auto id = AMatrix<C>::identity(r, t.algebra()->one());
  for (const auto& j : j_matrices(t)) {
    auto jr = kron(j, id);
    if (!(jr * b == b * jr)) {
      out.member = false;
      break;
    }
  }
  if (!out.member) return out;
  AMatrix<C> a(r, r, t.algebra()->zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < m; ++k) a(i, j) = a(i, j) + t.e(k) * b(k * r + i, j);
  out.witness_verified = regrep_matrix(t, a) == b;
  out.witness = std::move(a);
  return out;
}

/// Basis over the coefficient field of {b in M(m, B) : J(e_k) b = b J(e_k)}.
template <RingElement C>
std::vector<AMatrix<C>> commutant_basis(const Tower<C>& t) {
  detail::require_conditions(t, false, true, true);
  const auto& alg = *t.algebra();
  const std::size_t m = t.m(), nh = t.lower().size(), n = alg.dimension();
  auto js = j_matrices(t);
  auto unknown = [&](std::size_t u) {
    std::size_t i = u / (m * nh), j = (u / nh) % m, h = t.lower()[u % nh];
    AMatrix<C> b(m, m, alg.zero());
    b(i, j) = alg.monomial(h);
    return b;
  };
  const std::size_t cols = m * m * nh;
  const std::size_t eqs = js.size() * m * m * n;
  std::vector<std::vector<C>> rows(eqs, std::vector<C>(cols, alg.coefficient_zero()));
  for (std::size_t u = 0; u < cols; ++u) {
    auto b = unknown(u);
    for (std::size_t k = 0; k < js.size(); ++k) {
      auto res = js[k] * b - b * js[k];
      for (std::size_t p = 0; p < m * m; ++p)
        for (std::size_t g = 0; g < n; ++g) rows[((k * m * m) + p) * n + g][u] = res.entries()[p].coeff(g);
    }
  }
  std::vector<AMatrix<C>> out;
  for (const auto& v : nullspace_basis(rows, cols, alg.coefficient_zero())) {
    AMatrix<C> b(m, m, alg.zero());
    for (std::size_t u = 0; u < cols; ++u)
      if (!v[u].is_zero()) b = b + unknown(u).map([&](const AlgebraElement<C>& x) { return x.scaled(v[u]); });
    out.push_back(std::move(b));
  }
  return out;
}

/// L_{e (x) f}(a) == L_{f (x) I_m}(L_e(a)) for nested towers.
template <RingElement C>
bool diagram_check_element(const Tower<C>& upper, const Tower<C>& lower, const AlgebraElement<C>& a) {
  auto ef = tower_product(upper, lower);
  return regrep_element(ef, a) == regrep_matrix(lower, regrep_element(upper, a));
}

/// L_{e (x) f (x) I_r}(a) == L_{f (x) I_mr}(L_{e (x) I_r}(a)).
template <RingElement C>
bool diagram_check_matrix(const Tower<C>& upper, const Tower<C>& lower, const AMatrix<C>& a) {
  auto ef = tower_product(upper, lower);
  return regrep_matrix(ef, a) == regrep_matrix(lower, regrep_matrix(upper, a));
}

template <RingElement C>
struct DeterminantPair {
  AlgebraElement<C> flattened;  // Det_C(L'(b))
  AlgebraElement<C> composed;   // Det_C(L(Det_B(b)))
  bool equal() const { return flattened == composed; }
};

/// Det_C(L_{f (x) I_r}(b)) and Det_C(L_f(Det_B(b))) for b in M(r, B).
template <RingElement C>
DeterminantPair<C> determinant_diagram(const Tower<C>& lower, const AMatrix<C>& b) {
  detail::require_commutative(lower);
  if (!span_commutative(*lower.algebra(), lower.upper())) throw PreconditionError("B is not commutative");
  for (const auto& x : b.entries())
    require_structure(lower.in_upper_span(x), "matrix entry " + x.to_string() + " is outside B");
  return {det(regrep_matrix(lower, b)), det(regrep_element(lower, det(b)))};
}

}  // namespace studydet
