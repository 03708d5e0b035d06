#pragma once

// Dense matrices over an arbitrary ring element type together with the
// division-free determinant machinery used throughout the library.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "studydet/polynomial.hpp"
#include "studydet/ring.hpp"

namespace studydet {

template <RingElement R>
class Matrix {
 public:
  /// rows x cols matrix filled with `fill`.
  Matrix(std::size_t rows, std::size_t cols, const R& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill), prototype_(fill.zero_like()) {
    require_structure(rows > 0 && cols > 0, "matrix dimensions must be positive");
  }

  /// Row-major entries; all entries must share one descriptor.
  Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)), prototype_(first_entry(entries_).zero_like()) {
    require_structure(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require_structure(entries_.size() == rows * cols, "entry count does not match dimensions");
  }

  static Matrix zero(std::size_t rows, std::size_t cols, const R& like) { return Matrix(rows, cols, like.zero_like()); }

  static Matrix identity(std::size_t n, const R& like) {
    Matrix m(n, n, like.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = like.one_like();
    return m;
  }

  /// 1 in position (i, j), 0 elsewhere.
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j, const R& like) {
    Matrix m(n, n, like.zero_like());
    m(i, j) = like.one_like();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<R>& entries() const { return entries_; }
  const R& entry_prototype() const { return prototype_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const R& e) { return e.is_zero(); });
  }
  Matrix zero_like() const { return zero(rows_, cols_, prototype_); }
  Matrix one_like() const {
    require_structure(is_square(), "identity requested for non-square matrix");
    return identity(rows_, prototype_);
  }
  RingDescriptor descriptor() const {
    return RingDescriptor::matrix(static_cast<int>(rows_), prototype_.descriptor());
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, prototype_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const {
    using D = decltype(f(std::declval<const R&>()));
    std::vector<D> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return Matrix<D>(rows_, cols_, std::move(out));
  }

  /// Entry-wise left scalar multiple s * X.
  Matrix left_scaled(const R& s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = s * e;
    return out;
  }
  /// Entry-wise right scalar multiple X * s.
  Matrix right_scaled(const R& s) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = e * s;
    return out;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).to_string();
      out += "]";
    }
    return out + "]";
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = out.entries_[k] + b.entries_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = out.entries_[k] - b.entries_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix out = a;
    for (auto& e : out.entries_) e = -e;
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_structure(a.cols_ == b.rows_, "matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_, a.prototype_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const R& bkj = b(k, j);
          if (bkj.is_zero()) continue;
          out(i, j) = out(i, j) + aik * bkj;
        }
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  static const R& first_entry(const std::vector<R>& entries) {
    require_structure(!entries.empty(), "matrix without entries");
    return entries.front();
  }

  static void check_shape(const Matrix& a, const Matrix& b) {
    require_structure(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<R> entries_;
  R prototype_;
};

/// Bijection on {0, ..., N-1}; printed 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto v : image_) {
      require_structure(v < image_.size() && !seen[v], "permutation image is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  int sign() const {
    std::vector<bool> seen(image_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = image_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) s = -s;
    }
    return s;
  }

  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const {
    require_structure(size() == other.size(), "permutation size mismatch");
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = image_[other.image_[i]];
    return Permutation(std::move(out));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// The permutation of [mn] sending m(k-1)+l to n(l-1)+k (1-based, k in [n],
/// l in [m]). Conjugating X (x) Y by it yields Y (x) X.
inline Permutation sigma_perm(std::size_t m, std::size_t n) {
  require_structure(m >= 1 && n >= 1, "sigma_perm needs positive sizes");
  std::vector<std::size_t> image(m * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < m; ++l) image[m * k + l] = n * l + k;
  return Permutation(std::move(image));
}

/// (sigma . X)_{ij} = X_{sigma(i) sigma(j)}.
template <RingElement R>
Matrix<R> perm_action(const Permutation& sigma, const Matrix<R>& x) {
  require_structure(x.is_square() && sigma.size() == x.rows(), "permutation size does not match matrix");
  Matrix<R> out = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(sigma(i), sigma(j));
  return out;
}

template <RingElement R>
Matrix<R> kron(const Matrix<R>& x, const Matrix<R>& y) {
  require_structure(x.entry_prototype().descriptor() == y.entry_prototype().descriptor(),
                    "kron of matrices over different rings");
  Matrix<R> out(x.rows() * y.rows(), x.cols() * y.cols(), x.entry_prototype());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    }
  return out;
}

/// Calls f(perm, sign) for every permutation of {0, ..., n-1}.
template <class F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    f(p, Permutation(p).sign());
  } while (std::next_permutation(p.begin(), p.end()));
}

inline constexpr std::size_t kLeibnizLimit = 6;

/// Leibniz sum over S_m of sgn(sigma) X_{sigma(1)1} ... X_{sigma(m)m}.
/// Intended as an oracle; limited to m <= 6.
template <RingElement R>
R det_leibniz(const Matrix<R>& x) {
  require_structure(x.is_square(), "determinant of non-square matrix");
  require_structure(x.rows() <= kLeibnizLimit, "det_leibniz is limited to size 6");
  const std::size_t n = x.rows();
  R total = x.entry_prototype().zero_like();
  for_each_permutation(n, [&](const std::vector<std::size_t>& p, int sign) {
    R prod = x(p[0], 0);
    for (std::size_t c = 1; c < n && !prod.is_zero(); ++c) prod = prod * x(p[c], c);
    total = sign > 0 ? total + prod : total - prod;
  });
  return total;
}

/// Coefficients of Det(x I - X), lowest degree first, by the Berkowitz
/// recursion. Uses ring operations only; the entry ring must be commutative.
template <RingElement R>
std::vector<R> charpoly_coefficients(const Matrix<R>& x) {
  require_structure(x.is_square(), "characteristic polynomial of non-square matrix");
  const std::size_t n = x.rows();
  const R zero = x.entry_prototype().zero_like();
  const R one = x.entry_prototype().one_like();
  // p holds coefficients highest degree first.
  std::vector<R> p{one, -x(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // Leading k x k block M, column S = X[0..k-1][k], row R = X[k][0..k-1].
    std::vector<R> column(k + 2, zero);
    column[0] = one;
    column[1] = -x(k, k);
    std::vector<R> v(k, zero);
    for (std::size_t i = 0; i < k; ++i) v[i] = x(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      R acc = zero;
      for (std::size_t i = 0; i < k; ++i)
        if (!x(k, i).is_zero() && !v[i].is_zero()) acc = acc + x(k, i) * v[i];
      column[power + 2] = -acc;
      if (power + 1 < k) {
        std::vector<R> next(k, zero);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (!x(i, j).is_zero() && !v[j].is_zero()) next[i] = next[i] + x(i, j) * v[j];
        v = std::move(next);
      }
    }
    // Toeplitz product: q = T p with T lower triangular, first column `column`.
    std::vector<R> q(k + 2, zero);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        if (!column[i - j].is_zero() && !p[j].is_zero()) q[i] = q[i] + column[i - j] * p[j];
    p = std::move(q);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

/// Det(x I - X) as a polynomial in the fresh variable `var`.
template <RingElement R>
Poly<R> charpoly_divfree(const Matrix<R>& x, const std::string& var = "x") {
  auto coeffs = charpoly_coefficients(x);
  auto vars = make_vars({var});
  std::vector<typename Poly<R>::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Monomial m;
    m.exponents[0] = static_cast<std::uint8_t>(k);
    m.degree = static_cast<std::uint16_t>(k);
    terms.emplace_back(m, coeffs[k]);
  }
  return Poly<R>::from_terms(vars, x.entry_prototype().zero_like(), std::move(terms));
}

/// Division-free determinant: (-1)^n times the constant charpoly coefficient.
template <RingElement R>
R det(const Matrix<R>& x) {
  require_structure(x.is_square(), "determinant of non-square matrix");
  if (x.rows() == 1) return x(0, 0);
  if (x.rows() == 2) return x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
  auto c = charpoly_coefficients(x);
  return x.rows() % 2 == 0 ? c[0] : -c[0];
}

/// Classical adjugate via Cayley-Hamilton: X adj(X) = adj(X) X = det(X) I.
template <RingElement R>
Matrix<R> adjugate(const Matrix<R>& x) {
  require_structure(x.is_square(), "adjugate of non-square matrix");
  const std::size_t n = x.rows();
  auto c = charpoly_coefficients(x);
  // Horner evaluation of X^{n-1} + c_{n-1} X^{n-2} + ... + c_1 I.
  Matrix<R> acc = Matrix<R>::identity(n, x.entry_prototype());
  for (std::size_t k = n - 1; k >= 1; --k) {
    acc = acc * x;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + c[k];
  }
  return n % 2 == 1 ? acc : -acc;
}

/// Splits an (mn) x (mn) matrix into an n x n grid of m x m blocks.
template <RingElement R>
Matrix<Matrix<R>> unflatten(const Matrix<R>& x, std::size_t block) {
  require_structure(x.is_square(), "unflatten expects a square matrix");
  require_structure(block > 0 && x.rows() % block == 0, "block size does not divide matrix size");
  const std::size_t n = x.rows() / block;
  std::vector<Matrix<R>> blocks;
  blocks.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Matrix<R> b(block, block, x.entry_prototype());
      for (std::size_t i = 0; i < block; ++i)
        for (std::size_t j = 0; j < block; ++j) b(i, j) = x(k * block + i, l * block + j);
      blocks.push_back(std::move(b));
    }
  return Matrix<Matrix<R>>(n, n, std::move(blocks));
}

/// The inclusion M(m, M(r, B)) -> M(mr, B).
template <RingElement R>
Matrix<R> flatten(const Matrix<Matrix<R>>& x) {
  const std::size_t r = x(0, 0).rows();
  for (const auto& b : x.entries())
    require_structure(b.rows() == r && b.cols() == r, "ragged block sizes in flatten");
  Matrix<R> out(x.rows() * r, x.cols() * r, x(0, 0).entry_prototype());
  for (std::size_t k = 0; k < x.rows(); ++k)
    for (std::size_t l = 0; l < x.cols(); ++l)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out(k * r + i, l * r + j) = x(k, l)(i, j);
  return out;
}

/// Sum over sigma in S_n of sgn(sigma) X^{(1,sigma(1))} ... X^{(n,sigma(n))}
/// with the block products taken in exactly that order.
template <RingElement R>
Matrix<R> block_det_inner(const Matrix<R>& x, std::size_t block) {
  auto grid = unflatten(x, block);
  const std::size_t n = grid.rows();
  require_structure(n <= kLeibnizLimit, "block_det_inner is limited to a 6 x 6 grid");
  Matrix<R> total = Matrix<R>::zero(block, block, x.entry_prototype());
  for_each_permutation(n, [&](const std::vector<std::size_t>& p, int sign) {
    Matrix<R> prod = grid(0, p[0]);
    for (std::size_t row = 1; row < n; ++row) prod = prod * grid(row, p[row]);
    total = sign > 0 ? total + prod : total - prod;
  });
  return total;
}

/// Gauss-Jordan inverse over a field; nullopt when singular. The entry type
/// must provide try_inverse().
template <RingElement R>
std::optional<Matrix<R>> mat_inverse_field(const Matrix<R>& x) {
  require_structure(x.is_square(), "inverse of non-square matrix");
  const std::size_t n = x.rows();
  Matrix<R> a = x;
  Matrix<R> inv = Matrix<R>::identity(n, x.entry_prototype());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    auto pivot_inv = a(c, c).try_inverse();
    if (!pivot_inv) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * *pivot_inv;
      inv(c, j) = inv(c, j) * *pivot_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      R f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Basis of the right null space {v : A v = 0} over a field, by reduced row
/// echelon form.
template <RingElement R>
std::vector<std::vector<R>> nullspace_basis(const std::vector<std::vector<R>>& rows_in, std::size_t cols,
                                            const R& like) {
  std::vector<std::vector<R>> a = rows_in;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    R inv = *a[rank][c].try_inverse();
    for (std::size_t j = c; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      R f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] - f * a[rank][j];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<R>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<R> v(cols, like.zero_like());
    v[free] = like.one_like();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace studydet
