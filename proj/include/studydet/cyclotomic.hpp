#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_n), with elements stored
// as canonical remainders modulo the n-th cyclotomic polynomial.

#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "studydet/rational.hpp"

namespace studydet {

inline int euler_phi(int n) {
  require_structure(n >= 1, "conductor must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
inline const std::vector<Rational>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  require_structure(n >= 1, "conductor must be positive");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<Rational> num(static_cast<std::size_t>(n) + 1);
  num[0] = Rational(-1);
  num[static_cast<std::size_t>(n)] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<Rational> quot(num.size() - dd);
    for (std::size_t k = num.size(); k-- > dd;) {
      Rational c = num[k];
      quot[k - dd] = c;
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(num)).first->second;
}

class Cyclotomic;
Cyclotomic cyclo_reduce(std::vector<Rational> raw, int n);

/// Element of Q(zeta_n). Conductor 1 is Q itself, conductor 4 the Gaussian
/// rationals.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  explicit Cyclotomic(int conductor) : conductor_(conductor), coeffs_(static_cast<std::size_t>(euler_phi(conductor))) {}
  Cyclotomic(int conductor, const Rational& value) : Cyclotomic(conductor) { coeffs_[0] = value; }

  static Cyclotomic zeta_power(int n, long k) {
    long e = ((k % n) + n) % n;
    std::vector<Rational> raw(static_cast<std::size_t>(e) + 1);
    raw[static_cast<std::size_t>(e)] = Rational(1);
    return cyclo_reduce(std::move(raw), n);
  }

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }
  bool is_one() const { return is_rational() && coeffs_[0].is_one(); }
  /// Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  Cyclotomic zero_like() const { return Cyclotomic(conductor_); }
  Cyclotomic one_like() const { return Cyclotomic(conductor_, Rational(1)); }
  RingDescriptor descriptor() const { return RingDescriptor::cyclotomic(conductor_); }

  /// Complex conjugation, zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    const auto n = static_cast<std::size_t>(conductor_);
    std::vector<Rational> raw(n);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[(n - k) % n] += coeffs_[k];
    return cyclo_reduce(std::move(raw), conductor_);
  }

  /// Re-express in Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic lift(int m) const {
    if (m == conductor_) return *this;
    require_structure(m % conductor_ == 0,
                      "cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(m));
    const auto step = static_cast<std::size_t>(m / conductor_);
    std::vector<Rational> raw(coeffs_.size() * step);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) raw[k * step] = coeffs_[k];
    return cyclo_reduce(std::move(raw), m);
  }

  /// Field inverse; nullopt for zero.
  std::optional<Cyclotomic> try_inverse() const {
    if (is_zero()) return std::nullopt;
    const std::size_t d = coeffs_.size();
    // Column j holds the coordinates of this * zeta^j; solve for e_0.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> raw(d + j);
      for (std::size_t k = 0; k < d; ++k) raw[k + j] = coeffs_[k];
      Cyclotomic col = cyclo_reduce(std::move(raw), conductor_);
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
    }
    m[0][d] = Rational(1);
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (p < d && m[p][c].is_zero()) ++p;
      if (p == d) return std::nullopt;
      std::swap(m[p], m[c]);
      Rational inv = m[c][c].inverse();
      for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r][c].is_zero()) continue;
        Rational f = m[r][c];
        for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
      }
    }
    Cyclotomic out(conductor_);
    for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = m[i][d];
    return out;
  }

  Cyclotomic inverse() const {
    auto inv = try_inverse();
    require_structure(inv.has_value(), "inverse of zero cyclotomic number");
    return *inv;
  }

  /// "5", "-3/2", or "(1-ζ)" style with ascending powers of ζ.
  std::string to_string() const {
    if (is_rational()) return coeffs_[0].to_string();
    std::string out = "(";
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string term;
      if (k == 0) {
        term = c.to_string();
      } else {
        std::string z = "ζ";
        if (k > 1) z += "^" + std::to_string(k);
        if (c.is_one())
          term = z;
        else if ((-c).is_one())
          term = "-" + z;
        else
          term = c.to_string() + "*" + z;
      }
      if (!first && term[0] != '-') out += "+";
      out += term;
      first = false;
    }
    return out + ")";
  }

  /// Parses the to_string() format; 'z' is accepted as a stand-in for ζ.
  static Cyclotomic parse(std::string_view text, int conductor);

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic out = a;
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
    return out;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic out = a;
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] -= b.coeffs_[k];
    return out;
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    if (a.coeffs_.size() == 1) {
      Cyclotomic out = a;
      out.coeffs_[0] *= b.coeffs_[0];
      return out;
    }
    std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (!b.coeffs_[j].is_zero()) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return cyclo_reduce(std::move(raw), a.conductor_);
  }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }

  Cyclotomic operator*(const Rational& r) const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }

 private:
  friend Cyclotomic cyclo_reduce(std::vector<Rational> raw, int n);

  static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_)
      throw StructuralError("descriptor mismatch: cyclotomic(" + std::to_string(a.conductor_) + ") vs cyclotomic(" +
                            std::to_string(b.conductor_) + ")");
  }

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Canonical representative of sum raw[k] zeta^k modulo Phi_n.
inline Cyclotomic cyclo_reduce(std::vector<Rational> raw, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > d;) {
    Rational c = raw[k];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!phi[j].is_zero()) raw[k - d + j] -= c * phi[j];
    raw[k] = Rational();
  }
  raw.resize(d);
  Cyclotomic out(n);
  out.coeffs_ = std::move(raw);
  return out;
}

inline int lcm_conductor(int a, int b) { return std::lcm(a, b); }

inline Cyclotomic Cyclotomic::parse(std::string_view text, int conductor) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t') continue;
    // UTF-8 for U+03B6 (ζ) is CE B6; normalize to 'z'.
    if (static_cast<unsigned char>(c) == 0xCE && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xB6) {
      s.push_back('z');
      ++i;
      continue;
    }
    s.push_back(c);
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw InputError("empty cyclotomic literal");
  std::vector<Rational> raw(static_cast<std::size_t>(conductor));
  std::size_t pos = 0;
  auto fail = [&]() { throw InputError("malformed cyclotomic literal '" + std::string(text) + "'"); };
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && s[end - 1] != '/' && s[end - 1] != '^' &&
                               s[end - 1] != '*'))
      ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term.erase(0, 1);
    }
    if (term.empty()) fail();
    Rational coeff(1);
    long power = 0;
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      std::string head = term.substr(0, zpos);
      std::string tail = term.substr(zpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') fail();
        head.pop_back();
        coeff = Rational::parse(head);
      }
      power = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2) fail();
        for (std::size_t i = 1; i < tail.size(); ++i)
          if (tail[i] < '0' || tail[i] > '9') fail();
        power = std::stol(tail.substr(1));
      }
    }
    if (negative) coeff = -coeff;
    raw[static_cast<std::size_t>(power % conductor)] += coeff;
  }
  return cyclo_reduce(std::move(raw), conductor);
}

}  // namespace studydet
