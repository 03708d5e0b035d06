#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "studydet/ring.hpp"

namespace studydet {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(long numerator, long denominator) : value_(numerator, denominator) {
    require_structure(denominator != 0, "rational with zero denominator");
    value_.canonicalize();
  }

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Accepts "n", "-n", "n/d" (optional surrounding whitespace).
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw InputError("empty rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digits_before = false, digits_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] == '/' && !seen_slash) {
        seen_slash = true;
      } else if (s[i] >= '0' && s[i] <= '9') {
        (seen_slash ? digits_after : digits_before) = true;
      } else {
        throw InputError("malformed rational literal '" + std::string(text) + "'");
      }
    }
    if (!digits_before || (seen_slash && !digits_after))
      throw InputError("malformed rational literal '" + std::string(text) + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + std::string(text) + "'");
    if (v.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(v);
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  RingDescriptor descriptor() const { return RingDescriptor::rational(); }

  Rational inverse() const {
    require_structure(!is_zero(), "inverse of zero rational");
    return Rational(mpq_class(1) / value_);
  }

  std::optional<Rational> try_inverse() const {
    if (is_zero()) return std::nullopt;
    return inverse();
  }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

 private:
  mpq_class value_{0};
};

}  // namespace studydet
