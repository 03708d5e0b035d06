#pragma once

// Sparse multivariate polynomials over any ring element type, stored as a
// list of (monomial, coefficient) pairs in descending graded-lex order.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "studydet/cyclotomic.hpp"
#include "studydet/rational.hpp"
#include "studydet/ring.hpp"

namespace studydet {

inline constexpr std::size_t kMaxVariables = 16;
inline constexpr unsigned kMaxExponent = 255;

struct Monomial {
  std::uint16_t degree = 0;
  std::array<std::uint8_t, kMaxVariables> exponents{};

  static Monomial from_exponents(const std::vector<unsigned>& exps) {
    require_structure(exps.size() <= kMaxVariables, "too many polynomial variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      require_structure(exps[i] <= kMaxExponent, "polynomial exponent overflow");
      m.exponents[i] = static_cast<std::uint8_t>(exps[i]);
      m.degree = static_cast<std::uint16_t>(m.degree + exps[i]);
    }
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = unsigned{a.exponents[i]} + b.exponents[i];
      require_structure(e <= kMaxExponent, "polynomial exponent overflow");
      m.exponents[i] = static_cast<std::uint8_t>(e);
    }
    m.degree = static_cast<std::uint16_t>(a.degree + b.degree);
    return m;
  }
};

/// True when a precedes b in the canonical order: larger total degree
/// first, ties broken lexicographically on variable index.
inline bool grlex_before(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return std::memcmp(a.exponents.data(), b.exponents.data(), kMaxVariables) > 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exponents) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  require_structure(names.size() <= kMaxVariables, "too many polynomial variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Coefficient formatting hooks. Rational-valued coefficients expose their
// sign so terms print as "a - b"; anything else is parenthesized.
inline int coefficient_sign(const Rational& c) { return c.sign(); }
inline std::string coefficient_text(const Rational& c) { return c.to_string(); }
inline int coefficient_sign(const Cyclotomic& c) { return c.is_rational() ? c.rational_part().sign() : 1; }
inline std::string coefficient_text(const Cyclotomic& c) { return c.to_string(); }
template <class C>
int coefficient_sign(const C&) {
  return 1;
}
template <class C>
std::string coefficient_text(const C& c) {
  return "(" + c.to_string() + ")";
}

inline Rational parse_coefficient(std::string_view text, const Rational&) { return Rational::parse(text); }
inline Cyclotomic parse_coefficient(std::string_view text, const Cyclotomic& like) {
  return Cyclotomic::parse(text, like.conductor());
}

template <RingElement C>
class Poly {
 public:
  using Term = std::pair<Monomial, C>;

  Poly(VarList vars, C coefficient_zero) : vars_(std::move(vars)), zero_(std::move(coefficient_zero)) {
    require_structure(vars_ != nullptr, "polynomial without variable list");
  }

  static Poly constant(VarList vars, const C& c) {
    Poly p(std::move(vars), c.zero_like());
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }

  static Poly variable(VarList vars, std::size_t index, const C& coefficient_one) {
    require_structure(index < vars->size(), "variable index out of range");
    Poly p(std::move(vars), coefficient_one.zero_like());
    Monomial m;
    m.exponents[index] = 1;
    m.degree = 1;
    p.terms_.emplace_back(m, coefficient_one);
    return p;
  }

  /// Builds from unordered terms: merges duplicates, drops zeros, sorts.
  static Poly from_terms(VarList vars, C coefficient_zero, std::vector<Term> terms) {
    Poly p(std::move(vars), std::move(coefficient_zero));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_before(a.first, b.first); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = p.terms_.back().second + t.second;
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second.is_zero(); });
    return p;
  }

  const VarList& vars() const { return vars_; }
  std::size_t variable_count() const { return vars_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const C& coefficient_zero() const { return zero_; }

  bool is_zero() const { return terms_.empty(); }
  Poly zero_like() const { return Poly(vars_, zero_); }
  Poly one_like() const { return constant(vars_, zero_.one_like()); }
  RingDescriptor descriptor() const { return RingDescriptor::polynomial(*vars_, zero_.descriptor()); }

  /// -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree; }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.first.degree == terms_.front().first.degree; });
  }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return zero_;
  }

  C constant_term() const { return coefficient(Monomial{}); }

  template <RingElement D, class F>
  Poly<D> map_coefficients(F&& f, const D& new_zero) const {
    std::vector<typename Poly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
    return Poly<D>::from_terms(vars_, new_zero, std::move(out));
  }

  /// Moves variable i to position index_map[i] of new_vars.
  Poly rename(VarList new_vars, const std::vector<std::size_t>& index_map) const {
    require_structure(index_map.size() == vars_->size(), "rename map has wrong length");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      Monomial m;
      m.degree = t.first.degree;
      for (std::size_t i = 0; i < index_map.size(); ++i) {
        require_structure(index_map[i] < new_vars->size(), "rename target out of range");
        m.exponents[index_map[i]] = static_cast<std::uint8_t>(m.exponents[index_map[i]] + t.first.exponents[i]);
      }
      out.emplace_back(m, t.second);
    }
    return from_terms(std::move(new_vars), zero_, std::move(out));
  }

  Poly scaled(const C& c) const {
    Poly out(vars_, zero_);
    for (const auto& t : terms_) {
      C v = c * t.second;
      if (!v.is_zero()) out.terms_.emplace_back(t.first, std::move(v));
    }
    return out;
  }

  std::string monomial_text(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += (*vars_)[i];
      if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
    }
    return out;
  }

  /// Canonical text: "x_e^2 - x_g^2", "x_0 + (1-ζ)*x_1", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool negative = coefficient_sign(c) < 0;
      C magnitude = negative ? -c : c;
      std::string coeff = coefficient_text(magnitude);
      std::string mono = monomial_text(m);
      std::string body;
      if (mono.empty())
        body = coeff;
      else if (coeff == "1")
        body = mono;
      else
        body = coeff + "*" + mono;
      if (first)
        out += negative ? "-" + body : body;
      else
        out += (negative ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly out(a.vars_, a.zero_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
      // Multiplying by a single term preserves the monomial order.
      const bool a_single = a.terms_.size() == 1;
      const Term& s = a_single ? a.terms_.front() : b.terms_.front();
      const Poly& other = a_single ? b : a;
      out.terms_.reserve(other.terms_.size());
      for (const auto& t : other.terms_) {
        C v = a_single ? s.second * t.second : t.second * s.second;
        if (!v.is_zero()) out.terms_.emplace_back(s.first * t.first, std::move(v));
      }
      return out;
    }
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.terms_.size() * 4);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, ca * cb);
        else
          it->second = it->second + ca * cb;
      }
    }
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_before(x.first, y.first); });
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!same_vars(a, b)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

 private:
  static bool same_vars(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ || *a.vars_ == *b.vars_; }

  static void check_same(const Poly& a, const Poly& b) {
    if (!same_vars(a, b)) throw StructuralError("descriptor mismatch: polynomial variable lists differ");
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    check_same(a, b);
    Poly out(a.vars_, a.zero_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && grlex_before(a.terms_[i].first, b.terms_[j].first))) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || grlex_before(b.terms_[j].first, a.terms_[i].first)) {
        const Term& t = b.terms_[j++];
        out.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
      } else {
        C v = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!v.is_zero()) out.terms_.emplace_back(a.terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  VarList vars_;
  C zero_;
  std::vector<Term> terms_;
};

/// Merges duplicate exponent vectors, drops zero coefficients and sorts.
template <RingElement C>
Poly<C> poly_normalize(VarList vars, const C& coefficient_zero,
                       const std::vector<std::pair<std::vector<unsigned>, C>>& terms) {
  std::vector<typename Poly<C>::Term> packed;
  packed.reserve(terms.size());
  for (const auto& [exps, c] : terms) {
    if (exps.size() != vars->size())
      throw StructuralError("exponent vector of length " + std::to_string(exps.size()) + " for " +
                            std::to_string(vars->size()) + " variables");
    packed.emplace_back(Monomial::from_exponents(exps), c);
  }
  return Poly<C>::from_terms(std::move(vars), coefficient_zero, std::move(packed));
}

/// Parses the canonical text produced by Poly::to_string.
template <RingElement C>
Poly<C> parse_poly(std::string_view text, const VarList& vars, const C& coefficient_one) {
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  std::string s(text);
  // Split into signed terms at top-level " + " / " - ".
  std::vector<std::pair<bool, std::string>> pieces;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    start = 1;
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 2 < s.size() && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
      pieces.emplace_back(negative, s.substr(start, i - start));
      negative = s[i + 1] == '-';
      start = i + 3;
      i += 2;
    }
  }
  pieces.emplace_back(negative, s.substr(start));

  std::vector<typename Poly<C>::Term> terms;
  for (auto& [neg, body] : pieces) {
    if (body.empty()) fail("empty term");
    if (body == "0" && pieces.size() == 1) return Poly<C>(vars, coefficient_one.zero_like());
    C coeff = coefficient_one;
    std::vector<unsigned> exps(vars->size(), 0);
    std::size_t p = 0;
    while (p <= body.size()) {
      std::size_t q = p;
      int d = 0;
      while (q < body.size() && !(body[q] == '*' && d == 0)) {
        if (body[q] == '(') ++d;
        if (body[q] == ')') --d;
        ++q;
      }
      std::string factor = body.substr(p, q - p);
      if (factor.empty()) fail("empty factor");
      if (factor[0] == '(' || (factor[0] >= '0' && factor[0] <= '9') || factor[0] == '-') {
        coeff = coeff * parse_coefficient(factor, coefficient_one);
      } else {
        std::string name = factor;
        unsigned e = 1;
        if (auto caret = factor.rfind('^'); caret != std::string::npos) {
          name = factor.substr(0, caret);
          std::string es = factor.substr(caret + 1);
          if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return c >= '0' && c <= '9'; }))
            fail("bad exponent in '" + factor + "'");
          e = static_cast<unsigned>(std::stoul(es));
        }
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end()) fail("unknown variable '" + name + "'");
        exps[static_cast<std::size_t>(it - vars->begin())] += e;
      }
      p = q + 1;
    }
    if (neg) coeff = -coeff;
    terms.emplace_back(Monomial::from_exponents(exps), coeff);
  }
  return Poly<C>::from_terms(vars, coefficient_one.zero_like(), std::move(terms));
}

// A polynomial used as a coefficient prints bare when it is a single term.
template <RingElement C>
int coefficient_sign(const Poly<C>& p) {
  return p.terms().size() == 1 ? coefficient_sign(p.terms().front().second) : 1;
}
template <RingElement C>
std::string coefficient_text(const Poly<C>& p) {
  return p.terms().size() == 1 ? p.to_string() : "(" + p.to_string() + ")";
}

}  // namespace studydet
