#pragma once

// Built-in groups, cocycles and irreducible representations. The JSON files
// under data/ are exported from these definitions.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "studydet/group.hpp"
#include "studydet/representation.hpp"

namespace studydet {

struct TwistedGroup {
  GroupPtr group;
  Cocycle cocycle;
};

namespace fixtures {

inline Table table_from(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

inline GroupPtr cyclic(std::size_t n, std::vector<std::string> names,
                       std::map<std::string, std::vector<std::size_t>> subgroups = {}) {
  return std::make_shared<const FiniteGroup>("C" + std::to_string(n), std::move(names),
                                             table_from(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
                                             std::move(subgroups));
}

inline GroupPtr c1() { return cyclic(1, {"e"}); }
inline GroupPtr c2() { return cyclic(2, {"e", "g"}); }
inline GroupPtr c3() { return cyclic(3, {"0", "1", "2"}); }
inline GroupPtr c4() { return cyclic(4, {"0", "1", "2", "3"}, {{"C2", {0, 2}}}); }
inline GroupPtr c6() { return cyclic(6, {"0", "1", "2", "3", "4", "5"}, {{"C2", {0, 3}}, {"C3", {0, 2, 4}}}); }

inline GroupPtr klein() {
  return std::make_shared<const FiniteGroup>("C2xC2", std::vector<std::string>{"e", "a", "b", "ab"},
                                             table_from(4, [](std::size_t a, std::size_t b) { return a ^ b; }),
                                             std::map<std::string, std::vector<std::size_t>>{{"A", {0, 1}}});
}

/// Dihedral group of order 2n; element r^a s^b has index a + n b.
inline FiniteGroup dihedral(std::size_t n, std::string name, std::vector<std::string> names,
                            std::map<std::string, std::vector<std::size_t>> subgroups) {
  auto mul = [n](std::size_t x, std::size_t y) {
    std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
    std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
    return rot + n * ((b + d) % 2);
  };
  return FiniteGroup(std::move(name), std::move(names), table_from(2 * n, mul), std::move(subgroups));
}

inline GroupPtr s3() {
  return std::make_shared<const FiniteGroup>(
      dihedral(3, "S3", {"e", "r", "r2", "s", "rs", "r2s"}, {{"R3", {0, 1, 2}}, {"S", {0, 3}}}));
}

inline GroupPtr d4() {
  return std::make_shared<const FiniteGroup>(
      dihedral(4, "D4", {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"}, {{"C4", {0, 1, 2, 3}}, {"S", {0, 4}}}));
}

/// Sign of the product of quaternion units q_a q_b for a, b in {1, i, j, k}
/// indexed 0..3 (so that the underlying unit is q_{a xor b}).
inline int quaternion_sign(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 1;
  if (a == b) return -1;
  // i j = k, j k = i, k i = j; reversed order picks up a sign.
  bool cyclic_order = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
  return cyclic_order ? 1 : -1;
}

/// Q8 with index q + 4 s for the unit q in {1, i, j, k} and sign (-1)^s.
inline GroupPtr q8() {
  auto mul = [](std::size_t x, std::size_t y) {
    std::size_t qa = x % 4, qb = y % 4;
    std::size_t s = (x / 4 + y / 4 + (quaternion_sign(qa, qb) < 0 ? 1 : 0)) % 2;
    return (qa ^ qb) + 4 * s;
  };
  return std::make_shared<const FiniteGroup>(
      "Q8", std::vector<std::string>{"1", "i", "j", "k", "m1", "mi", "mj", "mk"}, table_from(8, mul),
      std::map<std::string, std::vector<std::size_t>>{{"I", {0, 1, 4, 5}}, {"Z", {0, 4}}});
}

/// Rational quaternions as C2 x C2 twisted by the quaternion sign cocycle.
inline TwistedGroup quaternion() {
  auto g = std::make_shared<const FiniteGroup>(
      "H", std::vector<std::string>{"1", "i", "j", "k"},
      table_from(4, [](std::size_t a, std::size_t b) { return a ^ b; }),
      std::map<std::string, std::vector<std::size_t>>{{"C", {0, 1}}, {"R", {0}}});
  std::vector<Cyclotomic> values;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) values.emplace_back(1, Rational(quaternion_sign(a, b)));
  return {g, Cocycle(4, std::move(values))};
}

/// Gaussian rationals as C2 twisted by c(i, i) = -1.
inline TwistedGroup complex_numbers() {
  auto g = std::make_shared<const FiniteGroup>(
      "CR", std::vector<std::string>{"1", "i"}, table_from(2, [](std::size_t a, std::size_t b) { return a ^ b; }),
      std::map<std::string, std::vector<std::size_t>>{{"R", {0}}});
  std::vector<Cyclotomic> values{Cyclotomic(1, 1), Cyclotomic(1, 1), Cyclotomic(1, 1), Cyclotomic(1, -1)};
  return {g, Cocycle(2, std::move(values))};
}

inline TwistedGroup untwisted(GroupPtr g) {
  auto n = g->order();
  return {std::move(g), Cocycle::trivial(n)};
}

inline Matrix<Cyclotomic> cmat(int conductor, std::size_t n, const std::vector<Cyclotomic>& v) {
  std::vector<Cyclotomic> e;
  for (const auto& x : v) e.push_back(x.lift(conductor));
  return Matrix<Cyclotomic>(n, n, std::move(e));
}

inline Cyclotomic q(long v) { return Cyclotomic(1, Rational(v)); }

/// Trivial, sign and the two-dimensional representation of S3, over Q.
inline std::vector<Representation> s3_irreps() {
  auto g = s3();
  Representation trivial{"trivial", 1, 1, {}};
  Representation sign{"sign", 1, 1, {}};
  Representation standard{"standard", 2, 1, {}};
  auto rot = cmat(1, 2, {q(0), q(-1), q(1), q(-1)});
  auto refl = cmat(1, 2, {q(0), q(1), q(1), q(0)});
  auto id = Matrix<Cyclotomic>::identity(2, q(1));
  for (std::size_t x = 0; x < 6; ++x) {
    std::size_t a = x % 3, b = x / 3;
    trivial.images.push_back(cmat(1, 1, {q(1)}));
    sign.images.push_back(cmat(1, 1, {q(b == 0 ? 1 : -1)}));
    Matrix<Cyclotomic> m = id;
    for (std::size_t k = 0; k < a; ++k) m = m * rot;
    if (b == 1) m = m * refl;
    standard.images.push_back(m);
  }
  return {trivial, sign, standard};
}

/// Four linear characters and the two-dimensional representation of Q8,
/// the latter over Q(i).
inline std::vector<Representation> q8_irreps() {
  std::vector<Representation> out;
  const char* names[] = {"trivial", "chi_i", "chi_j", "chi_k"};
  for (std::size_t c = 0; c < 4; ++c) {
    Representation r{names[c], 1, 1, {}};
    for (std::size_t x = 0; x < 8; ++x) {
      std::size_t unit = x % 4;
      // chi_c is trivial on 1, the c-th unit and -1; -1 on the other two units.
      bool plus = unit == 0 || c == 0 || unit == c;
      r.images.push_back(cmat(1, 1, {q(plus ? 1 : -1)}));
    }
    out.push_back(r);
  }
  Representation two{"two", 2, 4, {}};
  Cyclotomic z = Cyclotomic::zeta_power(4, 1);
  Cyclotomic one(4, 1), zero(4);
  auto unit_image = [&](std::size_t unit) {
    switch (unit) {
      case 0:
        return Matrix<Cyclotomic>::identity(2, one);
      case 1:
        return cmat(4, 2, {z, zero, zero, -z});
      case 2:
        return cmat(4, 2, {zero, -one, one, zero});
      default:
        return cmat(4, 2, {zero, -z, -z, zero});
    }
  };
  for (std::size_t x = 0; x < 8; ++x) {
    auto m = unit_image(x % 4);
    two.images.push_back(x / 4 == 0 ? m : -m);
  }
  out.push_back(two);
  return out;
}

/// Built-in group by name: C1, C2, C3, C4, C6, C2xC2, S3, D4, Q8, H, CR.
inline TwistedGroup by_name(const std::string& name) {
  if (name == "C1") return untwisted(c1());
  if (name == "C2") return untwisted(c2());
  if (name == "C3") return untwisted(c3());
  if (name == "C4") return untwisted(c4());
  if (name == "C6") return untwisted(c6());
  if (name == "C2xC2") return untwisted(klein());
  if (name == "S3") return untwisted(s3());
  if (name == "D4") return untwisted(d4());
  if (name == "Q8") return untwisted(q8());
  if (name == "H") return quaternion();
  if (name == "CR") return complex_numbers();
  throw InputError("unknown built-in group '" + name + "'");
}

inline std::vector<std::string> names() { return {"C1", "C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "H", "CR"}; }

}  // namespace fixtures
}  // namespace studydet
