#pragma once

// Finite groups given by Cayley tables, and normalized 2-cocycles with
// cyclotomic unit values.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "studydet/cyclotomic.hpp"

namespace studydet {

using Table = std::vector<std::vector<std::size_t>>;

struct ValidationReport {
  bool ok = true;
  std::string message;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Checks shape, identity, Latin square, inverses and associativity, in that
/// order, and reports the first violation found.
inline ValidationReport validate_group(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) return ValidationReport::fail("empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      return ValidationReport::fail("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                                    " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        return ValidationReport::fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) return ValidationReport::fail("identity axiom: no element acts as a two-sided identity");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[table[i][j]])
        return ValidationReport::fail("latin square: row " + std::to_string(i) + " repeats " +
                                      std::to_string(table[i][j]));
      if (col[table[j][i]])
        return ValidationReport::fail("latin square: column " + std::to_string(i) + " repeats " +
                                      std::to_string(table[j][i]));
      row[table[i][j]] = col[table[j][i]] = true;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h) found = table[g][h] == *identity && table[h][g] == *identity;
    if (!found) return ValidationReport::fail("inverse axiom: element " + std::to_string(g) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          return ValidationReport::fail("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                                        "," + std::to_string(c) + ")");
  return ValidationReport::pass();
}

/// A validated finite group with named elements.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::string> elements, Table table,
              std::map<std::string, std::vector<std::size_t>> subgroups = {})
      : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)) {
    require_structure(elements_.size() == table_.size(), "element list and table sizes differ");
    auto report = validate_group(table_);
    if (!report) throw StructuralError("group '" + name_ + "': " + report.message);
    for (std::size_t e = 0; e < order(); ++e) {
      bool ok = true;
      for (std::size_t g = 0; g < order() && ok; ++g) ok = table_[e][g] == g;
      if (ok) identity_ = e;
    }
    inverse_.resize(order());
    for (std::size_t g = 0; g < order(); ++g)
      for (std::size_t h = 0; h < order(); ++h)
        if (table_[g][h] == identity_) inverse_[g] = h;
    for (auto& [label, members] : subgroups) add_subgroup(label, std::move(members));
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element_name(std::size_t g) const { return elements_.at(g); }
  const Table& table() const { return table_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::map<std::string, std::vector<std::size_t>>& subgroups() const { return subgroups_; }

  std::size_t index_of(const std::string& element) const {
    auto it = std::find(elements_.begin(), elements_.end(), element);
    if (it == elements_.end()) throw InputError("group '" + name_ + "' has no element '" + element + "'");
    return static_cast<std::size_t>(it - elements_.begin());
  }

  const std::vector<std::size_t>& subgroup(const std::string& label) const {
    auto it = subgroups_.find(label);
    if (it == subgroups_.end()) throw InputError("group '" + name_ + "' has no subgroup named '" + label + "'");
    return it->second;
  }

  std::vector<std::size_t> all_elements() const {
    std::vector<std::size_t> out(order());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }

  std::vector<std::size_t> trivial_subgroup() const { return {identity_}; }

  void add_subgroup(const std::string& label, std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    require_structure(is_subgroup(members), "subgroup '" + label + "' of '" + name_ + "' is not closed");
    subgroups_[label] = std::move(members);
  }

  bool is_subgroup(const std::vector<std::size_t>& members) const {
    if (members.empty()) return false;
    std::vector<bool> in(order(), false);
    for (auto g : members) {
      if (g >= order()) return false;
      in[g] = true;
    }
    if (!in[identity_]) return false;
    for (auto a : members) {
      if (!in[inverse_[a]]) return false;
      for (auto b : members)
        if (!in[mul(a, b)]) return false;
    }
    return true;
  }

  bool commute_on(const std::vector<std::size_t>& members) const {
    for (auto a : members)
      for (auto b : members)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  bool is_abelian() const { return commute_on(all_elements()); }

  std::size_t element_order(std::size_t g) const {
    std::size_t k = 1;
    for (std::size_t x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
  }

  /// Least common multiple of the element orders in `members`.
  std::size_t exponent_of(const std::vector<std::size_t>& members) const {
    std::size_t e = 1;
    for (auto g : members) e = std::lcm(e, element_order(g));
    return e;
  }

  /// Same group with element g renamed to position perm[g].
  FiniteGroup relabeled(const std::vector<std::size_t>& perm) const {
    require_structure(perm.size() == order(), "relabeling has wrong length");
    std::vector<std::string> names(order());
    Table t(order(), std::vector<std::size_t>(order()));
    for (std::size_t a = 0; a < order(); ++a) {
      names[perm[a]] = elements_[a];
      for (std::size_t b = 0; b < order(); ++b) t[perm[a]][perm[b]] = perm[mul(a, b)];
    }
    std::map<std::string, std::vector<std::size_t>> subs;
    for (const auto& [label, members] : subgroups_) {
      std::vector<std::size_t> moved;
      for (auto g : members) moved.push_back(perm[g]);
      subs[label] = moved;
    }
    return FiniteGroup(name_, std::move(names), std::move(t), std::move(subs));
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.elements_ == b.elements_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> elements_;
  Table table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::map<std::string, std::vector<std::size_t>> subgroups_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Unit-valued function on pairs; c(a, b) is the scalar in g_a g_b = c(a, b) g_ab.
class Cocycle {
 public:
  Cocycle(std::size_t order, std::vector<Cyclotomic> values) : order_(order), values_(std::move(values)) {
    require_structure(values_.size() == order_ * order_, "cocycle must have order^2 values");
    conductor_ = 1;
    for (const auto& v : values_) conductor_ = lcm_conductor(conductor_, v.conductor());
    for (auto& v : values_) v = v.lift(conductor_);
  }

  static Cocycle trivial(std::size_t order) {
    return Cocycle(order, std::vector<Cyclotomic>(order * order, Cyclotomic(1, 1)));
  }

  std::size_t order() const { return order_; }
  int conductor() const { return conductor_; }
  const Cyclotomic& operator()(std::size_t a, std::size_t b) const { return values_[a * order_ + b]; }
  const std::vector<Cyclotomic>& values() const { return values_; }

  bool is_trivial() const {
    return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_one(); });
  }

  friend bool operator==(const Cocycle&, const Cocycle&) = default;

 private:
  std::size_t order_;
  int conductor_ = 1;
  std::vector<Cyclotomic> values_;
};

/// Units, normalization c(1,g) = c(g,1) = 1, and the 2-cocycle identity
/// c(a,b) c(ab,c) = c(b,c) c(a,bc) on every triple.
inline ValidationReport validate_cocycle(const FiniteGroup& g, const Cocycle& c) {
  if (c.order() != g.order()) return ValidationReport::fail("cocycle size does not match group order");
  const std::size_t n = g.order();
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (c(a, b).is_zero())
        return ValidationReport::fail("unit: c(" + g.element_name(a) + "," + g.element_name(b) + ") = 0");
  for (std::size_t a = 0; a < n; ++a) {
    if (!c(e, a).is_one())
      return ValidationReport::fail("normalization: c(" + g.element_name(e) + "," + g.element_name(a) +
                                    ") = " + c(e, a).to_string());
    if (!c(a, e).is_one())
      return ValidationReport::fail("normalization: c(" + g.element_name(a) + "," + g.element_name(e) +
                                    ") = " + c(a, e).to_string());
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d)
        if (!(c(a, b) * c(g.mul(a, b), d) == c(b, d) * c(a, g.mul(b, d))))
          return ValidationReport::fail("cocycle identity fails at (" + g.element_name(a) + "," +
                                        g.element_name(b) + "," + g.element_name(d) + ")");
  return ValidationReport::pass();
}

}  // namespace studydet
