#pragma once

// Common vocabulary shared by every ring type in the library: error types,
// the ring descriptor tree, and the element concept used by the generic
// matrix algorithms.

#include <concepts>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace studydet {

/// Raised when operands do not fit together (descriptor mismatch, ragged
/// blocks, non-square input, ...).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mathematical hypothesis of an operation does not hold
/// (non-abelian subgroup, basis conditions unmet, size budget exceeded).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by parsers and file loaders.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tag tree describing how a ring was constructed.
struct RingDescriptor {
  enum class Kind { rational, cyclotomic, polynomial, twisted_group_algebra, matrix };

  Kind kind = Kind::rational;
  int parameter = 0;               // conductor, or matrix size
  std::vector<std::string> names;  // polynomial variables
  std::string label;               // group name for twisted group algebras
  std::shared_ptr<const RingDescriptor> base;

  static RingDescriptor rational() { return {}; }

  static RingDescriptor cyclotomic(int conductor) {
    RingDescriptor d;
    d.kind = Kind::cyclotomic;
    d.parameter = conductor;
    return d;
  }

  static RingDescriptor polynomial(std::vector<std::string> vars, RingDescriptor coeff) {
    RingDescriptor d;
    d.kind = Kind::polynomial;
    d.names = std::move(vars);
    d.base = std::make_shared<const RingDescriptor>(std::move(coeff));
    return d;
  }

  static RingDescriptor twisted_group_algebra(std::string group, RingDescriptor coeff) {
    RingDescriptor d;
    d.kind = Kind::twisted_group_algebra;
    d.label = std::move(group);
    d.base = std::make_shared<const RingDescriptor>(std::move(coeff));
    return d;
  }

  static RingDescriptor matrix(int size, RingDescriptor entry) {
    RingDescriptor d;
    d.kind = Kind::matrix;
    d.parameter = size;
    d.base = std::make_shared<const RingDescriptor>(std::move(entry));
    return d;
  }

  std::string to_string() const {
    std::ostringstream out;
    switch (kind) {
      case Kind::rational:
        out << "rational";
        break;
      case Kind::cyclotomic:
        out << "cyclotomic(" << parameter << ")";
        break;
      case Kind::polynomial: {
        out << "polynomial([";
        for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
        out << "], " << base->to_string() << ")";
        break;
      }
      case Kind::twisted_group_algebra:
        out << "twisted-group-algebra(" << label << ", " << base->to_string() << ")";
        break;
      case Kind::matrix:
        out << "matrix(" << parameter << ", " << base->to_string() << ")";
        break;
    }
    return out.str();
  }

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.kind != b.kind || a.parameter != b.parameter || a.names != b.names || a.label != b.label)
      return false;
    if (!a.base || !b.base) return !a.base && !b.base;
    return *a.base == *b.base;
  }
};

/// What the generic algorithms need from an element type. Descriptors are
/// carried at runtime, so constants are produced from an existing element.
template <class R>
concept RingElement = std::copyable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<R>;
  { a.one_like() } -> std::convertible_to<R>;
  { a.descriptor() } -> std::convertible_to<RingDescriptor>;
};

template <RingElement R>
R power(const R& base, unsigned exponent) {
  R result = base.one_like();
  R square = base;
  while (exponent) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent) square = square * square;
  }
  return result;
}

inline void require_structure(bool ok, const std::string& what) {
  if (!ok) throw StructuralError(what);
}

inline void require_precondition(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace studydet
