#pragma once

// Matrix representations of finite groups supplied as data.

#include <cstddef>
#include <string>
#include <vector>

#include "studydet/cyclotomic.hpp"
#include "studydet/group.hpp"
#include "studydet/matrix.hpp"

namespace studydet {

struct Representation {
  std::string name;
  std::size_t degree = 1;
  int conductor = 1;
  std::vector<Matrix<Cyclotomic>> images;  // indexed by group element
};

/// Checks sizes, phi(1) = I and phi(g) phi(h) = phi(gh) for every pair.
inline ValidationReport validate_representation(const FiniteGroup& g, const Representation& rep) {
  if (rep.images.size() != g.order())
    return ValidationReport::fail("representation '" + rep.name + "' has " + std::to_string(rep.images.size()) +
                                  " images for a group of order " + std::to_string(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto& m = rep.images[x];
    if (m.rows() != rep.degree || m.cols() != rep.degree)
      return ValidationReport::fail("representation '" + rep.name + "': image of " + g.element_name(x) +
                                    " is not " + std::to_string(rep.degree) + "x" + std::to_string(rep.degree));
    if (m.entry_prototype().conductor() != rep.conductor)
      return ValidationReport::fail("representation '" + rep.name + "': image of " + g.element_name(x) +
                                    " has the wrong conductor");
  }
  Cyclotomic one(rep.conductor, 1);
  if (!(rep.images[g.identity()] == Matrix<Cyclotomic>::identity(rep.degree, one)))
    return ValidationReport::fail("representation '" + rep.name + "': identity is not sent to I");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (!(rep.images[a] * rep.images[b] == rep.images[g.mul(a, b)]))
        return ValidationReport::fail("representation '" + rep.name + "' is not multiplicative at (" +
                                      g.element_name(a) + "," + g.element_name(b) + ")");
  return ValidationReport::pass();
}

}  // namespace studydet
