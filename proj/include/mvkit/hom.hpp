// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_HOM_HPP_
#define MVKIT_HOM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mvkit/algebra.hpp"

namespace mvkit {

// Structure-preserving map between MV-algebras, stored as the image array
// over the (finite) source carrier in canonical order. The target may be
// infinite. The public constructor verifies preservation of +, ', 0, 1
// exhaustively; the derived operations are then preserved automatically.
class Hom {
 public:
  Hom(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

  static Hom identity(const AlgebraPtr& a);
  // Trusted constructor for maps whose hom property holds by construction.
  static Hom unchecked(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }

  const Element& apply_rank(std::uint64_t source_rank) const;
  Element apply(const Element& x) const;

  bool is_homomorphism() const;  // re-check, exhaustive over pairs
  bool injective() const;
  bool surjective() const;       // false whenever the target is infinite

  std::string str() const;       // "0->0, 1/2->1/2, 1->1"

 private:
  struct unchecked_t {};
  Hom(unchecked_t, AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<Element> images_;
};

// g after f; requires f.target and g.source to be the same algebra.
Hom compose(const Hom& g, const Hom& f);

struct SubalgebraResult {
  AlgebraPtr algebra;  // explicit table over the closed subset
  Hom inclusion;       // into the ambient algebra
};

// Smallest subuniverse containing gens and {0,1}, closed under + and '.
// Works on any algebra whose operations are exactly computable; the closure
// of finitely many elements is always finite for the supported kinds.
SubalgebraResult generate_subalgebra(const AlgebraPtr& a, const std::vector<Element>& gens);

}  // namespace mvkit

#endif  // MVKIT_HOM_HPP_
