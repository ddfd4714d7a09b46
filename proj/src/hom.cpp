// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/hom.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mvkit {

Hom::Hom(unchecked_t, AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_->is_finite()) {
    throw UnsupportedKind("homomorphisms are stored over finite sources");
  }
  if (images_.size() != source_->size()) {
    throw InvalidParameter("image array size does not match the source carrier");
  }
  for (const auto& im : images_) target_->require_owned(im);
}

Hom::Hom(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images)
    : Hom(unchecked_t{}, std::move(source), std::move(target), std::move(images)) {
  if (!is_homomorphism()) {
    throw InvalidParameter("the given map is not an MV-homomorphism");
  }
}

Hom Hom::unchecked(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images) {
  return Hom(unchecked_t{}, std::move(source), std::move(target), std::move(images));
}

Hom Hom::identity(const AlgebraPtr& a) {
  return unchecked(a, a, a->carrier());
}

const Element& Hom::apply_rank(std::uint64_t source_rank) const {
  return images_.at(source_rank);
}

Element Hom::apply(const Element& x) const {
  return images_.at(source_->rank_of(x));
}

bool Hom::is_homomorphism() const {
  const std::uint64_t m = source_->size();
  auto carrier = source_->carrier();
  if (!target_->equal(apply_rank(source_->rank_of(source_->zero())), target_->zero())) {
    return false;
  }
  if (!target_->equal(apply_rank(source_->rank_of(source_->one())), target_->one())) {
    return false;
  }
  for (std::uint64_t x = 0; x < m; ++x) {
    if (!target_->equal(apply(source_->neg(carrier[x])), target_->neg(images_[x]))) {
      return false;
    }
    for (std::uint64_t y = 0; y < m; ++y) {
      if (!target_->equal(apply(source_->oplus(carrier[x], carrier[y])),
                          target_->oplus(images_[x], images_[y]))) {
        return false;
      }
    }
  }
  return true;
}

bool Hom::injective() const {
  const std::uint64_t m = images_.size();
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = i + 1; j < m; ++j) {
      if (target_->equal(images_[i], images_[j])) return false;
    }
  }
  return true;
}

bool Hom::surjective() const {
  if (!target_->is_finite()) return false;
  const std::uint64_t n = target_->size();
  std::vector<bool> hit(n, false);
  for (const auto& im : images_) hit[target_->rank_of(im)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string Hom::str() const {
  std::ostringstream os;
  auto carrier = source_->carrier();
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    if (i) os << ", ";
    os << source_->label(carrier[i]) << "->" << target_->label(images_[i]);
  }
  return os.str();
}

Hom compose(const Hom& g, const Hom& f) {
  if (!same_algebra(f.target(), g.source())) {
    throw InvalidParameter("compose: inner target differs from outer source");
  }
  std::vector<Element> images;
  images.reserve(f.images().size());
  for (const auto& mid : f.images()) images.push_back(g.apply(mid));
  return Hom::unchecked(f.source(), g.target(), std::move(images));
}

SubalgebraResult generate_subalgebra(const AlgebraPtr& a, const std::vector<Element>& gens) {
  for (const auto& g : gens) a->require_owned(g);

  // Closure of gens + {0,1} under + and '. Elements of the supported kinds
  // have exact equality, and finitely many generators always close finitely
  // here (rational generators share a common denominator).
  std::vector<Element> closure;
  auto index_of = [&](const Element& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < closure.size(); ++i) {
      if (a->equal(closure[i], x)) return i;
    }
    return std::nullopt;
  };
  auto add = [&](const Element& x) {
    if (!index_of(x)) closure.push_back(x);
  };
  add(a->zero());
  add(a->one());
  for (const auto& g : gens) add(g);

  constexpr std::size_t kClosureCap = 4096;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t snapshot = closure.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const Element n = a->neg(closure[i]);
      if (!index_of(n)) {
        closure.push_back(n);
        grew = true;
      }
      for (std::size_t j = 0; j <= i; ++j) {
        const Element s = a->oplus(closure[i], closure[j]);
        if (!index_of(s)) {
          closure.push_back(s);
          grew = true;
        }
        if (closure.size() > kClosureCap) {
          throw UnsupportedGenerators("generated subalgebra exceeds the closure cap");
        }
      }
    }
  }

  // Discovery order is deterministic; the table factory canonicalises by <=
  // afterwards, and the inclusion is rebuilt through the (unique) labels.
  if (a->is_finite()) {
    std::sort(closure.begin(), closure.end(), [&](const Element& x, const Element& y) {
      return a->rank_of(x) < a->rank_of(y);
    });
  }

  const std::uint32_t m = static_cast<std::uint32_t>(closure.size());
  auto local_rank = [&](const Element& x) -> std::uint32_t {
    for (std::uint32_t i = 0; i < m; ++i) {
      if (a->equal(closure[i], x)) return i;
    }
    throw NotASubalgebra("closure is not closed (internal)");
  };

  std::vector<std::uint32_t> op(std::size_t(m) * m), ng(m);
  std::vector<std::string> labels(m);
  for (std::uint32_t x = 0; x < m; ++x) {
    labels[x] = a->label(closure[x]);
    ng[x] = local_rank(a->neg(closure[x]));
    for (std::uint32_t y = 0; y < m; ++y) {
      op[std::size_t(x) * m + y] = local_rank(a->oplus(closure[x], closure[y]));
    }
  }
  AlgebraPtr sub = Algebra::from_table(m, op, ng, local_rank(a->zero()),
                                       local_rank(a->one()), labels);
  // from_table canonicalises by <=; rebuild the inclusion in that order.
  std::vector<Element> images;
  images.reserve(m);
  for (std::uint32_t r = 0; r < m; ++r) {
    const std::string want = sub->label(sub->element_at(r));
    bool found = false;
    for (std::uint32_t i = 0; i < m; ++i) {
      if (labels[i] == want) {
        images.push_back(closure[i]);
        found = true;
        break;
      }
    }
    if (!found) throw NotASubalgebra("label mismatch while building inclusion");
  }
  return SubalgebraResult{sub, Hom::unchecked(sub, a, std::move(images))};
}

}  // namespace mvkit
