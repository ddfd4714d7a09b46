// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_LGROUP_HPP_
#define MVKIT_LGROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvkit/algebra.hpp"
#include "mvkit/hom.hpp"

namespace mvkit {

enum class GroupRep { rational_lattice, lex_pair, chang };

// Finite sequence (x1, ..., xk) over an MV-algebra with x_i + x_{i+1} = x_i
// for all i (adjacent absorption); trailing zeros are trimmed away, so the
// empty sequence is the monoid zero.
class GoodSequence {
 public:
  // Validates absorption and trims; throws NotGoodSequence.
  GoodSequence(AlgebraPtr base, std::vector<Element> entries);
  static GoodSequence zero(AlgebraPtr base);
  static GoodSequence singleton(const Element& x);

  const AlgebraPtr& base() const { return base_; }
  const std::vector<Element>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  // Entry with 0-padding past the end.
  Element entry(std::size_t i) const;

  std::string str() const;

 private:
  GoodSequence() = default;
  friend GoodSequence good_add(const GoodSequence&, const GoodSequence&);
  friend GoodSequence good_join(const GoodSequence&, const GoodSequence&);
  friend GoodSequence good_meet(const GoodSequence&, const GoodSequence&);
  friend std::optional<GoodSequence> good_subtract(const GoodSequence&,
                                                   const GoodSequence&);
  static GoodSequence trusted(AlgebraPtr base, std::vector<Element> entries);

  AlgebraPtr base_;
  std::vector<Element> entries_;
};

// Monoid sum: c_i = x_i + y_i + sum_j (x_j . y_{i-j}).
GoodSequence good_add(const GoodSequence& a, const GoodSequence& b);
// Componentwise order after zero padding.
bool good_leq(const GoodSequence& a, const GoodSequence& b);
bool good_equal(const GoodSequence& a, const GoodSequence& b);
GoodSequence good_join(const GoodSequence& a, const GoodSequence& b);
GoodSequence good_meet(const GoodSequence& a, const GoodSequence& b);
// Solves b + c = a for c; nullopt when no solution exists (or the bounded
// search gives up, which equality handling never relies on).
std::optional<GoodSequence> good_subtract(const GoodSequence& a, const GoodSequence& b);

// Element of a UnitalGroup, tagged with its owning group.
class GroupElement {
 public:
  using VecQ = std::vector<Rational>;
  struct LexValue {
    std::shared_ptr<const GroupElement> first;
    std::shared_ptr<const GroupElement> second;
  };
  // Formal difference pos - neg of good sequences; equality is the monoid
  // equation, a normal form is kept when the bounded subtraction finds one.
  struct ChangValue {
    GoodSequence pos;
    GoodSequence neg;
  };
  using Value = std::variant<VecQ, LexValue, ChangValue>;

  const GroupPtr& owner() const { return owner_; }
  const Value& value() const { return value_; }
  const VecQ& vec() const;
  const LexValue& lex() const;
  const ChangValue& chang() const;

 private:
  friend class UnitalGroup;
  GroupElement(GroupPtr owner, Value value)
      : owner_(std::move(owner)), value_(std::move(value)) {}
  GroupPtr owner_;
  Value value_;
};

// Unital abelian lattice-ordered group in one of three representations:
//
//  rational_lattice  subgroup of Q^k (Z-span of the generators, or the whole
//                    Q-span when `divisible`) under the coordinatewise order
//  lex_pair          G1 x G2 under the lexicographic order; a lattice only
//                    when the first component is linearly ordered
//  chang             group of formal differences of good sequences over a
//                    finite MV-algebra
//
// The strong unit is certified at construction: a concrete n with g <= n.u is
// stored for every generator and re-checked.
class UnitalGroup : public std::enable_shared_from_this<UnitalGroup> {
 public:
  static GroupPtr rational_lattice(std::uint32_t rank,
                                   std::vector<GroupElement::VecQ> generators,
                                   GroupElement::VecQ unit, bool divisible);
  static GroupPtr integers();                         // (Z, 1)
  static GroupPtr rationals();                        // (Q, 1)
  static GroupPtr scaled_integers(std::uint32_t n);   // ((1/n)Z, 1)
  static GroupPtr lex_pair(GroupPtr first, GroupPtr second, GroupElement unit_first,
                           GroupElement unit_second);
  static GroupPtr chang_group(AlgebraPtr base);       // base finite and verified

  GroupRep rep() const { return rep_; }
  std::uint32_t rank() const;                              // rational_lattice
  bool divisible_span() const;                             // rational_lattice
  const std::vector<GroupElement::VecQ>& generators() const;
  const AlgebraPtr& chang_base() const;
  const GroupPtr& lex_first() const;
  const GroupPtr& lex_second() const;

  GroupElement zero_element() const;
  GroupElement unit() const;
  const std::vector<std::uint32_t>& unit_certificates() const;  // n per generator

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  GroupElement subtract(const GroupElement& x, const GroupElement& y) const;
  GroupElement scalar(std::int64_t n, const GroupElement& x) const;
  GroupElement join(const GroupElement& x, const GroupElement& y) const;  // NotALattice on
  GroupElement meet(const GroupElement& x, const GroupElement& y) const;  // unordered lex
  bool leq(const GroupElement& x, const GroupElement& y) const;
  bool equal(const GroupElement& x, const GroupElement& y) const;
  bool linearly_ordered() const;

  // Membership and element construction for vector representations.
  bool contains_vec(const GroupElement::VecQ& v) const;
  GroupElement element_from_vec(GroupElement::VecQ v) const;  // checks membership
  GroupElement element_from_chang(GroupElement::ChangValue v) const;
  GroupElement element_from_lex(GroupElement first, GroupElement second) const;

  // Interval [0, u] support for the gamma construction.
  bool in_interval(const GroupElement& x) const;
  bool interval_finite() const;
  std::vector<GroupElement> enumerate_interval() const;  // canonical order
  // Fixed total order on elements used to sort finite carriers; extends the
  // group order on comparable pairs.
  bool canonical_less(const GroupElement& x, const GroupElement& y) const;

  std::string element_str(const GroupElement& x) const;
  std::string describe() const;

  void require_owned(const GroupElement& x) const;

 private:
  struct RationalLattice {
    std::uint32_t rank = 0;
    std::vector<GroupElement::VecQ> generators;
    GroupElement::VecQ unit;
    bool divisible = false;
    std::vector<std::uint32_t> unit_certs;
  };
  struct LexData {
    GroupPtr first;
    GroupPtr second;
    std::shared_ptr<const GroupElement> unit_first;
    std::shared_ptr<const GroupElement> unit_second;
  };
  struct ChangData {
    AlgebraPtr base;
  };

  UnitalGroup() = default;
  GroupElement mk(GroupElement::Value v) const {
    return GroupElement(shared_from_this(), std::move(v));
  }
  GroupElement chang_normalized(GoodSequence pos, GoodSequence neg) const;

  GroupRep rep_ = GroupRep::rational_lattice;
  std::optional<RationalLattice> lattice_;
  std::optional<LexData> lex_;
  std::optional<ChangData> chang_;
};

// ---- the Gamma and Xi functors ------------------------------------------

// MV-algebra on [0, u] with x + y := (x + y) ^ u and x' := u - x.
AlgebraPtr gamma(GroupPtr group);

struct XiResult {
  GroupPtr group;              // Chang group of the base
  AlgebraPtr gamma_algebra;    // Gamma(Xi(base))
  Hom unit_embedding;          // x |-> class of (x), lands in [0, u]
};
XiResult xi(AlgebraPtr base);

// Natural map x |-> (x) verified to be a bijective homomorphism onto the
// Gamma interval of the Chang group. Throws RoundTripFailure on any defect,
// which indicates an arithmetic bug rather than a property of the input.
Hom mundici_roundtrip(AlgebraPtr base);

// Induced map on Chang groups of a base homomorphism (entries mapped
// pointwise); used to exercise functoriality.
GroupElement xi_map(const Hom& f, const GroupPtr& source_group,
                    const GroupPtr& target_group, const GroupElement& x);

}  // namespace mvkit

#endif  // MVKIT_LGROUP_HPP_
