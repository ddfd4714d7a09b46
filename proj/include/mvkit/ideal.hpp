// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_IDEAL_HPP_
#define MVKIT_IDEAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvkit/algebra.hpp"
#include "mvkit/hom.hpp"

namespace mvkit {

// Ideal of an MV-algebra: contains 0, downward closed, closed under +.
// Finite algebras store the member set as sorted canonical ranks; on the
// infinite kinds only the zero ideal and the improper whole ideal are
// representable.
class Ideal {
 public:
  enum class Extent { members, zero_only, whole };

  static Ideal of_members(AlgebraPtr algebra, std::vector<std::uint32_t> members);
  static Ideal zero_ideal(AlgebraPtr algebra);
  static Ideal whole_ideal(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  Extent extent() const { return extent_; }
  const std::vector<std::uint32_t>& members() const;  // Extent::members only

  bool contains_rank(std::uint32_t rank) const;
  bool contains(const Element& x) const;
  std::uint64_t size() const;
  bool is_proper() const;
  bool is_zero_ideal() const;
  bool is_whole() const;
  bool same_members(const Ideal& other) const;
  bool subset_of(const Ideal& other) const;

  std::vector<Element> elements() const;
  std::string str() const;  // "{0, 1/3}"

  // Flags cached by the enumeration and classification passes.
  std::optional<bool> prime;
  std::optional<bool> minimal_prime;
  std::optional<bool> stonean;
  std::optional<bool> summand;

 private:
  Ideal() = default;
  AlgebraPtr algebra_;
  Extent extent_ = Extent::members;
  std::vector<std::uint32_t> members_;  // sorted
};

// Independent predicate: 0 in S, downward closed, closed under +. Used by the
// generators below and exposed so callers can validate foreign sets.
bool is_ideal_set(const AlgebraPtr& a, const std::vector<std::uint32_t>& sorted_ranks);

// Least ideal containing gens; on infinite algebras only the degenerate cases
// are decided (zero generators give {0}; a closure reaching 1 gives the whole
// flag) and anything else raises UnsupportedKind.
Ideal generate_ideal(const AlgebraPtr& a, const std::vector<Element>& gens);

struct IdealLattice {
  std::vector<Ideal> ideals;                            // canonical order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)
  std::size_t index_of(const Ideal& i) const;
};

// Every ideal exactly once, found by single-element extensions from {0};
// covers are the covering inclusions. Carrier capped at 4096.
IdealLattice enumerate_ideals(const AlgebraPtr& a);

struct PrimesResult {
  std::vector<Ideal> primes;          // flags set
  std::vector<Ideal> minimal_primes;  // subset of primes
};
PrimesResult primes_and_minimal_primes(const AlgebraPtr& a);

// theta_I partition data over the base carrier.
struct Congruence {
  AlgebraPtr algebra;
  std::vector<std::uint32_t> class_of;    // base rank -> class id (by least rep)
  std::vector<std::uint32_t> least_rep;   // class id -> base rank
};
Congruence congruence(const AlgebraPtr& a, const Ideal& i);

struct QuotientResult {
  AlgebraPtr algebra;  // AlgebraKind::quotient
  Hom projection;      // surjective natural map
};
QuotientResult quotient(const AlgebraPtr& a, const Ideal& i);

// M1 + I: union of the theta_I classes of the included subalgebra; returns
// the subalgebra of the ambient algebra with its inclusion.
SubalgebraResult coset_sum_subalgebra(const Hom& inclusion, const Ideal& i);

// B(a): elements with x + x = x.
std::vector<Element> boolean_elements(const AlgebraPtr& a);
// I is stonean iff I equals the downset of its boolean part.
bool is_stonean(const AlgebraPtr& a, const Ideal& i);

struct SummandDecomposition {
  Element witness;    // boolean a with I = down(a)
  Ideal ideal;        // I
  Ideal complement;   // down(a')
};
// Certifies <I u J> = M, I n J = {0} and the direct decomposition
// M ~ M/I x M/I^perp before returning.
std::optional<SummandDecomposition> summand_decomposition(const AlgebraPtr& a, const Ideal& i);

struct ArchimedeanProfile {
  std::vector<std::optional<std::uint32_t>> least_boolean_multiple;  // per rank
  bool hyperarchimedean = false;
};
// Searches n <= |carrier|; the sequence n.x is monotone in a finite poset so
// the bound is exact.
ArchimedeanProfile archimedean_profile(const AlgebraPtr& a);

ClassifyFlags classify(const AlgebraPtr& a);

// Canonical semisimple coordinates of a finite algebra: one rational value in
// [0,1] per minimal prime, x |-> rank of x/P scaled into the quotient chain.
// The map is injective and the product map is onto, which is re-checked.
struct SemisimpleEmbedding {
  std::vector<Ideal> minimal_primes;
  std::vector<std::uint32_t> chain_len;          // |M/P| per coordinate
  std::vector<std::vector<Rational>> coords;     // base rank -> vector
};
SemisimpleEmbedding semisimple_embedding(const AlgebraPtr& a);

}  // namespace mvkit

#endif  // MVKIT_IDEAL_HPP_
