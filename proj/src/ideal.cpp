// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mvkit {

namespace {

constexpr std::uint64_t kEnumerationCap = 4096;

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_finite(const AlgebraPtr& a, const char* what) {
  if (!a->is_finite()) {
    throw UnsupportedKind(std::string(what) + " requires a finite algebra");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Ideal
// ---------------------------------------------------------------------------

Ideal Ideal::of_members(AlgebraPtr algebra, std::vector<std::uint32_t> members) {
  require_finite(algebra, "an explicit ideal");
  members = sorted_unique(std::move(members));
  if (!is_ideal_set(algebra, members)) {
    throw NotAnIdeal("member set is not an ideal");
  }
  Ideal i;
  i.algebra_ = std::move(algebra);
  i.extent_ = Extent::members;
  i.members_ = std::move(members);
  return i;
}

Ideal Ideal::zero_ideal(AlgebraPtr algebra) {
  if (algebra->is_finite()) return of_members(std::move(algebra), {0});
  Ideal i;
  i.algebra_ = std::move(algebra);
  i.extent_ = Extent::zero_only;
  return i;
}

Ideal Ideal::whole_ideal(AlgebraPtr algebra) {
  if (algebra->is_finite()) {
    std::vector<std::uint32_t> all(algebra->size());
    for (std::uint32_t r = 0; r < all.size(); ++r) all[r] = r;
    return of_members(std::move(algebra), std::move(all));
  }
  Ideal i;
  i.algebra_ = std::move(algebra);
  i.extent_ = Extent::whole;
  return i;
}

const std::vector<std::uint32_t>& Ideal::members() const {
  if (extent_ != Extent::members) {
    throw UnsupportedKind("ideal of an infinite algebra has no member list");
  }
  return members_;
}

bool Ideal::contains_rank(std::uint32_t rank) const {
  switch (extent_) {
    case Extent::members:
      return std::binary_search(members_.begin(), members_.end(), rank);
    case Extent::zero_only:
      return rank == 0;
    case Extent::whole:
      return true;
  }
  return false;
}

bool Ideal::contains(const Element& x) const {
  algebra_->require_owned(x);
  switch (extent_) {
    case Extent::members:
      return contains_rank(static_cast<std::uint32_t>(algebra_->rank_of(x)));
    case Extent::zero_only:
      return algebra_->is_zero(x);
    case Extent::whole:
      return true;
  }
  return false;
}

std::uint64_t Ideal::size() const {
  if (extent_ == Extent::members) return members_.size();
  if (extent_ == Extent::zero_only) return 1;
  return algebra_->size();  // throws on infinite, as it should
}

bool Ideal::is_proper() const {
  switch (extent_) {
    case Extent::members:
      // proper iff 1 is not a member; the trivial algebra has no proper ideal
      return !contains_rank(static_cast<std::uint32_t>(algebra_->size() - 1));
    case Extent::zero_only:
      return true;
    case Extent::whole:
      return false;
  }
  return false;
}

bool Ideal::is_zero_ideal() const {
  if (extent_ == Extent::zero_only) return true;
  return extent_ == Extent::members && members_.size() == 1 && members_[0] == 0;
}

bool Ideal::is_whole() const {
  if (extent_ == Extent::whole) return true;
  return extent_ == Extent::members && members_.size() == algebra_->size();
}

bool Ideal::same_members(const Ideal& other) const {
  if (!same_algebra(algebra_, other.algebra_)) return false;
  if (extent_ == Extent::members && other.extent_ == Extent::members) {
    return members_ == other.members_;
  }
  return extent_ == other.extent_;
}

bool Ideal::subset_of(const Ideal& other) const {
  if (!same_algebra(algebra_, other.algebra_)) return false;
  if (extent_ == Extent::members && other.extent_ == Extent::members) {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }
  if (is_zero_ideal()) return true;
  return other.is_whole();
}

std::vector<Element> Ideal::elements() const {
  std::vector<Element> out;
  for (auto r : members()) out.push_back(algebra_->element_at(r));
  return out;
}

std::string Ideal::str() const {
  if (extent_ == Extent::zero_only) return "{0}";
  if (extent_ == Extent::whole) return "{whole}";
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += algebra_->label(algebra_->element_at(members_[i]));
  }
  return out + "}";
}

bool is_ideal_set(const AlgebraPtr& a, const std::vector<std::uint32_t>& sorted_ranks) {
  require_finite(a, "the ideal predicate");
  const std::uint64_t m = a->size();
  auto in = [&](std::uint32_t r) {
    return std::binary_search(sorted_ranks.begin(), sorted_ranks.end(), r);
  };
  if (!in(0)) return false;
  for (auto r : sorted_ranks) {
    if (r >= m) return false;
  }
  auto carrier = a->carrier();
  for (auto r : sorted_ranks) {
    // downward closure
    for (std::uint32_t s = 0; s < m; ++s) {
      if (a->leq(carrier[s], carrier[r]) && !in(s)) return false;
    }
    // closure under +
    for (auto t : sorted_ranks) {
      if (!in(static_cast<std::uint32_t>(a->rank_of(a->oplus(carrier[r], carrier[t]))))) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generation and enumeration
// ---------------------------------------------------------------------------

namespace {

// Closure of a seed set under + followed by downward closure, to fixpoint.
std::vector<std::uint32_t> ideal_closure(const AlgebraPtr& a,
                                         std::vector<std::uint32_t> seed) {
  const std::uint64_t m = a->size();
  auto carrier = a->carrier();
  std::vector<bool> in(m, false);
  in[0] = true;
  for (auto r : seed) in[r] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t x = 0; x < m; ++x) {
      if (!in[x]) continue;
      for (std::uint32_t y = 0; y <= x; ++y) {
        if (!in[y]) continue;
        const auto s = static_cast<std::uint32_t>(a->rank_of(a->oplus(carrier[x], carrier[y])));
        if (!in[s]) {
          in[s] = true;
          grew = true;
        }
      }
    }
    for (std::uint32_t x = 0; x < m; ++x) {
      if (!in[x]) continue;
      for (std::uint32_t y = 0; y < m; ++y) {
        if (!in[y] && a->leq(carrier[y], carrier[x])) {
          in[y] = true;
          grew = true;
        }
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < m; ++r) {
    if (in[r]) out.push_back(r);
  }
  return out;
}

}  // namespace

Ideal generate_ideal(const AlgebraPtr& a, const std::vector<Element>& gens) {
  for (const auto& g : gens) a->require_owned(g);
  if (!a->is_finite()) {
    bool all_zero = true;
    bool reaches_one = false;
    for (const auto& g : gens) {
      if (!a->is_zero(g)) all_zero = false;
      if (a->is_one(g)) reaches_one = true;
    }
    if (all_zero) return Ideal::zero_ideal(a);
    if (reaches_one) return Ideal::whole_ideal(a);
    // On the divisible chain any nonzero generator reaches 1 by repeated +.
    if (a->kind() == AlgebraKind::divisible_rational_chain) {
      return Ideal::whole_ideal(a);
    }
    throw UnsupportedKind("ideal generation on an infinite algebra");
  }
  std::vector<std::uint32_t> seed;
  seed.reserve(gens.size());
  for (const auto& g : gens) seed.push_back(static_cast<std::uint32_t>(a->rank_of(g)));
  return Ideal::of_members(a, ideal_closure(a, sorted_unique(std::move(seed))));
}

std::size_t IdealLattice::index_of(const Ideal& i) const {
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (ideals[k].same_members(i)) return k;
  }
  throw InvalidParameter("ideal not present in the lattice");
}

IdealLattice enumerate_ideals(const AlgebraPtr& a) {
  require_finite(a, "ideal enumeration");
  if (a->size() > kEnumerationCap) {
    throw TooLarge("ideal enumeration capped at " + std::to_string(kEnumerationCap));
  }
  const std::uint32_t m = static_cast<std::uint32_t>(a->size());

  // BFS over ideals generated by single-element extensions of known ideals.
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue;
  const auto zero_set = ideal_closure(a, {});
  seen.insert(zero_set);
  queue.push_back(zero_set);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (std::uint32_t x = 0; x < m; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto extended = current;
      extended.push_back(x);
      auto closed = ideal_closure(a, sorted_unique(std::move(extended)));
      if (seen.insert(closed).second) queue.push_back(std::move(closed));
    }
  }

  IdealLattice lattice;
  for (const auto& s : seen) {          // std::set orders by (lex), refine below
    lattice.ideals.push_back(Ideal::of_members(a, s));
  }
  std::sort(lattice.ideals.begin(), lattice.ideals.end(), [](const Ideal& x, const Ideal& y) {
    if (x.members().size() != y.members().size()) {
      return x.members().size() < y.members().size();
    }
    return x.members() < y.members();
  });

  const std::size_t t = lattice.ideals.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      if (!lattice.ideals[i].subset_of(lattice.ideals[j])) continue;
      bool covering = true;
      for (std::size_t k = 0; k < t && covering; ++k) {
        if (k == i || k == j) continue;
        if (lattice.ideals[i].subset_of(lattice.ideals[k]) &&
            lattice.ideals[k].subset_of(lattice.ideals[j])) {
          covering = false;
        }
      }
      if (covering) lattice.covers.emplace_back(i, j);
    }
  }
  return lattice;
}

PrimesResult primes_and_minimal_primes(const AlgebraPtr& a) {
  IdealLattice lattice = enumerate_ideals(a);
  auto carrier = a->carrier();
  const std::uint64_t m = a->size();

  PrimesResult out;
  for (auto& ideal : lattice.ideals) {
    if (!ideal.is_proper()) continue;
    bool prime = true;
    for (std::uint64_t x = 0; x < m && prime; ++x) {
      for (std::uint64_t y = x + 1; y < m && prime; ++y) {
        const bool xy = ideal.contains(a->ominus(carrier[x], carrier[y]));
        const bool yx = ideal.contains(a->ominus(carrier[y], carrier[x]));
        if (!xy && !yx) prime = false;
      }
    }
    Ideal copy = ideal;
    copy.prime = prime;
    if (prime) out.primes.push_back(std::move(copy));
  }
  for (auto& p : out.primes) {
    bool minimal = true;
    for (const auto& q : out.primes) {
      if (!q.same_members(p) && q.subset_of(p)) {
        minimal = false;
        break;
      }
    }
    p.minimal_prime = minimal;
    if (minimal) out.minimal_primes.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Congruence / quotient
// ---------------------------------------------------------------------------

Congruence congruence(const AlgebraPtr& a, const Ideal& i) {
  require_finite(a, "congruences");
  if (!same_algebra(i.algebra(), a)) throw NotAnIdeal("ideal of a different algebra");
  const std::uint32_t m = static_cast<std::uint32_t>(a->size());
  auto carrier = a->carrier();
  auto related = [&](std::uint32_t x, std::uint32_t y) {
    return i.contains(a->ominus(carrier[x], carrier[y])) &&
           i.contains(a->ominus(carrier[y], carrier[x]));
  };
  Congruence c;
  c.algebra = a;
  c.class_of.assign(m, m);
  for (std::uint32_t x = 0; x < m; ++x) {
    if (c.class_of[x] != m) continue;
    const auto cls = static_cast<std::uint32_t>(c.least_rep.size());
    c.least_rep.push_back(x);
    c.class_of[x] = cls;
    for (std::uint32_t y = x + 1; y < m; ++y) {
      if (c.class_of[y] == m && related(x, y)) c.class_of[y] = cls;
    }
  }
  return c;
}

QuotientResult quotient(const AlgebraPtr& a, const Ideal& i) {
  Congruence c = congruence(a, i);
  const std::uint32_t classes = static_cast<std::uint32_t>(c.least_rep.size());
  auto carrier = a->carrier();

  Algebra::QuotientData data;
  data.base = a;
  data.ideal_members = i.members();
  data.class_of_base = c.class_of;
  data.least_rep = c.least_rep;
  data.oplus.resize(std::size_t(classes) * classes);
  data.neg.resize(classes);
  for (std::uint32_t x = 0; x < classes; ++x) {
    const Element rep_x = carrier[c.least_rep[x]];
    data.neg[x] = c.class_of[a->rank_of(a->neg(rep_x))];
    for (std::uint32_t y = 0; y < classes; ++y) {
      const Element rep_y = carrier[c.least_rep[y]];
      data.oplus[std::size_t(x) * classes + y] =
          c.class_of[a->rank_of(a->oplus(rep_x, rep_y))];
    }
  }
  AlgebraPtr q = Algebra::make_quotient(std::move(data));

  std::vector<Element> images;
  images.reserve(a->size());
  for (const auto& x : carrier) images.push_back(q->quotient_class_element(x));
  return QuotientResult{q, Hom::unchecked(a, q, std::move(images))};
}

SubalgebraResult coset_sum_subalgebra(const Hom& inclusion, const Ideal& i) {
  const AlgebraPtr& ambient = inclusion.target();
  require_finite(ambient, "coset sums");
  if (!same_algebra(i.algebra(), ambient)) {
    throw NotAnIdeal("ideal of a different algebra");
  }
  if (!inclusion.injective() || !inclusion.is_homomorphism()) {
    throw NotASubalgebra("the given map is not an embedding");
  }
  Congruence c = congruence(ambient, i);
  const std::uint32_t m = static_cast<std::uint32_t>(ambient->size());
  std::vector<bool> class_hit(c.least_rep.size(), false);
  for (const auto& im : inclusion.images()) {
    class_hit[c.class_of[ambient->rank_of(im)]] = true;
  }
  std::vector<Element> members;
  auto carrier = ambient->carrier();
  for (std::uint32_t x = 0; x < m; ++x) {
    if (class_hit[c.class_of[x]]) members.push_back(carrier[x]);
  }
  SubalgebraResult result = generate_subalgebra(ambient, members);
  if (result.algebra->size() != members.size()) {
    throw MvError("coset union failed to be a subalgebra (internal)");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Boolean skeleton, stonean and summand ideals
// ---------------------------------------------------------------------------

std::vector<Element> boolean_elements(const AlgebraPtr& a) {
  require_finite(a, "the boolean skeleton");
  std::vector<Element> out;
  for (const auto& x : a->carrier()) {
    if (a->equal(a->oplus(x, x), x)) out.push_back(x);
  }
  return out;
}

namespace {

std::vector<std::uint32_t> downset_of(const AlgebraPtr& a, const std::vector<Element>& tops) {
  const std::uint64_t m = a->size();
  auto carrier = a->carrier();
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < m; ++x) {
    for (const auto& t : tops) {
      if (a->leq(carrier[x], t)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool is_stonean(const AlgebraPtr& a, const Ideal& i) {
  if (!same_algebra(i.algebra(), a)) throw NotAnIdeal("ideal of a different algebra");
  std::vector<Element> boolean_part;
  for (const auto& b : boolean_elements(a)) {
    if (i.contains(b)) boolean_part.push_back(b);
  }
  auto down = sorted_unique(downset_of(a, boolean_part));
  if (boolean_part.empty()) down = {0};
  return down == i.members();
}

std::optional<SummandDecomposition> summand_decomposition(const AlgebraPtr& a,
                                                          const Ideal& i) {
  if (!same_algebra(i.algebra(), a)) throw NotAnIdeal("ideal of a different algebra");
  require_finite(a, "summand decomposition");
  for (const auto& b : boolean_elements(a)) {
    auto down_b = sorted_unique(downset_of(a, {b}));
    if (down_b != i.members()) continue;
    const Element b_neg = a->neg(b);
    Ideal complement = Ideal::of_members(a, downset_of(a, {b_neg}));

    // Certify <I u J> = M and I n J = {0}.
    std::vector<Element> both = i.elements();
    for (const auto& x : complement.elements()) both.push_back(x);
    Ideal joined = generate_ideal(a, both);
    if (!joined.is_whole()) continue;
    bool trivial_meet = true;
    for (auto r : i.members()) {
      if (r != 0 && complement.contains_rank(r)) trivial_meet = false;
    }
    if (!trivial_meet) continue;

    // Certify the direct decomposition M ~ M/I x M/I_perp.
    QuotientResult qi = quotient(a, i);
    QuotientResult qj = quotient(a, complement);
    AlgebraPtr prod = Algebra::product({qi.algebra, qj.algebra});
    std::vector<Element> images;
    for (const auto& x : a->carrier()) {
      images.push_back(prod->element_from_tuple({qi.projection.apply(x), qj.projection.apply(x)}));
    }
    Hom diag(a, prod, std::move(images));  // checked constructor
    if (!diag.injective() || !diag.surjective()) {
      throw MvError("summand certificate failed: decomposition is not bijective");
    }
    return SummandDecomposition{b, i, std::move(complement)};
  }
  return std::nullopt;
}

ArchimedeanProfile archimedean_profile(const AlgebraPtr& a) {
  if (a->kind() == AlgebraKind::divisible_rational_chain) {
    throw UnsupportedKind(
        "the divisible rational chain is hyperarchimedean structurally: for x = p/q > 0 "
        "the witness is n = ceil(q/p)");
  }
  require_finite(a, "the archimedean profile");
  const std::uint64_t m = a->size();
  auto carrier = a->carrier();
  ArchimedeanProfile profile;
  profile.hyperarchimedean = true;
  for (std::uint64_t x = 0; x < m; ++x) {
    std::optional<std::uint32_t> least;
    if (a->is_zero(carrier[x])) {
      least = 0;  // 0 itself is boolean
    } else {
      for (std::uint32_t n = 1; n <= m; ++n) {
        const Element nx = a->nat_sum(n, carrier[x]);
        if (a->equal(a->oplus(nx, nx), nx)) {
          least = n;
          break;
        }
      }
    }
    if (!least) profile.hyperarchimedean = false;
    profile.least_boolean_multiple.push_back(least);
  }
  return profile;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

ClassifyFlags classify(const AlgebraPtr& a) {
  ClassifyFlags flags;
  if (a->kind() == AlgebraKind::divisible_rational_chain) {
    // Dense simple chain: any 0 < x reaches 1 by repeated +.
    flags.is_linear = true;
    flags.is_simple = true;
    flags.is_boolean = false;
    return flags;
  }
  if (!a->is_finite()) {
    throw UnsupportedKind("classification needs a finite algebra or a structural rule");
  }
  const std::uint64_t m = a->size();
  auto carrier = a->carrier();
  flags.is_linear = true;
  for (std::uint64_t x = 0; x < m && flags.is_linear; ++x) {
    for (std::uint64_t y = x + 1; y < m && flags.is_linear; ++y) {
      if (!a->leq(carrier[x], carrier[y]) && !a->leq(carrier[y], carrier[x])) {
        flags.is_linear = false;
      }
    }
  }
  flags.is_boolean = a->is_boolean_law();
  const IdealLattice lattice = enumerate_ideals(a);
  flags.is_simple = lattice.ideals.size() == 2;
  return flags;
}

// ---------------------------------------------------------------------------
// Semisimple coordinates
// ---------------------------------------------------------------------------

SemisimpleEmbedding semisimple_embedding(const AlgebraPtr& a) {
  require_finite(a, "semisimple coordinates");
  SemisimpleEmbedding out;
  PrimesResult primes = primes_and_minimal_primes(a);
  out.minimal_primes = primes.minimal_primes;
  const std::uint64_t m = a->size();
  auto carrier = a->carrier();
  out.coords.assign(m, {});

  std::uint64_t expected = 1;
  for (const auto& p : out.minimal_primes) {
    QuotientResult q = quotient(a, p);
    const std::uint64_t len = q.algebra->size();
    if (len < 2) throw MvError("prime quotient collapsed (internal)");
    out.chain_len.push_back(static_cast<std::uint32_t>(len));
    expected *= len;
    for (std::uint64_t x = 0; x < m; ++x) {
      const auto cls = q.algebra->rank_of(q.projection.apply(carrier[x]));
      out.coords[x].push_back(Rational(long(cls), long(len - 1)));
    }
  }
  // Injectivity plus the counting argument makes x |-> (x/P)_P onto the
  // product of the prime quotients for finite algebras; both are re-checked.
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = x + 1; y < m; ++y) {
      if (out.coords[x] == out.coords[y]) {
        throw MvError("semisimple coordinates not injective (internal)");
      }
    }
  }
  if (expected != m && m > 1) {
    throw MvError("semisimple coordinate count mismatch (internal)");
  }
  return out;
}

}  // namespace mvkit
