// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_MORPHISMS_HPP_
#define MVKIT_MORPHISMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvkit/hom.hpp"
#include "mvkit/ideal.hpp"

namespace mvkit {

// All homomorphisms a -> b, found by backtracking over the images of a
// greedily chosen minimal generating set, in a deterministic order.
// Caps: |a| <= 64, |b| <= 256.
std::vector<Hom> enumerate_homs(const AlgebraPtr& a, const AlgebraPtr& b);

struct HomClassification {
  bool injective = false;
  bool surjective = false;
  Ideal kernel;  // f^-1(0)
};
HomClassification classify_hom(const Hom& f);

// Evidence about whether a map is an epimorphism in the category. The oracle
// can refute (with a replayable witness pair) or certify through a structural
// rule; absence of a witness below a bound is reported as exactly that.
struct EpiEvidence {
  enum class Kind { certified, not_epi, unknown_up_to };
  Kind kind = Kind::unknown_up_to;
  std::string reason;                // certified: which structural rule fired
  std::uint32_t bound = 0;           // cotarget size swept
  std::optional<AlgebraPtr> cotarget;
  std::optional<Hom> alpha;
  std::optional<Hom> beta;

  bool is_certified() const { return kind == Kind::certified; }
  bool is_not_epi() const { return kind == Kind::not_epi; }
};

// Every MV-algebra with at most max_size elements, one per isomorphism class,
// produced by exhaustive operation-table search and canonical-form reduction.
// Regenerable from scratch; cacheable as a versioned text file.
class SmallAlgebraCatalog {
 public:
  static constexpr std::uint32_t kMaxSupported = 8;

  static SmallAlgebraCatalog generate(std::uint32_t max_size);
  static std::optional<SmallAlgebraCatalog> load(const std::string& path);
  void save(const std::string& path) const;
  // Loads when the cache file matches, otherwise regenerates and saves.
  static SmallAlgebraCatalog ensure(const std::string& path, std::uint32_t max_size);

  std::uint32_t max_size() const { return max_size_; }
  const std::vector<AlgebraPtr>& algebras() const { return algebras_; }

 private:
  std::uint32_t max_size_ = 0;
  std::vector<AlgebraPtr> algebras_;  // sorted by (size, table key)
};

// Sweeps all catalog cotargets C with |C| <= k and all hom pairs out of
// f's target. Surjections are certified structurally; a found separating
// pair replays as alpha.f = beta.f with alpha != beta.
EpiEvidence bounded_epi_oracle(const Hom& f, std::uint32_t k,
                               const SmallAlgebraCatalog& catalog);
// Convenience overload using a process-wide generated catalog.
EpiEvidence bounded_epi_oracle(const Hom& f, std::uint32_t k);

// The inclusion of the (m+1)-chain into the (n+1)-chain for m | n is epi:
// a hom out of the larger chain is determined on the subchain because k.x is
// injective in the torsion-free enveloping group. The certificate carries
// that argument label; callers cross-check it against the bounded oracle.
EpiEvidence chain_inclusion_epi(std::uint32_t m, std::uint32_t n);

// The inclusion hom itself, for harnesses that want to replay it.
Hom chain_inclusion(std::uint32_t m, std::uint32_t n);

}  // namespace mvkit

#endif  // MVKIT_MORPHISMS_HPP_
