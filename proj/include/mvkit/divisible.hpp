// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_DIVISIBLE_HPP_
#define MVKIT_DIVISIBLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvkit/algebra.hpp"
#include "mvkit/hom.hpp"
#include "mvkit/ideal.hpp"
#include "mvkit/rational.hpp"

namespace mvkit {

// Witness that n.x = a divides exactly: both defining equations hold.
struct DivWitness {
  Element a;
  std::uint32_t n = 0;
  Element x;
};

struct DivisibilityReport {
  bool divisible = false;
  // First (a, n) admitting no x, in canonical order; set when not divisible.
  std::optional<Element> witness_a;
  std::uint32_t witness_n = 0;
  std::string justification;  // how the verdict was reached
};

// Divisible iff every (a, n) has an x with n.x = a and a' + (n-1).x = x'.
// Finite algebras are searched exhaustively with n <= |carrier|; the dense
// kinds answer structurally.
DivisibilityReport is_divisible(const AlgebraPtr& a);

// Unique witness if one exists (a second-solution scan enforces uniqueness
// on finite carriers); NoSolution is the nullopt value, not an error.
std::optional<DivWitness> div_solve(const AlgebraPtr& a, const Element& target,
                                    std::uint32_t n);

// Exact rational coordinates of an algebra, when it embeds in Q^k
// coordinatewise: finite algebras through their prime quotients, the dense
// kinds directly. Group multiples n.x for the a-extension criterion are
// computed against these coordinates, in the enveloping group.
std::optional<std::uint32_t> coordinate_dimension(const AlgebraPtr& a);
std::vector<Rational> coordinate_values(const AlgebraPtr& a, const Element& x);

// True for the algebras that arise as divisible hulls here: the divisible
// rational chain, products of such, and gamma intervals of divisible spans.
bool is_divisible_hull_kind(const AlgebraPtr& a);

// Deterministic probe set of a hull-kind algebra: every element whose
// coordinates have denominators up to the per-dimension default.
std::vector<Element> hull_probe_elements(const AlgebraPtr& hull);
std::uint32_t hull_probe_denominator_limit(std::uint32_t dimension);

// Lazily represented divisible hull M^d with its canonical embedding. The
// hull of a chain is the divisible rational chain; hulls of products are
// products of hulls; a finite algebra routes through its prime quotients.
// When the base is already divisible the hull is the base itself and the
// embedding is the identity (no stored map).
class HullHandle {
 public:
  HullHandle(AlgebraPtr base, AlgebraPtr hull, std::optional<Hom> embedding,
             std::string route);

  const AlgebraPtr& base() const { return base_; }
  const AlgebraPtr& hull() const { return hull_; }
  bool is_identity() const { return !embedding_.has_value(); }
  const Hom& embedding_hom() const;     // throws when the embedding is identity
  Element embed(const Element& x) const;
  const std::string& route() const { return route_; }

  std::uint32_t dimension() const;
  Element element_from_coordinates(const std::vector<Rational>& coords) const;
  // Probe grid plus the embedded base carrier (when the base is finite).
  std::vector<Element> probe_elements() const;

 private:
  AlgebraPtr base_;
  AlgebraPtr hull_;
  std::optional<Hom> embedding_;
  std::string route_;
};

// Direct route: structural per kind (chain, product, gamma of a rational
// lattice, finite via prime quotients).
HullHandle divisible_hull(const AlgebraPtr& a);
// Chang-group route for finite algebras: good-sequence differences evaluated
// into rational coordinates; the evaluation map is re-checked for additivity
// on the carrier before use.
HullHandle divisible_hull_via_xi(const AlgebraPtr& a);

struct AExtWitness {
  Element y;  // in the extension
  std::uint32_t n = 0;
  Element x;  // in the subalgebra
};

// Report of the a-extension check for an embedding f : M1 -> M2.
//
// Finite M2: the ideal-lattice definition (J |-> J n M1 a lattice
// isomorphism) and the element-wise criterion are both evaluated and must
// agree. The element criterion compares multiples n.x in the enveloping
// group through exact rational coordinates, where the strict inequalities
// are satisfiable at the top element as well.
//
// Infinite M2 (hulls): the criterion runs over the deterministic probe set
// and the holds verdict carries the structural witness schema.
struct AExtensionReport {
  enum class Verdict { holds, fails, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  std::optional<bool> lattice_isomorphism;  // finite extensions only
  std::vector<AExtWitness> witnesses;       // one per probed nonzero y
  std::optional<Element> failing_y;
  std::uint32_t bound = 0;   // cap on n used in the search
  bool probe_only = false;   // infinite extension, sampled
  std::string note;
};

AExtensionReport a_extension_check(const Hom& inclusion, std::uint32_t bound = 0);
// The identity extension of a hull-kind algebra over itself.
AExtensionReport a_extension_check_identity(const AlgebraPtr& a);

// Re-evaluates a stored witness against the embedding.
bool replay_a_extension_witness(const Hom& inclusion, const AExtWitness& w);

struct AClosedReport {
  enum class Verdict { a_closed, not_a_closed, unknown };
  Verdict verdict = Verdict::unknown;
  std::string reason;
  // For finite chains: a proper extension certified by a_extension_check.
  std::optional<Hom> witness_extension;
  std::optional<AExtensionReport> witness_report;
};

// Chains are never a-closed (the half-step refinement is a proper
// a-extension); the divisible rational chain is not a-closed but its proper
// a-extensions are not exactly representable; everything else is unknown.
AClosedReport a_closed_check(const AlgebraPtr& a);

struct EpicompletionResult {
  HullHandle extension;        // (E, alpha)
  bool alpha_injective = false;
  bool hull_divisible = false;
  bool a_extension_ok = false;
  bool idempotent = false;     // the hull of the hull is the hull itself
  std::string epi_reason;
  AExtensionReport a_extension_report;
};

// The divisible hull together with its certification record.
EpicompletionResult epicompletion(const AlgebraPtr& a);

}  // namespace mvkit

#endif  // MVKIT_DIVISIBLE_HPP_
