// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_HARNESS_HPP_
#define MVKIT_HARNESS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "mvkit/algebra.hpp"

namespace mvkit {

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
};

// Per-instance outcome of a theorem check. `consistent` means the hypotheses
// held and the conclusion held; `vacuous` means some hypothesis failed (so
// the instance cannot refute anything); `counterexample` must never occur and
// fails the run loudly; `unsupported` marks hypotheses that are not decidable
// in scope and are reported rather than guessed.
enum class InstanceVerdict { consistent, vacuous, counterexample, unsupported };

struct InstanceReport {
  std::string name;
  InstanceVerdict verdict = InstanceVerdict::unsupported;
  std::vector<std::pair<std::string, std::string>> facts;
  std::string note;
};

struct HarnessReport {
  std::string selector;
  std::vector<InstanceReport> instances;
  std::size_t consistent = 0;
  std::size_t vacuous = 0;
  std::size_t counterexamples = 0;
  std::size_t unsupported = 0;
};

// Supported selectors: 2.3, 2.3.1, 2.5, 2.7, 2.12, 4.2.
const std::vector<std::string>& harness_selectors();

HarnessReport run_theorem_harness(const std::string& selector,
                                  const std::vector<NamedAlgebra>& catalog);

}  // namespace mvkit

#endif  // MVKIT_HARNESS_HPP_
