// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_CLI_HPP_
#define MVKIT_CLI_HPP_

#include <string>
#include <vector>

namespace mvkit {

// Command dispatch for the mvkit tool. Returns the process exit code:
// 0 success / all verdicts consistent, 1 usage or parse problems,
// 2 axiom violations, counterexamples, or internal invariant failures.
int run_command(const std::vector<std::string>& args);
int run_command(int argc, const char* const* argv);

}  // namespace mvkit

#endif  // MVKIT_CLI_HPP_
