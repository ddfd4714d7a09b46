// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#ifndef MVKIT_REPORT_HPP_
#define MVKIT_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "mvkit/ideal.hpp"

namespace mvkit {

using ReportDoc = nlohmann::ordered_json;

// FNV-1a 64-bit over the file bytes, "fnv1a:<16 hex digits>"; stable content
// fingerprint for the report inputs block.
std::string file_fingerprint(const std::string& path);

// Skeleton with the deterministic field order: mvkit, command, inputs,
// results, timing_ms (timing filled in by the caller at the end).
ReportDoc make_report(const std::string& command,
                      const std::vector<std::string>& input_paths);

// DOT digraph of the covering relation; its transitive closure is the ideal
// inclusion order. Node labels list the ideal members.
std::string ideal_lattice_dot(const IdealLattice& lattice);

}  // namespace mvkit

#endif  // MVKIT_REPORT_HPP_
