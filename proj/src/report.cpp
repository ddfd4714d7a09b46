// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/report.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace mvkit {

std::string file_fingerprint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "fnv1a:unreadable";
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << hash;
  return os.str();
}

ReportDoc make_report(const std::string& command,
                      const std::vector<std::string>& input_paths) {
  ReportDoc doc;
  doc["mvkit"] = "v1";
  doc["command"] = command;
  doc["inputs"] = ReportDoc::object();
  for (const auto& p : input_paths) doc["inputs"][p] = file_fingerprint(p);
  doc["results"] = ReportDoc::object();
  return doc;
}

std::string ideal_lattice_dot(const IdealLattice& lattice) {
  std::ostringstream os;
  os << "digraph ideals {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
    os << "  I" << i << " [label=\"" << lattice.ideals[i].str() << "\"];\n";
  }
  for (const auto& [lower, upper] : lattice.covers) {
    os << "  I" << lower << " -> I" << upper << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mvkit
