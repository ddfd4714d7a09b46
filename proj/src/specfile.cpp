// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/specfile.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "mvkit/ideal.hpp"
#include "mvkit/lgroup.hpp"

namespace mvkit {

namespace {

namespace fs = std::filesystem;

struct SpecFields {
  std::map<std::string, std::pair<int, std::string>> values;  // key -> (line, text)

  const std::string& require(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) {
      throw ParseError(0, "missing field '" + key + "'");
    }
    return it->second.second;
  }
  int line_of(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? 0 : it->second.first;
  }
  bool has(const std::string& key) const { return values.count(key) > 0; }
};

std::string trim(std::string s) {
  const auto issp = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Splits on whitespace at bracket depth zero, so "(1/2,0) (0,1)" and
// "[1/2] [1/3]" come apart while tuples stay whole.
std::vector<std::string> split_literals(const std::string& s) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::uint32_t parse_u32(const std::string& text, int line, const std::string& what) {
  try {
    const unsigned long v = std::stoul(text);
    return static_cast<std::uint32_t>(v);
  } catch (...) {
    throw ParseError(line, "expected an integer for " + what + ", got '" + text + "'");
  }
}

std::vector<std::uint32_t> parse_u32_list(const std::string& text, int line,
                                          const std::string& what) {
  std::vector<std::uint32_t> out;
  for (const auto& w : split_ws(text)) out.push_back(parse_u32(w, line, what));
  return out;
}

Rational parse_rational_or_throw(const std::string& text, int line) {
  auto r = Rational::parse(text);
  if (!r) throw ParseError(line, "expected a rational p/q, got '" + text + "'");
  return *r;
}

GroupElement::VecQ parse_vector(const std::string& text, int line) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ParseError(line, "expected a vector [p/q,...], got '" + text + "'");
  }
  body = body.substr(1, body.size() - 2);
  GroupElement::VecQ out;
  std::string item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_rational_or_throw(item, line));
  }
  return out;
}

AlgebraPtr parse_spec_at(const std::string& path, int depth);

AlgebraPtr build_from_fields(const SpecFields& f, const fs::path& dir, int depth) {
  const std::string kind = trim(f.require("kind"));
  if (kind == "chain") {
    return Algebra::lukasiewicz_chain(parse_u32(trim(f.require("n")), f.line_of("n"), "n"));
  }
  if (kind == "divisible-chain") {
    return Algebra::divisible_rational_chain();
  }
  if (kind == "table") {
    const auto size = parse_u32(trim(f.require("size")), f.line_of("size"), "size");
    const auto oplus = parse_u32_list(f.require("oplus"), f.line_of("oplus"), "oplus");
    const auto neg = parse_u32_list(f.require("neg"), f.line_of("neg"), "neg");
    const auto zero = parse_u32(trim(f.require("zero")), f.line_of("zero"), "zero");
    const auto one = parse_u32(trim(f.require("one")), f.line_of("one"), "one");
    return Algebra::from_table(size, oplus, neg, zero, one);
  }
  if (kind == "product") {
    std::vector<AlgebraPtr> factors;
    for (const auto& ref : split_ws(f.require("factors"))) {
      factors.push_back(parse_spec_at((dir / ref).string(), depth + 1));
    }
    return Algebra::product(std::move(factors));
  }
  if (kind == "quotient") {
    AlgebraPtr base = parse_spec_at((dir / trim(f.require("base"))).string(), depth + 1);
    std::vector<Element> gens;
    if (f.has("ideal")) {
      for (const auto& lit : split_literals(f.require("ideal"))) {
        gens.push_back(parse_element(base, lit));
      }
    }
    return quotient(base, generate_ideal(base, gens)).algebra;
  }
  if (kind == "gamma") {
    const auto rank = parse_u32(trim(f.require("rank")), f.line_of("rank"), "rank");
    std::vector<GroupElement::VecQ> generators;
    for (const auto& lit : split_literals(f.require("generators"))) {
      generators.push_back(parse_vector(lit, f.line_of("generators")));
    }
    const auto unit = parse_vector(trim(f.require("unit")), f.line_of("unit"));
    bool divisible = false;
    if (f.has("divisible")) {
      const std::string v = trim(f.values.at("divisible").second);
      if (v != "true" && v != "false") {
        throw ParseError(f.line_of("divisible"), "divisible must be true or false");
      }
      divisible = v == "true";
    }
    return gamma(UnitalGroup::rational_lattice(rank, std::move(generators), unit, divisible));
  }
  throw ParseError(f.line_of("kind"), "unknown kind '" + kind + "'");
}

AlgebraPtr parse_spec_at(const std::string& path, int depth) {
  if (depth > 16) throw ParseError(0, "file references nested too deeply: " + path);
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line) || trim(line) != "mvkit-algebra v1") {
    throw ParseError(1, "missing header 'mvkit-algebra v1' in " + path);
  }
  ++line_no;
  SpecFields fields;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "expected 'key = value', got '" + t + "'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (fields.values.count(key)) {
      throw ParseError(line_no, "duplicate field '" + key + "'");
    }
    fields.values[key] = {line_no, value};
  }
  try {
    AlgebraPtr a = build_from_fields(fields, fs::path(path).parent_path(), depth);
    AxiomReport report = a->verify_axioms();
    if (!report.pass) {
      throw AxiomViolation(report.law + " fails in " + path);
    }
    return a;
  } catch (const ParseError&) {
    throw;
  }
}

}  // namespace

AlgebraPtr parse_spec(const std::string& path) { return parse_spec_at(path, 0); }

Element parse_element(const AlgebraPtr& a, const std::string& raw) {
  const std::string text = trim(raw);
  switch (a->kind()) {
    case AlgebraKind::lukasiewicz_chain:
    case AlgebraKind::divisible_rational_chain: {
      auto r = Rational::parse(text);
      if (!r) throw ParseError(0, "expected a rational element literal: '" + text + "'");
      return a->element_from_rational(*r);
    }
    case AlgebraKind::finite_table: {
      for (std::uint64_t i = 0; i < a->size(); ++i) {
        const Element x = a->element_at(i);
        if (a->label(x) == text) return x;
      }
      try {
        const auto idx = static_cast<std::uint64_t>(std::stoul(text));
        return a->element_at(idx);
      } catch (const MvError&) {
        throw;
      } catch (...) {
        throw ParseError(0, "no element labelled '" + text + "'");
      }
    }
    case AlgebraKind::product: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw ParseError(0, "expected a tuple literal (..,..): '" + text + "'");
      }
      const std::string body = text.substr(1, text.size() - 2);
      std::vector<std::string> parts;
      std::string current;
      int depth = 0;
      for (char c : body) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
          parts.push_back(current);
          current.clear();
        } else {
          current += c;
        }
      }
      parts.push_back(current);
      const auto& fs = a->factors();
      if (parts.size() != fs.size()) {
        throw ParseError(0, "tuple arity mismatch in '" + text + "'");
      }
      Element::Tuple tuple;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        tuple.push_back(parse_element(fs[i], parts[i]));
      }
      return a->element_from_tuple(std::move(tuple));
    }
    case AlgebraKind::quotient:
      return a->quotient_class_element(parse_element(a->quotient_base(), text));
    case AlgebraKind::gamma_interval: {
      std::string body = text;
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError(0, "expected a vector literal [..]: '" + text + "'");
      }
      body = body.substr(1, body.size() - 2);
      GroupElement::VecQ v;
      std::istringstream in(body);
      std::string item;
      while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto r = Rational::parse(item);
        if (!r) throw ParseError(0, "bad vector entry '" + item + "'");
        v.push_back(*r);
      }
      return a->element_from_group(a->gamma_group()->element_from_vec(std::move(v)));
    }
  }
  throw UnsupportedKind("element literals unsupported for this kind");
}

}  // namespace mvkit
