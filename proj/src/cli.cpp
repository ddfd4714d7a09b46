// mvkit — exact-arithmetic toolkit for MV-algebras and unital abelian l-groups
// SPDX-License-Identifier: Apache-2.0

#include "mvkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mvkit/divisible.hpp"
#include "mvkit/harness.hpp"
#include "mvkit/lgroup.hpp"
#include "mvkit/morphisms.hpp"
#include "mvkit/report.hpp"
#include "mvkit/specfile.hpp"

namespace mvkit {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Output {
  std::string json_path;  // empty: print to stdout
  Clock::time_point started = Clock::now();

  int emit(ReportDoc doc, int exit_code) const {
    doc["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - started)
                           .count();
    if (json_path.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "cannot write " << json_path << "\n";
        return 1;
      }
      out << doc.dump(2) << "\n";
    }
    return exit_code;
  }
};

ReportDoc algebra_summary(const AlgebraPtr& a) {
  ReportDoc d;
  d["description"] = a->describe();
  if (a->is_finite()) {
    d["size"] = a->size();
  } else {
    d["size"] = "infinite";
  }
  return d;
}

ReportDoc hom_doc(const Hom& f) {
  ReportDoc d;
  ReportDoc map = ReportDoc::array();
  auto carrier = f.source()->carrier();
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    map.push_back(f.source()->label(carrier[i]) + "->" +
                  f.target()->label(f.images()[i]));
  }
  d["map"] = std::move(map);
  d["injective"] = f.injective();
  d["surjective"] = f.surjective();
  return d;
}

ReportDoc axiom_doc(const AxiomReport& r) {
  ReportDoc d;
  d["verdict"] = r.pass ? "pass" : "fail";
  d["mode"] = r.mode == AxiomReport::Mode::exhaustive ? "exhaustive" : "structural";
  d["basis"] = r.basis;
  if (!r.pass) {
    d["law"] = r.law;
    d["witness"] = r.witness;
    d["detail"] = r.detail;
  }
  return d;
}

ReportDoc aext_doc(const AExtensionReport& r, const Hom& inclusion) {
  ReportDoc d;
  switch (r.verdict) {
    case AExtensionReport::Verdict::holds: d["verdict"] = "holds"; break;
    case AExtensionReport::Verdict::fails: d["verdict"] = "fails"; break;
    case AExtensionReport::Verdict::inconclusive: d["verdict"] = "inconclusive"; break;
  }
  if (r.lattice_isomorphism) d["lattice_isomorphism"] = *r.lattice_isomorphism;
  d["bound"] = r.bound;
  d["probe_only"] = r.probe_only;
  d["note"] = r.note;
  if (r.failing_y) d["failing_y"] = inclusion.target()->label(*r.failing_y);
  ReportDoc ws = ReportDoc::array();
  for (const auto& w : r.witnesses) {
    ReportDoc wd;
    wd["y"] = inclusion.target()->label(w.y);
    wd["n"] = w.n;
    wd["x"] = inclusion.source()->label(w.x);
    ws.push_back(std::move(wd));
  }
  d["witnesses"] = std::move(ws);
  return d;
}

ReportDoc epi_doc(const EpiEvidence& e) {
  ReportDoc d;
  switch (e.kind) {
    case EpiEvidence::Kind::certified:
      d["verdict"] = "EpiCertified";
      d["reason"] = e.reason;
      break;
    case EpiEvidence::Kind::not_epi: {
      d["verdict"] = "NotEpi";
      d["cotarget"] = algebra_summary(*e.cotarget);
      d["alpha"] = hom_doc(*e.alpha);
      d["beta"] = hom_doc(*e.beta);
      break;
    }
    case EpiEvidence::Kind::unknown_up_to:
      d["verdict"] = "UnknownUpTo";
      d["bound"] = e.bound;
      break;
  }
  return d;
}

std::string catalog_cache_file(const std::string& flag_dir) {
  std::string dir = flag_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("MVKIT_CATALOG")) dir = env;
  }
  if (dir.empty()) dir = ".mvkit-cache";
  fs::create_directories(dir);
  return (fs::path(dir) / "catalog-v1.txt").string();
}

SmallAlgebraCatalog obtain_catalog(const std::string& flag_dir, bool regen,
                                   std::uint32_t max_size) {
  const std::string file = catalog_cache_file(flag_dir);
  if (regen) {
    SmallAlgebraCatalog fresh = SmallAlgebraCatalog::generate(max_size);
    fresh.save(file);
    return fresh;
  }
  return SmallAlgebraCatalog::ensure(file, max_size);
}

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"mvkit: exact computations with MV-algebras and their hulls"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string json_path;
  app.add_option("--json", json_path, "write the JSON report to this file");

  std::string cache_dir;
  bool regen_catalog = false;
  app.add_option("--catalog-cache", cache_dir,
                 "directory for the small-algebra catalog cache "
                 "(default: MVKIT_CATALOG or ./.mvkit-cache)");
  app.add_flag("--regen-catalog", regen_catalog, "regenerate the catalog cache");

  // check
  auto* cmd_check = app.add_subcommand("check", "verify the defining laws of an algebra");
  std::string check_path;
  cmd_check->add_option("file", check_path, "algebra file")->required();

  // ideals
  auto* cmd_ideals = app.add_subcommand("ideals", "enumerate the ideal lattice");
  std::string ideals_path, ideals_dot;
  cmd_ideals->add_option("file", ideals_path, "algebra file")->required();
  cmd_ideals->add_option("--dot", ideals_dot, "write the Hasse diagram as DOT");

  // primes
  auto* cmd_primes = app.add_subcommand("primes", "prime and minimal prime ideals");
  std::string primes_path;
  cmd_primes->add_option("file", primes_path, "algebra file")->required();

  // quotient
  auto* cmd_quot = app.add_subcommand("quotient", "quotient by a generated ideal");
  std::string quot_path, quot_ideal;
  cmd_quot->add_option("file", quot_path, "algebra file")->required();
  cmd_quot->add_option("--ideal", quot_ideal, "ideal generators (element literals)")
      ->required();

  // homs
  auto* cmd_homs = app.add_subcommand("homs", "enumerate homomorphisms A -> B");
  std::string homs_a, homs_b;
  cmd_homs->add_option("source", homs_a, "source algebra file")->required();
  cmd_homs->add_option("target", homs_b, "target algebra file")->required();

  // epi
  auto* cmd_epi = app.add_subcommand("epi", "epimorphism evidence for homs A -> B");
  std::string epi_a, epi_b;
  std::uint32_t epi_bound = 4;
  cmd_epi->add_option("source", epi_a, "source algebra file")->required();
  cmd_epi->add_option("target", epi_b, "target algebra file")->required();
  cmd_epi->add_option("--bound", epi_bound, "cotarget size bound (<= 8)");

  // chang
  auto* cmd_chang = app.add_subcommand("chang", "Chang group generators and unit");
  std::string chang_path;
  cmd_chang->add_option("file", chang_path, "algebra file")->required();

  // roundtrip
  auto* cmd_rt = app.add_subcommand("roundtrip", "natural isomorphism onto Gamma(Xi(A))");
  std::string rt_path;
  cmd_rt->add_option("file", rt_path, "algebra file")->required();

  // hull
  auto* cmd_hull = app.add_subcommand("hull", "divisible hull and embedding");
  std::string hull_path;
  cmd_hull->add_option("file", hull_path, "algebra file")->required();

  // divisible
  auto* cmd_div = app.add_subcommand("divisible", "divisibility verdict");
  std::string div_path;
  cmd_div->add_option("file", div_path, "algebra file")->required();

  // aext
  auto* cmd_aext = app.add_subcommand("aext", "a-extension check along embeddings A -> B");
  std::string aext_a, aext_b;
  std::uint32_t aext_bound = 0;
  cmd_aext->add_option("sub", aext_a, "subalgebra file")->required();
  cmd_aext->add_option("ext", aext_b, "extension file")->required();
  cmd_aext->add_option("--bound", aext_bound, "cap on the multiplier n");

  // aclosed
  auto* cmd_acl = app.add_subcommand("aclosed", "a-closedness verdict");
  std::string acl_path;
  cmd_acl->add_option("file", acl_path, "algebra file")->required();

  // epicomplete
  auto* cmd_epic = app.add_subcommand("epicomplete", "epicompletion with certificates");
  std::string epic_path;
  cmd_epic->add_option("file", epic_path, "algebra file")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem harness over a catalog");
  std::string verify_theorem, verify_catalog;
  cmd_verify->add_option("--theorem", verify_theorem, "selector: 2.3, 2.3.1, 2.5, 2.7, 2.12, 4.2")
      ->required();
  cmd_verify->add_option("--catalog", verify_catalog, "directory of .mv files")->required();

  std::vector<const char*> argv;
  argv.push_back("mvkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Output out{json_path};

  if (*cmd_check) {
    ReportDoc doc = make_report("check", {check_path});
    try {
      AlgebraPtr a = parse_spec(check_path);
      doc["results"]["algebra"] = algebra_summary(a);
      doc["results"]["axioms"] = axiom_doc(a->verify_axioms());
      return out.emit(std::move(doc), 0);
    } catch (const AxiomViolation& e) {
      doc["results"]["axioms"] = {{"verdict", "fail"}, {"detail", e.what()}};
      return out.emit(std::move(doc), 2);
    }
  }

  if (*cmd_ideals) {
    AlgebraPtr a = parse_spec(ideals_path);
    IdealLattice lattice = enumerate_ideals(a);
    PrimesResult primes = primes_and_minimal_primes(a);
    ReportDoc doc = make_report("ideals", {ideals_path});
    doc["results"]["algebra"] = algebra_summary(a);
    doc["results"]["count"] = lattice.ideals.size();
    ReportDoc items = ReportDoc::array();
    for (std::size_t i = 0; i < lattice.ideals.size(); ++i) {
      const Ideal& ideal = lattice.ideals[i];
      ReportDoc item;
      item["id"] = i;
      item["elements"] = ideal.str();
      bool prime = false, minimal = false;
      for (const auto& p : primes.primes) {
        if (p.same_members(ideal)) prime = true;
      }
      for (const auto& p : primes.minimal_primes) {
        if (p.same_members(ideal)) minimal = true;
      }
      item["prime"] = prime;
      item["minimal_prime"] = minimal;
      item["stonean"] = is_stonean(a, ideal);
      item["summand"] = summand_decomposition(a, ideal).has_value();
      items.push_back(std::move(item));
    }
    doc["results"]["ideals"] = std::move(items);
    ReportDoc covers = ReportDoc::array();
    for (const auto& [lo, hi] : lattice.covers) covers.push_back({lo, hi});
    doc["results"]["covers"] = std::move(covers);
    if (!ideals_dot.empty()) {
      std::ofstream dot(ideals_dot);
      if (!dot) {
        std::cerr << "cannot write " << ideals_dot << "\n";
        return 1;
      }
      dot << ideal_lattice_dot(lattice);
      doc["results"]["dot"] = ideals_dot;
    }
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_primes) {
    AlgebraPtr a = parse_spec(primes_path);
    PrimesResult primes = primes_and_minimal_primes(a);
    ReportDoc doc = make_report("primes", {primes_path});
    doc["results"]["algebra"] = algebra_summary(a);
    ReportDoc ps = ReportDoc::array(), ms = ReportDoc::array();
    for (const auto& p : primes.primes) ps.push_back(p.str());
    for (const auto& p : primes.minimal_primes) ms.push_back(p.str());
    doc["results"]["primes"] = std::move(ps);
    doc["results"]["minimal_primes"] = std::move(ms);
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_quot) {
    AlgebraPtr a = parse_spec(quot_path);
    std::vector<Element> gens;
    {
      std::istringstream in(quot_ideal);
      std::string lit;
      std::vector<std::string> lits;
      std::string current;
      int depth = 0;
      for (char c : quot_ideal) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
          if (!current.empty()) lits.push_back(current);
          current.clear();
        } else {
          current += c;
        }
      }
      if (!current.empty()) lits.push_back(current);
      for (const auto& l : lits) gens.push_back(parse_element(a, l));
    }
    Ideal ideal = generate_ideal(a, gens);
    QuotientResult q = quotient(a, ideal);
    ReportDoc doc = make_report("quotient", {quot_path});
    doc["results"]["algebra"] = algebra_summary(a);
    doc["results"]["ideal"] = ideal.str();
    doc["results"]["quotient_size"] = q.algebra->size();
    ReportDoc reps = ReportDoc::array();
    for (std::uint64_t c = 0; c < q.algebra->size(); ++c) {
      reps.push_back(q.algebra->label(q.algebra->element_at(c)));
    }
    doc["results"]["class_representatives"] = std::move(reps);
    doc["results"]["linear"] = classify(q.algebra).is_linear;
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_homs) {
    AlgebraPtr a = parse_spec(homs_a);
    AlgebraPtr b = parse_spec(homs_b);
    std::vector<Hom> homs = enumerate_homs(a, b);
    ReportDoc doc = make_report("homs", {homs_a, homs_b});
    doc["results"]["count"] = homs.size();
    ReportDoc items = ReportDoc::array();
    for (const auto& f : homs) {
      ReportDoc item = hom_doc(f);
      item["kernel"] = classify_hom(f).kernel.str();
      items.push_back(std::move(item));
    }
    doc["results"]["homs"] = std::move(items);
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_epi) {
    AlgebraPtr a = parse_spec(epi_a);
    AlgebraPtr b = parse_spec(epi_b);
    SmallAlgebraCatalog catalog =
        obtain_catalog(cache_dir, regen_catalog,
                       std::max(epi_bound, std::uint32_t(4)));
    std::vector<Hom> homs = enumerate_homs(a, b);
    ReportDoc doc = make_report("epi", {epi_a, epi_b});
    doc["results"]["bound"] = epi_bound;
    ReportDoc items = ReportDoc::array();
    for (const auto& f : homs) {
      ReportDoc item;
      item["hom"] = hom_doc(f);
      item["oracle"] = epi_doc(bounded_epi_oracle(f, epi_bound, catalog));
      if (a->kind() == AlgebraKind::lukasiewicz_chain &&
          b->kind() == AlgebraKind::lukasiewicz_chain &&
          b->chain_n() % a->chain_n() == 0) {
        item["chain_certificate"] = epi_doc(chain_inclusion_epi(a->chain_n(), b->chain_n()));
      }
      items.push_back(std::move(item));
    }
    doc["results"]["homs"] = std::move(items);
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_chang) {
    AlgebraPtr a = parse_spec(chang_path);
    XiResult x = xi(a);
    ReportDoc doc = make_report("chang", {chang_path});
    doc["results"]["group"] = x.group->describe();
    doc["results"]["unit"] = x.group->element_str(x.group->unit());
    ReportDoc gens = ReportDoc::array();
    for (const auto& g : a->carrier()) {
      SubalgebraResult sub = generate_subalgebra(a, {g});
      if (sub.algebra->size() == a->size()) {
        gens.push_back(x.group->element_str(
            x.unit_embedding.apply(g).group_value()));
        break;
      }
    }
    if (gens.empty()) {
      for (const auto& g : a->carrier()) {
        gens.push_back(x.group->element_str(x.unit_embedding.apply(g).group_value()));
      }
    }
    doc["results"]["generators"] = std::move(gens);
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_rt) {
    AlgebraPtr a = parse_spec(rt_path);
    ReportDoc doc = make_report("roundtrip", {rt_path});
    try {
      Hom iso = mundici_roundtrip(a);
      doc["results"]["verdict"] = "pass";
      doc["results"]["size"] = a->size();
      doc["results"]["map"] = hom_doc(iso)["map"];
      return out.emit(std::move(doc), 0);
    } catch (const RoundTripFailure& e) {
      doc["results"]["verdict"] = "fail";
      doc["results"]["detail"] = e.what();
      return out.emit(std::move(doc), 2);
    }
  }

  if (*cmd_hull) {
    AlgebraPtr a = parse_spec(hull_path);
    HullHandle hull = divisible_hull(a);
    ReportDoc doc = make_report("hull", {hull_path});
    doc["results"]["base"] = algebra_summary(a);
    doc["results"]["hull"] = algebra_summary(hull.hull());
    doc["results"]["route"] = hull.route();
    doc["results"]["identity"] = hull.is_identity();
    doc["results"]["divisible"] = is_divisible(hull.hull()).divisible;
    if (!hull.is_identity()) {
      doc["results"]["embedding"] = hom_doc(hull.embedding_hom())["map"];
    }
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_div) {
    AlgebraPtr a = parse_spec(div_path);
    DivisibilityReport r = is_divisible(a);
    ReportDoc doc = make_report("divisible", {div_path});
    doc["results"]["divisible"] = r.divisible;
    doc["results"]["justification"] = r.justification;
    if (!r.divisible) {
      doc["results"]["witness"] = {{"a", a->label(*r.witness_a)}, {"n", r.witness_n}};
    }
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_aext) {
    AlgebraPtr a = parse_spec(aext_a);
    AlgebraPtr b = parse_spec(aext_b);
    std::vector<Hom> embeddings;
    for (auto& f : enumerate_homs(a, b)) {
      if (f.injective()) embeddings.push_back(std::move(f));
    }
    if (embeddings.empty()) {
      throw NotASubalgebra("no embedding of the first algebra into the second");
    }
    ReportDoc doc = make_report("aext", {aext_a, aext_b});
    ReportDoc items = ReportDoc::array();
    for (const auto& f : embeddings) {
      ReportDoc item;
      item["embedding"] = hom_doc(f)["map"];
      item["report"] = aext_doc(a_extension_check(f, aext_bound), f);
      items.push_back(std::move(item));
    }
    doc["results"]["embeddings"] = std::move(items);
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_acl) {
    AlgebraPtr a = parse_spec(acl_path);
    AClosedReport r = a_closed_check(a);
    ReportDoc doc = make_report("aclosed", {acl_path});
    switch (r.verdict) {
      case AClosedReport::Verdict::a_closed: doc["results"]["verdict"] = "a_closed"; break;
      case AClosedReport::Verdict::not_a_closed:
        doc["results"]["verdict"] = "not_a_closed";
        break;
      case AClosedReport::Verdict::unknown: doc["results"]["verdict"] = "unknown"; break;
    }
    doc["results"]["reason"] = r.reason;
    if (r.witness_extension) {
      doc["results"]["witness_extension"] =
          r.witness_extension->target()->describe();
      doc["results"]["witness_embedding"] = hom_doc(*r.witness_extension)["map"];
    }
    return out.emit(std::move(doc), 0);
  }

  if (*cmd_epic) {
    AlgebraPtr a = parse_spec(epic_path);
    EpicompletionResult r = epicompletion(a);
    ReportDoc doc = make_report("epicomplete", {epic_path});
    doc["results"]["base"] = algebra_summary(a);
    doc["results"]["hull"] = algebra_summary(r.extension.hull());
    doc["results"]["route"] = r.extension.route();
    doc["results"]["certificates"] = {{"embedding_injective", r.alpha_injective},
                                      {"hull_divisible", r.hull_divisible},
                                      {"a_extension", r.a_extension_ok},
                                      {"idempotent", r.idempotent}};
    doc["results"]["epi_reason"] = r.epi_reason;
    const bool all = r.alpha_injective && r.hull_divisible && r.a_extension_ok &&
                     r.idempotent;
    return out.emit(std::move(doc), all ? 0 : 2);
  }

  if (*cmd_verify) {
    std::vector<NamedAlgebra> catalog;
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(verify_catalog)) {
      if (entry.path().extension() == ".mv") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      catalog.push_back(NamedAlgebra{fs::path(f).stem().string(), parse_spec(f)});
    }
    HarnessReport harness = run_theorem_harness(verify_theorem, catalog);
    ReportDoc doc = make_report("verify", files);
    doc["results"]["theorem"] = harness.selector;
    ReportDoc items = ReportDoc::array();
    for (const auto& inst : harness.instances) {
      ReportDoc item;
      item["instance"] = inst.name;
      switch (inst.verdict) {
        case InstanceVerdict::consistent: item["verdict"] = "consistent"; break;
        case InstanceVerdict::vacuous: item["verdict"] = "vacuous"; break;
        case InstanceVerdict::counterexample: item["verdict"] = "COUNTEREXAMPLE"; break;
        case InstanceVerdict::unsupported: item["verdict"] = "unsupported"; break;
      }
      ReportDoc facts = ReportDoc::object();
      for (const auto& [k, v] : inst.facts) facts[k] = v;
      item["facts"] = std::move(facts);
      if (!inst.note.empty()) item["note"] = inst.note;
      items.push_back(std::move(item));
    }
    doc["results"]["instances"] = std::move(items);
    doc["results"]["summary"] = {{"consistent", harness.consistent},
                                 {"vacuous", harness.vacuous},
                                 {"counterexamples", harness.counterexamples},
                                 {"unsupported", harness.unsupported}};
    return out.emit(std::move(doc), harness.counterexamples == 0 ? 0 : 2);
  }

  std::cerr << "no subcommand selected\n";
  return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  try {
    return dispatch(args);
  } catch (const AxiomViolation& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return 2;
  } catch (const RoundTripFailure& e) {
    std::cerr << "round trip failure: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const MvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Internal invariant failures are loud; user-input problems are usage.
    const std::string what = e.what();
    return what.find("(internal)") != std::string::npos ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}

int run_command(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args);
}

}  // namespace mvkit
