// tortile: checks, derivations and enumeration over structure bundles.
// Exit status: 0 all pass, 1 an axiom or relation fails, 2 bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "tortile/bundle_io.hpp"
#include "tortile/catalog.hpp"
#include "tortile/pointed_io.hpp"
#include "tortile/report.hpp"
#include "tortile/sx_io.hpp"

using namespace tortile;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string scalar = "exact";
  int workers = 0;
};

int worker_count(const Globals& g) {
  if (g.workers > 0) return g.workers;
  if (const char* env = std::getenv("TORTILE_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
    throw InputError(std::string("TORTILE_WORKERS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

/// A bundle file, or the name of a builtin when no such file exists.
NamedBundle resolve_bundle(const std::string& arg) {
  if (std::filesystem::exists(arg)) return {arg, "", load_bundle(read_file(arg)), {}, false};
  if (auto nb = find_builtin(arg)) return *nb;
  throw InputError("'" + arg + "' is neither a file nor a builtin example");
}

std::vector<SuiteKind> select_suites(const NamedBundle& nb, const std::string& which) {
  if (which != "all") {
    for (SuiteKind k : {SuiteKind::Balanced, SuiteKind::Tortile, SuiteKind::GAction, SuiteKind::Forms})
      if (which == suite_name(k)) return {k};
    throw InputError("unknown suite '" + which + "'");
  }
  if (!nb.suites.empty()) return nb.suites;
  std::vector<SuiteKind> out;
  for (SuiteKind k : {SuiteKind::Balanced, SuiteKind::Tortile, SuiteKind::GAction, SuiteKind::Forms})
    if (suite_missing(nb.bundle, k).empty()) out.push_back(k);
  if (out.empty()) throw InputError("bundle carries no braiding and no forms; no suite applies");
  return out;
}

std::string render(const std::vector<SuiteReport>& rs, const Globals& g) {
  return g.format == "json" ? reports_to_json(rs) : reports_to_text(rs);
}

bool all_ok(const std::vector<SuiteReport>& rs) {
  for (const auto& r : rs)
    if (!r.ok()) return false;
  return true;
}

int cmd_check(const Globals& g, const std::string& input, const std::string& suite) {
  const NamedBundle nb = resolve_bundle(input);
  const int w = worker_count(g);
  std::vector<SuiteReport> reports;
  for (SuiteKind k : select_suites(nb, suite)) {
    try {
      reports.push_back(g.scalar == "float" ? run_suite<ComplexScalar>(nb.bundle, k, w) : run_suite(nb.bundle, k, w));
    } catch (const SuiteError& e) {
      throw InputError(e.what());
    }
  }
  std::cout << render(reports, g);
  return all_ok(reports) ? 0 : 1;
}

int cmd_derive(const Globals& g, const std::string& input, const std::string& witness, const std::string& output) {
  const SXAssignment a = parse_assignment(read_file(input));
  const int w = worker_count(g);
  const SuiteReport rel = check_relations(a, w);
  if (!rel.ok()) {
    std::cout << render({rel}, g);
    return 1;
  }
  StructureBundle b;
  try {
    if (witness.empty()) {
      b = derive_balanced(a, w);
    } else {
      const SelfDualWitness wit = witness == "standard" ? standard_witness(a) : parse_witness(read_file(witness), a);
      const SuiteReport sd = check_self_dual(a, wit);
      if (!sd.ok()) {
        std::cout << render({sd}, g);
        return 1;
      }
      b = derive_duality(a, wit, w);
    }
  } catch (const SXError& e) {
    std::cerr << "derive: " << e.what() << "\n";
    return 1;
  }
  write_output(output, serialize_bundle(b));
  return 0;
}

int cmd_package(const Globals& g, const std::string& input, bool pairing, const std::string& witness) {
  const NamedBundle nb = resolve_bundle(input);
  SXAssignment a;
  try {
    a = package_assignment(nb.bundle, pairing, worker_count(g));
  } catch (const CatalogError& e) {
    std::cerr << "package: " << e.what() << "\n";
    return 1;
  }
  if (!witness.empty()) {
    try {
      write_output(witness, witness_to_json(standard_witness(a), a).dump(2) + "\n");
    } catch (const SXError& e) {
      std::cerr << "package: no witness: " << e.what() << "\n";
      return 1;
    }
  }
  std::cout << serialize_assignment(a);
  return 0;
}

int cmd_enumerate(const Globals& g, const std::string& input) {
  const PointedSpec s = parse_pointed_spec(read_file(input));
  EnumerationResult r;
  try {
    r = enumerate_pointed(s, worker_count(g));
  } catch (const CatalogError& e) {
    throw InputError(e.what());
  }
  if (g.format == "json") {
    json arr = json::array();
    for (const auto& b : r.bundles) arr.push_back(bundle_to_json(b));
    std::cout << json{{"count", r.bundles.size()}, {"root_order", s.root_order}, {"structures", arr}}.dump(2) << "\n";
    return 0;
  }
  std::cout << r.bundles.size() << " balanced structure(s) over roots of unity of order " << s.root_order << "\n";
  for (std::size_t k = 0; k < r.bundles.size(); ++k) {
    const auto& b = r.bundles[k];
    std::cout << "  #" << k << " R:";
    for (const auto& [key, m] : b.braiding->R)
      std::cout << " " << b.cat.simple(key[0]).name << "," << b.cat.simple(key[1]).name << "=" << m(0, 0).to_string();
    std::cout << "  theta:";
    for (int x = 0; x < b.n(); ++x) std::cout << " " << (*b.theta)[static_cast<std::size_t>(x)].to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_eval_surface(const Globals& g, const std::string& word_arg, const std::string& assignment) {
  const SXAssignment a = parse_assignment(read_file(assignment));
  const std::string text = std::filesystem::exists(word_arg) ? read_file(word_arg) : word_arg;
  FunctorTable f;
  try {
    f = eval_word(parse_word(text, a.pi(), a.g_group()), a);
  } catch (const SurfaceError& e) {
    throw InputError(std::string("ill-typed word: ") + e.what());
  } catch (const SXError& e) {
    throw InputError(e.what());
  }
  const auto& cat = a.bundle.cat;
  if (g.format == "json") {
    json vals = json::object();
    for (const auto& [in, out] : f.values) {
      json o = json::object();
      for (const auto& [t, k] : out) o[sx_io_detail::tuple_key(t, cat)] = k;
      vals[sx_io_detail::tuple_key(in, cat)] = o;
    }
    std::cout << json{{"source", signature_to_string(f.source, a.pi())},
                      {"target", signature_to_string(f.target, a.pi())},
                      {"values", vals}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << signature_to_string(f.source, a.pi()) << " -> " << signature_to_string(f.target, a.pi()) << "\n";
  for (const auto& [in, out] : f.values) std::cout << "  " << tuple_to_string(in, cat) << " |-> " << counts_to_string(out, cat) << "\n";
  return 0;
}

int cmd_roundtrip(const std::string& input) {
  const NamedBundle nb = resolve_bundle(input);
  const std::string once = serialize_bundle(nb.bundle);
  const std::string twice = serialize_bundle(load_bundle(once));
  std::cout << once;
  if (once != twice) {
    std::cerr << "roundtrip: serialization is not stable\n";
    return 1;
  }
  return 0;
}

int cmd_examples(bool list, const std::string& emit) {
  if (!emit.empty()) {
    auto nb = find_builtin(emit);
    if (!nb) throw InputError("no builtin named '" + emit + "'");
    std::cout << serialize_bundle(nb->bundle);
    return 0;
  }
  if (!list) throw InputError("examples needs --list or --emit <name>");
  for (const auto& nb : builtin_examples()) {
    std::string suites;
    for (SuiteKind k : nb.suites) suites += (suites.empty() ? "" : ",") + std::string(suite_name(k));
    std::cout << nb.name << "\t" << suites << "\t" << nb.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence checks and surface derivations for graded tortile categories"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--scalar", g.scalar, "Scalar mode for suite checks")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--workers", g.workers, "Worker threads (default: TORTILE_WORKERS, then hardware)")
      ->check(CLI::PositiveNumber);

  std::string input, suite = "all", witness, output, word, assignment, emit;
  bool pairing = false, list = false;

  auto* check = app.add_subcommand("check", "Run axiom suites on a bundle file or builtin");
  check->add_option("bundle", input, "Bundle file or builtin name")->required();
  check->add_option("--suite", suite, "balanced|tortile|gaction|forms|all");

  auto* derive = app.add_subcommand("derive", "Derive a bundle from a surface assignment");
  derive->add_option("assignment", input, "Assignment file")->required();
  derive->add_option("--self-dual", witness, "Witness file, or 'standard' for the pairing-induced witness");
  derive->add_option("-o,--output", output, "Write the bundle here instead of stdout");

  auto* package = app.add_subcommand("package", "Package a bundle as a surface assignment");
  package->add_option("bundle", input, "Bundle file or builtin name")->required();
  package->add_flag("--pairing", pairing, "Require forms and assign the pairing generators");
  package->add_option("--witness", witness, "Also write the standard self-duality witness to this file");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate braidings on a pointed spec");
  enumerate->add_option("spec", input, "Pointed-spec file")->required();

  auto* eval = app.add_subcommand("eval-surface", "Evaluate a cobordism word under an assignment");
  eval->add_option("word", word, "Word text or a file holding it")->required();
  eval->add_option("--assignment", assignment, "Assignment file")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Parse, validate and re-serialize a bundle");
  roundtrip->add_option("bundle", input, "Bundle file or builtin name")->required();

  auto* examples = app.add_subcommand("examples", "List or emit builtin bundles");
  examples->add_flag("--list", list, "List builtin names");
  examples->add_option("--emit", emit, "Print the named builtin as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(g, input, suite);
    if (*derive) return cmd_derive(g, input, witness, output);
    if (*package) return cmd_package(g, input, pairing, witness);
    if (*enumerate) return cmd_enumerate(g, input);
    if (*eval) return cmd_eval_surface(g, word, assignment);
    if (*roundtrip) return cmd_roundtrip(input);
    if (*examples) return cmd_examples(list, emit);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BundleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
