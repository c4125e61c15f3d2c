// Command-line front end. Talks to the library only through the C API.
//
// Exit status: 0 success, 1 domain error (or a failing verify suite),
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ck/ck.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct DomainFailure {
  ck_status status;
  std::string message;
};

struct UsageFailure {
  std::string message;
};

void check(ck_status s) {
  if (s != CK_OK) throw DomainFailure{s, ck_last_error()};
}

struct BraidDeleter {
  void operator()(ck_braid* b) const { ck_braid_free(b); }
};
struct SeedDeleter {
  void operator()(ck_seed* s) const { ck_seed_free(s); }
};
struct GraphDeleter {
  void operator()(ck_graph* g) const { ck_graph_free(g); }
};
using BraidPtr = std::unique_ptr<ck_braid, BraidDeleter>;
using SeedPtr = std::unique_ptr<ck_seed, SeedDeleter>;
using GraphPtr = std::unique_ptr<ck_graph, GraphDeleter>;

// Takes ownership of a string produced by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  ck_string_free(s);
  return out;
}

ck_format format_of(const std::string& name) {
  if (name == "json") return CK_FORMAT_JSON;
  if (name == "latex") return CK_FORMAT_LATEX;
  if (name == "dot") return CK_FORMAT_DOT;
  return CK_FORMAT_PLAIN;
}

ck_semifield semifield_of(const std::string& name) {
  if (name == "tropical") return CK_SEMIFIELD_TROPICAL;
  if (name == "trivial") return CK_SEMIFIELD_TRIVIAL;
  return CK_SEMIFIELD_UNIVERSAL;
}

BraidPtr parse(const std::string& text, int strands) {
  ck_braid* b = nullptr;
  check(ck_braid_parse(text.c_str(), strands, &b));
  return BraidPtr(b);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainFailure{CK_IO_ERROR, "cannot read '" + path + "'"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw DomainFailure{CK_IO_ERROR, "cannot write '" + path + "'"};
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    for (char& c : token)
      if (c == ',') c = ' ';
    std::istringstream parts(token);
    int k;
    while (parts >> k) out.push_back(k);
    if (!parts.eof()) throw UsageFailure{"bad mutation sequence '" + text + "'"};
  }
  return out;
}

// "lo:hi" or a single value.
std::vector<int> parse_search(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return {std::stoi(text)};
    int lo = std::stoi(text.substr(0, colon)), hi = std::stoi(text.substr(colon + 1));
    if (lo > hi || lo < 0) throw UsageFailure{"bad search range '" + text + "'"};
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  } catch (const std::logic_error&) {
    throw UsageFailure{"bad search range '" + text + "'"};
  }
}

std::optional<int> env_limit() {
  const char* v = std::getenv("CK_LIMIT");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n <= 0 || n > 1000000) throw UsageFailure{std::string("CK_LIMIT must be a positive integer, got '") + v + "'"};
  return static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact link invariants from braid words, projection algebras and cluster seeds"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  int limit = 0;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "latex", "dot"}));
  app.add_option("--limit", limit, "Crossing cap for invariant engines (overrides CK_LIMIT)")
      ->check(CLI::PositiveNumber);

  std::string braid_text;
  int strands = 0;
  auto add_braid = [&](CLI::App* sub) {
    sub->add_option("braid", braid_text, "Braid word, e.g. \"s1^3 s2^-1\" or \"1 -2 1\"")->required();
    sub->add_option("--strands", strands, "Strand count (default: inferred)")->check(CLI::PositiveNumber);
  };

  auto* jones = app.add_subcommand("jones", "Jones polynomial of the braid closure");
  add_braid(jones);
  bool oracle = false;
  std::string route = "skein";
  jones->add_flag("--oracle", oracle, "Use the Kauffman bracket route");
  jones->add_option("--route", route, "Evaluation route")->check(CLI::IsMember({"skein", "bracket", "trace"}));

  auto* homfly = app.add_subcommand("homfly", "HOMFLY polynomial of the braid closure");
  add_braid(homfly);

  auto* rho = app.add_subcommand("rho", "Image of the braid in the projection algebra");
  add_braid(rho);
  std::string params = "paper";
  rho->add_option("--params", params, "Relation preset")
      ->check(CLI::IsMember({"paper", "tl", "temperley_lieb", "parametric", "kauffman"}));

  auto* cls = app.add_subcommand("class", "Integer class of rho(b) under preset \"paper\" (mu = 1, kappa = -2)");
  add_braid(cls);
  std::string class_params = "paper";
  cls->add_option("--params", class_params, "Relation preset (only paper has an integer class)")
      ->check(CLI::IsMember({"paper"}));

  std::string preset, matrix_path, semifield = "universal", sequence, bratteli_path, reference;
  int depth = -1;
  bool laurent = false;
  auto add_seed = [&](CLI::App* sub) {
    auto* p = sub->add_option("--preset", preset, "Seed preset")->check(CLI::IsMember({"S02", "S11"}));
    auto* m = sub->add_option("--matrix", matrix_path, "JSON file {n, entries, frozen}");
    p->excludes(m);
    sub->add_option("--semifield", semifield, "Coefficient semifield")
        ->check(CLI::IsMember({"universal", "tropical", "trivial"}));
  };

  auto* mutate = app.add_subcommand("mutate", "Mutate a seed, explore its mutation graph");
  add_seed(mutate);
  mutate->add_option("--sequence", sequence, "Mutation directions applied first, e.g. \"1 2 1\"");
  mutate->add_option("--depth", depth, "Breadth-first exploration depth")->check(CLI::NonNegativeNumber);
  mutate->add_option("--bratteli", bratteli_path, "Write the Bratteli diagram (DOT) to this file");
  mutate->add_flag("--laurent", laurent, "Check the Laurent phenomenon up to --depth (default 4)");

  auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram of the mutation graph");
  add_seed(bratteli);
  bratteli->add_option("--depth", depth, "Number of mutation levels (default 4)")->check(CLI::NonNegativeNumber);
  bratteli->add_option("--reference", reference, "Compare with a reference diagram")
      ->check(CLI::IsMember({"pascal", "three-fold"}));

  auto* bridge = app.add_subcommand("bridge", "Compare the Jones polynomial with the cluster bridge");
  add_braid(bridge);
  std::vector<int> n_values;
  std::string search;
  auto* n_opt = bridge->add_option("--N", n_values, "Candidate N (repeatable)")->check(CLI::NonNegativeNumber);
  auto* s_opt = bridge->add_option("--search", search, "Candidate range lo:hi (default 0:6)");
  n_opt->excludes(s_opt);

  auto* verify = app.add_subcommand("verify", "Run property suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "Suite name")
      ->check(CLI::IsMember({"all", "laurent", "catalan", "braid-relations", "markov", "oracle", "cluster",
                             "bridge-identities"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (limit == 0) limit = env_limit().value_or(0);
    const bool format_given = app.count("--format") > 0;
    ck_format format = format_of(format_name);
    char* out = nullptr;

    auto load_seed = [&]() {
      ck_seed* s = nullptr;
      if (!matrix_path.empty())
        check(ck_seed_from_json(read_file(matrix_path).c_str(), semifield_of(semifield), &s));
      else if (!preset.empty())
        check(ck_seed_preset(preset.c_str(), semifield_of(semifield), &s));
      else
        throw UsageFailure{"one of --preset or --matrix is required"};
      return SeedPtr(s);
    };

    if (jones->parsed()) {
      BraidPtr b = parse(braid_text, strands);
      ck_route r = oracle || route == "bracket" ? CK_ROUTE_BRACKET : route == "trace" ? CK_ROUTE_TRACE : CK_ROUTE_SKEIN;
      check(ck_jones(b.get(), r, limit, format, &out));
      std::cout << take(out);
    } else if (homfly->parsed()) {
      BraidPtr b = parse(braid_text, strands);
      check(ck_homfly(b.get(), limit, format, &out));
      std::cout << take(out);
    } else if (rho->parsed()) {
      BraidPtr b = parse(braid_text, strands);
      check(ck_rho(b.get(), params.c_str(), limit, format, &out));
      std::cout << take(out);
    } else if (cls->parsed()) {
      BraidPtr b = parse(braid_text, strands);
      check(ck_rho_class(b.get(), limit, format, &out));
      std::cout << take(out);
    } else if (mutate->parsed()) {
      SeedPtr s = load_seed();
      for (int k : parse_sequence(sequence)) {
        ck_seed* next = nullptr;
        check(ck_seed_mutate(s.get(), k, &next));
        s.reset(next);
      }
      if (depth < 0 && (laurent || !bratteli_path.empty())) depth = 4;
      if (laurent) {
        size_t violations = 0;
        check(ck_seed_check_laurent(s.get(), depth, format, &violations, &out));
        std::cout << take(out);
        if (violations) return kExitDomain;
      } else if (depth >= 0) {
        ck_graph* g = nullptr;
        check(ck_mutation_graph(s.get(), depth, &g));
        GraphPtr graph(g);
        if (!bratteli_path.empty()) {
          check(ck_graph_render(graph.get(), CK_FORMAT_DOT, &out));
          write_file(bratteli_path, take(out));
        }
        check(ck_graph_render(graph.get(), format == CK_FORMAT_DOT ? CK_FORMAT_DOT : format, &out));
        std::cout << take(out);
      } else {
        check(ck_seed_describe(s.get(), format, &out));
        std::cout << take(out);
      }
    } else if (bratteli->parsed()) {
      SeedPtr s = load_seed();
      ck_graph* g = nullptr;
      check(ck_mutation_graph(s.get(), depth < 0 ? 4 : depth, &g));
      GraphPtr graph(g);
      if (!reference.empty()) {
        int iso = 0;
        check(ck_graph_isomorphic(graph.get(), reference.c_str(), &iso));
        check(ck_graph_render(graph.get(), CK_FORMAT_PLAIN, &out));
        std::cout << take(out) << "isomorphic to " << reference << ": " << (iso ? "yes" : "no") << "\n";
        return iso ? 0 : kExitDomain;
      }
      check(ck_graph_render(graph.get(), format_given ? format : CK_FORMAT_DOT, &out));
      std::cout << take(out);
    } else if (bridge->parsed()) {
      BraidPtr b = parse(braid_text, strands);
      std::vector<int> candidates = !n_values.empty() ? n_values : parse_search(search.empty() ? "0:6" : search);
      check(ck_bridge_report(b.get(), candidates.data(), candidates.size(), format, &out));
      std::cout << take(out);
    } else if (verify->parsed()) {
      int pass = 0;
      check(ck_verify(suite.c_str(), format, &pass, &out));
      std::cout << take(out);
      return pass ? 0 : kExitDomain;
    }
    return 0;
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.message << "\n" << "Run with --help for more information.\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    std::cerr << "error: " << ck_status_name(e.status) << ": " << e.message << "\n";
    return kExitDomain;
  }
}
