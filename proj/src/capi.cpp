#include "ck/ck.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "ck/braid.hpp"
#include "ck/bridge.hpp"
#include "ck/cluster.hpp"
#include "ck/errors.hpp"
#include "ck/projection_algebra.hpp"
#include "ck/skein.hpp"
#include "ck/verify.hpp"

struct ck_braid {
  ck::BraidWord word;
};
struct ck_seed {
  ck::Seed seed;
};
struct ck_graph {
  ck::MutationGraph graph;
  ck::BratteliDiagram diagram;
};

namespace {

thread_local std::string last_error;

ck_status fail(ck_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
ck_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return CK_OK;
  } catch (const ck::Error& e) {
    return fail(static_cast<ck_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(CK_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CK_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CK_INTERNAL_ERROR, e.what());
  }
}

void emit(char** out, const std::string& text) {
  char* s = static_cast<char*>(std::malloc(text.size() + 1));
  if (!s) throw std::bad_alloc();
  std::memcpy(s, text.c_str(), text.size() + 1);
  *out = s;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require(bool ok, const char* what) {
  if (!ok) throw ck::Error(ck::ErrorCode::InvalidArgument, what);
}

int effective_limit(int limit) { return limit <= 0 ? ck::kDefaultCrossingLimit : limit; }

void check_limit(const ck::BraidWord& b, int limit) {
  if (static_cast<int>(b.length()) > limit)
    throw ck::Error(ck::ErrorCode::LimitExceeded, "braid has " + std::to_string(b.length()) +
                                                      " crossings, above the cap of " + std::to_string(limit));
}

[[noreturn]] void unsupported(ck_format format, const char* what) {
  static const char* names[] = {"plain", "json", "latex", "dot"};
  int f = static_cast<int>(format);
  throw ck::Error(ck::ErrorCode::InvalidArgument, std::string("format ") +
                                                      (f >= 0 && f < 4 ? names[f] : "?") +
                                                      " is not available for " + what);
}

ck::Semifield semifield_of(ck_semifield s) {
  switch (s) {
    case CK_SEMIFIELD_UNIVERSAL: return ck::Semifield::Universal;
    case CK_SEMIFIELD_TROPICAL: return ck::Semifield::Tropical;
    case CK_SEMIFIELD_TRIVIAL: return ck::Semifield::Trivial;
  }
  throw ck::Error(ck::ErrorCode::InvalidArgument, "unknown semifield");
}

const char* route_name(ck_route r) {
  switch (r) {
    case CK_ROUTE_SKEIN: return "skein";
    case CK_ROUTE_BRACKET: return "bracket";
    case CK_ROUTE_TRACE: return "trace";
  }
  return "?";
}

ck::RelationPreset rho_preset(const std::string& name) {
  if (name == "tl" || name == "temperley_lieb") return ck::RelationPreset::kauffman();
  ck::RelationPreset p = ck::RelationPreset::by_name(name);
  if (!p.represents_braids())
    throw ck::Error(ck::ErrorCode::PresetMismatch, "preset '" + name + "' carries no braid representation");
  return p;
}

std::string laurent_report_text(const ck::LaurentReport& r) {
  std::ostringstream out;
  out << "depth " << r.depth << ": " << r.sequences << " mutation sequences, " << r.entries.size()
      << " distinct cluster variables, " << r.violations << " violations\n";
  for (const auto& e : r.entries) {
    out << "[";
    for (std::size_t i = 0; i < e.sequence.size(); ++i) out << (i ? " " : "") << e.sequence[i];
    out << "] " << (e.laurent && e.integer_coefficients ? "laurent" : "VIOLATION") << "  " << e.variable << "\n";
  }
  return out.str();
}

std::string level_sizes_text(const ck::BratteliDiagram& d) {
  std::string out = "level sizes:";
  for (std::size_t s : d.level_sizes()) out += " " + std::to_string(s);
  return out + "\n";
}

}  // namespace

extern "C" {

int ck_default_limit(void) { return ck::kDefaultCrossingLimit; }

const char* ck_status_name(ck_status status) {
  if (status == CK_OK) return "OK";
  if (status == CK_INTERNAL_ERROR) return "InternalError";
  int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ck::ErrorCode::Io)) return "UnknownStatus";
  return ck::error_name(static_cast<ck::ErrorCode>(code));
}

const char* ck_last_error(void) { return last_error.c_str(); }

void ck_string_free(char* s) { std::free(s); }

// ---- braids

ck_status ck_braid_parse(const char* text, int strands, ck_braid** out) {
  return guarded([&] {
    require(text && out, "null argument");
    std::optional<int> k;
    if (strands > 0) k = strands;
    *out = new ck_braid{ck::parse_braid(text, k)};
  });
}

ck_status ck_braid_create(int strands, const int* letters, size_t count, ck_braid** out) {
  return guarded([&] {
    require(out && (letters || count == 0), "null argument");
    *out = new ck_braid{ck::BraidWord(strands, std::vector<int>(letters, letters + count))};
  });
}

void ck_braid_free(ck_braid* b) { delete b; }

int ck_braid_strands(const ck_braid* b) { return b ? b->word.strands() : 0; }

size_t ck_braid_length(const ck_braid* b) { return b ? b->word.length() : 0; }

size_t ck_braid_letters(const ck_braid* b, int* letters, size_t capacity) {
  if (!b) return 0;
  const auto& l = b->word.letters();
  for (std::size_t i = 0; i < l.size() && i < capacity && letters; ++i) letters[i] = l[i];
  return l.size();
}

int ck_braid_closure_components(const ck_braid* b) { return b ? ck::closure_components(b->word) : 0; }

int ck_braid_writhe(const ck_braid* b) { return b ? ck::writhe(b->word) : 0; }

ck_status ck_braid_conjugate(const ck_braid* b, const ck_braid* g, ck_braid** out) {
  return guarded([&] {
    require(b && g && out, "null argument");
    *out = new ck_braid{ck::conjugate(b->word, g->word)};
  });
}

ck_status ck_braid_stabilize(const ck_braid* b, int sign, ck_braid** out) {
  return guarded([&] {
    require(b && out, "null argument");
    *out = new ck_braid{ck::stabilize(b->word, sign)};
  });
}

ck_status ck_braid_to_string(const ck_braid* b, ck_format format, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    if (format == CK_FORMAT_PLAIN) return emit(out, b->word.to_string() + "\n");
    if (format == CK_FORMAT_JSON) return emit(out, dump(b->word.to_json()));
    unsupported(format, "braids");
  });
}

// ---- invariants

ck_status ck_jones(const ck_braid* b, ck_route route, int limit, ck_format format, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    int cap = effective_limit(limit);
    ck::LaurentPoly v;
    switch (route) {
      case CK_ROUTE_SKEIN: v = ck::jones_skein(b->word, cap); break;
      case CK_ROUTE_BRACKET: v = ck::jones_via_bracket(b->word, cap); break;
      case CK_ROUTE_TRACE: v = ck::jones_via_trace(b->word, cap); break;
      default: throw ck::Error(ck::ErrorCode::InvalidArgument, "unknown route");
    }
    if (format == CK_FORMAT_PLAIN) return emit(out, ck::jones_to_string(v) + "\n");
    if (format == CK_FORMAT_LATEX) return emit(out, ck::jones_to_latex(v) + "\n");
    if (format == CK_FORMAT_JSON)
      return emit(out, dump({{"invariant", "jones"},
                             {"route", route_name(route)},
                             {"braid", b->word.to_json()},
                             {"value", ck::jones_to_json(v)}}));
    unsupported(format, "jones");
  });
}

ck_status ck_homfly(const ck_braid* b, int limit, ck_format format, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    ck::LaurentPoly v = ck::homfly_skein(b->word, effective_limit(limit));
    if (format == CK_FORMAT_PLAIN) return emit(out, v.to_string() + "\n");
    if (format == CK_FORMAT_LATEX) return emit(out, v.to_latex() + "\n");
    if (format == CK_FORMAT_JSON)
      return emit(out, dump({{"invariant", "homfly"},
                             {"braid", b->word.to_json()},
                             {"value", v.to_json()},
                             {"text", v.to_string()}}));
    unsupported(format, "homfly");
  });
}

ck_status ck_rho(const ck_braid* b, const char* preset, int limit, ck_format format, char** out) {
  return guarded([&] {
    require(b && preset && out, "null argument");
    check_limit(b->word, effective_limit(limit));
    ck::RelationPreset p = rho_preset(preset);
    ck::Algebra alg(b->word.strands(), p);
    ck::AlgebraElement x = alg.rho(b->word);
    if (format == CK_FORMAT_PLAIN) return emit(out, x.to_string() + "\n");
    if (format == CK_FORMAT_LATEX) return emit(out, x.to_latex() + "\n");
    if (format == CK_FORMAT_JSON)
      return emit(out, dump({{"braid", b->word.to_json()},
                             {"preset", p.name},
                             {"n", alg.n()},
                             {"value", x.to_json()},
                             {"text", x.to_string()}}));
    unsupported(format, "rho");
  });
}

ck_status ck_rho_class(const ck_braid* b, int limit, ck_format format, char** out) {
  return guarded([&] {
    require(b && out, "null argument");
    check_limit(b->word, effective_limit(limit));
    ck::Algebra alg(b->word.strands(), ck::RelationPreset::paper());
    ck::RhoClass rc = ck::rho_class(alg.rho(b->word));
    std::vector<std::string> basis, coeffs;
    for (const auto& w : alg.basis()) basis.push_back(w.to_string());
    for (const auto& c : rc.coefficients) coeffs.push_back(c.get_str());
    if (format == CK_FORMAT_PLAIN) {
      std::string text = "basis:";
      for (const auto& w : basis) text += " " + w;
      text += "\ncoefficients:";
      for (const auto& c : coeffs) text += " " + c;
      text += "\nscale: " + rc.scale.get_str() + "\n";
      return emit(out, text);
    }
    if (format == CK_FORMAT_JSON)
      return emit(out, dump({{"braid", b->word.to_json()},
                             {"preset", "paper"},
                             {"basis", basis},
                             {"coefficients", coeffs},
                             {"scale", rc.scale.get_str()}}));
    unsupported(format, "class");
  });
}

// ---- cluster seeds

ck_status ck_seed_preset(const char* name, ck_semifield semifield, ck_seed** out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = new ck_seed{ck::Seed::preset(name, semifield_of(semifield))};
  });
}

ck_status ck_seed_from_json(const char* json, ck_semifield semifield, ck_seed** out) {
  return guarded([&] {
    require(json && out, "null argument");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw ck::Error(ck::ErrorCode::InvalidArgument, std::string("malformed seed JSON: ") + e.what());
    }
    *out = new ck_seed{ck::Seed::from_json(j, semifield_of(semifield))};
  });
}

void ck_seed_free(ck_seed* s) { delete s; }

int ck_seed_rank(const ck_seed* s) { return s ? s->seed.rank() : 0; }

ck_status ck_seed_mutate(const ck_seed* s, int k, ck_seed** out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = new ck_seed{s->seed.mutate(k)};
  });
}

ck_status ck_seed_describe(const ck_seed* s, ck_format format, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    if (format == CK_FORMAT_PLAIN) return emit(out, s->seed.describe());
    if (format == CK_FORMAT_JSON) return emit(out, dump(s->seed.to_json()));
    unsupported(format, "seeds");
  });
}

ck_status ck_seed_check_laurent(const ck_seed* s, int depth, ck_format format, size_t* violations, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    ck::LaurentReport r = ck::check_laurent_phenomenon(s->seed, depth);
    if (violations) *violations = r.violations;
    if (format == CK_FORMAT_PLAIN) return emit(out, laurent_report_text(r));
    if (format == CK_FORMAT_JSON) return emit(out, dump(r.to_json()));
    unsupported(format, "Laurent reports");
  });
}

ck_status ck_mutation_graph(const ck_seed* s, int depth, ck_graph** out) {
  return guarded([&] {
    require(s && out, "null argument");
    ck::MutationGraph g = ck::mutation_graph(s->seed, depth);
    ck::BratteliDiagram d = ck::bratteli_from_mutations(g);
    *out = new ck_graph{std::move(g), std::move(d)};
  });
}

void ck_graph_free(ck_graph* g) { delete g; }

size_t ck_graph_levels(const ck_graph* g) { return g ? g->diagram.levels.size() : 0; }

size_t ck_graph_level_size(const ck_graph* g, size_t level) {
  if (!g || level >= g->diagram.levels.size()) return 0;
  return g->diagram.levels[level].size();
}

ck_status ck_graph_render(const ck_graph* g, ck_format format, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    if (format == CK_FORMAT_DOT) return emit(out, g->diagram.to_dot());
    if (format == CK_FORMAT_JSON) return emit(out, dump(g->diagram.to_json()));
    if (format == CK_FORMAT_PLAIN) return emit(out, level_sizes_text(g->diagram));
    unsupported(format, "Bratteli diagrams");
  });
}

ck_status ck_graph_isomorphic(const ck_graph* g, const char* reference, int* isomorphic) {
  return guarded([&] {
    require(g && reference && isomorphic, "null argument");
    std::string ref = reference;
    ck::BratteliDiagram target;
    if (ref == "pascal")
      target = ck::pascal_diagram(static_cast<int>(g->diagram.levels.size()));
    else if (ref == "three-fold")
      target = ck::three_fold_reference();
    else
      throw ck::Error(ck::ErrorCode::InvalidArgument, "unknown reference diagram '" + ref + "'");
    *isomorphic = ck::bratteli_isomorphic(g->diagram, target) ? 1 : 0;
  });
}

// ---- bridge and verification

ck_status ck_bridge_report(const ck_braid* b, const int* candidates, size_t count, ck_format format, char** out) {
  return guarded([&] {
    require(b && out && (candidates || count == 0), "null argument");
    ck::BridgeReport r = ck::bridge_report(b->word, std::vector<int>(candidates, candidates + count));
    if (format == CK_FORMAT_JSON) return emit(out, dump(r.to_json()));
    if (format == CK_FORMAT_PLAIN) {
      std::ostringstream text;
      text << "braid: " << r.braid.to_string() << "\n";
      text << "jones: " << ck::jones_to_string(r.lhs) << "\n";
      text << "class: " << r.cls.expression.to_string() << "\n";
      for (const auto& c : r.candidates)
        text << "N=" << c.N << ": " << (c.agree ? "agree" : "differ") << "  rhs = " << c.rhs.to_string() << "\n";
      text << "first agreeing N: " << (r.first_agreeing_N ? std::to_string(*r.first_agreeing_N) : "none") << "\n";
      return emit(out, text.str());
    }
    unsupported(format, "bridge reports");
  });
}

ck_status ck_skein_exchange_check(int* holds) {
  return guarded([&] {
    require(holds, "null argument");
    *holds = ck::skein_exchange_identity_check() ? 1 : 0;
  });
}

ck_status ck_homfly_exchange_check(int* holds) {
  return guarded([&] {
    require(holds, "null argument");
    *holds = ck::homfly_exchange_check() ? 1 : 0;
  });
}

ck_status ck_verify(const char* suite, ck_format format, int* all_pass, char** out) {
  return guarded([&] {
    require(suite && out, "null argument");
    std::vector<ck::VerifyLine> lines = ck::run_verify(suite);
    bool ok = true;
    for (const auto& l : lines) ok = ok && l.pass;
    if (all_pass) *all_pass = ok ? 1 : 0;
    if (format == CK_FORMAT_PLAIN) {
      std::string text;
      std::size_t passed = 0;
      for (const auto& l : lines) {
        text += l.to_string() + "\n";
        if (l.pass) ++passed;
      }
      text += std::to_string(passed) + "/" + std::to_string(lines.size()) + " properties passed\n";
      return emit(out, text);
    }
    if (format == CK_FORMAT_JSON) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& l : lines)
        arr.push_back({{"suite", l.suite}, {"property", l.property}, {"pass", l.pass}, {"checks", l.checks},
                       {"detail", l.detail}});
      return emit(out, dump({{"suite", suite}, {"pass", ok}, {"properties", arr}}));
    }
    unsupported(format, "verify reports");
  });
}

}  // extern "C"
