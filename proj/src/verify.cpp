#include "ck/verify.hpp"

#include <functional>
#include <set>

#include "ck/bridge.hpp"
#include "ck/cluster.hpp"
#include "ck/errors.hpp"
#include "ck/projection_algebra.hpp"
#include "ck/skein.hpp"

namespace ck {

std::string VerifyLine::to_string() const {
  std::string out = std::string(pass ? "PASS " : "FAIL ") + suite + "/" + property + " (" +
                    std::to_string(checks) + " checks)";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"laurent", "catalan", "braid-relations", "markov",
                                               "oracle",  "cluster", "bridge-identities"};
  return suites;
}

BraidWord random_braid(std::mt19937& rng, int strands, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> gen(1, std::max(1, strands - 1));
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  if (strands > 1) {
    int L = len(rng);
    for (int i = 0; i < L; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  }
  return BraidWord(strands, std::move(letters));
}

LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms,
                        int max_exp, int max_coeff) {
  std::uniform_int_distribution<int> terms(1, max_terms), ex(-max_exp, max_exp), co(-max_coeff, max_coeff);
  LaurentPoly p(vars);
  int T = terms(rng);
  for (int k = 0; k < T; ++k) {
    Exponents e(vars.size());
    for (auto& x : e) x = ex(rng);
    p += LaurentPoly::monomial(vars, e, co(rng));
  }
  return p;
}

std::vector<BraidWord> all_reduced_words(int strands, int max_len) {
  std::vector<BraidWord> out;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    out.emplace_back(strands, cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int g = 1; g < strands; ++g) {
      for (int l : {g, -g}) {
        if (!cur.empty() && cur.back() == -l) continue;
        cur.push_back(l);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();
  return out;
}

namespace {

using Lines = std::vector<VerifyLine>;

VerifyLine line(const std::string& suite, const std::string& property, std::size_t checks, std::size_t failures,
                std::string detail = "") {
  VerifyLine l;
  l.suite = suite;
  l.property = property;
  l.checks = checks;
  l.pass = failures == 0;
  if (failures) l.detail = std::to_string(failures) + " failed" + (detail.empty() ? "" : "; " + detail);
  else l.detail = std::move(detail);
  return l;
}

// ----- laurent

void suite_laurent(Lines& out) {
  std::mt19937 rng(20240611);
  const std::vector<std::string> xy{"x", "y"};
  std::size_t fails = 0;
  for (int i = 0; i < 1000; ++i) {
    LaurentPoly a = random_poly(rng, xy, 4, 3, 5), b = random_poly(rng, xy, 4, 3, 5), c = random_poly(rng, xy, 4, 3, 5);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a * b == b * a && a + b == b + a;
    if (!ok) ++fails;
  }
  out.push_back(line("laurent", "ring-axioms", 1000, fails));

  fails = 0;
  std::size_t points = 0;
  std::uniform_int_distribution<int> val(-9, 9), den(1, 5);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly g = random_poly(rng, xy, 2, 2, 3), u = random_poly(rng, xy, 3, 2, 4), v = random_poly(rng, xy, 3, 2, 4);
    if (g.is_zero() || v.is_zero()) continue;
    LaurentPoly p = g * u, q = g * v;
    RationalFn f = ratfn_reduce(p, q);
    if (!(ratfn_reduce(f) == f)) ++fails;
    for (int k = 0; k < 20; ++k) {
      std::map<std::string, Rational> at{{"x", Rational(val(rng), den(rng))}, {"y", Rational(val(rng), den(rng))}};
      for (auto& [n, r] : at) r.canonicalize();
      if (at["x"] == 0 || at["y"] == 0) continue;
      Rational qv = q.evaluate(at), fd = f.denominator().evaluate(at);
      if (qv == 0 || fd == 0) continue;
      ++points;
      if (f.evaluate(at) != p.evaluate(at) / qv) ++fails;
    }
  }
  out.push_back(line("laurent", "reduce-idempotent-and-value-preserving", points + 50, fails));

  fails = 0;
  const std::vector<std::string> t{"t"};
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng, xy, 3, 2, 4), b = random_poly(rng, xy, 3, 2, 4);
    LaurentPoly bx = random_poly(rng, t, 2, 2, 3), by = random_poly(rng, t, 2, 2, 3);
    LaurentPoly dx = random_poly(rng, t, 2, 2, 3);
    if (bx.is_zero() || by.is_zero() || dx.is_zero()) continue;
    std::map<std::string, RationalFn> bind{{"x", RationalFn(bx, dx)}, {"y", RationalFn(by)}};
    if (!(poly_substitute(a * b, bind) == poly_substitute(a, bind) * poly_substitute(b, bind))) ++fails;
    if (!(poly_substitute(a + b, bind) == poly_substitute(a, bind) + poly_substitute(b, bind))) ++fails;
  }
  out.push_back(line("laurent", "substitution-is-a-homomorphism", 400, fails));
}

// ----- catalan

void suite_catalan(Lines& out) {
  std::size_t fails = 0;
  std::string sizes;
  for (int n = 1; n <= 8; ++n) {
    std::size_t size = reduced_words(n).size();
    sizes += (n > 1 ? "," : "") + std::to_string(size);
    if (size != catalan(n)) ++fails;
  }
  out.push_back(line("catalan", "basis-sizes", 8, fails, "sizes " + sizes));

  // Multiplicative closure of the generators reaches exactly the basis.
  fails = 0;
  for (int n = 1; n <= 6; ++n) {
    Algebra alg(n, RelationPreset::paper());
    std::set<std::size_t> reached{0};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t w : frontier) {
        for (int i = 1; i < n; ++i) {
          AlgebraElement x = alg.times_generator(alg.word(alg.basis()[w]), i);
          if (x.terms().size() != 1) {
            ++fails;
            continue;
          }
          std::size_t k = x.terms().begin()->first;
          if (reached.insert(k).second) next.push_back(k);
        }
      }
      frontier = std::move(next);
    }
    if (reached.size() != catalan(n)) ++fails;
  }
  out.push_back(line("catalan", "generator-closure-size", 6, fails));

  fails = 0;
  std::size_t checks = 0;
  for (int n = 1; n <= 6; ++n) {
    Algebra alg(n, RelationPreset::paper());
    std::vector<AlgebraElement> words;
    for (const auto& w : alg.basis()) words.push_back(alg.word(w));
    for (const auto& a : words)
      for (const auto& b : words) {
        ++checks;
        if (alg.multiply(a, b).terms().size() != 1) ++fails;
      }
  }
  out.push_back(line("catalan", "multiplicative-closure", checks, fails));
}

// ----- braid relations

void suite_braid_relations(Lines& out) {
  std::size_t fails = 0;
  for (int n = 3; n <= 5; ++n) {
    if (!braid_relation_check(n, RelationPreset::paper())) ++fails;
    if (!braid_relation_check(n, RelationPreset::parametric())) ++fails;
  }
  out.push_back(line("braid-relations", "unit-and-parametric-presets", 6, fails));

  RelationPreset wrong = RelationPreset::custom("plus-one", LaurentPoly::constant(1), LaurentPoly::constant(1),
                                                LaurentPoly::constant(1), LaurentPoly::constant(1));
  out.push_back(line("braid-relations", "sandwich-plus-one-fails", 1, braid_relation_check(3, wrong) ? 1 : 0));

  fails = 0;
  std::size_t checks = 0;
  for (int n = 2; n <= 6; ++n) {
    Algebra alg(n, RelationPreset::paper());
    for (int i = 1; i < n; ++i) {
      ++checks;
      AlgebraElement inv = alg.one() - LaurentPoly::constant(Rational(1, 2)) * alg.generator(i);
      AlgebraElement u = alg.generator(i) + alg.one();
      if (!(alg.multiply(u, inv) == alg.one()) || !(alg.multiply(inv, u) == alg.one()) || !(alg.u_inverse(i) == inv))
        ++fails;
    }
  }
  out.push_back(line("braid-relations", "generator-inverse", checks, fails));
}

// ----- markov

void suite_markov(Lines& out) {
  std::mt19937 rng(7321);
  std::uniform_int_distribution<int> strands(2, 4);
  std::size_t fails = 0;
  for (int i = 0; i < 50; ++i) {
    int k = strands(rng);
    BraidWord b = random_braid(rng, k, 0, 6), g = random_braid(rng, k, 1, 3);
    BraidWord c = conjugate(b, g);
    if (!(jones_skein(b) == jones_skein(c)) || !(jones_via_bracket(b) == jones_via_bracket(c)) ||
        !(homfly_skein(b) == homfly_skein(c)))
      ++fails;
  }
  out.push_back(line("markov", "conjugation-invariance", 50, fails));

  fails = 0;
  for (int i = 0; i < 50; ++i) {
    int k = strands(rng);
    BraidWord b = random_braid(rng, k, 0, 6);
    BraidWord s = stabilize(b, i % 2 == 0 ? 1 : -1);
    if (!(jones_skein(b) == jones_skein(s)) || !(jones_via_bracket(b) == jones_via_bracket(s)) ||
        !(homfly_skein(b) == homfly_skein(s)))
      ++fails;
  }
  out.push_back(line("markov", "stabilization-invariance", 50, fails));

  // Trace properties in TL_4 with symbolic loop value d.
  Algebra tl(4, RelationPreset::temperley_lieb());
  auto random_element = [&](int max_gen) {
    AlgebraElement x = tl.zero();
    std::uniform_int_distribution<int> terms(1, 4), co(-3, 3);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(tl.basis().size()) - 1);
    int T = terms(rng);
    for (int j = 0; j < T; ++j) {
      const ReducedWord& w = tl.basis()[pick(rng)];
      if (w.max_index() > max_gen) continue;
      x += tl.word(w, LaurentPoly::constant(co(rng)));
    }
    return x;
  };
  fails = 0;
  for (int i = 0; i < 100; ++i) {
    AlgebraElement x = random_element(3), y = random_element(3);
    if (!(tl.markov_trace(tl.multiply(x, y)) == tl.markov_trace(tl.multiply(y, x)))) ++fails;
  }
  out.push_back(line("markov", "trace-symmetry", 100, fails));

  fails = 0;
  RationalFn d_inv = RationalFn(LaurentPoly::variable("d", -1));
  for (int i = 0; i < 100; ++i) {
    AlgebraElement x = random_element(2);
    if (!(tl.markov_trace(tl.times_generator(x, 3)) == d_inv * tl.markov_trace(x))) ++fails;
  }
  out.push_back(line("markov", "trace-loop-reduction", 100, fails));

  fails = 0;
  for (int i = 0; i < 50; ++i) {
    Algebra kf(4, RelationPreset::kauffman());
    BraidWord b = random_braid(rng, 4, 0, 6), g = random_braid(rng, 4, 1, 3);
    if (!(kf.markov_trace(kf.rho(b)) == kf.markov_trace(kf.rho(conjugate(b, g))))) ++fails;
  }
  out.push_back(line("markov", "trace-conjugation-invariance", 50, fails));
}

// ----- oracle

// HOMFLY -> Jones: l -> i t, m -> i (s - s^-1), so c l^a m^b becomes
// c (-1)^((a+b)/2) t^a (s - s^-1)^b.
LaurentPoly homfly_to_jones(const LaurentPoly& h) {
  RationalFn s = LaurentPoly::variable("s");
  RationalFn diff = s - s.inverse();
  int il = h.variable_index("l"), im = h.variable_index("m");
  RationalFn out;
  for (const auto& [e, c] : h.terms()) {
    int a = il < 0 ? 0 : e[il], b = im < 0 ? 0 : e[im];
    if ((a + b) % 2 != 0) throw Error(ErrorCode::InvalidArgument, "odd total degree in a HOMFLY term");
    Rational sign = ((a + b) / 2) % 2 == 0 ? 1 : -1;
    out = out + RationalFn(LaurentPoly::monomial({"s"}, {2 * a}, c * sign)) * diff.pow(b);
  }
  auto p = out.as_laurent();
  if (!p) throw Error(ErrorCode::InvalidArgument, "HOMFLY specialization is not a Laurent polynomial");
  return *p;
}

void suite_oracle(Lines& out) {
  std::size_t fails = 0, checks = 0;
  for (int k : {2, 3}) {
    for (const BraidWord& b : all_reduced_words(k, 8)) {
      ++checks;
      if (!(jones_skein(b) == jones_via_bracket(b))) ++fails;
    }
  }
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    BraidWord b = random_braid(rng, 4, 1, 10);
    ++checks;
    if (!(jones_skein(b) == jones_via_bracket(b))) ++fails;
  }
  out.push_back(line("oracle", "skein-equals-bracket", checks, fails));

  fails = 0;
  checks = 0;
  for (int i = 0; i < 60; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 4, 0, 8);
    ++checks;
    if (!(jones_via_trace(b) == jones_via_bracket(b))) ++fails;
  }
  out.push_back(line("oracle", "trace-equals-bracket", checks, fails));

  fails = 0;
  for (int i = 0; i < 20; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 3, 1, 8);
    if (!(jones_skein(mirror(b)) == jones_mirror(jones_skein(b)))) ++fails;
  }
  out.push_back(line("oracle", "mirror-inverts-t", 20, fails));

  fails = 0;
  for (int i = 0; i < 50; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 3, 0, 8);
    if (!(homfly_to_jones(homfly_skein(b)) == jones_skein(b))) ++fails;
  }
  out.push_back(line("oracle", "homfly-specializes-to-jones", 50, fails));

  fails = 0;
  checks = 0;
  for (int i = 0; i < 40; ++i) {
    BraidWord b = random_braid(rng, 3, 2, 8);
    ++checks;
    if (!(jones_skein(b) == jones_skein(free_reduced(b)))) ++fails;
  }
  out.push_back(line("oracle", "free-reduction-invariance", checks, fails));
}

// ----- cluster

void suite_cluster(Lines& out) {
  LaurentReport r02 = check_laurent_phenomenon(Seed::preset("S02", Semifield::Trivial), 6);
  LaurentReport r11 = check_laurent_phenomenon(Seed::preset("S11", Semifield::Trivial), 4);
  out.push_back(line("cluster", "laurent-phenomenon", r02.entries.size() + r11.entries.size(),
                     r02.violations + r11.violations));

  std::size_t fails = 0, checks = 0;
  for (const char* name : {"S02", "S11"}) {
    for (Semifield sf : {Semifield::Universal, Semifield::Tropical, Semifield::Trivial}) {
      Seed s = Seed::preset(name, sf);
      for (int k = 1; k <= s.rank(); ++k) {
        ++checks;
        Seed m = s.mutate(k);
        if (!involutivity_check(s, k) || !is_skew_symmetric(m.matrix())) ++fails;
      }
    }
  }
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> rank(1, 4), entry(-2, 2);
  for (int i = 0; i < 100; ++i) {
    int n = rank(rng);
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        m[a][b] = entry(rng);
        m[b][a] = -m[a][b];
      }
    Seed s(m, i % 2 == 0 ? Semifield::Universal : Semifield::Tropical);
    for (int k = 1; k <= n; ++k) {
      ++checks;
      Seed once = s.mutate(k);
      if (!is_skew_symmetric(once.matrix()) || !(once.mutate(k) == s)) ++fails;
    }
  }
  out.push_back(line("cluster", "involutivity-and-skew-symmetry", checks, fails));

  Seed s11 = Seed::preset("S11");
  fails = 0;
  for (int k = 1; k <= 3; ++k)
    if (!matrix_equivalent(mutate_matrix(s11.matrix(), k), s11.matrix())) ++fails;
  out.push_back(line("cluster", "torus-matrix-class-singleton", 3, fails));
}

// ----- bridge identities

void suite_bridge(Lines& out) {
  out.push_back(line("bridge-identities", "skein-to-exchange", 1, skein_exchange_identity_check() ? 0 : 1));
  RationalFn t2 = LaurentPoly::variable("s", 4);
  RationalFn one = LaurentPoly::constant(1);
  bool perturbed = skein_exchange_identity(one / (t2 - one), -(one / (t2 - one))).holds();
  out.push_back(line("bridge-identities", "perturbed-coefficient-detected", 1, perturbed ? 1 : 0));
  Rational worst = skein_exchange_numeric_residual(t2 / (t2 - one), -(one / (t2 - one)), 10, 31337);
  out.push_back(line("bridge-identities", "numeric-residuals", 10, worst == 0 ? 0 : 1));
  HomflyExchangeCheck h = homfly_exchange_identity();
  out.push_back(line("bridge-identities", "homfly-from-exchange", 6, h.holds() ? 0 : 1));
}

}  // namespace

std::vector<VerifyLine> run_verify(const std::string& suite) {
  static const std::map<std::string, void (*)(Lines&)> table{
      {"laurent", suite_laurent},   {"catalan", suite_catalan}, {"braid-relations", suite_braid_relations},
      {"markov", suite_markov},     {"oracle", suite_oracle},   {"cluster", suite_cluster},
      {"bridge-identities", suite_bridge},
  };
  Lines out;
  if (suite == "all") {
    for (const auto& name : verify_suites()) table.at(name)(out);
    return out;
  }
  auto it = table.find(suite);
  if (it == table.end()) throw Error(ErrorCode::InvalidArgument, "unknown verify suite '" + suite + "'");
  it->second(out);
  return out;
}

}  // namespace ck
