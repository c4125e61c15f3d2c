#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "ck/braid.hpp"
#include "ck/errors.hpp"
#include "ck/skein.hpp"
#include "ck/verify.hpp"

using namespace ck;

namespace {

// ---- independent oracle: Kauffman bracket by explicit state enumeration
//
// Points (h, p) sit above level h on strand position p. A crossing at level h
// is smoothed either vertically (identity) or horizontally (cup/cap); loops
// are counted with a union-find after closing the braid. For a positive
// crossing the vertical smoothing carries A, the horizontal one A^-1; the
// weights swap for a negative crossing.

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

using APoly = std::map<int, long>;  // exponent of A -> integer coefficient

void add(APoly& p, int e, long c) {
  p[e] += c;
  if (p[e] == 0) p.erase(e);
}

APoly mul(const APoly& a, const APoly& b) {
  APoly out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) add(out, ea + eb, ca * cb);
  return out;
}

APoly bracket_oracle(const BraidWord& b) {
  const int n = b.strands(), c = static_cast<int>(b.length());
  auto point = [n](int h, int p) { return h * n + p; };
  APoly total;
  APoly d{{2, -1}, {-2, -1}};
  for (long state = 0; state < (1L << c); ++state) {
    UnionFind uf((c + 1) * n);
    int a_exp = 0;
    for (int h = 0; h < c; ++h) {
      int letter = b.letters()[h];
      int i = std::abs(letter) - 1;
      bool vertical = (state >> h) & 1;
      a_exp += (vertical == (letter > 0)) ? 1 : -1;
      for (int q = 0; q < n; ++q)
        if (q != i && q != i + 1) uf.join(point(h, q), point(h + 1, q));
      if (vertical) {
        uf.join(point(h, i), point(h + 1, i));
        uf.join(point(h, i + 1), point(h + 1, i + 1));
      } else {
        uf.join(point(h, i), point(h, i + 1));
        uf.join(point(h + 1, i), point(h + 1, i + 1));
      }
    }
    for (int q = 0; q < n; ++q) uf.join(point(c, q), point(0, q));
    int loops = 0;
    for (int x = 0; x < (c + 1) * n; ++x)
      if (uf.find(x) == x) ++loops;
    APoly term{{a_exp, 1}};
    for (int k = 1; k < loops; ++k) term = mul(term, d);
    for (auto [e, coef] : term) add(total, e, coef);
  }
  return total;
}

// (-A^3)^-w <b>, then A^2 -> s.
LaurentPoly jones_oracle(const BraidWord& b) {
  APoly br = bracket_oracle(b);
  int w = writhe(b);
  LaurentPoly out({"s"});
  for (auto [e, c] : br) {
    int k = e - 3 * w;
    REQUIRE(k % 2 == 0);
    long sign = (w % 2 == 0) ? 1 : -1;
    out += LaurentPoly::monomial({"s"}, {k / 2}, Rational(c * sign));
  }
  return out;
}

// HOMFLY -> Jones: c l^a m^b -> c (-1)^((a+b)/2) s^(2a) (s - s^-1)^b.
LaurentPoly specialize(const LaurentPoly& h) {
  RationalFn s = LaurentPoly::variable("s");
  RationalFn diff = s - s.inverse();
  int il = h.variable_index("l"), im = h.variable_index("m");
  RationalFn sum;
  for (const auto& [e, c] : h.terms()) {
    int a = il < 0 ? 0 : e[il], m = im < 0 ? 0 : e[im];
    REQUIRE((a + m) % 2 == 0);
    Rational sign = ((a + m) / 2) % 2 == 0 ? 1 : -1;
    sum += RationalFn(LaurentPoly::monomial({"s"}, {2 * a}, c * sign)) * diff.pow(m);
  }
  REQUIRE(sum.as_laurent().has_value());
  return *sum.as_laurent();
}

LaurentPoly t_poly(std::initializer_list<std::pair<int, int>> half_exp_coeff) {
  LaurentPoly p({"s"});
  for (auto [e, c] : half_exp_coeff) p += LaurentPoly::monomial({"s"}, {e}, c);
  return p;
}

}  // namespace

TEST_CASE("known Jones values") {
  CHECK(jones_to_string(jones_skein(parse_braid("s1^3"))) == "-t^-4 + t^-3 + t^-1");
  CHECK(jones_to_string(jones_skein(parse_braid("s1^-3"))) == "t + t^3 - t^4");
  CHECK(jones_to_string(jones_skein(parse_braid("s1^2"))) == "-t^-5/2 - t^-1/2");
  CHECK(jones_to_string(jones_skein(parse_braid("s1 s2^-1 s1 s2^-1"))) == "t^-2 - t^-1 + 1 - t + t^2");
  CHECK(jones_skein(parse_braid("")) == LaurentPoly::constant(1, {"s"}));
  CHECK(jones_skein(parse_braid("s1")) == LaurentPoly::constant(1, {"s"}));
  CHECK(jones_skein(parse_braid("", 2)) == t_poly({{-1, -1}, {1, -1}}));
}

TEST_CASE("known HOMFLY values") {
  CHECK(homfly_skein(parse_braid("s1^3")).to_string() == "-l^-4 - 2*l^-2 + l^-2*m^2");
  CHECK(homfly_skein(parse_braid("")) == LaurentPoly::constant(1));
  CHECK(homfly_skein(parse_braid("s1 s2^-1")) == LaurentPoly::constant(1));
  LaurentPoly l = LaurentPoly::variable("l"), m = LaurentPoly::variable("m");
  CHECK(homfly_skein(parse_braid("", 2)) == -(l + l.pow(-1)) * m.pow(-1));
}

TEST_CASE("Kauffman bracket values") {
  LaurentPoly A = LaurentPoly::variable("A");
  CHECK(kauffman_bracket(parse_braid("s1")) == -A.pow(3));
  CHECK(kauffman_bracket(parse_braid("s1^3")) == A.pow(-7) - A.pow(-3) - A.pow(5));
  CHECK_THROWS_AS(normalize_bracket(A, 0), Error);
}

TEST_CASE("skein engine agrees with a state-sum oracle (exhaustive B2, B3 up to 6 crossings)") {
  for (int k : {2, 3}) {
    for (const BraidWord& b : all_reduced_words(k, 6)) {
      CHECK(jones_skein(b) == jones_oracle(b));
    }
  }
}

TEST_CASE("all Jones routes agree on random B4 words") {
  std::mt19937 rng(404);
  for (int i = 0; i < 60; ++i) {
    BraidWord b = random_braid(rng, 4, 0, 9);
    LaurentPoly v = jones_skein(b);
    CHECK(v == jones_via_bracket(b));
    CHECK(v == jones_via_trace(b));
    CHECK(v == jones_oracle(b));
  }
}

TEST_CASE("HOMFLY specializes to Jones") {
  std::mt19937 rng(17);
  for (int i = 0; i < 80; ++i) {
    BraidWord b = random_braid(rng, 2 + i % 3, 0, 8);
    CHECK(specialize(homfly_skein(b)) == jones_skein(b));
  }
}

TEST_CASE("mirror") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    BraidWord b = random_braid(rng, 3, 1, 7);
    CHECK(jones_skein(mirror(b)) == jones_mirror(jones_skein(b)));
  }
}

TEST_CASE("crossing limit") {
  BraidWord long_word = parse_braid("s1^17");
  CHECK_THROWS_AS(jones_skein(long_word), Error);
  try {
    homfly_skein(long_word, 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LimitExceeded);
  }
  CHECK_NOTHROW(jones_skein(long_word, 17));
  CHECK_THROWS_AS(kauffman_bracket(parse_braid("s1^5"), 4), Error);
}

TEST_CASE("descending diagrams") {
  // the strand entering at position 1 meets s1 first, moving right: over
  CHECK(is_descending(parse_braid("s1")));
  CHECK(is_descending(parse_braid("s1 s2")));
  CHECK_FALSE(is_descending(parse_braid("s1^-1")));
  CHECK_FALSE(is_descending(parse_braid("s1 s1")));
}

TEST_CASE("output forms") {
  LaurentPoly v = jones_skein(parse_braid("s1^2"));
  nlohmann::json j = jones_to_json(v);
  CHECK(j["variable"] == "t");
  CHECK(j["text"] == "-t^-5/2 - t^-1/2");
  CHECK(j["terms"][0]["t_exp"] == "-5/2");
  CHECK(j["terms"][0]["coeff"] == "-1");
  CHECK(jones_to_latex(v).find("t^{-5/2}") != std::string::npos);
}

TEST_CASE("memoized recursion is deterministic under concurrency") {
  std::mt19937 rng(77);
  std::vector<BraidWord> words;
  for (int i = 0; i < 40; ++i) words.push_back(random_braid(rng, 4, 4, 10));
  std::vector<LaurentPoly> sequential;
  clear_skein_memo();
  for (const auto& b : words) sequential.push_back(homfly_skein(b));
  clear_skein_memo();
  std::vector<LaurentPoly> parallel(words.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < words.size(); i += 4) parallel[i] = homfly_skein(words[i]);
    });
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(parallel[i] == sequential[i]);
}
