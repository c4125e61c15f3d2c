#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ck/braid.hpp"
#include "ck/errors.hpp"
#include "ck/projection_algebra.hpp"

using namespace ck;

namespace {

using Word = std::vector<int>;

// ---- independent oracle: string rewriting with rational scalars
//
// Words are generator sequences. Far commutation generates an equivalence
// class; a reduction (e_i e_i -> mu e_i, e_i e_{i+-1} e_i -> kappa e_i) may be
// applied anywhere in any word of the class. Running to exhaustion under two
// different choice strategies and landing in the same class with the same
// scalar is the empirical confluence check.

std::set<Word> commutation_class(const Word& w) {
  std::set<Word> seen{w};
  std::vector<Word> stack{w};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (std::abs(cur[p] - cur[p + 1]) < 2) continue;
      Word next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return seen;
}

struct Rewritten {
  Rational scalar;
  std::set<Word> cls;
};

Rewritten rewrite(Word w, const Rational& mu, const Rational& kappa, bool last_choice) {
  Rational scalar = 1;
  while (true) {
    std::set<Word> cls = commutation_class(w);
    std::vector<Word> order(cls.begin(), cls.end());
    if (last_choice) std::reverse(order.begin(), order.end());
    bool applied = false;
    for (const Word& v : order) {
      for (std::size_t p = 0; p + 1 < v.size() && !applied; ++p) {
        if (v[p] == v[p + 1]) {
          w = v;
          w.erase(w.begin() + p);
          scalar *= mu;
          applied = true;
        } else if (p + 2 < v.size() && v[p] == v[p + 2] && std::abs(v[p] - v[p + 1]) == 1) {
          w = v;
          w.erase(w.begin() + p + 1, w.begin() + p + 3);
          scalar *= kappa;
          applied = true;
        }
      }
      if (applied) break;
    }
    if (!applied) return {scalar, cls};
  }
}

void all_words(int n, int max_len, Word& cur, std::vector<Word>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int i = 1; i < n; ++i) {
    cur.push_back(i);
    all_words(n, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("Catalan basis sizes and text form") {
  const std::uint64_t expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) CHECK(reduced_words(n).size() == expected[n - 1]);
  const auto& b3 = reduced_words(3);
  std::vector<std::string> text;
  for (const auto& w : b3) text.push_back(w.to_string());
  CHECK(text == std::vector<std::string>{"1", "e1", "e2", "e1·e2", "e2e1"});
  ReducedWord w({{2, 1}, {3, 3}});
  CHECK(w.to_string() == "e2e1·e3");
  CHECK(w.to_json()["runs"] == nlohmann::json::parse("[[2,1],[3,3]]"));
  CHECK(w.letters() == std::vector<int>{2, 1, 3});
}

TEST_CASE("normal form agrees with confluent string rewriting for n <= 4") {
  const Rational mu = 1, kappa = -2;
  for (int n = 2; n <= 4; ++n) {
    Algebra alg(n, RelationPreset::paper());
    std::vector<Word> words;
    Word cur;
    all_words(n, 6, cur, words);
    for (const Word& w : words) {
      Rewritten first = rewrite(w, mu, kappa, false), last = rewrite(w, mu, kappa, true);
      REQUIRE(first.scalar == last.scalar);
      REQUIRE(first.cls == last.cls);
      AlgebraElement nf = alg.normal_form(w);
      REQUIRE(nf.terms().size() == 1);
      const auto& [index, coeff] = *nf.terms().begin();
      CHECK(coeff == LaurentPoly::constant(first.scalar));
      CHECK(first.cls.count(alg.basis()[index].letters()) == 1);
    }
  }
}

TEST_CASE("basis words are irreducible and pairwise inequivalent") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::set<Word>> classes;
    for (const auto& w : reduced_words(n)) {
      Rewritten r = rewrite(w.letters(), 1, -2, false);
      CHECK(r.scalar == 1);
      classes.insert(r.cls);
    }
    CHECK(classes.size() == reduced_words(n).size());
  }
}

TEST_CASE("values with mu = 1, kappa = -2") {
  Algebra alg(3, RelationPreset::paper());
  CHECK(alg.normal_form({1, 2, 1}).to_string() == "-2*e1");
  CHECK(alg.normal_form({1, 1}).to_string() == "e1");
  CHECK(alg.rho(parse_braid("s1^-1", 3)).to_string() == "1 - 1/2*e1");
  CHECK(alg.rho(parse_braid("s1 s2^-1 s1")).to_string() == "1 + 4*e1 - 1/2*e2 - 1/2*e1·e2 - 1/2*e2e1");
  CHECK(alg.multiply(alg.u(1), alg.u_inverse(1)) == alg.one());
  CHECK_THROWS_AS(alg.markov_trace(alg.one()), Error);
}

TEST_CASE("braid relations hold exactly for the representing presets") {
  for (int n = 3; n <= 5; ++n) {
    CHECK(braid_relation_check(n, RelationPreset::paper()));
    CHECK(braid_relation_check(n, RelationPreset::parametric()));
    CHECK(braid_relation_check(n, RelationPreset::kauffman()));
  }
  RelationPreset plus = RelationPreset::custom("plus", LaurentPoly::constant(1), LaurentPoly::constant(1),
                                               LaurentPoly::constant(1), LaurentPoly::constant(1));
  CHECK_FALSE(braid_relation_check(3, plus));
}

TEST_CASE("parametric preset has no Laurent inverse") {
  Algebra alg(2, RelationPreset::parametric());
  CHECK(alg.u(1).to_string() == "(b) + (a)*e1");
  CHECK_THROWS_AS(alg.u_inverse(1), Error);
}

TEST_CASE("Kauffman preset inverse is A e + A^-1") {
  Algebra alg(3, RelationPreset::kauffman());
  LaurentPoly A = LaurentPoly::variable("A");
  AlgebraElement expected = A * alg.generator(2) + A.pow(-1) * alg.one();
  CHECK(alg.u_inverse(2) == expected);
  CHECK(alg.multiply(alg.u(2), alg.u_inverse(2)) == alg.one());
}

TEST_CASE("Markov trace with symbolic loop value") {
  Algebra tl(3, RelationPreset::temperley_lieb());
  RationalFn d = LaurentPoly::variable("d");
  CHECK(tl.markov_trace(tl.one()) == RationalFn(LaurentPoly::constant(1)));
  CHECK(tl.markov_trace(tl.generator(1)) == d.inverse());
  CHECK(tl.markov_trace(tl.normal_form({1, 2})) == d.pow(-2));
  CHECK(tl.markov_trace(tl.normal_form({1, 1})) == RationalFn(LaurentPoly::constant(1)));
  CHECK_THROWS_AS(tl.rho(parse_braid("s1", 3)), Error);
}

TEST_CASE("strand limit and class") {
  CHECK_THROWS_AS(Algebra(10, RelationPreset::paper()), Error);
  Algebra alg(2, RelationPreset::paper());
  RhoClass rc = rho_class(alg.rho(parse_braid("s1^-1")));
  CHECK(rc.scale == 2);
  CHECK(rc.coefficients == std::vector<mpz_class>{2, -1});
}
