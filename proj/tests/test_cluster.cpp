#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ck/cluster.hpp"
#include "ck/errors.hpp"

using namespace ck;

namespace {

RationalFn var(const std::string& name) { return LaurentPoly::variable(name); }
RationalFn one() { return LaurentPoly::constant(1); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("matrix mutation") {
  IntMatrix s02{{0, 2}, {-2, 0}};
  CHECK(mutate_matrix(s02, 1) == IntMatrix{{0, -2}, {2, 0}});
  IntMatrix s11 = Seed::preset("S11").matrix();
  CHECK(is_skew_symmetric(s11));
  // b'_ij = -b_ij on row/column k, else b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2
  IntMatrix m{{0, 1, -1}, {-1, 0, 2}, {1, -2, 0}};
  CHECK(mutate_matrix(m, 1) == IntMatrix{{0, -1, 1}, {1, 0, 1}, {-1, -1, 0}});
  for (int k = 1; k <= 3; ++k) {
    CHECK(mutate_matrix(mutate_matrix(m, k), k) == m);
    CHECK(matrix_equivalent(mutate_matrix(s11, k), s11));
  }
  CHECK_FALSE(matrix_equivalent(m, s11));
}

TEST_CASE("universal exchange on the rank-2 seed") {
  Seed s = Seed::preset("S02");
  Seed t = s.mutate(1);
  RationalFn x1 = var("x1"), x2 = var("x2"), c1 = var("c1"), c2 = var("c2");
  // b21 = -2: the plus product is empty, the minus product is x2^2
  CHECK(t.cluster()[0] == (c1 + x2.pow(2)) / ((c1 + one()) * x1));
  CHECK(t.cluster()[1] == x2);
  CHECK(t.coefficients()[0] == c1.inverse());
  CHECK(t.coefficients()[1] == c2 * c1.pow(2) / (c1 + one()).pow(2));
  CHECK(t.mutate(1) == s);
}

TEST_CASE("trivial and tropical semifields") {
  RationalFn x1 = var("x1"), x2 = var("x2"), x3 = var("x3"), y1 = var("y1"), y2 = var("y2"), y3 = var("y3");
  Seed triv = Seed::preset("S02", Semifield::Trivial).mutate(1);
  CHECK(triv.cluster()[0] == (one() + x2.pow(2)) / x1);

  Seed trop = Seed::preset("S02", Semifield::Tropical).mutate(1);
  CHECK(trop.cluster()[0] == (y1 + x2.pow(2)) / x1);
  CHECK(trop.tropical_exponents()[0] == std::vector<int>{-1, 0});
  CHECK(trop.tropical_exponents()[1] == std::vector<int>{2, 1});

  Seed s11 = Seed::preset("S11", Semifield::Tropical).mutate(1);
  CHECK(s11.cluster()[0] == (x2.pow(2) + x3.pow(2) * y1) / x1);
  std::vector<RationalFn> y = s11.coefficients();
  CHECK(y[0] == y1.inverse());
  CHECK(y[1] == y1.pow(2) * y2);
  CHECK(y[2] == y3);
}

TEST_CASE("errors") {
  Seed f({{0, 1}, {-1, 0}}, Semifield::Universal, {2});
  CHECK(f.is_frozen(2));
  CHECK(code_of([&] { f.mutate(2); }) == ErrorCode::FrozenDirection);
  CHECK(code_of([&] { f.mutate(3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { f.mutate(0); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { Seed({{0, 1}, {1, 0}}, Semifield::Universal); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Seed({{0, 1}}, Semifield::Universal); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Seed::preset("S99"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { semifield_from_name("boolean"); }) == ErrorCode::InvalidArgument);
  auto j = nlohmann::json::parse(R"({"n": 2, "entries": [[0, 1], [-1, 0]], "frozen": [3]})");
  CHECK_THROWS_AS(Seed::from_json(j), Error);
  auto ok = nlohmann::json::parse(R"({"entries": [[0, 3], [-3, 0]]})");
  CHECK(Seed::from_json(ok).rank() == 2);
  CHECK_THROWS_AS(Seed::from_json(nlohmann::json::parse(R"({"n": 3, "entries": [[0, 3], [-3, 0]]})")), Error);
}

TEST_CASE("involutivity and skew symmetry on random seeds (property, fixed seed)") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 3;
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m[i][j] = entry(rng);
        m[j][i] = -m[i][j];
      }
    Semifield sf = trial % 2 ? Semifield::Tropical : Semifield::Trivial;
    Seed s(m, sf);
    for (int k = 1; k <= n; ++k) {
      CHECK(involutivity_check(s, k));
      CHECK(is_skew_symmetric(s.mutate(k).matrix()));
    }
  }
  Seed u = Seed::preset("S11");
  for (int k = 1; k <= 3; ++k) CHECK(involutivity_check(u, k));
}

TEST_CASE("Laurent phenomenon") {
  LaurentReport r = check_laurent_phenomenon(Seed::preset("S02", Semifield::Trivial), 6);
  CHECK(r.violations == 0);
  CHECK(r.entries.size() > 2);
  for (const auto& e : r.entries) {
    CHECK(e.laurent);
    CHECK(e.integer_coefficients);
  }
  CHECK(check_laurent_phenomenon(Seed::preset("S11", Semifield::Trivial), 4).violations == 0);
  CHECK(check_laurent_phenomenon(Seed::preset("S02"), 3).violations == 0);
  nlohmann::json j = r.to_json();
  CHECK(j["violations"] == 0);
  CHECK(j["depth"] == 6);
}

TEST_CASE("rank-2 mutation graph is the Pascal diagram") {
  MutationGraph g = mutation_graph(Seed::preset("S02"), 4);
  BratteliDiagram d = bratteli_from_mutations(g);
  CHECK(d.level_sizes() == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(bratteli_isomorphic(d, pascal_diagram(5)));
  CHECK_FALSE(bratteli_isomorphic(d, pascal_diagram(4)));
  std::string dot = d.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("\"v0_0\" -> ") != std::string::npos);
  CHECK(d.to_json()["levels"].size() == 5);
}

TEST_CASE("rank-3 torus seed branches 1 -> 3 -> 7") {
  BratteliDiagram d = bratteli_from_mutations(mutation_graph(Seed::preset("S11"), 2));
  CHECK(d.level_sizes() == std::vector<std::size_t>{1, 3, 7});
  BratteliDiagram ref = three_fold_reference();
  CHECK(ref.level_sizes() == std::vector<std::size_t>{1, 3, 7});
  // Involutivity sends every level-1 seed back to the root's class, so one
  // level-2 class has in-degree 3; the reference has no such vertex.
  int max_in = 0;
  for (std::size_t j = 0; j < d.levels[2].size(); ++j) {
    int in = 0;
    for (const auto& [ij, mult] : d.edges[1])
      if (ij.second == static_cast<int>(j)) in += mult;
    max_in = std::max(max_in, in);
  }
  CHECK(max_in == 3);
  CHECK_FALSE(bratteli_isomorphic(d, ref));
}

TEST_CASE("canonical keys identify relabelled seeds") {
  Seed s = Seed::preset("S02", Semifield::Trivial);
  CHECK(s.canonical_key() == s.mutate(1).mutate(1).canonical_key());
  CHECK(s.key({0, 1}) != s.key({1, 0}));
  CHECK(s.describe().find("x1") != std::string::npos);
  CHECK(s.to_json()["entries"] == nlohmann::json::parse("[[0,2],[-2,0]]"));
  Seed f({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, Semifield::Trivial, {3});
  CHECK(Seed::from_json(f.to_json(), Semifield::Trivial) == f);
}
