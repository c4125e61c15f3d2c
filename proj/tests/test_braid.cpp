#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ck/braid.hpp"
#include "ck/errors.hpp"

using namespace ck;

namespace {

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

TEST_CASE("grammar") {
  BraidWord a = parse_braid("s1^3 s2^-1");
  CHECK(a.strands() == 3);
  CHECK(a.letters() == std::vector<int>{1, 1, 1, -2});
  CHECK(parse_braid("1 -2 1").letters() == std::vector<int>{1, -2, 1});
  CHECK(parse_braid("-1^2").letters() == std::vector<int>{-1, -1});
  CHECK(parse_braid("s2^-2").letters() == std::vector<int>{-2, -2});
  CHECK(parse_braid("s1^0").empty());
  BraidWord e = parse_braid("");
  CHECK(e.empty());
  CHECK(e.strands() == 1);
  CHECK(parse_braid("", 3).strands() == 3);
  CHECK(parse_braid("s1", 4).strands() == 4);
}

TEST_CASE("grammar errors") {
  CHECK(code_of([] { parse_braid("s0"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_braid("0"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_braid("s"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_braid("s1^"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_braid("x1"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_braid("s3", 3); }) == ErrorCode::Index);
  try {
    parse_braid("s1 s2 q");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("printing groups powers") {
  CHECK(parse_braid("1 1 1 -2").to_string() == "s1^3 s2^-1");
  CHECK(parse_braid("s1 s2 s1").to_string() == "s1 s2 s1");
  CHECK(parse_braid("").to_string() == "");
  nlohmann::json j = parse_braid("s1^-2").to_json();
  CHECK(j["strands"] == 2);
  CHECK(j["letters"] == nlohmann::json::array({-1, -1}));
}

TEST_CASE("free reduction") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == std::vector<int>{3});
  CHECK(free_reduce({1, -1, 1}) == std::vector<int>{1});
  CHECK(free_reduced(parse_braid("s1 s2 s2^-1 s1^-1", 3)).empty());
}

TEST_CASE("closure components from the permutation") {
  CHECK(closure_components(parse_braid("s1^3")) == 1);
  CHECK(closure_components(parse_braid("s1^2")) == 2);
  CHECK(closure_components(parse_braid("", 3)) == 3);
  CHECK(closure_components(parse_braid("s1 s2")) == 1);
  CHECK(closure_components(parse_braid("s1 s3", 4)) == 2);
  CHECK(braid_permutation(parse_braid("s1", 3)) == std::vector<int>{1, 0, 2});
}

TEST_CASE("Markov moves and writhe") {
  BraidWord b = parse_braid("s1 s2^-1", 3), g = parse_braid("s2", 3);
  BraidWord c = conjugate(b, g);
  CHECK(c.letters() == std::vector<int>{2, 1, -2, -2});
  CHECK(code_of([&] { conjugate(b, parse_braid("s1", 2)); }) == ErrorCode::StrandMismatch);
  BraidWord s = stabilize(b, -1);
  CHECK(s.strands() == 4);
  CHECK(s.letters().back() == -3);
  CHECK(writhe(b) == 0);
  CHECK(writhe(s) == -1);
  CHECK(mirror(b).letters() == std::vector<int>{-1, 2});
  CHECK(inverse(b).letters() == std::vector<int>{2, -1});
  CHECK(concat(b, g).letters() == std::vector<int>{1, -2, 2});
}
