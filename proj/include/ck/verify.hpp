#pragma once

// Property suites behind `ck verify`. Every suite is deterministic: random
// samples come from fixed seeds.

#include <random>
#include <string>
#include <vector>

#include "ck/braid.hpp"
#include "ck/laurent.hpp"

namespace ck {

struct VerifyLine {
  std::string suite;
  std::string property;
  bool pass = false;
  std::size_t checks = 0;
  std::string detail;

  // "PASS catalan/sizes (6 checks)" plus ": detail" when present.
  std::string to_string() const;
};

// all | laurent | catalan | braid-relations | markov | oracle | cluster |
// bridge-identities. Throws InvalidArgument for an unknown suite.
std::vector<VerifyLine> run_verify(const std::string& suite);
const std::vector<std::string>& verify_suites();

// Random helpers shared with the test programs.
BraidWord random_braid(std::mt19937& rng, int strands, int min_len, int max_len);
LaurentPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms,
                        int max_exp, int max_coeff);

// Every freely reduced word of length <= max_len on `strands` strands.
std::vector<BraidWord> all_reduced_words(int strands, int max_len);

}  // namespace ck
