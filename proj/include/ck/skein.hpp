#pragma once

// Link invariants of braid closures.
//
// Conventions (one table, used by every engine):
//
//   letter   crossing   Jones skein role   HOMFLY skein role
//   +i       s_i        L+                 L+
//   -i       s_i^-1     L-                 L-
//
//   Jones:   t^-1 V(L-) - t V(L+) = (t^1/2 - t^-1/2) V(L0),  V(unknot) = 1
//   HOMFLY:  l P(L+) + l^-1 P(L-) + m P(L0) = 0,             P(unknot) = 1
//   bracket: <s_i> = A <id> + A^-1 <e_i>,  loop value d = -A^2 - A^-2
//   Jones from the bracket: (-A)^(-3 writhe) <b>, then A = t^(1/4)
//
// With these choices s1^3 has Jones polynomial -t^-4 + t^-3 + t^-1.
//
// Jones values are LaurentPoly in the variable "s" with s^2 = t; use
// jones_to_string and friends to print them in t with half-integer powers.

#include <string>

#include "ck/braid.hpp"
#include "ck/laurent.hpp"
#include "json.hpp"

namespace ck {

constexpr int kDefaultCrossingLimit = 16;

// Skein resolution: alpha P(L+) + beta P(L-) + gamma P(L0) = 0 and an
// r-component unlink is worth unlink^(r-1).
struct SkeinRelation {
  std::string name;
  LaurentPoly alpha, beta, gamma, unlink;

  static const SkeinRelation& jones();
  static const SkeinRelation& homfly();
};

// All engines throw LimitExceeded when the word has more than `limit` letters.
LaurentPoly skein_evaluate(const SkeinRelation& rel, const BraidWord& b,
                           int limit = kDefaultCrossingLimit);
LaurentPoly jones_skein(const BraidWord& b, int limit = kDefaultCrossingLimit);
LaurentPoly homfly_skein(const BraidWord& b, int limit = kDefaultCrossingLimit);

// Bracket of the closure in the variable "A", before writhe normalization.
LaurentPoly kauffman_bracket(const BraidWord& b, int limit = kDefaultCrossingLimit);
// (-A)^(-3 w) * bracket with A^2 -> s. Throws NonHalfIntegerPower when an odd
// power of A survives.
LaurentPoly normalize_bracket(const LaurentPoly& bracket, int writhe);
LaurentPoly jones_via_bracket(const BraidWord& b, int limit = kDefaultCrossingLimit);
// Bracket computed as d^(n-1) tr(rho(b)) in the Temperley-Lieb representation.
LaurentPoly jones_via_trace(const BraidWord& b, int limit = kDefaultCrossingLimit);

// Is the closure diagram descending from the standard base points? Such a
// closure is an unlink. Exposed for tests.
bool is_descending(const BraidWord& b);

// s -> s^-1
LaurentPoly jones_mirror(const LaurentPoly& v);

// Jones value printed in t: "-t^-4 + t^-3 + t^-1", "-t^-5/2 - t^-1/2".
std::string jones_to_string(const LaurentPoly& v);
std::string jones_to_latex(const LaurentPoly& v);
nlohmann::json jones_to_json(const LaurentPoly& v);

// Clears the memo tables (tests use this to time cold runs).
void clear_skein_memo();

}  // namespace ck
