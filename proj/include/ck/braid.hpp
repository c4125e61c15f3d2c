#pragma once

// Braid words on k strands. Letter +i is the generator s_i, -i its inverse.
//
// Crossing picture, used by every invariant engine: in s_i the strand moving
// from position i to i+1 (left to right, reading downwards) passes over; in
// s_i^-1 the strand moving from i+1 to i passes over. Positions are 1-based.
//
// Text grammar:
//   word := term (WS term)*
//   term := ('s' INT | SINT) ('^' SINT)?
//   SINT := '-'? INT
// so "s1^3 s2^-1", "1 -2 1" and "s1 s1 s1" are all accepted. The empty
// string is the empty word.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ck {

class BraidWord {
 public:
  BraidWord() = default;
  // Throws IndexError when a letter is zero or |letter| >= strands.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Canonical text, runs grouped into powers: "s1^3 s2^-1"; "" for the empty word.
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// Parses the grammar above. Without `strands` the count is 1 + the largest
// generator index (1 for the empty word). Throws SyntaxError or IndexError.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

// Cancels adjacent s_i s_i^-1 pairs until none remain.
std::vector<int> free_reduce(const std::vector<int>& letters);
BraidWord free_reduced(const BraidWord& b);

// Permutation of positions (0-based): perm[p] is the bottom position of the
// strand starting at top position p.
std::vector<int> braid_permutation(const BraidWord& b);
int closure_components(const BraidWord& b);

// a followed by b; the result has the larger strand count.
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);
BraidWord mirror(const BraidWord& b);
// g b g^-1, freely reduced. Throws StrandMismatch.
BraidWord conjugate(const BraidWord& b, const BraidWord& g);
// b s_k^sign in B_{k+1}; sign must be +1 or -1.
BraidWord stabilize(const BraidWord& b, int sign);
int writhe(const BraidWord& b);

}  // namespace ck
