#include "ck/braid.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>

#include "ck/errors.hpp"

namespace ck {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::Index, "a braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0) throw Error(ErrorCode::Index, "generator index 0 is not allowed");
    if (std::abs(l) >= strands_)
      throw Error(ErrorCode::Index, "generator s" + std::to_string(std::abs(l)) +
                                        " needs more than " + std::to_string(strands_) +
                                        " strands");
  }
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    int power = static_cast<int>(j - i) * (letters_[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(std::abs(letters_[i]));
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

nlohmann::json BraidWord::to_json() const {
  return {{"strands", strands_}, {"letters", letters_}, {"text", to_string()}};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<int> parse() {
    std::vector<int> letters;
    skip_ws();
    while (pos_ < text_.size()) {
      parse_term(letters);
      std::size_t before = pos_;
      skip_ws();
      if (pos_ < text_.size() && pos_ == before)
        throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    return letters;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long parse_int() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > INT_MAX / 4) throw SyntaxError(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected a number");
    return v;
  }

  long parse_sint() {
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long v = parse_int();
    return neg ? -v : v;
  }

  void parse_term(std::vector<int>& letters) {
    std::size_t start = pos_;
    long index;
    if (text_[pos_] == 's' || text_[pos_] == 'S') {
      ++pos_;
      index = parse_int();
    } else if (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = parse_sint();
    } else {
      throw SyntaxError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
    }
    if (index == 0) throw SyntaxError(start, "generator index 0 is not allowed");
    long power = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      power = parse_sint();
    }
    if (std::labs(power) > 100000) throw SyntaxError(start, "exponent too large");
    int letter = static_cast<int>(power < 0 ? -index : index);
    for (long k = 0; k < std::labs(power); ++k) letters.push_back(letter);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::vector<int> letters = Parser(text).parse();
  int max_index = 0;
  for (int l : letters) max_index = std::max(max_index, std::abs(l));
  int k = strands.value_or(max_index + 1);
  if (k < 1) throw Error(ErrorCode::Index, "strand count must be at least 1");
  if (max_index >= k)
    throw Error(ErrorCode::Index, "generator s" + std::to_string(max_index) + " exceeds " +
                                      std::to_string(k) + " strands");
  return BraidWord(k, std::move(letters));
}

std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

BraidWord free_reduced(const BraidWord& b) { return BraidWord(b.strands(), free_reduce(b.letters())); }

std::vector<int> braid_permutation(const BraidWord& b) {
  // at[q] = starting position of the strand currently at position q
  std::vector<int> at(b.strands());
  for (int q = 0; q < b.strands(); ++q) at[q] = q;
  for (int l : b.letters()) {
    int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(b.strands());
  for (int q = 0; q < b.strands(); ++q) perm[at[q]] = q;
  return perm;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t p = 0; p < perm.size(); ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int q = static_cast<int>(p); !seen[q]; q = perm[q]) seen[q] = true;
  }
  return cycles;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(std::max(a.strands(), b.strands()), std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters().rbegin(), b.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord& b) {
  std::vector<int> letters = b.letters();
  for (int& l : letters) l = -l;
  return BraidWord(b.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) {
  if (b.strands() != g.strands())
    throw Error(ErrorCode::StrandMismatch, "conjugator has " + std::to_string(g.strands()) +
                                               " strands, braid has " +
                                               std::to_string(b.strands()));
  return free_reduced(concat(concat(g, b), inverse(g)));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters();
  letters.push_back(sign * b.strands());
  return BraidWord(b.strands() + 1, std::move(letters));
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters()) w += l > 0 ? 1 : -1;
  return w;
}

}  // namespace ck
